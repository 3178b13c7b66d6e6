// GKM graphs: labeled d-valent graphs with the axial labeling, Morse
// orientation by a polarization, the class membership test of the edge
// condition, ascending-path enumeration, and the standard generators
// (projective spaces and Grassmannian Johnson graphs).
#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "gkmk/charelem.hpp"

namespace gkmk {

struct GkmEdge {
  std::string from, to;
  IntVector label_at_from;  // the label at `to` is its negative
};

struct GkmGraph {
  std::size_t rank = 0;
  std::vector<std::string> vertices;
  std::vector<GkmEdge> edges;
  IntVector xi;                                     // suggested polarization (may be empty)
  std::map<std::string, IntVector> vertex_circles;  // optional per-vertex circles
  std::vector<IntVector> annihilators;              // weight-sublattice constraint, if any

  bool has_vertex(const std::string& v) const {
    return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
  }

  IntVector label_at(std::size_t e, const std::string& v) const {
    if (edges[e].from == v) return edges[e].label_at_from;
    return -edges[e].label_at_from;
  }
  const std::string& other_end(std::size_t e, const std::string& v) const {
    return edges[e].from == v ? edges[e].to : edges[e].from;
  }

  // indices of edges incident to v
  std::vector<std::size_t> incident(const std::string& v) const {
    std::vector<std::size_t> r;
    for (std::size_t e = 0; e < edges.size(); ++e)
      if (edges[e].from == v || edges[e].to == v) r.push_back(e);
    return r;
  }
};

struct ValidationReport {
  std::vector<std::string> issues;
  std::size_t valence = 0;
  bool ok() const { return issues.empty(); }
};

inline ValidationReport validate_graph(const GkmGraph& g) {
  ValidationReport rep;
  std::set<std::string> names(g.vertices.begin(), g.vertices.end());
  if (names.size() != g.vertices.size()) rep.issues.push_back("DuplicateVertexName");
  for (const auto& v : g.vertices)
    if (v.empty()) rep.issues.push_back("EmptyVertexName");

  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    const auto& ed = g.edges[e];
    if (!names.count(ed.from) || !names.count(ed.to))
      rep.issues.push_back("DanglingEndpoint: edge " + std::to_string(e));
    if (ed.from == ed.to) rep.issues.push_back("SelfLoop: edge " + std::to_string(e));
    if (ed.label_at_from.size() != g.rank)
      rep.issues.push_back("LabelRankMismatch: edge " + std::to_string(e));
    else if (ed.label_at_from.is_zero())
      rep.issues.push_back("ZeroLabel: edge " + std::to_string(e));
    for (const auto& ann : g.annihilators)
      if (ed.label_at_from.size() == g.rank && dot(ann, ed.label_at_from) != 0)
        rep.issues.push_back("SublatticeViolation: edge " + std::to_string(e));
  }
  if (!rep.issues.empty()) return rep;

  bool first = true;
  for (const auto& v : g.vertices) {
    auto inc = g.incident(v);
    if (first) {
      rep.valence = inc.size();
      first = false;
    } else if (inc.size() != rep.valence) {
      rep.issues.push_back("InconsistentValence: vertex " + v);
    }
    for (std::size_t i = 0; i < inc.size(); ++i)
      for (std::size_t j = i + 1; j < inc.size(); ++j)
        if (pairwise_dependent(g.label_at(inc[i], v), g.label_at(inc[j], v)))
          rep.issues.push_back("PairwiseDependence: vertex " + v);
  }
  return rep;
}

struct Polarization {
  IntVector xi;
  std::map<std::string, IntVector> vertex_xi;  // empty map: global pipeline

  const IntVector& effective(const std::string& v) const {
    auto it = vertex_xi.find(v);
    return it == vertex_xi.end() ? xi : it->second;
  }
};

struct DescendingEdge {
  std::size_t edge;
  std::string lower;  // the other endpoint
  IntVector label;    // label at the vertex (pairs negatively with xi)
  Int k;              // label(xi_eff)
};

struct MorseOrientation {
  Polarization pol;
  std::vector<std::string> order;  // linear extension of ascent, minimum first
  std::map<std::string, std::size_t> order_index;
  std::vector<bool> ascending_from_to;  // per edge
  std::map<std::string, std::vector<DescendingEdge>> descending;

  bool ascending(std::size_t e, const std::string& src, const GkmGraph& g) const {
    return g.edges[e].from == src ? ascending_from_to[e] : !ascending_from_to[e];
  }
};

inline MorseOrientation orient(const GkmGraph& g, const Polarization& pol) {
  {
    ValidationReport rep = validate_graph(g);
    if (!rep.ok()) fail(errc::validation_error, rep.issues.front());
  }
  if (pol.xi.size() != g.rank) fail(errc::bad_parameters, "polarization rank mismatch");
  MorseOrientation mo;
  mo.pol = pol;
  mo.ascending_from_to.resize(g.edges.size());
  for (std::size_t e = 0; e < g.edges.size(); ++e) {
    Int p = dot(g.edges[e].label_at_from, pol.xi);
    if (p == 0)
      fail(errc::genericity_violation,
           "edge " + g.edges[e].from + "-" + g.edges[e].to + " pairs to zero");
    mo.ascending_from_to[e] = p > 0;
  }

  // descending data with k from the effective polarization
  for (const auto& v : g.vertices) {
    std::vector<DescendingEdge> ds;
    for (std::size_t e : g.incident(v)) {
      bool asc = mo.ascending(e, v, g);
      if (asc) continue;
      DescendingEdge d;
      d.edge = e;
      d.lower = g.other_end(e, v);
      d.label = g.label_at(e, v);
      const IntVector& xe = pol.effective(v);
      if (xe.size() != g.rank) fail(errc::bad_parameters, "vertex circle rank mismatch");
      d.k = dot(d.label, xe);
      if (d.k >= 0)
        fail(errc::bad_vertex_circle,
             "descending label " + d.label.str() + " at " + v + " pairs to " + d.k.str());
      ds.push_back(std::move(d));
    }
    std::sort(ds.begin(), ds.end(),
              [](const DescendingEdge& a, const DescendingEdge& b) { return a.lower < b.lower; });
    mo.descending.emplace(v, std::move(ds));
  }

  // Kahn's algorithm on ascending reachability, names break ties
  std::map<std::string, std::size_t> indeg;
  for (const auto& v : g.vertices) indeg[v] = mo.descending.at(v).size();
  std::set<std::string> ready;
  for (const auto& [v, d] : indeg)
    if (d == 0) ready.insert(v);
  while (!ready.empty()) {
    std::string v = *ready.begin();
    ready.erase(ready.begin());
    mo.order_index.emplace(v, mo.order.size());
    mo.order.push_back(v);
    for (std::size_t e : g.incident(v)) {
      if (!mo.ascending(e, v, g)) continue;
      const std::string& w = g.other_end(e, v);
      if (--indeg.at(w) == 0) ready.insert(w);
    }
  }
  if (mo.order.size() != g.vertices.size())
    fail(errc::cyclic_ascent, "ascending reachability has a cycle");
  return mo;
}

// Euler factor of the stable directions: prod (1 - x^alpha) over the
// descending labels at p; the empty product is 1.
inline CharElem lambda_minus(const GkmGraph& g, const MorseOrientation& mo,
                             const std::string& p) {
  CharElem r = CharElem::one(g.rank);
  for (const auto& d : mo.descending.at(p))
    r *= CharElem::one(g.rank) - CharElem::monomial(g.rank, d.label);
  return r;
}

// ------------------------------------------------------------------ KClass

using KClass = std::map<std::string, CharElem>;

inline KClass kclass_constant(const GkmGraph& g, const CharElem& c) {
  KClass k;
  for (const auto& v : g.vertices) k.emplace(v, c);
  return k;
}

inline KClass kclass_zero(const GkmGraph& g) {
  return kclass_constant(g, CharElem::zero(g.rank));
}

struct ClassCheck {
  bool ok = true;
  std::string witness;  // first failing edge "from-to"
};

// Edge compatibility: chi_p - chi_q restricts to zero in R(G_e) for every
// edge, i.e. the difference lies in the ideal (x^{alpha_e} - 1).
inline ClassCheck check_class(const GkmGraph& g, const KClass& chi) {
  for (const auto& v : g.vertices)
    if (!chi.count(v)) fail(errc::bad_parameters, "class missing vertex " + v);
  for (const auto& ed : g.edges) {
    CharElem diff = chi.at(ed.from) - chi.at(ed.to);
    if (!divisible_mod_weight(diff, ed.label_at_from))
      return {false, ed.from + "-" + ed.to};
  }
  return {};
}

// ------------------------------------------------------------------- paths

struct PathStep {
  std::size_t edge;
  std::string src, dst;
};
using Path = std::vector<PathStep>;

// All ascending paths from p to q in deterministic order; the empty path is
// returned for p == q.  CapExceeded if more than `cap` paths exist.
inline std::vector<Path> ascending_paths(const GkmGraph& g, const MorseOrientation& mo,
                                         const std::string& p, const std::string& q,
                                         std::size_t cap) {
  if (cap == 0) fail(errc::bad_parameters, "path cap must be at least 1");
  std::vector<Path> found;
  Path cur;
  // deterministic DFS: successors sorted by (target name, edge index)
  auto successors = [&](const std::string& v) {
    std::vector<std::pair<std::string, std::size_t>> s;
    for (std::size_t e : g.incident(v))
      if (mo.ascending(e, v, g)) s.emplace_back(g.other_end(e, v), e);
    std::sort(s.begin(), s.end());
    return s;
  };
  std::function<void(const std::string&)> dfs = [&](const std::string& v) {
    if (v == q) {
      // ascent is acyclic, so no continuation returns to q
      if (found.size() >= cap) fail(errc::cap_exceeded, "more than " + std::to_string(cap) + " paths");
      found.push_back(cur);
      return;
    }
    for (const auto& [w, e] : successors(v)) {
      cur.push_back({e, v, w});
      dfs(w);
      cur.pop_back();
    }
  };
  dfs(p);
  return found;
}

// -------------------------------------------------------------- generators

// The standard projective space CP^m: rank m, complete graph on m+1
// vertices P0..Pm; edges P0-Pi carry eps_i at P0 and Pi-Pj (i<j) carry
// eps_j - eps_i at Pi.
inline GkmGraph gen_cpn(std::size_t m) {
  if (m < 1) fail(errc::bad_parameters, "cpn needs m >= 1");
  GkmGraph g;
  g.rank = m;
  for (std::size_t i = 0; i <= m; ++i) g.vertices.push_back("P" + std::to_string(i));
  auto eps = [&](std::size_t i) {
    IntVector e(m);
    e[i - 1] = 1;
    return e;
  };
  for (std::size_t i = 1; i <= m; ++i) g.edges.push_back({"P0", "P" + std::to_string(i), eps(i)});
  for (std::size_t i = 1; i <= m; ++i)
    for (std::size_t j = i + 1; j <= m; ++j)
      g.edges.push_back({"P" + std::to_string(i), "P" + std::to_string(j), eps(j) - eps(i)});
  g.xi = IntVector(m);
  for (std::size_t i = 0; i < m; ++i) g.xi[i] = Int(i + 1);
  return g;
}

inline std::string subset_name(const std::vector<std::size_t>& idx, std::size_t n) {
  std::string s;
  for (std::size_t i = 0; i < idx.size(); ++i) {
    if (n > 9 && i) s += "_";
    s += std::to_string(idx[i]);
  }
  return s;
}

// Johnson graph of Gr(k,n): vertices are k-subsets of {1..n}; I ~ J when
// |I cap J| = k-1, labeled at I by e_i - e_j (i in J\I, j in I\J).  Weights
// live in the sum-zero sublattice; each vertex carries the circle 1_I,
// which pairs to -1 with every label at I.
inline GkmGraph gen_grassmannian(std::size_t k, std::size_t n) {
  if (k < 1 || k >= n) fail(errc::bad_parameters, "grassmannian needs 1 <= k < n");
  GkmGraph g;
  g.rank = n;

  std::vector<std::vector<std::size_t>> subsets;
  std::vector<std::size_t> cur;
  std::function<void(std::size_t)> rec = [&](std::size_t start) {
    if (cur.size() == k) {
      subsets.push_back(cur);
      return;
    }
    for (std::size_t i = start; i <= n; ++i) {
      cur.push_back(i);
      rec(i + 1);
      cur.pop_back();
    }
  };
  rec(1);

  for (const auto& s : subsets) {
    std::string name = subset_name(s, n);
    g.vertices.push_back(name);
    IntVector circle(n);
    for (std::size_t i : s) circle[i - 1] = 1;
    g.vertex_circles.emplace(name, circle);
  }

  auto e_vec = [&](std::size_t i, std::size_t j) {  // e_i - e_j
    IntVector v(n);
    v[i - 1] = 1;
    v[j - 1] = -1;
    return v;
  };
  for (std::size_t a = 0; a < subsets.size(); ++a)
    for (std::size_t b = a + 1; b < subsets.size(); ++b) {
      std::vector<std::size_t> in_a, in_b;
      std::set_difference(subsets[a].begin(), subsets[a].end(), subsets[b].begin(),
                          subsets[b].end(), std::back_inserter(in_a));
      std::set_difference(subsets[b].begin(), subsets[b].end(), subsets[a].begin(),
                          subsets[a].end(), std::back_inserter(in_b));
      if (in_a.size() != 1) continue;
      // label at I: e_i - e_j with i in J\I, j in I\J
      g.edges.push_back({subset_name(subsets[a], n), subset_name(subsets[b], n),
                         e_vec(in_b[0], in_a[0])});
    }

  g.xi = IntVector(n);
  for (std::size_t i = 0; i < n; ++i) g.xi[i] = Int(i);
  IntVector ones(n);
  for (std::size_t i = 0; i < n; ++i) ones[i] = 1;
  g.annihilators.push_back(ones);
  return g;
}

}  // namespace gkmk
