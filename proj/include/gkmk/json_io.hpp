// JSON formats for graphs, classes and index vectors.
//
// Graph:  { "rank": n, "vertices": [{"name": s}, ...],
//           "edges": [{"from": s, "to": s, "label_at_from": [ints]}, ...],
//           "xi": [ints], "vertex_circles": {name: [ints]} }
// Class:  { vertex-name: [[exponent-vector, coefficient-string], ...] }
//
// Exponent vectors are little-endian in the declared ambient basis;
// coefficients travel as decimal strings so precision is never silently
// lost.  nlohmann::json orders object keys, which keeps every emitted file
// byte-deterministic.
#pragma once

#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "gkmk/coh.hpp"
#include "gkmk/gkm.hpp"

namespace gkmk {

using nlohmann::json;

inline json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(errc::parse_error, "cannot open " + path);
  json j;
  try {
    in >> j;
  } catch (const std::exception& e) {
    fail(errc::parse_error, std::string("invalid JSON in ") + path + ": " + e.what());
  }
  return j;
}

inline void save_json_file(const std::string& path, const json& j) {
  std::ofstream out(path);
  if (!out) fail(errc::parse_error, "cannot write " + path);
  out << j.dump(2) << "\n";
}

inline json intvector_to_json(const IntVector& v) {
  json a = json::array();
  for (const Int& x : v.v) a.push_back(to_ll(x));
  return a;
}

inline IntVector intvector_from_json(const json& a, const char* what) {
  if (!a.is_array()) fail(errc::parse_error, std::string(what) + ": expected an array");
  IntVector v(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!a[i].is_number_integer()) fail(errc::parse_error, std::string(what) + ": expected integers");
    v[i] = Int(a[i].get<long long>());
  }
  return v;
}

// ------------------------------------------------------------------- graph

inline json graph_to_json(const GkmGraph& g) {
  json j;
  j["rank"] = g.rank;
  j["vertices"] = json::array();
  for (const auto& v : g.vertices) j["vertices"].push_back({{"name", v}});
  j["edges"] = json::array();
  for (const auto& e : g.edges)
    j["edges"].push_back({{"from", e.from},
                          {"to", e.to},
                          {"label_at_from", intvector_to_json(e.label_at_from)}});
  if (!g.xi.v.empty()) j["xi"] = intvector_to_json(g.xi);
  if (!g.vertex_circles.empty()) {
    json vc;
    for (const auto& [name, circ] : g.vertex_circles) vc[name] = intvector_to_json(circ);
    j["vertex_circles"] = vc;
  }
  return j;
}

inline GkmGraph graph_from_json(const json& j) {
  GkmGraph g;
  if (!j.is_object() || !j.contains("rank") || !j.contains("vertices") || !j.contains("edges"))
    fail(errc::parse_error, "graph file needs rank, vertices and edges");
  if (!j["rank"].is_number_unsigned() && !j["rank"].is_number_integer())
    fail(errc::parse_error, "rank must be an integer");
  g.rank = j["rank"].get<std::size_t>();
  for (const auto& v : j["vertices"]) {
    if (!v.is_object() || !v.contains("name") || !v["name"].is_string())
      fail(errc::parse_error, "vertex entries need a name");
    g.vertices.push_back(v["name"].get<std::string>());
  }
  for (const auto& e : j["edges"]) {
    if (!e.is_object() || !e.contains("from") || !e.contains("to") || !e.contains("label_at_from"))
      fail(errc::parse_error, "edge entries need from, to, label_at_from");
    GkmEdge ed;
    ed.from = e["from"].get<std::string>();
    ed.to = e["to"].get<std::string>();
    ed.label_at_from = intvector_from_json(e["label_at_from"], "edge label");
    g.edges.push_back(std::move(ed));
  }
  if (j.contains("xi")) g.xi = intvector_from_json(j["xi"], "xi");
  if (j.contains("vertex_circles")) {
    if (!j["vertex_circles"].is_object()) fail(errc::parse_error, "vertex_circles must be an object");
    for (const auto& [name, circ] : j["vertex_circles"].items())
      g.vertex_circles.emplace(name, intvector_from_json(circ, "vertex circle"));
  }
  return g;
}

// ----------------------------------------------------------------- classes

template <class C>
json charelem_to_json(const CharElemT<C>& f) {
  json a = json::array();
  for (const auto& [e, c] : f.terms()) a.push_back({intvector_to_json(e), coeff_str(c)});
  return a;
}

inline Int int_from_string(const std::string& s, const char* what) {
  try {
    return Int(s);
  } catch (const std::exception&) {
    fail(errc::parse_error, std::string(what) + ": bad integer '" + s + "'");
  }
}

inline CharElem charelem_from_json(const json& a, std::size_t rank) {
  if (!a.is_array()) fail(errc::parse_error, "class value must be a list of [exponent, coeff]");
  CharElem f(rank);
  for (const auto& t : a) {
    if (!t.is_array() || t.size() != 2 || !t[1].is_string())
      fail(errc::parse_error, "class term must be [exponent-vector, coefficient-string]");
    IntVector e = intvector_from_json(t[0], "exponent");
    if (e.size() != rank) fail(errc::parse_error, "exponent rank mismatch");
    f.add_term(e, int_from_string(t[1].get<std::string>(), "coefficient"));
  }
  return f;
}

inline CohElem cohelem_from_json(const json& a, std::size_t rank) {
  if (!a.is_array()) fail(errc::parse_error, "class value must be a list of [exponent, coeff]");
  CohElem f(rank);
  for (const auto& t : a) {
    if (!t.is_array() || t.size() != 2 || !t[1].is_string())
      fail(errc::parse_error, "class term must be [exponent-vector, coefficient-string]");
    IntVector e = intvector_from_json(t[0], "exponent");
    if (e.size() != rank) fail(errc::parse_error, "exponent rank mismatch");
    try {
      f.add_term(e, Rat(t[1].get<std::string>()));
    } catch (const std::exception&) {
      fail(errc::parse_error, "bad rational coefficient '" + t[1].get<std::string>() + "'");
    }
  }
  return f;
}

inline json kclass_to_json(const KClass& k) {
  json j;
  for (const auto& [v, f] : k) j[v] = charelem_to_json(f);
  return j;
}

inline KClass kclass_from_json(const json& j, const GkmGraph& g) {
  if (!j.is_object()) fail(errc::parse_error, "class file must map vertices to term lists");
  KClass k;
  for (const auto& v : g.vertices) {
    if (!j.contains(v)) fail(errc::parse_error, "class file is missing vertex " + v);
    k.emplace(v, charelem_from_json(j[v], g.rank));
  }
  return k;
}

inline CohClass cohclass_from_json(const json& j, const GkmGraph& g) {
  if (!j.is_object()) fail(errc::parse_error, "class file must map vertices to term lists");
  CohClass k;
  for (const auto& v : g.vertices) {
    if (!j.contains(v)) fail(errc::parse_error, "class file is missing vertex " + v);
    k.emplace(v, cohelem_from_json(j[v], g.rank));
  }
  return k;
}

template <class C>
json cohclass_to_json(const std::map<std::string, CharElemT<C>>& k) {
  json j;
  for (const auto& [v, f] : k) j[v] = charelem_to_json(f);
  return j;
}

}  // namespace gkmk
