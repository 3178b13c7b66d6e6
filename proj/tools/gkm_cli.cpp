// gkm: command-line surface for the GKM / equivariant K-theory toolkit.
//
// Subcommands: validate, orient, index, tau, basis, decompose, paths,
// cutindex, gen.  All output is deterministic: JSON objects are emitted
// with sorted keys, tables in vertex order.  Exit codes: 0 success,
// 1 domain failure, 2 I/O or parse failure.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "gkmk/canon.hpp"
#include "gkmk/coh.hpp"
#include "gkmk/cutspace.hpp"
#include "gkmk/json_io.hpp"

namespace {

using namespace gkmk;

struct CommonOpts {
  std::string graph_path;
  std::string class_path;
  std::string pipeline = "global-xi";
  std::string format = "json";
  std::string out;
  std::string xi_override;
  std::string vertex;
  std::string from, to;
  std::size_t cap = 1024;
};

IntVector parse_xi(const std::string& s) {
  IntVector v;
  std::string cur;
  std::vector<Int> xs;
  for (char c : s + ",") {
    if (c == ',') {
      if (cur.empty()) fail(errc::parse_error, "bad --xi value");
      xs.emplace_back(cur);
      cur.clear();
    } else if ((c >= '0' && c <= '9') || c == '-' || c == '+') {
      cur += c;
    } else {
      fail(errc::parse_error, "bad --xi value");
    }
  }
  return IntVector(std::move(xs));
}

GkmGraph load_graph(const CommonOpts& o) {
  GkmGraph g = graph_from_json(load_json_file(o.graph_path));
  if (!o.xi_override.empty()) g.xi = parse_xi(o.xi_override);
  return g;
}

Polarization make_pol(const GkmGraph& g, const CommonOpts& o) {
  if (g.xi.v.empty()) fail(errc::bad_parameters, "graph has no polarization; pass --xi");
  Polarization pol;
  pol.xi = g.xi;
  if (o.pipeline == "vertex-circles") {
    if (g.vertex_circles.empty())
      fail(errc::bad_parameters, "graph has no vertex circles for the vertex-circles pipeline");
    pol.vertex_xi = g.vertex_circles;
  } else if (o.pipeline == "cohomology") {
    // the cohomology pipeline honors vertex circles when the graph has them
    pol.vertex_xi = g.vertex_circles;
  } else if (o.pipeline != "global-xi") {
    fail(errc::bad_parameters, "unknown pipeline " + o.pipeline);
  }
  return pol;
}

void emit(const CommonOpts& o, const json& j, const std::string& table) {
  std::string text = o.format == "table" ? table : j.dump(2) + "\n";
  if (o.out.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(o.out);
    if (!f) fail(errc::parse_error, "cannot write " + o.out);
    f << text;
  }
}

template <class M>
std::string render_table(const M& m) {
  std::ostringstream os;
  for (const auto& [k, v] : m) os << k << "\t" << v.str() << "\n";
  return os.str();
}

json strings_json(const std::map<std::string, CharElem>& m) {
  json j;
  for (const auto& [k, v] : m) j[k] = v.str();
  return j;
}

json strings_json(const std::map<std::string, CohElem>& m) {
  json j;
  for (const auto& [k, v] : m) j[k] = v.str();
  return j;
}

int cmd_validate(const CommonOpts& o) {
  GkmGraph g = load_graph(o);
  ValidationReport rep = validate_graph(g);
  json j;
  j["vertices"] = g.vertices.size();
  j["edges"] = g.edges.size();
  if (rep.ok()) {
    j["valence"] = rep.valence;
    try {
      orient(g, make_pol(g, o));
      j["orientable"] = true;
    } catch (const error& e) {
      j["orientable"] = false;
      j["orientation_error"] = e.what();
    }
  }
  j["valid"] = rep.ok();
  j["violations"] = rep.issues;
  std::ostringstream tab;
  tab << (rep.ok() ? "valid" : "INVALID") << ": " << g.vertices.size() << " vertices, valence "
      << rep.valence << "\n";
  for (const auto& s : rep.issues) tab << "violation: " << s << "\n";
  emit(o, j, tab.str());
  if (!rep.ok() || j.contains("orientation_error")) return 1;
  return 0;
}

int cmd_orient(const CommonOpts& o) {
  GkmGraph g = load_graph(o);
  MorseOrientation mo = orient(g, make_pol(g, o));
  json j;
  j["order"] = mo.order;
  json desc;
  for (const auto& [v, ds] : mo.descending) {
    json dl = json::array();
    for (const auto& d : ds)
      dl.push_back({{"to", d.lower}, {"label", intvector_to_json(d.label)}, {"k", to_ll(d.k)}});
    desc[v] = dl;
  }
  j["descending"] = desc;
  std::ostringstream tab;
  for (const auto& v : mo.order) tab << v << "\n";
  emit(o, j, tab.str());
  return 0;
}

int cmd_index(const CommonOpts& o) {
  GkmGraph g = load_graph(o);
  Polarization pol = make_pol(g, o);
  MorseOrientation mo = orient(g, pol);
  if (o.pipeline == "cohomology") {
    CohClass a = cohclass_from_json(load_json_file(o.class_path), g);
    auto cc = coh_check_class(g, a);
    if (!cc.ok) fail(errc::edge_condition_failure, "class fails the edge condition at " + cc.witness);
    CohIndexVector iv = coh_total_index(g, mo, a);
    emit(o, strings_json(iv), render_table(iv));
    return 0;
  }
  KClass a = kclass_from_json(load_json_file(o.class_path), g);
  auto cc = check_class(g, a);
  if (!cc.ok) fail(errc::edge_condition_failure, "class fails the edge condition at " + cc.witness);
  IndexVector iv = total_index(g, mo, a);
  emit(o, strings_json(iv), render_table(iv));
  return 0;
}

int cmd_tau(const CommonOpts& o) {
  GkmGraph g = load_graph(o);
  if (o.vertex.empty()) fail(errc::bad_parameters, "tau needs --vertex");
  MorseOrientation mo = orient(g, make_pol(g, o));
  if (o.pipeline == "cohomology") {
    CohClass t = coh_tau(g, mo, o.vertex);
    emit(o, cohclass_to_json(t), render_table(t));
    return 0;
  }
  KClass t = tau(g, mo, o.vertex);
  emit(o, kclass_to_json(t), render_table(t));
  return 0;
}

int cmd_basis(const CommonOpts& o) {
  GkmGraph g = load_graph(o);
  MorseOrientation mo = orient(g, make_pol(g, o));
  CanonicalBasis cb = basis(g, mo);
  json j;
  json taus;
  for (const auto& [p, t] : cb.taus) taus[p] = kclass_to_json(t);
  j["taus"] = taus;
  json dm;
  for (const auto& [p, t] : cb.taus) {
    IndexVector iv = total_index(g, mo, t);
    json row;
    for (const auto& [q, c] : iv) row[q] = c.str();
    dm[p] = row;
  }
  j["delta_matrix"] = dm;
  std::ostringstream tab;
  for (const auto& [p, t] : cb.taus) tab << "tau_" << p << ":\n" << render_table(t);
  emit(o, j, tab.str());
  return 0;
}

int cmd_decompose(const CommonOpts& o) {
  GkmGraph g = load_graph(o);
  MorseOrientation mo = orient(g, make_pol(g, o));
  if (o.pipeline == "cohomology")
    fail(errc::bad_parameters, "decompose runs on the K-theory pipelines");
  KClass a = kclass_from_json(load_json_file(o.class_path), g);
  CanonicalBasis cb = basis(g, mo);
  auto coeff = decompose(g, mo, cb, a);
  emit(o, strings_json(coeff), render_table(coeff));
  return 0;
}

int cmd_paths(const CommonOpts& o) {
  GkmGraph g = load_graph(o);
  MorseOrientation mo = orient(g, make_pol(g, o));
  if (o.from.empty() || o.to.empty()) fail(errc::bad_parameters, "paths needs --from and --to");
  auto ps = ascending_paths(g, mo, o.from, o.to, o.cap);
  json j = json::array();
  std::ostringstream tab;
  for (const auto& p : ps) {
    json steps = json::array();
    tab << o.from;
    for (const auto& st : p) {
      steps.push_back({{"from", st.src}, {"to", st.dst}});
      tab << " -> " << st.dst;
    }
    tab << "\n";
    j.push_back(steps);
  }
  emit(o, j, tab.str());
  return 0;
}

int cmd_cutindex(const CommonOpts& o) {
  GkmGraph g = load_graph(o);
  if (o.vertex.empty()) fail(errc::bad_parameters, "cutindex needs --vertex");
  if (o.pipeline == "cohomology")
    fail(errc::bad_parameters, "cutindex runs on the K-theory pipelines");
  MorseOrientation mo = orient(g, make_pol(g, o));
  KClass a = kclass_from_json(load_json_file(o.class_path), g);
  auto cc = check_class(g, a);
  if (!cc.ok) fail(errc::edge_condition_failure, "class fails the edge condition at " + cc.witness);
  CharElem idx = oracle_local_index(g, mo, a, o.vertex);
  json j;
  j["vertex"] = o.vertex;
  j["index"] = idx.str();
  emit(o, j, o.vertex + "\t" + idx.str() + "\n");
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"equivariant K-theory on GKM graphs"};
  app.require_subcommand(1);
  CommonOpts o;

  auto add_common = [&](CLI::App* c, bool needs_graph = true) {
    if (needs_graph) c->add_option("graph", o.graph_path, "graph JSON file")->required();
    c->add_option("--xi", o.xi_override, "override the polarization (comma-separated)");
    c->add_option("--pipeline", o.pipeline, "global-xi | vertex-circles | cohomology");
    c->add_option("--format", o.format, "json | table");
    c->add_option("--out", o.out, "write output to a file");
  };

  auto* validate = app.add_subcommand("validate", "check the GKM axioms");
  add_common(validate);
  auto* orient_c = app.add_subcommand("orient", "Morse orientation and topological order");
  add_common(orient_c);
  auto* index = app.add_subcommand("index", "total index of a class");
  add_common(index);
  index->add_option("--class", o.class_path, "class JSON file")->required();
  auto* tau_c = app.add_subcommand("tau", "canonical basis class of a vertex");
  add_common(tau_c);
  tau_c->add_option("--vertex", o.vertex, "vertex name")->required();
  auto* basis_c = app.add_subcommand("basis", "full canonical basis and delta matrix");
  add_common(basis_c);
  auto* decompose_c = app.add_subcommand("decompose", "coefficients in the canonical basis");
  add_common(decompose_c);
  decompose_c->add_option("--class", o.class_path, "class JSON file")->required();
  auto* paths_c = app.add_subcommand("paths", "ascending paths between two vertices");
  add_common(paths_c);
  paths_c->add_option("--from", o.from, "start vertex")->required();
  paths_c->add_option("--to", o.to, "end vertex")->required();
  paths_c->add_option("--cap", o.cap, "maximum number of paths");
  auto* cutindex_c = app.add_subcommand("cutindex", "localization index on the cut model");
  add_common(cutindex_c);
  cutindex_c->add_option("--class", o.class_path, "class JSON file")->required();
  cutindex_c->add_option("--vertex", o.vertex, "vertex name")->required();

  auto* gen = app.add_subcommand("gen", "generate a model graph");
  std::string model;
  std::vector<std::size_t> params;
  gen->add_option("model", model, "cpn | grassmannian")->required();
  gen->add_option("params", params, "cpn M | grassmannian K N")->required();
  gen->add_option("--out", o.out, "output file");

  CLI11_PARSE(app, argc, argv);

  try {
    if (validate->parsed()) return cmd_validate(o);
    if (orient_c->parsed()) return cmd_orient(o);
    if (index->parsed()) return cmd_index(o);
    if (tau_c->parsed()) return cmd_tau(o);
    if (basis_c->parsed()) return cmd_basis(o);
    if (decompose_c->parsed()) return cmd_decompose(o);
    if (paths_c->parsed()) return cmd_paths(o);
    if (cutindex_c->parsed()) return cmd_cutindex(o);
    if (gen->parsed()) {
      GkmGraph g;
      std::string def;
      if (model == "cpn") {
        if (params.size() != 1) fail(errc::bad_parameters, "gen cpn needs one parameter");
        g = gen_cpn(params[0]);
        def = "cp" + std::to_string(params[0]) + ".json";
      } else if (model == "grassmannian") {
        if (params.size() != 2) fail(errc::bad_parameters, "gen grassmannian needs two parameters");
        g = gen_grassmannian(params[0], params[1]);
        def = "gr" + std::to_string(params[0]) + std::to_string(params[1]) + ".json";
      } else {
        fail(errc::bad_parameters, "unknown model " + model);
      }
      std::string path = o.out.empty() ? def : o.out;
      save_json_file(path, graph_to_json(g));
      std::cout << path << "\n";
      return 0;
    }
  } catch (const gkmk::error& e) {
    nlohmann::json j;
    j["error"] = gkmk::errc_name(e.code());
    j["detail"] = e.detail();
    std::cout << j.dump() << "\n";
    return e.exit_status();
  } catch (const std::exception& e) {
    nlohmann::json j;
    j["error"] = "Internal";
    j["detail"] = e.what();
    std::cout << j.dump() << "\n";
    return 1;
  }
  return 0;
}
