// grakit command-line front end.
//
//   grakit COMMAND --graph G [--graph G2 ...] [--format json|csv|dot|text] [--cap N] [--jobs N]
//
// G is a family shorthand (path:4, cycle:5, complete:3, star:6), an inline JSON
// graph {"vertices":[...],"edges":[[a,b],...]}, or a path to a file holding one.
// One report per graph, in input order. Exit 0 ok, 1 input error, 2 failed identity.
#include <atomic>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include <grakit/koszul.hpp>
#include <grakit/polycomb.hpp>
#include <grakit/reconnectad.hpp>

using json = nlohmann::ordered_json;
using namespace grakit;

namespace {

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Named {
  Graph graph;
  json encoding;  // family shorthand string or canonical JSON object
};

json canonical_json(const Graph& g) {
  json e = json::array();
  for (auto [a, b] : g.edges()) e.push_back({a, b});
  return {{"vertices", labels_of(g.vertices())}, {"edges", e}};
}

Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices")) throw InputError("graph JSON needs a \"vertices\" list");
  std::vector<int> vs = j.at("vertices").get<std::vector<int>>();
  std::vector<std::pair<int, int>> es;
  if (j.contains("edges"))
    for (const auto& e : j.at("edges")) {
      if (!e.is_array() || e.size() != 2) throw InputError("edge must be a pair");
      es.emplace_back(e[0].get<int>(), e[1].get<int>());
    }
  return make_graph(vs, es);
}

Named read_graph(const std::string& spec) {
  static const std::map<std::string, Family> kinds{
      {"path", Family::Path}, {"cycle", Family::Cycle}, {"complete", Family::Complete}, {"star", Family::Star}};
  auto colon = spec.find(':');
  if (colon != std::string::npos && kinds.count(spec.substr(0, colon))) {
    int n = 0;
    try {
      std::size_t used = 0;
      n = std::stoi(spec.substr(colon + 1), &used);
      if (used != spec.size() - colon - 1) throw InputError("");
    } catch (...) {
      throw InputError("bad family size in " + spec);
    }
    return {family(kinds.at(spec.substr(0, colon)), n), spec};
  }
  std::string text = spec;
  if (spec.empty() || spec.front() != '{') {
    std::ifstream in(spec);
    if (!in) throw InputError("cannot read graph: " + spec);
    std::stringstream ss;
    ss << in.rdbuf();
    text = ss.str();
  }
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("graph JSON: ") + e.what());
  }
  Graph g = graph_from_json(j);
  return {g, canonical_json(g)};
}

json tube_json(Mask t) { return labels_of(t); }

json nested_json(const NestedSet& ns) {
  json ts = json::array();
  for (Mask t : ns) ts.push_back(tube_json(t));
  return {{"tubes", ts}};
}

NestedSet read_nested(const Graph& g, const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw InputError(std::string("nested set JSON: ") + e.what());
  }
  if (j.is_object() && j.contains("tubes")) j = j.at("tubes");
  if (!j.is_array()) throw InputError("nested set must be {\"tubes\":[...]} or a list of tubes");
  NestedSet ns;
  for (const auto& t : j) ns.push_back(mask_of(t.get<std::vector<int>>()));
  for (Mask t : ns)
    if (!is_tube(g, t)) throw InputError("not a tube of the graph: " + set_string(t));
  if (!is_nested(g, ns)) throw InputError("tubes are not pairwise compatible");
  canonicalize(ns);
  if (ns.empty() || ns.back() != g.vertices()) throw InputError("nested set must contain the full vertex set");
  return ns;
}

std::string big_str(const BigInt& b) { return b.str(); }

json big_list(const std::vector<BigInt>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(json::parse(big_str(x)));
  return out;
}

System parse_system(const std::string& s) {
  if (s == "grav") return System::Grav;
  if (s == "hyper") return System::Hyper;
  if (s == "grcom") return System::GrCom;
  throw InputError("unknown system " + s);
}

json tally_json(const AxiomTally& t) { return {{"checked", t.checked}, {"failed", t.failed}}; }

struct Config {
  std::string command;
  std::vector<std::string> graphs;
  std::string format = "json";
  int cap = kDefaultCap;
  int jobs = 1;
  std::string system = "hyper";
  std::string which = "grav";
  bool augmented = true;
  std::string tau, omega;
  std::string sweep_family = "path", sweep_range = "2..6", sweep_of = "vertex-count";
};

struct Report {
  json body;
  bool identity_failed = false;
  std::string dot;  // tree command only
};

// Scalar used by sweep rows.
json scalar(const Config& cfg, const Graph& g, const std::string& what) {
  if (what == "vertex-count") return maximal_nested(g, cfg.cap).size();
  if (what == "face-count") return enumerate_nested(g, {true, false, cfg.cap}).size();
  if (what == "tube-count") return tubes(g, cfg.cap).size();
  if (what == "normal-count") return normal_monomials(g, parse_system(cfg.system), cfg.cap).size();
  if (what == "grav-total") return gravity_dims(g).total;
  if (what == "h1") return json::parse(big_str(h_poly_from_f(f_vector(g, cfg.cap)).eval(1)));
  throw InputError("unknown sweep quantity " + what);
}

Report run_one(const Config& cfg, const Named& in) {
  const Graph& g = in.graph;
  check_cap(g, cfg.cap);
  Report r;
  json& o = r.body;
  o["graph"] = in.encoding;
  const std::string& c = cfg.command;
  if (c == "tubes") {
    json ts = json::array();
    for (Mask t : tubes(g, cfg.cap)) ts.push_back(tube_json(t));
    o["tubes"] = ts;
  } else if (c == "nested" || c == "maximal") {
    std::vector<NestedSet> list = c == "nested" ? enumerate_nested(g, {cfg.augmented, false, cfg.cap}) : maximal_nested(g, cfg.cap);
    json arr = json::array();
    for (const auto& ns : list) arr.push_back(nested_json(ns));
    if (c == "nested") o["augmented"] = cfg.augmented;
    o["count"] = list.size();
    o["nested"] = arr;
  } else if (c == "tree") {
    if (cfg.tau.empty()) throw InputError("tree needs --tau");
    NestedSet ns = read_nested(g, cfg.tau);
    NestedTree t = nested_tree(g, ns);
    json nodes = json::array();
    for (std::size_t i = 0; i < t.nodes.size(); ++i)
      nodes.push_back({{"tube", tube_json(t.nodes[i])},
                       {"lambda", tube_json(t.lambda[i])},
                       {"parent", t.parent[i] < 0 ? json(nullptr) : tube_json(t.nodes[t.parent[i]])}});
    o["nodes"] = nodes;
    r.dot = to_dot(g, ns);
  } else if (c == "fvector" || c == "hpoly" || c == "betti") {
    auto f = f_vector(g, cfg.cap);
    Polynomial h = h_poly_from_f(f);
    if (c == "fvector") o["f"] = big_list(f);
    if (c == "hpoly") {
      o["h"] = big_list(h.coeffs);
      r.identity_failed = !(h == h_poly_from_descents(g, cfg.cap));
    }
    if (c == "betti") o["betti"] = big_list(betti(g, cfg.cap));
  } else if (c == "grav-dims") {
    auto d = gravity_dims(g);
    json by = json::object();
    for (auto [k, v] : d.by_degree) by[std::to_string(k)] = v;
    o["by_degree"] = by;
    o["total"] = d.total;
    r.identity_failed = d.total != std::size_t{1} << (g.size() - 1);
  } else if (c == "check-gravity") {
    json arr = json::array();
    bool ok = true;
    for (const auto& rc : check_gravity_relations(g)) {
      arr.push_back({{"name", rc.name}, {"tube", tube_json(rc.tube)}, {"holds", rc.holds}});
      ok = ok && rc.holds;
    }
    o["relations"] = arr;
    o["ok"] = ok;
    r.identity_failed = !ok;
  } else if (c == "relations") {
    RelationSet rs;
    if (cfg.which == "grav")
      rs = gravity_relations(g);
    else if (cfg.which == "hyper")
      rs = hypercom_relations(g);
    else
      throw InputError("--which must be grav or hyper");
    json basis = json::array(), vecs = json::array();
    for (const auto& m : rs.basis) basis.push_back(nested_json(m));
    for (const auto& v : rs.vectors) {
      json row = json::array();
      for (std::size_t i = 0; i < rs.basis.size(); ++i) {
        auto it = v.find(i);
        row.push_back(rational_string(it == v.end() ? Rational(0) : it->second));
      }
      vecs.push_back(row);
    }
    json lts = json::array();
    for (Mask t : leading_terms(g, cfg.which == "grav" ? System::Grav : System::Hyper)) lts.push_back(tube_json(t));
    o["which"] = cfg.which;
    o["basis"] = basis;
    o["vectors"] = vecs;
    o["span_dim"] = rs.span_dim;
    o["leading_terms"] = lts;
  } else if (c == "koszul-check") {
    auto h = koszul_check(g, cfg.cap);
    json arr = json::array();
    bool ok = true;
    for (auto [d, v] : h) {
      arr.push_back(v);
      ok = ok && v == (d == 0 ? 1u : 0u);
    }
    o["homology"] = arr;
    o["concentrated"] = ok;
    r.identity_failed = !ok;
  } else if (c == "normal-count") {
    o["system"] = cfg.system;
    o["count"] = normal_monomials(g, parse_system(cfg.system), cfg.cap).size();
  } else if (c == "reduce") {
    if (cfg.tau.empty()) throw InputError("reduce needs --tau");
    NestedSet tau = read_nested(g, cfg.tau);
    if (tau.size() != static_cast<std::size_t>(g.size())) throw InputError("reduce needs a maximal nested set");
    o["tau"] = nested_json(tau);
    o["reduced"] = nested_json(reduction(g, tau));
  } else if (c == "induce") {
    if (cfg.omega.empty()) throw InputError("induce needs --omega");
    NestedSet w = read_nested(g, cfg.omega);
    o["omega"] = nested_json(w);
    o["induced"] = nested_json(induction(g, w));
  } else if (c == "axioms") {
    ComXModel com = grcom_model(), gerst = gerst_model();
    bool ok = true;
    for (auto [name, m] : {std::pair<const char*, ComXModel*>{"grcom", &com}, {"gerst", &gerst}}) {
      AxiomReport a = check_axioms(*m, g);
      o[name] = {{"unit", tally_json(a.unit)},
                 {"parallel", tally_json(a.parallel)},
                 {"consecutive", tally_json(a.consecutive)},
                 {"equivariance", tally_json(a.equivariance)},
                 {"ok", a.ok()}};
      ok = ok && a.ok();
    }
    r.identity_failed = !ok;
  } else {
    throw InputError("unknown command " + c);
  }
  return r;
}

// flatten one level for csv/text: arrays become space-separated scalars
std::string flat(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_array() && std::all_of(v.begin(), v.end(), [](const json& x) { return x.is_primitive(); })) {
    std::string s;
    for (const auto& x : v) s += (s.empty() ? "" : " ") + flat(x);
    return s;
  }
  return v.dump();
}

std::string csv_cell(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string q = "\"";
  for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
  return q + "\"";
}

int emit(const Config& cfg, const std::vector<Report>& reports) {
  bool failed = false;
  bool header = false;
  for (const auto& r : reports) {
    failed = failed || r.identity_failed;
    if (cfg.format == "json") {
      std::cout << r.body.dump() << "\n";
    } else if (cfg.format == "dot") {
      if (r.dot.empty()) throw InputError("dot output is only available for the tree command");
      std::cout << r.dot;
    } else if (cfg.format == "text") {
      for (const auto& [k, v] : r.body.items()) std::cout << k << ": " << flat(v) << "\n";
    } else if (cfg.format == "csv") {
      if (!header) {
        std::string line;
        for (const auto& [k, v] : r.body.items()) line += (line.empty() ? "" : ",") + k;
        std::cout << line << "\n";
        header = true;
      }
      std::string line;
      bool first = true;
      for (const auto& [k, v] : r.body.items()) {
        line += (first ? "" : ",") + csv_cell(flat(v));
        first = false;
      }
      std::cout << line << "\n";
    } else {
      throw InputError("unknown format " + cfg.format);
    }
  }
  return failed ? 2 : 0;
}

template <class T, class F>
std::vector<T> fan_out(std::size_t count, int jobs, F&& work) {
  std::vector<T> out(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < count;) {
      try {
        out[i] = work(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  int n = std::max(1, std::min<int>(jobs, static_cast<int>(count)));
  for (int k = 1; k < n; ++k) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

int sweep(const Config& cfg) {
  auto dots = cfg.sweep_range.find("..");
  if (dots == std::string::npos) throw InputError("--range must look like 2..6");
  int lo = 0, hi = 0;
  try {
    lo = std::stoi(cfg.sweep_range.substr(0, dots));
    hi = std::stoi(cfg.sweep_range.substr(dots + 2));
  } catch (...) {
    throw InputError("--range must look like 2..6");
  }
  if (lo > hi) throw InputError("empty --range");
  std::vector<Named> graphs;
  for (int n = lo; n <= hi; ++n) graphs.push_back(read_graph(cfg.sweep_family + ":" + std::to_string(n)));
  auto values = fan_out<json>(graphs.size(), cfg.jobs, [&](std::size_t i) {
    check_cap(graphs[i].graph, cfg.cap);
    return scalar(cfg, graphs[i].graph, cfg.sweep_of);
  });
  if (cfg.format == "json") {
    for (std::size_t i = 0; i < graphs.size(); ++i)
      std::cout << json{{"graph", graphs[i].encoding}, {"n", lo + static_cast<int>(i)}, {cfg.sweep_of, values[i]}}.dump()
                << "\n";
  } else {
    std::cout << "graph,n," << cfg.sweep_of << "\n";
    for (std::size_t i = 0; i < graphs.size(); ++i)
      std::cout << flat(graphs[i].encoding) << "," << lo + static_cast<int>(i) << "," << values[i].dump() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"graph associahedra and reconnectads, exact arithmetic"};
  Config cfg;
  if (const char* env = std::getenv("GRAKIT_CAP")) {
    try {
      cfg.cap = std::stoi(env);
    } catch (...) {
      std::cerr << "error: GRAKIT_CAP is not an integer\n";
      return 1;
    }
  }
  const std::vector<std::string> commands{"tubes",        "nested",         "maximal", "tree",         "fvector", "hpoly",
                                          "betti",        "grav-dims",      "check-gravity", "relations", "koszul-check",
                                          "normal-count", "reduce",         "induce",  "axioms",       "sweep"};
  app.add_option("command", cfg.command, "command to run")->required()->check(CLI::IsMember(commands));
  app.add_option("--graph,-g", cfg.graphs, "graph: family shorthand, inline JSON or JSON file (repeatable)");
  app.add_option("--format,-f", cfg.format, "output format")->check(CLI::IsMember({"json", "csv", "dot", "text"}));
  app.add_option("--cap", cfg.cap, "vertex cap (default GRAKIT_CAP or 9)")->check(CLI::PositiveNumber);
  app.add_option("--jobs,-j", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--system", cfg.system, "grav, hyper or grcom")->check(CLI::IsMember({"grav", "hyper", "grcom"}));
  app.add_option("--which", cfg.which, "relation set for relations")->check(CLI::IsMember({"grav", "hyper"}));
  app.add_flag("!--plain", cfg.augmented, "nested: leave out the full vertex set");
  app.add_flag("--augmented", cfg.augmented, "nested: include the full vertex set (default)");
  app.add_option("--tau", cfg.tau, "nested set JSON for tree/reduce");
  app.add_option("--omega", cfg.omega, "nested set JSON for induce");
  app.add_option("--family", cfg.sweep_family, "sweep: graph family")->check(CLI::IsMember({"path", "cycle", "complete", "star"}));
  app.add_option("--range", cfg.sweep_range, "sweep: n range, e.g. 2..6");
  app.add_option("--of", cfg.sweep_of, "sweep: vertex-count, face-count, tube-count, normal-count, grav-total, h1");
  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  try {
    if (cfg.command == "sweep") return sweep(cfg);
    if (cfg.graphs.empty()) throw InputError("--graph is required");
    std::vector<Named> inputs;
    for (const auto& s : cfg.graphs) inputs.push_back(read_graph(s));
    auto reports = fan_out<Report>(inputs.size(), cfg.jobs, [&](std::size_t i) { return run_one(cfg, inputs[i]); });
    return emit(cfg, reports);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const GraphError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const CapExceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return 1;
}
