// Command-line front end: graph analysis, E_F construction, reduction,
// subalgebra decompositions, duals and structure reports.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

#include "lpa/lpa.hpp"

namespace {

using namespace lpa;

constexpr int kOk = 0;
constexpr int kCheckFailed = 1;
constexpr int kInputError = 2;

struct Options {
  std::string field = "rational";
  std::uint64_t seed = 0;
  bool json = false;
  std::optional<std::size_t> bound;
  std::string graph_path;
  std::string edges;
  bool verify = false;
  std::string expr;
  std::string exprs_path;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read file '" + path + "'");
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Graph load_graph(const Options& o) { return parse_graph(read_file(o.graph_path)); }

std::vector<std::string> split_ids(const std::string& text) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, ','))
    if (!cur.empty()) out.push_back(cur);
  return out;
}

void print_json(const Json& j) { std::cout << j.dump(2) << "\n"; }

void print_report(const Report& r) {
  for (const auto& c : r.checks()) {
    std::cout << (c.passed ? "pass  " : "FAIL  ") << c.name;
    if (!c.witness.empty()) std::cout << "  [" << c.witness << "]";
    std::cout << "\n";
  }
}

std::vector<std::string> vertex_names(const Graph& g, const std::vector<VertexIndex>& vs) {
  std::vector<std::string> out;
  for (auto v : vs) out.push_back(g.vertex_id(v));
  return out;
}

std::vector<std::string> edge_names(const Graph& g, const std::vector<EdgeIndex>& es) {
  std::vector<std::string> out;
  for (auto e : es) out.push_back(g.edge_id(e));
  return out;
}

std::string join(const std::vector<std::string>& xs) {
  std::string out;
  for (const auto& x : xs) out += (out.empty() ? "" : ", ") + x;
  return "{" + out + "}";
}

Json shape_or_null(const Graph& g) {
  if (!no_cycle_has_exit(g)) return nullptr;
  return shape_to_json(matricial_shape(g));
}

template <class Field>
int cmd_analyze(const Options& o, const Field& field) {
  Graph g = load_graph(o);
  auto alg = Algebra<Field>::create(g, field);
  Report checks;
  for (const auto& [name, rel] : ck_relators(alg)) checks.add(name, rel.is_zero(), rel.to_string());
  const bool acyclic = is_acyclic(g);
  const bool no_exit = no_cycle_has_exit(g);
  auto cof = is_cofinal(g);

  Json j;
  j["graph"] = {{"vertices", g.vertex_count()},
                {"edges", g.edge_count()},
                {"sinks", vertex_names(g, sinks(g))},
                {"sources", vertex_names(g, sources(g))}};
  j["properties"] = {{"acyclic", acyclic},
                     {"cofinal", cof.cofinal},
                     {"no_exit", no_exit},
                     {"directly_finite", directly_finite_decider(alg).directly_finite},
                     {"von_neumann_regular", acyclic}};
  auto dim = dimension(g);
  j["dimension"] = dim ? Json(*dim) : Json(nullptr);
  j["shape"] = shape_or_null(g);
  j["checks_passed"] = checks.passed();
  if (o.json) {
    j["checks"] = report_to_json(checks);
    print_json(j);
  } else {
    std::cout << "vertices: " << g.vertex_count() << "\nedges: " << g.edge_count()
              << "\nsinks: " << join(vertex_names(g, sinks(g)))
              << "\nsources: " << join(vertex_names(g, sources(g))) << "\n";
    for (const auto& [k, v] : j["properties"].items()) std::cout << k << ": " << v.dump() << "\n";
    if (!cof.cofinal) std::cout << "cofinality witness: " << g.vertex_id(*cof.vertex) << " misses " << cof.tail << "\n";
    std::cout << "dimension: " << (dim ? std::to_string(*dim) : std::string("infinite")) << "\n";
    if (!j["shape"].is_null())
      std::cout << "shape: K " << format_blocks(j["shape"]["k_blocks"].get<std::vector<std::uint64_t>>())
                << " Laurent "
                << format_blocks(j["shape"]["laurent_blocks"].get<std::vector<std::uint64_t>>()) << "\n";
    std::cout << "relations: " << (checks.passed() ? "all reduce to 0" : "FAILED") << "\n";
  }
  return checks.passed() ? kOk : kCheckFailed;
}

template <class Field>
int cmd_ef(const Options& o, const Field& field, bool verify) {
  Graph g = load_graph(o);
  auto ef = build_ef(g, split_ids(o.edges));
  Report r;
  if (verify) {
    Theta<Field> theta(Algebra<Field>::create(g, field), ef);
    r = verify_theta_homomorphism(theta);
  }
  if (o.json) {
    Json j;
    j["graph"] = graph_to_json(ef.graph);
    if (verify) j["report"] = report_to_json(r);
    print_json(j);
  } else {
    if (!ef.graph.empty()) std::cout << to_graph_file(ef.graph);
    if (verify) {
      std::cout << "# theta checks\n";
      print_report(r);
    }
  }
  return r.passed() ? kOk : kCheckFailed;
}

template <class Field>
int cmd_reduce(const Options& o, const Field& field) {
  Graph g = load_graph(o);
  auto alg = Algebra<Field>::create(g, field);
  auto x = parse_element(alg, o.expr);
  if (o.json)
    print_json(Json{{"normal_form", x.to_string()}, {"terms", element_to_json(x)}});
  else
    std::cout << x.to_string() << "\n";
  return kOk;
}

template <class Field>
int cmd_subalg(const Options& o, const Field& field) {
  Graph g = load_graph(o);
  auto alg = Algebra<Field>::create(g, field);
  std::vector<Element<Field>> as;
  std::istringstream lines(read_file(o.exprs_path));
  std::size_t line_no = 0;
  for (std::string line; std::getline(lines, line);) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos || line.front() == '#') continue;
    try {
      as.push_back(parse_element(alg, line));
    } catch (const ParseError& e) {
      throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
    }
    if (as.back().is_zero())
      throw AlgebraError("line " + std::to_string(line_no) + ": zero element in input");
  }
  if (as.empty()) throw ParseError("no expressions in '" + o.exprs_path + "'");

  auto b = build_b(as);
  std::size_t bound = o.bound.value_or(2 + b.max_generator_length());
  Report r = verify_decomposition(b, bound);
  for (const auto& x : as) {
    auto m = membership(b, x, std::max(bound, x.max_total_length() + 2));
    r.add("input " + x.to_string() + " in B", m.has_value());
  }

  const auto& p = b.partition;
  const Graph& eg = b.theta.ef().graph;
  if (o.json) {
    Json j;
    j["F"] = edge_names(g, p.F);
    j["S"] = vertex_names(g, p.S);
    j["S1"] = vertex_names(g, p.S1);
    j["S2"] = vertex_names(g, p.S2);
    j["S3"] = vertex_names(g, p.S3);
    j["S4"] = vertex_names(g, p.S4);
    j["E_F"] = graph_to_json(eg);
    Json vim = Json::object(), eim = Json::object(), us = Json::object();
    for (auto x : eg.all_vertices()) vim[eg.vertex_id(x)] = b.theta.vertex_image(x).to_string();
    for (auto x : eg.all_edges()) eim[eg.edge_id(x)] = b.theta.edge_image(x).to_string();
    for (const auto& [w, u] : b.s4) us[g.vertex_id(w)] = u.to_string();
    j["theta_vertex_images"] = std::move(vim);
    j["theta_edge_images"] = std::move(eim);
    j["u"] = std::move(us);
    j["bound"] = bound;
    j["report"] = report_to_json(r);
    print_json(j);
  } else {
    std::cout << "F = " << join(edge_names(g, p.F)) << "\nS = " << join(vertex_names(g, p.S))
              << "\nS1 = " << join(vertex_names(g, p.S1)) << "\nS2 = " << join(vertex_names(g, p.S2))
              << "\nS3 = " << join(vertex_names(g, p.S3)) << "\nS4 = " << join(vertex_names(g, p.S4))
              << "\n";
    for (auto x : eg.all_vertices())
      std::cout << "theta(" << eg.vertex_id(x) << ") = " << b.theta.vertex_image(x).to_string() << "\n";
    for (auto x : eg.all_edges())
      std::cout << "theta(" << eg.edge_id(x) << ") = " << b.theta.edge_image(x).to_string() << "\n";
    for (const auto& [w, u] : b.s4) std::cout << "u_" << g.vertex_id(w) << " = " << u.to_string() << "\n";
    std::cout << "# checks at bound " << bound << "\n";
    print_report(r);
  }
  return r.passed() ? kOk : kCheckFailed;
}

int cmd_dual(const Options& o) {
  Graph g = load_graph(o);
  Graph d = dual(g);
  Report r = compare_invariants(g);
  if (o.json) {
    print_json(Json{{"graph", graph_to_json(d)}, {"report", report_to_json(r)}});
  } else {
    if (!d.empty()) std::cout << to_graph_file(d);
    std::cout << "# invariants\n" << report_to_json(r).dump() << "\n";
  }
  return r.passed() ? kOk : kCheckFailed;
}

template <class Field>
int cmd_structure(const Options& o, const Field& field) {
  Graph g = load_graph(o);
  auto alg = Algebra<Field>::create(g, field);
  const bool acyclic = is_acyclic(g);
  const bool no_exit = no_cycle_has_exit(g);
  const bool df = directly_finite_decider(alg).directly_finite;
  Json j{{"acyclic", acyclic},
         {"no_exit", no_exit},
         {"directly_finite", df},
         {"von_neumann_regular", acyclic},
         {"shape", shape_or_null(g)}};
  std::cout << (o.json ? j.dump() : j.dump(2)) << "\n";
  return df == no_exit ? kOk : kCheckFailed;
}

template <class Field>
int cmd_theta_check(const Options& o, const Field& field) {
  Graph g = load_graph(o);
  auto ids = split_ids(o.edges);
  auto ef = o.edges.empty() ? build_ef(g, g.all_edges()) : build_ef(g, ids);
  Theta<Field> theta(Algebra<Field>::create(g, field), ef);
  Report r = verify_theta_homomorphism(theta);
  r.append(acyclicity_transfer_check(g, ef.F));
  if (o.json)
    print_json(report_to_json(r));
  else
    print_report(r);
  return r.passed() ? kOk : kCheckFailed;
}

template <class Field>
int dispatch(const std::string& cmd, const Options& o, const Field& field) {
  if (cmd == "analyze") return cmd_analyze(o, field);
  if (cmd == "ef") return cmd_ef(o, field, o.verify);
  if (cmd == "reduce") return cmd_reduce(o, field);
  if (cmd == "subalg") return cmd_subalg(o, field);
  if (cmd == "dual") return cmd_dual(o);
  if (cmd == "structure") return cmd_structure(o, field);
  if (cmd == "theta-check") return cmd_theta_check(o, field);
  throw ParseError("unknown subcommand " + cmd);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Leavitt path algebra toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  Options o;
  std::size_t bound = 0;
  app.add_option("--field", o.field, "rational or fp:<prime>");
  app.add_option("--seed", o.seed, "seed for randomized searches");
  app.add_flag("--json", o.json, "machine-readable output");
  auto* bound_opt = app.add_option("--bound", bound, "degree bound for bounded searches");

  auto add = [&](const std::string& name, const std::string& help) {
    auto* sub = app.add_subcommand(name, help);
    sub->add_option("graph", o.graph_path, "graph file")->required();
    return sub;
  };
  add("analyze", "graph properties and relation checks");
  auto* ef = add("ef", "build E_F for a set of edges");
  ef->add_option("--edges", o.edges, "comma-separated edge ids (none: empty graph)");
  ef->add_flag("--verify", o.verify, "check theta on the generators of E_F");
  auto* red = add("reduce", "normal form of an expression");
  red->add_option("--expr", o.expr, "element expression")->required();
  auto* sub = add("subalg", "the subalgebra B of a family of elements");
  sub->add_option("--exprs", o.exprs_path, "file with one expression per line")->required();
  add("dual", "dual graph and invariant comparison");
  add("structure", "structure report");
  auto* th = add("theta-check", "verify theta for E_F (all edges by default)");
  th->add_option("--edges", o.edges, "comma-separated edge ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kOk : kInputError;
  }
  if (*bound_opt) o.bound = bound;
  const std::string cmd = app.get_subcommands().front()->get_name();

  try {
    if (o.field == "rational") return dispatch(cmd, o, RationalField{});
    if (o.field.rfind("fp:", 0) == 0) {
      unsigned long p = 0;
      try {
        p = std::stoul(o.field.substr(3));
      } catch (const std::exception&) {
        throw ParseError("malformed field '" + o.field + "'");
      }
      if (p >= (1ul << 31)) throw ParseError("field modulus must be a prime below 2^31");
      return dispatch(cmd, o, PrimeField(static_cast<std::uint32_t>(p)));
    }
    throw ParseError("unknown field '" + o.field + "' (use rational or fp:<p>)");
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const UnknownIdError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  } catch (const AlgebraError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kInputError;
  }
}
