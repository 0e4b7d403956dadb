#include <catch_amalgamated.hpp>

#include "support/fixtures.hpp"
#include "support/oracles.hpp"
#include "support/random_graphs.hpp"

using namespace lpa;
using Q = RationalField;

namespace {

auto algebra(const Graph& g) { return Algebra<Q>::create(g, Q{}); }

RawWord word(const Graph& g, std::initializer_list<std::string> tokens) {
  RawWord w;
  for (const std::string& t : tokens) {
    if (t.back() == '*')
      w.push_back(Generator::of_ghost(g.edge_index(t.substr(0, t.size() - 1))));
    else if (g.find_edge(t))
      w.push_back(Generator::of_edge(g.edge_index(t)));
    else
      w.push_back(Generator::of_vertex(g.vertex(t)));
  }
  return w;
}

// Normal form via the letter-level rewriting system (independent engine).
Element<Q> by_rewriting(const std::shared_ptr<const Algebra<Q>>& a, const RawWord& w,
                        std::uint64_t seed = 0) {
  RewriteSystem<Q> rs(a);
  std::mt19937_64 rng(seed);
  return rs.normalize({{w, Q{}.one()}}, rng);
}

}  // namespace

TEST_CASE("special edges are the smallest edge id at each non-sink", "[algebra]") {
  auto r2 = algebra(fixtures::rose(2));
  CHECK(r2->graph().edge_id(*r2->special_edge(r2->graph().vertex("v"))) == "y1");
  auto e = algebra(fixtures::single_edge());
  CHECK_FALSE(e->special_edge(e->graph().vertex("w")).has_value());
  auto ch = algebra(fixtures::chain_of_roses());
  CHECK(ch->graph().edge_id(*ch->special_edge(ch->graph().vertex("v1"))) == "f1");
  // v2 emits e1, f2, g2: e1 is smallest.
  CHECK(ch->graph().edge_id(*ch->special_edge(ch->graph().vertex("v2"))) == "e1");
}

TEST_CASE("reduction of the relations on small words", "[algebra]") {
  Graph g = fixtures::rose(2);
  auto a = algebra(g);
  auto ck1 = a->reduce(word(g, {"y1*", "y1"}));
  CHECK(ck1 == a->vertex("v"));
  CHECK(ck1 == by_rewriting(a, word(g, {"y1*", "y1"})));
  CHECK(a->reduce(word(g, {"y1*", "y2"})).is_zero());

  auto ck2 = a->vertex("v") - a->reduce(word(g, {"y1", "y1*"})) - a->reduce(word(g, {"y2", "y2*"}));
  CHECK(ck2.is_zero());

  auto proj = a->reduce(word(g, {"y1", "y1*"}));
  CHECK(proj.to_string() == "v - y2 y2*");
  CHECK(proj == by_rewriting(a, word(g, {"y1", "y1*"})));
  CHECK(proj + a->reduce(word(g, {"y2", "y2*"})) == a->vertex("v"));

  Graph e = fixtures::single_edge();
  auto ae = algebra(e);
  CHECK(ae->reduce(word(e, {"f", "f"})).is_zero());
  CHECK(ae->reduce(word(e, {"w", "v"})).is_zero());
  CHECK(ae->reduce(word(e, {"f", "v"})).is_zero());
  CHECK(ae->reduce(word(e, {"v", "f", "w"})) == ae->edge("f"));
}

TEST_CASE("multiplication examples", "[algebra]") {
  auto a = algebra(fixtures::rose(2));
  auto y1 = a->edge("y1");
  CHECK((y1 * y1.adjoint()) * y1 == y1);
  CHECK(a->vertex("v") * a->vertex("v") == a->vertex("v"));
  auto e = algebra(fixtures::single_edge());
  auto f = e->edge("f");
  CHECK(f * e->ghost("f") * f == f);
  CHECK((f * e->ghost("f")).to_string() == "v");  // f is the only edge out of v
  CHECK(e->ghost("f") * f == e->vertex("w"));
}

TEST_CASE("adjoint", "[algebra]") {
  auto a = algebra(fixtures::rose(2));
  CHECK(a->edge("y1").adjoint() == a->ghost("y1"));
  Graph g = fixtures::rose(2);
  auto y1 = g.edge_index("y1"), y2 = g.edge_index("y2");
  auto pq = a->monomial({{y1, y1}, {y2}, g.vertex("v")}, Q{}.from_int(3));
  auto qp = a->monomial({{y2}, {y1, y1}, g.vertex("v")}, Q{}.from_int(3));
  CHECK(pq.adjoint() == qp);
  CHECK(pq.to_string() == "3 y1 y1 y2*");
}

TEST_CASE("degree components", "[algebra]") {
  auto a = algebra(fixtures::rose(2));
  auto x = a->vertex("v") + a->edge("y1");
  auto split = x.degree_split();
  REQUIRE(split.size() == 2);
  CHECK(split.at(0) == a->vertex("v"));
  CHECK(split.at(1) == a->edge("y1"));
  auto y = a->edge("y1") * a->ghost("y2");
  CHECK(y.degree_split().size() == 1);
  CHECK(y.degree_split().begin()->first == 0);
  CHECK(a->zero().degree_split().empty());
}

TEST_CASE("canonical basis enumeration", "[algebra]") {
  Graph e = fixtures::single_edge();
  auto be = enumerate_basis(e, 2);
  std::set<std::string> got;
  for (const auto& m : be) got.insert(format_monomial(e, m));
  CHECK(got == std::set<std::string>{"v", "w", "f", "f*"});
  CHECK(got == oracle::canonical_basis(e, 2));

  Graph r = fixtures::rose(1);
  std::set<std::string> rose_got;
  for (const auto& m : enumerate_basis(r, 2)) rose_got.insert(format_monomial(r, m));
  CHECK(rose_got == std::set<std::string>{"v", "y1", "y1 y1", "y1*", "y1* y1*"});

  Graph c = fixtures::clock3();
  auto zero = enumerate_basis(c, 0);
  CHECK(zero.size() == c.vertex_count());
  for (const auto& m : zero) CHECK(m.is_vertex());
}

TEST_CASE("canonical basis matches brute force", "[algebra][property]") {
  gen::Rng rng(21);
  for (int i = 0; i < 100; ++i) {
    Graph g = gen::random_graph(rng, 4, 6);
    for (std::size_t n = 0; n <= 3; ++n) {
      std::set<std::string> got;
      auto basis = enumerate_basis(g, n);
      for (const auto& m : basis) got.insert(format_monomial(g, m));
      CHECK(got.size() == basis.size());
      CHECK(got == oracle::canonical_basis(g, n));
    }
  }
}

TEST_CASE("dimension", "[algebra]") {
  CHECK(dimension(fixtures::single_edge()) == 4u);
  CHECK_FALSE(dimension(fixtures::rose(1)).has_value());
  CHECK(dimension(fixtures::clock3()) == 12u);
  CHECK(dimension(fixtures::isolated_vertex()) == 1u);
}

TEST_CASE("basis counts stabilize at the dimension on acyclic graphs", "[algebra][property]") {
  gen::Rng rng(22);
  for (int i = 0; i < 100; ++i) {
    Graph g = gen::random_acyclic(rng, 5, 7);
    auto d = dimension(g);
    REQUIRE(d.has_value());
    std::size_t L = longest_path_length(g);
    CHECK(enumerate_basis(g, 2 * L).size() == *d);
    CHECK(enumerate_basis(g, 2 * L + 2).size() == *d);
    CHECK(oracle::canonical_basis(g, 2 * L).size() == *d);
  }
}

TEST_CASE("every relator reduces to zero", "[algebra]") {
  auto check_all = [](const Graph& g) {
    auto a = algebra(g);
    for (const auto& [name, rel] : ck_relators(a)) {
      INFO(name);
      CHECK(rel.is_zero());
    }
  };
  check_all(fixtures::rose(2));
  check_all(fixtures::chain_of_roses());
  check_all(parse_graph("vertex y1\nvertex v\nedge (y1,y1) y1 y1\nedge (y1,v) y1 v\n"));
}

TEST_CASE("mixing algebras is rejected", "[algebra]") {
  auto a = algebra(fixtures::rose(2));
  auto b = algebra(fixtures::rose(1));
  CHECK_THROWS_AS(a->vertex("v") + b->vertex("v"), AlgebraError);
  CHECK_THROWS_AS(a->vertex("v") * b->vertex("v"), AlgebraError);
  // Separately created algebras over equal graphs and fields interoperate.
  auto a2 = algebra(fixtures::rose(2));
  CHECK(a->vertex("v") == a2->vertex("v"));
  CHECK_THROWS_AS(a->vertex("nope"), UnknownIdError);
}

TEST_CASE("products agree with the rewriting engine on random words", "[algebra][property]") {
  gen::Rng rng(23);
  for (int i = 0; i < 150; ++i) {
    Graph g = gen::random_graph(rng, 4, 6);
    auto a = algebra(g);
    for (int j = 0; j < 10; ++j) {
      auto w = (j % 2) ? gen::random_word(rng, g, 8) : gen::random_walk(rng, g, 8);
      CHECK(a->reduce(w) == by_rewriting(a, w, rng()));
    }
  }
}

TEST_CASE("ring axioms on random elements", "[algebra][property]") {
  gen::Rng rng(24);
  for (int i = 0; i < 100; ++i) {
    Graph g = gen::random_graph(rng, 4, 6);
    auto a = algebra(g);
    for (int j = 0; j < 5; ++j) {
      auto x = gen::random_element(a, rng);
      auto y = gen::random_element(a, rng);
      auto z = gen::random_element(a, rng);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK((x + y) * z == x * z + y * z);
      CHECK(x.adjoint().adjoint() == x);
      CHECK((x + y).adjoint() == x.adjoint() + y.adjoint());
      CHECK((x * y).adjoint() == y.adjoint() * x.adjoint());
      CHECK(a->one() * x == x);
      CHECK(x * a->one() == x);
    }
  }
}

TEST_CASE("multiplication respects the grading", "[algebra][property]") {
  gen::Rng rng(25);
  for (int i = 0; i < 100; ++i) {
    Graph g = gen::random_graph(rng, 4, 6);
    auto a = algebra(g);
    auto x = gen::random_element(a, rng);
    auto y = gen::random_element(a, rng);
    std::map<int, Element<Q>> conv;
    for (const auto& [dx, px] : x.degree_split())
      for (const auto& [dy, py] : y.degree_split()) {
        auto p = px * py;
        auto [it, fresh] = conv.try_emplace(dx + dy, p);
        if (!fresh) it->second += p;
      }
    std::erase_if(conv, [](const auto& kv) { return kv.second.is_zero(); });
    CHECK(conv == (x * y).degree_split());
    auto sum = a->zero();
    for (const auto& [d, part] : x.degree_split()) sum += part;
    CHECK(sum == x);
  }
}

TEST_CASE("vertex sums are local units", "[algebra][property]") {
  gen::Rng rng(26);
  for (int i = 0; i < 100; ++i) {
    Graph g = gen::random_graph(rng, 5, 7);
    auto a = algebra(g);
    auto x = gen::random_element(a, rng);
    auto u = a->zero();
    std::set<VertexIndex> U;
    for (const auto& [m, k] : x.terms()) {
      U.insert(m.start(g));
      U.insert(m.end(g));
    }
    for (auto v : U) u += a->vertex(v);
    CHECK(u * x == x);
    CHECK(x * u == x);
  }
}

TEST_CASE("acyclic algebras act faithfully as block matrices", "[algebra][property]") {
  gen::Rng rng(27);
  for (int i = 0; i < 100; ++i) {
    Graph g = gen::random_acyclic(rng, 5, 7);
    auto a = algebra(g);
    auto x = gen::random_element(a, rng);
    auto y = gen::random_element(a, rng);
    using oracle::to_matrix;
    CHECK(to_matrix(x * y) == oracle::multiply<Q>(to_matrix(x), to_matrix(y)));
    CHECK(to_matrix(x).empty() == x.is_zero());
  }
}

TEST_CASE("prime field algebras reduce like rational ones", "[algebra][property]") {
  gen::Rng rng(28);
  PrimeField f(101);
  for (int i = 0; i < 50; ++i) {
    Graph g = gen::random_graph(rng, 4, 6);
    auto ap = Algebra<PrimeField>::create(g, f);
    auto x = gen::random_element(ap, rng);
    auto y = gen::random_element(ap, rng);
    auto z = gen::random_element(ap, rng);
    CHECK((x * y) * z == x * (y * z));
    for (const auto& [name, rel] : ck_relators(ap)) CHECK(rel.is_zero());
  }
}
