#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "lpa/algebra.hpp"
#include "lpa/linalg.hpp"
#include "lpa/local_global.hpp"
#include "lpa/quiver.hpp"
#include "lpa/report.hpp"

namespace lpa {

// Block sizes of L(E) as a direct sum of M_n(K) and M_n(K[x, x^-1]).
// Both lists are kept sorted.
struct MatricialShape {
  std::vector<std::uint64_t> k_blocks;
  std::vector<std::uint64_t> laurent_blocks;
  friend bool operator==(const MatricialShape&, const MatricialShape&) = default;
};

// The vertex of c with the smallest id.
inline VertexIndex cycle_base_vertex(const Graph& g, const Cycle& c) {
  VertexIndex best = g.source(c.edges.front());
  for (auto e : c.edges)
    if (g.vertex_id(g.source(e)) < g.vertex_id(best)) best = g.source(e);
  return best;
}

inline MatricialShape matricial_shape(const Graph& g) {
  if (auto bad = cycle_with_exit(g))
    throw AlgebraError("cycle " + format_edges(g, bad->first.edges) + " has exit " +
                       g.edge_id(bad->second) + "; no matricial shape");
  MatricialShape s;
  for (auto w : sinks(g)) s.k_blocks.push_back(count_paths_into(g, w));
  // Paths into the base that do not wind once around the cycle: since the
  // cycle has no exit, these are exactly the paths avoiding its edge out of
  // the base.
  for (const auto& c : simple_cycles(g)) {
    auto base = cycle_base_vertex(g, c);
    auto out = std::find_if(c.edges.begin(), c.edges.end(),
                            [&](EdgeIndex e) { return g.source(e) == base; });
    s.laurent_blocks.push_back(count_paths_into(g, base, std::span(&*out, 1)));
  }
  std::sort(s.k_blocks.begin(), s.k_blocks.end());
  std::sort(s.laurent_blocks.begin(), s.laurent_blocks.end());
  return s;
}

inline std::string format_blocks(const std::vector<std::uint64_t>& blocks) {
  std::string out = "[";
  for (std::size_t i = 0; i < blocks.size(); ++i)
    out += (i ? ", " : "") + std::to_string(blocks[i]);
  return out + "]";
}

namespace detail {

// Candidates m with x m x possibly nonzero: m starts where a term of x
// ends and ends where a term of x starts.
inline std::vector<Monomial> sandwich_candidates(const Graph& g, std::vector<Monomial> pool,
                                                 const std::set<VertexIndex>& x_starts,
                                                 const std::set<VertexIndex>& x_ends) {
  std::vector<Monomial> out;
  for (auto& m : pool)
    if (x_ends.contains(m.start(g)) && x_starts.contains(m.end(g))) out.push_back(std::move(m));
  return out;
}

template <class Field>
std::optional<Element<Field>> solve_sandwich(const Element<Field>& x,
                                             const std::vector<Monomial>& candidates) {
  const auto& alg = x.algebra_ptr();
  ElementBasis<Field> basis(alg->field(), true);
  for (const auto& m : candidates) basis.insert((x * alg->monomial(m) * x).terms());
  auto combo = basis.solve(x.terms());
  if (!combo) return std::nullopt;
  Element<Field> y = alg->zero();
  for (const auto& [i, k] : *combo) y += alg->monomial(candidates[i], k);
  if (!(x * y * x == x)) throw AlgebraError("regularity certificate failed to verify");
  return y;
}

}  // namespace detail

// y with x y x = x. Acyclic graphs: searched over the whole (finite)
// canonical basis, always found. Cyclic graphs: x must be homogeneous of
// degree d and y is searched in degree -d with total length <= bound
// (default |x| + longest simple cycle + 2); nullopt means none at the bound.
template <class Field>
std::optional<Element<Field>> regularity_witness(const Element<Field>& x,
                                                 std::optional<std::size_t> bound = {}) {
  const auto& alg = x.algebra_ptr();
  const Graph& g = alg->graph();
  if (x.is_zero()) return alg->zero();
  std::set<VertexIndex> starts, ends;
  for (const auto& [m, k] : x.terms()) {
    starts.insert(m.start(g));
    ends.insert(m.end(g));
  }
  if (is_acyclic(g)) {
    auto pool = enumerate_basis(g, 2 * longest_path_length(g));
    auto y = detail::solve_sandwich(x, detail::sandwich_candidates(g, std::move(pool), starts, ends));
    if (!y) throw AlgebraError("no regularity witness over the full basis of an acyclic graph");
    return y;
  }
  auto split = x.degree_split();
  if (split.size() != 1)
    throw AlgebraError("graded regularity only covers homogeneous elements");
  const int d = split.begin()->first;
  std::size_t longest_cycle = 0;
  for (const auto& c : simple_cycles(g)) longest_cycle = std::max(longest_cycle, c.length());
  std::size_t n = bound.value_or(x.max_total_length() + longest_cycle + 2);
  std::vector<Monomial> pool;
  for (auto& m : enumerate_basis(g, n))
    if (m.degree() == -d) pool.push_back(std::move(m));
  return detail::solve_sandwich(x, detail::sandwich_candidates(g, std::move(pool), starts, ends));
}

// ---------------------------------------------------------------------------
// Direct finiteness.

template <class Field>
struct DirectFinitenessCounterexample {
  Element<Field> x, y, u;
  Cycle cycle;
  EdgeIndex exit;
};

template <class Field>
struct DirectFinitenessVerdict {
  bool directly_finite = true;
  std::optional<DirectFinitenessCounterexample<Field>> counterexample;
};

template <class Field>
DirectFinitenessVerdict<Field> directly_finite_decider(
    const std::shared_ptr<const Algebra<Field>>& alg) {
  const Graph& g = alg->graph();
  auto found = cycle_with_exit(g);
  if (!found) return {};
  auto [c, exit] = *found;
  VertexIndex w = g.source(exit);
  for (std::size_t k = 0; k < c.edges.size(); ++k) {
    if (g.source(c.edges[k]) == w) {
      c = c.rotated(k);
      break;
    }
  }
  auto y = alg->path_pair(c.edges, {});
  auto x = y.adjoint();
  auto u = alg->vertex(w);
  if (!(x * y == u) || y * x == u)
    throw AlgebraError("direct finiteness counterexample failed to verify");
  return {false, DirectFinitenessCounterexample<Field>{x, y, u, c, exit}};
}

// ---------------------------------------------------------------------------
// One-sided ideals of finite-dimensional (acyclic) algebras.

enum class Side { left, right };

template <class Field>
class IdealBasis {
 public:
  using AlgebraPtr = std::shared_ptr<const Algebra<Field>>;

  // Rejects anything that is not an independent spanning set of a
  // one-sided ideal: every canonical monomial times a basis element must
  // stay in the span.
  IdealBasis(AlgebraPtr alg, Side side, std::vector<Element<Field>> basis)
      : alg_(std::move(alg)), side_(side), basis_(std::move(basis)) {
    const Graph& g = alg_->graph();
    if (!is_acyclic(g)) throw AlgebraError("ideal bases need an acyclic graph");
    ElementBasis<Field> span(alg_->field(), false);
    for (const auto& b : basis_)
      if (!span.insert(b.terms())) throw AlgebraError("ideal basis is linearly dependent");
    for (const auto& m : enumerate_basis(g, 2 * longest_path_length(g))) {
      auto mono = alg_->monomial(m);
      for (const auto& b : basis_) {
        auto p = side_ == Side::left ? mono * b : b * mono;
        if (!span.contains(p.terms()))
          throw AlgebraError("span is not closed: " + p.to_string() + " escapes it");
      }
    }
  }

  const AlgebraPtr& algebra() const { return alg_; }
  const Graph& graph() const { return alg_->graph(); }
  Side side() const { return side_; }
  const std::vector<Element<Field>>& basis() const { return basis_; }
  std::size_t dimension() const { return basis_.size(); }

  bool contains(const Element<Field>& x) const {
    ElementBasis<Field> span(alg_->field(), false);
    for (const auto& b : basis_) span.insert(b.terms());
    return span.contains(x.terms());
  }

 private:
  AlgebraPtr alg_;
  Side side_;
  std::vector<Element<Field>> basis_;
};

template <class Field>
IdealBasis<Field> left_ideal_basis(const std::shared_ptr<const Algebra<Field>>& alg,
                                   const std::vector<Element<Field>>& gens,
                                   Side side = Side::left) {
  const Graph& g = alg->graph();
  if (!is_acyclic(g)) throw AlgebraError("ideal bases need an acyclic graph");
  auto monomials = enumerate_basis(g, 2 * longest_path_length(g));
  ElementBasis<Field> span(alg->field(), false);
  std::vector<Element<Field>> basis;
  for (const auto& x : gens) {
    for (const auto& m : monomials) {
      auto mono = alg->monomial(m);
      auto p = side == Side::left ? mono * x : x * mono;
      if (!p.is_zero() && span.insert(p.terms())) basis.push_back(std::move(p));
    }
  }
  return IdealBasis<Field>(alg, side, std::move(basis));
}

template <class Field>
struct GradedVerdict {
  bool graded = true;
  std::optional<std::pair<Element<Field>, int>> witness;  // basis element, stray degree
};

template <class Field>
GradedVerdict<Field> is_graded_ideal(const IdealBasis<Field>& ib) {
  for (const auto& b : ib.basis())
    for (const auto& [d, part] : b.degree_split())
      if (!ib.contains(part)) return {false, std::make_pair(b, d)};
  return {};
}

// R x equals the ideal generated by gens (on the left).
template <class Field>
bool verify_principal(const std::shared_ptr<const Algebra<Field>>& alg,
                      const std::vector<Element<Field>>& gens, const Element<Field>& x) {
  auto a = left_ideal_basis(alg, gens);
  auto b = left_ideal_basis(alg, std::vector<Element<Field>>{x});
  return same_span(a.basis(), b.basis(), alg->field());
}

namespace detail {

// Trial t draws coefficients from {-m..m} with m = 1 + t / 4.
template <class Field>
Element<Field> random_combination(const std::shared_ptr<const Algebra<Field>>& alg,
                                  const std::vector<Element<Field>>& basis, std::size_t trial,
                                  std::mt19937_64& rng) {
  const long m = 1 + static_cast<long>(trial / 4);
  std::uniform_int_distribution<long> coeff(-m, m);
  Element<Field> x = alg->zero();
  for (const auto& b : basis) x += b.scaled(alg->field().from_int(coeff(rng)));
  return x;
}

}  // namespace detail

template <class Field>
std::optional<Element<Field>> principal_generator_search(
    const std::shared_ptr<const Algebra<Field>>& alg, const std::vector<Element<Field>>& gens,
    std::size_t trials = 32, std::uint64_t seed = 0) {
  auto ideal = left_ideal_basis(alg, gens);
  if (ideal.dimension() == 0) return alg->zero();
  if (gens.size() == 1) return gens.front();
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials; ++t) {
    auto x = detail::random_combination(alg, ideal.basis(), t, rng);
    if (x.is_zero()) continue;
    if (verify_principal(alg, gens, x)) return x;
  }
  return std::nullopt;
}

// Local-to-global: find x in the unital subalgebra B = B(gens) with
// Bx = sum B x_i, then confirm R x = sum R x_i in the whole algebra.
template <class Field>
Report bezout_lemma_harness(const std::shared_ptr<const Algebra<Field>>& alg,
                            const std::vector<Element<Field>>& gens, std::size_t trials = 32,
                            std::uint64_t seed = 0) {
  const Graph& g = alg->graph();
  if (!is_acyclic(g)) throw AlgebraError("the Bezout harness needs an acyclic graph");
  Report r;
  std::vector<Element<Field>> nonzero;
  for (const auto& x : gens)
    if (!x.is_zero()) nonzero.push_back(x);
  if (nonzero.empty()) {
    r.add("zero ideal is principal", true, "x = 0");
    return r;
  }

  auto b = build_b(nonzero);
  // E_F is acyclic, so a large enough bound enumerates all of Im(theta).
  std::size_t bound = 2 * (b.theta.ef().graph.edge_count() + 1);
  auto span = bounded_span(b, bound);
  ElementBasis<Field> b_span(alg->field(), false);
  std::vector<Element<Field>> b_basis;
  for (const auto& v : span.vectors)
    if (b_span.insert(v.terms())) b_basis.push_back(v);
  r.add("B(gens) spanned, dim " + std::to_string(b_basis.size()), !b_basis.empty());

  auto unit = b.unit();
  for (const auto& x : nonzero) {
    r.add("generator " + x.to_string() + " in B", b_span.contains(x.terms()));
    r.add("1_B acts on " + x.to_string(), unit * x == x);
  }

  // The left B-ideal sum B x_i, and a principal generator of it inside B.
  auto b_ideal = [&](const std::vector<Element<Field>>& xs) {
    ElementBasis<Field> span_out(alg->field(), false);
    std::vector<Element<Field>> out;
    for (const auto& x : xs)
      for (const auto& s : b_basis) {
        auto p = s * x;
        if (!p.is_zero() && span_out.insert(p.terms())) out.push_back(p);
      }
    return out;
  };
  auto target = b_ideal(nonzero);
  std::optional<Element<Field>> found;
  std::mt19937_64 rng(seed);
  for (std::size_t t = 0; t < trials && !found; ++t) {
    Element<Field> x = (t == 0 && nonzero.size() == 1)
                           ? nonzero.front()
                           : detail::random_combination(alg, target, t, rng);
    if (x.is_zero() || !b_span.contains(x.terms())) continue;
    if (same_span(b_ideal({x}), target, alg->field())) found = x;
  }
  if (!found) throw AlgebraError("subalgebra search exhausted after " + std::to_string(trials) +
                                 " trials");
  r.add("principal generator of sum B x_i found in B", true, found->to_string());
  r.add("R x = sum R x_i in the whole algebra", verify_principal(alg, nonzero, *found),
        found->to_string());
  return r;
}

// ---------------------------------------------------------------------------
// Evaluation at a scalar on a single-loop component: v -> 1, the loop e
// -> lambda, e* -> 1/lambda, everything else -> 0. This is a homomorphism
// to K exactly when v emits only e and receives only e.

template <class Field>
class LoopEvaluation {
 public:
  using Scalar = typename Field::value_type;

  LoopEvaluation(std::shared_ptr<const Algebra<Field>> alg, VertexIndex v, Scalar lambda)
      : alg_(std::move(alg)), v_(v), lambda_(lambda) {
    const Graph& g = alg_->graph();
    auto out = g.out_edges(v), in = g.in_edges(v);
    if (out.size() != 1 || in.size() != 1 || out.front() != in.front())
      throw AlgebraError("vertex " + g.vertex_id(v) + " is not a single-loop component");
    loop_ = out.front();
    mu_ = Field::inverse(lambda_);
  }

  Scalar operator()(const Element<Field>& x) const {
    const Field& f = alg_->field();
    Scalar total = f.zero();
    for (const auto& [m, k] : x.terms()) {
      if (m.vertex != v_) continue;
      Scalar val = k;
      for (std::size_t i = 0; i < m.real.size(); ++i) val = val * lambda_;
      for (std::size_t i = 0; i < m.ghost.size(); ++i) val = val * mu_;
      total += val;
    }
    return total;
  }

  // The defining relations hold on generator values.
  Report verify_homomorphism() const {
    Report r;
    const Field& f = alg_->field();
    r.add("e* e = v", f.one() == mu_ * lambda_);
    r.add("v = e e*", f.one() == lambda_ * mu_);
    return r;
  }

 private:
  std::shared_ptr<const Algebra<Field>> alg_;
  VertexIndex v_;
  Scalar lambda_, mu_;
  EdgeIndex loop_;
};

// A homomorphism to K killing every generator but not the target
// certifies that the target lies outside the two-sided (hence one-sided)
// ideal they generate.
template <class Field>
Report evaluation_certificate(const LoopEvaluation<Field>& phi,
                              const std::vector<Element<Field>>& gens,
                              const Element<Field>& target) {
  Report r = phi.verify_homomorphism();
  for (const auto& x : gens) {
    auto val = phi(x);
    r.add("phi(" + x.to_string() + ") = 0", Field::is_zero(val));
  }
  auto t = phi(target);
  r.add("phi(" + target.to_string() + ") != 0", !Field::is_zero(t));
  return r;
}

}  // namespace lpa
