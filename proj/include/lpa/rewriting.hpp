#pragma once

#include <map>
#include <memory>
#include <random>
#include <utility>
#include <vector>

#include "lpa/algebra.hpp"

namespace lpa {

// Letter-level rewriting on words of the extended graph, independent of
// the monomial multiplication in Algebra. Rules, applicable at any
// adjacent pair of letters:
//   x y          -> 0                      if r(x) != s(y)
//   v x, x v     -> x                      (vertex absorbed)
//   e* f         -> delta_{e,f} r(f)       (CK1)
//   g g*         -> u - sum_{e != g} e e*  (CK2, g the special edge at u)
// The normal form does not depend on the order of application; `normalize`
// takes an RNG and picks redexes at random to exercise exactly that.
template <class Field>
class RewriteSystem {
 public:
  using Scalar = typename Field::value_type;
  using Combination = std::vector<std::pair<RawWord, Scalar>>;

  explicit RewriteSystem(std::shared_ptr<const Algebra<Field>> algebra)
      : algebra_(std::move(algebra)) {}

  // Positions i such that the pair (w[i], w[i+1]) is a redex.
  std::vector<std::size_t> redexes(const RawWord& w) const {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i + 1 < w.size(); ++i)
      if (is_redex(w[i], w[i + 1])) out.push_back(i);
    return out;
  }

  // Rewrites the pair at position i; returns the resulting combination.
  Combination rewrite_at(const RawWord& w, std::size_t i, const Scalar& k) const {
    const Graph& g = algebra_->graph();
    const Generator x = w[i], y = w[i + 1];
    auto splice = [&](std::vector<Generator> middle) {
      RawWord out(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(i));
      out.insert(out.end(), middle.begin(), middle.end());
      out.insert(out.end(), w.begin() + static_cast<std::ptrdiff_t>(i + 2), w.end());
      return out;
    };
    using K = Generator::Kind;
    if (x.finish(g) != y.start(g)) return {};
    if (x.kind == K::vertex) return {{splice({y}), k}};
    if (y.kind == K::vertex) return {{splice({x}), k}};
    if (x.kind == K::ghost && y.kind == K::edge) {
      if (x.index != y.index) return {};
      return {{splice({Generator::of_vertex(g.range(EdgeIndex{y.index}))}), k}};
    }
    // x = gamma, y = gamma*, gamma special at u.
    EdgeIndex gamma{x.index};
    VertexIndex u = g.source(gamma);
    Combination out{{splice({Generator::of_vertex(u)}), k}};
    Scalar minus_k = -k;
    for (auto e : g.out_edges(u)) {
      if (e == gamma) continue;
      out.emplace_back(splice({Generator::of_edge(e), Generator::of_ghost(e)}), minus_k);
    }
    return out;
  }

  // Rewrites until no redex remains, choosing term and position uniformly
  // at random at every step. Like terms are merged at random moments too.
  template <class Rng>
  Element<Field> normalize(const Combination& input, Rng& rng) const {
    Combination work = input;
    std::bernoulli_distribution merge_now(0.2);
    while (true) {
      std::vector<std::size_t> open;
      for (std::size_t t = 0; t < work.size(); ++t)
        if (!redexes(work[t].first).empty()) open.push_back(t);
      if (open.empty()) break;
      std::size_t t = open[std::uniform_int_distribution<std::size_t>(0, open.size() - 1)(rng)];
      auto spots = redexes(work[t].first);
      std::size_t i = spots[std::uniform_int_distribution<std::size_t>(0, spots.size() - 1)(rng)];
      auto replaced = rewrite_at(work[t].first, i, work[t].second);
      work.erase(work.begin() + static_cast<std::ptrdiff_t>(t));
      work.insert(work.end(), replaced.begin(), replaced.end());
      if (merge_now(rng)) work = merged(work);
    }
    return to_element(merged(work));
  }

  // Irreducible words have the shape e_1..e_k g_1*..g_m* or a lone vertex.
  Element<Field> to_element(const Combination& normal) const {
    const Graph& g = algebra_->graph();
    typename Algebra<Field>::Terms terms;
    for (const auto& [w, k] : normal) {
      Monomial m;
      std::size_t i = 0;
      if (w.size() == 1 && w[0].kind == Generator::Kind::vertex) {
        m = Monomial::of_vertex(VertexIndex{w[0].index});
      } else {
        for (; i < w.size() && w[i].kind == Generator::Kind::edge; ++i)
          m.real.push_back(EdgeIndex{w[i].index});
        for (std::size_t j = w.size(); j > i; --j) {
          if (w[j - 1].kind != Generator::Kind::ghost)
            throw AlgebraError("word is not in rewriting normal form");
          m.ghost.push_back(EdgeIndex{w[j - 1].index});
        }
        m.vertex = !m.real.empty() ? g.range(m.real.back()) : g.range(m.ghost.back());
      }
      if (!algebra_->is_canonical(m)) throw AlgebraError("irreducible word is not canonical");
      Algebra<Field>::add_term(terms, m, k);
    }
    return Element<Field>::from_terms(algebra_, terms);
  }

 private:
  bool is_redex(Generator x, Generator y) const {
    const Graph& g = algebra_->graph();
    using K = Generator::Kind;
    if (x.finish(g) != y.start(g)) return true;
    if (x.kind == K::vertex || y.kind == K::vertex) return true;
    if (x.kind == K::ghost && y.kind == K::edge) return true;
    if (x.kind == K::edge && y.kind == K::ghost && x.index == y.index) {
      EdgeIndex e{x.index};
      return algebra_->special_edge(g.source(e)) == e;
    }
    return false;
  }

  static Combination merged(const Combination& c) {
    std::map<RawWord, Scalar> acc;
    for (const auto& [w, k] : c) {
      auto [it, inserted] = acc.try_emplace(w, k);
      if (!inserted) it->second += k;
    }
    Combination out;
    for (auto& [w, k] : acc)
      if (!Field::is_zero(k)) out.emplace_back(w, k);
    return out;
  }

  std::shared_ptr<const Algebra<Field>> algebra_;
};

}  // namespace lpa
