#pragma once

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lpa/error.hpp"
#include "lpa/field.hpp"
#include "lpa/quiver.hpp"

namespace lpa {

// The word p q* of L_K(E): real path p, ghost path q, junction vertex
// r(p) = r(q). Both paths empty means the vertex itself.
struct Monomial {
  std::vector<EdgeIndex> real;
  std::vector<EdgeIndex> ghost;
  VertexIndex vertex;

  static Monomial of_vertex(VertexIndex v) { return {{}, {}, v}; }

  bool is_vertex() const { return real.empty() && ghost.empty(); }
  std::size_t total_length() const { return real.size() + ghost.size(); }
  int degree() const { return static_cast<int>(real.size()) - static_cast<int>(ghost.size()); }

  // Where the word starts and ends as a path in the extended graph.
  VertexIndex start(const Graph& g) const { return real.empty() ? vertex : g.source(real.front()); }
  VertexIndex end(const Graph& g) const { return ghost.empty() ? vertex : g.source(ghost.front()); }

  friend bool operator==(const Monomial&, const Monomial&) = default;

  // Lexicographic on (|p|, |q|, p, q, vertex).
  friend bool operator<(const Monomial& a, const Monomial& b) {
    if (a.real.size() != b.real.size()) return a.real.size() < b.real.size();
    if (a.ghost.size() != b.ghost.size()) return a.ghost.size() < b.ghost.size();
    if (a.real != b.real) return a.real < b.real;
    if (a.ghost != b.ghost) return a.ghost < b.ghost;
    return a.vertex < b.vertex;
  }
};

// Tokens in the order they are multiplied: p's edges, then q's edges
// reversed with a star. A vertex monomial is its vertex id.
inline std::string format_monomial(const Graph& g, const Monomial& m) {
  if (m.is_vertex()) return g.vertex_id(m.vertex);
  std::string out;
  for (auto e : m.real) {
    if (!out.empty()) out += ' ';
    out += g.edge_id(e);
  }
  for (auto it = m.ghost.rbegin(); it != m.ghost.rend(); ++it) {
    if (!out.empty()) out += ' ';
    out += g.edge_id(*it) + "*";
  }
  return out;
}

// One letter of the extended graph: v, e or e*.
struct Generator {
  enum class Kind { vertex, edge, ghost };
  Kind kind;
  std::uint32_t index;

  static Generator of_vertex(VertexIndex v) { return {Kind::vertex, v.value}; }
  static Generator of_edge(EdgeIndex e) { return {Kind::edge, e.value}; }
  static Generator of_ghost(EdgeIndex e) { return {Kind::ghost, e.value}; }

  VertexIndex start(const Graph& g) const {
    switch (kind) {
      case Kind::vertex: return VertexIndex{index};
      case Kind::edge: return g.source(EdgeIndex{index});
      case Kind::ghost: return g.range(EdgeIndex{index});
    }
    return {};
  }
  VertexIndex finish(const Graph& g) const {
    switch (kind) {
      case Kind::vertex: return VertexIndex{index};
      case Kind::edge: return g.range(EdgeIndex{index});
      case Kind::ghost: return g.source(EdgeIndex{index});
    }
    return {};
  }

  friend bool operator==(const Generator&, const Generator&) = default;
  friend auto operator<=>(const Generator&, const Generator&) = default;
};

using RawWord = std::vector<Generator>;

template <class Field>
class Element;

// L_K(E) for a fixed finite graph and field. Fixes the special edge of
// every non-sink vertex (smallest edge id it emits); a monomial p q* is
// canonical unless p and q both end in the same special edge. Rewriting
// gamma gamma* -> v - sum_{e != gamma} e e* yields these normal forms.
template <class Field>
class Algebra : public std::enable_shared_from_this<Algebra<Field>> {
 public:
  using Scalar = typename Field::value_type;
  using Terms = std::map<Monomial, Scalar>;

  static std::shared_ptr<const Algebra> create(Graph graph, Field field) {
    return std::shared_ptr<const Algebra>(new Algebra(std::move(graph), std::move(field)));
  }

  const Graph& graph() const { return graph_; }
  const Field& field() const { return field_; }

  std::optional<EdgeIndex> special_edge(VertexIndex v) const { return special_.at(v.value); }

  bool is_canonical(const Monomial& m) const {
    if (m.real.empty() || m.ghost.empty()) return true;
    EdgeIndex last = m.real.back();
    return !(last == m.ghost.back() && special_edge(graph_.source(last)) == last);
  }

  Element<Field> zero() const { return Element<Field>(self()); }
  Element<Field> scalar(const Scalar& k) const { return one().scaled(k); }
  Element<Field> one() const {
    Element<Field> out(self());
    for (auto v : graph_.all_vertices()) out.terms_.emplace(Monomial::of_vertex(v), field_.one());
    return out;
  }
  Element<Field> vertex(VertexIndex v) const { return monomial(Monomial::of_vertex(v)); }
  Element<Field> vertex(std::string_view id) const { return vertex(graph_.vertex(id)); }
  Element<Field> edge(EdgeIndex e) const { return monomial({{e}, {}, graph_.range(e)}); }
  Element<Field> edge(std::string_view id) const { return edge(graph_.edge_index(id)); }
  Element<Field> ghost(EdgeIndex e) const { return monomial({{}, {e}, graph_.range(e)}); }
  Element<Field> ghost(std::string_view id) const { return ghost(graph_.edge_index(id)); }

  Element<Field> generator(Generator x) const {
    switch (x.kind) {
      case Generator::Kind::vertex: return vertex(VertexIndex{x.index});
      case Generator::Kind::edge: return edge(EdgeIndex{x.index});
      case Generator::Kind::ghost: return ghost(EdgeIndex{x.index});
    }
    return zero();
  }

  // The element p q* for composable paths (normalized if not canonical).
  Element<Field> monomial(const Monomial& m) const { return monomial(m, field_.one()); }
  Element<Field> monomial(const Monomial& m, const Scalar& k) const {
    validate(m);
    Element<Field> out(self());
    accumulate(out.terms_, m, k);
    return out;
  }

  // Product of paths, p as a real path and q as ghost: convenience for tests.
  Element<Field> path_pair(std::vector<EdgeIndex> p, std::vector<EdgeIndex> q) const {
    if (p.empty() && q.empty()) throw AlgebraError("path_pair needs at least one edge");
    VertexIndex v = !p.empty() ? graph_.range(p.back()) : graph_.range(q.back());
    return monomial({std::move(p), std::move(q), v});
  }

  // Normal form of a word in v, e, e*: multiply its letters left to right.
  Element<Field> reduce(const RawWord& word) const {
    if (word.empty()) throw AlgebraError("empty word");
    Element<Field> acc = generator(word.front());
    for (std::size_t i = 1; i < word.size(); ++i) acc = acc * generator(word[i]);
    return acc;
  }

  Element<Field> reduce(const std::vector<std::pair<Scalar, RawWord>>& combination) const {
    Element<Field> acc = zero();
    for (const auto& [k, w] : combination) acc = acc + reduce(w).scaled(k);
    return acc;
  }

  // Adds k * m (m arbitrary, composable) to `out` in normal form.
  void accumulate(Terms& out, Monomial m, const Scalar& k) const {
    while (!is_canonical(m)) {
      EdgeIndex gamma = m.real.back();
      VertexIndex u = graph_.source(gamma);
      m.real.pop_back();
      m.ghost.pop_back();
      m.vertex = u;
      Scalar minus_k = -k;
      for (auto f : graph_.out_edges(u)) {
        if (f == gamma) continue;
        Monomial t = m;
        t.real.push_back(f);
        t.ghost.push_back(f);
        t.vertex = graph_.range(f);
        add_term(out, std::move(t), minus_k);
      }
    }
    add_term(out, std::move(m), k);
  }

  // Adds k * a * b. The junction q_a* p_b resolves by prefix comparison.
  void accumulate_product(Terms& out, const Monomial& a, const Monomial& b,
                          const Scalar& k) const {
    if (a.end(graph_) != b.start(graph_)) return;
    const auto& q = a.ghost;
    const auto& p = b.real;
    std::size_t common = std::min(q.size(), p.size());
    for (std::size_t i = 0; i < common; ++i)
      if (q[i] != p[i]) return;
    Monomial r;
    if (q.size() <= p.size()) {
      r.real = a.real;
      r.real.insert(r.real.end(), p.begin() + q.size(), p.end());
      r.ghost = b.ghost;
      r.vertex = b.vertex;
    } else {
      r.real = a.real;
      r.ghost = b.ghost;
      r.ghost.insert(r.ghost.end(), q.begin() + p.size(), q.end());
      r.vertex = a.vertex;
    }
    accumulate(out, std::move(r), k);
  }

  static void add_term(Terms& out, Monomial m, const Scalar& k) {
    if (Field::is_zero(k)) return;
    auto [it, inserted] = out.try_emplace(std::move(m), k);
    if (!inserted) {
      it->second += k;
      if (Field::is_zero(it->second)) out.erase(it);
    }
  }

  void validate(const Monomial& m) const {
    auto check_path = [&](const std::vector<EdgeIndex>& path) {
      for (std::size_t i = 0; i < path.size(); ++i) {
        if (path[i].value >= graph_.edge_count()) throw UnknownIdError("edge index out of range");
        if (i + 1 < path.size() && graph_.range(path[i]) != graph_.source(path[i + 1]))
          throw AlgebraError("path is not composable");
      }
    };
    if (m.vertex.value >= graph_.vertex_count()) throw UnknownIdError("vertex index out of range");
    check_path(m.real);
    check_path(m.ghost);
    if (!m.real.empty() && graph_.range(m.real.back()) != m.vertex)
      throw AlgebraError("real path does not end at the junction vertex");
    if (!m.ghost.empty() && graph_.range(m.ghost.back()) != m.vertex)
      throw AlgebraError("ghost path does not end at the junction vertex");
  }

 private:
  Algebra(Graph graph, Field field) : graph_(std::move(graph)), field_(std::move(field)) {
    special_.resize(graph_.vertex_count());
    for (auto v : graph_.all_vertices()) {
      auto out = graph_.out_edges(v);
      if (!out.empty()) special_[v.value] = *std::min_element(out.begin(), out.end());
    }
  }

  std::shared_ptr<const Algebra> self() const { return this->shared_from_this(); }

  Graph graph_;
  Field field_;
  std::vector<std::optional<EdgeIndex>> special_;

  friend class Element<Field>;
};

// A finite K-linear combination of canonical monomials. Immutable value;
// even zero remembers its algebra so mixed-graph arithmetic is rejected.
template <class Field>
class Element {
 public:
  using Scalar = typename Field::value_type;
  using AlgebraPtr = std::shared_ptr<const Algebra<Field>>;
  using Terms = std::map<Monomial, Scalar>;

  explicit Element(AlgebraPtr algebra) : algebra_(std::move(algebra)) {}

  const Algebra<Field>& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  const Graph& graph() const { return algebra_->graph(); }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  Scalar coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? algebra_->field().zero() : it->second;
  }

  static Element from_terms(AlgebraPtr algebra, const Terms& terms) {
    Element out(algebra);
    for (const auto& [m, k] : terms) {
      algebra->validate(m);
      algebra->accumulate(out.terms_, m, k);
    }
    return out;
  }

  friend Element operator+(const Element& a, const Element& b) {
    a.check_compatible(b);
    Element out = a;
    for (const auto& [m, k] : b.terms_) Algebra<Field>::add_term(out.terms_, m, k);
    return out;
  }

  friend Element operator-(const Element& a, const Element& b) { return a + (-b); }

  Element operator-() const {
    Element out = *this;
    for (auto& [m, k] : out.terms_) k = -k;
    return out;
  }

  Element scaled(const Scalar& k) const {
    Element out(algebra_);
    if (Field::is_zero(k)) return out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, Scalar(c * k));
    return out;
  }

  friend Element operator*(const Element& a, const Element& b) {
    a.check_compatible(b);
    Element out(a.algebra_);
    for (const auto& [ma, ka] : a.terms_)
      for (const auto& [mb, kb] : b.terms_)
        a.algebra_->accumulate_product(out.terms_, ma, mb, Scalar(ka * kb));
    return out;
  }

  Element& operator+=(const Element& b) { return *this = *this + b; }
  Element& operator-=(const Element& b) { return *this = *this - b; }

  // (p q*)* = q p*, extended K-linearly.
  Element adjoint() const {
    Element out(algebra_);
    for (const auto& [m, k] : terms_) out.terms_.emplace(Monomial{m.ghost, m.real, m.vertex}, k);
    return out;
  }

  // Components by degree |p| - |q|.
  std::map<int, Element> degree_split() const {
    std::map<int, Element> out;
    for (const auto& [m, k] : terms_) {
      auto it = out.try_emplace(m.degree(), algebra_).first;
      it->second.terms_.emplace(m, k);
    }
    return out;
  }

  bool is_homogeneous() const { return degree_split().size() <= 1; }

  std::size_t max_total_length() const {
    std::size_t n = 0;
    for (const auto& [m, k] : terms_) n = std::max(n, m.total_length());
    return n;
  }

  // Vertices at which the support starts or ends; their sum is a local unit.
  std::set<VertexIndex> support_vertices() const {
    std::set<VertexIndex> out;
    for (const auto& [m, k] : terms_) {
      out.insert(m.start(graph()));
      out.insert(m.end(graph()));
    }
    return out;
  }

  std::string to_string() const {
    if (terms_.empty()) return "0";
    const Field& f = algebra_->field();
    std::string out;
    bool first = true;
    for (const auto& [m, k] : terms_) {
      bool negative = Field::is_negative(k);
      Scalar mag = negative ? Scalar(-k) : k;
      if (first)
        out += negative ? "-" : "";
      else
        out += negative ? " - " : " + ";
      if (!(mag == f.one())) out += Field::to_string(mag) + " ";
      out += format_monomial(graph(), m);
      first = false;
    }
    return out;
  }

  friend bool operator==(const Element& a, const Element& b) {
    a.check_compatible(b);
    return a.terms_ == b.terms_;
  }

  void check_compatible(const Element& b) const {
    if (algebra_ == b.algebra_) return;
    if (!(algebra_->graph() == b.algebra_->graph()) ||
        !(algebra_->field() == b.algebra_->field()))
      throw AlgebraError("elements belong to different algebras");
  }

 private:
  AlgebraPtr algebra_;
  Terms terms_;

  friend class Algebra<Field>;
};

// ---------------------------------------------------------------------------
// Graph-level facts about L_K(E).

// All canonical monomials with |p| + |q| <= max_total_length, sorted.
inline std::vector<Monomial> enumerate_basis(const Graph& g, std::size_t max_total_length) {
  // paths_into[v][l]: paths of length l ending at v.
  std::vector<std::vector<std::vector<std::vector<EdgeIndex>>>> paths_into(
      g.vertex_count(), std::vector<std::vector<std::vector<EdgeIndex>>>(max_total_length + 1));
  for (auto v : g.all_vertices()) paths_into[v.value][0].push_back({});
  for (std::size_t len = 1; len <= max_total_length; ++len) {
    for (auto v : g.all_vertices()) {
      for (auto e : g.in_edges(v)) {
        for (const auto& p : paths_into[g.source(e).value][len - 1]) {
          auto q = p;
          q.push_back(e);
          paths_into[v.value][len].push_back(std::move(q));
        }
      }
    }
  }
  std::vector<std::optional<EdgeIndex>> special(g.vertex_count());
  for (auto v : g.all_vertices()) {
    auto out = g.out_edges(v);
    if (!out.empty()) special[v.value] = *std::min_element(out.begin(), out.end());
  }
  std::vector<Monomial> out;
  for (auto v : g.all_vertices()) {
    for (std::size_t lp = 0; lp <= max_total_length; ++lp) {
      for (std::size_t lq = 0; lp + lq <= max_total_length; ++lq) {
        for (const auto& p : paths_into[v.value][lp]) {
          for (const auto& q : paths_into[v.value][lq]) {
            if (!p.empty() && !q.empty() && p.back() == q.back() &&
                special[g.source(p.back()).value] == p.back())
              continue;
            out.push_back({p, q, v});
          }
        }
      }
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

// dim_K L_K(E): finite exactly for acyclic E, then sum over sinks w of
// (number of paths ending at w)^2.
inline std::optional<std::uint64_t> dimension(const Graph& g) {
  if (!is_acyclic(g)) return std::nullopt;
  std::uint64_t d = 0;
  for (auto w : sinks(g)) {
    auto n = count_paths_into(g, w);
    d += n * n;
  }
  return d;
}

// Every relator of L_K(E), as elements (v, e, e* letters and differences).
// Names describe each relator for reporting.
template <class Field>
std::vector<std::pair<std::string, Element<Field>>> ck_relators(
    const std::shared_ptr<const Algebra<Field>>& alg) {
  const Graph& g = alg->graph();
  std::vector<std::pair<std::string, Element<Field>>> out;
  for (auto v : g.all_vertices()) {
    for (auto w : g.all_vertices()) {
      auto expected = v == w ? alg->vertex(v) : alg->zero();
      out.emplace_back("vertex " + g.vertex_id(v) + "*" + g.vertex_id(w),
                       alg->vertex(v) * alg->vertex(w) - expected);
    }
  }
  for (auto e : g.all_edges()) {
    const auto& id = g.edge_id(e);
    out.emplace_back("s(e)e=e for " + id, alg->vertex(g.source(e)) * alg->edge(e) - alg->edge(e));
    out.emplace_back("e r(e)=e for " + id, alg->edge(e) * alg->vertex(g.range(e)) - alg->edge(e));
    out.emplace_back("r(e)e*=e* for " + id,
                     alg->vertex(g.range(e)) * alg->ghost(e) - alg->ghost(e));
    out.emplace_back("e*s(e)=e* for " + id,
                     alg->ghost(e) * alg->vertex(g.source(e)) - alg->ghost(e));
    for (auto f : g.all_edges()) {
      auto expected = e == f ? alg->vertex(g.range(f)) : alg->zero();
      out.emplace_back("CK1 " + id + "* " + g.edge_id(f), alg->ghost(e) * alg->edge(f) - expected);
    }
  }
  for (auto v : g.all_vertices()) {
    if (g.is_sink(v)) continue;
    auto sum = alg->zero();
    for (auto e : g.out_edges(v)) sum += alg->edge(e) * alg->ghost(e);
    out.emplace_back("CK2 at " + g.vertex_id(v), alg->vertex(v) - sum);
  }
  return out;
}

}  // namespace lpa
