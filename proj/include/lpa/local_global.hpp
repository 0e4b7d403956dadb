#pragma once

#include <algorithm>
#include <map>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "lpa/algebra.hpp"
#include "lpa/linalg.hpp"
#include "lpa/quiver.hpp"
#include "lpa/report.hpp"

namespace lpa {

// ---------------------------------------------------------------------------
// The graph E_F.
//
//   E_F^0 = F u (r(F) n s(F) n s(E^1 \ F)) u (r(F) \ s(F))
//   E_F^1 = {(e, y) : e in F, y in E_F^0, r(e) = sigma(y)}
//
// with sigma(f) = s(f) for an edge-type vertex f and sigma(v) = v for a
// vertex-type v. s((e, y)) = e and r((e, y)) = y.

enum class EFVertexKind { edge, middle, range };

struct EFGraph {
  Graph host;
  std::vector<EdgeIndex> F;           // sorted, host edge indices
  Graph graph;                        // E_F itself
  std::vector<EFVertexKind> kind;     // per E_F vertex
  std::vector<std::uint32_t> origin;  // host edge index (edge kind) or host vertex index
  std::vector<EdgeIndex> tail;        // per E_F edge (e, y): the host edge e

  EdgeIndex host_edge(VertexIndex x) const { return EdgeIndex{origin.at(x.value)}; }
  VertexIndex host_vertex(VertexIndex x) const { return VertexIndex{origin.at(x.value)}; }
  bool is_edge_type(VertexIndex x) const { return kind.at(x.value) == EFVertexKind::edge; }

  // The E_F vertex standing for host edge e in F / host vertex v, if any.
  std::optional<VertexIndex> vertex_for_edge(EdgeIndex e) const {
    return graph.find_vertex(host.edge_id(e));
  }
  std::optional<VertexIndex> vertex_for_vertex(VertexIndex v) const {
    return graph.find_vertex(host.vertex_id(v));
  }
};

inline std::string ef_edge_id(const std::string& x, const std::string& y) {
  return "(" + x + "," + y + ")";
}

inline EFGraph build_ef(const Graph& g, std::vector<EdgeIndex> F) {
  std::sort(F.begin(), F.end());
  F.erase(std::unique(F.begin(), F.end()), F.end());
  for (auto e : F)
    if (e.value >= g.edge_count()) throw UnknownIdError("edge index out of range");

  std::vector<bool> in_F(g.edge_count(), false);
  for (auto e : F) in_F[e.value] = true;
  std::set<VertexIndex> rF, sF, s_rest;
  for (auto e : F) {
    rF.insert(g.range(e));
    sF.insert(g.source(e));
  }
  for (auto e : g.all_edges())
    if (!in_F[e.value]) s_rest.insert(g.source(e));

  struct Node {
    std::string id;
    EFVertexKind kind;
    std::uint32_t origin;
    VertexIndex sigma;  // host vertex that incoming E_F edges must end at
  };
  std::vector<Node> nodes;
  for (auto e : F) nodes.push_back({g.edge_id(e), EFVertexKind::edge, e.value, g.source(e)});
  for (auto v : rF) {
    if (sF.contains(v) && s_rest.contains(v))
      nodes.push_back({g.vertex_id(v), EFVertexKind::middle, v.value, v});
    else if (!sF.contains(v))
      nodes.push_back({g.vertex_id(v), EFVertexKind::range, v.value, v});
  }

  std::vector<std::string> vertex_ids;
  for (const auto& n : nodes) vertex_ids.push_back(n.id);
  std::vector<EdgeSpec> edges;
  std::map<std::string, EdgeIndex> tail_of;
  for (auto e : F) {
    for (const auto& n : nodes) {
      if (g.range(e) != n.sigma) continue;
      std::string id = ef_edge_id(g.edge_id(e), n.id);
      edges.push_back({id, g.edge_id(e), n.id});
      tail_of[id] = e;
    }
  }

  EFGraph out;
  out.host = g;
  out.F = F;
  out.graph = Graph(vertex_ids, edges);
  out.kind.resize(out.graph.vertex_count());
  out.origin.resize(out.graph.vertex_count());
  for (const auto& n : nodes) {
    auto x = out.graph.vertex(n.id);
    out.kind[x.value] = n.kind;
    out.origin[x.value] = n.origin;
  }
  for (auto x : out.graph.all_edges()) out.tail.push_back(tail_of.at(out.graph.edge_id(x)));
  return out;
}

inline EFGraph build_ef(const Graph& g, const std::vector<std::string>& F_ids) {
  std::vector<EdgeIndex> F;
  for (const auto& id : F_ids) F.push_back(g.edge_index(id));
  return build_ef(g, std::move(F));
}

// E acyclic implies E_F acyclic. Vacuous (and reported as such) otherwise.
inline Report acyclicity_transfer_check(const Graph& g, const std::vector<EdgeIndex>& F) {
  Report r;
  EFGraph ef = build_ef(g, F);
  if (!is_acyclic(g)) {
    r.add("acyclicity transfer (vacuous: E has a cycle)", true);
    return r;
  }
  auto c = find_cycle(ef.graph);
  r.add("acyclicity transfer", !c.has_value(),
        c ? "E_F cycle " + format_edges(ef.graph, c->edges) : std::string{});
  return r;
}

// ---------------------------------------------------------------------------
// theta : L_K(E_F) -> L_K(E).

template <class Field>
class Theta {
 public:
  using AlgebraPtr = std::shared_ptr<const Algebra<Field>>;
  using Elem = Element<Field>;

  Theta(AlgebraPtr host, EFGraph ef) : host_(std::move(host)), ef_(std::move(ef)) {
    if (!(host_->graph() == ef_.host)) throw AlgebraError("E_F was built over a different graph");
    source_ = Algebra<Field>::create(ef_.graph, host_->field());
    const Graph& g = ef_.host;
    const Graph& eg = ef_.graph;

    // sum_{f in F, s(f) = v} f f*
    auto projection_sum = [&](VertexIndex v) {
      Elem sum = host_->zero();
      for (auto f : ef_.F)
        if (g.source(f) == v) sum += host_->edge(f) * host_->ghost(f);
      return sum;
    };
    for (auto x : eg.all_vertices()) {
      switch (ef_.kind[x.value]) {
        case EFVertexKind::edge: {
          auto e = ef_.host_edge(x);
          vertex_images_.push_back(host_->edge(e) * host_->ghost(e));
          break;
        }
        case EFVertexKind::middle: {
          auto v = ef_.host_vertex(x);
          vertex_images_.push_back(host_->vertex(v) - projection_sum(v));
          break;
        }
        case EFVertexKind::range:
          vertex_images_.push_back(host_->vertex(ef_.host_vertex(x)));
          break;
      }
    }
    for (auto x : eg.all_edges()) {
      EdgeIndex e = ef_.tail[x.value];
      VertexIndex y = eg.range(x);
      switch (ef_.kind[y.value]) {
        case EFVertexKind::edge: {
          auto f = ef_.host_edge(y);
          edge_images_.push_back(host_->edge(e) * host_->edge(f) * host_->ghost(f));
          break;
        }
        case EFVertexKind::middle:
          edge_images_.push_back(host_->edge(e) - host_->edge(e) * projection_sum(g.range(e)));
          break;
        case EFVertexKind::range:
          edge_images_.push_back(host_->edge(e));
          break;
      }
    }
  }

  const EFGraph& ef() const { return ef_; }
  const AlgebraPtr& host() const { return host_; }
  const AlgebraPtr& source() const { return source_; }

  const Elem& vertex_image(VertexIndex x) const { return vertex_images_.at(x.value); }
  const Elem& edge_image(EdgeIndex x) const { return edge_images_.at(x.value); }
  Elem ghost_image(EdgeIndex x) const { return edge_image(x).adjoint(); }

  Elem image(const Monomial& m) const {
    if (m.is_vertex()) return vertex_image(m.vertex);
    Elem out = vertex_image(m.real.empty() ? m.vertex : ef_.graph.source(m.real.front()));
    for (auto x : m.real) out = out * edge_image(x);
    for (auto it = m.ghost.rbegin(); it != m.ghost.rend(); ++it) out = out * ghost_image(*it);
    return out;
  }

  Elem operator()(const Elem& a) const {
    if (!(a.graph() == ef_.graph)) throw AlgebraError("element is not over E_F");
    Elem out = host_->zero();
    for (const auto& [m, k] : a.terms()) out += image(m).scaled(k);
    return out;
  }

  // An E_F element whose image is the host vertex w, for w in r(F) or
  // with nonempty s^{-1}(w) inside F: [w] + sum_{f in F, s(f) = w} [f].
  Elem vertex_preimage(VertexIndex w) const {
    Elem pre = source_->zero();
    if (auto x = ef_.vertex_for_vertex(w)) pre += source_->vertex(*x);
    for (auto f : ef_.F)
      if (ef_.host.source(f) == w) pre += source_->vertex(*ef_.vertex_for_edge(f));
    return pre;
  }

  // The sum of the E_F edges (e, y) over all y; its image is e.
  Elem edge_preimage(EdgeIndex e) const {
    Elem pre = source_->zero();
    auto x = ef_.vertex_for_edge(e);
    if (!x) return pre;
    for (auto y : ef_.graph.out_edges(*x)) pre += source_->edge(y);
    return pre;
  }

 private:
  AlgebraPtr host_;
  EFGraph ef_;
  AlgebraPtr source_;
  std::vector<Elem> vertex_images_;
  std::vector<Elem> edge_images_;
};

// Checks that theta kills every relator of E_F, is graded, and satisfies
//   (1) F u F* lies in Im(theta),
//   (2) r(F) lies in Im(theta),
//   (3) w with nonempty s^{-1}(w) inside F lies in Im(theta),
// each with an explicit preimage.
template <class Field>
Report verify_theta_homomorphism(const Theta<Field>& theta, std::size_t monomial_bound = 2) {
  Report r;
  const EFGraph& ef = theta.ef();
  const Graph& eg = ef.graph;
  const Graph& g = ef.host;
  const auto& host = theta.host();
  auto name = [&](VertexIndex x) { return eg.vertex_id(x); };

  auto expect_zero = [&](const std::string& what, const Element<Field>& x) {
    r.add(what, x.is_zero(), x.is_zero() ? std::string{} : "residue " + x.to_string());
  };

  for (auto x : eg.all_vertices()) {
    for (auto y : eg.all_vertices()) {
      auto prod = theta.vertex_image(x) * theta.vertex_image(y);
      auto expected = x == y ? theta.vertex_image(x) : host->zero();
      expect_zero("vertex relation " + name(x) + "." + name(y), prod - expected);
    }
  }
  for (auto a : eg.all_edges()) {
    const auto& id = eg.edge_id(a);
    const auto& ea = theta.edge_image(a);
    expect_zero("s(e)e=e for " + id, theta.vertex_image(eg.source(a)) * ea - ea);
    expect_zero("e r(e)=e for " + id, ea * theta.vertex_image(eg.range(a)) - ea);
    for (auto b : eg.all_edges()) {
      auto prod = theta.ghost_image(a) * theta.edge_image(b);
      auto expected = a == b ? theta.vertex_image(eg.range(b)) : host->zero();
      expect_zero("CK1 " + id + "* " + eg.edge_id(b), prod - expected);
    }
  }
  for (auto x : eg.all_vertices()) {
    if (eg.is_sink(x)) continue;
    auto sum = host->zero();
    for (auto a : eg.out_edges(x)) sum += theta.edge_image(a) * theta.ghost_image(a);
    expect_zero("CK2 at " + name(x), theta.vertex_image(x) - sum);
  }

  // Grading, on generators and on every canonical monomial up to the bound.
  bool graded = true;
  std::string bad;
  for (const auto& m : enumerate_basis(eg, monomial_bound)) {
    auto split = theta.image(m).degree_split();
    if (split.size() > 1 || (split.size() == 1 && split.begin()->first != m.degree())) {
      graded = false;
      bad = format_monomial(eg, m);
      break;
    }
    if (split.empty()) {
      graded = false;
      bad = format_monomial(eg, m) + " maps to 0";
      break;
    }
  }
  r.add("theta preserves degree", graded, bad);

  for (auto e : ef.F) {
    auto pre = theta.edge_preimage(e);
    auto img = theta(pre);
    r.add("(1) " + g.edge_id(e) + " in Im(theta)", img == host->edge(e),
          "theta(" + pre.to_string() + ") = " + img.to_string());
    auto img_star = theta(pre.adjoint());
    r.add("(1) " + g.edge_id(e) + "* in Im(theta)", img_star == host->ghost(e),
          "theta(" + pre.adjoint().to_string() + ") = " + img_star.to_string());
  }
  std::set<VertexIndex> rF;
  for (auto e : ef.F) rF.insert(g.range(e));
  for (auto w : rF) {
    auto pre = theta.vertex_preimage(w);
    auto img = theta(pre);
    r.add("(2) " + g.vertex_id(w) + " in Im(theta)", img == host->vertex(w),
          "theta(" + pre.to_string() + ") = " + img.to_string());
  }
  std::set<EdgeIndex> in_F(ef.F.begin(), ef.F.end());
  for (auto w : g.all_vertices()) {
    auto out = g.out_edges(w);
    if (out.empty()) continue;
    if (!std::all_of(out.begin(), out.end(), [&](EdgeIndex e) { return in_F.contains(e); }))
      continue;
    auto pre = theta.vertex_preimage(w);
    auto img = theta(pre);
    r.add("(3) " + g.vertex_id(w) + " in Im(theta)", img == host->vertex(w),
          "theta(" + pre.to_string() + ") = " + img.to_string());
  }
  return r;
}

// ---------------------------------------------------------------------------
// The S-partition of a finite family a_1..a_l.

struct SPartition {
  std::vector<EdgeIndex> F;
  std::vector<VertexIndex> S, S1, S2, S3, S4;
};

template <class Field>
SPartition extract_context(const std::vector<Element<Field>>& as) {
  if (as.empty()) throw AlgebraError("no elements given");
  for (const auto& a : as) {
    a.check_compatible(as.front());
    if (a.is_zero()) throw AlgebraError("zero element in input");
  }
  const Graph& g = as.front().graph();
  std::set<EdgeIndex> F;
  std::set<VertexIndex> S;
  for (const auto& a : as) {
    for (const auto& [m, k] : a.terms()) {
      if (m.is_vertex()) {
        S.insert(m.vertex);
      } else {
        F.insert(m.real.begin(), m.real.end());
        F.insert(m.ghost.begin(), m.ghost.end());
      }
    }
  }
  SPartition p;
  p.F.assign(F.begin(), F.end());
  p.S.assign(S.begin(), S.end());
  std::set<VertexIndex> rF;
  for (auto e : F) rF.insert(g.range(e));
  for (auto v : S) {
    if (rF.contains(v)) {
      p.S1.push_back(v);
      continue;
    }
    std::size_t in = 0, out = 0;
    for (auto e : g.out_edges(v)) (F.contains(e) ? in : out)++;
    if (in > 0 && out == 0)
      p.S2.push_back(v);
    else if (in == 0)
      p.S3.push_back(v);
    else
      p.S4.push_back(v);
  }
  return p;
}

// ---------------------------------------------------------------------------
// B(a_1..a_l) = <Im(theta), S3, S4> = Im(theta) (+) K S3 (+) K u_w.

template <class Field>
struct SubalgebraDecomposition {
  SPartition partition;
  Theta<Field> theta;
  std::vector<Element<Field>> s3;                   // the vertices of S3
  std::vector<std::pair<VertexIndex, Element<Field>>> s4;  // (w, u_w)

  // Generators of the algebra B: theta of E_F vertices, edges and ghosts,
  // then S3, then u_w.
  std::vector<Element<Field>> generators() const {
    std::vector<Element<Field>> out;
    const Graph& eg = theta.ef().graph;
    for (auto x : eg.all_vertices()) out.push_back(theta.vertex_image(x));
    for (auto x : eg.all_edges()) {
      out.push_back(theta.edge_image(x));
      out.push_back(theta.ghost_image(x));
    }
    for (const auto& v : s3) out.push_back(v);
    for (const auto& [w, u] : s4) out.push_back(u);
    return out;
  }

  // The orthogonal idempotents epsilon_i of the ring direct sum.
  std::vector<Element<Field>> idempotents() const {
    std::vector<Element<Field>> out = s3;
    for (const auto& [w, u] : s4) out.push_back(u);
    return out;
  }

  // Unit of B: theta(1_{E_F}) + sum of the epsilon_i.
  Element<Field> unit() const {
    auto one = theta.host()->zero();
    for (auto x : theta.ef().graph.all_vertices()) one += theta.vertex_image(x);
    for (const auto& e : idempotents()) one += e;
    return one;
  }

  std::size_t max_generator_length() const {
    std::size_t n = 0;
    for (const auto& x : generators()) n = std::max(n, x.max_total_length());
    return n;
  }
};

template <class Field>
SubalgebraDecomposition<Field> build_b(const std::vector<Element<Field>>& as) {
  SPartition p = extract_context(as);
  const auto& host = as.front().algebra_ptr();
  const Graph& g = host->graph();
  Theta<Field> theta(host, build_ef(g, p.F));
  std::vector<Element<Field>> s3;
  for (auto v : p.S3) s3.push_back(host->vertex(v));
  std::vector<std::pair<VertexIndex, Element<Field>>> s4;
  for (auto w : p.S4) {
    auto u = host->vertex(w);
    for (auto f : p.F)
      if (g.source(f) == w) u -= host->edge(f) * host->ghost(f);
    s4.emplace_back(w, u);
  }
  return {std::move(p), std::move(theta), std::move(s3), std::move(s4)};
}

// Coefficients expressing x in the bounded spanning set of B.
template <class Field>
struct Membership {
  using Scalar = typename Field::value_type;
  std::vector<std::pair<Monomial, Scalar>> theta_terms;  // E_F monomials
  std::vector<std::pair<VertexIndex, Scalar>> s3_terms;
  std::vector<std::pair<VertexIndex, Scalar>> s4_terms;
};

// Spanning set of B at a degree bound: theta(m) for canonical E_F
// monomials m with |m| <= bound (optionally only in given degrees), then
// the S3 vertices, then the u_w.
template <class Field>
struct BoundedSpan {
  std::vector<Monomial> ef_monomials;
  std::vector<Element<Field>> vectors;  // theta images, then S3, then u_w
};

template <class Field>
BoundedSpan<Field> bounded_span(const SubalgebraDecomposition<Field>& b, std::size_t bound,
                                const std::set<int>* degrees = nullptr) {
  BoundedSpan<Field> out;
  for (auto& m : enumerate_basis(b.theta.ef().graph, bound)) {
    if (degrees && !degrees->contains(m.degree())) continue;
    out.vectors.push_back(b.theta.image(m));
    out.ef_monomials.push_back(std::move(m));
  }
  if (!degrees || degrees->contains(0)) {
    for (const auto& v : b.s3) out.vectors.push_back(v);
    for (const auto& [w, u] : b.s4) out.vectors.push_back(u);
  }
  return out;
}

template <class Field>
std::optional<Membership<Field>> membership(const SubalgebraDecomposition<Field>& b,
                                            const Element<Field>& x, std::size_t bound) {
  std::set<int> degrees;
  for (const auto& [d, part] : x.degree_split()) degrees.insert(d);
  if (x.is_zero()) return Membership<Field>{};
  auto span = bounded_span(b, bound, &degrees);
  const Field& field = x.algebra().field();
  ElementBasis<Field> basis(field, true);
  for (const auto& v : span.vectors) basis.insert(v.terms());
  auto combo = basis.solve(x.terms());
  if (!combo) return std::nullopt;

  Membership<Field> out;
  const std::size_t n_theta = span.ef_monomials.size();
  const bool has_units = degrees.contains(0);
  auto recon = x.algebra().zero();
  for (const auto& [i, k] : *combo) {
    recon += span.vectors[i].scaled(k);
    if (i < n_theta) {
      out.theta_terms.emplace_back(span.ef_monomials[i], k);
    } else if (has_units && i < n_theta + b.s3.size()) {
      out.s3_terms.emplace_back(b.partition.S3[i - n_theta], k);
    } else {
      out.s4_terms.emplace_back(b.s4[i - n_theta - b.s3.size()].first, k);
    }
  }
  if (!(recon == x)) throw AlgebraError("membership certificate does not reconstruct x");
  return out;
}

// (i) u_w idempotent, (ii) epsilon parts orthogonal to each other and to
// the generators of Im(theta) on both sides, (iii) joint linear
// independence of the bounded spanning set, (iv) u_w homogeneous of degree 0.
template <class Field>
Report verify_decomposition(const SubalgebraDecomposition<Field>& b, std::size_t bound) {
  Report r;
  const Graph& g = b.theta.ef().host;
  auto label = [&](std::size_t i) {
    return i < b.s3.size() ? "S3 vertex " + g.vertex_id(b.partition.S3[i])
                           : "u_" + g.vertex_id(b.s4[i - b.s3.size()].first);
  };
  auto eps = b.idempotents();
  for (std::size_t i = 0; i < eps.size(); ++i) {
    auto sq = eps[i] * eps[i];
    r.add("idempotent " + label(i), sq == eps[i], sq == eps[i] ? "" : "square " + sq.to_string());
    auto split = eps[i].degree_split();
    r.add("homogeneous degree 0 " + label(i), split.size() == 1 && split.begin()->first == 0);
    for (std::size_t j = 0; j < eps.size(); ++j) {
      if (i == j) continue;
      auto prod = eps[i] * eps[j];
      r.add("orthogonal " + label(i) + " . " + label(j), prod.is_zero(), prod.to_string());
    }
  }
  std::vector<std::pair<std::string, Element<Field>>> theta_gens;
  const Graph& eg = b.theta.ef().graph;
  for (auto x : eg.all_vertices())
    theta_gens.emplace_back("theta(" + eg.vertex_id(x) + ")", b.theta.vertex_image(x));
  for (auto x : eg.all_edges()) {
    theta_gens.emplace_back("theta(" + eg.edge_id(x) + ")", b.theta.edge_image(x));
    theta_gens.emplace_back("theta(" + eg.edge_id(x) + "*)", b.theta.ghost_image(x));
  }
  for (std::size_t i = 0; i < eps.size(); ++i) {
    bool ok = true;
    std::string witness;
    for (const auto& [name, t] : theta_gens) {
      auto left = eps[i] * t;
      auto right = t * eps[i];
      if (!left.is_zero() || !right.is_zero()) {
        ok = false;
        witness = name;
        break;
      }
    }
    r.add("orthogonal to Im(theta): " + label(i), ok, witness);
  }

  auto span = bounded_span(b, bound);
  ElementBasis<Field> basis(b.theta.host()->field(), false);
  std::size_t dependent_at = span.vectors.size();
  for (std::size_t i = 0; i < span.vectors.size(); ++i) {
    if (!basis.insert(span.vectors[i].terms())) {
      dependent_at = i;
      break;
    }
  }
  std::string witness;
  if (dependent_at < span.vectors.size()) {
    witness = dependent_at < span.ef_monomials.size()
                  ? "theta(" + format_monomial(eg, span.ef_monomials[dependent_at]) + ")"
                  : label(dependent_at - span.ef_monomials.size());
  }
  r.add("joint linear independence at bound " + std::to_string(bound) + " (" +
            std::to_string(span.vectors.size()) + " vectors)",
        dependent_at == span.vectors.size(), witness);
  return r;
}

// Every generator of B(S) lies in B(S') at the bound, for S a subfamily of S'.
template <class Field>
Report directedness_check(const std::vector<Element<Field>>& S,
                          const std::vector<Element<Field>>& S_prime, std::size_t bound) {
  Report r;
  auto small = build_b(S);
  auto large = build_b(S_prime);
  auto gens = small.generators();
  for (std::size_t i = 0; i < gens.size(); ++i) {
    auto found = membership(large, gens[i], bound);
    r.add("generator " + gens[i].to_string() + " in B(S')", found.has_value());
  }
  return r;
}

// ---------------------------------------------------------------------------
// Cycle lifting: (f1,f2)(f2,f3)..(fn,f1) in E_F lifts to f1 f2 .. fn in E.

struct CycleLift {
  std::vector<EdgeIndex> lifted;      // closed path f1..fn in the host
  bool lifted_is_cycle = false;       // sources pairwise distinct
  bool ef_has_exit = false;
  std::optional<Cycle> host_cycle;    // a cycle of E inside the lift with an exit
  std::optional<EdgeIndex> host_exit;
  bool exit_preserved() const { return !ef_has_exit || host_exit.has_value(); }
};

inline CycleLift lift_cycle(const EFGraph& ef, const Cycle& c) {
  if (!is_cycle(ef.graph, c)) throw AlgebraError("not a cycle of E_F");
  CycleLift out;
  for (auto x : c.edges) {
    VertexIndex from = ef.graph.source(x);
    if (!ef.is_edge_type(from))
      throw AlgebraError("E_F cycle passes through vertex-type vertex " + ef.graph.vertex_id(from));
    out.lifted.push_back(ef.host_edge(from));
  }
  const Graph& g = ef.host;
  Cycle as_cycle{out.lifted};
  out.lifted_is_cycle = is_cycle(g, as_cycle);
  if (!out.lifted_is_cycle) {
    // Still a closed path: consecutive edges compose and it returns home.
    for (std::size_t i = 0; i < out.lifted.size(); ++i)
      if (g.range(out.lifted[i]) != g.source(out.lifted[(i + 1) % out.lifted.size()]))
        throw AlgebraError("lift is not a closed path");
  }
  out.ef_has_exit = cycle_has_exit(ef.graph, c);

  // Cycles of E made of lift edges; a closed path that is not itself a
  // cycle repeats a vertex, and a cycle through it misses one of the two
  // lift edges leaving it.
  std::vector<std::string> vids = g.vertex_ids();
  std::vector<EdgeSpec> specs;
  std::set<EdgeIndex> used(out.lifted.begin(), out.lifted.end());
  for (auto e : used) specs.push_back({g.edge_id(e), g.vertex_id(g.source(e)), g.vertex_id(g.range(e))});
  Graph sub(vids, specs);
  for (const auto& sc : simple_cycles(sub)) {
    Cycle hc;
    for (auto e : sc.edges) hc.edges.push_back(g.edge_index(sub.edge_id(e)));
    if (!out.host_cycle) out.host_cycle = hc;
    if (auto ex = cycle_exit(g, hc)) {
      out.host_cycle = hc;
      out.host_exit = ex;
      break;
    }
  }
  return out;
}

}  // namespace lpa
