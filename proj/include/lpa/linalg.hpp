#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "lpa/algebra.hpp"

namespace lpa {

// Incremental echelon basis of sparse vectors over an exact field.
// Columns are ordered by Key; every stored row has leading coefficient 1
// and distinct leading columns. Optionally tracks each row as a
// combination of the inserted generators, which is what `solve` returns.
template <class Key, class Field>
class EchelonBasis {
 public:
  using Scalar = typename Field::value_type;
  using Vector = std::map<Key, Scalar>;
  using Combination = std::map<std::size_t, Scalar>;

  explicit EchelonBasis(Field field, bool track = true)
      : field_(std::move(field)), track_(track) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t generator_count() const { return generators_; }

  // Inserts generator number generator_count(); true if it was independent.
  bool insert(const Vector& v) {
    std::size_t id = generators_++;
    Combination combo;
    if (track_) combo.emplace(id, field_.one());
    Vector residual = v;
    reduce(residual, combo);
    if (residual.empty()) return false;
    auto lead = residual.begin();
    Scalar inv = Field::inverse(lead->second);
    for (auto& [k, c] : residual) c = c * inv;
    for (auto& [k, c] : combo) c = c * inv;
    std::size_t row = rows_.size();
    pivots_.emplace(lead->first, row);
    rows_.push_back(Row{std::move(residual), std::move(combo)});
    return true;
  }

  bool contains(const Vector& v) const {
    Vector residual = v;
    reduce_untracked(residual);
    return residual.empty();
  }

  // Coefficients c_i with sum c_i * generator_i = v, or nullopt.
  std::optional<Combination> solve(const Vector& v) const {
    Vector residual = v;
    Combination combo;
    // residual = v - sum (coefficient * row); accumulate the subtracted rows.
    for (auto it = residual.begin(); it != residual.end();) {
      auto p = pivots_.find(it->first);
      if (p == pivots_.end()) {
        ++it;
        continue;
      }
      Scalar c = it->second;
      const Row& row = rows_[p->second];
      subtract(residual, row.vec, c, it);
      for (const auto& [g, a] : row.combo) add_to(combo, g, Scalar(a * c));
      it = residual.upper_bound(row.vec.begin()->first);
    }
    if (!residual.empty()) return std::nullopt;
    return combo;
  }

  std::vector<Vector> rows() const {
    std::vector<Vector> out;
    for (const auto& r : rows_) out.push_back(r.vec);
    return out;
  }

 private:
  struct Row {
    Vector vec;
    Combination combo;
  };

  // Forward pass: each row only touches columns after its pivot.
  void reduce(Vector& residual, Combination& combo) const {
    for (auto it = residual.begin(); it != residual.end();) {
      auto p = pivots_.find(it->first);
      if (p == pivots_.end()) {
        ++it;
        continue;
      }
      Scalar c = it->second;
      const Row& row = rows_[p->second];
      Key pivot = it->first;
      subtract(residual, row.vec, c, it);
      if (track_)
        for (const auto& [g, a] : row.combo) add_to(combo, g, Scalar(-(a * c)));
      it = residual.upper_bound(pivot);
    }
  }

  void reduce_untracked(Vector& residual) const {
    for (auto it = residual.begin(); it != residual.end();) {
      auto p = pivots_.find(it->first);
      if (p == pivots_.end()) {
        ++it;
        continue;
      }
      Scalar c = it->second;
      Key pivot = it->first;
      subtract(residual, rows_[p->second].vec, c, it);
      it = residual.upper_bound(pivot);
    }
  }

  // residual -= c * row; `at` points at the pivot entry, which vanishes.
  static void subtract(Vector& residual, const Vector& row, const Scalar& c,
                       typename Vector::iterator at) {
    residual.erase(at);
    auto r = row.begin();
    for (++r; r != row.end(); ++r) {
      Scalar delta = -(r->second * c);
      auto [slot, inserted] = residual.try_emplace(r->first, delta);
      if (!inserted) {
        slot->second += delta;
        if (Field::is_zero(slot->second)) residual.erase(slot);
      }
    }
  }

  static void add_to(Combination& combo, std::size_t g, const Scalar& a) {
    if (Field::is_zero(a)) return;
    auto [it, inserted] = combo.try_emplace(g, a);
    if (!inserted) {
      it->second += a;
      if (Field::is_zero(it->second)) combo.erase(it);
    }
  }

  Field field_;
  bool track_;
  std::size_t generators_ = 0;
  std::vector<Row> rows_;
  std::map<Key, std::size_t> pivots_;
};

template <class Field>
using ElementBasis = EchelonBasis<Monomial, Field>;

// Rank of a family of elements (all over the same algebra).
template <class Field>
std::size_t rank_of(const std::vector<Element<Field>>& xs, const Field& field) {
  ElementBasis<Field> basis(field, false);
  for (const auto& x : xs) basis.insert(x.terms());
  return basis.rank();
}

// Span equality via rank(A) = rank(B) = rank(A u B).
template <class Field>
bool same_span(const std::vector<Element<Field>>& a, const std::vector<Element<Field>>& b,
               const Field& field) {
  ElementBasis<Field> ea(field, false), eb(field, false);
  for (const auto& x : a) ea.insert(x.terms());
  for (const auto& x : b) eb.insert(x.terms());
  if (ea.rank() != eb.rank()) return false;
  for (const auto& x : b)
    if (!ea.contains(x.terms())) return false;
  return true;
}

}  // namespace lpa
