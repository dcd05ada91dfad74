#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "lazard/error.hpp"
#include "lazard/rational.hpp"

namespace lazard {

/// Sparse row vector: (column, value) pairs sorted by column, no stored zeros.
class SparseVector {
public:
  using Entry = std::pair<std::size_t, Rational>;

  SparseVector() = default;

  /// Builds from arbitrary (column, value) pairs; duplicates are summed and zeros dropped.
  static SparseVector from_entries(std::vector<Entry> entries) {
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    SparseVector v;
    for (auto& [col, val] : entries) {
      if (!v.entries_.empty() && v.entries_.back().first == col)
        v.entries_.back().second += val;
      else
        v.entries_.emplace_back(col, std::move(val));
      if (v.entries_.back().second.is_zero())
        v.entries_.pop_back();
    }
    return v;
  }

  static SparseVector from_dense(const std::vector<Rational>& dense) {
    SparseVector v;
    for (std::size_t i = 0; i < dense.size(); ++i)
      if (!dense[i].is_zero())
        v.entries_.emplace_back(i, dense[i]);
    return v;
  }

  bool empty() const { return entries_.empty(); }
  std::size_t nnz() const { return entries_.size(); }
  const std::vector<Entry>& entries() const { return entries_; }
  std::size_t leading_column() const { return entries_.front().first; }
  const Rational& leading_value() const { return entries_.front().second; }

  Rational at(std::size_t col) const {
    auto it = find(col);
    return it == entries_.end() ? Rational() : it->second;
  }

  /// this += factor * other
  void add_scaled(const Rational& factor, const SparseVector& other) {
    if (factor.is_zero() || other.empty())
      return;
    std::vector<Entry> out;
    out.reserve(entries_.size() + other.entries_.size());
    auto a = entries_.begin();
    auto b = other.entries_.begin();
    while (a != entries_.end() || b != other.entries_.end()) {
      if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
        out.push_back(std::move(*a++));
      } else if (a == entries_.end() || b->first < a->first) {
        out.emplace_back(b->first, factor * b->second);
        ++b;
      } else {
        Rational s = a->second + factor * b->second;
        if (!s.is_zero())
          out.emplace_back(a->first, std::move(s));
        ++a;
        ++b;
      }
    }
    entries_ = std::move(out);
  }

  void scale(const Rational& factor) {
    if (factor.is_zero()) {
      entries_.clear();
      return;
    }
    for (auto& e : entries_)
      e.second *= factor;
  }

  friend bool operator==(const SparseVector&, const SparseVector&) = default;

private:
  std::vector<Entry>::const_iterator find(std::size_t col) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), col,
                               [](const Entry& e, std::size_t c) { return e.first < c; });
    return (it != entries_.end() && it->first == col) ? it : entries_.end();
  }

  std::vector<Entry> entries_;
};

struct SparseMatrix {
  std::vector<SparseVector> rows;
  std::size_t ncols = 0;

  void append(SparseVector row) {
    if (!row.empty() && row.entries().back().first >= ncols)
      throw InputError("sparse row has column index beyond matrix width");
    rows.push_back(std::move(row));
  }
};

/// Residual of v after eliminating every pivot column of an echelon basis
/// (rows sorted by strictly increasing leading column, leading value 1).
inline SparseVector reduce_against(SparseVector v, const std::vector<SparseVector>& basis) {
  for (const auto& row : basis) {
    if (v.empty())
      break;
    Rational c = v.at(row.leading_column());
    if (!c.is_zero())
      v.add_scaled(-c, row);
  }
  return v;
}

/// Row-echelon basis maintained incrementally as rows stream in.
class EchelonBasis {
public:
  explicit EchelonBasis(std::size_t ncols = 0) : ncols_(ncols) {}

  std::size_t rank() const { return rows_.size(); }
  std::size_t ncols() const { return ncols_; }
  bool full() const { return rows_.size() == ncols_; }
  const std::vector<SparseVector>& rows() const { return rows_; }

  SparseVector residual(const SparseVector& v) const { return reduce_against(v, rows_); }
  bool contains(const SparseVector& v) const { return residual(v).empty(); }

  /// Adds v to the span; returns true iff the rank grew.
  bool insert(const SparseVector& v) {
    SparseVector r = residual(v);
    if (r.empty())
      return false;
    r.scale(Rational(1) / r.leading_value());
    auto pos = std::lower_bound(rows_.begin(), rows_.end(), r.leading_column(),
                                [](const SparseVector& row, std::size_t c) {
                                  return row.leading_column() < c;
                                });
    rows_.insert(pos, std::move(r));
    return true;
  }

  /// Fully reduced echelon form; unique for a given row space.
  std::vector<SparseVector> reduced() const {
    std::vector<SparseVector> out = rows_;
    for (std::size_t i = out.size(); i-- > 0;) {
      for (std::size_t k = 0; k < i; ++k) {
        Rational c = out[k].at(out[i].leading_column());
        if (!c.is_zero())
          out[k].add_scaled(-c, out[i]);
      }
    }
    return out;
  }

private:
  std::size_t ncols_;
  std::vector<SparseVector> rows_;
};

struct RowReduction {
  std::size_t rank = 0;
  std::vector<SparseVector> basis; // reduced echelon form
};

/// Gaussian elimination choosing the pivot with the smallest leading column,
/// ties broken by the sparsest row, then by original position.
inline RowReduction row_reduce(const SparseMatrix& m) {
  std::vector<SparseVector> work;
  for (const auto& r : m.rows)
    if (!r.empty())
      work.push_back(r);
  std::vector<SparseVector> pivots;
  while (!work.empty()) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < work.size(); ++i) {
      const auto& a = work[i];
      const auto& b = work[best];
      if (a.leading_column() < b.leading_column() ||
          (a.leading_column() == b.leading_column() && a.nnz() < b.nnz()))
        best = i;
    }
    SparseVector pivot = std::move(work[best]);
    work.erase(work.begin() + static_cast<std::ptrdiff_t>(best));
    pivot.scale(Rational(1) / pivot.leading_value());
    std::vector<SparseVector> next;
    next.reserve(work.size());
    for (auto& r : work) {
      Rational c = r.at(pivot.leading_column());
      if (!c.is_zero())
        r.add_scaled(-c, pivot);
      if (!r.empty())
        next.push_back(std::move(r));
    }
    work = std::move(next);
    pivots.push_back(std::move(pivot));
  }
  // back-substitute to the reduced form
  for (std::size_t i = pivots.size(); i-- > 0;)
    for (std::size_t k = 0; k < i; ++k) {
      Rational c = pivots[k].at(pivots[i].leading_column());
      if (!c.is_zero())
        pivots[k].add_scaled(-c, pivots[i]);
    }
  return {pivots.size(), std::move(pivots)};
}

} // namespace lazard
