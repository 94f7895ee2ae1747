#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dimgroup/error.hpp"
#include "dimgroup/rational.hpp"
#include "dimgroup/scalar_field.hpp"

namespace dimgroup {

using RationalVector = std::vector<Rational>;
using RationalMatrix = std::vector<RationalVector>;  // row-major

/// Reduced row echelon basis of a row space.
class RowSpace {
 public:
  explicit RowSpace(std::size_t dim) : dim_(dim) {}
  RowSpace(std::size_t dim, const RationalMatrix& rows) : dim_(dim) {
    for (const auto& r : rows) insert(r);
  }

  std::size_t dim() const { return dim_; }
  std::size_t rank() const { return basis_.size(); }
  const RationalMatrix& basis() const { return basis_; }

  /// Adds v; returns false when v was already in the span.
  bool insert(RationalVector v) {
    check(v);
    reduce(v);
    std::size_t p = 0;
    while (p < dim_ && sgn(v[p]) == 0) ++p;
    if (p == dim_) return false;
    Rational inv = 1 / v[p];
    for (auto& x : v) x *= inv;
    for (auto& row : basis_) {
      if (sgn(row[p]) == 0) continue;
      Rational c = row[p];
      for (std::size_t j = 0; j < dim_; ++j) row[j] -= c * v[j];
    }
    auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
    pivots_.insert(pivots_.begin() + pos, p);
    basis_.insert(basis_.begin() + pos, std::move(v));
    return true;
  }

  bool contains(RationalVector v) const {
    check(v);
    reduce(v);
    for (const auto& x : v)
      if (sgn(x) != 0) return false;
    return true;
  }

 private:
  void check(const RationalVector& v) const {
    if (v.size() != dim_) throw PreconditionViolated("vector length does not match the space");
  }
  void reduce(RationalVector& v) const {
    for (std::size_t i = 0; i < basis_.size(); ++i) {
      const std::size_t p = pivots_[i];
      if (sgn(v[p]) == 0) continue;
      Rational c = v[p];
      for (std::size_t j = 0; j < dim_; ++j) v[j] -= c * basis_[i][j];
    }
  }

  std::size_t dim_;
  RationalMatrix basis_;
  std::vector<std::size_t> pivots_;
};

inline std::size_t rank(const RationalMatrix& rows) {
  if (rows.empty()) return 0;
  return RowSpace(rows.front().size(), rows).rank();
}

/// Some x with A x = b (free variables set to zero), or nullopt.
inline std::optional<RationalVector> solve(RationalMatrix a, RationalVector b) {
  const std::size_t m = a.size();
  if (b.size() != m) throw PreconditionViolated("right-hand side length mismatch");
  const std::size_t n = m == 0 ? 0 : a.front().size();
  std::vector<std::size_t> pivot_cols;
  std::size_t row = 0;
  for (std::size_t col = 0; col < n && row < m; ++col) {
    std::size_t piv = row;
    while (piv < m && sgn(a[piv][col]) == 0) ++piv;
    if (piv == m) continue;
    std::swap(a[piv], a[row]);
    std::swap(b[piv], b[row]);
    Rational inv = 1 / a[row][col];
    for (auto& x : a[row]) x *= inv;
    b[row] *= inv;
    for (std::size_t r = 0; r < m; ++r) {
      if (r == row || sgn(a[r][col]) == 0) continue;
      Rational c = a[r][col];
      for (std::size_t j = col; j < n; ++j) a[r][j] -= c * a[row][j];
      b[r] -= c * b[row];
    }
    pivot_cols.push_back(col);
    ++row;
  }
  for (std::size_t r = row; r < m; ++r)
    if (sgn(b[r]) != 0) return std::nullopt;
  RationalVector x(n);
  for (std::size_t i = 0; i < pivot_cols.size(); ++i) x[pivot_cols[i]] = b[i];
  return x;
}

/// Coefficients of p on 1, t, ..., t^(dim-1).
inline RationalVector t_coordinates(const TScalar& p, std::size_t dim) {
  if (p.size() > dim) throw PreconditionViolated("scalar degree exceeds the coordinate space");
  RationalVector v(dim);
  for (std::size_t i = 0; i < p.size(); ++i) v[i] = p.coefficients()[i];
  return v;
}

}  // namespace dimgroup
