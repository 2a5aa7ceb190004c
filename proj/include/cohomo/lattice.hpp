#pragma once

// Row-lattice machinery on sparse integer rows.
//
// A lattice is always given by generating rows. echelon_form() brings a
// generating set into row echelon form by unimodular row operations
// (Euclidean reduction on the leading column), optionally fully reduced to
// the row Hermite normal form, which is unique for the lattice.

#include <algorithm>
#include <cstddef>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "cohomo/int_matrix.hpp"

namespace cohomo {

/// Sparse row: (column, value) pairs sorted by column, no explicit zeros.
using SparseRow = std::vector<std::pair<std::size_t, Integer>>;

inline SparseRow to_sparse(const IntVector& v, std::size_t offset = 0) {
  SparseRow r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) r.emplace_back(i + offset, v[i]);
  return r;
}

inline IntVector to_dense(const SparseRow& r, std::size_t width, std::size_t offset = 0) {
  IntVector v(width);
  for (const auto& [c, x] : r)
    if (c >= offset && c < offset + width) v[c - offset] = x;
  return v;
}

/// r - q * p
inline SparseRow sparse_axpy(const SparseRow& r, const Integer& q, const SparseRow& p) {
  SparseRow out;
  out.reserve(r.size() + p.size());
  std::size_t i = 0, j = 0;
  while (i < r.size() || j < p.size()) {
    if (j == p.size() || (i < r.size() && r[i].first < p[j].first)) {
      out.push_back(r[i++]);
    } else if (i == r.size() || p[j].first < r[i].first) {
      out.emplace_back(p[j].first, -q * p[j].second);
      ++j;
    } else {
      Integer v = r[i].second - q * p[j].second;
      if (v != 0) out.emplace_back(r[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

inline void sparse_negate(SparseRow& r) {
  for (auto& e : r) e.second = -e.second;
}

inline const Integer* sparse_at(const SparseRow& r, std::size_t col) {
  auto it = std::lower_bound(r.begin(), r.end(), col,
                             [](const auto& e, std::size_t c) { return e.first < c; });
  if (it != r.end() && it->first == col) return &it->second;
  return nullptr;
}

/// Rows in echelon form: leading columns strictly increasing, leading
/// entries positive. When `reduced`, entries above each pivot lie in
/// [0, pivot), which makes the row set a canonical basis of its lattice.
struct Echelon {
  std::vector<SparseRow> rows;

  std::size_t rank() const { return rows.size(); }
  std::size_t lead(std::size_t i) const { return rows[i].front().first; }
  const Integer& pivot(std::size_t i) const { return rows[i].front().second; }
};

inline Echelon echelon_form(std::vector<SparseRow> rows, bool reduced) {
  std::map<std::size_t, std::vector<SparseRow>> buckets;
  for (auto& r : rows)
    if (!r.empty()) buckets[r.front().first].push_back(std::move(r));

  Echelon out;
  while (!buckets.empty()) {
    auto node = buckets.extract(buckets.begin());
    const std::size_t col = node.key();
    std::vector<SparseRow>& group = node.mapped();
    while (group.size() > 1) {
      std::size_t best = 0;
      for (std::size_t i = 1; i < group.size(); ++i)
        if (abs(group[i].front().second) < abs(group[best].front().second)) best = i;
      std::swap(group[0], group[best]);
      std::vector<SparseRow> keep;
      keep.push_back(std::move(group[0]));
      for (std::size_t i = 1; i < group.size(); ++i) {
        Integer q = group[i].front().second / keep[0].front().second;
        SparseRow r = sparse_axpy(group[i], q, keep[0]);
        if (r.empty()) continue;
        if (r.front().first == col)
          keep.push_back(std::move(r));
        else
          buckets[r.front().first].push_back(std::move(r));
      }
      group = std::move(keep);
    }
    SparseRow piv = std::move(group[0]);
    if (piv.front().second < 0) sparse_negate(piv);
    out.rows.push_back(std::move(piv));
  }

  if (reduced) {
    for (std::size_t i = 0; i < out.rows.size(); ++i) {
      const std::size_t c = out.lead(i);
      const Integer p = out.pivot(i);
      for (std::size_t j = 0; j < i; ++j) {
        const Integer* e = sparse_at(out.rows[j], c);
        if (!e) continue;
        Integer q = floor_div(*e, p);
        if (q != 0) out.rows[j] = sparse_axpy(out.rows[j], q, out.rows[i]);
      }
    }
  }
  return out;
}

/// Reduce v modulo the lattice spanned by a reduced echelon basis. The
/// result is the canonical representative of v's coset.
inline IntVector reduce_modulo(IntVector v, const Echelon& basis) {
  for (std::size_t i = 0; i < basis.rank(); ++i) {
    const std::size_t c = basis.lead(i);
    if (c >= v.size()) throw DimensionError("reduce_modulo: basis wider than vector");
    Integer q = floor_div(v[c], basis.pivot(i));
    if (q == 0) continue;
    for (const auto& [col, x] : basis.rows[i]) v[col] -= q * x;
  }
  return v;
}

/// Coordinates of v in terms of an echelon basis, or nullopt when v is
/// not in the lattice.
inline std::optional<IntVector> echelon_coordinates(const SparseRow& v, const Echelon& basis) {
  IntVector coords(basis.rank());
  SparseRow residual = v;
  for (std::size_t i = 0; i < basis.rank(); ++i) {
    if (residual.empty()) break;
    const std::size_t c = basis.lead(i);
    if (residual.front().first < c) return std::nullopt;
    if (residual.front().first > c) continue;
    const Integer& x = residual.front().second;
    if (x % basis.pivot(i) != 0) return std::nullopt;
    coords[i] = x / basis.pivot(i);
    residual = sparse_axpy(residual, coords[i], basis.rows[i]);
  }
  if (!residual.empty()) return std::nullopt;
  return coords;
}

/// Factored form of an integer linear map A: Z^n -> Z^m for repeated
/// solving of A x = b. Each unknown x_j contributes the row
/// [A e_j | e_j]; the echelon form of those rows spans the same image
/// lattice while its tail block records which combination of unknowns
/// produced each row.
class LatticeSolver {
 public:
  LatticeSolver() = default;

  /// `columns[j]` is A e_j as a sparse vector of height `height`.
  LatticeSolver(const std::vector<SparseRow>& columns, std::size_t height)
      : height_(height), unknowns_(columns.size()) {
    std::vector<SparseRow> rows;
    rows.reserve(columns.size());
    for (std::size_t j = 0; j < columns.size(); ++j) {
      SparseRow r = columns[j];
      for (const auto& e : r)
        if (e.first >= height_) throw DimensionError("LatticeSolver: column entry out of range");
      r.emplace_back(height_ + j, Integer(1));
      rows.push_back(std::move(r));
    }
    Echelon e = echelon_form(std::move(rows), false);
    for (auto& r : e.rows) {
      if (r.front().first < height_)
        image_.rows.push_back(std::move(r));
      else
        kernel_.rows.push_back(shift(r));
    }
  }

  explicit LatticeSolver(const IntMatrix& a) : LatticeSolver(columns_of(a), a.rows()) {}

  std::size_t height() const { return height_; }
  std::size_t unknowns() const { return unknowns_; }

  /// Echelon basis (in unknown-space) of the integer kernel of A.
  const Echelon& kernel() const { return kernel_; }

  std::optional<IntVector> solve(const IntVector& b) const {
    if (b.size() != height_)
      throw DimensionError("solve: right-hand side has length " + std::to_string(b.size()) +
                           ", expected " + std::to_string(height_));
    return solve(to_sparse(b));
  }

  std::optional<IntVector> solve(const SparseRow& b) const {
    SparseRow residual = b;
    IntVector x(unknowns_);
    for (const auto& row : image_.rows) {
      if (residual.empty()) break;
      const std::size_t c = row.front().first;
      if (residual.front().first < c) return std::nullopt;
      if (residual.front().first > c) continue;
      const Integer& lead = residual.front().second;
      if (lead % row.front().second != 0) return std::nullopt;
      Integer q = lead / row.front().second;
      for (const auto& [col, v] : row) {
        if (col >= height_) x[col - height_] += q * v;
      }
      residual = sparse_axpy(residual, q, row);
      // The tail entries of `row` landed in residual too; strip them.
      while (!residual.empty() && residual.back().first >= height_) residual.pop_back();
    }
    if (!residual.empty()) return std::nullopt;
    return x;
  }

 private:
  static std::vector<SparseRow> columns_of(const IntMatrix& a) {
    std::vector<SparseRow> cols;
    cols.reserve(a.cols());
    for (std::size_t j = 0; j < a.cols(); ++j) cols.push_back(to_sparse(a.col(j)));
    return cols;
  }
  SparseRow shift(const SparseRow& r) const {
    SparseRow s;
    s.reserve(r.size());
    for (const auto& [c, v] : r) s.emplace_back(c - height_, v);
    return s;
  }

  std::size_t height_ = 0;
  std::size_t unknowns_ = 0;
  Echelon image_;
  Echelon kernel_;
};

/// {x in Z^n : A x in L} where A has the given sparse columns (height m)
/// and L is spanned by `target_lattice` rows (vectors in Z^m). Returned
/// as an echelon basis.
inline Echelon preimage_lattice(const std::vector<SparseRow>& columns, std::size_t height,
                                const std::vector<SparseRow>& target_lattice) {
  std::vector<SparseRow> rows;
  rows.reserve(columns.size() + target_lattice.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    SparseRow r = columns[j];
    r.emplace_back(height + j, Integer(1));
    rows.push_back(std::move(r));
  }
  for (const auto& t : target_lattice) rows.push_back(t);
  Echelon e = echelon_form(std::move(rows), false);
  Echelon out;
  for (auto& r : e.rows) {
    if (r.front().first < height) continue;
    SparseRow s;
    s.reserve(r.size());
    for (const auto& [c, v] : r) s.emplace_back(c - height, v);
    out.rows.push_back(std::move(s));
  }
  return out;
}

/// Basis (as matrix rows) of the integer kernel {x : A x = 0}.
inline IntMatrix integer_kernel(const IntMatrix& a) {
  LatticeSolver s(a);
  std::vector<IntVector> rows;
  for (const auto& r : s.kernel().rows) rows.push_back(to_dense(r, a.cols()));
  return IntMatrix::from_rows(rows, a.cols());
}

/// Row Hermite normal form of the lattice spanned by the rows of `a`,
/// zero rows dropped.
inline IntMatrix hermite_normal_form(const IntMatrix& a) {
  std::vector<SparseRow> rows;
  for (std::size_t i = 0; i < a.rows(); ++i) rows.push_back(to_sparse(a.row(i)));
  Echelon e = echelon_form(std::move(rows), true);
  std::vector<IntVector> dense;
  for (const auto& r : e.rows) dense.push_back(to_dense(r, a.cols()));
  return IntMatrix::from_rows(dense, a.cols());
}

}  // namespace cohomo
