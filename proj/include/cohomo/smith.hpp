#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "cohomo/int_matrix.hpp"
#include "cohomo/lattice.hpp"

namespace cohomo {

/// U * A * V = S with U, V unimodular and S = diag(d_1, d_2, ...),
/// d_i >= 0, d_i | d_{i+1}, zeros last.
struct SNFResult {
  IntMatrix U;
  IntMatrix S;
  IntMatrix V;

  std::vector<Integer> diagonal() const {
    std::vector<Integer> d;
    for (std::size_t i = 0; i < S.rows() && i < S.cols(); ++i) d.push_back(S(i, i));
    return d;
  }
};

/// Which transforms smith_decompose should accumulate.
struct SmithOptions {
  bool left = true;
  bool right = true;
  bool right_inverse = false;
};

struct SmithDecomposition {
  IntMatrix S;
  IntMatrix U;      // empty unless requested
  IntMatrix V;      // empty unless requested
  IntMatrix V_inv;  // empty unless requested
};

namespace detail {

class SmithWorker {
 public:
  SmithWorker(const IntMatrix& a, SmithOptions opt) : s_(a), opt_(opt) {
    if (opt.left) u_ = IntMatrix::identity(a.rows());
    if (opt.right) v_ = IntMatrix::identity(a.cols());
    if (opt.right_inverse) vinv_ = IntMatrix::identity(a.cols());
  }

  SmithDecomposition run() {
    const std::size_t m = s_.rows(), n = s_.cols();
    const std::size_t lim = m < n ? m : n;
    for (std::size_t t = 0; t < lim; ++t) {
      if (!move_smallest_to(t, t, t)) break;
      for (;;) {
        bool clean = true;
        for (std::size_t i = t + 1; i < m; ++i) {
          if (s_(i, t) == 0) continue;
          row_add(i, t, -(s_(i, t) / s_(t, t)));
          if (s_(i, t) != 0) clean = false;
        }
        for (std::size_t j = t + 1; j < n; ++j) {
          if (s_(t, j) == 0) continue;
          col_add(j, t, -(s_(t, j) / s_(t, t)));
          if (s_(t, j) != 0) clean = false;
        }
        if (!clean) {
          move_smallest_in_cross(t);
          continue;
        }
        // Enforce divisibility of the remaining block by the pivot.
        bool divisible = true;
        for (std::size_t i = t + 1; i < m && divisible; ++i)
          for (std::size_t j = t + 1; j < n; ++j)
            if (s_(i, j) % s_(t, t) != 0) {
              row_add(t, i, Integer(1));
              divisible = false;
              break;
            }
        if (divisible) break;
      }
      if (s_(t, t) < 0) row_negate(t);
    }
    SmithDecomposition out;
    out.S = std::move(s_);
    out.U = std::move(u_);
    out.V = std::move(v_);
    out.V_inv = std::move(vinv_);
    return out;
  }

 private:
  // Move the smallest nonzero entry of the block [r0.., c0..] to (t, t).
  bool move_smallest_to(std::size_t t, std::size_t r0, std::size_t c0) {
    std::size_t bi = 0, bj = 0;
    bool found = false;
    for (std::size_t i = r0; i < s_.rows(); ++i)
      for (std::size_t j = c0; j < s_.cols(); ++j)
        if (s_(i, j) != 0 && (!found || abs(s_(i, j)) < abs(s_(bi, bj)))) {
          bi = i;
          bj = j;
          found = true;
        }
    if (!found) return false;
    row_swap(t, bi);
    col_swap(t, bj);
    return true;
  }

  void move_smallest_in_cross(std::size_t t) {
    std::size_t bi = t, bj = t;
    for (std::size_t i = t; i < s_.rows(); ++i)
      if (s_(i, t) != 0 && (s_(bi, bj) == 0 || abs(s_(i, t)) < abs(s_(bi, bj)))) {
        bi = i;
        bj = t;
      }
    for (std::size_t j = t; j < s_.cols(); ++j)
      if (s_(t, j) != 0 && (s_(bi, bj) == 0 || abs(s_(t, j)) < abs(s_(bi, bj)))) {
        bi = t;
        bj = j;
      }
    row_swap(t, bi);
    col_swap(t, bj);
  }

  void row_swap(std::size_t a, std::size_t b) {
    s_.swap_rows(a, b);
    if (opt_.left) u_.swap_rows(a, b);
  }
  void col_swap(std::size_t a, std::size_t b) {
    s_.swap_cols(a, b);
    if (opt_.right) v_.swap_cols(a, b);
    if (opt_.right_inverse) vinv_.swap_rows(a, b);
  }
  void row_add(std::size_t dst, std::size_t src, const Integer& f) {
    s_.add_row_multiple(dst, src, f);
    if (opt_.left) u_.add_row_multiple(dst, src, f);
  }
  // col[dst] += f * col[src]; inverse is row[src] -= f * row[dst].
  void col_add(std::size_t dst, std::size_t src, const Integer& f) {
    s_.add_col_multiple(dst, src, f);
    if (opt_.right) v_.add_col_multiple(dst, src, f);
    if (opt_.right_inverse) vinv_.add_row_multiple(src, dst, -f);
  }
  void row_negate(std::size_t r) {
    s_.negate_row(r);
    if (opt_.left) u_.negate_row(r);
  }

  IntMatrix s_, u_, v_, vinv_;
  SmithOptions opt_;
};

}  // namespace detail

inline SmithDecomposition smith_decompose(const IntMatrix& a, SmithOptions opt = {}) {
  return detail::SmithWorker(a, opt).run();
}

inline SNFResult smith_normal_form(const IntMatrix& a) {
  if (a.rows() == 0 || a.cols() == 0) throw DimensionError("smith_normal_form: empty matrix");
  auto d = smith_decompose(a, {true, true, false});
  return {std::move(d.U), std::move(d.S), std::move(d.V)};
}

/// Some integer x with A x = b, or nullopt when none exists. Works by
/// echelon reduction of the column lattice, not by the Smith form.
inline std::optional<IntVector> solve_integer(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows())
    throw DimensionError("solve_integer: matrix has " + std::to_string(a.rows()) +
                         " rows, right-hand side has length " + std::to_string(b.size()));
  return LatticeSolver(a).solve(b);
}

/// Solvability of A x = b read off the Smith form: with U A V = S, the
/// system is solvable iff S y = U b is, i.e. iff d_i | (U b)_i for every i
/// and (U b)_i = 0 beyond the rank.
inline bool smith_solvable(const IntMatrix& a, const IntVector& b) {
  if (b.size() != a.rows()) throw DimensionError("smith_solvable: length mismatch");
  if (a.rows() == 0) return true;
  if (a.cols() == 0) return is_zero(b);
  SNFResult r = smith_normal_form(a);
  IntVector ub = r.U * b;
  for (std::size_t i = 0; i < ub.size(); ++i) {
    Integer d = (i < r.S.cols()) ? r.S(i, i) : Integer(0);
    if (d == 0) {
      if (ub[i] != 0) return false;
    } else if (ub[i] % d != 0) {
      return false;
    }
  }
  return true;
}

}  // namespace cohomo
