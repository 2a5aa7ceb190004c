#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cohomo/int_matrix.hpp"
#include "cohomo/lattice.hpp"
#include "cohomo/smith.hpp"

namespace cohomo {

/// A finitely presented abelian group Z^n / R. The relation lattice R is
/// kept in reduced row Hermite normal form, so two groups are equal iff
/// they have the same number of generators and the same relation lattice.
/// Zero generators is the trivial group.
class FinAbGroup {
 public:
  FinAbGroup() = default;

  /// Each row of `relations` is a relation vector over the generators.
  FinAbGroup(std::size_t n_gen, const IntMatrix& relations) : n_gen_(n_gen) {
    if (!relations.empty() && relations.cols() != n_gen)
      throw DimensionError("FinAbGroup: relation rows have length " +
                           std::to_string(relations.cols()) + ", expected " + std::to_string(n_gen));
    std::vector<SparseRow> rows;
    for (std::size_t i = 0; i < relations.rows(); ++i) rows.push_back(to_sparse(relations.row(i)));
    basis_ = echelon_form(std::move(rows), true);
  }

  FinAbGroup(std::size_t n_gen, Echelon reduced_basis) : n_gen_(n_gen), basis_(std::move(reduced_basis)) {}

  static FinAbGroup free(std::size_t rank) { return FinAbGroup(rank, IntMatrix()); }

  /// Z/d_1 + ... + Z/d_k; a zero entry gives a free summand.
  static FinAbGroup from_orders(const std::vector<Integer>& orders) {
    IntMatrix rel(orders.size(), orders.size());
    for (std::size_t i = 0; i < orders.size(); ++i) rel(i, i) = orders[i];
    return FinAbGroup(orders.size(), rel);
  }

  static FinAbGroup cyclic(long long order) { return from_orders({Integer(order)}); }

  std::size_t n_gen() const { return n_gen_; }

  IntMatrix relations() const {
    std::vector<IntVector> rows;
    for (const auto& r : basis_.rows) rows.push_back(to_dense(r, n_gen_));
    return IntMatrix::from_rows(rows, n_gen_);
  }

  const Echelon& relation_basis() const { return basis_; }

  /// Canonical representative of v modulo the relations.
  IntVector normal_form(const IntVector& v) const {
    if (v.size() != n_gen_)
      throw DimensionError("normal_form: vector of length " + std::to_string(v.size()) +
                           " in a group with " + std::to_string(n_gen_) + " generators");
    return reduce_modulo(v, basis_);
  }

  bool is_zero(const IntVector& v) const { return cohomo::is_zero(normal_form(v)); }
  bool equivalent(const IntVector& a, const IntVector& b) const { return is_zero(a - b); }

  /// Invariant factors different from 1: d_1 | d_2 | ... with free
  /// summands (zeros) last.
  std::vector<Integer> invariant_factors() const {
    std::vector<Integer> out;
    std::size_t rank = basis_.rank();
    if (rank > 0) {
      auto d = smith_decompose(relations(), {false, false, false});
      for (std::size_t i = 0; i < rank; ++i)
        if (d.S(i, i) != 1) out.push_back(d.S(i, i));
    }
    for (std::size_t i = rank; i < n_gen_; ++i) out.emplace_back(0);
    return out;
  }

  std::size_t free_rank() const { return n_gen_ - basis_.rank(); }

  bool is_trivial() const { return invariant_factors().empty(); }

  bool isomorphic_to(const FinAbGroup& other) const {
    return invariant_factors() == other.invariant_factors();
  }

  /// "0", "Z/2", "Z + Z/2 + Z/6", ...
  std::string to_string() const { return format_invariants(invariant_factors()); }

  static std::string format_invariants(const std::vector<Integer>& factors) {
    if (factors.empty()) return "0";
    std::string s;
    for (std::size_t i = 0; i < factors.size(); ++i) {
      if (i) s += " + ";
      s += factors[i] == 0 ? std::string("Z") : "Z/" + factors[i].str();
    }
    return s;
  }

  friend bool operator==(const FinAbGroup& a, const FinAbGroup& b) {
    return a.n_gen_ == b.n_gen_ && a.basis_.rows == b.basis_.rows;
  }

 private:
  std::size_t n_gen_ = 0;
  Echelon basis_;
};

inline FinAbGroup direct_sum(const FinAbGroup& a, const FinAbGroup& b) {
  IntMatrix ra = a.relations(), rb = b.relations();
  IntMatrix r(ra.rows() + rb.rows(), a.n_gen() + b.n_gen());
  for (std::size_t i = 0; i < ra.rows(); ++i)
    for (std::size_t j = 0; j < a.n_gen(); ++j) r(i, j) = ra(i, j);
  for (std::size_t i = 0; i < rb.rows(); ++i)
    for (std::size_t j = 0; j < b.n_gen(); ++j) r(ra.rows() + i, a.n_gen() + j) = rb(i, j);
  return FinAbGroup(a.n_gen() + b.n_gen(), r);
}

/// K / I for subgroups I <= K of an ambient group, with the data needed
/// to move between ambient vectors and quotient coordinates.
class Subquotient {
 public:
  const FinAbGroup& ambient() const { return ambient_; }
  const FinAbGroup& quotient() const { return quotient_; }

  /// Echelon basis of the preimage of K in Z^n (it contains the ambient
  /// relations).
  const Echelon& kernel_basis() const { return basis_; }

  /// Ambient vectors whose classes are the quotient generators.
  const std::vector<IntVector>& generator_lifts() const { return lifts_; }

  /// Whether v (ambient coordinates) lies in K.
  bool contains(const IntVector& v) const {
    check_length(v);
    return echelon_coordinates(to_sparse(v), basis_).has_value();
  }

  /// Class of v in K / I as a canonical quotient vector.
  IntVector project(const IntVector& v) const {
    check_length(v);
    auto coords = echelon_coordinates(to_sparse(v), basis_);
    if (!coords) throw ContainmentError("project: vector " + to_string(v) + " is not in the kernel subgroup");
    IntVector q(quotient_.n_gen());
    for (std::size_t j = 0; j < q.size(); ++j)
      for (std::size_t i = 0; i < coords->size(); ++i)
        if ((*coords)[i] != 0 && to_quotient_(i, j) != 0) q[j] += (*coords)[i] * to_quotient_(i, j);
    return quotient_.normal_form(q);
  }

  /// Same as project(), for vectors already split into sparse form.
  IntVector project(const SparseRow& v) const { return project(to_dense(v, ambient_.n_gen())); }

 private:
  friend Subquotient subquotient_from_rows(const FinAbGroup&, const std::vector<SparseRow>&,
                                           const std::vector<SparseRow>&, bool);
  void check_length(const IntVector& v) const {
    if (v.size() != ambient_.n_gen())
      throw DimensionError("subquotient: vector length " + std::to_string(v.size()) + ", expected " +
                           std::to_string(ambient_.n_gen()));
  }

  FinAbGroup ambient_;
  FinAbGroup quotient_;
  Echelon basis_;
  IntMatrix to_quotient_;  // basis coordinates -> quotient coordinates
  std::vector<IntVector> lifts_;
};

/// Core of subquotient(): generators given as sparse rows. When
/// `kernel_is_basis` the kernel rows are already an echelon basis of a
/// lattice containing the ambient relations.
inline Subquotient subquotient_from_rows(const FinAbGroup& ambient, const std::vector<SparseRow>& kernel_gens,
                                         const std::vector<SparseRow>& image_gens, bool kernel_is_basis) {
  const std::size_t n = ambient.n_gen();
  Subquotient out;
  out.ambient_ = ambient;

  if (kernel_is_basis) {
    out.basis_.rows = kernel_gens;
  } else {
    std::vector<SparseRow> rows = kernel_gens;
    for (const auto& r : ambient.relation_basis().rows) rows.push_back(r);
    out.basis_ = echelon_form(std::move(rows), false);
  }
  const std::size_t r = out.basis_.rank();

  // Image generators and ambient relations in basis coordinates.
  std::vector<SparseRow> rel_rows;
  auto add_relation = [&](const SparseRow& v, const char* what) {
    auto c = echelon_coordinates(v, out.basis_);
    if (!c)
      throw ContainmentError(std::string("subquotient: ") + what + " " + to_string(to_dense(v, n)) +
                             " does not lie in the kernel subgroup");
    rel_rows.push_back(to_sparse(*c));
  };
  for (const auto& v : image_gens) add_relation(v, "image generator");
  for (const auto& v : ambient.relation_basis().rows) add_relation(v, "ambient relation");

  Echelon rel = echelon_form(std::move(rel_rows), true);
  std::vector<IntVector> dense;
  for (const auto& row : rel.rows) dense.push_back(to_dense(row, r));

  std::vector<Integer> diag(r, Integer(0));
  IntMatrix V = IntMatrix::identity(r), Vinv = IntMatrix::identity(r);
  if (!dense.empty() && r > 0) {
    auto d = smith_decompose(IntMatrix::from_rows(dense, r), {false, true, true});
    for (std::size_t i = 0; i < dense.size() && i < r; ++i) diag[i] = d.S(i, i);
    V = std::move(d.V);
    Vinv = std::move(d.V_inv);
  }

  std::vector<std::size_t> kept;
  std::vector<Integer> orders;
  for (std::size_t i = 0; i < r; ++i)
    if (diag[i] != 1) {
      kept.push_back(i);
      orders.push_back(diag[i]);
    }
  out.quotient_ = FinAbGroup::from_orders(orders);
  out.to_quotient_ = IntMatrix(r, kept.size());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < kept.size(); ++j) out.to_quotient_(i, j) = V(i, kept[j]);
  for (std::size_t j : kept) {
    IntVector lift(n);
    for (std::size_t i = 0; i < r; ++i) {
      const Integer& c = Vinv(j, i);
      if (c == 0) continue;
      for (const auto& [col, x] : out.basis_.rows[i]) lift[col] += c * x;
    }
    out.lifts_.push_back(ambient.normal_form(lift));
  }
  return out;
}

/// Quotient of the subgroup generated by the columns of `kernel_map` by
/// the subgroup generated by the columns of `image_map`, both inside
/// `ambient`. Throws ContainmentError if the image is not inside the
/// kernel subgroup.
inline Subquotient subquotient(const FinAbGroup& ambient, const IntMatrix& kernel_map, const IntMatrix& image_map) {
  auto cols = [&](const IntMatrix& m, const char* what) {
    std::vector<SparseRow> out;
    if (m.cols() == 0) return out;
    if (m.rows() != ambient.n_gen())
      throw DimensionError(std::string("subquotient: ") + what + " has " + std::to_string(m.rows()) +
                           " rows, ambient has " + std::to_string(ambient.n_gen()) + " generators");
    for (std::size_t j = 0; j < m.cols(); ++j) out.push_back(to_sparse(m.col(j)));
    return out;
  };
  return subquotient_from_rows(ambient, cols(kernel_map, "kernel_map"), cols(image_map, "image_map"), false);
}

/// Canonical representative of v in M.
inline IntVector element_normal_form(const FinAbGroup& m, const IntVector& v) { return m.normal_form(v); }

}  // namespace cohomo
