#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cohomo/cochain.hpp"

namespace cohomo {

/// Index of the first tuple where d(z) does not vanish, if any.
inline std::optional<std::size_t> cocycle_defect(const Cochain& z) {
  Cochain dz = coboundary(z);
  for (std::size_t i = 0; i < dz.size(); ++i)
    if (!is_zero(dz.at(i))) return i;
  return std::nullopt;
}

inline bool is_cocycle(const Cochain& z) { return !cocycle_defect(z).has_value(); }

inline void require_cocycle(const Cochain& z, const std::string& what) {
  if (auto bad = cocycle_defect(z)) {
    Cochain dz = coboundary(z);
    throw NotCocycleError(what + ": not a cocycle, d(z)" + dz.label(*bad) + " = " + to_string(dz.at(*bad)));
  }
}

/// H^n(G, M) with explicit generators and a decision procedure.
class CohomologyResult {
 public:
  const FinAbGroup& group_invariants() const { return sq_->quotient(); }
  const std::vector<Cochain>& generator_cocycles() const { return gens_; }
  std::size_t degree() const { return degree_; }
  const GModule& module() const { return *module_; }

  /// Coordinates of the class of z with respect to generator_cocycles().
  IntVector decide(const Cochain& z) const {
    if (z.degree() != degree_) throw DimensionError("decide: cochain has the wrong degree");
    if (!(z.module_ptr() == module_ || z.module() == *module_)) throw DimensionError("decide: cochain over another module");
    IntVector flat = z.flatten();
    if (!sq_->contains(flat)) require_cocycle(z, "decide");
    return sq_->project(flat);
  }

  std::string to_string() const { return group_invariants().to_string(); }

 private:
  friend CohomologyResult cohomology(const ModulePtr&, std::size_t);
  ModulePtr module_;
  std::size_t degree_ = 0;
  std::shared_ptr<const Subquotient> sq_;
  std::vector<Cochain> gens_;
};

/// ker d_n / im d_{n-1} on the full inhomogeneous cochain complex.
inline CohomologyResult cohomology(const ModulePtr& m, std::size_t n) {
  const std::size_t N = m->group().order();
  const std::size_t k = m->n_gen();
  const std::size_t cn = table_size(N, n);
  const std::size_t cn1 = table_size(N, n + 1);

  FinAbGroup ambient(cn * k, cochain_relations(*m, cn));
  Echelon target = cochain_relations(*m, cn1);
  Echelon cycles = preimage_lattice(coboundary_columns(*m, n), cn1 * k, target.rows);
  std::vector<SparseRow> boundaries;
  if (n > 0) boundaries = coboundary_columns(*m, n - 1);

  CohomologyResult r;
  r.module_ = m;
  r.degree_ = n;
  r.sq_ = std::make_shared<const Subquotient>(subquotient_from_rows(ambient, cycles.rows, boundaries, true));
  for (const auto& lift : r.sq_->generator_lifts()) r.gens_.push_back(Cochain::unflatten(m, n, lift));
  return r;
}

/// A cochain w with d(w) = z when the class of z vanishes. Degree >= 1.
inline std::optional<Cochain> is_coboundary(const Cochain& z) {
  if (z.degree() == 0) throw PreconditionError("is_coboundary: degree 0 has no coboundaries");
  require_cocycle(z, "is_coboundary");
  const GModule& m = z.module();
  const std::size_t N = m.group().order();
  const std::size_t k = m.n_gen();
  const std::size_t prev = table_size(N, z.degree() - 1);
  std::vector<SparseRow> cols = coboundary_columns(m, z.degree() - 1);
  for (auto& r : cochain_relations(m, z.size()).rows) cols.push_back(std::move(r));
  LatticeSolver solver(cols, z.size() * k);
  auto x = solver.solve(z.flatten());
  if (!x) return std::nullopt;
  IntVector w(x->begin(), x->begin() + static_cast<long>(prev * k));
  return Cochain::unflatten(z.module_ptr(), z.degree() - 1, w);
}

/// Whether z1 and z2 are cohomologous. In degree 0 classes are elements.
inline bool classes_equal(const Cochain& z1, const Cochain& z2) {
  z1.check_compatible(z2);
  require_cocycle(z1, "classes_equal");
  require_cocycle(z2, "classes_equal");
  Cochain diff = z1 - z2;
  if (z1.degree() == 0) return diff.is_zero();
  return is_coboundary(diff).has_value();
}

}  // namespace cohomo
