#pragma once

#include <cstddef>
#include <optional>

#include "cohomo/gmodule.hpp"

namespace cohomo {

/// Tate cohomology of a cyclic group <sigma> from the periodic
/// resolution: even degrees give M^G / N M, odd degrees ker N / (1 - sigma) M,
/// with N = sum of the powers of sigma. Any integer degree is accepted.
inline FinAbGroup tate_cyclic(const GModule& m, long long n, std::optional<std::size_t> sigma = std::nullopt) {
  const GroupTable& g = m.group();
  if (!sigma) sigma = g.cyclic_generator();
  if (!sigma) throw PreconditionError("tate_cyclic: group is not cyclic");
  if (*sigma >= g.order() || g.element_order(*sigma) != g.order())
    throw PreconditionError("tate_cyclic: element " + (*sigma < g.order() ? g.word(*sigma) : std::string("?")) +
                            " does not generate the group");
  const std::size_t k = m.n_gen();
  IntMatrix norm(k, k);
  std::size_t x = g.identity();
  for (std::size_t i = 0; i < g.order(); ++i, x = g.mul(x, *sigma)) {
    const IntMatrix& a = m.action(x);
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = 0; c < k; ++c) norm(r, c) += a(r, c);
  }
  IntMatrix diff = IntMatrix::identity(k) - m.action(*sigma);

  const bool even = (n % 2 == 0);
  const IntMatrix& kernel_of = even ? diff : norm;
  const IntMatrix& image_of = even ? norm : diff;
  std::vector<SparseRow> cols, img;
  for (std::size_t j = 0; j < k; ++j) {
    cols.push_back(to_sparse(kernel_of.col(j)));
    img.push_back(to_sparse(image_of.col(j)));
  }
  Echelon ker = preimage_lattice(cols, k, m.carrier().relation_basis().rows);
  return subquotient_from_rows(m.carrier(), ker.rows, img, true).quotient();
}

}  // namespace cohomo
