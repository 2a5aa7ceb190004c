#pragma once

// Random groups, modules and cochains for the property tests.

#include <random>
#include <string>
#include <vector>

#include "cohomo/cohomo.hpp"

namespace testing_support {

using namespace cohomo;

inline GroupPtr klein() { return share(GroupTable::abelian({"s", "t"}, {2, 2})); }

/// Z with s acting by -1 and t trivially, over <s,t>.
inline ModulePtr sign_module_st(const GroupPtr& g) {
  return share(GModule::from_generator_action(g, FinAbGroup::free(1), {IntMatrix{{-1}}, IntMatrix{{1}}}, {"L1"}));
}

/// Dihedral group of order 8 acting on the square's vertices.
inline GroupPtr dihedral8() {
  return share(GroupTable::from_permutations({"r", "f"}, {{1, 2, 3, 0}, {0, 3, 2, 1}}));
}

inline GroupPtr symmetric3() { return share(GroupTable::from_permutations({"a", "b"}, {{1, 0, 2}, {1, 2, 0}})); }

/// A group of order 2, 4 or 8 picked at random.
inline GroupPtr random_small_group(std::mt19937_64& rng) {
  switch (std::uniform_int_distribution<int>(0, 6)(rng)) {
    case 0: return share(GroupTable::cyclic("a", 2));
    case 1: return share(GroupTable::cyclic("a", 4));
    case 2: return klein();
    case 3: return share(GroupTable::cyclic("a", 8));
    case 4: return share(GroupTable::abelian({"a", "b", "c"}, {2, 2, 2}));
    case 5: return share(GroupTable::abelian({"a", "b"}, {2, 4}));
    default: return dihedral8();
  }
}

/// Sign characters G -> {+1,-1}, found by trying every assignment on the
/// generators.
inline std::vector<std::vector<int>> sign_characters(const GroupTable& g) {
  GroupTable pm = GroupTable::cyclic("e", 2);
  std::vector<std::vector<int>> out;
  const std::size_t r = g.generators().size();
  for (std::size_t mask = 0; mask < (std::size_t(1) << r); ++mask) {
    std::vector<std::size_t> images;
    for (std::size_t i = 0; i < r; ++i) images.push_back((mask >> i) & 1);
    try {
      auto map = homomorphism_from_generators(g, pm, images);
      std::vector<int> chi;
      for (std::size_t x : map) chi.push_back(x ? -1 : 1);
      out.push_back(chi);
    } catch (const ValidationError&) {
    }
  }
  return out;
}

/// Permutation module Z[G/H] for the subgroup generated by one element.
inline std::vector<IntMatrix> coset_action(const GroupTable& g, std::size_t h) {
  auto sub = g.generated({h});
  std::vector<std::size_t> coset_of(g.order(), g.order());
  std::vector<std::size_t> reps;
  for (std::size_t x = 0; x < g.order(); ++x) {
    if (coset_of[x] != g.order()) continue;
    for (std::size_t y : sub) coset_of[g.mul(x, y)] = reps.size();
    reps.push_back(x);
  }
  std::vector<IntMatrix> acts;
  for (std::size_t x = 0; x < g.order(); ++x) {
    IntMatrix m(reps.size(), reps.size());
    for (std::size_t c = 0; c < reps.size(); ++c) m(coset_of[g.mul(x, reps[c])], c) = 1;
    acts.push_back(m);
  }
  return acts;
}

inline IntMatrix block_diag(const std::vector<IntMatrix>& blocks) {
  std::size_t n = 0;
  for (const auto& b : blocks) n += b.rows();
  IntMatrix m(n, n);
  std::size_t off = 0;
  for (const auto& b : blocks) {
    for (std::size_t i = 0; i < b.rows(); ++i)
      for (std::size_t j = 0; j < b.cols(); ++j) m(off + i, off + j) = b(i, j);
    off += b.rows();
  }
  return m;
}

/// Random unimodular matrix as a product of elementary operations.
inline std::pair<IntMatrix, IntMatrix> random_unimodular(std::mt19937_64& rng, std::size_t n) {
  IntMatrix p = IntMatrix::identity(n), pinv = IntMatrix::identity(n);
  if (n < 2) return {p, pinv};
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> f(-2, 2);
  for (int step = 0; step < 3 * static_cast<int>(n); ++step) {
    std::size_t a = idx(rng), b = idx(rng);
    if (a == b) continue;
    int k = f(rng);
    p.add_row_multiple(a, b, k);     // p <- E p
    pinv.add_col_multiple(b, a, -k);  // pinv <- pinv E^-1
  }
  return {p, pinv};
}

/// Direct sum of 1-3 random summands (trivial, sign-twisted, permutation
/// or regular), optionally reduced modulo an integer, in a randomly
/// changed basis. `torsion_free` forbids the reduction.
inline ModulePtr random_module(std::mt19937_64& rng, const GroupPtr& gp, bool torsion_free = false) {
  const GroupTable& g = *gp;
  auto chars = sign_characters(g);
  std::uniform_int_distribution<int> kind(0, 3);
  int parts = std::uniform_int_distribution<int>(1, 3)(rng);
  std::vector<std::vector<IntMatrix>> summands;
  for (int p = 0; p < parts; ++p) {
    std::vector<IntMatrix> acts;
    switch (kind(rng)) {
      case 0:
        for (std::size_t x = 0; x < g.order(); ++x) acts.push_back(IntMatrix{{1}});
        break;
      case 1: {
        const auto& chi = chars[std::uniform_int_distribution<std::size_t>(0, chars.size() - 1)(rng)];
        for (std::size_t x = 0; x < g.order(); ++x) acts.push_back(IntMatrix{{chi[x]}});
        break;
      }
      case 2: {
        std::size_t h = std::uniform_int_distribution<std::size_t>(0, g.order() - 1)(rng);
        acts = coset_action(g, h);
        break;
      }
      default:
        acts = GModule::regular(gp).actions();
        if (g.order() > 4) acts = coset_action(g, g.generators()[0]);
        break;
    }
    summands.push_back(acts);
  }
  std::vector<IntMatrix> acts;
  for (std::size_t x = 0; x < g.order(); ++x) {
    std::vector<IntMatrix> blocks;
    for (const auto& s : summands) blocks.push_back(s[x]);
    acts.push_back(block_diag(blocks));
  }
  const std::size_t n = acts[0].rows();
  int modulus = torsion_free ? 0 : std::uniform_int_distribution<int>(0, 4)(rng);
  if (modulus == 1) modulus = 0;
  auto [p, pinv] = random_unimodular(rng, n);
  for (auto& a : acts) a = p * a * pinv;
  IntMatrix rel(0, n);
  if (modulus) {
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < n; ++i) rows.push_back(Integer(modulus) * unit_vector(n, i));
    rel = IntMatrix::from_rows(rows, n);
  }
  return share(GModule(gp, FinAbGroup(n, rel), acts));
}

inline Cochain random_cochain(std::mt19937_64& rng, const ModulePtr& m, std::size_t degree, int bound = 3) {
  std::uniform_int_distribution<int> d(-bound, bound);
  return Cochain::from_function(m, degree, [&](const Cochain::Tuple&) {
    IntVector v(m->n_gen());
    for (auto& x : v) x = d(rng);
    return v;
  });
}

}  // namespace testing_support
