#pragma once

// Residue along a central subgroup I with complement Gbar, G = Gbar x I:
//   (r z)(gbar_1..gbar_{n-1})(h) = z(h, gbar_1, ..., gbar_{n-1}),
// valued in Hom(I, M).

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "cohomo/cohomology.hpp"

namespace cohomo {

/// Hom(I, M) for a finite abelian group I, as a module over the group of
/// M, with (g f)(h) = g f(h). Elements are canonical quotient vectors;
/// evaluate() turns them back into values of M.
class HomModule {
 public:
  const ModulePtr& module() const { return module_; }
  const GroupTable& inertia() const { return inertia_; }

  /// f(h) for a Hom element f and h an element index of I.
  IntVector evaluate(const IntVector& f, std::size_t h) const {
    const std::size_t k = m_->n_gen();
    IntVector flat(r_ * k);
    for (std::size_t j = 0; j < f.size(); ++j)
      if (f[j] != 0) flat += f[j] * sq_->generator_lifts()[j];
    IntVector v = m_->zero();
    for (std::size_t i = 0; i < r_; ++i) {
      if (rep_[h][i] == 0) continue;
      IntVector block(flat.begin() + static_cast<long>(i * k), flat.begin() + static_cast<long>((i + 1) * k));
      v += Integer(rep_[h][i]) * block;
    }
    return m_->normal_form(v);
  }

  /// The homomorphism taking the i-th generator of I to values[i], or
  /// nullopt when these values do not define a homomorphism.
  std::optional<IntVector> from_generator_values(const std::vector<IntVector>& values) const {
    if (values.size() != r_) throw DimensionError("hom: one value per generator of I required");
    IntVector flat;
    for (const auto& v : values) {
      if (v.size() != m_->n_gen()) throw DimensionError("hom: value has the wrong length");
      flat.insert(flat.end(), v.begin(), v.end());
    }
    if (!sq_->contains(flat)) return std::nullopt;
    return sq_->project(flat);
  }

  /// Exponent vector of h over the generators of I used by this module.
  const std::vector<long long>& exponents(std::size_t h) const { return rep_.at(h); }

 private:
  friend HomModule hom_module(const GroupTable&, const GModule&);
  GroupTable inertia_;
  std::shared_ptr<const GModule> m_;
  ModulePtr module_;
  std::shared_ptr<const Subquotient> sq_;
  std::size_t r_ = 0;
  std::vector<std::vector<long long>> rep_;
};

/// Hom(I, M) with I abelian, presented on the named generators of I.
inline HomModule hom_module(const GroupTable& inertia, const GModule& m) {
  if (!inertia.is_abelian()) throw PreconditionError("hom_module: only abelian I is supported");
  HomModule out;
  out.inertia_ = inertia;
  out.m_ = std::make_shared<const GModule>(m);
  const std::size_t r = inertia.generators().size();
  const std::size_t k = m.n_gen();
  out.r_ = r;

  // Exponent representatives along the breadth-first factorization; the
  // cycle differences generate all relations among the generators.
  out.rep_.assign(inertia.order(), std::vector<long long>(r, 0));
  for (std::size_t x : inertia.bfs_order()) {
    if (x == inertia.identity()) continue;
    auto [p, kk] = inertia.factorization()[x];
    out.rep_[x] = out.rep_[p];
    ++out.rep_[x][kk];
  }
  std::vector<std::vector<long long>> rels;
  for (std::size_t x = 0; x < inertia.order(); ++x)
    for (std::size_t j = 0; j < r; ++j) {
      std::vector<long long> rel = out.rep_[x];
      ++rel[j];
      const auto& y = out.rep_[inertia.mul(x, inertia.generators()[j])];
      bool zero = true;
      for (std::size_t i = 0; i < r; ++i) {
        rel[i] -= y[i];
        if (rel[i]) zero = false;
      }
      if (!zero) rels.push_back(std::move(rel));
    }

  // f = (m_1..m_r) is a homomorphism iff sum rel_i m_i = 0 for each relation.
  std::vector<SparseRow> cols(r * k);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < k; ++j) {
      SparseRow col;
      for (std::size_t q = 0; q < rels.size(); ++q)
        if (rels[q][i] != 0) col.emplace_back(q * k + j, Integer(rels[q][i]));
      cols[i * k + j] = std::move(col);
    }
  Echelon target;
  for (std::size_t q = 0; q < rels.size(); ++q)
    for (const auto& row : m.carrier().relation_basis().rows) {
      SparseRow s;
      for (const auto& [c, v] : row) s.emplace_back(q * k + c, v);
      target.rows.push_back(std::move(s));
    }
  Echelon homs = preimage_lattice(cols, rels.size() * k, target.rows);
  Echelon ambient_rel;
  for (std::size_t i = 0; i < r; ++i)
    for (const auto& row : m.carrier().relation_basis().rows) {
      SparseRow s;
      for (const auto& [c, v] : row) s.emplace_back(i * k + c, v);
      ambient_rel.rows.push_back(std::move(s));
    }
  FinAbGroup ambient(r * k, ambient_rel);
  out.sq_ = std::make_shared<const Subquotient>(subquotient_from_rows(ambient, homs.rows, {}, true));

  const FinAbGroup& q = out.sq_->quotient();
  const auto& lifts = out.sq_->generator_lifts();
  std::vector<IntMatrix> actions;
  for (std::size_t g = 0; g < m.group().order(); ++g) {
    IntMatrix a(q.n_gen(), q.n_gen());
    for (std::size_t j = 0; j < q.n_gen(); ++j) {
      IntVector moved(r * k);
      for (std::size_t i = 0; i < r; ++i) {
        IntVector block(lifts[j].begin() + static_cast<long>(i * k), lifts[j].begin() + static_cast<long>((i + 1) * k));
        IntVector img = m.action(g) * block;
        for (std::size_t c = 0; c < k; ++c) moved[i * k + c] = img[c];
      }
      IntVector col = out.sq_->project(moved);
      for (std::size_t i = 0; i < q.n_gen(); ++i) a(i, j) = col[i];
    }
    actions.push_back(std::move(a));
  }
  std::vector<std::string> names;
  for (std::size_t j = 0; j < q.n_gen(); ++j) names.push_back("hom" + std::to_string(j + 1));
  out.module_ = share(GModule(m.group_ptr(), q, std::move(actions), std::move(names)));
  return out;
}

struct ResidueResult {
  Subgroup complement;  // Gbar with its embedding in G
  Subgroup inertia;     // I with its embedding in G
  HomModule hom;        // Hom(I, M) over Gbar
  Cochain value;        // degree n-1 over hom.module()

  /// (r z)(gbar...)(h) for an index into value and h an element of I
  /// given by its index in G.
  IntVector evaluate(std::size_t index, std::size_t h_in_g) const {
    for (std::size_t i = 0; i < inertia.embedding.size(); ++i)
      if (inertia.embedding[i] == h_in_g) return hom.evaluate(value.at(index), i);
    throw PreconditionError("residue: element is not in the inertia subgroup");
  }
};

/// Residue of the normalized cocycle z over G along the central subgroup
/// with elements `inertia` and complement `complement` (index lists in
/// G). Every precondition is checked and reported as PreconditionError.
inline ResidueResult residue(const Cochain& z, const std::vector<std::size_t>& inertia,
                             const std::vector<std::size_t>& complement) {
  const GroupTable& g = z.group();
  const GModule& m = z.module();
  if (z.degree() == 0) throw PreconditionError("residue: degree must be at least 1");
  if (!g.is_subgroup(inertia)) throw PreconditionError("residue: inertia set is not a subgroup");
  if (!g.is_subgroup(complement)) throw PreconditionError("residue: complement set is not a subgroup");
  Subgroup isub = make_subgroup(g, inertia);
  Subgroup gbar = make_subgroup(g, complement);
  for (std::size_t h : isub.embedding)
    if (!g.is_central(h)) throw PreconditionError("residue: inertia element " + g.word(h) + " is not central");
  if (isub.embedding.size() * gbar.embedding.size() != g.order())
    throw PreconditionError("residue: |I| * |complement| differs from |G|");
  for (std::size_t h : isub.embedding)
    if (h != g.identity())
      for (std::size_t c : gbar.embedding)
        if (c == h) throw PreconditionError("residue: complement meets the inertia subgroup in " + g.word(h));
  for (std::size_t h : isub.embedding)
    for (std::size_t j = 0; j < m.n_gen(); ++j)
      if (!m.carrier().equivalent(m.action(h).col(j), unit_vector(m.n_gen(), j)))
        throw PreconditionError("residue: inertia element " + g.word(h) + " acts nontrivially on the coefficients");
  if (!z.is_normalized()) {
    for (std::size_t i = 0; i < z.size(); ++i)
      if (!is_zero(z.at(i)))
        for (std::size_t x : z.tuple(i))
          if (x == g.identity()) throw PreconditionError("residue: cochain is not normalized, value at " + z.label(i));
  }
  require_cocycle(z, "residue");

  // Arguments 2..n only matter modulo I.
  for (std::size_t idx = 0; idx < z.size(); ++idx) {
    Cochain::Tuple t = z.tuple(idx);
    for (std::size_t pos = 1; pos < t.size(); ++pos)
      for (std::size_t h : isub.embedding) {
        if (h == g.identity()) continue;
        Cochain::Tuple u = t;
        u[pos] = g.mul(t[pos], h);
        if (z.at(u) != z.at(idx))
          throw PreconditionError("residue: invariance fails, z" + z.label(idx) + " differs from z" +
                                  z.label(z.index(u)));
      }
  }

  auto gbar_ptr = share(gbar.table);
  GModule m_bar = m.pullback(gbar_ptr, gbar.embedding);
  HomModule hom = hom_module(isub.table, m_bar);
  Cochain out(hom.module(), z.degree() - 1);
  const auto& igens = isub.table.generators();
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    Cochain::Tuple t = out.tuple(idx);
    Cochain::Tuple full(z.degree());
    for (std::size_t j = 0; j < t.size(); ++j) full[j + 1] = gbar.embedding[t[j]];
    std::vector<IntVector> vals;
    for (std::size_t gi : igens) {
      full[0] = isub.embedding[gi];
      vals.push_back(z.at(full));
    }
    auto f = hom.from_generator_values(vals);
    if (!f) throw PreconditionError("residue: h -> z(h, ...) is not a homomorphism at " + out.label(idx));
    for (std::size_t h = 0; h < isub.table.order(); ++h) {
      full[0] = isub.embedding[h];
      if (hom.evaluate(*f, h) != z.at(full))
        throw PreconditionError("residue: h -> z(h, ...) is not a homomorphism at z" + z.label(z.index(full)));
    }
    out.set(idx, *f);
  }
  require_cocycle(out, "residue result");
  return {std::move(gbar), std::move(isub), std::move(hom), std::move(out)};
}

}  // namespace cohomo
