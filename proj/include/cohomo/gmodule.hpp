#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cohomo/fin_ab_group.hpp"
#include "cohomo/group_table.hpp"

namespace cohomo {

using GroupPtr = std::shared_ptr<const GroupTable>;

inline GroupPtr share(GroupTable g) { return std::make_shared<const GroupTable>(std::move(g)); }

/// A finitely presented abelian group with an action of a finite group.
/// action(g) acts on column vectors: its j-th column is the image of the
/// j-th carrier generator.
class GModule {
 public:
  /// One matrix per group element, indexed like the group. Validated.
  GModule(GroupPtr group, FinAbGroup carrier, std::vector<IntMatrix> actions,
          std::vector<std::string> generator_names = {})
      : group_(std::move(group)), carrier_(std::move(carrier)), action_(std::move(actions)) {
    set_names(std::move(generator_names));
    validate();
  }

  /// Action given on the group's named generators only; the rest follows
  /// by multiplying along the group's factorization.
  static GModule from_generator_action(GroupPtr group, FinAbGroup carrier, const std::vector<IntMatrix>& gen_actions,
                                       std::vector<std::string> generator_names = {}) {
    if (gen_actions.size() != group->generators().size())
      throw DimensionError("module: " + std::to_string(gen_actions.size()) + " generator actions for " +
                           std::to_string(group->generators().size()) + " group generators");
    const std::size_t n = carrier.n_gen();
    for (const auto& m : gen_actions)
      if (m.rows() != n || m.cols() != n)
        throw DimensionError("module: action matrix must be " + std::to_string(n) + "x" + std::to_string(n));
    std::vector<IntMatrix> all(group->order(), IntMatrix::identity(n));
    for (std::size_t x : group->bfs_order()) {
      if (x == group->identity()) continue;
      auto [p, k] = group->factorization()[x];
      all[x] = all[p] * gen_actions[k];
    }
    return GModule(std::move(group), std::move(carrier), std::move(all), std::move(generator_names));
  }

  static GModule trivial(GroupPtr group, FinAbGroup carrier, std::vector<std::string> generator_names = {}) {
    std::vector<IntMatrix> all(group->order(), IntMatrix::identity(carrier.n_gen()));
    return GModule(std::move(group), std::move(carrier), std::move(all), std::move(generator_names));
  }

  /// Z[G] with basis e_h and g e_h = e_{gh}.
  static GModule regular(GroupPtr group) {
    const std::size_t n = group->order();
    std::vector<IntMatrix> all;
    for (std::size_t g = 0; g < n; ++g) {
      IntMatrix m(n, n);
      for (std::size_t h = 0; h < n; ++h) m(group->mul(g, h), h) = 1;
      all.push_back(std::move(m));
    }
    std::vector<std::string> names;
    for (std::size_t h = 0; h < n; ++h) names.push_back("e[" + group->word(h) + "]");
    return GModule(group, FinAbGroup::free(n), std::move(all), std::move(names));
  }

  const GroupPtr& group_ptr() const { return group_; }
  const GroupTable& group() const { return *group_; }
  const FinAbGroup& carrier() const { return carrier_; }
  std::size_t n_gen() const { return carrier_.n_gen(); }
  const IntMatrix& action(std::size_t g) const { return action_.at(g); }
  const std::vector<IntMatrix>& actions() const { return action_; }
  const std::vector<std::string>& generator_names() const { return names_; }

  /// g . v, in normal form.
  IntVector act(std::size_t g, const IntVector& v) const { return carrier_.normal_form(action_.at(g) * v); }

  IntVector normal_form(const IntVector& v) const { return carrier_.normal_form(v); }
  IntVector zero() const { return zero_vector(n_gen()); }

  bool has_trivial_action() const {
    for (std::size_t g = 0; g < group_->order(); ++g)
      for (std::size_t j = 0; j < n_gen(); ++j)
        if (!carrier_.equivalent(action_[g] * unit_vector(n_gen(), j), unit_vector(n_gen(), j))) return false;
    return true;
  }

  /// Named shorthand values used when reading and printing elements.
  void set_alias(const std::string& name, const IntVector& v) {
    if (v.size() != n_gen()) throw DimensionError("module alias '" + name + "' has the wrong length");
    aliases_[name] = normal_form(v);
  }
  const std::map<std::string, IntVector>& aliases() const { return aliases_; }

  /// Restriction of the action along an index map H -> G (a subgroup
  /// embedding or any homomorphism).
  GModule pullback(GroupPtr h, const std::vector<std::size_t>& to_g) const {
    if (to_g.size() != h->order()) throw DimensionError("module pullback: index map has the wrong length");
    std::vector<IntMatrix> all;
    for (std::size_t x = 0; x < h->order(); ++x) all.push_back(action_.at(to_g[x]));
    GModule out(std::move(h), carrier_, std::move(all), names_);
    out.aliases_ = aliases_;
    return out;
  }

  friend bool operator==(const GModule& a, const GModule& b) {
    if (&a == &b) return true;
    if (!(a.carrier_ == b.carrier_) || a.group_->order() != b.group_->order()) return false;
    if (a.group_ != b.group_ && !(*a.group_ == *b.group_)) return false;
    for (std::size_t g = 0; g < a.action_.size(); ++g)
      for (std::size_t j = 0; j < a.n_gen(); ++j)
        if (!a.carrier_.equivalent(a.action_[g].col(j), b.action_[g].col(j))) return false;
    return true;
  }

 private:
  void set_names(std::vector<std::string> names) {
    if (names.empty())
      for (std::size_t j = 0; j < carrier_.n_gen(); ++j) names.push_back("x" + std::to_string(j + 1));
    if (names.size() != carrier_.n_gen()) throw DimensionError("module: one name per carrier generator required");
    names_ = std::move(names);
  }

  void validate() const {
    const std::size_t n = n_gen();
    const GroupTable& g = *group_;
    if (action_.size() != g.order())
      throw DimensionError("module: " + std::to_string(action_.size()) + " action matrices for a group of order " +
                           std::to_string(g.order()));
    for (std::size_t x = 0; x < g.order(); ++x) {
      const IntMatrix& a = action_[x];
      if (a.rows() != n || a.cols() != n)
        throw DimensionError("module: action of " + g.word(x) + " is not " + std::to_string(n) + "x" +
                             std::to_string(n));
      for (const auto& r : carrier_.relation_basis().rows)
        if (!carrier_.is_zero(a * to_dense(r, n)))
          throw ValidationError("module: action of " + g.word(x) + " does not preserve the relations");
    }
    for (std::size_t j = 0; j < n; ++j)
      if (!carrier_.equivalent(action_[g.identity()].col(j), unit_vector(n, j)))
        throw ValidationError("module: the identity does not act trivially");
    for (std::size_t x = 0; x < g.order(); ++x)
      for (std::size_t y = 0; y < g.order(); ++y) {
        const IntMatrix& axy = action_[g.mul(x, y)];
        for (std::size_t j = 0; j < n; ++j)
          if (!carrier_.equivalent(action_[x] * action_[y].col(j), axy.col(j)))
            throw ValidationError("module: action(" + g.word(x) + ") * action(" + g.word(y) + ") differs from action(" +
                                  g.word(g.mul(x, y)) + ")");
      }
  }

  GroupPtr group_;
  FinAbGroup carrier_;
  std::vector<IntMatrix> action_;
  std::vector<std::string> names_;
  std::map<std::string, IntVector> aliases_;
};

using ModulePtr = std::shared_ptr<const GModule>;

inline ModulePtr share(GModule m) { return std::make_shared<const GModule>(std::move(m)); }

/// Equivariant homomorphism source -> target. When the two modules live
/// over different groups, `group_map` sends each element of the target's
/// group to the source's group and equivariance reads
/// f(group_map(g) x) = g f(x).
class ModuleMap {
 public:
  ModuleMap(ModulePtr source, ModulePtr target, IntMatrix matrix, std::vector<std::size_t> group_map = {})
      : source_(std::move(source)), target_(std::move(target)), matrix_(std::move(matrix)),
        group_map_(std::move(group_map)) {
    validate();
  }

  const GModule& source() const { return *source_; }
  const GModule& target() const { return *target_; }
  const ModulePtr& source_ptr() const { return source_; }
  const ModulePtr& target_ptr() const { return target_; }
  const IntMatrix& matrix() const { return matrix_; }
  const std::vector<std::size_t>& group_map() const { return group_map_; }
  bool same_group() const { return group_map_.empty(); }

  IntVector apply(const IntVector& v) const {
    if (v.size() != source_->n_gen()) throw DimensionError("module map: argument has the wrong length");
    return target_->normal_form(matrix_ * v);
  }

 private:
  void validate() {
    const std::size_t ns = source_->n_gen(), nt = target_->n_gen();
    if (matrix_.rows() != nt || matrix_.cols() != ns) {
      if (!(matrix_.rows() == 0 && matrix_.cols() == 0 && (ns == 0 || nt == 0)))
        throw DimensionError("module map: matrix must be " + std::to_string(nt) + "x" + std::to_string(ns));
      matrix_ = IntMatrix(nt, ns);
    }
    const GroupTable& gt = target_->group();
    const GroupTable& gs = source_->group();
    if (group_map_.empty()) {
      if (source_->group_ptr() != target_->group_ptr() && !(gs == gt))
        throw ValidationError("module map: modules live over different groups and no group map was given");
    } else if (!is_homomorphism(gt, gs, group_map_)) {
      throw ValidationError("module map: group map is not a homomorphism");
    }
    for (const auto& r : source_->carrier().relation_basis().rows)
      if (!target_->carrier().is_zero(matrix_ * to_dense(r, ns)))
        throw ValidationError("module map: a relation of the source does not map to zero");
    for (std::size_t g = 0; g < gt.order(); ++g) {
      const std::size_t gs_idx = group_map_.empty() ? g : group_map_[g];
      for (std::size_t j = 0; j < ns; ++j) {
        IntVector lhs = matrix_ * source_->action(gs_idx).col(j);
        IntVector rhs = target_->action(g) * matrix_.col(j);
        if (!target_->carrier().equivalent(lhs, rhs))
          throw ValidationError("module map: not equivariant for " + gt.word(g) + " on generator " +
                                source_->generator_names()[j]);
      }
    }
  }

  ModulePtr source_, target_;
  IntMatrix matrix_;
  std::vector<std::size_t> group_map_;
};

/// 0 -> A -> B -> C -> 0, exactness verified by lattice computations at
/// construction. An optional section table gives, for each generator of
/// C, a preimage in B; lifting then follows it.
class ShortExactSeq {
 public:
  ShortExactSeq(ModuleMap inj, ModuleMap surj, std::optional<std::vector<IntVector>> section_hint = std::nullopt)
      : inj_(std::move(inj)), surj_(std::move(surj)), hint_(std::move(section_hint)) {
    validate();
  }

  const ModuleMap& inj() const { return inj_; }
  const ModuleMap& surj() const { return surj_; }
  const GModule& a() const { return inj_.source(); }
  const GModule& b() const { return inj_.target(); }
  const GModule& c() const { return surj_.target(); }
  const std::optional<std::vector<IntVector>>& section_hint() const { return hint_; }

  /// A preimage of c under surj: the section table when present,
  /// otherwise the first solution of the lattice solver.
  IntVector lift(const IntVector& c) const {
    if (c.size() != this->c().n_gen()) throw DimensionError("lift: element has the wrong length");
    if (hint_) {
      IntVector out = b().zero();
      for (std::size_t j = 0; j < c.size(); ++j)
        if (c[j] != 0) out += c[j] * (*hint_)[j];
      return b().normal_form(out);
    }
    auto x = surj_solver_.solve(c);
    if (!x) throw Error("lift: element has no preimage although the map was verified surjective");
    IntVector out(x->begin(), x->begin() + static_cast<long>(b().n_gen()));
    return b().normal_form(out);
  }

  /// The element of A mapping to b, or nullopt when b is not in the image.
  std::optional<IntVector> pullback(const IntVector& bv) const {
    if (bv.size() != b().n_gen()) throw DimensionError("pullback: element has the wrong length");
    auto x = inj_solver_.solve(bv);
    if (!x) return std::nullopt;
    IntVector out(x->begin(), x->begin() + static_cast<long>(a().n_gen()));
    return a().normal_form(out);
  }

 private:
  static LatticeSolver solver_for(const IntMatrix& m, const FinAbGroup& target) {
    std::vector<SparseRow> cols;
    for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(to_sparse(m.col(j)));
    for (const auto& r : target.relation_basis().rows) cols.push_back(r);
    return LatticeSolver(cols, target.n_gen());
  }

  void validate() {
    if (inj_.target_ptr() != surj_.source_ptr() && !(inj_.target() == surj_.source()))
      throw ValidationError("exact sequence: middle modules of the two maps differ");
    if (!inj_.same_group() || !surj_.same_group())
      throw ValidationError("exact sequence: maps must be over a single group");
    const FinAbGroup& A = a().carrier();
    const FinAbGroup& B = b().carrier();
    const FinAbGroup& C = c().carrier();

    // Injective: {x : inj x in R_B} must equal R_A.
    std::vector<SparseRow> inj_cols;
    for (std::size_t j = 0; j < A.n_gen(); ++j) inj_cols.push_back(to_sparse(inj_.matrix().col(j)));
    Echelon pre = preimage_lattice(inj_cols, B.n_gen(), B.relation_basis().rows);
    for (const auto& r : pre.rows)
      if (!A.is_zero(to_dense(r, A.n_gen())))
        throw ValidationError("exact sequence: inj is not injective (kernel contains " + to_string(to_dense(r, A.n_gen())) +
                              ")");

    // Surjective.
    surj_solver_ = solver_for(surj_.matrix(), C);
    for (std::size_t j = 0; j < C.n_gen(); ++j)
      if (!surj_solver_.solve(unit_vector(C.n_gen(), j)))
        throw ValidationError("exact sequence: surj is not surjective (misses " + c().generator_names()[j] + ")");

    // image(inj) = ker(surj).
    for (std::size_t j = 0; j < A.n_gen(); ++j)
      if (!C.is_zero(surj_.matrix() * inj_.matrix().col(j)))
        throw ValidationError("exact sequence: surj o inj is not zero on " + a().generator_names()[j]);
    inj_solver_ = solver_for(inj_.matrix(), B);
    std::vector<SparseRow> surj_cols;
    for (std::size_t j = 0; j < B.n_gen(); ++j) surj_cols.push_back(to_sparse(surj_.matrix().col(j)));
    Echelon ker = preimage_lattice(surj_cols, C.n_gen(), C.relation_basis().rows);
    for (const auto& r : ker.rows)
      if (!inj_solver_.solve(to_dense(r, B.n_gen())))
        throw ValidationError("exact sequence: kernel of surj is larger than the image of inj (contains " +
                              to_string(to_dense(r, B.n_gen())) + ")");

    if (hint_) {
      if (hint_->size() != C.n_gen()) throw DimensionError("exact sequence: section table needs one entry per generator");
      for (std::size_t j = 0; j < C.n_gen(); ++j) {
        if ((*hint_)[j].size() != B.n_gen()) throw DimensionError("exact sequence: section entry has the wrong length");
        if (!C.equivalent(surj_.matrix() * (*hint_)[j], unit_vector(C.n_gen(), j)))
          throw ValidationError("exact sequence: section entry for " + c().generator_names()[j] +
                                " is not a preimage");
      }
    }
  }

  ModuleMap inj_, surj_;
  std::optional<std::vector<IntVector>> hint_;
  LatticeSolver surj_solver_, inj_solver_;
};

}  // namespace cohomo
