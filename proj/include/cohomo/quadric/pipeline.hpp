#pragma once

#include <exception>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cohomo/io/values.hpp"
#include "cohomo/quadric/model.hpp"
#include "cohomo/quadric/params.hpp"
#include "cohomo/quadric/tables.hpp"
#include "cohomo/report.hpp"

namespace cohomo::quadric {

enum class Step { picard, one, two, three, four, all };

inline Step parse_step(const std::string& s) {
  if (s == "picard") return Step::picard;
  if (s == "1") return Step::one;
  if (s == "2") return Step::two;
  if (s == "3") return Step::three;
  if (s == "4") return Step::four;
  if (s == "all") return Step::all;
  throw ParseError("unknown step '" + s + "' (expected picard, 1, 2, 3, 4 or all)");
}

inline const char* theorem_verified_line() { return "THEOREM 3.1: VERIFIED (d^{1,1}[phi] != 0)"; }

inline std::optional<std::size_t> first_difference(const Cochain& a, const Cochain& b) {
  a.check_compatible(b);
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a.at(i) != b.at(i)) return i;
  return std::nullopt;
}

inline std::string show(const Cochain& c, std::size_t i) { return io::format_value(c.module(), c.at(i)); }

/// Element of <s,t,w> over x in <s,t> with no w.
inline std::size_t lift_without_w(const QuadricModel& m, std::size_t x) {
  for (std::size_t y = 0; y < m.gal3->order(); ++y)
    if (m.to_gal[y] == x && exponents(*m.gal3, y)[2] == 0) return y;
  throw Error("no lift");
}

/// Residue along <w> of a mu_2-valued 3-cocycle over <s,t,w>, with
/// Hom(<w>, mu_2) identified with mu_2 by evaluation at w.
inline Cochain residue_along_w(const QuadricModel& m, const Cochain& phi_prime) {
  const GroupTable& g = *m.gal3;
  const std::size_t w = g.parse_element("w");
  std::vector<std::size_t> complement;
  for (std::size_t x = 0; x < m.gal->order(); ++x) complement.push_back(lift_without_w(m, x));
  ResidueResult r = residue(phi_prime, {g.identity(), w}, complement);
  Cochain out(m.mu2_base, 2);
  for (std::size_t idx = 0; idx < r.value.size(); ++idx) {
    Cochain::Tuple t = r.value.tuple(idx);
    out.set({m.to_gal[r.complement.embedding[t[0]]], m.to_gal[r.complement.embedding[t[1]]]}, r.evaluate(idx, w));
  }
  return out;
}

/// Residue along <t> of a mu_2-valued 2-cocycle over <s,t>, as a cocycle
/// on <s> with values in Hom(<t>, mu_2).
inline ResidueResult residue_along_t(const QuadricModel& m, const Cochain& psi) {
  const GroupTable& g = *m.gal;
  return residue(psi, {g.identity(), g.parse_element("t")}, {g.identity(), g.parse_element("s")});
}

namespace detail {

inline void guarded(Report& rep, const std::string& section, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    rep.fail(section, "error", section + " aborted: " + e.what(), e.what());
  }
}

}  // namespace detail

/// Compares the residue of Phi' along <w> with the Psi table.
inline void check_step3(const QuadricModel& m, const Cochain& phi_prime, const Cochain& psi, Report& rep) {
  const std::string sec = "step3";
  detail::guarded(rep, sec, [&] {
    const std::size_t w = m.gal3->parse_element("w");
    std::optional<std::size_t> bad;
    std::string what;
    for (std::size_t idx = 0; idx < psi.size() && !bad; ++idx) {
      Cochain::Tuple t = psi.tuple(idx);
      const IntVector& r = phi_prime.at({w, lift_without_w(m, t[0]), lift_without_w(m, t[1])});
      if (r != psi.at(idx)) {
        bad = idx;
        what = "residue of Phi' at " + psi.label(idx) + " is " + io::format_value(*m.mu2, r) + " but Psi" +
               psi.label(idx) + " = " + show(psi, idx);
      }
    }
    if (bad)
      rep.fail(sec, "values", what, "Psi" + psi.label(*bad));
    else
      rep.pass(sec, "values", "Phi'(w, g1, g2) = Psi(g1, g2) on all " + std::to_string(psi.size()) + " pairs",
               std::to_string(psi.size()));

    try {
      Cochain r = residue_along_w(m, phi_prime);
      auto diff = first_difference(r, psi);
      if (diff)
        rep.fail(sec, "residue",
                 "residue map output differs from Psi" + psi.label(*diff) + ": " + show(r, *diff) + " vs " +
                     show(psi, *diff),
                 "Psi" + psi.label(*diff));
      else
        rep.pass(sec, "residue",
                 "residue along <w> (central, trivial action, normalized, invariant mod <w>) equals Psi entrywise",
                 "I=<w>");
    } catch (const std::exception& e) {
      rep.fail(sec, "residue", std::string("residue along <w> refused: ") + e.what(), e.what());
    }

    if (auto d = cocycle_defect(psi)) {
      Cochain dpsi = coboundary(psi);
      rep.fail(sec, "psi_cocycle", "Psi is not a cocycle: d(Psi)" + dpsi.label(*d) + " = " + show(dpsi, *d),
               dpsi.label(*d));
    } else {
      rep.pass(sec, "psi_cocycle", "Psi is a 2-cocycle of <s,t> with values in mu_2", "dPsi=0");
    }
  });
}

/// Residue of Psi along <t> is a nonzero class in H^1(<s>, Hom(<t>, mu_2)).
inline void check_step4(const QuadricModel& m, const Cochain& psi, Report& rep) {
  const std::string sec = "step4";
  const std::size_t before = rep.records().size();
  detail::guarded(rep, sec, [&] {
    const GroupTable& g = *m.gal;
    ResidueResult r = residue_along_t(m, psi);
    rep.pass(sec, "residue", "residue of Psi along <t> is defined (t central, acts trivially, Psi normalized)",
             "I=<t>");
    const std::size_t s_idx = r.value.index({r.complement.table.parse_element("s")});
    const IntVector v = r.evaluate(s_idx, g.parse_element("t"));
    const std::string shown = io::format_value(*m.mu2_base, v);
    rep.check(shown == "-1", sec, "value", "rPsi(s)(t) = " + shown, shown);
    rep.check(is_cocycle(r.value), sec, "cocycle", "rPsi is a 1-cocycle of <s> in Hom(<t>, mu_2)", "");
    auto witness = is_coboundary(r.value);
    if (witness) {
      rep.fail(sec, "no_witness", "rPsi is a coboundary", "witness");
    } else {
      auto h = cohomology(r.value.module_ptr(), 1);
      rep.pass(sec, "no_witness",
               "rPsi is not a coboundary: its class is " + to_string(h.decide(r.value)) + " in H^1 = " + h.to_string(),
               h.to_string());
    }
  });
  bool ok = rep.records().size() > before;
  for (std::size_t i = before; i < rep.records().size(); ++i)
    if (rep.records()[i].status == Status::fail) ok = false;
  rep.check(ok, sec, "theorem", ok ? "d^{1,1}[phi] != 0, so Br(U)/Br(F) = 0" : "nontriviality of d^{1,1}[phi] not shown",
            ok ? "verified" : "not-verified");
}

/// Runs the verification, section by section.
class Pipeline {
 public:
  explicit Pipeline(std::vector<Mutation> mutations = {}) : mutations_(std::move(mutations)) {
    try {
      model_ = std::make_unique<QuadricModel>();
      tables_ = std::make_unique<CocycleTables>(*model_, mutations_);
    } catch (const std::exception& e) {
      model_error_ = e.what();
    }
  }

  bool has_model() const { return model_ != nullptr; }
  const QuadricModel& model() const { return *model_; }
  const CocycleTables& tables() const { return *tables_; }

  Report run(Step step) {
    Report rep;
    if (!model_) {
      rep.fail("modules", "build", "model construction failed: " + model_error_, model_error_);
      return rep;
    }
    switch (step) {
      case Step::picard:
        h1(rep);
        break;
      case Step::one:
        step1(rep);
        break;
      case Step::two:
        step2(rep);
        break;
      case Step::three:
        step3(rep);
        break;
      case Step::four:
        step4(rep);
        break;
      case Step::all:
        modules(rep);
        sequences(rep);
        picard(rep);
        h1(rep);
        phi(rep);
        step1(rep);
        step2(rep);
        step3(rep);
        step4(rep);
        if (const auto* f = rep.first_failure())
          rep.set_conclusion("THEOREM 3.1: NOT VERIFIED (first failure: " + f->id + ")");
        else
          rep.set_conclusion(theorem_verified_line());
        break;
    }
    return rep;
  }

  void modules(Report& rep) const {
    const std::string sec = "modules";
    detail::guarded(rep, sec, [&] {
      const auto& m = *model_;
      auto describe = [&](const std::string& id, const ModulePtr& p, const std::string& what) {
        rep.pass(sec, id,
                 what + ": " + p->carrier().to_string() + " over a group of order " +
                     std::to_string(p->group().order()) + ", action checked on every element",
                 p->carrier().to_string());
      };
      describe("divisors", m.divisors, "line lattice (L1, L2, L1', L2')");
      bool perm = true;
      for (std::size_t x = 0; x < m.gal->order(); ++x) {
        const IntMatrix& a = m.divisors->action(x);
        if (!(a * a == IntMatrix::identity(4))) perm = false;
        for (std::size_t j = 0; j < 4; ++j) {
          int ones = 0;
          for (std::size_t i = 0; i < 4; ++i) {
            if (a(i, j) == 1) ++ones;
            else if (a(i, j) != 0) perm = false;
          }
          if (ones != 1) perm = false;
        }
        for (std::size_t y = 0; y < m.gal->order(); ++y)
          if (!(a * m.divisors->action(y) == m.divisors->action(y) * a)) perm = false;
      }
      const std::size_t s = m.gal->parse_element("s"), t = m.gal->parse_element("t");
      rep.check(perm, sec, "line_action",
                "lines: s swaps L1<->L2, L1'<->L2'; t swaps L1<->L1', L2<->L2' (" +
                    m.divisors->action(s).to_string() + ", " + m.divisors->action(t).to_string() + ")",
                m.divisors->action(s).to_string() + " " + m.divisors->action(t).to_string());
      describe("principal", m.principal, "principal divisors D0 on (D1, D2, D3)");
      describe("picard", m.picard.module, "Pic");
      describe("sym1", m.sym1, "SymF' (alpha, gamma, mu, eps)");
      describe("functions", m.functions, "functions (alpha, gamma, mu, eps, f1..f4), f1 f2 = mu f3 f4");
      describe("sym3", m.sym3, "SymF'' (alpha, gamma, alpha', eps)");
      describe("mu2", m.mu2, "mu_2");
      describe("squares", m.squares, "squares (lambda, nu, mu)");
    });
  }

  void sequences(Report& rep) const {
    const std::string sec = "sequences";
    detail::guarded(rep, sec, [&] {
      const auto& m = *model_;
      rep.pass(sec, "divisor", "0 -> D0 -> D -> Pic -> 0 is exact and equivariant", "exact");
      rep.pass(sec, "function", "0 -> SymF' -> functions -> D0 -> 0 is exact; ker(div) = SymF'", "exact");
      rep.pass(sec, "kummer", "0 -> mu_2 -> SymF'' -> squares -> 0 is exact", "exact");
      const ModuleMap& inc = m.sym_inclusion();
      std::vector<SparseRow> cols;
      for (std::size_t j = 0; j < inc.matrix().cols(); ++j) cols.push_back(to_sparse(inc.matrix().col(j)));
      Echelon pre = preimage_lattice(cols, inc.target().n_gen(), inc.target().carrier().relation_basis().rows);
      bool injective = true;
      for (const auto& r : pre.rows)
        if (!inc.source().carrier().is_zero(to_dense(r, inc.source().n_gen()))) injective = false;
      rep.check(injective, sec, "inclusion", "SymF' -> SymF'' (mu -> alpha'^2) is injective and equivariant",
                injective ? "injective" : "not-injective");
    });
  }

  void picard(Report& rep) const {
    const std::string sec = "picard";
    detail::guarded(rep, sec, [&] {
      const auto& m = *model_;
      const auto& pic = *m.picard.module;
      const auto inv = pic.carrier().invariant_factors();
      const bool rank_one = inv.size() == 1 && inv[0] == 0;
      rep.check(rank_one, sec, "rank", "Pic = D/D0 = " + pic.carrier().to_string() + " (free of rank 1)",
                pic.carrier().to_string());
      if (!rank_one) return;
      const std::size_t s = m.gal->parse_element("s"), t = m.gal->parse_element("t");
      const Integer as = pic.action(s)(0, 0), at = pic.action(t)(0, 0);
      rep.check(as == -1 && at == 1, sec, "action", "s[L1] = -[L1], t[L1] = [L1]",
                "s=" + as.str() + " t=" + at.str());
      IntVector l1l2 = m.picard.projection * make_vector({1, 1, 0, 0});
      rep.check(is_zero(l1l2), sec, "principal", "[L1] + [L2] = 0 in Pic", to_string(l1l2));
      auto sub = make_subgroup(*m.gal, {m.gal->identity(), s});
      auto on_s = pic.pullback(share(sub.table), sub.embedding);
      auto tate = tate_cyclic(on_s, -1);
      rep.check(tate.to_string() == "Z/2", sec, "tate", "Tate H^-1(<s>, Pic) = ker N_s / I_s Pic = " + tate.to_string(),
                tate.to_string());
    });
  }

  void h1(Report& rep) const {
    const std::string sec = "h1";
    detail::guarded(rep, sec, [&] {
      const std::vector<std::string> expected{"Z/2", "Z/2", "Z/2", "0", "0"};
      for (std::size_t i = 0; i < case_ids().size(); ++i) {
        CaseData c = build_case(*model_, case_ids()[i]);
        const std::string h = cohomology(c.module, 1).to_string();
        std::string action;
        const auto& gens = c.group->generators();
        for (std::size_t k = 0; k < gens.size(); ++k)
          action += std::string(k ? ", " : "") + c.group->generator_names()[k] + " = " +
                    (c.module->action(gens[k])(0, 0) == 1 ? "+1" : "-1");
        if (gens.empty()) action = "trivial group";
        rep.check(h == expected[i], sec, c.id,
                  "case (" + c.id + ") " + c.description + ": H^1 = " + h + " [" + action + "]", h);
      }
    });
  }

  void phi(Report& rep) const {
    const std::string sec = "phi";
    detail::guarded(rep, sec, [&] {
      Cochain p = tables_->phi();
      if (auto d = cocycle_defect(p)) {
        Cochain dp = coboundary(p);
        rep.fail(sec, "cocycle", "phi is not a cocycle: d(phi)" + dp.label(*d) + " = " + show(dp, *d), dp.label(*d));
        return;
      }
      rep.pass(sec, "cocycle", "phi(t^j) = 1, phi(s t^j) = [L1] is a 1-cocycle", "dphi=0");
      rep.check(!is_coboundary(p), sec, "not_coboundary", "phi is not a coboundary", "no-witness");
      auto h = cohomology(m().picard.module, 1);
      const IntVector cls = h.decide(p);
      rep.check(h.to_string() == "Z/2" && cls == make_vector({1}), sec, "class",
                "class of phi is " + to_string(cls) + ", the generator of H^1 = " + h.to_string(), to_string(cls));
    });
  }

  void step1(Report& rep) const {
    const std::string sec = "step1";
    detail::guarded(rep, sec, [&] {
      const auto& mod = *model_;
      Cochain big_phi = tables_->Phi();
      bool phi_ok = true;
      if (auto d = cocycle_defect(big_phi)) {
        Cochain dp = coboundary(big_phi);
        rep.fail(sec, "Phi_cocycle", "Phi is not a cocycle: d(Phi)" + dp.label(*d) + " = " + show(dp, *d),
                 dp.label(*d));
        phi_ok = false;
      } else {
        rep.pass(sec, "Phi_cocycle", "Phi (64 entries over <s,t>) satisfies d(Phi) = 0", "dPhi=0");
      }
      Cochain p = tables_->phi();
      Cochain d1 = connecting(mod.divisor_ses(), p);
      rep.pass(sec, "divisor_connecting", "connecting map through D0 -> D -> Pic gives a 2-cocycle in D0",
               std::to_string(nonzero(d1)) + " nonzero");
      Cochain d2 = connecting(mod.function_ses(), d1);
      rep.pass(sec, "function_connecting",
               "connecting map through SymF' -> functions -> D0 (section D_i -> f_i) gives a 3-cocycle in SymF'",
               std::to_string(nonzero(d2)) + " nonzero");
      if (phi_ok) {
        const bool same = classes_equal(d2, big_phi);
        rep.check(same, sec, "class", same ? "double connecting image of phi is cohomologous to Phi"
                                           : "double connecting image of phi is not cohomologous to Phi",
                  same ? "equal" : "different");
      } else {
        rep.fail(sec, "class", "class comparison with Phi skipped: Phi is not a cocycle", "skipped");
      }
      if (auto diff = first_difference(d2, big_phi))
        rep.add(sec, "table", Status::info,
                "tables differ first at " + d2.label(*diff) + ": " + show(d2, *diff) + " vs Phi = " +
                    show(big_phi, *diff),
                d2.label(*diff));
      else
        rep.add(sec, "table", Status::info, "double connecting image equals Phi entrywise (all 64 entries)",
                "equal");
      Cochain z = connecting(mod.function_ses(), connecting(mod.divisor_ses(), Cochain(mod.picard.module, 1)));
      rep.check(!!is_coboundary(z), sec, "zero", "zero 1-cocycle maps to the zero class", "zero");
    });
  }

  void step2(Report& rep) const {
    const std::string sec = "step2";
    detail::guarded(rep, sec, [&] {
      const auto& mod = *model_;
      const ShortExactSeq& kummer = mod.kummer_ses();
      Cochain infl = inflation(mod.sym_inclusion(), tables_->Phi());
      Cochain q_infl = push_forward(kummer.surj(), infl);
      Cochain psi = tables_->psi();
      Cochain dpsi = coboundary(psi);
      if (auto d = first_difference(dpsi, q_infl))
        rep.fail(sec, "psi_identity",
                 "d(psi)" + dpsi.label(*d) + " = " + show(dpsi, *d) + " but (infl Phi)^2" + dpsi.label(*d) + " = " +
                     show(q_infl, *d),
                 dpsi.label(*d));
      else
        rep.pass(sec, "psi_identity", "d(psi) = (infl Phi)^2 at all " + std::to_string(dpsi.size()) + " triples",
                 std::to_string(dpsi.size()));

      Cochain pt = tables_->psitilde();
      Cochain q_pt = push_forward(kummer.surj(), pt);
      if (auto d = first_difference(q_pt, psi))
        rep.fail(sec, "lift",
                 "psitilde" + pt.label(*d) + " = " + show(pt, *d) + " does not lift psi" + psi.label(*d) + " = " +
                     show(psi, *d),
                 pt.label(*d));
      else
        rep.pass(sec, "lift", "psitilde lifts psi through squaring", std::to_string(pt.size()));

      Cochain out(mod.mu2, 3);
      try {
        out = descend(kummer, infl, pt);
      } catch (const std::exception& e) {
        rep.fail(sec, "descend", std::string("descend refused: ") + e.what(), e.what());
        return;
      }
      rep.pass(sec, "descend", "Phi' = infl Phi - d(psitilde) takes values in mu_2 and is a 3-cocycle", "mu_2");
      Cochain formula = tables_->PhiPrime_formula(pt);
      if (auto d = first_difference(out, formula))
        rep.fail(sec, "closed_formula",
                 "Phi'" + out.label(*d) + " = " + show(out, *d) + " but the closed formula gives " + show(formula, *d),
                 out.label(*d));
      else
        rep.pass(sec, "closed_formula",
                 "Phi' = psitilde(g2,g3) / w^k1 psitilde(g2,g3) on all " + std::to_string(out.size()) + " triples",
                 std::to_string(out.size()));
      const GroupTable& g = *mod.gal3;
      const std::string wts = show(out, out.index({g.parse_element("w"), g.parse_element("t"), g.parse_element("s")}));
      rep.check(out.is_normalized() && wts == "-1", sec, "normalized", "Phi' is normalized and Phi'(w,t,s) = " + wts,
                wts);
    });
  }

  /// Phi' from descend, with any PhiPrime mutations applied.
  std::optional<Cochain> phi_prime(std::string* error = nullptr) const {
    try {
      const auto& mod = *model_;
      Cochain infl = inflation(mod.sym_inclusion(), tables_->Phi());
      Cochain out = descend(mod.kummer_ses(), infl, tables_->psitilde());
      tables_->mutate_PhiPrime(out);
      return out;
    } catch (const std::exception& e) {
      if (error) *error = e.what();
      return std::nullopt;
    }
  }

  void step3(Report& rep) const {
    std::string err;
    auto pp = phi_prime(&err);
    if (!pp) {
      rep.fail("step3", "input", "Phi' is unavailable: " + err, err);
      return;
    }
    check_step3(*model_, *pp, tables_->Psi(), rep);
  }

  void step4(Report& rep) const { check_step4(*model_, tables_->Psi(), rep); }

 private:
  const QuadricModel& m() const { return *model_; }

  static std::size_t nonzero(const Cochain& c) {
    std::size_t n = 0;
    for (const auto& v : c.values())
      if (!is_zero(v)) ++n;
    return n;
  }

  std::vector<Mutation> mutations_;
  std::unique_ptr<QuadricModel> model_;
  std::unique_ptr<CocycleTables> tables_;
  std::string model_error_;
};

}  // namespace cohomo::quadric
