#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "cohomo/cohomo.hpp"

namespace cohomo::quadric {

/// How a Galois element moves the square roots: alpha -> a alpha,
/// gamma -> c gamma, alpha' -> a2 alpha' (each sign is +1 or -1).
/// beta = alpha gamma picks up a c.
struct RootSigns {
  int a = 1, c = 1, a2 = 1;
};

inline RootSigns compose(RootSigns x, RootSigns y) { return {x.a * y.a, x.c * y.c, x.a2 * y.a2}; }

/// Line x + sx alpha y = z + sz beta t = 0 on the compactified surface.
struct Line {
  std::string name;
  int sx, sz;
};

inline const std::array<Line, 4>& lines() {
  static const std::array<Line, 4> ls{{{"L1", 1, 1}, {"L2", 1, -1}, {"L1'", -1, -1}, {"L2'", -1, 1}}};
  return ls;
}

/// The functions f1 = x + alpha y, f2 = x - alpha y, f3 = z + beta,
/// f4 = z - beta: `in_x` says which pair of coordinates, `sign` the sign.
struct LinearForm {
  std::string name;
  bool in_x;
  int sign;
};

inline const std::array<LinearForm, 4>& forms() {
  static const std::array<LinearForm, 4> fs{{{"f1", true, 1}, {"f2", true, -1}, {"f3", false, 1}, {"f4", false, -1}}};
  return fs;
}

/// Image of a line under a Galois element.
inline Line act_on_line(RootSigns g, const Line& l) {
  const int sx = g.a * l.sx, sz = g.a * g.c * l.sz;
  for (const auto& m : lines())
    if (m.sx == sx && m.sz == sz) return m;
  throw Error("no line with signs (" + std::to_string(sx) + "," + std::to_string(sz) + ")");
}

inline std::size_t line_index(const Line& l) {
  for (std::size_t i = 0; i < lines().size(); ++i)
    if (lines()[i].sx == l.sx && lines()[i].sz == l.sz) return i;
  throw Error("unknown line");
}

inline std::size_t act_on_form(RootSigns g, std::size_t f) {
  const auto& src = forms()[f];
  const int sign = src.in_x ? g.a * src.sign : g.a * g.c * src.sign;
  for (std::size_t i = 0; i < forms().size(); ++i)
    if (forms()[i].in_x == src.in_x && forms()[i].sign == sign) return i;
  throw Error("no linear form with that sign");
}

/// A line lies in the zero set of x + r alpha y iff its sx is r, and in
/// that of z + r beta iff z = -sz beta equals -r beta.
inline bool line_in_zero_set(const LinearForm& f, const Line& l) { return f.in_x ? l.sx == f.sign : l.sz == f.sign; }

/// Divisor of a form as a vector over (L1, L2, L1', L2').
inline IntVector divisor_of(std::size_t f) {
  IntVector v(lines().size());
  for (std::size_t i = 0; i < lines().size(); ++i)
    if (line_in_zero_set(forms()[f], lines()[i])) v[i] = 1;
  return v;
}

/// Permutation matrix of a Galois element on the lines.
inline IntMatrix line_action(RootSigns g) {
  IntMatrix m(4, 4);
  for (std::size_t j = 0; j < 4; ++j) m(line_index(act_on_line(g, lines()[j])), j) = 1;
  return m;
}

/// Action on square-root symbols (r_0, ..., r_{k-1}, eps): root i moves to
/// itself plus eps when its sign is -1.
inline IntMatrix symbol_action(const std::vector<int>& signs, std::size_t extra = 0) {
  const std::size_t k = signs.size();
  const std::size_t n = k + 1 + extra;
  IntMatrix m = IntMatrix::identity(n);
  for (std::size_t i = 0; i < k; ++i)
    if (signs[i] == -1) m(k, i) = 1;
  return m;
}

/// Pic as the quotient of the line lattice by the principal divisors.
struct PicardData {
  ModulePtr module;
  IntMatrix projection;  // rows: Pic generators, columns: lines
  FinAbGroup group;
};

/// Every module, map and exact sequence of the computation.
class QuadricModel {
 public:
  QuadricModel() { build(); }

  GroupPtr gal;   // <s,t>: s fixes alpha, negates gamma; t negates alpha
  GroupPtr gal3;  // <s,t,w>: w negates alpha' only
  std::vector<std::size_t> to_gal;

  ModulePtr divisors;   // Z^4 on the lines
  ModulePtr principal;  // D0, basis D1 = div f1, D2 = div f2, D3 = div f3
  IntMatrix principal_in_divisors;
  PicardData picard;
  ModulePtr sym1;       // alpha, gamma, mu, eps over <s,t>
  ModulePtr functions;  // sym1 plus f1..f4, f1 + f2 = mu + f3 + f4
  ModulePtr sym3;       // alpha, gamma, alpha', eps over <s,t,w>
  ModulePtr mu2;        // eps over <s,t,w>
  ModulePtr mu2_base;   // eps over <s,t>
  ModulePtr squares;    // lambda, nu, mu over <s,t,w>, trivial action

  std::vector<ShortExactSeq> sequences;  // divisor, function, Kummer
  std::vector<ModuleMap> maps;           // sym1 -> sym3 along to_gal

  const ShortExactSeq& divisor_ses() const { return sequences.at(0); }
  const ShortExactSeq& function_ses() const { return sequences.at(1); }
  const ShortExactSeq& kummer_ses() const { return sequences.at(2); }
  const ModuleMap& sym_inclusion() const { return maps.at(0); }

  static RootSigns signs_of(const GroupTable& g, std::size_t x) {
    RootSigns r;
    for (auto k : letters(g, x)) r = compose(r, generator_signs(g.generator_names()[k]));
    return r;
  }

 private:
  static RootSigns generator_signs(const std::string& name) {
    if (name == "s") return {1, -1, 1};
    if (name == "t") return {-1, 1, 1};
    if (name == "w") return {1, 1, -1};
    throw Error("unknown Galois generator " + name);
  }

  static std::vector<std::size_t> letters(const GroupTable& g, std::size_t x) {
    std::vector<std::size_t> out;
    while (x != g.identity()) {
      auto [p, k] = g.factorization()[x];
      out.push_back(k);
      x = p;
    }
    return out;
  }

  template <class F>
  static std::vector<IntMatrix> per_element(const GroupTable& g, F f) {
    std::vector<IntMatrix> out;
    for (std::size_t x = 0; x < g.order(); ++x) out.push_back(f(signs_of(g, x)));
    return out;
  }

  void build() {
    gal = share(GroupTable::abelian({"s", "t"}, {2, 2}));
    gal3 = share(GroupTable::abelian({"s", "t", "w"}, {2, 2, 2}));
    to_gal = homomorphism_from_generators(*gal3, *gal,
                                          {gal->parse_element("s"), gal->parse_element("t"), gal->identity()});

    std::vector<std::string> line_names;
    for (const auto& l : lines()) line_names.push_back(l.name);
    divisors = share(GModule(gal, FinAbGroup::free(4), per_element(*gal, line_action), line_names));

    // D0 on the divisors of f1, f2, f3; div f4 = D1 + D2 - D3.
    std::vector<IntVector> d0;
    for (std::size_t f = 0; f < 3; ++f) d0.push_back(divisor_of(f));
    principal_in_divisors = IntMatrix::from_columns(d0, 4);
    auto d0_coords = [&](const IntVector& v) {
      auto x = solve_integer(principal_in_divisors, v);
      if (!x) throw Error("divisor " + to_string(v) + " is not principal in the model");
      return *x;
    };
    std::vector<IntMatrix> d0_action;
    for (std::size_t x = 0; x < gal->order(); ++x) {
      std::vector<IntVector> cols;
      for (const auto& v : d0) cols.push_back(d0_coords(divisors->action(x) * v));
      d0_action.push_back(IntMatrix::from_columns(cols, 3));
    }
    principal = share(GModule(gal, FinAbGroup::free(3), d0_action, {"D1", "D2", "D3"}));
    picard = picard_quotient();

    sym1 = share(make_symbols(gal, {"alpha", "gamma", "mu"}, [](RootSigns r) {
      return std::vector<int>{r.a, r.c, 1};
    }));

    // Functions: alpha, gamma, mu, eps, f1..f4.
    IntMatrix fun_rel(2, 8);
    fun_rel(0, 3) = 2;
    fun_rel(1, 2) = -1;
    fun_rel(1, 4) = 1;
    fun_rel(1, 5) = 1;
    fun_rel(1, 6) = -1;
    fun_rel(1, 7) = -1;
    std::vector<IntMatrix> fun_action;
    for (std::size_t x = 0; x < gal->order(); ++x) {
      RootSigns r = signs_of(*gal, x);
      IntMatrix m = symbol_action({r.a, r.c, 1}, 4);
      for (std::size_t f = 0; f < 4; ++f) {
        m(4 + f, 4 + f) = 0;
        m(4 + act_on_form(r, f), 4 + f) = 1;
      }
      fun_action.push_back(std::move(m));
    }
    functions = share(GModule(gal, FinAbGroup(8, fun_rel), fun_action,
                              {"alpha", "gamma", "mu", "eps", "f1", "f2", "f3", "f4"}));
    with_sign_alias(functions, 3);

    sym3 = share(make_symbols(gal3, {"alpha", "gamma", "alpha'"}, [](RootSigns r) {
      return std::vector<int>{r.a, r.c, r.a2};
    }));
    {
      GModule m = *sym3;
      m.set_alias("mu", make_vector({0, 0, 2, 0}));
      sym3 = share(std::move(m));
    }
    mu2 = share(GModule::trivial(gal3, FinAbGroup::cyclic(2), {"eps"}));
    with_sign_alias(mu2, 0);
    mu2_base = share(GModule::trivial(gal, FinAbGroup::cyclic(2), {"eps"}));
    with_sign_alias(mu2_base, 0);
    squares = share(GModule::trivial(gal3, FinAbGroup::free(3), {"lambda", "nu", "mu"}));

    std::vector<IntVector> pic_section;
    for (std::size_t j = 0; j < picard.module->n_gen(); ++j) {
      // Prefer a single line mapping to the generator.
      IntVector best;
      for (std::size_t i = 0; i < 4; ++i)
        if (picard.projection.col(i) == unit_vector(picard.module->n_gen(), j)) {
          best = unit_vector(4, i);
          break;
        }
      if (best.empty()) break;
      pic_section.push_back(best);
    }
    std::optional<std::vector<IntVector>> hint;
    if (pic_section.size() == picard.module->n_gen()) hint = pic_section;
    sequences.emplace_back(ModuleMap(principal, divisors, principal_in_divisors),
                           ModuleMap(divisors, picard.module, picard.projection), hint);

    IntMatrix incl(8, 4);
    for (std::size_t i = 0; i < 4; ++i) incl(i, i) = 1;
    IntMatrix div(3, 8);
    for (std::size_t f = 0; f < 4; ++f) {
      IntVector c = d0_coords(divisor_of(f));
      for (std::size_t r = 0; r < 3; ++r) div(r, 4 + f) = c[r];
    }
    std::vector<IntVector> fun_section;
    for (std::size_t f = 0; f < 3; ++f) fun_section.push_back(unit_vector(8, 4 + f));
    sequences.emplace_back(ModuleMap(sym1, functions, incl), ModuleMap(functions, principal, div), fun_section);

    IntMatrix q(3, 4);
    for (std::size_t i = 0; i < 3; ++i) q(i, i) = 1;
    IntMatrix eps_in(4, 1);
    eps_in(3, 0) = 1;
    std::vector<IntVector> sq_section{unit_vector(4, 0), unit_vector(4, 1), unit_vector(4, 2)};
    sequences.emplace_back(ModuleMap(mu2, sym3, eps_in), ModuleMap(sym3, squares, q), sq_section);

    IntMatrix up(4, 4);
    up(0, 0) = 1;
    up(1, 1) = 1;
    up(2, 2) = 2;
    up(3, 3) = 1;
    maps.emplace_back(sym1, sym3, up, to_gal);
  }

  template <class Signs>
  static GModule make_symbols(const GroupPtr& g, std::vector<std::string> names, Signs signs) {
    std::vector<IntMatrix> acts;
    for (std::size_t x = 0; x < g->order(); ++x) acts.push_back(symbol_action(signs(signs_of(*g, x))));
    const std::size_t n = names.size();
    names.push_back("eps");
    IntMatrix rel(1, n + 1);
    rel(0, n) = 2;
    GModule m(g, FinAbGroup(n + 1, rel), acts, names);
    m.set_alias("-1", unit_vector(n + 1, n));
    return m;
  }

  static void with_sign_alias(ModulePtr& p, std::size_t eps) {
    GModule m = *p;
    m.set_alias("-1", unit_vector(m.n_gen(), eps));
    p = share(std::move(m));
  }

  PicardData picard_quotient() const {
    Subquotient sq = subquotient(FinAbGroup::free(4), IntMatrix::identity(4), principal_in_divisors);
    const std::size_t r = sq.quotient().n_gen();
    IntMatrix proj(r, 4);
    for (std::size_t i = 0; i < 4; ++i) {
      IntVector p = sq.project(unit_vector(4, i));
      for (std::size_t j = 0; j < r; ++j) proj(j, i) = p[j];
    }
    std::vector<IntVector> lifts = sq.generator_lifts();
    // With a single free generator, orient it so that L1 maps to +1.
    if (r == 1 && proj(0, 0) == -1) {
      for (std::size_t i = 0; i < 4; ++i) proj(0, i) = -proj(0, i);
      lifts[0] = -lifts[0];
    }
    std::vector<IntMatrix> acts;
    for (std::size_t x = 0; x < gal->order(); ++x) {
      std::vector<IntVector> cols;
      for (const auto& l : lifts) cols.push_back(sq.quotient().normal_form(proj * (divisors->action(x) * l)));
      acts.push_back(IntMatrix::from_columns(cols, r));
    }
    std::vector<std::string> names;
    if (r == 1 && proj(0, 0) == 1) names.push_back("[L1]");
    auto m = share(GModule(gal, sq.quotient(), acts, names));
    return {m, proj, sq.quotient()};
  }
};

/// Picard module restricted to the Galois group of one of the five
/// splitting situations.
struct CaseData {
  std::string id;
  std::string description;
  GroupPtr group;
  ModulePtr module;
};

inline const std::vector<std::string>& case_ids() {
  static const std::vector<std::string> ids{"i", "ii", "iii", "iv", "v"};
  return ids;
}

inline CaseData build_case(const QuadricModel& model, const std::string& id) {
  const GroupTable& g = *model.gal;
  auto cyclic_over = [&](const std::string& word, const std::string& desc) {
    auto h = share(GroupTable::cyclic("s", 2));
    if (word == "t") h = share(GroupTable::cyclic("t", 2));
    std::vector<std::size_t> map{g.identity(), g.parse_element(word)};
    return CaseData{id, desc, h, share(model.picard.module->pullback(h, map))};
  };
  if (id == "i") return {id, "[k':k] = 4, G = <s,t>", model.gal, model.picard.module};
  if (id == "ii") return cyclic_over("s", "k' = k(gamma), alpha in k");
  if (id == "iii") return cyclic_over("s*t", "k' = k(alpha) = k(gamma)");
  if (id == "iv") return cyclic_over("t", "k' = k(alpha), gamma in k");
  if (id == "v") {
    auto h = share(GroupTable::trivial());
    return {id, "k' = k", h, share(model.picard.module->pullback(h, {g.identity()}))};
  }
  throw ValidationError("unknown case id '" + id + "' (expected i, ii, iii, iv or v)");
}

inline FinAbGroup picard_h1(const QuadricModel& model, const std::string& id) {
  return cohomology(build_case(model, id).module, 1).group_invariants();
}

}  // namespace cohomo::quadric
