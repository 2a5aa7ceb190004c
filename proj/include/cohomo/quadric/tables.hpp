#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "cohomo/io/values.hpp"
#include "cohomo/quadric/model.hpp"

namespace cohomo::quadric {

/// Exponents of x in a group built by GroupTable::abelian.
inline std::vector<std::size_t> exponents(const GroupTable& g, std::size_t x) {
  const auto& orders = g.abelian_orders();
  if (orders.empty() && g.order() > 1) throw PreconditionError("exponents: group is not a standard abelian group");
  std::vector<std::size_t> e(orders.size());
  for (std::size_t i = orders.size(); i-- > 0;) {
    e[i] = x % orders[i];
    x /= orders[i];
  }
  return e;
}

/// A forced table entry: `table(args) = value`, e.g. "Phi(t,t,s)=1".
struct Mutation {
  std::string table;
  std::vector<std::string> args;
  std::string value;

  std::string id() const {
    std::string s = table + "(";
    for (std::size_t i = 0; i < args.size(); ++i) s += (i ? "," : "") + args[i];
    return s + ")";
  }
};

/// Table names with their degrees.
inline const std::map<std::string, std::size_t>& table_degrees() {
  static const std::map<std::string, std::size_t> d{{"phi", 1},      {"Phi", 3}, {"psi", 2},
                                                     {"psitilde", 2}, {"Psi", 2}, {"PhiPrime", 3}};
  return d;
}

inline Mutation parse_mutation(const std::string& text) {
  const std::size_t eq = text.find('=');
  if (eq == std::string::npos) throw ParseError("mutation '" + text + "': expected id=value");
  const std::string id = io::trim(text.substr(0, eq));
  const std::string value = io::trim(text.substr(eq + 1));
  const std::size_t open = id.find('(');
  if (open == std::string::npos || id.back() != ')') throw ParseError("mutation '" + text + "': expected name(args)");
  Mutation m;
  m.table = io::trim(id.substr(0, open));
  auto it = table_degrees().find(m.table);
  if (it == table_degrees().end()) throw ParseError("mutation '" + text + "': unknown table '" + m.table + "'");
  for (const auto& a : io::split_top(id.substr(open + 1, id.size() - open - 2), ',')) m.args.push_back(io::trim(a));
  if (m.args.size() != it->second)
    throw ParseError("mutation '" + text + "': " + m.table + " takes " + std::to_string(it->second) + " arguments");
  if (value.empty()) throw ParseError("mutation '" + text + "': empty value");
  m.value = value;
  return m;
}

/// Applies the mutations aimed at `table` to c. Arguments and values are
/// parsed against c's group and module.
inline void apply_mutations(const std::vector<Mutation>& ms, const std::string& table, Cochain& c) {
  for (const auto& m : ms) {
    if (m.table != table) continue;
    Cochain::Tuple t;
    for (const auto& a : m.args) t.push_back(c.group().parse_element(a));
    c.set(t, io::parse_value(c.module(), m.value));
  }
}

/// The cocycle tables as written down in the source computation, with
/// their implicit conventions made explicit. `i`, `j`, `k` are the
/// exponents of s, t, w.
class CocycleTables {
 public:
  CocycleTables(const QuadricModel& model, std::vector<Mutation> mutations = {})
      : model_(model), mutations_(std::move(mutations)) {}

  const std::vector<Mutation>& mutations() const { return mutations_; }

  /// phi(t^j) = 1, phi(s t^j) = [L1], in Pic.
  Cochain phi() const {
    const auto& pic = model_.picard.module;
    const IntVector l1 = io::parse_value(*pic, "[L1]");
    Cochain c = Cochain::from_function(pic, 1, [&](const Cochain::Tuple& x) {
      return exponents(*model_.gal, x[0])[0] ? l1 : pic->zero();
    });
    apply_mutations(mutations_, "phi", c);
    return c;
  }

  /// Values in SymF'. Entries with an identity argument, or with no s in
  /// the last argument, are 1; the last argument only matters through s.
  Cochain Phi() const {
    const auto& m = model_.sym1;
    const GroupTable& g = *model_.gal;
    static const std::map<std::pair<std::string, std::string>, std::string> table{
        {{"t", "t"}, "mu"},   {{"t", "s"}, "1"},   {{"t", "s*t"}, "mu^-1"},
        {{"s", "t"}, "mu"},   {{"s", "s"}, "1"},   {{"s", "s*t"}, "mu^-1"},
        {{"s*t", "t"}, "1"},  {{"s*t", "s"}, "1"}, {{"s*t", "s*t"}, "1"}};
    Cochain c = Cochain::from_function(m, 3, [&](const Cochain::Tuple& x) {
      if (x[0] == g.identity() || x[1] == g.identity() || x[2] == g.identity()) return m->zero();
      if (exponents(g, x[2])[0] == 0) return m->zero();
      return io::parse_value(*m, table.at({g.word(x[0]), g.word(x[1])}));
    });
    apply_mutations(mutations_, "Phi", c);
    return c;
  }

  /// Values in the squares (lambda, nu, mu): mu exactly when the second
  /// argument contains s and the first is t w^k or s w^k.
  Cochain psi() const { return kummer_table(model_.squares, "mu", "psi"); }

  /// The lift of psi to SymF'': alpha' in place of mu.
  Cochain psitilde() const { return kummer_table(model_.sym3, "alpha'", "psitilde"); }

  /// Values in mu_2 over <s,t>: -1 exactly at (t, s t^j) and (s, s t^j).
  Cochain Psi() const {
    const auto& m = model_.mu2_base;
    const GroupTable& g = *model_.gal;
    Cochain c = Cochain::from_function(m, 2, [&](const Cochain::Tuple& x) {
      auto e1 = exponents(g, x[0]), e2 = exponents(g, x[1]);
      if (e2[0] == 0) return m->zero();
      const bool minus = (e1[0] == 0 && e1[1] == 1) || (e1[0] == 1 && e1[1] == 0);
      return io::parse_value(*m, minus ? "-1" : "1");
    });
    apply_mutations(mutations_, "Psi", c);
    return c;
  }

  /// Phi'(g1,g2,g3) = psitilde(g2,g3) / w^{k1} psitilde(g2,g3), read back
  /// in mu_2 = <eps>.
  Cochain PhiPrime_formula(const Cochain& psitilde) const {
    const GroupTable& g = *model_.gal3;
    const std::size_t w = g.parse_element("w");
    const ShortExactSeq& kummer = model_.kummer_ses();
    return Cochain::from_function(model_.mu2, 3, [&](const Cochain::Tuple& x) {
      const std::size_t wk = exponents(g, x[0])[2] ? w : g.identity();
      const IntVector& v = psitilde.at({x[1], x[2]});
      auto a = kummer.pullback(v - model_.sym3->act(wk, v));
      if (!a) throw Error("closed formula leaves mu_2 at " + psitilde.label(psitilde.index({x[1], x[2]})));
      return *a;
    });
  }

  /// Mutations aimed at Phi' are applied by whoever produced it.
  void mutate_PhiPrime(Cochain& c) const { apply_mutations(mutations_, "PhiPrime", c); }

 private:
  Cochain kummer_table(const ModulePtr& m, const std::string& root, const std::string& name) const {
    const GroupTable& g = *model_.gal3;
    Cochain c = Cochain::from_function(m, 2, [&](const Cochain::Tuple& x) {
      auto e1 = exponents(g, x[0]), e2 = exponents(g, x[1]);
      if (e2[0] == 0) return m->zero();
      const bool hit = (e1[0] + e1[1]) % 2 == 1;
      return hit ? io::parse_value(*m, root) : m->zero();
    });
    apply_mutations(mutations_, name, c);
    return c;
  }

  const QuadricModel& model_;
  std::vector<Mutation> mutations_;
};

}  // namespace cohomo::quadric
