#pragma once

#include <algorithm>
#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cohomo/error.hpp"

namespace cohomo {

/// A finite group given by its full multiplication table. Element 0 is
/// the identity. Elements are addressed by index everywhere; names and
/// words exist only for input and output.
class GroupTable {
 public:
  GroupTable() : GroupTable(trivial()) {}

  /// Direct product of cyclic groups <g_1> x ... x <g_r>, g_i of order
  /// orders[i]. Elements are enumerated lexicographically in the exponent
  /// vectors, first generator most significant: for <s,t> of orders
  /// (2,2) the order is 1, t, s, s*t.
  static GroupTable abelian(std::vector<std::string> names, const std::vector<std::size_t>& orders) {
    if (names.size() != orders.size()) throw DimensionError("abelian group: names and orders differ in length");
    for (std::size_t o : orders)
      if (o == 0) throw ValidationError("abelian group: generator order must be positive");
    check_names(names);
    std::size_t n = 1;
    for (std::size_t o : orders) n *= o;
    GroupTable g(Raw{});
    g.names_ = std::move(names);
    g.n_ = n;
    g.abelian_orders_ = orders;
    g.mult_.resize(n * n);
    auto exps = [&](std::size_t idx) {
      std::vector<std::size_t> e(orders.size());
      for (std::size_t i = orders.size(); i-- > 0;) {
        e[i] = idx % orders[i];
        idx /= orders[i];
      }
      return e;
    };
    auto index = [&](const std::vector<std::size_t>& e) {
      std::size_t idx = 0;
      for (std::size_t i = 0; i < orders.size(); ++i) idx = idx * orders[i] + e[i];
      return idx;
    };
    for (std::size_t a = 0; a < n; ++a) {
      auto ea = exps(a);
      for (std::size_t b = 0; b < n; ++b) {
        auto eb = exps(b);
        std::vector<std::size_t> ec(orders.size());
        for (std::size_t i = 0; i < orders.size(); ++i) ec[i] = (ea[i] + eb[i]) % orders[i];
        g.mult_[a * n + b] = index(ec);
      }
    }
    for (std::size_t i = 0; i < orders.size(); ++i) {
      std::vector<std::size_t> e(orders.size(), 0);
      if (orders[i] > 1) e[i] = 1;
      g.gens_.push_back(index(e));
    }
    for (std::size_t a = 0; a < n; ++a) {
      auto e = exps(a);
      std::vector<std::pair<std::size_t, long long>> w;
      for (std::size_t i = 0; i < e.size(); ++i)
        if (e[i]) w.emplace_back(i, static_cast<long long>(e[i]));
      g.words_.push_back(g.format_word(w));
    }
    g.finish();
    return g;
  }

  static GroupTable cyclic(const std::string& name, std::size_t order) { return abelian({name}, {order}); }

  static GroupTable trivial() {
    GroupTable g(Raw{});
    g.n_ = 1;
    g.mult_ = {0};
    g.words_ = {"1"};
    g.finish();
    return g;
  }

  /// Group generated by permutations of {0..d-1}. Elements are enumerated
  /// breadth first from the identity, trying generators in order.
  static GroupTable from_permutations(std::vector<std::string> names,
                                      const std::vector<std::vector<std::size_t>>& perms) {
    if (names.size() != perms.size()) throw DimensionError("permutation group: names and generators differ in length");
    check_names(names);
    const std::size_t d = perms.empty() ? 0 : perms[0].size();
    for (const auto& p : perms) {
      if (p.size() != d) throw DimensionError("permutation group: generators act on different sets");
      std::vector<bool> seen(d, false);
      for (std::size_t x : p) {
        if (x >= d || seen[x]) throw ValidationError("permutation group: generator is not a permutation");
        seen[x] = true;
      }
    }
    using Perm = std::vector<std::size_t>;
    auto compose = [](const Perm& p, const Perm& q) {  // (p*q)(x) = p(q(x))
      Perm r(p.size());
      for (std::size_t x = 0; x < p.size(); ++x) r[x] = p[q[x]];
      return r;
    };
    Perm id(d);
    for (std::size_t x = 0; x < d; ++x) id[x] = x;
    std::vector<Perm> elems{id};
    std::vector<std::vector<std::pair<std::size_t, long long>>> words{{}};
    std::deque<std::size_t> queue{0};
    auto find = [&](const Perm& p) -> std::optional<std::size_t> {
      auto it = std::find(elems.begin(), elems.end(), p);
      if (it == elems.end()) return std::nullopt;
      return static_cast<std::size_t>(it - elems.begin());
    };
    while (!queue.empty()) {
      std::size_t x = queue.front();
      queue.pop_front();
      for (std::size_t k = 0; k < perms.size(); ++k) {
        Perm y = compose(elems[x], perms[k]);
        if (find(y)) continue;
        auto w = words[x];
        if (!w.empty() && w.back().first == k)
          ++w.back().second;
        else
          w.emplace_back(k, 1);
        elems.push_back(std::move(y));
        words.push_back(std::move(w));
        queue.push_back(elems.size() - 1);
      }
    }
    GroupTable g(Raw{});
    g.names_ = std::move(names);
    g.n_ = elems.size();
    g.mult_.resize(g.n_ * g.n_);
    for (std::size_t a = 0; a < g.n_; ++a)
      for (std::size_t b = 0; b < g.n_; ++b) g.mult_[a * g.n_ + b] = *find(compose(elems[a], elems[b]));
    for (const auto& p : perms) g.gens_.push_back(*find(p));
    for (const auto& w : words) g.words_.push_back(g.format_word(w));
    g.finish();
    return g;
  }

  /// Group from an explicit table; mult[a][b] is the index of a*b. The
  /// group laws are checked.
  static GroupTable from_table(std::vector<std::string> names, std::vector<std::size_t> generators,
                               std::vector<std::string> element_words,
                               const std::vector<std::vector<std::size_t>>& mult, bool strict_names = true) {
    check_names(names, strict_names);
    GroupTable g(Raw{});
    g.n_ = mult.size();
    if (g.n_ == 0) throw ValidationError("group table: no elements");
    if (element_words.size() != g.n_) throw DimensionError("group table: one word per element required");
    if (generators.size() != names.size()) throw DimensionError("group table: one element per generator name");
    g.mult_.resize(g.n_ * g.n_);
    for (std::size_t a = 0; a < g.n_; ++a) {
      if (mult[a].size() != g.n_) throw DimensionError("group table: table is not square");
      for (std::size_t b = 0; b < g.n_; ++b) {
        if (mult[a][b] >= g.n_) throw ValidationError("group table: entry out of range");
        g.mult_[a * g.n_ + b] = mult[a][b];
      }
    }
    for (std::size_t x : generators)
      if (x >= g.n_) throw ValidationError("group table: generator index out of range");
    g.names_ = std::move(names);
    g.gens_ = std::move(generators);
    g.words_ = std::move(element_words);
    g.finish();
    return g;
  }

  std::size_t order() const { return n_; }
  static constexpr std::size_t identity() { return 0; }
  std::size_t mul(std::size_t a, std::size_t b) const { return mult_[a * n_ + b]; }
  std::size_t inverse(std::size_t a) const { return inv_[a]; }
  const std::string& word(std::size_t a) const { return words_.at(a); }
  const std::vector<std::string>& words() const { return words_; }

  const std::vector<std::string>& generator_names() const { return names_; }
  /// Element index of each named generator.
  const std::vector<std::size_t>& generators() const { return gens_; }

  /// For the abelian constructor: the declared generator orders.
  const std::vector<std::size_t>& abelian_orders() const { return abelian_orders_; }

  /// For every element g other than the identity, a pair (p, k) with
  /// g = p * generators()[k] and p strictly earlier in breadth-first order.
  /// Building anything multiplicative along this list touches every
  /// element exactly once.
  const std::vector<std::pair<std::size_t, std::size_t>>& factorization() const { return factor_; }
  /// Elements in the breadth-first order used by factorization().
  const std::vector<std::size_t>& bfs_order() const { return bfs_; }

  std::size_t power(std::size_t a, long long e) const {
    std::size_t base = e < 0 ? inverse(a) : a;
    unsigned long long k = e < 0 ? static_cast<unsigned long long>(-e) : static_cast<unsigned long long>(e);
    std::size_t r = identity();
    while (k--) r = mul(r, base);
    return r;
  }

  std::size_t element_order(std::size_t a) const {
    std::size_t k = 1;
    for (std::size_t x = a; x != identity(); x = mul(x, a)) ++k;
    return k;
  }

  bool commute(std::size_t a, std::size_t b) const { return mul(a, b) == mul(b, a); }

  bool is_abelian() const {
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = a + 1; b < n_; ++b)
        if (!commute(a, b)) return false;
    return true;
  }

  bool is_central(std::size_t a) const {
    for (std::size_t b = 0; b < n_; ++b)
      if (!commute(a, b)) return false;
    return true;
  }

  /// An element generating the whole group, if the group is cyclic. The
  /// first declared generator is preferred.
  std::optional<std::size_t> cyclic_generator() const {
    for (std::size_t g : gens_)
      if (element_order(g) == n_) return g;
    for (std::size_t g = 0; g < n_; ++g)
      if (element_order(g) == n_) return g;
    return std::nullopt;
  }

  /// Whether the index set is a subgroup.
  bool is_subgroup(const std::vector<std::size_t>& elems) const {
    std::vector<bool> in(n_, false);
    for (std::size_t x : elems) {
      if (x >= n_) return false;
      in[x] = true;
    }
    if (!in[identity()]) return false;
    for (std::size_t a : elems)
      for (std::size_t b : elems)
        if (!in[mul(a, b)]) return false;
    return true;
  }

  /// Elements generated by the given ones, ascending.
  std::vector<std::size_t> generated(const std::vector<std::size_t>& gens) const {
    std::vector<bool> in(n_, false);
    in[identity()] = true;
    std::vector<std::size_t> list{identity()};
    for (std::size_t i = 0; i < list.size(); ++i)
      for (std::size_t g : gens) {
        std::size_t y = mul(list[i], g);
        if (!in[y]) {
          in[y] = true;
          list.push_back(y);
        }
      }
    std::sort(list.begin(), list.end());
    return list;
  }

  /// Parse "1", "s", "s*t", "t^-1*s^3". An exact element word is
  /// accepted as is. Throws ParseError.
  std::size_t parse_element(const std::string& text) const {
    const std::string t = trim(text);
    for (std::size_t a = 0; a < n_; ++a)
      if (words_[a] == t) return a;
    std::size_t result = identity();
    std::size_t pos = 0;
    bool any = false;
    while (pos <= text.size()) {
      std::size_t star = text.find('*', pos);
      if (star == std::string::npos) star = text.size();
      std::string tok = trim(text.substr(pos, star - pos));
      if (tok.empty()) throw ParseError("group element '" + text + "': empty factor");
      any = true;
      result = mul(result, parse_factor(tok, text));
      pos = star + 1;
    }
    if (!any) throw ParseError("group element: empty text");
    return result;
  }

  friend bool operator==(const GroupTable& a, const GroupTable& b) {
    return a.n_ == b.n_ && a.mult_ == b.mult_ && a.names_ == b.names_ && a.gens_ == b.gens_ && a.words_ == b.words_;
  }

 private:
  struct Raw {};
  explicit GroupTable(Raw) {}

  static void check_names(const std::vector<std::string>& names, bool strict = true) {
    for (std::size_t i = 0; i < names.size(); ++i) {
      const auto& s = names[i];
      if (s.empty() || s == "1") throw ValidationError("group: invalid generator name '" + s + "'");
      for (char ch : s)
        if (((ch == '*' || ch == '^') && strict) || ch == ',' || ch == '(' || ch == ')' || ch == ' ' || ch == '=')
          throw ValidationError("group: invalid character in generator name '" + s + "'");
      for (std::size_t j = 0; j < i; ++j)
        if (names[j] == s) throw ValidationError("group: duplicate generator name '" + s + "'");
    }
  }

  static std::string trim(const std::string& s) {
    std::size_t a = s.find_first_not_of(" \t");
    if (a == std::string::npos) return "";
    std::size_t b = s.find_last_not_of(" \t");
    return s.substr(a, b - a + 1);
  }

  std::size_t parse_factor(const std::string& tok, const std::string& text) const {
    if (tok == "1") return identity();
    std::string base = tok;
    long long e = 1;
    std::size_t caret = tok.find('^');
    if (caret != std::string::npos) {
      base = trim(tok.substr(0, caret));
      std::string ex = trim(tok.substr(caret + 1));
      std::size_t used = 0;
      try {
        e = std::stoll(ex, &used);
      } catch (const std::exception&) {
        used = 0;
      }
      if (ex.empty() || used != ex.size()) throw ParseError("group element '" + text + "': bad exponent '" + ex + "'");
    }
    for (std::size_t k = 0; k < names_.size(); ++k)
      if (names_[k] == base) return power(gens_[k], e);
    throw ParseError("group element '" + text + "': unknown generator '" + base + "'");
  }

  std::string format_word(const std::vector<std::pair<std::size_t, long long>>& w) const {
    if (w.empty()) return "1";
    std::string s;
    for (const auto& [k, e] : w) {
      if (!s.empty()) s += '*';
      s += names_[k];
      if (e != 1) s += "^" + std::to_string(e);
    }
    return s;
  }

  void finish() {
    // identity must be element 0
    for (std::size_t a = 0; a < n_; ++a)
      if (mul(0, a) != a || mul(a, 0) != a) throw ValidationError("group table: element 0 is not the identity");
    inv_.assign(n_, n_);
    for (std::size_t a = 0; a < n_; ++a) {
      for (std::size_t b = 0; b < n_; ++b)
        if (mul(a, b) == 0) {
          if (mul(b, a) != 0) throw ValidationError("group table: one-sided inverse for element " + words_[a]);
          inv_[a] = b;
          break;
        }
      if (inv_[a] == n_) throw ValidationError("group table: element " + words_[a] + " has no inverse");
    }
    for (std::size_t a = 0; a < n_; ++a)
      for (std::size_t b = 0; b < n_; ++b) {
        const std::size_t ab = mul(a, b);
        for (std::size_t c = 0; c < n_; ++c)
          if (mul(ab, c) != mul(a, mul(b, c)))
            throw ValidationError("group table: associativity fails at (" + words_[a] + ", " + words_[b] + ", " +
                                  words_[c] + ")");
      }
    // Breadth-first factorization through the generators.
    factor_.assign(n_, {0, 0});
    bfs_ = {identity()};
    std::vector<bool> seen(n_, false);
    seen[identity()] = true;
    for (std::size_t i = 0; i < bfs_.size(); ++i)
      for (std::size_t k = 0; k < gens_.size(); ++k) {
        std::size_t y = mul(bfs_[i], gens_[k]);
        if (seen[y]) continue;
        seen[y] = true;
        factor_[y] = {bfs_[i], k};
        bfs_.push_back(y);
      }
    if (bfs_.size() != n_) throw ValidationError("group table: the named generators do not generate the group");
  }

  std::vector<std::string> names_;
  std::vector<std::size_t> gens_;
  std::vector<std::string> words_;
  std::size_t n_ = 0;
  std::vector<std::size_t> mult_;
  std::vector<std::size_t> inv_;
  std::vector<std::size_t> abelian_orders_;
  std::vector<std::pair<std::size_t, std::size_t>> factor_;
  std::vector<std::size_t> bfs_;
};

/// A subgroup as a group in its own right, with its embedding.
struct Subgroup {
  GroupTable table;
  std::vector<std::size_t> embedding;  // subgroup index -> parent index
};

/// Build the subgroup with the given element set. Generators are chosen
/// greedily: parent generators first, in declaration order, then the
/// remaining elements by index; each is named by its parent word. When
/// the subgroup is abelian and the chosen generators give a direct
/// product, elements are enumerated as in GroupTable::abelian.
inline Subgroup make_subgroup(const GroupTable& g, std::vector<std::size_t> elems) {
  std::sort(elems.begin(), elems.end());
  elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
  if (!g.is_subgroup(elems)) throw ValidationError("subgroup: index set is not closed under multiplication");
  std::vector<bool> in(g.order(), false);
  for (std::size_t x : elems) in[x] = true;

  std::vector<std::size_t> candidates;
  for (std::size_t x : g.generators())
    if (in[x] && x != g.identity()) candidates.push_back(x);
  for (std::size_t x : elems) candidates.push_back(x);
  std::vector<std::size_t> gens;
  std::vector<std::size_t> span{g.identity()};
  for (std::size_t x : candidates) {
    if (span.size() == elems.size()) break;
    if (std::binary_search(span.begin(), span.end(), x)) continue;
    gens.push_back(x);
    span = g.generated(gens);
  }

  std::vector<std::string> names;
  for (std::size_t x : gens) names.push_back(g.word(x));

  // Element order: lexicographic in exponents when that is a bijection.
  std::vector<std::size_t> order_list;
  bool product = true;
  for (std::size_t a : gens)
    for (std::size_t b : gens)
      if (!g.commute(a, b)) product = false;
  std::vector<std::size_t> orders;
  for (std::size_t x : gens) orders.push_back(g.element_order(x));
  if (product) {
    std::size_t total = 1;
    for (std::size_t o : orders) total *= o;
    if (total != elems.size()) product = false;
  }
  std::vector<std::string> words;
  if (product) {
    std::vector<std::size_t> e(gens.size(), 0);
    for (std::size_t idx = 0; idx < elems.size(); ++idx) {
      std::size_t x = g.identity();
      for (std::size_t i = 0; i < gens.size(); ++i) x = g.mul(x, g.power(gens[i], static_cast<long long>(e[i])));
      order_list.push_back(x);
      for (std::size_t i = gens.size(); i-- > 0;) {
        if (++e[i] < orders[i]) break;
        e[i] = 0;
      }
    }
    for (std::size_t x : order_list) words.push_back(g.word(x));
  } else {
    order_list = {g.identity()};
    std::vector<bool> seen(g.order(), false);
    seen[g.identity()] = true;
    for (std::size_t i = 0; i < order_list.size(); ++i)
      for (std::size_t x : gens) {
        std::size_t y = g.mul(order_list[i], x);
        if (!seen[y]) {
          seen[y] = true;
          order_list.push_back(y);
        }
      }
    for (std::size_t x : order_list) words.push_back(g.word(x));
  }

  std::vector<std::size_t> local(g.order(), 0);
  for (std::size_t i = 0; i < order_list.size(); ++i) local[order_list[i]] = i;
  std::vector<std::vector<std::size_t>> mult(order_list.size(), std::vector<std::size_t>(order_list.size()));
  for (std::size_t i = 0; i < order_list.size(); ++i)
    for (std::size_t j = 0; j < order_list.size(); ++j) mult[i][j] = local[g.mul(order_list[i], order_list[j])];
  std::vector<std::size_t> gen_local;
  for (std::size_t x : gens) gen_local.push_back(local[x]);
  // Generator names are parent words and may contain '*'.
  return {GroupTable::from_table(std::move(names), std::move(gen_local), std::move(words), mult, false), order_list};
}

/// Index map G -> Q of the homomorphism sending the i-th generator of G to
/// images[i]. Throws ValidationError if no such homomorphism exists.
inline std::vector<std::size_t> homomorphism_from_generators(const GroupTable& g, const GroupTable& q,
                                                             const std::vector<std::size_t>& images) {
  if (images.size() != g.generators().size())
    throw DimensionError("homomorphism: one image per generator required");
  std::vector<std::size_t> map(g.order(), 0);
  for (std::size_t x : g.bfs_order()) {
    if (x == g.identity()) continue;
    auto [p, k] = g.factorization()[x];
    if (images[k] >= q.order()) throw ValidationError("homomorphism: image index out of range");
    map[x] = q.mul(map[p], images[k]);
  }
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (map[g.mul(a, b)] != q.mul(map[a], map[b]))
        throw ValidationError("homomorphism: generator images do not respect the relations of " + g.word(a) +
                              " and " + g.word(b));
  return map;
}

/// Checks that `map` (indices of G -> indices of Q) is a homomorphism.
inline bool is_homomorphism(const GroupTable& g, const GroupTable& q, const std::vector<std::size_t>& map) {
  if (map.size() != g.order()) return false;
  for (std::size_t x : map)
    if (x >= q.order()) return false;
  for (std::size_t a = 0; a < g.order(); ++a)
    for (std::size_t b = 0; b < g.order(); ++b)
      if (map[g.mul(a, b)] != q.mul(map[a], map[b])) return false;
  return true;
}

}  // namespace cohomo
