#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "cohomo/gmodule.hpp"

namespace cohomo {

/// Upper bound on the number of tuples in any dense cochain table.
/// Defaults to 10^6; the environment variable COHOMO_MAX_TABLE overrides.
inline std::size_t max_table_entries() {
  if (const char* env = std::getenv("COHOMO_MAX_TABLE")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return 1000000;
}

/// |G|^n, or a ResourceError if that exceeds the configured bound.
inline std::size_t table_size(std::size_t group_order, std::size_t degree) {
  const std::size_t bound = max_table_entries();
  std::size_t n = 1;
  for (std::size_t i = 0; i < degree; ++i) {
    if (group_order != 0 && n > bound / group_order)
      throw ResourceError("cochain table of " + std::to_string(group_order) + "^" + std::to_string(degree) +
                          " entries exceeds the bound of " + std::to_string(bound));
    n *= group_order;
  }
  if (n > bound)
    throw ResourceError("cochain table of " + std::to_string(n) + " entries exceeds the bound of " +
                        std::to_string(bound));
  return n;
}

/// A function G^n -> M stored densely. The tuple (g_1, ..., g_n) lives at
/// index sum g_i |G|^(n-i): the first argument is the most significant
/// digit. Values are kept in normal form.
class Cochain {
 public:
  using Tuple = std::vector<std::size_t>;

  Cochain(ModulePtr module, std::size_t degree) : module_(std::move(module)), degree_(degree) {
    values_.assign(table_size(module_->group().order(), degree_), module_->zero());
  }

  static Cochain from_function(ModulePtr module, std::size_t degree, const std::function<IntVector(const Tuple&)>& f) {
    Cochain c(std::move(module), degree);
    for (std::size_t i = 0; i < c.size(); ++i) c.set(i, f(c.tuple(i)));
    return c;
  }

  const GModule& module() const { return *module_; }
  const ModulePtr& module_ptr() const { return module_; }
  const GroupTable& group() const { return module_->group(); }
  std::size_t degree() const { return degree_; }
  std::size_t size() const { return values_.size(); }

  const IntVector& at(std::size_t index) const { return values_.at(index); }
  const IntVector& at(const Tuple& t) const { return values_.at(index(t)); }
  void set(std::size_t index, const IntVector& v) {
    if (v.size() != module_->n_gen())
      throw DimensionError("cochain value has length " + std::to_string(v.size()) + ", module has " +
                           std::to_string(module_->n_gen()) + " generators");
    values_.at(index) = module_->normal_form(v);
  }
  void set(const Tuple& t, const IntVector& v) { set(index(t), v); }
  const std::vector<IntVector>& values() const { return values_; }

  std::size_t index(const Tuple& t) const {
    if (t.size() != degree_)
      throw DimensionError("cochain of degree " + std::to_string(degree_) + " evaluated on " +
                           std::to_string(t.size()) + " arguments");
    const std::size_t n = group().order();
    std::size_t idx = 0;
    for (std::size_t g : t) {
      if (g >= n) throw DimensionError("cochain argument out of range");
      idx = idx * n + g;
    }
    return idx;
  }

  Tuple tuple(std::size_t index) const {
    const std::size_t n = group().order();
    Tuple t(degree_);
    for (std::size_t i = degree_; i-- > 0;) {
      t[i] = index % n;
      index /= n;
    }
    return t;
  }

  /// "(t,t,s)" for the tuple at `index`; "()" in degree 0.
  std::string label(std::size_t index) const {
    Tuple t = tuple(index);
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
      if (i) s += ",";
      s += group().word(t[i]);
    }
    return s + ")";
  }

  bool is_zero() const {
    for (const auto& v : values_)
      if (!cohomo::is_zero(v)) return false;
    return true;
  }

  /// Zero whenever some argument is the identity.
  bool is_normalized() const {
    for (std::size_t i = 0; i < size(); ++i) {
      if (cohomo::is_zero(values_[i])) continue;
      for (std::size_t g : tuple(i))
        if (g == GroupTable::identity()) return false;
    }
    return true;
  }

  /// Flattened coordinates: the value at tuple i occupies positions
  /// [i k, (i+1) k) for a module with k generators.
  IntVector flatten() const {
    const std::size_t k = module_->n_gen();
    IntVector out(size() * k);
    for (std::size_t i = 0; i < size(); ++i)
      for (std::size_t j = 0; j < k; ++j) out[i * k + j] = values_[i][j];
    return out;
  }

  static Cochain unflatten(ModulePtr module, std::size_t degree, const IntVector& flat) {
    Cochain c(std::move(module), degree);
    const std::size_t k = c.module().n_gen();
    if (flat.size() != c.size() * k) throw DimensionError("unflatten: vector has the wrong length");
    for (std::size_t i = 0; i < c.size(); ++i) {
      IntVector v(flat.begin() + static_cast<long>(i * k), flat.begin() + static_cast<long>((i + 1) * k));
      c.set(i, v);
    }
    return c;
  }

  Cochain& operator+=(const Cochain& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < size(); ++i) values_[i] = module_->normal_form(values_[i] + o.values_[i]);
    return *this;
  }
  Cochain& operator-=(const Cochain& o) {
    check_compatible(o);
    for (std::size_t i = 0; i < size(); ++i) values_[i] = module_->normal_form(values_[i] - o.values_[i]);
    return *this;
  }
  friend Cochain operator+(Cochain a, const Cochain& b) { return a += b; }
  friend Cochain operator-(Cochain a, const Cochain& b) { return a -= b; }
  friend Cochain operator*(const Integer& k, Cochain a) {
    for (std::size_t i = 0; i < a.size(); ++i) a.values_[i] = a.module_->normal_form(k * a.values_[i]);
    return a;
  }

  friend bool operator==(const Cochain& a, const Cochain& b) {
    return a.degree_ == b.degree_ && a.same_module(b) && a.values_ == b.values_;
  }

  bool same_module(const Cochain& o) const { return module_ == o.module_ || *module_ == *o.module_; }

  void check_compatible(const Cochain& o) const {
    if (degree_ != o.degree_)
      throw DimensionError("cochains of degrees " + std::to_string(degree_) + " and " + std::to_string(o.degree_));
    if (!same_module(o)) throw DimensionError("cochains over different modules");
  }

 private:
  ModulePtr module_;
  std::size_t degree_;
  std::vector<IntVector> values_;
};

/// The inhomogeneous differential
/// (dc)(g_1..g_{n+1}) = g_1 c(g_2..g_{n+1})
///                    + sum_{i=1}^{n} (-1)^i c(g_1..g_i g_{i+1}..g_{n+1})
///                    + (-1)^{n+1} c(g_1..g_n).
inline Cochain coboundary(const Cochain& c) {
  const GModule& m = c.module();
  const GroupTable& g = m.group();
  const std::size_t n = c.degree();
  const std::size_t N = g.order();
  Cochain out(c.module_ptr(), n + 1);
  std::vector<std::size_t> t;
  for (std::size_t idx = 0; idx < out.size(); ++idx) {
    t = out.tuple(idx);
    // Index arithmetic on the tail and head of t.
    std::size_t tail = 0, head = 0;
    for (std::size_t i = 1; i <= n; ++i) tail = tail * N + t[i];
    for (std::size_t i = 0; i < n; ++i) head = head * N + t[i];
    IntVector v = m.action(t[0]) * c.at(tail);
    for (std::size_t i = 1; i <= n; ++i) {
      std::size_t merged = 0;
      for (std::size_t j = 0; j <= n; ++j) {
        if (j == i) continue;
        std::size_t gj = (j == i - 1) ? g.mul(t[i - 1], t[i]) : t[j];
        merged = merged * N + gj;
      }
      if (i % 2)
        v -= c.at(merged);
      else
        v += c.at(merged);
    }
    if ((n + 1) % 2)
      v -= c.at(head);
    else
      v += c.at(head);
    out.set(idx, v);
  }
  return out;
}

/// Matrix of d: C^n -> C^{n+1} in flattened coordinates, as sparse
/// columns (one per pair (tuple, module generator)).
inline std::vector<SparseRow> coboundary_columns(const GModule& m, std::size_t n) {
  const GroupTable& g = m.group();
  const std::size_t N = g.order();
  const std::size_t k = m.n_gen();
  const std::size_t src = table_size(N, n);
  const std::size_t dst = table_size(N, n + 1);
  std::vector<std::vector<std::pair<std::size_t, Integer>>> acc(src * k);
  std::vector<std::size_t> t(n + 1);
  for (std::size_t idx = 0; idx < dst; ++idx) {
    std::size_t rest = idx;
    for (std::size_t i = n + 1; i-- > 0;) {
      t[i] = rest % N;
      rest /= N;
    }
    std::size_t tail = 0, head = 0;
    for (std::size_t i = 1; i <= n; ++i) tail = tail * N + t[i];
    for (std::size_t i = 0; i < n; ++i) head = head * N + t[i];
    const IntMatrix& a = m.action(t[0]);
    for (std::size_t j = 0; j < k; ++j)
      for (std::size_t r = 0; r < k; ++r)
        if (a(r, j) != 0) acc[tail * k + j].emplace_back(idx * k + r, a(r, j));
    for (std::size_t i = 1; i <= n; ++i) {
      std::size_t merged = 0;
      for (std::size_t j = 0; j <= n; ++j) {
        if (j == i) continue;
        merged = merged * N + ((j == i - 1) ? g.mul(t[i - 1], t[i]) : t[j]);
      }
      const int sign = (i % 2) ? -1 : 1;
      for (std::size_t j = 0; j < k; ++j) acc[merged * k + j].emplace_back(idx * k + j, sign);
    }
    const int sign = ((n + 1) % 2) ? -1 : 1;
    for (std::size_t j = 0; j < k; ++j) acc[head * k + j].emplace_back(idx * k + j, sign);
  }
  std::vector<SparseRow> cols(src * k);
  for (std::size_t c = 0; c < acc.size(); ++c) {
    auto& e = acc[c];
    std::sort(e.begin(), e.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    SparseRow r;
    for (auto& [row, v] : e) {
      if (!r.empty() && r.back().first == row)
        r.back().second += v;
      else
        r.emplace_back(row, std::move(v));
      if (!r.empty() && r.back().second == 0) r.pop_back();
    }
    cols[c] = std::move(r);
  }
  return cols;
}

/// Relation lattice of C^n = M^(|G|^n): block copies of the module's
/// relation basis, again in reduced echelon form.
inline Echelon cochain_relations(const GModule& m, std::size_t tuples) {
  const std::size_t k = m.n_gen();
  Echelon out;
  for (std::size_t i = 0; i < tuples; ++i)
    for (const auto& r : m.carrier().relation_basis().rows) {
      SparseRow s;
      for (const auto& [c, v] : r) s.emplace_back(i * k + c, v);
      out.rows.push_back(std::move(s));
    }
  return out;
}

}  // namespace cohomo
