#pragma once

#include <cctype>
#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "cohomo/error.hpp"
#include "cohomo/gmodule.hpp"

namespace cohomo::io {

inline std::string trim(const std::string& s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return s.substr(b, e - b);
}

/// Splits on `sep` outside of (), [] brackets.
inline std::vector<std::string> split_top(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  int depth = 0;
  for (char c : s) {
    if (c == '(' || c == '[') ++depth;
    if (c == ')' || c == ']') --depth;
    if (c == sep && depth == 0) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  out.push_back(cur);
  return out;
}

inline long long parse_int(const std::string& text, const std::string& context) {
  std::string t = trim(text);
  std::size_t pos = 0;
  long long v = 0;
  try {
    v = std::stoll(t, &pos);
  } catch (const std::exception&) {
    throw ParseError(context + ": expected an integer, got '" + t + "'");
  }
  if (pos != t.size()) throw ParseError(context + ": expected an integer, got '" + t + "'");
  return v;
}

inline Integer parse_integer(const std::string& text, const std::string& context) {
  std::string t = trim(text);
  std::size_t i = (!t.empty() && (t[0] == '-' || t[0] == '+')) ? 1 : 0;
  if (i == t.size()) throw ParseError(context + ": expected an integer, got '" + t + "'");
  for (std::size_t j = i; j < t.size(); ++j)
    if (!std::isdigit(static_cast<unsigned char>(t[j])))
      throw ParseError(context + ": expected an integer, got '" + t + "'");
  return Integer(t[0] == '+' ? t.substr(1) : t);
}

/// "(1,0,-2)" as an integer vector.
inline IntVector parse_vector(const std::string& text, const std::string& context) {
  std::string t = trim(text);
  if (t.size() < 2 || t.front() != '(' || t.back() != ')')
    throw ParseError(context + ": expected a vector like (1,0), got '" + t + "'");
  std::string inner = trim(t.substr(1, t.size() - 2));
  IntVector v;
  if (inner.empty()) return v;
  for (const auto& part : split_top(inner, ',')) v.push_back(parse_integer(part, context));
  return v;
}

namespace detail {

inline std::optional<IntVector> lookup_symbol(const GModule& m, const std::string& name) {
  const auto& names = m.generator_names();
  for (std::size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return unit_vector(m.n_gen(), i);
  auto it = m.aliases().find(name);
  if (it != m.aliases().end()) return it->second;
  return std::nullopt;
}

}  // namespace detail

/// A module element written as an exponent vector "(a,b,..)", a generator
/// name or alias, or a product of powers such as "-mu^-1*alpha'". A
/// leading minus multiplies by the alias "-1"; "1" is the identity.
inline IntVector parse_value(const GModule& m, const std::string& text) {
  const std::string t = trim(text);
  const std::string ctx = "value '" + t + "'";
  if (t.empty()) throw ParseError("empty value");
  if (t.front() == '(') {
    IntVector v = parse_vector(t, ctx);
    if (v.size() != m.n_gen())
      throw ParseError(ctx + ": has " + std::to_string(v.size()) + " entries, module has " +
                       std::to_string(m.n_gen()) + " generators");
    return m.normal_form(v);
  }
  if (auto v = detail::lookup_symbol(m, t)) return m.normal_form(*v);

  IntVector acc = m.zero();
  std::string body = t;
  if (body[0] == '+') body = trim(body.substr(1));
  if (!body.empty() && body[0] == '-' && (body.size() == 1 || !std::isdigit(static_cast<unsigned char>(body[1])))) {
    auto sign = detail::lookup_symbol(m, "-1");
    if (!sign) throw ParseError(ctx + ": this module has no sign element -1");
    acc += *sign;
    body = trim(body.substr(1));
  }
  for (const auto& raw : split_top(body, '*')) {
    const std::string f = trim(raw);
    if (f.empty()) throw ParseError(ctx + ": empty factor");
    if (f == "1" || f == "+1") continue;
    if (auto v = detail::lookup_symbol(m, f)) {
      acc += *v;
      continue;
    }
    std::size_t caret = std::string::npos;
    int depth = 0;
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (f[i] == '(' || f[i] == '[') ++depth;
      if (f[i] == ')' || f[i] == ']') --depth;
      if (f[i] == '^' && depth == 0) caret = i;
    }
    if (caret == std::string::npos) throw ParseError(ctx + ": unknown symbol '" + f + "'");
    auto base = detail::lookup_symbol(m, trim(f.substr(0, caret)));
    if (!base) throw ParseError(ctx + ": unknown symbol '" + trim(f.substr(0, caret)) + "'");
    acc += Integer(parse_int(f.substr(caret + 1), ctx)) * *base;
  }
  return m.normal_form(acc);
}

/// Multiplicative rendering: "1", "-1", "mu", "-mu^-1", "[L1]^2".
inline std::string format_value(const GModule& m, const IntVector& value) {
  IntVector v = m.normal_form(value);
  bool negative = false;
  auto sign = m.aliases().find("-1");
  if (sign != m.aliases().end()) {
    for (std::size_t j = 0; j < v.size(); ++j)
      if (sign->second == unit_vector(m.n_gen(), j)) {
        if (v[j] % 2 != 0) negative = true;
        v[j] = 0;
      }
  }
  std::string out;
  const auto& names = m.generator_names();
  for (std::size_t j = 0; j < v.size(); ++j) {
    if (v[j] == 0) continue;
    if (!out.empty()) out += "*";
    out += names[j];
    if (v[j] != 1) out += "^" + v[j].str();
  }
  if (out.empty()) return negative ? "-1" : "1";
  return negative ? "-" + out : out;
}

}  // namespace cohomo::io
