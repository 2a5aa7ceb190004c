#pragma once

#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "cohomo/cochain.hpp"
#include "cohomo/gmodule.hpp"
#include "cohomo/io/values.hpp"

namespace cohomo::io {

// Input documents are sectioned text:
//
//   # comment
//   [group]
//   generators = s, t
//   orders = 2, 2
//
//   [module]
//   generators = L1
//   action.s = -1
//
//   [cochain]
//   degree = 1
//   value(s) = L1
//
// Matrices are written row by row, rows separated by ';' and entries by
// ','. An action matrix has the images of the module generators as its
// columns.

struct Section {
  std::string name;
  std::string arg;  // "[module A]" has arg "A"
  std::size_t line = 0;
  std::vector<std::pair<std::string, std::string>> entries;
  std::vector<std::size_t> entry_lines;
};

inline std::vector<Section> split_sections(const std::string& text) {
  std::vector<Section> out;
  std::istringstream in(text);
  std::string raw;
  std::size_t lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    if (auto h = raw.find('#'); h != std::string::npos) raw.erase(h);
    std::string line = trim(raw);
    if (line.empty()) continue;
    if (line.front() == '[') {
      if (line.back() != ']') throw ParseError("line " + std::to_string(lineno) + ": unterminated section header");
      std::string inner = trim(line.substr(1, line.size() - 2));
      Section s;
      s.line = lineno;
      auto sp = inner.find_first_of(" \t");
      s.name = inner.substr(0, sp);
      if (sp != std::string::npos) s.arg = trim(inner.substr(sp));
      if (s.name != "group" && s.name != "module" && s.name != "cochain" && s.name != "ses")
        throw ParseError("line " + std::to_string(lineno) + ": unknown section [" + s.name + "]");
      out.push_back(std::move(s));
      continue;
    }
    if (out.empty()) throw ParseError("line " + std::to_string(lineno) + ": entry outside of any section");
    auto eq = line.find('=');
    if (eq == std::string::npos) throw ParseError("line " + std::to_string(lineno) + ": expected key = value");
    std::string key = trim(line.substr(0, eq));
    for (const auto& [k, v] : out.back().entries)
      if (k == key) throw ParseError("line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
    out.back().entries.emplace_back(key, trim(line.substr(eq + 1)));
    out.back().entry_lines.push_back(lineno);
  }
  return out;
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  if (trim(s).empty()) return out;
  for (const auto& p : split_top(s, ',')) out.push_back(trim(p));
  return out;
}

/// "1,0; 0,1" with the given number of columns; empty text is a 0-row matrix.
inline IntMatrix parse_matrix(const std::string& text, std::size_t cols, const std::string& context) {
  std::vector<IntVector> rows;
  if (!trim(text).empty())
    for (const auto& r : split_top(text, ';')) {
      IntVector row;
      for (const auto& e : split_list(r)) row.push_back(parse_integer(e, context));
      if (row.size() != cols)
        throw ParseError(context + ": row has " + std::to_string(row.size()) + " entries, expected " +
                         std::to_string(cols));
      rows.push_back(std::move(row));
    }
  return IntMatrix::from_rows(rows, cols);
}

inline std::string format_matrix(const IntMatrix& m) {
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += "; ";
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? "," : "") + m(i, j).str();
  }
  return out;
}

struct Document {
  GroupPtr group;
  std::vector<std::pair<std::string, ModulePtr>> modules;  // in file order; "" for an unnamed module
  std::optional<Cochain> cochain;
  std::optional<ShortExactSeq> ses;

  ModulePtr module(const std::string& name = "") const {
    for (const auto& [n, m] : modules)
      if (n == name) return m;
    if (name.empty() && modules.size() == 1) return modules.front().second;
    throw ParseError(name.empty() ? "document has no unique module" : "document has no module named '" + name + "'");
  }
};

/// Things a document may refer to without defining them.
struct ParseContext {
  std::string base_dir = ".";
  GroupPtr group;
  ModulePtr module;
};

Document load_document(const std::string& path, ParseContext ctx = {});

namespace detail {

class Entries {
 public:
  explicit Entries(const Section& s) : s_(s), used_(s.entries.size(), false) {}

  std::optional<std::string> get(const std::string& key) {
    for (std::size_t i = 0; i < s_.entries.size(); ++i)
      if (s_.entries[i].first == key) {
        used_[i] = true;
        return s_.entries[i].second;
      }
    return std::nullopt;
  }

  std::string require(const std::string& key) {
    auto v = get(key);
    if (!v) throw ParseError(where() + ": missing key '" + key + "'");
    return *v;
  }

  /// Entries whose key starts with `prefix`, with the prefix removed.
  std::vector<std::pair<std::string, std::string>> with_prefix(const std::string& prefix) {
    std::vector<std::pair<std::string, std::string>> out;
    for (std::size_t i = 0; i < s_.entries.size(); ++i)
      if (s_.entries[i].first.rfind(prefix, 0) == 0) {
        used_[i] = true;
        out.emplace_back(s_.entries[i].first.substr(prefix.size()), s_.entries[i].second);
      }
    return out;
  }

  void finish() const {
    for (std::size_t i = 0; i < used_.size(); ++i)
      if (!used_[i])
        throw ParseError("line " + std::to_string(s_.entry_lines[i]) + ": unknown key '" + s_.entries[i].first +
                         "' in [" + s_.name + "]");
  }

  std::string where() const { return "[" + s_.name + "] at line " + std::to_string(s_.line); }

 private:
  const Section& s_;
  std::vector<bool> used_;
};

inline std::size_t parse_size(const std::string& text, const std::string& context) {
  long long v = parse_int(text, context);
  if (v < 0) throw ParseError(context + ": expected a nonnegative integer");
  return static_cast<std::size_t>(v);
}

inline GroupTable parse_group(const Section& s) {
  Entries e(s);
  auto names = split_list(e.require("generators"));
  auto orders = e.get("orders");
  auto perms = e.with_prefix("permutation.");
  auto elements = e.get("elements");
  auto table = e.get("table");
  auto gen_elems = e.get("generator_elements");
  e.finish();
  const int kinds = (orders ? 1 : 0) + (perms.empty() ? 0 : 1) + (elements || table ? 1 : 0);
  if (kinds > 1) throw ParseError(e.where() + ": give exactly one of orders, permutation.*, or elements + table");
  if (orders) {
    std::vector<std::size_t> o;
    for (const auto& x : split_list(*orders)) o.push_back(parse_size(x, "orders"));
    if (names.empty() && o.empty()) return GroupTable::trivial();
    return GroupTable::abelian(names, o);
  }
  if (!perms.empty()) {
    std::vector<std::vector<std::size_t>> ps(names.size());
    std::vector<bool> seen(names.size(), false);
    for (const auto& [n, v] : perms) {
      std::size_t k = 0;
      while (k < names.size() && names[k] != n) ++k;
      if (k == names.size()) throw ParseError(e.where() + ": permutation for unknown generator '" + n + "'");
      for (const auto& x : split_list(v)) ps[k].push_back(parse_size(x, "permutation." + n));
      seen[k] = true;
    }
    for (std::size_t k = 0; k < names.size(); ++k)
      if (!seen[k]) throw ParseError(e.where() + ": missing permutation." + names[k]);
    return GroupTable::from_permutations(names, ps);
  }
  if (elements && table) {
    auto words = split_list(*elements);
    std::vector<std::vector<std::size_t>> mult;
    for (const auto& row : split_top(*table, ';')) {
      std::vector<std::size_t> r;
      for (const auto& x : split_list(row)) r.push_back(parse_size(x, "table"));
      mult.push_back(std::move(r));
    }
    std::vector<std::size_t> gens;
    if (gen_elems) {
      for (const auto& x : split_list(*gen_elems)) gens.push_back(parse_size(x, "generator_elements"));
    } else {
      for (const auto& n : names) {
        std::size_t k = 0;
        while (k < words.size() && words[k] != n) ++k;
        if (k == words.size()) throw ParseError(e.where() + ": no element is named '" + n + "'");
        gens.push_back(k);
      }
    }
    return GroupTable::from_table(names, gens, words, mult, false);
  }
  if (gen_elems) throw ParseError(e.where() + ": generator_elements needs elements and table");
  if (names.empty()) return GroupTable::trivial();
  throw ParseError(e.where() + ": give orders, permutation.* or elements + table");
}

inline GModule parse_module(const Section& s, const GroupPtr& g) {
  Entries e(s);
  auto names = split_list(e.require("generators"));
  const std::size_t n = names.size();
  IntMatrix rel = parse_matrix(e.get("relations").value_or(""), n, "relations");
  auto acts = e.with_prefix("action.");
  auto aliases = e.with_prefix("alias.");
  e.finish();
  std::vector<IntMatrix> gen_actions(g->generators().size(), IntMatrix::identity(n));
  for (const auto& [gen, text] : acts) {
    std::size_t k = 0;
    const auto& gn = g->generator_names();
    while (k < gn.size() && gn[k] != gen) ++k;
    if (k == gn.size()) throw ParseError(e.where() + ": action for unknown group generator '" + gen + "'");
    IntMatrix m = parse_matrix(text, n, "action." + gen);
    if (m.rows() != n) throw ParseError("action." + gen + ": matrix must be " + std::to_string(n) + "x" + std::to_string(n));
    gen_actions[k] = std::move(m);
  }
  GModule mod = GModule::from_generator_action(g, FinAbGroup(n, rel), gen_actions, names);
  for (const auto& [name, text] : aliases) mod.set_alias(name, parse_value(mod, text));
  return mod;
}

inline Cochain::Tuple parse_arguments(const GroupTable& g, const std::string& text, const std::string& context) {
  Cochain::Tuple t;
  if (trim(text).empty()) return t;
  for (const auto& a : split_top(text, ',')) t.push_back(g.parse_element(trim(a)));
  (void)context;
  return t;
}

}  // namespace detail

inline Document parse_document(const std::string& text, ParseContext ctx = {}) {
  auto sections = split_sections(text);
  Document doc;
  doc.group = ctx.group;
  namespace fs = std::filesystem;
  auto resolve = [&](const std::string& p) { return (fs::path(ctx.base_dir) / p).string(); };

  const Section* group_sec = nullptr;
  for (const auto& s : sections)
    if (s.name == "group") {
      if (group_sec) throw ParseError("line " + std::to_string(s.line) + ": second [group] section");
      group_sec = &s;
    }
  if (group_sec) doc.group = share(detail::parse_group(*group_sec));

  // A [cochain] may name the files holding its group and module.
  const Section* cochain_sec = nullptr;
  for (const auto& s : sections)
    if (s.name == "cochain") {
      if (cochain_sec) throw ParseError("line " + std::to_string(s.line) + ": second [cochain] section");
      cochain_sec = &s;
    }
  ModulePtr external_module = ctx.module;
  std::optional<detail::Entries> cochain_entries;
  if (cochain_sec) {
    cochain_entries.emplace(*cochain_sec);
    if (auto gf = cochain_entries->get("group_file")) {
      if (doc.group && group_sec) throw ParseError(cochain_entries->where() + ": group_file given next to [group]");
      auto gd = load_document(resolve(*gf));
      if (!gd.group) throw ParseError(*gf + ": no [group] section");
      doc.group = gd.group;
    }
    if (auto mf = cochain_entries->get("module_file")) {
      if (!doc.group) throw ParseError(cochain_entries->where() + ": module_file needs a group");
      ParseContext sub;
      sub.group = doc.group;
      sub.base_dir = fs::path(resolve(*mf)).parent_path().string();
      external_module = load_document(resolve(*mf), sub).module();
    }
  }

  for (const auto& s : sections)
    if (s.name == "module") {
      if (!doc.group) throw ParseError("line " + std::to_string(s.line) + ": [module] needs a group");
      for (const auto& [n, m] : doc.modules)
        if (n == s.arg) throw ParseError("line " + std::to_string(s.line) + ": duplicate module '" + s.arg + "'");
      doc.modules.emplace_back(s.arg, share(detail::parse_module(s, doc.group)));
    }

  if (cochain_sec) {
    auto& e = *cochain_entries;
    const std::size_t degree = detail::parse_size(e.require("degree"), "degree");
    ModulePtr m;
    if (auto name = e.get("module")) {
      m = doc.module(*name);
    } else if (external_module) {
      m = external_module;
    } else {
      m = doc.module();
    }
    Cochain c(m, degree);
    for (const auto& [key, text] : e.with_prefix("value(")) {
      if (key.empty() || key.back() != ')') throw ParseError(e.where() + ": malformed key 'value(" + key + "'");
      Cochain::Tuple t = detail::parse_arguments(m->group(), key.substr(0, key.size() - 1), "value");
      if (t.size() != degree)
        throw ParseError(e.where() + ": value(" + key + " has " + std::to_string(t.size()) + " arguments, degree is " +
                         std::to_string(degree));
      c.set(t, parse_value(*m, text));
    }
    e.finish();
    doc.cochain = std::move(c);
  }

  for (const auto& s : sections)
    if (s.name == "ses") {
      if (doc.ses) throw ParseError("line " + std::to_string(s.line) + ": second [ses] section");
      detail::Entries e(s);
      ModulePtr a = doc.module(e.require("sub")), b = doc.module(e.require("middle")),
                c = doc.module(e.require("quotient"));
      IntMatrix inj = parse_matrix(e.require("inj"), a->n_gen(), "inj");
      IntMatrix surj = parse_matrix(e.require("surj"), b->n_gen(), "surj");
      auto sec = e.with_prefix("section.");
      e.finish();
      std::optional<std::vector<IntVector>> hint;
      if (!sec.empty()) {
        std::vector<IntVector> h(c->n_gen());
        std::vector<bool> seen(c->n_gen(), false);
        for (const auto& [gen, text] : sec) {
          std::size_t k = 0;
          while (k < c->n_gen() && c->generator_names()[k] != gen) ++k;
          if (k == c->n_gen()) throw ParseError(e.where() + ": section for unknown generator '" + gen + "'");
          h[k] = parse_value(*b, text);
          seen[k] = true;
        }
        for (std::size_t k = 0; k < seen.size(); ++k)
          if (!seen[k]) throw ParseError(e.where() + ": missing section." + c->generator_names()[k]);
        hint = std::move(h);
      }
      doc.ses.emplace(ModuleMap(a, b, inj), ModuleMap(b, c, surj), hint);
    }
  return doc;
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline Document load_document(const std::string& path, ParseContext ctx) {
  const std::string text = read_file(path);
  ctx.base_dir = std::filesystem::path(path).parent_path().string();
  if (ctx.base_dir.empty()) ctx.base_dir = ".";
  try {
    return parse_document(text, ctx);
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.what());
  }
}

inline std::string serialize_group(const GroupTable& g) {
  std::string out = "[group]\ngenerators = ";
  const auto& names = g.generator_names();
  for (std::size_t i = 0; i < names.size(); ++i) out += (i ? ", " : "") + names[i];
  out += "\n";
  if (g.order() == 1 && names.empty()) return out + "orders =\n";
  if (!g.abelian_orders().empty()) {
    out += "orders = ";
    for (std::size_t i = 0; i < g.abelian_orders().size(); ++i)
      out += (i ? ", " : "") + std::to_string(g.abelian_orders()[i]);
    return out + "\n";
  }
  out += "elements = ";
  for (std::size_t x = 0; x < g.order(); ++x) out += (x ? ", " : "") + g.word(x);
  out += "\ngenerator_elements = ";
  for (std::size_t i = 0; i < g.generators().size(); ++i) out += (i ? ", " : "") + std::to_string(g.generators()[i]);
  out += "\ntable = ";
  for (std::size_t a = 0; a < g.order(); ++a) {
    if (a) out += "; ";
    for (std::size_t b = 0; b < g.order(); ++b) out += (b ? "," : "") + std::to_string(g.mul(a, b));
  }
  return out + "\n";
}

inline std::string serialize_module(const GModule& m, const std::string& name = "") {
  std::string out = name.empty() ? "[module]\n" : "[module " + name + "]\n";
  out += "generators = ";
  for (std::size_t i = 0; i < m.n_gen(); ++i) out += (i ? ", " : "") + m.generator_names()[i];
  out += "\n";
  IntMatrix rel = m.carrier().relations();
  if (rel.rows() > 0) out += "relations = " + format_matrix(rel) + "\n";
  const GroupTable& g = m.group();
  for (std::size_t k = 0; k < g.generators().size(); ++k) {
    const IntMatrix& a = m.action(g.generators()[k]);
    if (a == IntMatrix::identity(m.n_gen())) continue;
    out += "action." + g.generator_names()[k] + " = " + format_matrix(a) + "\n";
  }
  for (const auto& [alias, v] : m.aliases()) out += "alias." + alias + " = " + to_string(v) + "\n";
  return out;
}

/// The cochain's nonzero values; `module_name` selects a named module.
inline std::string serialize_cochain(const Cochain& c, const std::string& module_name = "") {
  std::string out = "[cochain]\n";
  if (!module_name.empty()) out += "module = " + module_name + "\n";
  out += "degree = " + std::to_string(c.degree()) + "\n";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (is_zero(c.at(i))) continue;
    std::string label = c.label(i);
    out += "value" + label + " = " + to_string(c.at(i)) + "\n";
  }
  return out;
}

/// Group, module and cochain in one self-contained document.
inline std::string serialize_document(const Cochain& c) {
  return serialize_group(c.group()) + "\n" + serialize_module(c.module()) + "\n" + serialize_cochain(c);
}

}  // namespace cohomo::io
