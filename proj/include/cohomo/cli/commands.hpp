#pragma once

#include <exception>
#include <optional>
#include <string>
#include <vector>

#include "cohomo/cohomo.hpp"
#include "cohomo/io/document.hpp"
#include "cohomo/quadric/pipeline.hpp"

namespace cohomo::cli {

enum ExitCode { exit_ok = 0, exit_check_failed = 1, exit_input_error = 2 };

struct Outcome {
  int code = exit_ok;
  std::string out;
  std::string err;
};

struct ComputeOptions {
  std::string group_file;  // optional when the module file has its own [group]
  std::string module_file;
  std::string module_name;
  std::size_t degree = 1;
  bool show_generators = false;
};

struct CheckOptions {
  std::string cochain_file;
  bool witness = false;
};

struct VerifyOptions {
  std::string step = "all";
  std::string format = "text";
  std::vector<std::string> mutations;
};

namespace detail {

inline std::string table_lines(const Cochain& c, const std::string& indent) {
  std::string out;
  for (std::size_t i = 0; i < c.size(); ++i)
    if (!cohomo::is_zero(c.at(i))) out += indent + c.label(i) + " = " + io::format_value(c.module(), c.at(i)) + "\n";
  if (out.empty()) out = indent + "(zero)\n";
  return out;
}

template <typename F>
Outcome guarded(F&& body) {
  try {
    return body();
  } catch (const ParseError& e) {
    return {exit_input_error, "", std::string("error: ") + e.what() + "\n"};
  } catch (const ResourceError& e) {
    return {exit_input_error, "", std::string("error: ") + e.what() + "\n"};
  } catch (const Error& e) {
    return {exit_input_error, "", std::string("invalid input: ") + e.what() + "\n"};
  }
}

}  // namespace detail

inline ModulePtr load_module(const std::string& group_file, const std::string& module_file,
                             const std::string& module_name) {
  io::ParseContext ctx;
  if (!group_file.empty()) {
    auto g = io::load_document(group_file);
    if (!g.group) throw ParseError(group_file + ": no [group] section");
    ctx.group = g.group;
  }
  return io::load_document(module_file, ctx).module(module_name);
}

inline Outcome compute(const ComputeOptions& o) {
  return detail::guarded([&]() -> Outcome {
    ModulePtr m = load_module(o.group_file, o.module_file, o.module_name);
    CohomologyResult h = cohomology(m, o.degree);
    Outcome r;
    r.out = "H^" + std::to_string(o.degree) + " = " + h.to_string() + "\n";
    if (o.show_generators) {
      const auto& gens = h.generator_cocycles();
      const auto orders = h.group_invariants().invariant_factors();
      for (std::size_t i = 0; i < gens.size(); ++i) {
        std::string ord = i < orders.size() && orders[i] != 0 ? "order " + orders[i].str() : "infinite order";
        r.out += "generator " + std::to_string(i + 1) + " (" + ord + "):\n" + detail::table_lines(gens[i], "  ");
      }
    }
    return r;
  });
}

inline Outcome check_cocycle(const CheckOptions& o) {
  return detail::guarded([&]() -> Outcome {
    io::Document doc = io::load_document(o.cochain_file);
    if (!doc.cochain) throw ParseError(o.cochain_file + ": no [cochain] section");
    const Cochain& z = *doc.cochain;
    Outcome r;
    if (auto bad = cocycle_defect(z)) {
      Cochain dz = coboundary(z);
      r.code = exit_check_failed;
      r.out = "cocycle: no\nfirst failure: d(c)" + dz.label(*bad) + " = " + io::format_value(dz.module(), dz.at(*bad)) +
              "\n";
      return r;
    }
    r.out = "cocycle: yes\n";
    std::optional<Cochain> w;
    bool bounded = false;
    if (z.degree() == 0) {
      bounded = z.is_zero();
      if (bounded) w = z;
    } else {
      w = is_coboundary(z);
      bounded = w.has_value();
    }
    r.out += std::string("coboundary: ") + (bounded ? "yes" : "no") + "\n";
    if (bounded && o.witness && z.degree() > 0) r.out += "witness:\n" + detail::table_lines(*w, "  ");
    return r;
  });
}

inline Outcome verify_paper(const VerifyOptions& o) {
  return detail::guarded([&]() -> Outcome {
    const quadric::Step step = quadric::parse_step(o.step);
    if (o.format != "text" && o.format != "machine")
      throw ParseError("unknown format '" + o.format + "' (expected text or machine)");
    std::vector<quadric::Mutation> ms;
    for (const auto& m : o.mutations) ms.push_back(quadric::parse_mutation(m));
    quadric::Pipeline p(ms);
    if (!ms.empty() && p.has_model()) {
      // Bad coordinates or values in a mutation are input errors, not failed checks.
      for (const auto& m : ms) {
        if (m.table == "phi") (void)p.tables().phi();
        else if (m.table == "Phi") (void)p.tables().Phi();
        else if (m.table == "psi") (void)p.tables().psi();
        else if (m.table == "psitilde") (void)p.tables().psitilde();
        else if (m.table == "Psi") (void)p.tables().Psi();
        else {
          Cochain scratch(p.model().mu2, 3);
          p.tables().mutate_PhiPrime(scratch);
        }
      }
    }
    Report rep = p.run(step);
    Outcome r;
    r.out = o.format == "machine" ? rep.render_machine() : rep.render_text();
    r.code = rep.passed() ? exit_ok : exit_check_failed;
    return r;
  });
}

}  // namespace cohomo::cli
