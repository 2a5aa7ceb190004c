#pragma once

// Maps between cochain complexes: inflation, restriction, push-forward
// along module maps, the connecting map of a short exact sequence, and
// descent of a cocycle into the kernel of a surjection.

#include <cstddef>
#include <string>
#include <vector>

#include "cohomo/cohomology.hpp"

namespace cohomo {

/// f(c(g_1..g_n)) for a module map over a single group.
inline Cochain push_forward(const ModuleMap& f, const Cochain& c) {
  if (!f.same_group()) throw PreconditionError("push_forward: map changes the group; use inflation");
  if (!(c.module_ptr() == f.source_ptr() || c.module() == f.source()))
    throw DimensionError("push_forward: cochain is not over the source module");
  Cochain out(f.target_ptr(), c.degree());
  for (std::size_t i = 0; i < c.size(); ++i) out.set(i, f.apply(c.at(i)));
  return out;
}

/// Inflation along the surjection G -> Q carried by `f` (f.group_map()
/// sends G-indices to Q-indices); values are pushed through f.
inline Cochain inflation(const ModuleMap& f, const Cochain& c) {
  if (f.same_group()) return push_forward(f, c);
  if (!(c.module_ptr() == f.source_ptr() || c.module() == f.source()))
    throw DimensionError("inflation: cochain is not over the source module");
  const auto& proj = f.group_map();
  std::vector<bool> hit(f.source().group().order(), false);
  for (std::size_t x : proj) hit[x] = true;
  for (bool h : hit)
    if (!h) throw ValidationError("inflation: group map is not surjective");
  Cochain out(f.target_ptr(), c.degree());
  Cochain::Tuple q(c.degree());
  for (std::size_t i = 0; i < out.size(); ++i) {
    Cochain::Tuple t = out.tuple(i);
    for (std::size_t j = 0; j < t.size(); ++j) q[j] = proj[t[j]];
    out.set(i, f.apply(c.at(q)));
  }
  return out;
}

/// Inflation along proj: G -> Q onto the module M pulled back to G.
inline Cochain inflation(const GroupPtr& g, const std::vector<std::size_t>& proj, const Cochain& c) {
  if (!is_homomorphism(*g, c.group(), proj)) throw ValidationError("inflation: index map is not a homomorphism");
  auto pulled = share(c.module().pullback(g, proj));
  ModuleMap f(c.module_ptr(), pulled, IntMatrix::identity(c.module().n_gen()), proj);
  return inflation(f, c);
}

/// Restriction to the subgroup with the given element set.
inline Cochain restriction(const std::vector<std::size_t>& subgroup_elements, const Cochain& c) {
  Subgroup h = make_subgroup(c.group(), subgroup_elements);
  auto m = share(c.module().pullback(share(h.table), h.embedding));
  Cochain out(m, c.degree());
  Cochain::Tuple p(c.degree());
  for (std::size_t i = 0; i < out.size(); ++i) {
    Cochain::Tuple t = out.tuple(i);
    for (std::size_t j = 0; j < t.size(); ++j) p[j] = h.embedding[t[j]];
    out.set(i, c.at(p));
  }
  return out;
}

/// Connecting map for a given lift b of z (surj(b) = z entrywise).
inline Cochain connecting_with_lift(const ShortExactSeq& ses, const Cochain& z, const Cochain& b) {
  require_cocycle(z, "connecting");
  if (b.degree() != z.degree() || !(b.module_ptr() == ses.surj().source_ptr() || b.module() == ses.b()))
    throw DimensionError("connecting: lift is not a cochain of the same degree over the middle module");
  for (std::size_t i = 0; i < z.size(); ++i)
    if (ses.surj().apply(b.at(i)) != z.at(i))
      throw PreconditionError("connecting: lift does not map to z at " + z.label(i));
  Cochain db = coboundary(b);
  Cochain out(ses.inj().source_ptr(), z.degree() + 1);
  for (std::size_t i = 0; i < db.size(); ++i) {
    auto a = ses.pullback(db.at(i));
    if (!a) throw Error("connecting: d(lift) leaves the image of inj at " + db.label(i));
    out.set(i, *a);
  }
  require_cocycle(out, "connecting result");
  return out;
}

/// Connecting map H^n(G, C) -> H^{n+1}(G, A): lift through surj (section
/// table if present), differentiate, pull back through inj.
inline Cochain connecting(const ShortExactSeq& ses, const Cochain& z) {
  if (!(z.module_ptr() == ses.surj().target_ptr() || z.module() == ses.c()))
    throw DimensionError("connecting: cochain is not over the quotient module");
  Cochain b(ses.surj().source_ptr(), z.degree());
  for (std::size_t i = 0; i < z.size(); ++i) b.set(i, ses.lift(z.at(i)));
  return connecting_with_lift(ses, z, b);
}

/// For 0 -> A -> B -> C -> 0, a B-valued cocycle z and a B-valued
/// cochain psi with surj(z) = d(surj(psi)): the A-valued cocycle
/// z - d(psi) written in A-coordinates.
inline Cochain descend(const ShortExactSeq& ses, const Cochain& z, const Cochain& psi) {
  auto over_b = [&](const Cochain& c) { return c.module_ptr() == ses.surj().source_ptr() || c.module() == ses.b(); };
  if (!over_b(z) || !over_b(psi)) throw DimensionError("descend: cochains must be over the middle module");
  if (psi.degree() + 1 != z.degree()) throw DimensionError("descend: lift must have degree one less than z");
  require_cocycle(z, "descend");
  Cochain dpsi = coboundary(psi);
  Cochain surj_dpsi = coboundary(push_forward(ses.surj(), psi));
  for (std::size_t i = 0; i < z.size(); ++i)
    if (ses.surj().apply(z.at(i)) != surj_dpsi.at(i))
      throw PreconditionError("descend: surj(z)" + z.label(i) + " = " + to_string(ses.surj().apply(z.at(i))) +
                              " but d(surj psi)" + z.label(i) + " = " + to_string(surj_dpsi.at(i)));
  Cochain out(ses.inj().source_ptr(), z.degree());
  for (std::size_t i = 0; i < z.size(); ++i) {
    auto a = ses.pullback(z.at(i) - dpsi.at(i));
    if (!a) throw Error("descend: z - d(psi) leaves the image of inj at " + z.label(i));
    out.set(i, *a);
  }
  require_cocycle(out, "descend result");
  return out;
}

}  // namespace cohomo
