#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace cohomo;
using namespace testing_support;

namespace {

Cochain phi_st(const ModulePtr& pic) {
  const auto& g = pic->group();
  const std::size_t s = g.parse_element("s"), st = g.parse_element("s*t");
  return Cochain::from_function(pic, 1, [&](const Cochain::Tuple& t) {
    return (t[0] == s || t[0] == st) ? make_vector({1}) : make_vector({0});
  });
}

}  // namespace

TEST_CASE("restriction", "[transfer]") {
  auto g = klein();
  auto pic = sign_module_st(g);
  Cochain phi = phi_st(pic);

  CHECK(restriction({0, 1, 2, 3}, phi).values() == phi.values());

  Cochain on_s = restriction({0, g->parse_element("s")}, phi);
  REQUIRE(on_s.group().order() == 2);
  CHECK(tate_cyclic(on_s.module(), 1).to_string() == "Z/2");
  auto h = cohomology(on_s.module_ptr(), 1);
  CHECK(h.decide(on_s) == make_vector({1}));

  Cochain on_t = restriction({0, g->parse_element("t")}, phi);
  CHECK(on_t.is_zero());

  CHECK_THROWS_AS(restriction({0, 2, 3}, phi), ValidationError);
}

TEST_CASE("inflation", "[transfer]") {
  auto g = klein();
  auto pic = sign_module_st(g);
  Cochain phi = phi_st(pic);

  SECTION("identity projection") { CHECK(inflation(g, {0, 1, 2, 3}, phi).values() == phi.values()); }
  SECTION("zero cochain") {
    auto big = share(GroupTable::abelian({"s", "t", "w"}, {2, 2, 2}));
    auto proj = homomorphism_from_generators(*big, *g, {2, 1, 0});
    CHECK(inflation(big, proj, Cochain(pic, 2)).is_zero());
    Cochain inf = inflation(big, proj, phi);
    CHECK(inf.at({big->parse_element("s*w")}) == make_vector({1}));
    CHECK(inf.at({big->parse_element("t*w")}) == make_vector({0}));
    CHECK(is_cocycle(inf));
  }
  SECTION("non-homomorphism") {
    auto big = share(GroupTable::cyclic("a", 4));
    CHECK_THROWS_AS(inflation(big, {0, 2, 0, 2}, phi), ValidationError);
  }
}

TEST_CASE("connecting map of 0 -> Z -> Z -> Z/2 -> 0", "[transfer]") {
  auto g = share(GroupTable::cyclic("sigma", 2));
  auto z = share(GModule::trivial(g, FinAbGroup::free(1)));
  auto z2 = share(GModule::trivial(g, FinAbGroup::cyclic(2)));
  ShortExactSeq ses(ModuleMap(z, z, IntMatrix{{2}}), ModuleMap(z, z2, IntMatrix{{1}}));

  Cochain hom(z2, 1);
  hom.set(1, make_vector({1}));
  REQUIRE(is_cocycle(hom));
  Cochain delta = connecting(ses, hom);
  REQUIRE(delta.degree() == 2);
  CHECK(is_cocycle(delta));

  // Brute force: no integer 1-cochain with entries in [-6,6] has coboundary delta.
  bool found = false;
  for (int w0 = -6; w0 <= 6 && !found; ++w0)
    for (int w1 = -6; w1 <= 6 && !found; ++w1) {
      Cochain w(z, 1);
      w.set(0, make_vector({w0}));
      w.set(1, make_vector({w1}));
      if (coboundary(w) == delta) found = true;
    }
  CHECK_FALSE(found);
  CHECK_FALSE(is_coboundary(delta));
  CHECK(cohomology(z, 2).decide(delta) == make_vector({1}));

  SECTION("image of a cocycle over the middle term connects to zero") {
    Cochain zero(z, 1);
    Cochain img = push_forward(ses.surj(), zero);
    CHECK(connecting(ses, img).is_zero());
  }
  SECTION("non-cocycles are refused") {
    Cochain bad(z2, 1);
    bad.set(0, make_vector({1}));
    CHECK_THROWS_AS(connecting(ses, bad), NotCocycleError);
  }
}

TEST_CASE("connecting class does not depend on the lift", "[transfer][property]") {
  std::mt19937_64 rng(777);
  int trials = 0;
  while (trials < 20) {
    auto g = random_small_group(rng);
    if (g->order() > 4) continue;
    auto m = random_module(rng, g, true);
    const int n = std::uniform_int_distribution<int>(2, 3)(rng);
    std::vector<IntVector> rows;
    for (std::size_t i = 0; i < m->n_gen(); ++i) rows.push_back(Integer(n) * unit_vector(m->n_gen(), i));
    auto q = share(GModule(g, FinAbGroup(m->n_gen(), IntMatrix::from_rows(rows, m->n_gen())), m->actions()));
    const IntMatrix id = IntMatrix::identity(m->n_gen());
    IntMatrix times_n(m->n_gen(), m->n_gen());
    for (std::size_t i = 0; i < m->n_gen(); ++i) times_n(i, i) = n;
    ShortExactSeq ses(ModuleMap(m, m, times_n), ModuleMap(m, q, id));
    auto h = cohomology(q, 1);
    Cochain z(q, 1);
    for (const auto& gen : h.generator_cocycles()) z += Integer(std::uniform_int_distribution<int>(0, 3)(rng)) * gen;
    z += coboundary(random_cochain(rng, q, 0));

    Cochain b1(m, 1), b2(m, 1);
    for (std::size_t i = 0; i < z.size(); ++i) {
      b1.set(i, ses.lift(z.at(i)));
      b2.set(i, ses.lift(z.at(i)) + ses.inj().matrix() * random_cochain(rng, m, 0).at(0));
    }
    Cochain d1 = connecting_with_lift(ses, z, b1);
    Cochain d2 = connecting_with_lift(ses, z, b2);
    REQUIRE(classes_equal(d1, d2));
    REQUIRE(classes_equal(d1, connecting(ses, z)));
    ++trials;
  }
}

TEST_CASE("descend", "[transfer]") {
  auto g = share(GroupTable::cyclic("sigma", 2));
  auto z = share(GModule::trivial(g, FinAbGroup::free(1)));
  auto z2 = share(GModule::trivial(g, FinAbGroup::cyclic(2)));
  ShortExactSeq ses(ModuleMap(z, z, IntMatrix{{2}}), ModuleMap(z, z2, IntMatrix{{1}}));

  SECTION("cocycle already in the kernel, zero lift") {
    Cochain a(z, 2);
    a.set(3, make_vector({1}));
    REQUIRE(is_cocycle(a));
    Cochain in_b = push_forward(ses.inj(), a);
    CHECK(descend(ses, in_b, Cochain(z, 1)) == a);
  }
  SECTION("coboundary input descends to a coboundary") {
    Cochain b(z, 1);
    b.set(1, make_vector({3}));
    Cochain zb = coboundary(b);
    Cochain psi(z, 1);
    psi.set(1, make_vector({1}));
    Cochain out = descend(ses, zb, psi);
    CHECK(is_coboundary(out));
  }
  SECTION("precondition failure names the tuple") {
    Cochain zb(z, 2);
    zb.set(3, make_vector({1}));
    try {
      descend(ses, zb, Cochain(z, 1));
      FAIL("expected PreconditionError");
    } catch (const PreconditionError& e) {
      CHECK(std::string(e.what()).find("(sigma,sigma)") != std::string::npos);
    }
  }
}
