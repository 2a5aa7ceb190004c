#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace cohomo;
using namespace testing_support;

TEST_CASE("hom_module: worked examples", "[residue]") {
  auto trivial = share(GroupTable::trivial());
  auto i2 = GroupTable::cyclic("w", 2);
  SECTION("Hom(Z/2, mu_2)") {
    auto mu2 = GModule::trivial(trivial, FinAbGroup::cyclic(2));
    auto h = hom_module(i2, mu2);
    CHECK(h.module()->carrier().to_string() == "Z/2");
    CHECK(h.module()->has_trivial_action());
    CHECK(h.evaluate(make_vector({1}), 1) == make_vector({1}));
  }
  SECTION("trivial I") {
    auto m = GModule::trivial(trivial, FinAbGroup::from_orders({0, 4}));
    CHECK(hom_module(GroupTable::trivial(), m).module()->carrier().is_trivial());
  }
  SECTION("Hom(Z/2, Z/4) against brute force") {
    auto z4 = GModule::trivial(trivial, FinAbGroup::cyclic(4));
    std::size_t count = 0;
    for (int v = 0; v < 4; ++v)
      if ((2 * v) % 4 == 0) ++count;
    auto h = hom_module(i2, z4);
    CHECK(h.module()->carrier().to_string() == "Z/" + std::to_string(count));
    CHECK(h.evaluate(make_vector({1}), 1) == make_vector({2}));
    CHECK_FALSE(h.from_generator_values({make_vector({1})}));
  }
  SECTION("Hom((Z/2)^2, Z) is zero and Hom(Z/2 x Z/2, Z/2) has order 4") {
    auto k = GroupTable::abelian({"a", "b"}, {2, 2});
    CHECK(hom_module(k, GModule::trivial(trivial, FinAbGroup::free(1))).module()->carrier().is_trivial());
    CHECK(hom_module(k, GModule::trivial(trivial, FinAbGroup::cyclic(2))).module()->carrier().to_string() ==
          "Z/2 + Z/2");
  }
}

namespace {

struct Setup {
  GroupPtr g = share(GroupTable::abelian({"s", "t", "w"}, {2, 2, 2}));
  ModulePtr mu2 = share(GModule::trivial(g, FinAbGroup::cyclic(2)));
  std::vector<std::size_t> inertia{0, 1};
  std::vector<std::size_t> complement{0, 2, 4, 6};
};

// A normalized 2-cocycle built from a 1-cochain b on the quotient by <w>
// plus a term that sees w only in the first argument.
Cochain sample_cocycle(const Setup& x) {
  const auto& g = *x.g;
  auto chi_t = [&](std::size_t e) { return (e >> 1) & 1; };
  auto chi_s = [&](std::size_t e) { return (e >> 2) & 1; };
  auto chi_w = [&](std::size_t e) { return e & 1; };
  (void)g;
  return Cochain::from_function(x.mu2, 2, [&](const Cochain::Tuple& t) {
    // chi_w(g1) chi_s(g2) + chi_t(g1) chi_s(g2): bilinear, hence a cocycle.
    return make_vector({static_cast<int>((chi_w(t[0]) * chi_s(t[1]) + chi_t(t[0]) * chi_s(t[1])) % 2)});
  });
}

}  // namespace

TEST_CASE("residue: examples", "[residue]") {
  Setup x;
  SECTION("cochain vanishing on I in the first slot") {
    auto z = Cochain::from_function(x.mu2, 2, [&](const Cochain::Tuple& t) {
      return make_vector({static_cast<int>(((t[0] >> 1) & 1) * ((t[1] >> 2) & 1))});
    });
    REQUIRE(is_cocycle(z));
    auto r = residue(z, x.inertia, x.complement);
    CHECK(r.value.is_zero());
    CHECK(r.value.degree() == 1);
  }
  SECTION("bilinear cocycle") {
    auto z = sample_cocycle(x);
    REQUIRE(is_cocycle(z));
    auto r = residue(z, x.inertia, x.complement);
    const auto& gb = r.complement.table;
    CHECK(r.evaluate(gb.parse_element("s"), x.g->parse_element("w")) == make_vector({1}));
    CHECK(r.evaluate(gb.parse_element("t"), x.g->parse_element("w")) == make_vector({0}));
    CHECK(r.evaluate(0, x.g->parse_element("w")) == make_vector({0}));
    CHECK_FALSE(is_coboundary(r.value));
  }
}

TEST_CASE("residue: precondition checks", "[residue]") {
  Setup x;
  auto z = sample_cocycle(x);
  SECTION("non-normalized input") {
    Cochain bad = z + coboundary(Cochain::from_function(x.mu2, 1, [](const Cochain::Tuple&) {
                    return make_vector({1});
                  }));
    CHECK_THROWS_AS(residue(bad, x.inertia, x.complement), PreconditionError);
  }
  SECTION("invariance") {
    // chi_s(g1) chi_w(g2) depends on w in the second argument.
    auto bad = Cochain::from_function(x.mu2, 2, [&](const Cochain::Tuple& t) {
      return make_vector({static_cast<int>(((t[0] >> 2) & 1) * (t[1] & 1))});
    });
    REQUIRE(is_cocycle(bad));
    try {
      residue(bad, x.inertia, x.complement);
      FAIL("expected PreconditionError");
    } catch (const PreconditionError& e) {
      CHECK(std::string(e.what()).find("invariance") != std::string::npos);
    }
  }
  SECTION("complement must be a complement") {
    CHECK_THROWS_AS(residue(z, x.inertia, {0, 1, 2, 3}), PreconditionError);
    CHECK_THROWS_AS(residue(z, x.inertia, {0, 2}), PreconditionError);
  }
  SECTION("inertia must be central") {
    auto d8 = dihedral8();
    auto m = share(GModule::trivial(d8, FinAbGroup::cyclic(2)));
    Cochain zero(m, 1);
    std::size_t f = d8->parse_element("f");
    std::vector<std::size_t> refl{0, f};
    std::size_t r = d8->parse_element("r");
    CHECK_THROWS_AS(residue(zero, refl, d8->generated({r})), PreconditionError);
  }
  SECTION("inertia must act trivially") {
    auto m = share(GModule::from_generator_action(x.g, FinAbGroup::free(1),
                                                  {IntMatrix{{1}}, IntMatrix{{1}}, IntMatrix{{-1}}}));
    CHECK_THROWS_AS(residue(Cochain(m, 1), x.inertia, x.complement), PreconditionError);
  }
}

TEST_CASE("residue does not depend on the choice of complement", "[residue][property]") {
  Setup x;
  auto z = sample_cocycle(x);
  // Add inflated coboundaries to vary z while keeping the preconditions.
  std::mt19937_64 rng(5);
  const std::vector<std::vector<std::size_t>> complements{{0, 2, 4, 6}, {0, 3, 4, 7}, {0, 2, 5, 7}, {0, 3, 5, 6}};
  for (int trial = 0; trial < 5; ++trial) {
    Cochain b(x.mu2, 1);
    for (std::size_t e = 0; e < 8; ++e)
      if ((e >> 1) != 0) b.set(e, make_vector({static_cast<int>(rng() % 2)}));
    // b depends on e only modulo w: copy the value from the w-free element.
    for (std::size_t e = 0; e < 8; ++e) b.set(e, b.at(e & ~std::size_t(1)));
    Cochain zz = z + coboundary(b);
    auto base = residue(zz, x.inertia, complements[0]);
    for (const auto& comp : complements) {
      auto other = residue(zz, x.inertia, comp);
      for (std::size_t i = 0; i < base.value.size(); ++i) {
        // Match complement elements by their image modulo <w>.
        std::size_t gi = base.complement.embedding[i] & ~std::size_t(1);
        std::size_t j = 0;
        while ((other.complement.embedding[j] & ~std::size_t(1)) != gi) ++j;
        REQUIRE(base.evaluate(i, 1) == other.evaluate(j, 1));
      }
    }
  }
}
