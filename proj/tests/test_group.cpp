#include <catch_amalgamated.hpp>

#include "support.hpp"

using namespace cohomo;
using namespace testing_support;

TEST_CASE("abelian groups enumerate exponents lexicographically", "[group]") {
  auto g = GroupTable::abelian({"s", "t"}, {2, 2});
  REQUIRE(g.order() == 4);
  CHECK(g.words() == std::vector<std::string>{"1", "t", "s", "s*t"});
  CHECK(g.mul(1, 2) == 3);
  CHECK(g.inverse(3) == 3);

  auto h = GroupTable::abelian({"s", "t", "w"}, {2, 2, 2});
  CHECK(h.word(4 * 1 + 2 * 1 + 0) == "s*t");
  CHECK(h.word(1) == "w");
  CHECK(h.word(7) == "s*t*w");

  auto c = GroupTable::cyclic("a", 4);
  CHECK(c.words() == std::vector<std::string>{"1", "a", "a^2", "a^3"});
  CHECK(c.element_order(2) == 2);
  CHECK(c.cyclic_generator() == std::size_t(1));
}

TEST_CASE("parse_element", "[group]") {
  auto g = GroupTable::abelian({"s", "t", "w"}, {2, 2, 2});
  CHECK(g.parse_element("1") == 0);
  CHECK(g.parse_element("t*s") == 6);
  CHECK(g.parse_element("s*t*w") == 7);
  CHECK(g.parse_element("s^3") == 4);
  CHECK(g.parse_element(" w ") == 1);
  CHECK_THROWS_AS(g.parse_element("x"), ParseError);
  CHECK_THROWS_AS(g.parse_element("s**t"), ParseError);
  CHECK_THROWS_AS(g.parse_element("s^q"), ParseError);

  auto c = GroupTable::cyclic("a", 5);
  CHECK(c.parse_element("a^-1") == 4);
}

TEST_CASE("nonabelian groups from permutations", "[group]") {
  auto s3 = symmetric3();
  CHECK(s3->order() == 6);
  CHECK_FALSE(s3->is_abelian());
  CHECK_FALSE(s3->cyclic_generator().has_value());
  auto d8 = dihedral8();
  CHECK(d8->order() == 8);
  // The rotation by a half turn is the only nontrivial central element.
  std::size_t central = 0;
  for (std::size_t x = 0; x < d8->order(); ++x)
    if (d8->is_central(x)) ++central;
  CHECK(central == 2);
  for (std::size_t x = 0; x < d8->order(); ++x) CHECK(d8->parse_element(d8->word(x)) == x);
}

TEST_CASE("group table validation", "[group]") {
  // Z/3 written with a broken row.
  std::vector<std::vector<std::size_t>> bad{{0, 1, 2}, {1, 2, 0}, {2, 1, 0}};
  CHECK_THROWS_AS(GroupTable::from_table({"a"}, {1}, {"1", "a", "a^2"}, bad), ValidationError);
  std::vector<std::vector<std::size_t>> good{{0, 1, 2}, {1, 2, 0}, {2, 0, 1}};
  CHECK(GroupTable::from_table({"a"}, {1}, {"1", "a", "a^2"}, good) == GroupTable::cyclic("a", 3));
  CHECK_THROWS_AS(GroupTable::abelian({"s", "s"}, {2, 2}), ValidationError);
  CHECK_THROWS_AS(GroupTable::abelian({"1"}, {2}), ValidationError);
}

TEST_CASE("subgroups and homomorphisms", "[group]") {
  auto g = GroupTable::abelian({"s", "t", "w"}, {2, 2, 2});
  Subgroup st = make_subgroup(g, {0, 2, 4, 6});
  CHECK(st.table.generator_names() == std::vector<std::string>{"s", "t"});
  CHECK(st.table.words() == std::vector<std::string>{"1", "t", "s", "s*t"});
  CHECK(st.embedding == std::vector<std::size_t>{0, 2, 4, 6});
  CHECK_THROWS_AS(make_subgroup(g, {0, 2, 4}), ValidationError);

  Subgroup diag = make_subgroup(g, {0, 2, 5, 7});  // <t, s*w>
  CHECK(diag.table.order() == 4);
  CHECK(diag.table.parse_element("s*w") == 1);
  CHECK(diag.embedding == std::vector<std::size_t>{0, 5, 2, 7});

  auto q = GroupTable::abelian({"s", "t"}, {2, 2});
  auto proj = homomorphism_from_generators(g, q, {2, 1, 0});
  CHECK(proj == std::vector<std::size_t>{0, 0, 1, 1, 2, 2, 3, 3});
  CHECK(is_homomorphism(g, q, proj));
  auto c4 = GroupTable::cyclic("a", 4);
  CHECK_THROWS_AS(homomorphism_from_generators(q, c4, {1, 0}), ValidationError);
}

TEST_CASE("module validation", "[module]") {
  auto g = share(GroupTable::cyclic("a", 2));
  SECTION("sign module is valid") {
    CHECK_NOTHROW(GModule::from_generator_action(g, FinAbGroup::free(1), {IntMatrix{{-1}}}));
  }
  SECTION("an element of order 2 cannot act by 2") {
    CHECK_THROWS_AS(GModule::from_generator_action(g, FinAbGroup::free(1), {IntMatrix{{2}}}), ValidationError);
  }
  SECTION("action must preserve relations") {
    FinAbGroup z2z(2, IntMatrix{{2, 0}});
    CHECK_THROWS_AS(GModule::from_generator_action(g, z2z, {IntMatrix{{0, 1}, {1, 0}}}), ValidationError);
  }
  SECTION("identity must act trivially") {
    std::vector<IntMatrix> acts{IntMatrix{{-1}}, IntMatrix{{-1}}};
    CHECK_THROWS_AS(GModule(g, FinAbGroup::free(1), acts), ValidationError);
  }
  SECTION("torsion makes an action valid modulo relations") {
    // On Z/3 the element of order 2 may act by 2 = -1.
    CHECK_NOTHROW(GModule::from_generator_action(g, FinAbGroup::cyclic(3), {IntMatrix{{2}}}));
  }
}

TEST_CASE("random modules pass the exhaustive action check", "[module][property]") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 30; ++trial) {
    auto g = random_small_group(rng);
    CHECK_NOTHROW(random_module(rng, g));
  }
}

TEST_CASE("module maps and short exact sequences", "[module]") {
  auto g = share(GroupTable::cyclic("a", 2));
  auto z = share(GModule::trivial(g, FinAbGroup::free(1)));
  auto z2 = share(GModule::trivial(g, FinAbGroup::cyclic(2)));
  ModuleMap twice(z, z, IntMatrix{{2}});
  ModuleMap reduce(z, z2, IntMatrix{{1}});
  ShortExactSeq ses(twice, reduce);
  CHECK(ses.lift(make_vector({1})) == make_vector({1}));
  CHECK(ses.pullback(make_vector({4})) == make_vector({2}));
  CHECK_FALSE(ses.pullback(make_vector({3})));

  SECTION("non-exact sequences are rejected") {
    ModuleMap thrice(z, z, IntMatrix{{3}});
    CHECK_THROWS_AS(ShortExactSeq(thrice, reduce), ValidationError);
    ModuleMap zero(z, z, IntMatrix{{0}});
    CHECK_THROWS_AS(ShortExactSeq(zero, reduce), ValidationError);
  }
  SECTION("equivariance is checked") {
    auto sgn = share(GModule::from_generator_action(g, FinAbGroup::free(1), {IntMatrix{{-1}}}));
    CHECK_THROWS_AS(ModuleMap(z, sgn, IntMatrix{{1}}), ValidationError);
    // Into Z/2 the sign twist is invisible.
    auto sgn2 = share(GModule::from_generator_action(g, FinAbGroup::cyclic(2), {IntMatrix{{-1}}}));
    CHECK_NOTHROW(ModuleMap(z, sgn2, IntMatrix{{1}}));
  }
  SECTION("bad section hint") {
    CHECK_THROWS_AS(ShortExactSeq(twice, reduce, std::vector<IntVector>{make_vector({2})}), ValidationError);
  }
}
