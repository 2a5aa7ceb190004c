#include <catch_amalgamated.hpp>

#include <random>

#include "cohomo/io/document.hpp"
#include "cohomo/quadric/model.hpp"
#include "support.hpp"

using namespace cohomo;
using namespace testing_support;

namespace {

std::string data(const std::string& name) { return std::string(COHOMO_TEST_DATA) + "/" + name; }

GroupTable reparse_group(const GroupTable& g) { return *io::parse_document(io::serialize_group(g)).group; }

GModule reparse_module(const GModule& m) {
  io::ParseContext ctx;
  ctx.group = m.group_ptr();
  return *io::parse_document(io::serialize_module(m), ctx).module();
}

void require_same_module(const GModule& a, const GModule& b) {
  CHECK(a == b);
  CHECK(a.generator_names() == b.generator_names());
  CHECK(a.aliases() == b.aliases());
}

}  // namespace

TEST_CASE("groups survive a round trip", "[document]") {
  for (const GroupPtr& g : {klein(), dihedral8(), symmetric3(), share(GroupTable::trivial()),
                            share(GroupTable::cyclic("a", 5)), share(GroupTable::abelian({"a", "b"}, {2, 4}))}) {
    INFO(io::serialize_group(*g));
    CHECK(reparse_group(*g) == *g);
  }
}

TEST_CASE("modules survive a round trip", "[document]") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 30; ++i) {
    GroupPtr g = random_small_group(rng);
    ModulePtr m = random_module(rng, g);
    INFO(io::serialize_module(*m));
    require_same_module(reparse_module(*m), *m);
  }
  require_same_module(reparse_module(GModule::regular(symmetric3())), GModule::regular(symmetric3()));

  quadric::QuadricModel model;
  for (const ModulePtr& m : {model.sym1, model.functions, model.sym3, model.mu2, model.divisors, model.picard.module}) {
    INFO(io::serialize_module(*m));
    require_same_module(reparse_module(*m), *m);
  }
}

TEST_CASE("cochains survive a round trip", "[document]") {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 30; ++i) {
    GroupPtr g = random_small_group(rng);
    ModulePtr m = random_module(rng, g);
    const std::size_t degree = g->order() > 4 ? 1 + i % 2 : i % 4;
    Cochain c = random_cochain(rng, m, degree);
    const std::string text = io::serialize_document(c);
    INFO(text);
    io::Document doc = io::parse_document(text);
    REQUIRE(doc.cochain);
    CHECK(*doc.cochain == c);
    CHECK(*doc.group == c.group());
  }
}

TEST_CASE("sample files load", "[document]") {
  io::Document phi = io::load_document(data("phi.txt"));
  REQUIRE(phi.cochain);
  CHECK(phi.cochain->degree() == 1);
  const GroupTable& g = phi.cochain->group();
  CHECK(g == *klein());
  CHECK(phi.cochain->at({g.parse_element("s")}) == make_vector({1}));
  CHECK(phi.cochain->at({g.parse_element("t")}) == make_vector({0}));
  CHECK(phi.cochain->at({g.parse_element("s*t")}) == make_vector({1}));

  // The transcribed table matches the model's.
  quadric::QuadricModel model;
  io::Document big_phi = io::load_document(data("Phi.txt"));
  REQUIRE(big_phi.cochain);
  CHECK(big_phi.cochain->module() == *model.sym1);
  CHECK(big_phi.cochain->at({1, 1, 2}) == io::parse_value(*model.sym1, "mu"));

  io::Document d8 = io::load_document(data("dihedral8_sign.txt"));
  CHECK(d8.group->order() == 8);
  CHECK_FALSE(d8.group->is_abelian());
  CHECK(*d8.group == *dihedral8());

  io::Document triv = io::load_document(data("trivial_group.txt"));
  CHECK(triv.group->order() == 1);
  CHECK(triv.module()->n_gen() == 1);
}

TEST_CASE("short exact sequences load with their section", "[document]") {
  io::Document doc = io::load_document(data("sign_ses.txt"));
  REQUIRE(doc.ses);
  CHECK(doc.modules.size() == 3);
  CHECK(doc.ses->lift(make_vector({1})) == make_vector({1}));
  CHECK(doc.ses->pullback(make_vector({2})) == make_vector({1}));
}

TEST_CASE("matrices are written row by row", "[document]") {
  IntMatrix m = io::parse_matrix("1, 2; 3,4", 2, "test");
  CHECK(m(0, 1) == 2);
  CHECK(m(1, 0) == 3);
  CHECK(io::format_matrix(m) == "1,2; 3,4");
  CHECK(io::parse_matrix("", 3, "test").rows() == 0);
  CHECK_THROWS_AS(io::parse_matrix("1,2; 3", 2, "test"), ParseError);
}

TEST_CASE("malformed documents are rejected", "[document]") {
  auto fails_with = [](const std::string& text, const std::string& fragment) {
    INFO(text);
    try {
      (void)io::parse_document(text);
      FAIL("no error");
    } catch (const Error& e) {
      INFO(e.what());
      CHECK(std::string(e.what()).find(fragment) != std::string::npos);
    }
  };
  fails_with("[group]\ngenerators = s\norders = 2\ncolour = red\n", "line 4: unknown key 'colour'");
  fails_with("[group]\ngenerators = s\norders = 2\norders = 3\n", "line 4: duplicate key");
  fails_with("generators = s\n", "line 1: entry outside");
  fails_with("[groups]\n", "unknown section");
  fails_with("[group\n", "unterminated");
  fails_with("[group]\ngenerators = s\n", "give orders");
  fails_with("[group]\ngenerators = s\norders = 2\npermutation.s = 1,0\n", "exactly one");
  fails_with("[module]\ngenerators = x\n", "needs a group");
  fails_with("[group]\ngenerators = s\norders = 2\n[module]\ngenerators = x\naction.q = -1\n", "unknown group generator");
  fails_with("[group]\ngenerators = s\norders = 2\n[module]\ngenerators = x, y\naction.s = 0,1\n", "must be 2x2");
  fails_with("[group]\ngenerators = s\norders = 2\n[module]\ngenerators = x\n[cochain]\ndegree = 1\nvalue(s,s) = x\n",
             "degree is 1");
  fails_with("[group]\ngenerators = s\norders = 2\n[module]\ngenerators = x\n[cochain]\ndegree = 1\nvalue(s) = y\n",
             "y");
  fails_with("[group]\ngenerators = s\norders = 2\n[module]\ngenerators = x\n[cochain]\ndegree = one\n", "degree");
  // s acting by 2 is not invertible, so this is no group action.
  CHECK_THROWS_AS(io::parse_document("[group]\ngenerators = s\norders = 2\n[module]\ngenerators = x\naction.s = 2\n"),
                  ValidationError);
  CHECK_THROWS_AS(io::load_document(data("no_such_file.txt")), ParseError);
}

TEST_CASE("comments and blank lines are ignored", "[document]") {
  io::Document doc = io::parse_document(
      "# header\n\n[group]  # the group\ngenerators = a   # one generator\norders = 3\n\n[module]\ngenerators = x\n");
  CHECK(doc.group->order() == 3);
  CHECK(doc.module()->has_trivial_action());
}
