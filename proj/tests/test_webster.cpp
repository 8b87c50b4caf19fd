#include <catch2/catch_amalgamated.hpp>

#include "nilhecke/webster.hpp"

using namespace nilhecke;
using R = Rational;
using E = HElem<Rational>;

namespace {
const char* kComp = " \xe2\x88\x98 ";
std::string j(std::initializer_list<const char*> parts) {
  std::string s;
  for (const char* p : parts) {
    if (!s.empty()) s += kComp;
    s += p;
  }
  return s;
}
}  // namespace

TEST_CASE("parsing and typing of diagram words") {
  TypedWord w = type_text(j({"lam", "rho"}));
  CHECK(w.total == 1);
  CHECK(w.a_dom == 0);
  CHECK(w.b_dom == 1);
  CHECK(w.a_cod == 0);
  CHECK(w.b_cod == 1);
  CHECK(w.deg == 2);

  TypedWord r = type_text("rho");
  CHECK(r.a_dom == 0);
  CHECK(r.a_cod == 1);
  CHECK(r.deg == 2);
  TypedWord l = type_text("lam");
  CHECK(l.a_dom == 1);
  CHECK(l.a_cod == 0);
  CHECK(l.deg == 0);

  TypedWord rr = type_text(j({"E^1.rho", "rho.E^1"}));
  CHECK(rr.total == 2);
  CHECK(rr.a_dom == 0);
  CHECK(rr.a_cod == 2);
  CHECK(rr.deg == 4);

  TypedWord tt = type_text(j({"tau@2", "tau@1"}));
  CHECK(tt.total == 3);
  CHECK(tt.a_dom == 0);
  CHECK(tt.deg == -4);

  // Whiskers placed so that positions or strand counts cannot match.
  CHECK_THROWS(type_text("E^1.tau@1.E^0"));
  CHECK_THROWS(type_text(j({"E^0.rho.E^0", "E^0.rho.E^0"})));
  CHECK_THROWS(type_text(j({"E^1.rho.E^1", "rho.E^0"})));
  CHECK_THROWS(parse_word("foo"));
  CHECK_THROWS(parse_word("x@"));
  CHECK_THROWS(parse_word(j({"rho", ""})));

  // Degrees add along composition.
  TypedWord big = type_text(j({"rho", "tau@1", "x@2", "lam", "rho"}));
  CHECK(big.deg == 2 - 2 + 2 + 0 + 2);
}

TEST_CASE("forced typing pins the red strand") {
  TypedWord a = type_text("x@1", 1, 0);
  CHECK(a.a_dom == 0);
  TypedWord b = type_text("x@1", 1, 1);
  CHECK(b.a_dom == 1);
  CHECK(eval_R<R>(a) == eval_R<R>(b));
  CHECK_THROWS(morphism_equal<R>(a, b));
}

TEST_CASE("anchor identities for the algebra evaluation") {
  CheckResult c = check_webster_anchors<R>();
  INFO(c.detail);
  REQUIRE(c.ok);
  CHECK(eval_R_text<R>(j({"lam", "rho"})).str() == "x1 - y");
  CHECK(type_text(j({"lam", "rho"})).deg == 2);
}

TEST_CASE("braid rewrites do not change the value") {
  TypedWord w1 = type_text(j({"tau@1", "tau@2", "tau@1"}));
  TypedWord w2 = type_text(j({"tau@2", "tau@1", "tau@2"}));
  CHECK(morphism_equal<R>(w1, w2));
  CHECK(!eval_R<R>(w1).is_zero());
  TypedWord p1 = type_text(j({"x@1", "x@2"}));
  TypedWord p2 = type_text(j({"x@2", "x@1"}));
  CHECK(morphism_equal<R>(p1, p2));
}

TEST_CASE("words of different value are distinguished") {
  TypedWord w1 = type_text("rho");
  TypedWord w2 = type_text(j({"rho", "x@1"}));
  CHECK(!morphism_equal<R>(w1, w2));
  E v = eval_R_text<R>("rho.E^1 \xe2\x88\x98 tau@1 \xe2\x88\x98 lam.E^1");
  CHECK(!(v == E::unit(2)));
}

TEST_CASE("the defining relations hold under the algebra evaluation") {
  CheckResult c = check_webster_relations<R>(3);
  INFO(c.detail);
  REQUIRE(c.ok);
}

TEST_CASE("sigma_y is an algebra automorphism") {
  CHECK(apply_sigma_y<R>(E::xvar(2, 1)) == E::xvar(2, 1) - E::yvar(2));
  CHECK(apply_sigma_y<R>(E::tau(2, 1)) == E::tau(2, 1));
  CHECK(apply_sigma_y<R>(E::yvar(2)) == E::yvar(2));
  std::vector<E> gens = {E::xvar(3, 1), E::xvar(3, 3), E::tau(3, 1), E::tau(3, 2),
                         E::yvar(3)};
  for (const E& a : gens)
    for (const E& b : gens)
      CHECK(apply_sigma_y<R>(a * b) == apply_sigma_y<R>(a) * apply_sigma_y<R>(b));
  E mixed = E::tau(3, 1) * E::xvar(3, 1) * E::xvar(3, 2) + E::yvar(3) * E::tau(3, 2);
  E img = apply_sigma_y<R>(mixed);
  CHECK(apply_sigma_y<R>(mixed * mixed) == img * img);
}

TEST_CASE("chain-map values of the generators") {
  ChainMap<R> rb = eval_Phi<R>(type_text("rho"));
  std::string why;
  REQUIRE(chainmap_valid(rb, &why));
  CHECK(chainmap_equal(rb, make_rho_bar<R>()));
  CHECK(rb.deg == 2);
  ChainMap<R> lb = eval_Phi<R>(type_text("lam"));
  REQUIRE(chainmap_valid(lb, &why));
  CHECK(chainmap_equal(lb, make_lam_bar<R>()));
  CHECK(lb.deg == 0);

  ChainMap<R> xh = eval_Phi<R>(type_text("x@1", 1, 1));
  CHECK(chainmap_equal(xh, y_high_act<R>(1, 0, E::xvar(1, 1) - E::yvar(1))));
  ChainMap<R> xl = eval_Phi<R>(type_text("x@1", 1, 0));
  CHECK(chainmap_equal(xl, y_low_act<R>(0, 1, E::xvar(1, 1) - E::yvar(1))));
  ChainMap<R> tl = eval_Phi<R>(type_text("tau@1", 2, 0));
  CHECK(chainmap_equal(tl, y_low_act<R>(0, 2, -E::tau(2, 1))));
}

TEST_CASE("whiskered chain-map values compose and evaluate back") {
  for (const char* text : {"rho.E^1", "E^1.rho", "lam.E^1", "E^1.lam"}) {
    TypedWord w = type_text(text);
    ChainMap<R> u = eval_Phi<R>(w);
    std::string why;
    INFO(text << ": " << why);
    REQUIRE(chainmap_valid(u, &why));
    CHECK(q_of_word<R>(w) == eval_R<R>(w));
  }
}

TEST_CASE("the defining relations hold as chain maps") {
  CheckResult c = check_webster_relations_phi<R>(1);
  INFO(c.detail);
  REQUIRE(c.ok);
}

TEST_CASE("the two evaluations agree on random words") {
  CheckResult c = check_q_phi_random<R>(100, 2, 6, 0x5eed0001u);
  INFO(c.detail);
  REQUIRE(c.ok);
}
