#include "doctest.h"
#include "fixtures.hpp"
#include "qha/bimodule.hpp"

using namespace qha;

TEST_SUITE("bimodule") {
  TEST_CASE("actions on the Z2 loops") {
    const int m = 3, n = 1;
    const ArrowBimodule b{HopfQuiver(fixtures::z2_loops(m, n))};
    const Group& G = b.group();
    const Element e = G.identity(), g = G.generator(0);
    for (int i = 1; i <= m; ++i) {
      const Arrow x = b.quiver().arrow(e, e, i), y = b.quiver().arrow(g, g, i);
      CHECK(b.left_action(g, x) == y);
      CHECK(b.left_action(e, x) == x);
      const auto [s, a] = b.right_action(x, g);
      CHECK(a == y);
      CHECK(s == Scalar(i > n ? -1 : 1));
      CHECK(b.right_action(x, e) == std::pair{Scalar(1), x});
      CHECK(b.left_coaction(x) == std::pair{e, x});
      CHECK(b.right_coaction(y) == std::pair{y, g});
    }
  }

  TEST_CASE("translation on Z3") {
    const Group z3 = Group::cyclic(3);
    const Element g = z3.generator(0);
    const ArrowBimodule b{HopfQuiver(make_rsc(z3, {{g, {dual_group(z3)[1]}}}))};
    const Arrow a = b.quiver().arrow(g, z3.identity(), 1);
    const Arrow t = b.left_action(g, a);
    CHECK(t.source == g);
    CHECK(t.target == z3.pow(g, 2));
    CHECK(b.right_action(a, g).first == Scalar::zeta(3));
  }

  TEST_CASE("axioms hold on every fixture") {
    for (const auto& r : {fixtures::z2_loops(2, 1), fixtures::s3_rsc()}) {
      const ArrowBimodule b{HopfQuiver(r)};
      CHECK(check_bimodule_axioms(b).ok);
      CHECK(check_pointed(b).ok);
      CHECK(check_w_round_trip(b).ok);
      CHECK(check_dual_pairing(b).ok);
    }
  }

  TEST_CASE("S3 right action goes through zeta_theta") {
    const ArrowBimodule b{HopfQuiver(fixtures::s3_rsc())};
    const Group& G = b.group();
    bool nontrivial = false;
    for (const auto& a : b.quiver().arrows())
      for (const auto& h : G.elements()) {
        const auto& cs = b.quiver().cosets(a.cls);
        const auto [z, tp] = cs.zeta(a.theta, h);
        const auto [s, img] = b.right_action(a, h);
        CHECK(s == b.character_value(a, z));
        CHECK(img.source == G.mul(a.source, h));
        CHECK(img.theta == tp);
        nontrivial = nontrivial || !(s == Scalar(1));
      }
    CHECK(nontrivial);
  }

  TEST_CASE("W functor recovers the characters") {
    const ArrowBimodule b{HopfQuiver(fixtures::z2_loops(2, 1))};
    const auto w = w_functor(b);
    REQUIRE(w.size() == 2);
    for (const auto& entry : w) CHECK(entry.diagonal);
    const Group& G = b.group();
    CHECK(w[1].recovered(G.generator(0)) == Scalar(-1));
    CHECK(w[0].recovered(G.generator(0)) == Scalar(1));
  }

  TEST_CASE("dual coactions") {
    const ArrowBimodule b{HopfQuiver(fixtures::z2_loops(2, 1))};
    const Arrow x = b.quiver().arrow(b.group().identity(), b.group().identity(), 2);
    const auto left = dual_left_coaction(b, x), right = dual_right_coaction(b, x);
    CHECK(left.size() == 2);
    CHECK(right.size() == 2);
    for (const auto& t : right) CHECK(t.coeff == Scalar(t.h == b.group().identity() ? 1 : -1));
  }

  TEST_CASE("a corrupted right action breaks the axioms") {
    const auto twist = [](const Arrow& a, const Element& h, const Scalar& v) {
      return a.source == Element{{0}} && h == Element{{1}} ? -v : v;
    };
    const ArrowBimodule b(HopfQuiver(fixtures::z2_loops(1, 1)), twist);
    CHECK_FALSE(check_bimodule_axioms(b).ok);
  }

  TEST_CASE("coset change intertwines") {
    const RSC r = fixtures::s3_rsc();
    const HopfQuiver q0(r);
    const ArrowBimodule same(q0);
    const auto id = coset_change_iso(same, ArrowBimodule(q0));
    for (const auto& [a, s] : id) CHECK(s == Scalar(1));

    const Group& G = r.group;
    std::vector<CosetSystem> alt;
    for (const auto& c : r.classes)
      alt.emplace_back(G, c.cls,
                       c.cls.rep == Element{{1}} ? std::vector<Element>{Element{{0}}, Element{{4}}, Element{{5}}}
                                                 : std::vector<Element>{Element{{0}}, Element{{5}}});
    const ArrowBimodule other(HopfQuiver(r, alt));
    const auto f = coset_change_iso(same, other);
    bool nontrivial = false;
    for (const auto& [a, s] : f) nontrivial = nontrivial || !(s == Scalar(1));
    CHECK(nontrivial);
    CHECK(check_intertwines(same, other, f).ok);
    std::map<Arrow, Scalar> ones;
    for (const auto& [a, s] : f) ones[a] = Scalar(1);
    CHECK_FALSE(check_intertwines(same, other, ones).ok);
  }

  TEST_CASE("abelian coset changes are diagonal by character values") {
    const Group z4 = Group::cyclic(4);
    const RSC r = make_rsc(z4, {{z4.generator(0), {dual_group(z4)[1]}}});
    const ArrowBimodule a{HopfQuiver(r)};
    CHECK(check_intertwines(a, a, coset_change_iso(a, a)).ok);
  }
}
