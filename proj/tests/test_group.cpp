#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "qha/character.hpp"
#include "qha/group.hpp"

using namespace qha;

TEST_SUITE("group") {
  TEST_CASE("conjugacy classes") {
    const Group z2 = Group::cyclic(2);
    CHECK(z2.conjugacy_classes().size() == 2);
    for (const auto& c : z2.conjugacy_classes()) CHECK(c.centralizer.size() == 2);
    CHECK(Group::cyclic(4).conjugacy_classes().size() == 4);
    const Group s3 = fixtures::s3();
    std::multiset<std::size_t> sizes;
    for (const auto& c : s3.conjugacy_classes()) sizes.insert(c.members.size());
    CHECK(sizes == std::multiset<std::size_t>{1, 2, 3});
    CHECK(s3.class_of(Element{{5}}).rep == Element{{1}});
    CHECK(s3.class_of(Element{{4}}).rep == Element{{3}});
    CHECK(s3.centralizer(Element{{1}}).size() == 2);
    CHECK(s3.centralizer(Element{{3}}).size() == 3);
    CHECK_FALSE(s3.is_abelian());
  }

  TEST_CASE("invalid tables are rejected") {
    CHECK_THROWS_AS(Group::cayley({{0, 1}, {1, 1}}), std::invalid_argument);
    CHECK_THROWS_AS(Group::cayley({{0, 1, 2}, {1, 2, 0}, {2, 1, 0}}), std::invalid_argument);
  }

  TEST_CASE("rendering") {
    const Group g = Group::abelian({2, 4});
    CHECK(g.render(g.identity()) == "g^[0,0]");
    CHECK(g.parse("g^[1,3]") == g.mul(g.generator(0), g.pow(g.generator(1), 3)));
    CHECK(g.pow(g.generator(1), -1) == g.parse("g^[0,3]"));
    const Group s3 = fixtures::s3();
    CHECK(s3.render(Element{{4}}) == "#4");
    CHECK(s3.parse("#4") == Element{{4}});
    CHECK_THROWS_AS(s3.parse("#9"), std::invalid_argument);
    const Group f = Group::free_abelian(2);
    CHECK(f.render(f.parse("g^[-1,2]")) == "g^[-1,2]");
    CHECK(f.element_order(f.generator(0)) == 0);
  }

  TEST_CASE("coset systems are transversals with identity first") {
    const Group s3 = fixtures::s3();
    for (const auto& c : s3.conjugacy_classes()) {
      const CosetSystem cs(s3, c);
      CHECK(cs.size() == c.members.size());
      CHECK(cs.reps().front() == s3.identity());
      std::set<Element> seen;
      for (std::size_t t = 0; t < cs.size(); ++t) {
        CHECK(cs.theta_of(cs.conjugate(t)) == t);
        for (const auto& z : c.centralizer) seen.insert(s3.mul(z, cs.reps()[t]));
      }
      CHECK(seen.size() == 6);
    }
  }

  TEST_CASE("zeta_theta is total and unique") {
    const Group s3 = fixtures::s3();
    for (const auto& c : s3.conjugacy_classes()) {
      const CosetSystem cs(s3, c);
      for (std::size_t t = 0; t < cs.size(); ++t) {
        CHECK(cs.zeta(t, s3.identity()) == std::pair{s3.identity(), t});
        for (const auto& h : s3.elements()) {
          const auto [hp, tp] = cs.zeta(t, h);
          CHECK(s3.mul(cs.reps()[t], h) == s3.mul(hp, cs.reps()[tp]));
          CHECK(std::find(c.centralizer.begin(), c.centralizer.end(), hp) != c.centralizer.end());
        }
      }
    }
    const Group z4 = Group::cyclic(4);
    const CosetSystem ab(z4, z4.class_of(z4.generator(0)));
    for (const auto& h : z4.elements()) CHECK(ab.zeta(0, h) == std::pair{h, std::size_t{0}});
  }

  TEST_CASE("explicit coset representatives") {
    const Group s3 = fixtures::s3();
    const ConjClass t = s3.class_of(Element{{1}});
    CHECK_NOTHROW(CosetSystem(s3, t, {Element{{0}}, Element{{4}}, Element{{5}}}));
    CHECK_THROWS_AS(CosetSystem(s3, t, {Element{{0}}, Element{{1}}, Element{{5}}}), std::invalid_argument);
    CHECK_THROWS_AS(CosetSystem(s3, t, {Element{{2}}, Element{{4}}, Element{{5}}}), std::invalid_argument);
  }

  TEST_CASE("characters") {
    const auto d2 = dual_group(Group::cyclic(2));
    REQUIRE(d2.size() == 2);
    const Group z2 = Group::cyclic(2);
    CHECK(d2[0](z2.generator(0)) == Scalar(1));
    CHECK(d2[1](z2.generator(0)) == Scalar(-1));
    const Group z3 = Group::cyclic(3);
    const auto d3 = dual_group(z3);
    CHECK(d3[1](z3.generator(0)) == Scalar::zeta(3));
    const auto d22 = dual_group(Group::abelian({2, 2}));
    CHECK(d22.size() == 4);
    for (std::size_t i = 0; i < d22.size(); ++i)
      for (std::size_t j = 0; j < d22.size(); ++j) {
        CHECK((i == j) == (d22[i] == d22[j]));
        CHECK(std::find(d22.begin(), d22.end(), d22[i] * d22[j]) != d22.end());
      }
    const Group s3 = fixtures::s3();
    const auto z = s3.centralizer(Element{{3}});
    const Character c = Character::on_subgroup(s3, z, {1});
    CHECK(c.verify_multiplicative());
    CHECK(c(Element{{3}}).root_of_unity_order() == 3);
  }

  TEST_CASE("automorphisms") {
    CHECK(automorphisms(Group::cyclic(2)).size() == 1);
    CHECK(automorphisms(Group::cyclic(3)).size() == 2);
    CHECK(automorphisms(Group::abelian({2, 2})).size() == 6);
    CHECK(automorphisms(fixtures::s3()).size() == 6);
    CHECK(isomorphisms(Group::cyclic(4), Group::abelian({2, 2})).empty());
    CHECK_THROWS_AS(automorphisms(Group::abelian({2, 2, 2}), 4), std::out_of_range);
  }
}
