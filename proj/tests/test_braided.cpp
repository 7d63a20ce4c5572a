#include "doctest.h"
#include "fixtures.hpp"
#include "qha/braided.hpp"

using namespace qha;

namespace {

bool all_ok(const std::vector<CheckResult>& rs) {
  for (const auto& r : rs)
    if (!r.ok) {
      MESSAGE(r.name << ": " << r.witness);
      return false;
    }
  return true;
}

}  // namespace

TEST_SUITE("braided") {
  TEST_CASE("braiding of degree one") {
    const ESC e = fixtures::linear_space(3);
    const BraidedAlgebra T(e, Flavor::tensor);
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j)
        CHECK(T.braid(i, j) == e.chi[static_cast<std::size_t>(j)](e.g[static_cast<std::size_t>(i)]));
    CHECK(check_braid_relation(T).ok);
    CHECK(T.nilpotency(0) == 3);
  }

  TEST_CASE("Delta of x_i x_j in the tensor algebra") {
    const ESC e = fixtures::linear_space(3);
    const BraidedAlgebra T(e, Flavor::tensor);
    BTensor expect;
    add_to(expect, std::make_pair(BWord{0, 1}, BWord{}), Scalar(1));
    add_to(expect, std::make_pair(BWord{}, BWord{0, 1}), Scalar(1));
    add_to(expect, std::make_pair(BWord{0}, BWord{1}), Scalar(1));
    add_to(expect, std::make_pair(BWord{1}, BWord{0}), T.braid(0, 1));
    CHECK(T.comultiply(BWord{0, 1}) == expect);
  }

  TEST_CASE("symmetric and linear flavors normalize words") {
    const ESC e = fixtures::linear_space(2);
    const BraidedAlgebra S(e, Flavor::symmetric), R(e, Flavor::linear);
    CHECK(S.reduce(BWord{1, 0}) == single(BWord{0, 1}, S.braid(1, 0)));
    CHECK(S.reduce(BWord{0, 0}) == single(BWord{0, 0}));
    CHECK(R.reduce(BWord{0, 0}).empty());
    CHECK(R.basis(2).size() == 1);
    CHECK(R.basis(3).empty());
    CHECK(S.basis(2).size() == 3);
    CHECK(R.render(BWord{0, 1}) == "x1*x2");
    CHECK(S.render(BWord{0, 0, 1}) == "x1^2*x2");
  }

  TEST_CASE("quantum symmetric algebras refuse non-commutative systems") {
    const Group G = Group::cyclic(4);
    const Character c = Character::from_exponents(G, {1});
    const ESC e{G, {G.generator(0), G.generator(0)}, {c, c}};
    CHECK_THROWS_AS(BraidedAlgebra(e, Flavor::symmetric), std::invalid_argument);
    CHECK_NOTHROW(BraidedAlgebra(e, Flavor::tensor));
  }

  TEST_CASE("braided Hopf axioms for every flavor") {
    for (Flavor f : {Flavor::tensor, Flavor::symmetric, Flavor::linear}) {
      const BraidedAlgebra a(fixtures::linear_space(3), f, 4);
      CHECK(all_ok(verify_braided(a, f == Flavor::tensor ? 3 : 4)));
    }
    const BraidedAlgebra t(fixtures::taft(4), Flavor::linear, 4);
    CHECK(all_ok(verify_braided(t, 4)));
  }

  TEST_CASE("relations descend") {
    for (Flavor f : {Flavor::symmetric, Flavor::linear}) {
      CHECK(check_relations_descend(BraidedAlgebra(fixtures::linear_space(2), f, 4), 4).ok);
      CHECK(check_relations_descend(BraidedAlgebra(fixtures::taft(3), f, 4), 4).ok);
    }
  }

  TEST_CASE("primitives of the quantum linear space live in degree one") {
    const BraidedAlgebra R(fixtures::linear_space(3), Flavor::linear, 4);
    CHECK(primitives(R, 1).size() == 2);
    for (std::size_t d = 2; d <= 4; ++d) CHECK(primitives(R, d).empty());
    const BraidedAlgebra T(fixtures::taft(2), Flavor::tensor, 3);
    CHECK(primitives(T, 2).size() == 1);
  }

  TEST_CASE("biproduct is a Hopf algebra") {
    const ESC e = fixtures::taft(3);
    const Biproduct b(BraidedAlgebra(e, Flavor::linear, 3));
    CHECK(all_ok(verify_biproduct(b, e.group.elements(), 3)));
    const ESC l = fixtures::linear_space(2);
    const Biproduct b2(BraidedAlgebra(l, Flavor::linear, 3));
    CHECK(all_ok(verify_biproduct(b2, l.group.elements(), 2)));
    CHECK(b.render(BiWord{{0, 0}, e.g[0]}) == "x1^2#g^[1]");
  }

  TEST_CASE("adjoint action on arrows is the inverse character") {
    CHECK(check_adjoint_is_dual(fixtures::taft(5)).ok);
    CHECK(check_adjoint_is_dual(fixtures::linear_space(3)).ok);
    CHECK(check_adjoint_is_dual(fixtures::sl3().esc).ok);
    const YDModule m = adjoint_arrow_module(fixtures::taft(3));
    CHECK(m.check_yd().ok);
  }

  TEST_CASE("pointed YD decomposition round trips") {
    const Group G = Group::cyclic(2);
    const auto dual = dual_group(G);
    const YDModule v{ESC{G, {G.generator(0)}, {dual[1]}}};
    const ESC back = pointed_yd_decompose(yd_tables(v));
    CHECK(back.g == v.data.g);
    CHECK(back.chi[0] == v.data.chi[0]);

    const Group Z3 = Group::cyclic(3);
    const ESC two{Z3, {Z3.generator(0), Z3.generator(0)}, {Character::from_exponents(Z3, {1}), Character::from_exponents(Z3, {2})}};
    const ESC d = pointed_yd_decompose(yd_tables(YDModule{two}));
    CHECK(d.size() == 2);
    CHECK(d.g[0] == d.g[1]);
    CHECK_FALSE(d.chi[0] == d.chi[1]);

    YDTables bad = yd_tables(YDModule{two});
    bad.action.begin()->second[0][1] = Scalar(1);
    CHECK_THROWS_AS(pointed_yd_decompose(bad), std::invalid_argument);

    const Group S3 = fixtures::s3();
    YDTables nc{S3, 1, {}, {{{Element{{1}}, {Scalar(1)}}}}};
    for (const auto& h : S3.elements()) nc.action[h] = {{Scalar(1)}};
    CHECK_THROWS_AS(pointed_yd_decompose(nc), std::invalid_argument);
  }
}
