#include "doctest.h"
#include "fixtures.hpp"
#include "qha/braided.hpp"
#include "qha/semipath.hpp"

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

TEST_SUITE("semipath") {
  TEST_CASE("pushing a group element through an arrow picks up the character") {
    const ESC e = fixtures::taft(3);
    const SemipathAlgebra alg = SemipathAlgebra::from_esc(e);
    const Element g = e.group.generator(0);
    const auto x = alg.multiply(alg.generator(1), alg.vertex(g));
    CHECK(x == single(TensorWord{g, alg.generator(1).letters}, Scalar::zeta(3)));
    CHECK(alg.render(x) == alg.render(single(TensorWord{g, alg.generator(1).letters}, Scalar::zeta(3))));
  }

  TEST_CASE("vertices multiply as the group and arrows freely") {
    const ESC e = fixtures::linear_space(2);
    const SemipathAlgebra alg = SemipathAlgebra::from_esc(e);
    const Element a = e.group.generator(0), b = e.group.generator(1);
    CHECK(alg.multiply(alg.vertex(a), alg.vertex(b)) == single(alg.vertex(e.group.mul(a, b))));
    const auto ee = alg.multiply(alg.generator(1), alg.generator(2));
    REQUIRE(ee.size() == 1);
    CHECK(ee.begin()->second == Scalar(1));
    CHECK(alg.render(ee.begin()->first) == "E1 * E2");
  }

  TEST_CASE("arrows are skew-primitive") {
    const ESC e = fixtures::taft(4);
    const SemipathAlgebra alg = SemipathAlgebra::from_esc(e);
    const TensorWord E = alg.generator(1);
    SemipathTensor expect;
    add_to(expect, std::make_pair(E, alg.vertex(e.group.identity())), Scalar(1));
    add_to(expect, std::make_pair(alg.vertex(e.g[0]), E), Scalar(1));
    CHECK(alg.comultiply(E) == expect);
  }

  TEST_CASE("products past the cutoff are rejected") {
    const SemipathAlgebra alg = SemipathAlgebra::from_esc(fixtures::taft(2), 2);
    const auto EE = alg.multiply(alg.generator(1), alg.generator(1));
    CHECK_THROWS_AS(alg.multiply(EE, single(alg.generator(1))), std::out_of_range);
  }

  TEST_CASE("coinvariant basis counts the free monoid") {
    const SemipathAlgebra one = SemipathAlgebra::from_esc(fixtures::taft(3));
    CHECK(coinvariants_basis(one, 0).size() == 1);
    CHECK(coinvariants_basis(one, 2).size() == 3);
    const SemipathAlgebra two = SemipathAlgebra::from_esc(fixtures::linear_space(2));
    CHECK(coinvariants_basis(two, 2).size() == 7);
    for (std::size_t t = 0; t <= 3; ++t) CHECK(two.words(two.group().elements(), t).size() == 4 * (1u << t));
  }

  TEST_CASE("parse and render round trip") {
    const ESC e = fixtures::linear_space(3);
    const SemipathAlgebra alg = SemipathAlgebra::from_esc(e);
    for (const char* s : {"g^[1,2] * E1 * E2", "E2 * E2", "g^[0,1]", "g^[0,0]"}) CHECK(alg.render(alg.parse(s)) == s);
    CHECK_THROWS(alg.parse("E1 * g^[1,0]"));
  }

  TEST_CASE("non-central quiver letters carry their target") {
    const SemipathAlgebra alg(ArrowBimodule(HopfQuiver(fixtures::s3_rsc())), 3);
    CHECK_FALSE(alg.central());
    const TensorWord w = alg.parse("#2 * a1[#5] * a2[#4]");
    CHECK(alg.render(w) == "#2 * a1[#5] * a2[#4]");
  }

  TEST_CASE("Hopf suite on Taft, linear-space and sl2 semi-path algebras") {
    for (long n : {2, 3}) {
      const SemipathAlgebra alg = SemipathAlgebra::from_esc(fixtures::taft(n), 3);
      CHECK(all_ok(verify_semipath(alg, alg.group().elements(), 3)));
    }
    const SemipathAlgebra lin = SemipathAlgebra::from_esc(fixtures::linear_space(2), 3);
    CHECK(all_ok(verify_semipath(lin, lin.group().elements(), 2)));
    const FLData fl = fixtures::sl2();
    const SemipathAlgebra s = SemipathAlgebra::from_esc(fl.esc, 3);
    const Group& G = s.group();
    const std::vector<Element> window{G.identity(), fl.xi[0], fl.xi[1]};
    CHECK(all_ok(verify_semipath(s, window, 3)));
  }

  TEST_CASE("Hopf suite on the S3 semi-path algebra") {
    const SemipathAlgebra alg(ArrowBimodule(HopfQuiver(fixtures::s3_rsc())), 2);
    CHECK(all_ok(verify_semipath(alg, {alg.group().identity(), Element{{1}}, Element{{3}}}, 2)));
  }

  TEST_CASE("coinvariants form the quantum tensor algebra with inverted characters") {
    CHECK(all_ok(check_diagram_tensor(fixtures::taft(3), 3)));
    CHECK(all_ok(check_diagram_tensor(fixtures::linear_space(2), 3)));
    CHECK(all_ok(check_diagram_tensor(fixtures::sl2().esc, 3)));
  }
}
