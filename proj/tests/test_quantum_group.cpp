#include "doctest.h"
#include "fixtures.hpp"
#include "qha/qcomb.hpp"
#include "qha/quantum_group.hpp"

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

SerreData two_index(const Scalar& q11, const Scalar& q12, const Scalar& q21, const Scalar& q22, long r) {
  // chi_i(g_j) = q_ij on the free abelian group of rank 2 with g_j = e_j
  const Group G = Group::free_abelian(2);
  const ESC e{G, {G.generator(0), G.generator(1)},
              {Character::from_generator_values(G, {q11, q12}), Character::from_generator_values(G, {q21, q22})}};
  return SerreData{e, r};
}

}  // namespace

TEST_SUITE("quantum_group") {
  TEST_CASE("Cartan input") {
    const FLData s2 = fixtures::sl2();
    CHECK(s2.n == 1);
    CHECK(s2.esc.g[0] == s2.esc.group.pow(s2.xi[0], 2));
    const FLData s3 = fixtures::sl3();
    CHECK(s3.r[0][1] == 2);
    CHECK(s3.esc.chi[0](s3.xi[1]) == Scalar::q());
    for (const FLData& fl : {s2, s3}) {
      const FLReport rep = validate_fl(fl);
      for (bool p : rep.pass) CHECK(p);
      CHECK(rep.quantum_group_type);
      CHECK(check_xi_symmetry(fl).ok);
    }
    CHECK_THROWS_AS(cartan_to_esc({{2, -1}, {-2, 2}}, {1, 1}, Scalar::q()), std::invalid_argument);
    CHECK_NOTHROW(cartan_to_esc({{2, -1}, {-2, 2}}, {2, 1}, Scalar::q()));
  }

  TEST_CASE("ideal generators") {
    const FLData s2 = fixtures::sl2();
    const auto alg2 = SemipathAlgebra::from_esc(s2.esc, 3);
    const auto rel2 = build_ideal(s2, alg2);
    REQUIRE(rel2.size() == 1);
    CHECK(rel2[0].name == "commutator");
    bool constant = false;
    for (const auto& [w, c] : rel2[0].element) constant = constant || w.degree() == 0;
    CHECK(constant);

    const FLData s3 = fixtures::sl3();
    const auto alg3 = SemipathAlgebra::from_esc(s3.esc, 3);
    long serre = 0;
    for (const auto& r : build_ideal(s3, alg3)) {
      if (r.name != "q-Serre") {
        bool has_constant = false;
        for (const auto& [w, c] : r.element) has_constant = has_constant || w.degree() == 0;
        CHECK(has_constant == (r.j == s3.sigma(r.i)));
        continue;
      }
      ++serre;
      CHECK(r.element.size() == 3);
    }
    CHECK(serre == 4);
  }

  TEST_CASE("sl2 presentation") {
    const QuantumGroup u(fixtures::sl2());
    CHECK(u.generators() == std::vector<std::string>{"K1", "K2", "X1", "X2"});
    CHECK(sl2_textbook_match(u).ok);
    CHECK(u.counit(UWord{u.fl().xi[0], {}}) == Scalar(1));
    CHECK(u.counit(UWord{u.group().identity(), {0}}) == Scalar(0));
    CHECK(u.render(u.multiply(u.X(1), u.X(0))) == u.render(u.reduce(u.multiply(u.X(1), u.X(0)))));
  }

  TEST_CASE("sl3 presentation has Serre relations") {
    const QuantumGroup u(fixtures::sl3());
    CHECK(u.serre_count() == 4);
  }

  TEST_CASE("Phi kills the ideal") {
    for (const FLData& fl : {fixtures::sl2(), fixtures::sl3()}) {
      const QuantumGroup u(fl);
      CHECK(verify_phi_kills_I(u, fl).ok);
    }
  }

  TEST_CASE("Phi of the ideal for wrong r is nonzero") {
    const FLData fl = fixtures::sl3();
    FLData wrong = fl;
    for (auto& row : wrong.r)
      for (auto& x : row)
        if (x > 1) x -= 1;
    const auto rep = verify_phi_kills_I(QuantumGroup(fl), wrong);
    CHECK_FALSE(rep.ok);
    CHECK(rep.witness.find("q-Serre") != std::string::npos);
  }

  TEST_CASE("Phi and Psi are inverse") {
    CHECK(all_ok(psi_phi_roundtrip(QuantumGroup(fixtures::sl2()))));
    CHECK(all_ok(psi_phi_roundtrip(QuantumGroup(fixtures::sl3()))));
  }

  TEST_CASE("Phi on generators") {
    const FLData fl = fixtures::sl2();
    const QuantumGroup u(fl);
    const auto alg = SemipathAlgebra::from_esc(fl.esc, 2);
    CHECK(phi_map(u, alg.vertex(fl.xi[0])) == u.K(fl.xi[0]));
    CHECK(phi_map(u, alg.generator(1)) == u.multiply(u.K(fl.xi[0]), u.X(0)));
    CHECK(phi_map(u, alg.generator(2)) == u.multiply(u.K(fl.xi[0]), u.X(1)));
  }

  TEST_CASE("q-Serre elements are primitive") {
    const Scalar q = Scalar::q();
    // A2 exponents: q^{a_ij} with a_12 = a_21 = -1
    const auto sl2_type = serre_primitive_check(two_index(q.pow(2), q.inverse(), q.inverse(), q.pow(2), 2));
    CHECK(sl2_type.size() == 5);
    CHECK(all_ok(sl2_type));
    const FLData s3 = fixtures::sl3();
    ESC pair{s3.esc.group, {s3.esc.g[0], s3.esc.g[1]}, {s3.esc.chi[0], s3.esc.chi[1]}};
    CHECK(all_ok(serre_primitive_check(SerreData{pair, 2})));
  }

  TEST_CASE("r = 1 gives the braided commutator") {
    const Scalar z = Scalar::zeta(5);
    const auto rs = serre_primitive_check(two_index(z, z.pow(2), z.pow(3), z, 1));
    CHECK(rs.size() == 3);
    CHECK(all_ok(rs));
  }

  TEST_CASE("violating the condition breaks primitivity") {
    const Scalar q = Scalar::q();
    const auto rs = serre_primitive_check(two_index(q.pow(2), q, q.inverse(), q.pow(2), 2));
    CHECK_FALSE(rs[0].ok);
    CHECK_FALSE(rs[2].ok);
    REQUIRE(rs.size() == 5);
    CHECK_FALSE(rs[4].ok);
  }

  TEST_CASE("second Serre form") {
    const Scalar q = Scalar::q();
    CHECK(all_ok(serre_pair_check(two_index(q.pow(2), q.pow(2), q.pow(-2), q.pow(2), 1))));
  }
}
