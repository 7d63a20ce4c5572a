#include "doctest.h"
#include "fixtures.hpp"
#include "qha/structure.hpp"

using namespace qha;

namespace {

Character chi(const Group& g, std::vector<long> e) { return Character::from_exponents(g, std::move(e)); }

// every ESC over a small cyclic group with k indices and central g_i
std::vector<ESC> esc_family(long n, std::size_t k) {
  const Group G = Group::cyclic(n);
  std::vector<ESC> out;
  long total = 1;
  for (std::size_t i = 0; i < k; ++i) total *= n * n;
  for (long code = 0; code < total; ++code) {
    ESC e{G, {}, {}};
    long c = code;
    for (std::size_t i = 0; i < k; ++i) {
      e.g.push_back(G.pow(G.generator(0), c % n));
      c /= n;
      e.chi.push_back(chi(G, {c % n}));
      c /= n;
    }
    out.push_back(e);
  }
  return out;
}

}  // namespace

TEST_SUITE("structure") {
  TEST_CASE("esc and central rsc convert both ways") {
    const Group z4 = Group::cyclic(4);
    const ESC e{z4, {z4.generator(0), z4.generator(0)}, {chi(z4, {1}), chi(z4, {3})}};
    const RSC r = esc_to_crsc(e);
    REQUIRE(r.classes.size() == 1);
    CHECK(r.classes[0].r() == 2);
    CHECK(r.is_central());
    CHECK(esc_isomorphic(crsc_to_esc(r), e).has_value());
    const Group z2 = Group::cyclic(2);
    const RSC one = esc_to_crsc(ESC{z2, {z2.identity()}, {dual_group(z2)[1]}});
    CHECK(one.classes.size() == 1);
    CHECK(one.classes[0].cls.rep == z2.identity());
    CHECK(esc_to_crsc(ESC{z2, {}, {}}).total_r() == 0);
    CHECK(crsc_to_esc(fixtures::z2_loops(3, 1)).size() == 3);
    CHECK_THROWS_AS(crsc_to_esc(fixtures::s3_rsc()), std::invalid_argument);
  }

  TEST_CASE("round trip on random small inputs") {
    const auto fam = esc_family(3, 2);
    for (std::size_t k = 0; k < fam.size(); k += 8) CHECK(esc_isomorphic(crsc_to_esc(esc_to_crsc(fam[k])), fam[k]).has_value());
  }

  TEST_CASE("esc validation") {
    const Group s3 = fixtures::s3();
    ESC bad{s3, {Element{{1}}}, {Character::trivial(s3, s3.elements())}};
    CHECK_THROWS_AS(bad.validate(), std::invalid_argument);
  }

  TEST_CASE("rsc isomorphism") {
    const RSC a = fixtures::z2_loops(3, 1);
    CHECK(rsc_isomorphic(a, a).has_value());
    for (int n = 0; n <= 3; ++n)
      for (int k = 0; k <= 3; ++k) CHECK(rsc_isomorphic(fixtures::z2_loops(3, n), fixtures::z2_loops(3, k)).has_value() == (n == k));
    const Group z2 = Group::cyclic(2);
    const auto d = dual_group(z2);
    const RSC p1 = make_rsc(z2, {{z2.identity(), {d[0], d[1]}}}), p2 = make_rsc(z2, {{z2.identity(), {d[1], d[0]}}});
    CHECK(rsc_isomorphic(p1, p2).has_value());
    const RSC s = fixtures::s3_rsc();
    CHECK(rsc_isomorphic(s, s).has_value());
  }

  TEST_CASE("esc isomorphism through inversion on Z3") {
    const Group z3 = Group::cyclic(3);
    const Element g = z3.generator(0);
    const ESC a{z3, {g}, {chi(z3, {1})}}, b{z3, {z3.pow(g, 2)}, {chi(z3, {2})}};
    const auto w = esc_isomorphic(a, b);
    REQUIRE(w.has_value());
    CHECK(w->phi.at(g) == z3.pow(g, 2));
    CHECK_FALSE(esc_isomorphic(a, ESC{z3, {g}, {chi(z3, {2})}}).has_value());
  }

  TEST_CASE("isomorphism is an equivalence and matches the esc side") {
    const auto fam = esc_family(2, 2);
    for (const auto& a : fam)
      for (const auto& b : fam) {
        const bool e = esc_isomorphic(a, b).has_value();
        CHECK(e == esc_isomorphic(b, a).has_value());
        CHECK(e == rsc_isomorphic(esc_to_crsc(a), esc_to_crsc(b)).has_value());
      }
    const auto fam3 = esc_family(3, 1);
    for (const auto& a : fam3)
      for (const auto& b : fam3)
        for (const auto& c : fam3)
          if (esc_isomorphic(a, b) && esc_isomorphic(b, c)) CHECK(esc_isomorphic(a, c).has_value());
  }

  TEST_CASE("classification over Z2 gives m + 1 classes") {
    const Group z2 = Group::cyclic(2);
    for (int m = 1; m <= 4; ++m) CHECK(classify_rsc(z2, {{z2.identity(), m}}).size() == static_cast<std::size_t>(m + 1));
    CHECK(classify_rsc(z2, {{z2.generator(0), 1}}).size() == 2);
    CHECK(classify_rsc(z2, {}).size() == 1);
  }

  TEST_CASE("classification is complete and irredundant") {
    const Group z4 = Group::cyclic(4);
    const Ramification ram{{z4.generator(0), 1}, {z4.pow(z4.generator(0), 3), 1}};
    const auto reps = classify_rsc(z4, ram);
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j) CHECK_FALSE(rsc_isomorphic(reps[i], reps[j]).has_value());
    const auto d = dual_group(z4);
    for (const auto& a : d)
      for (const auto& b : d) {
        const RSC r = make_rsc(z4, {{z4.generator(0), {a}}, {z4.pow(z4.generator(0), 3), {b}}});
        int hits = 0;
        for (const auto& rep : reps) hits += rsc_isomorphic(r, rep).has_value();
        CHECK(hits == 1);
      }
  }

  TEST_CASE("classification over S3") {
    const Group s3 = fixtures::s3();
    const auto reps = classify_rsc(s3, {{Element{{1}}, 1}, {Element{{3}}, 1}});
    CHECK(reps.size() == 6);
    int hits = 0;
    for (const auto& rep : reps) hits += rsc_isomorphic(fixtures::s3_rsc(), rep).has_value();
    CHECK(hits == 1);
    CHECK(classify_rsc(s3, {{Element{{2}}, 2}}).size() == 3);
  }

  TEST_CASE("quantum commutativity") {
    const Group z4 = Group::cyclic(4);
    CHECK(quantum_commutativity(fixtures::taft(3)) == Commutativity::weakly_commutative);
    CHECK(quantum_commutativity(ESC{z4, {z4.generator(0), z4.generator(0)}, {chi(z4, {1}), chi(z4, {1})}}) == Commutativity::neither);
    CHECK(quantum_commutativity(fixtures::linear_space(3)) == Commutativity::weakly_commutative);
    const Group z2 = Group::cyclic(2);
    CHECK(quantum_commutativity(ESC{z2, {z2.generator(0)}, {chi(z2, {0})}}) == Commutativity::commutative);
  }

  TEST_CASE("FL conditions") {
    for (const auto& fl : {fixtures::sl2(), fixtures::sl3()}) {
      const FLReport r = validate_fl(fl);
      for (bool p : r.pass) CHECK(p);
      CHECK(r.quantum_group_type);
    }
    FLData wrong = fixtures::sl3();
    wrong.r[0][1] = 3;
    CHECK_FALSE(validate_fl(wrong).pass[5]);
    CHECK_FALSE(validate_fl(wrong).fl_type);
    FLData asym = fixtures::sl3();
    asym.d = {1, 2};
    CHECK_FALSE(validate_fl(asym).pass[2]);
    CHECK_THROWS_AS(cartan_to_esc({{2, -1}, {-2, 2}}, {1, 1}, Scalar::q()), std::invalid_argument);
  }

  TEST_CASE("cartan data") {
    const FLData sl2 = fixtures::sl2();
    CHECK(sl2.esc.g[0] == sl2.esc.group.pow(sl2.xi[0], 2));
    const FLData sl3 = fixtures::sl3();
    CHECK(sl3.r[0][1] == 2);
    CHECK(sl3.esc.chi[0](sl3.xi[1]) == Scalar::q());
  }
}
