#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "fixtures.hpp"
#include "qha/bimodule.hpp"
#include "qha/copath.hpp"
#include "qha/qcomb.hpp"
#include "qha/quantum_group.hpp"
#include "qha/semipath.hpp"
#include "qha/taft.hpp"

using namespace qha;

namespace {

struct Outcome {
  bool ok = true;
  std::string note;
  void need(bool cond, const std::string& what) {
    if (!cond && ok) note = what;
    ok = ok && cond;
  }
  void need(const std::vector<CheckResult>& rs, const std::string& where) {
    for (const auto& r : rs) need(r.ok, where + ": " + r.name + " " + r.witness);
  }
  void need(const CheckResult& r, const std::string& where) { need(r.ok, where + ": " + r.name + " " + r.witness); }
};

CopathAlgebra cyclic_loop(long N, std::size_t cutoff) {
  const Group G = Group::cyclic(N);
  return CopathAlgebra(ArrowBimodule(HopfQuiver(make_rsc(G, {{G.generator(0), {Character::from_exponents(G, {1})}}}))), cutoff);
}

Path two(const Arrow& hi, const Arrow& lo) { return Path{lo.source, {lo, hi}}; }

SerreData two_index(const Scalar& q11, const Scalar& q12, const Scalar& q21, const Scalar& q22) {
  const Group G = Group::free_abelian(2);
  return SerreData{ESC{G, {G.generator(0), G.generator(1)},
                       {Character::from_generator_values(G, {q11, q12}), Character::from_generator_values(G, {q21, q22})}},
                   2};
}

std::vector<ESC> taft_fixtures() {
  std::vector<ESC> out;
  for (long n = 2; n <= 5; ++n) out.push_back(fixtures::taft(n));
  out.push_back(fixtures::linear_space(2));
  out.push_back(fixtures::linear_space(3));
  return out;
}

Outcome classify_count() {
  Outcome o;
  const Group z2 = Group::cyclic(2);
  for (int m = 1; m <= 4; ++m) {
    const auto reps = classify_rsc(z2, {{z2.identity(), m}});
    o.need(reps.size() == static_cast<std::size_t>(m + 1), "m = " + std::to_string(m) + " gave " + std::to_string(reps.size()));
    for (std::size_t i = 0; i < reps.size(); ++i)
      for (std::size_t j = i + 1; j < reps.size(); ++j) o.need(!rsc_isomorphic(reps[i], reps[j]), "isomorphic representatives");
  }
  return o;
}

Outcome sign_tables() {
  Outcome o;
  for (int n = 0; n <= 2; ++n) {
    const CopathAlgebra alg(ArrowBimodule(HopfQuiver(fixtures::z2_loops(2, n))), 2);
    const auto& q = alg.quiver();
    const Element e = alg.group().identity(), g = alg.group().generator(0);
    for (int i = 1; i <= 2; ++i)
      for (int j = 1; j <= 2; ++j) {
        const Arrow xi = q.arrow(e, e, i), xj = q.arrow(e, e, j), yi = q.arrow(g, g, i), yj = q.arrow(g, g, j);
        const Scalar s(i > n ? -1 : 1);
        PathElement xx, xy, yx, yy;
        add_to(xx, two(xi, xj), Scalar(1));
        add_to(xx, two(xj, xi), Scalar(1));
        add_to(xy, two(yi, yj), s);
        add_to(xy, two(yj, yi), s);
        add_to(yx, two(yi, yj), Scalar(1));
        add_to(yx, two(yj, yi), Scalar(1));
        add_to(yy, two(xi, xj), s);
        add_to(yy, two(xj, xi), s);
        const std::string at = " n=" + std::to_string(n) + " i=" + std::to_string(i) + " j=" + std::to_string(j);
        o.need(alg.multiply(Path::of(xi), Path::of(xj)) == xx, "x.x" + at);
        o.need(alg.multiply(Path::of(xi), Path::of(yj)) == xy, "x.y" + at);
        o.need(alg.multiply(Path::of(yi), Path::of(xj)) == yx, "y.x" + at);
        o.need(alg.multiply(Path::of(yi), Path::of(yj)) == yy, "y.y" + at);
      }
  }
  return o;
}

Outcome dimensions() {
  Outcome o;
  for (long n = 2; n <= 5; ++n) {
    const TaftAlgebra t(fixtures::taft(n));
    o.need(t.dimension() == n * n, "formula for Z" + std::to_string(n));
    o.need(static_cast<long>(t.basis(n).size()) == n * n, "enumeration for Z" + std::to_string(n));
  }
  const Group G = Group::abelian({2, 2});
  const TaftAlgebra l(ESC{G, {G.generator(0), G.generator(1)}, {Character::from_exponents(G, {1, 1}), Character::from_exponents(G, {1, 1})}});
  const long expect = 4 * l.nilpotency(0) * l.nilpotency(1);
  o.need(expect == 16 && l.dimension() == expect, "formula for Z2 x Z2");
  o.need(static_cast<long>(l.basis(4).size()) == expect, "enumeration for Z2 x Z2");
  return o;
}

Outcome factorial_identity() {
  Outcome o;
  const Scalar q = Scalar::q();
  for (int m = 1; m <= 7; ++m)
    o.need(q_factorial(m, q, QConvention::gauss) == q.pow(m * (m - 1) / 2) * s_m_polynomial(m, q.inverse()), "m = " + std::to_string(m));
  return o;
}

Outcome zero_pattern() {
  Outcome o;
  for (int n = 2; n <= 6; ++n)
    for (int m = 1; m <= 8; ++m)
      o.need(s_m_polynomial(m, Scalar::zeta(n)).is_zero() == (m >= n), "n = " + std::to_string(n) + ", m = " + std::to_string(m));
  return o;
}

Outcome power_products() {
  Outcome o;
  std::mt19937 rng(2024);
  for (long N : {3L, 5L}) {
    const CopathAlgebra alg = cyclic_loop(N, 4);
    for (int m = 1; m <= 4; ++m)
      for (int k = 0; k < 10; ++k) {
        std::vector<long> ex;
        for (int t = 0; t < m; ++t) ex.push_back(static_cast<long>(rng() % static_cast<unsigned>(N)));
        const auto r = product_along_powers(alg, 1, ex);
        o.need(r.ok && r.scalar == r.factorial_form, "Z" + std::to_string(N) + " m = " + std::to_string(m));
      }
  }
  for (long N = 2; N <= 4; ++N) {
    const auto r = product_along_powers(cyclic_loop(N, static_cast<std::size_t>(N)), 1, std::vector<long>(static_cast<std::size_t>(N), 0));
    o.need(r.ok && r.product.empty(), "vanishing at m = N = " + std::to_string(N));
  }
  return o;
}

Outcome hopf_suites() {
  Outcome o;
  for (int n = 0; n <= 2; ++n)
    o.need(verify_bialgebra(CopathAlgebra(ArrowBimodule(HopfQuiver(fixtures::z2_loops(2, n))), 3), 3), "copath Z2 loops");
  o.need(verify_bialgebra(CopathAlgebra(ArrowBimodule(HopfQuiver(fixtures::s3_rsc())), 3), 3), "copath S3");
  const SemipathAlgebra s3(ArrowBimodule(HopfQuiver(fixtures::s3_rsc())), 3);
  o.need(verify_semipath(s3, s3.group().elements(), 3), "semipath S3");
  const FLData fl = fixtures::sl2();
  const SemipathAlgebra sl2 = SemipathAlgebra::from_esc(fl.esc, 3);
  o.need(verify_semipath(sl2, {sl2.group().identity(), fl.xi[0], fl.xi[1]}, 3), "semipath sl2");
  for (long n = 2; n <= 5; ++n) o.need(verify_taft(TaftAlgebra(fixtures::taft(n)), 4), "Taft Z" + std::to_string(n));
  const Group G = Group::abelian({2, 2});
  o.need(verify_taft(TaftAlgebra(ESC{G, {G.generator(0), G.generator(1)},
                                     {Character::from_exponents(G, {1, 1}), Character::from_exponents(G, {1, 1})}}),
                     3),
         "Taft Z2 x Z2");
  return o;
}

Outcome coset_change() {
  Outcome o;
  const RSC r = fixtures::s3_rsc();
  const Group& G = r.group;
  std::vector<CosetSystem> alt;
  for (const auto& c : r.classes)
    alt.emplace_back(G, c.cls,
                     c.cls.rep == Element{{1}} ? std::vector<Element>{Element{{0}}, Element{{4}}, Element{{5}}}
                                               : std::vector<Element>{Element{{0}}, Element{{5}}});
  const ArrowBimodule a{HopfQuiver(r)}, b{HopfQuiver(r, alt)};
  o.need(a.quiver().cosets(0).reps() != b.quiver().cosets(0).reps(), "coset choices coincide");
  const auto f = coset_change_iso(a, b);
  const CheckResult c = check_intertwines(a, b, f);
  o.need(c, "S3");
  o.need(c.checked >= static_cast<long>(a.quiver().arrows().size() * G.elements().size()), "not exhaustive");
  return o;
}

Outcome w_round_trip() {
  Outcome o;
  std::vector<RSC> fam{fixtures::s3_rsc()};
  for (int m = 1; m <= 3; ++m)
    for (int n = 0; n <= m; ++n) fam.push_back(fixtures::z2_loops(m, n));
  for (const auto& e : taft_fixtures()) fam.push_back(esc_to_crsc(e));
  for (const auto& r : fam) o.need(check_w_round_trip(ArrowBimodule(HopfQuiver(r))), r.str());
  return o;
}

Outcome nichols() {
  Outcome o;
  for (const auto& e : taft_fixtures()) {
    const TaftAlgebra t(e);
    long s = 0;
    for (std::size_t j = 0; j < t.size(); ++j) s += t.nilpotency(j) - 1;
    o.need(nichols_check(e, static_cast<int>(std::min(4L, s))), e.str());
  }
  return o;
}

Outcome serre() {
  Outcome o;
  const Scalar q = Scalar::q();
  o.need(serre_primitive_check(two_index(q.pow(2), q.inverse(), q.inverse(), q.pow(2))), "sl2-type");
  const FLData s3 = fixtures::sl3();
  o.need(serre_primitive_check(SerreData{ESC{s3.esc.group, {s3.esc.g[0], s3.esc.g[1]}, {s3.esc.chi[0], s3.esc.chi[1]}}, 2}), "sl3-type");
  const auto neg = serre_primitive_check(two_index(q.pow(2), q, q.inverse(), q.pow(2)));
  o.need(!neg.at(0).ok, "negative control satisfies the condition");
  o.need(!neg.at(2).ok, "negative control is primitive");
  return o;
}

Outcome quantum_groups() {
  Outcome o;
  for (const FLData& fl : {fixtures::sl2(), fixtures::sl3()}) {
    const FLReport r = validate_fl(fl);
    for (std::size_t k = 0; k < 7; ++k) o.need(r.pass[k], "FL" + std::to_string(k + 1));
    const QuantumGroup u(fl);
    o.need(verify_phi_kills_I(u, fl), "Phi(I)");
    o.need(psi_phi_roundtrip(u), "round trip");
    if (fl.n == 1) o.need(sl2_textbook_match(u), "sl2");
  }
  return o;
}

Outcome confluence() {
  Outcome o;
  for (const auto& e : taft_fixtures()) o.need(check_confluence(TaftAlgebra(e), 200, 12345), e.str());
  return o;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"Z2 with r = m has m + 1 classes, m = 1..4", classify_count},
      {"loop product sign tables, m = 2, n = 0,1,2", sign_tables},
      {"Taft dimensions n^2 and 4 N1 N2", dimensions},
      {"(m)_q! = q^(m(m-1)/2) S_m(q^-1), m <= 7", factorial_identity},
      {"S_m(zeta_n) = 0 iff m >= n, n = 2..6, m <= 8", zero_pattern},
      {"power products q^beta (m)_q! P and vanishing at m = N", power_products},
      {"Hopf axioms on copath, semipath and Taft fixtures", hopf_suites},
      {"coset change intertwines the S3 bimodules", coset_change},
      {"W(V(M)) recovers the characters", w_round_trip},
      {"diagram primitives only in degree one", nichols},
      {"q-Serre primitivity with a negative control", serre},
      {"FL1-FL7, Phi(I) = 0, Psi/Phi inverse, sl2 match", quantum_groups},
      {"confluence of 200 random words per Taft fixture", confluence},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.note = std::string("exception: ") + e.what();
    }
    std::printf("%s %2zu  %s%s\n", o.ok ? "PASS" : "FAIL", k + 1, criteria[k].first.c_str(), o.ok ? "" : ("  [" + o.note + "]").c_str());
    std::fflush(stdout);
    failed += !o.ok;
  }
  std::printf("%d of %zu criteria pass\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
