#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "qha/quiver.hpp"

using namespace qha;

namespace {

long binomial(long n, long k) {
  long r = 1;
  for (long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_SUITE("quiver") {
  TEST_CASE("loops only for the identity class") {
    const HopfQuiver q(fixtures::z2_loops(3, 1));
    const Group& G = q.group();
    const Element e = G.identity(), g = G.generator(0);
    CHECK(q.arrows_between(e, e).size() == 3);
    CHECK(q.arrows_between(g, g).size() == 3);
    CHECK(q.arrows_between(e, g).empty());
    CHECK(q.arrows_between(g, e).empty());
    CHECK(q.arrows().size() == 6);
  }

  TEST_CASE("one arrow each way for the class of g") {
    const Group z2 = Group::cyclic(2);
    const Element g = z2.generator(0);
    const HopfQuiver q(make_rsc(z2, {{g, {dual_group(z2)[0]}}}));
    CHECK(q.arrows_between(z2.identity(), g).size() == 1);
    CHECK(q.arrows_between(g, z2.identity()).size() == 1);
    CHECK(q.arrows_between(g, g).empty());
    CHECK_THROWS_AS(q.arrow(g, g, 1), std::invalid_argument);
    const HopfQuiver none(make_rsc(z2, {}));
    CHECK(none.arrows().empty());
  }

  TEST_CASE("arrow counts match the ramification on S3") {
    const HopfQuiver q(fixtures::s3_rsc());
    const Group& G = q.group();
    for (const auto& x : G.elements())
      for (const auto& y : G.elements()) {
        const Element d = G.mul(G.inv(x), y);
        const RSCClass* c = q.rsc().find_class(d);
        CHECK(q.arrows_between(x, y).size() == (c ? c->r() : 0));
        for (const auto& a : q.arrows_between(x, y)) CHECK(q.cosets(a.cls).conjugate(a.theta) == d);
      }
    CHECK(q.arrows().size() == 6 * 5);
  }

  TEST_CASE("paths compose and render right to left") {
    const HopfQuiver q(fixtures::z2_loops(2, 0));
    const auto p2 = q.paths(2);
    CHECK(p2.size() == 2 * 2 * 2);
    for (const auto& p : p2) {
      CHECK(p.arrows[0].target == p.arrows[1].source);
      CHECK(q.parse_path(q.render(p)) == p);
    }
    const Path p = q.parse_path("a2[g^[1]<-g^[1]]·a1[g^[1]<-g^[1]]");
    CHECK(p.arrows[0].label == 1);
    CHECK(p.slice(1, 2).arrows[0].label == 2);
    CHECK(q.parse_path("g^[1]") == Path::vertex(q.group().generator(0)));
    CHECK_THROWS_AS(q.parse_path("a1[g^[1]<-g^[0]]"), std::invalid_argument);
  }

  TEST_CASE("thin splits") {
    CHECK(thin_splits(1, 1).size() == 2);
    CHECK(thin_splits(2, 1).size() == 3);
    CHECK(thin_splits(2, 2).size() == 6);
    for (int n = 0; n <= 4; ++n)
      for (int m = 0; m <= 4; ++m) {
        const auto s = thin_splits(n, m);
        CHECK(static_cast<long>(s.size()) == binomial(n + m, n));
        CHECK(std::set<ThinSplit>(s.begin(), s.end()).size() == s.size());
        for (const auto& d : s) {
          int ones = 0;
          for (int x : d) ones += x;
          CHECK(ones == n);
        }
      }
    CHECK_THROWS_AS(thin_splits(7, 7), std::out_of_range);
  }

  TEST_CASE("applying a thin split") {
    const HopfQuiver q(fixtures::z2_loops(2, 0));
    const Group& G = q.group();
    const Arrow a = q.arrow(G.generator(0), G.generator(0), 1);
    const Path p = Path::of(a);
    auto r = apply_thin_split({1}, p);
    CHECK(std::get<Arrow>(r[0]) == a);
    r = apply_thin_split({1, 0}, p);
    CHECK(std::get<Arrow>(r[0]) == a);
    CHECK(std::get<Element>(r[1]) == a.target);
    r = apply_thin_split({0, 1}, p);
    CHECK(std::get<Element>(r[0]) == a.source);
    CHECK(std::get<Arrow>(r[1]) == a);
    const Path two = q.paths(2).back();
    for (const auto& d : thin_splits(2, 2)) {
      std::vector<Arrow> seen;
      for (const auto& x : apply_thin_split(d, two))
        if (std::holds_alternative<Arrow>(x)) seen.push_back(std::get<Arrow>(x));
      CHECK(seen == two.arrows);
    }
    CHECK_THROWS_AS(apply_thin_split({1, 1}, p), std::invalid_argument);
  }
}
