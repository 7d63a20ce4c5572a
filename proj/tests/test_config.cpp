#include <sstream>

#include "doctest.h"
#include "qha/commands.hpp"
#include "qha/config.hpp"

using namespace qha;

namespace {

const std::string fx = QHA_FIXTURES;

int run(CommandOptions o, std::string& out) {
  std::ostringstream os, es;
  const int rc = run_cli(o, os, es);
  out = os.str() + es.str();
  return rc;
}

}  // namespace

TEST_SUITE("config") {
  TEST_CASE("comments and sections") {
    const JobConfig c = parse_config(R"(// header
      {"group": {"kind": "abelian", "factors": [2]},
       "rsc": {"classes": [{"rep": "g^[0]", "r": 2, "chars": [[0], [1]]}]},
       "params": {"cutoff": 3, "seed": 5}})");
    REQUIRE(c.rsc);
    CHECK(c.rsc->total_r() == 2);
    CHECK(c.ramification.size() == 1);
    CHECK(c.cutoff == 3);
    CHECK(c.seed == 5);
  }

  TEST_CASE("every shipped fixture loads") {
    for (const char* f : {"z2_loops_m3", "z2_loops_m2_n1", "s3_rsc", "s3_rsc_cosets", "taft_z2", "taft_z3", "taft_z4", "taft_z5",
                          "z2xz2", "z3xz3", "sl2", "sl3", "serre_a2", "serre_negative"})
      CHECK_NOTHROW(load_config(fx + "/" + f + ".json"));
    CHECK_THROWS_AS(load_config(fx + "/bad_schema.json"), SchemaError);
    CHECK_THROWS_AS(load_config(fx + "/missing.json"), SchemaError);
  }

  TEST_CASE("schema errors") {
    CHECK_THROWS_AS(parse_config("{"), SchemaError);
    CHECK_THROWS_AS(parse_config("[]"), SchemaError);
    CHECK_THROWS_AS(parse_config(R"({"colour": 1})"), SchemaError);
    CHECK_THROWS_AS(parse_config(R"({"group": {"kind": "lie"}})"), SchemaError);
    CHECK_THROWS_AS(parse_config(R"({"group": {"kind": "abelian", "factors": [0]}})"), SchemaError);
    CHECK_THROWS_AS(parse_config(R"({"group": {"kind": "abelian", "factors": [2]}, "params": {"cutoff": 0}})"), SchemaError);
    CHECK_THROWS_AS(parse_config(R"({"group": {"kind": "abelian", "factors": [2]}, "params": {"depth": 1}})"), SchemaError);
    CHECK_THROWS_AS(parse_config(R"({"esc": {"items": [{"g": "g^[1]", "chi": [1]}]}})"), SchemaError);
    CHECK_THROWS_AS(parse_config(R"({"group": {"kind": "abelian", "factors": [2]},
                                     "rsc": {"classes": [{"rep": "g^[0]", "r": 2, "chars": [[1]]}]}})"),
                    SchemaError);
    CHECK_THROWS_AS(parse_config(R"({"group": {"kind": "cayley", "table": [[0, 1], [1, 1]]}})"), SchemaError);
    CHECK_THROWS_AS(parse_config(R"({"cartan": {"A": [[2, -1], [-2, 2]]}})"), SchemaError);
    CHECK_THROWS_AS(parse_config(R"({"scalar": "real"})"), SchemaError);
  }

  TEST_CASE("esc over each group kind") {
    const JobConfig f = parse_config(R"({"group": {"kind": "free_abelian", "rank": 1},
                                         "esc": {"items": [{"g": "g^[1]", "chi": ["q^-1"]}]}})");
    CHECK(f.esc->q(0, 0) == Scalar::q().inverse());
    const JobConfig a = parse_config(R"({"group": {"kind": "abelian", "factors": [4]},
                                         "esc": {"items": [{"g": "g^[1]", "chi": [1]}]}})");
    CHECK(a.esc->q(0, 0) == Scalar::zeta(4));
  }

  TEST_CASE("cartan input") {
    const FLData fl = parse_cartan(R"({"A": [[2, -1], [-1, 2]], "d": [1, 1]})");
    CHECK(fl.n == 2);
    CHECK(parse_cartan(R"({"cartan": {"A": [[2]]}})").n == 1);
  }

  TEST_CASE("cli exit statuses") {
    std::string out;
    CommandOptions o;
    o.command = "classify";
    o.config_path = fx + "/z2_loops_m3.json";
    CHECK(run(o, out) == 0);
    CHECK(out.find("4 classes") != std::string::npos);
    o.command = "serre";
    o.config_path = fx + "/serre_negative.json";
    CHECK(run(o, out) == 1);
    o.config_path = fx + "/bad_schema.json";
    CHECK(run(o, out) == 2);
    o.command = "frobnicate";
    CHECK(run(o, out) == 2);
    CommandOptions u;
    u.command = "uq";
    u.cartan_path = fx + "/sl2.json";
    CHECK(run(u, out) == 0);
    CHECK(out.find("Phi(I) = 0: pass") != std::string::npos);
    CHECK(out.find("Psi o Phi = id on generators: pass") != std::string::npos);
    CommandOptions q;
    q.command = "qfact";
    q.m = 5;
    CHECK(run(q, out) == 0);
    q.m = 20;
    CHECK(run(q, out) == 2);
  }

  TEST_CASE("reports are deterministic and json is well formed") {
    CommandOptions o;
    o.command = "verify";
    o.config_path = fx + "/taft_z3.json";
    o.format = "json";
    std::string a, b;
    CHECK(run(o, a) == 0);
    CHECK(run(o, b) == 0);
    CHECK(a == b);
    CHECK(a.find("\"schema\": \"qha-report/1\"") != std::string::npos);
  }
}
