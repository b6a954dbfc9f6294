#include <doctest.h>

#include <json.hpp>

#include "cli_runner.hpp"

using exsuper::cli::Request;
using exsuper::cli::run;
using nlohmann::json;

namespace {

using LL = std::vector<long long>;

json parse(const std::string& s) { return json::parse(s); }

}  // namespace

TEST_CASE("classify: both methods reported and agreeing") {
  auto res = run({.subcommand = "classify",
                  .type = "g3",
                  .characteristic = 5,
                  .weight = LL{2, 0, 5}});
  REQUIRE(res.exit_code == 0);
  auto j = parse(res.json);
  CHECK(j.at("finite") == true);
  CHECK(j.at("method_a").at("verdict") == "FINITE");
  CHECK(j.at("method_b").at("verdict") == "FINITE");
  CHECK(j.at("method_b").at("clause") == "ThmG3(3)(i)");
}

TEST_CASE("classify infinite weight carries a witness") {
  auto res = run({.subcommand = "classify",
                  .type = "g3",
                  .characteristic = 5,
                  .weight = LL{2, 0, 4}});
  REQUIRE(res.exit_code == 0);
  auto j = parse(res.json);
  CHECK(j.at("finite") == false);
  CHECK(j.at("method_a").contains("witness_node"));
  CHECK(j.at("method_a").contains("witness_weight"));
}

TEST_CASE("chain output") {
  auto res = run({.subcommand = "chain",
                  .type = "d",
                  .characteristic = 5,
                  .zeta = "1",
                  .weight = LL{1, 0, 0}});
  REQUIRE(res.exit_code == 0);
  auto j = parse(res.json);
  REQUIRE(j.at("nodes").size() == 4);
  CHECK(j["nodes"][0].at("branch") == "root");
  CHECK(j["nodes"][0].at("lambda") == json::array({1, 0, 0}));
  // (lambda, beta1) = (0+1) + (0+1)*1 = 2 != 0 mod 5: reflected
  CHECK(j["nodes"][1].at("branch") == "reflected");
  CHECK(j["nodes"][1].at("lambda") == json::array({0, 1, 1}));
}

TEST_CASE("list output is the finite set of the box") {
  auto res = run({.subcommand = "list",
                  .type = "g3",
                  .characteristic = 5,
                  .box = LL{4, 4, 4}});
  REQUIRE(res.exit_code == 0);
  auto j = parse(res.json);
  REQUIRE(j.is_array());
  CHECK(!j.empty());
  for (const auto& w : j) {
    LL coords;
    for (const auto& c : w) coords.push_back(c.get<long long>());
    auto cres = run({.subcommand = "classify",
                     .type = "g3",
                     .characteristic = 5,
                     .weight = coords});
    REQUIRE(cres.exit_code == 0);
    CHECK(parse(cres.json).at("finite") == true);
  }
}

TEST_CASE("verify exit codes") {
  CHECK(run({.subcommand = "verify",
             .type = "g3",
             .characteristic = 5,
             .box = LL{5, 5, 5}})
            .exit_code == 0);
  CHECK(run({.subcommand = "verify",
             .type = "f4",
             .characteristic = 0,
             .box = LL{4, 4, 4, 4}})
            .exit_code == 0);
}

TEST_CASE("sweep") {
  auto res = run({.subcommand = "sweep", .characteristic = 5, .box = LL{4, 4, 4}});
  REQUIRE(res.exit_code == 0);
  auto j = parse(res.json);
  REQUIRE(j.is_array());
  REQUIRE(j.size() == 3);  // zeta in {1, 2, 3}
  for (const auto& rep : j) CHECK(rep.at("mismatches").empty());
}

TEST_CASE("chi") {
  auto res = run({.subcommand = "chi",
                  .type = "g3",
                  .characteristic = 0,
                  .weight = LL{3, 0, 0}});
  REQUIRE(res.exit_code == 0);
  auto j = parse(res.json);
  CHECK(j.at("support").size() == 53);
  CHECK(j.at("top").at("unique") == true);
  CHECK(j.at("top").at("coeff") == 1);
  CHECK(j.at("top").at("weight") == json::array({3, 0, 0}));
}

TEST_CASE("scalar box broadcast") {
  auto a = run({.subcommand = "list", .type = "f4", .characteristic = 5, .box = LL{3}});
  auto b = run({.subcommand = "list",
                .type = "f4",
                .characteristic = 5,
                .box = LL{3, 3, 3, 3}});
  REQUIRE(a.exit_code == 0);
  CHECK(a.json == b.json);
}

TEST_CASE("invalid input: exit code 2 with a diagnostic, empty json") {
  auto check2 = [](const Request& req) {
    auto res = run(req);
    CHECK(res.exit_code == 2);
    CHECK(res.json.empty());
    CHECK(!res.error.empty());
  };
  // f4 at p = 3 is unsupported
  check2({.subcommand = "classify", .type = "f4", .characteristic = 3,
          .weight = LL{0, 0, 0, 0}});
  // composite characteristic
  check2({.subcommand = "classify", .type = "g3", .characteristic = 9,
          .weight = LL{0, 0, 0}});
  // type d without zeta in finite characteristic
  check2({.subcommand = "classify", .type = "d", .characteristic = 5,
          .weight = LL{0, 0, 0}});
  // zeta = -1 mod p
  check2({.subcommand = "classify", .type = "d", .characteristic = 5, .zeta = "4",
          .weight = LL{0, 0, 0}});
  // zeta generic only in characteristic 0
  check2({.subcommand = "classify", .type = "d", .characteristic = 5,
          .zeta = "generic", .weight = LL{0, 0, 0}});
  // zeta on a non-d type
  check2({.subcommand = "classify", .type = "g3", .characteristic = 5, .zeta = "1",
          .weight = LL{0, 0, 0}});
  // wrong weight arity
  check2({.subcommand = "classify", .type = "f4", .characteristic = 5,
          .weight = LL{0, 0, 0}});
  // non-dominant weight
  check2({.subcommand = "classify", .type = "g3", .characteristic = 5,
          .weight = LL{-1, 0, 0}});
  // missing weight
  check2({.subcommand = "classify", .type = "g3", .characteristic = 5});
  // missing box
  check2({.subcommand = "list", .type = "g3", .characteristic = 5});
  // unknown type / subcommand
  check2({.subcommand = "classify", .type = "e8", .characteristic = 5,
          .weight = LL{0, 0, 0}});
  check2({.subcommand = "frobnicate", .type = "g3", .characteristic = 5});
}

TEST_CASE("deterministic output") {
  Request req{.subcommand = "verify",
              .type = "g3",
              .characteristic = 7,
              .box = LL{5, 5, 5}};
  auto a = parse(run(req).json);
  auto b = parse(run(req).json);
  a.erase("elapsed");
  b.erase("elapsed");
  CHECK(a == b);
}
