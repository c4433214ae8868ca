#include <string>

#include "app/commands.hpp"
#include "app/config.hpp"
#include "doctest.h"
#include "test_support.hpp"

using namespace jt;

namespace {

// Message of the ConfigError raised for text, or "" when it parses.
std::string config_error(const std::string& text) {
  try {
    parse_config(text);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConfigError);
    return e.what();
  }
  return "";
}

bool contains(const std::string& s, const std::string& part) { return s.find(part) != std::string::npos; }

}  // namespace

TEST_SUITE("app") {

TEST_CASE("syntax errors carry line and column") {
  std::string msg = config_error("{\n  \"algebra\": \"su2\",\n  \"invariant\": \"killing\"\n  \"k\": 2\n}\n");
  CHECK(contains(msg, "line 4"));
  CHECK(contains(msg, "column"));
  CHECK(contains(config_error("[1, 2"), "line 1"));
}

TEST_CASE("schema errors name the offending value") {
  CHECK(contains(config_error(R"({"algebra": "su2", "invariant": "killing", "kk": 2})"), "/kk"));
  CHECK(contains(config_error(R"({"algebra": "su2", "invariant": "killing", "h": 1.5})"), "/h"));
  CHECK(contains(config_error(R"({"algebra": "su2", "invariant": "killing", "h": "0/1"})"), "/h"));
  CHECK(contains(config_error(R"({"algebra": "su2", "invariant": "killing", "k": 3})"), "/k"));
  CHECK(contains(config_error(R"({"algebra": "su2", "invariant": "nope"})"), "/invariant"));
  CHECK(contains(config_error(R"({"algebra": "su2", "invariant": "killing", "background": "B"})"), "/background"));
  CHECK(contains(config_error(R"({"algebra": {"dim": 2, "structure_constants": [[0, 0, 5, "1"]]}, "invariant": "killing"})"),
                 "/algebra/structure_constants/0/2"));
  CHECK(contains(config_error(R"({"algebra": "su2", "invariant": {"degree": 2, "entries": [[[0], "1"]]}})"),
                 "/invariant/entries/0/0"));
  CHECK(contains(config_error(R"({"algebra": "g2", "invariant": "killing"})"), "/algebra"));
}

TEST_CASE("defaults and summary") {
  auto cfg = parse_config(R"({"algebra": "u1^2", "invariant": {"degree": 3, "symmetrize": true, "entries": [[[0, 0, 1], "3/2"]]}})");
  CHECK(cfg.k == 3);
  CHECK(cfg.background == Background::Zero);
  CHECK(cfg.h == Rational(1));
  CHECK(cfg.jet_order == 3);
  CHECK(contains(cfg.summary(), "k=3"));
  auto b = build_invariant(cfg.invariant, build_algebra(cfg.algebra), cfg.k);
  // symmetrize copies the value to every permutation
  CHECK(b.at({1, 0, 0}) == Rational(3, 2));
  CHECK(b.at({0, 1, 0}) == Rational(3, 2));
  CHECK(b.at({1, 1, 0}).is_zero());
}

TEST_CASE("builders validate") {
  auto bad = parse_config(R"({"algebra": {"dim": 2, "structure_constants": [[1, 0, 1, "1"]]}, "invariant": "unit"})");
  CHECK_THROWS_AS(build_algebra(bad.algebra), Error);
  auto skew = parse_config(R"({"algebra": "u1^2", "invariant": {"degree": 2, "entries": [[[0, 1], "1"]]}})");
  CHECK_THROWS_AS(build_cs(skew), Error);
  auto abelian = parse_config(R"({"algebra": "u1", "invariant": "killing"})");
  try {
    build_cs(abelian);
    FAIL("accepted a vanishing Killing form");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ConfigError);
  }
}

TEST_CASE("exit codes") {
  CHECK(exit_code_for(ErrorCode::TermLimitExceeded) == 3);
  CHECK(exit_code_for(ErrorCode::ConfigError) == 2);
  CHECK(exit_code_for(ErrorCode::ParseError) == 2);
  CHECK(exit_code_for(ErrorCode::JetOrderExceeded) == 2);
  CHECK(exit_code_for(ErrorCode::JacobiViolation) == 1);
  CHECK(exit_code_for(ErrorCode::NotClosed) == 1);
  CHECK(exit_code_for(ErrorCode::SigmaMismatch) == 1);
}

TEST_CASE("commands") {
  auto cfg = parse_config(R"({"algebra": "u1", "invariant": "unit", "background": "symbolic"})");
  auto out = run_command("transgression", cfg, {});
  CHECK(out.exit_code == 0);
  CHECK(out.text.rfind("jetvar transgression\n", 0) == 0);
  CHECK(contains(out.text, "result PASS"));
  CHECK(run_command("transgression", cfg, {}).dump == out.dump);

  auto bad = parse_config(R"({"algebra": "su2", "invariant": {"degree": 2, "entries": [[[0, 0], "1"], [[1, 1], "1"], [[2, 2], "2"]]}})");
  auto fail = run_command("check-algebra", bad, {});
  CHECK(fail.exit_code == 1);
  CHECK(contains(fail.text, "result FAIL"));

  CommandOptions opt;
  opt.seed = 3;
  RunConfig small;
  small.selftest_instances = 6;
  CHECK(run_command("first-variational-selftest", small, opt).exit_code == 0);
  CHECK_FALSE(command_needs_config("first-variational-selftest"));
  CHECK(command_needs_config("noether"));
}

}
