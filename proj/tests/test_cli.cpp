#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "cli.hpp"

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = viconj::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string write_temp(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream(path) << body;
  return path.string();
}

}  // namespace

TEST(Cli, ConjugateInArtinFour) {
  const Outcome r = run({"conj", "--group", "artin:4", "t^1 x2", "t^1 x1 x2 x1^-1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out, "conjugate\ncertificate: x2^-1 x1^-1\n");
}

TEST(Cli, DifferentTExponentsAreNotConjugate) {
  const Outcome r = run({"conj", "--group", "artin:4", "t^2 x1", "t^1 x1"});
  EXPECT_EQ(r.code, 1);
  EXPECT_EQ(r.out, "not conjugate\n");
}

TEST(Cli, ShiftNormalForm) {
  Outcome r = run({"nf", "--group", "shift", "t^1 x3 x1"});
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "normal form: t^1 x0 x3");
  r = run({"shift-conj", "t^1 x3 x1", "t^1 x5 x3"});
  EXPECT_EQ(r.code, 0);
  r = run({"shift-conj", "t^1 x0", "t^1 x0^-1"});
  EXPECT_EQ(r.code, 1);
  r = run({"shift-nf", "t^-2 x-3 x0^-1 x2"});
  EXPECT_EQ(r.code, 0);
}

TEST(Cli, NormalFormJsonIsStable) {
  const Outcome r = run({"nf", "--group", "artin:4", "--json", "t^1 y0 y1 y0^-1"});
  EXPECT_EQ(r.code, 0);
  const std::string golden = R"({
  "certificate": "x1",
  "command": "nf",
  "dbar_size": 2,
  "diagnostics": [],
  "normal_form": "t^1 x1",
  "result": "t^1 x1"
}
)";
  EXPECT_EQ(r.out, golden);
  EXPECT_EQ(run({"nf", "--group", "artin:4", "--json", "t^1 y0 y1 y0^-1"}).out, golden);
}

TEST(Cli, ConjJsonSchema) {
  const Outcome r = run({"conj", "--json", "--group", "artin:4", "t^1 x2", "t^1 x1 x2 x1^-1"});
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["command"], "conj");
  EXPECT_EQ(j["result"], true);
  EXPECT_EQ(j["certificate"], "x2^-1 x1^-1");
  EXPECT_TRUE(j["diagnostics"].is_array());
}

TEST(Cli, DeltaReduceWorkedExample) {
  const Outcome r = run({"delta-reduce", "--json", "--delta", "x1^-1 x2^-1 x3 x2 x1",
                         "x1^-1 x2^-1 x3^3 x2 x1^2"});
  ASSERT_EQ(r.code, 0) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"], "x2^-1 x3^3 x2 x1");
  EXPECT_EQ(j["exponent"], 3);
  std::vector<std::size_t> head;
  for (const auto& p : j["profile"]) {
    if (p["k"] >= 0 && p["k"] <= 3) head.push_back(p["length"]);
  }
  EXPECT_EQ(head, (std::vector<std::size_t>{8, 10, 10, 6}));
}

TEST(Cli, ReduceAndCyclicReduce) {
  EXPECT_EQ(run({"reduce", "t^2 x1 x2 x2^-1 x1"}).out, "t^2 x1^2\n");
  EXPECT_EQ(run({"cyclic-reduce", "x1 x2 x1^-1"}).out, "core:   x2\ncollar: x1\n");
}

TEST(Cli, ParseErrorsExitWithTwo) {
  const Outcome r = run({"reduce", "--group", "artin:4", "t^1 x2 q7"});
  EXPECT_EQ(r.code, 2);
  EXPECT_NE(r.err.find("q7"), std::string::npos);
  EXPECT_EQ(run({"nf", "--group", "artin:2", "t"}).code, 2);
  EXPECT_EQ(run({"bogus"}).code, 2);
  EXPECT_EQ(run({"conj", "--group", "artin:4", "t"}).code, 2);
}

TEST(Cli, ContextFileAndEnvironment) {
  const std::string path = write_temp("viconj_a4.json",
                                      R"({"rank": 2, "t_order": "inf", "alias": "y",
                                          "images": ["y0 y1 y0^-1", "y0"]})");
  Outcome r = run({"nf", "--ctx", path, "t^1 y0 y1 y0^-1"});
  EXPECT_EQ(r.code, 0) << r.err;
  EXPECT_EQ(r.out.substr(0, r.out.find('\n')), "normal form: t^1 x1");

  ::setenv(viconj::cli::context_env, path.c_str(), 1);
  r = run({"conj", "t^1 y1", "t^1 y0 y1 y0^-1"});
  EXPECT_EQ(r.code, 0) << r.err;
  ::unsetenv(viconj::cli::context_env);
  EXPECT_EQ(run({"conj", "t^1 y1", "t^1 y0 y1 y0^-1"}).code, 2);
}

TEST(Cli, VerifyContext) {
  const std::string good = write_temp("viconj_good.json",
                                      R"({"rank": 2, "t_order": 2, "images": ["x2", "x1"],
                                          "m": 2, "delta": "1"})");
  EXPECT_EQ(run({"verify-ctx", "--ctx", good}).code, 0);

  const std::string bad = write_temp("viconj_bad.json",
                                     R"({"rank": 2, "t_order": "inf", "images": ["x1", "x2"],
                                         "m": 1, "delta": "x1"})");
  const Outcome r = run({"verify-ctx", "--json", "--ctx", bad});
  EXPECT_EQ(r.code, 1);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["result"], false);
  ASSERT_EQ(j["issues"].size(), 1u);

  const std::string nonmin = write_temp("viconj_nonmin.json",
                                        R"({"rank": 2, "t_order": "inf",
                                            "images": ["x1 x2 x1^-1", "x1"],
                                            "m": 4})");
  EXPECT_EQ(run({"verify-ctx", "--ctx", nonmin}).code, 1);
  EXPECT_EQ(run({"verify-ctx", "--no-minimality", "--ctx", nonmin}).code, 0);
  const Outcome warned = run({"nf", "--json", "--no-minimality", "--ctx", nonmin, "t x1"});
  EXPECT_EQ(warned.code, 0) << warned.err;
  EXPECT_EQ(nlohmann::json::parse(warned.out)["diagnostics"].size(), 1u);

  EXPECT_EQ(run({"verify-ctx", "--group", "artin:5"}).code, 0);
}

TEST(Cli, OracleCommand) {
  Outcome r = run({"oracle", "--group", "artin:4", "--len", "3", "--toff", "2", "t^1 y1",
                   "t^1 y0 y1 y0^-1"});
  EXPECT_EQ(r.code, 0);
  r = run({"oracle", "--group", "artin:4", "--len", "4", "--toff", "2", "t^1 y0", "t^1 y0^-1"});
  EXPECT_EQ(r.code, 1);
}
