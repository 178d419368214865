#include <cstdlib>
#include <string>

#include <gtest/gtest.h>

#include "floqsim/errors.hpp"
#include "floqsim/report.hpp"

using namespace floqsim;

namespace {

std::string error_of(const std::string& text) {
  try {
    parse_run_config(text);
  } catch (const ConfigError& e) {
    return e.what();
  }
  return "";
}

int cli(const std::string& args) {
  int status = std::system((std::string(FLOQSIM_CLI) + " " + args + " > /dev/null 2>&1").c_str());
  return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

}  // namespace

TEST(report, parse_config) {
  auto c = parse_run_config(R"({"family": "floquet-color", "L": 3, "schedule": "012",
                                "analyses": ["automorphism"]})");
  EXPECT_EQ(c.family, "floquet-color");
  EXPECT_EQ(c.L, 3);
  EXPECT_EQ(c.analyses, std::vector<std::string>{"automorphism"});
  EXPECT_EQ(c.periods, 2u);
  EXPECT_EQ(c.diameter, 4);
}

TEST(report, config_errors_name_line_or_field) {
  EXPECT_NE(error_of("{\n\"family\": \"floquet-color\",\n\"L\": 3,,\n}").find("line 3"), std::string::npos);
  EXPECT_NE(error_of(R"({"family": "floquet-color", "L": 3, "colour": 1})").find("colour"), std::string::npos);
  EXPECT_NE(error_of(R"({"family": "floquet-color", "L": "three"})").find("'L'"), std::string::npos);
  RunConfig bad;
  bad.family = "floquet-color";
  bad.L = 3;
  bad.schedule = "012";
  bad.analyses = {"entropy"};
  EXPECT_THROW(validate_config(bad), ConfigError);
}

TEST(report, run_color_code_automorphism) {
  RunConfig c;
  c.family = "floquet-color";
  c.L = 3;
  c.schedule = "012";
  c.analyses = {"k", "automorphism"};
  auto rep = cmd_run(c);
  EXPECT_EQ(rep["schema"], kReportSchema);
  EXPECT_EQ(rep["automorphism"]["order"], 3);
  for (const auto& r : rep["rounds"]) EXPECT_EQ(r["k"], 4);
  EXPECT_TRUE(rep.contains("timestamp"));
  EXPECT_FALSE(report_summary(rep).empty());
}

TEST(report, run_is_deterministic) {
  RunConfig c;
  c.family = "floquet-tc-2d";
  c.L = 4;
  c.schedule = "GBRBGR";
  c.analyses = {"k", "automorphism", "reversibility", "surviving", "nonlocal"};
  auto a = deterministic_dump(cmd_run(c));
  EXPECT_EQ(a, deterministic_dump(cmd_run(c)));
  EXPECT_EQ(a.find("timestamp"), std::string::npos);
}

TEST(report, run_rejects_bad_parity) {
  RunConfig c;
  c.family = "floquet-color";
  c.L = 4;
  c.schedule = "012";
  EXPECT_THROW(cmd_run(c), UnsupportedSize);
}

TEST(report, reproduce_tables) {
  EXPECT_THROW(cmd_reproduce("table9"), ConfigError);
  for (const char* t : {"colorcode", "ftc3d", "planar2d"}) {
    auto r = cmd_reproduce(t);
    EXPECT_TRUE(r.ok) << t;
    EXPECT_FALSE(r.lines.empty());
  }
}

TEST(report, selftest_passes) {
  auto r = cmd_selftest(1);
  EXPECT_TRUE(r.ok);
  EXPECT_TRUE(cmd_selftest(99).ok);
}

TEST(report, cli_exit_codes) {
  EXPECT_EQ(cli("selftest"), 0);
  EXPECT_EQ(cli("build --family floquet-tc-2d --size 2"), 0);
  EXPECT_EQ(cli("run --family floquet-color --size 4 --schedule 012"), 2);
  EXPECT_EQ(cli("run --family floquet-tc-2d --size 2 --schedule XYZ"), 2);
  EXPECT_EQ(cli("reproduce table9"), 2);
  EXPECT_EQ(cli("reproduce colorcode"), 0);
  EXPECT_EQ(cli("reproduce table1 --size 2"), 4);
}
