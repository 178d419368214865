#include <random>

#include <gtest/gtest.h>
#include <json.hpp>

#include "floqsim/code.hpp"
#include "floqsim/errors.hpp"
#include "floqsim/schedule.hpp"

using namespace floqsim;

namespace {

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  for (char c : s) out.emplace_back(1, c);
  return out;
}

}  // namespace

TEST(schedule, tokenize_examples) {
  EXPECT_EQ(tokenize_labels("GBRBGR", {"G", "B", "R"}), split("GBRBGR"));
  EXPECT_EQ(tokenize_labels("F0 B1, R2", {"F0", "B1", "R2"}), (std::vector<std::string>{"F0", "B1", "R2"}));
  EXPECT_EQ(tokenize_labels("F0F1", {"F0", "F1", "F"}), (std::vector<std::string>{"F0", "F1"}));
  EXPECT_THROW(tokenize_labels("XYZ", {"G", "B", "R"}), UnknownLabel);
}

TEST(schedule, parse_examples) {
  auto code = build_code(Family::floquet_tc_2d, 2);
  auto s = parse_schedule("GBRBGR", code);
  EXPECT_EQ(s.period.size(), 6u);
  EXPECT_EQ(s.init, split("RBGR"));
  EXPECT_EQ(s.period_checks.size(), 6u);
  EXPECT_EQ(s.init_checks.size(), 4u);
  EXPECT_EQ(parse_schedule("GBR", code, std::string("RBGR")).init.size(), 4u);
  EXPECT_THROW(parse_schedule("XYZ", code), UnknownLabel);
  auto ftc = build_code(Family::ftc_3d, 2);
  EXPECT_EQ(parse_schedule("FBFR", ftc).period.size(), 16u);
  EXPECT_EQ(parse_schedule("FBR", ftc).period.size(), 15u);
}

TEST(schedule, rewinding_examples) {
  EXPECT_TRUE(is_rewinding(split("012021")));
  EXPECT_TRUE(is_rewinding(split("GBRBGR")));
  EXPECT_TRUE(is_rewinding(split("012102")));
  EXPECT_FALSE(is_rewinding(split("012")));
  EXPECT_FALSE(is_rewinding(split("GBR")));
  EXPECT_TRUE(is_rewinding(split("0")));
}

TEST(schedule, rewinding_rotation_invariant) {
  std::mt19937_64 rng(43);
  std::size_t rewinding = 0;
  for (int t = 0; t < 1000; ++t) {
    std::size_t len = 1 + rng() % 8;
    std::vector<std::string> p;
    for (std::size_t i = 0; i < len; ++i) p.push_back(std::string(1, static_cast<char>('0' + rng() % 3)));
    bool v = is_rewinding(p);
    rewinding += v;
    for (std::size_t r = 1; r < len; ++r) {
      std::vector<std::string> rot(p.begin() + r, p.end());
      rot.insert(rot.end(), p.begin(), p.begin() + r);
      ASSERT_EQ(is_rewinding(rot), v);
    }
  }
  EXPECT_GT(rewinding, 0u);
  EXPECT_LT(rewinding, 1000u);
}

TEST(schedule, run_two_dimensional_torus) {
  auto code = build_code(Family::floquet_tc_2d, 4);
  auto h = run(code, parse_schedule("GBRBGR", code), 3);
  ASSERT_EQ(h.snapshots.size(), 18u);
  for (const auto& s : h.snapshots) EXPECT_EQ(logical_count(code, s.group), 2u);
}

TEST(schedule, full_periodicity) {
  struct Case {
    Family f;
    int L;
    const char* sched;
  };
  for (const auto& cs : {Case{Family::floquet_tc_2d, 4, "GBRBGR"}, Case{Family::floquet_color, 3, "012"},
                         Case{Family::floquet_color, 3, "012102"}, Case{Family::floquet_tc_3d, 2, "GBRBGR"},
                         Case{Family::ftc_3d, 2, "FBFR"}}) {
    auto code = build_code(cs.f, cs.L);
    auto h = run(code, parse_schedule(cs.sched, code), 2);
    std::size_t p = h.schedule.period.size();
    for (std::size_t i = 0; i < p; ++i) {
      EXPECT_EQ(h.snapshots[i].label, h.snapshots[i + p].label);
      EXPECT_EQ(h.snapshots[i].group, h.snapshots[i + p].group) << cs.sched << " round " << i;
    }
    EXPECT_EQ(h.start, h.snapshots[p - 1].group);
  }
}

TEST(schedule, run_deterministic) {
  auto code = build_code(Family::floquet_color, 3);
  auto s = parse_schedule("012", code);
  EXPECT_EQ(history_to_json(run(code, s, 2), true), history_to_json(run(code, s, 2), true));
}

TEST(schedule, three_dimensional_logical_counts) {
  auto tc = build_code(Family::floquet_tc_3d, 2);
  for (const auto& s : run(tc, parse_schedule("GBRBGR", tc), 1).snapshots) EXPECT_EQ(logical_count(tc, s.group), 3u);
  auto xc = build_code(Family::xcube_floquet, 2);
  for (const auto& s : run(xc, parse_schedule("GBRBGR", xc), 1).snapshots) EXPECT_EQ(logical_count(xc, s.group), 9u);
}

TEST(schedule, logical_count_examples) {
  auto code = build_code(Family::floquet_color, 3);
  EXPECT_EQ(logical_count(code, StabilizerGroup(code.n_qubits())), code.n_qubits());
  auto h = run(code, parse_schedule("012", code), 1);
  for (const auto& s : h.snapshots)
    if (s.label == "2") {
      EXPECT_EQ(logical_count(code, s.group), 4u);
    }
}

TEST(schedule, ftc_schedules) {
  auto code = build_code(Family::ftc_3d, 2);
  auto fbfr = run(code, parse_schedule("FBFR", code), 1);
  for (const auto& s : fbfr.snapshots) EXPECT_EQ(logical_count(code, s.group), 1u);
  auto fbr = run(code, parse_schedule("FBR", code), 1);
  EXPECT_EQ(logical_count(code, fbr.snapshots.back().group), 0u);
}

TEST(schedule, export_formats) {
  auto code = build_code(Family::floquet_tc_2d, 2);
  auto h = run(code, parse_schedule("GBRBGR", code), 1);
  auto j = nlohmann::json::parse(history_to_json(h));
  ASSERT_EQ(j["rounds"].size(), 6u);
  EXPECT_EQ(j["rounds"][0]["label"], "G");
  EXPECT_EQ(j["rounds"][0]["k"], 2);
  auto csv = history_to_csv(h);
  EXPECT_EQ(std::count(csv.begin(), csv.end(), '\n'), 7);
}
