// Acceptance gate: one line per criterion. All quantities are exact integers
// or GF(2) objects, so the only pinned tolerances are the runtime budgets.
#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "floqsim/code.hpp"
#include "floqsim/logical.hpp"
#include "floqsim/oracle.hpp"
#include "floqsim/report.hpp"
#include "floqsim/schedule.hpp"

using namespace floqsim;

namespace {

struct Outcome {
  bool ok = true;
  std::string detail;
  void require(bool cond, const std::string& what) {
    if (!cond) ok = false;
    if (!detail.empty()) detail += "; ";
    detail += what + (cond ? "" : " [FAILED]");
  }
};

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
  os << ')';
  return os.str();
}

std::vector<std::size_t> ks(const IsgHistory& h, std::size_t count) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < count && i < h.snapshots.size(); ++i)
    out.push_back(h.n_qubits - h.snapshots[i].group.rank());
  return out;
}

bool all_equal(const IsgHistory& h, std::size_t k) {
  for (const auto& s : h.snapshots)
    if (h.n_qubits - s.group.rank() != k) return false;
  return true;
}

bool reversible_throughout(const IsgHistory& h) {
  const StabilizerGroup* prev = &h.start;
  for (const auto& s : h.snapshots) {
    if (!reversibility_check(*prev, s.group)) return false;
    prev = &s.group;
  }
  return true;
}

std::vector<std::size_t> nonlocal_per_round(const CodeInstance& c, const IsgHistory& h, std::size_t count) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < count; ++i) out.push_back(nonlocal_count(h.snapshots[i].group, c, 4));
  return out;
}

Outcome criterion1() {
  Outcome o;
  auto s = oracle::run_oracle_suite(1, 200, 5, 12);
  o.require(s.trials == 200 && s.mismatches == 0,
            std::to_string(s.trials) + " sequences, " + std::to_string(s.mismatches) + " mismatches" +
                (s.first_failure.empty() ? "" : " (" + s.first_failure + ")"));
  return o;
}

Outcome criterion2() {
  Outcome o;
  auto c = build_code(Family::floquet_tc_2d, 4);
  auto h = run(c, parse_schedule("GBRBGR", c), 3);
  o.require(h.snapshots.size() == 18 && all_equal(h, 2), "k=2 in all " + std::to_string(h.snapshots.size()) + " rounds");
  auto a = period_automorphism(c, h);
  o.require(a.matrix.is_identity() && a.measured_logicals.empty(), "automorphism identity, order " + std::to_string(a.order));
  return o;
}

Outcome criterion3() {
  Outcome o;
  auto c = build_planar(Family::floquet_tc_2d, 4);
  auto h = run(c, parse_schedule("GBRBGR", c), 3);
  o.require(h.snapshots.size() == 18 && all_equal(h, 1), "planar GBRBGR k=1 over 3 periods");
  auto s = parse_schedule("GBR", c);
  auto h2 = run(c, s, 3, 0);
  // Second G round of the three-round schedule is measured round 3.
  std::size_t measured_at = npos;
  for (const auto& l : logical_basis(h2.start).flat()) {
    PauliOp cur = l;
    const StabilizerGroup* prev = &h2.start;
    for (std::size_t t = 0; t < h2.snapshots.size(); ++t) {
      auto next = evolve_logical(cur, *prev, c.round_checks(h2.snapshots[t].label));
      if (!next) {
        measured_at = std::min(measured_at, t);
        break;
      }
      cur = *next;
      prev = &h2.snapshots[t].group;
    }
  }
  bool at_second_g = measured_at == 3 && h2.snapshots[3].label == "G";
  o.require(at_second_g, "GBR logical measured at round " + (measured_at == npos ? std::string("none") : std::to_string(measured_at)));
  o.require(h2.n_qubits - h2.snapshots[3].group.rank() == 0, "GBR k after second G = " +
                                                                 std::to_string(h2.n_qubits - h2.snapshots[3].group.rank()));
  return o;
}

// Criteria 4 and 5 share the layered-code bundle.
Outcome layered(Family f, int L, std::size_t k, const std::vector<std::size_t>& expected_nonlocal, bool with_rest) {
  Outcome o;
  auto c = build_code(f, L);
  auto h = run(c, parse_schedule("GBRBGR", c), 2);
  std::string tag = "L=" + std::to_string(L) + " ";
  o.require(all_equal(h, k), tag + "k=" + std::to_string(k) + " every round " + join(ks(h, 6)));
  auto nl = nonlocal_per_round(c, h, 6);
  o.require(nl == expected_nonlocal, tag + "nonlocal " + join(nl) + " expected " + join(expected_nonlocal));
  if (!with_rest) return o;
  auto a = period_automorphism(c, h);
  o.require(a.matrix.is_identity() && a.measured_logicals.empty(), tag + "automorphism identity");
  const auto& g = h.snapshots[0].group;
  auto blue = c.round_checks("B");
  auto modulo = stabilizers_of_check_group(c).generators();
  modulo.insert(modulo.end(), blue.begin(), blue.end());
  auto sum = summarize_surviving(surviving_subgroup(g, blue), modulo, periodic_boxes(c, 4));
  o.require(sum.quotient_rank > 0, tag + "G->B survivors modulo static and B checks: rank " + std::to_string(sum.quotient_rank));
  return o;
}

Outcome criterion4() {
  Outcome o = layered(Family::floquet_tc_3d, 2, 3, {0, 3, 3, 3, 0, 3}, true);
  auto slow = layered(Family::floquet_tc_3d, 4, 3, {0, 3, 3, 3, 0, 3}, true);
  o.require(slow.ok, "slow " + slow.detail);
  return o;
}

Outcome criterion5() {
  Outcome o;
  auto c = build_code(Family::xcube_floquet, 2);
  auto h = run(c, parse_schedule("GBRBGR", c), 2);
  o.require(all_equal(h, 9), "L=2 k=6L-3=9 every round " + join(ks(h, 6)));
  auto b = nonlocal_count(h.snapshots[1].group, c, 4);
  o.require(h.snapshots[1].label == "B" && b == 3, "L=2 B-ISG nonlocal " + std::to_string(b) + " expected 3");
  // L=4 is reported for reference only; the criterion is stated at L=2.
  auto c4 = build_code(Family::xcube_floquet, 4);
  auto h4 = run(c4, parse_schedule("GBRBGR", c4), 1);
  o.detail += "; reference L=4: k " + join(ks(h4, 6)) + ", B-ISG nonlocal " +
              std::to_string(nonlocal_count(h4.snapshots[1].group, c4, 4));
  return o;
}

Outcome criterion6() {
  Outcome o;
  auto c = build_code(Family::ftc_3d, 2);
  std::size_t bad = 0;
  for (const auto& cell : c.cells) {
    PauliOp prod(c.n_qubits());
    for (auto i : cell) prod *= c.named_generators[i].op;
    if (!prod.is_identity()) ++bad;
  }
  o.require(!c.cells.empty() && bad == 0, "armchair relation on " + std::to_string(c.cells.size()) + " 3-cells");
  PauliOp string;
  for (const auto& [w, op] : winding_loops(c))
    if (w == std::vector<int>{0, 1, 0}) string = op;
  auto h = run(c, parse_schedule("FBFR", c), 2);
  bool logical = string.n_qubits() == c.n_qubits();
  for (const auto& s : h.snapshots) {
    if (!logical) break;
    for (const auto& g : s.group.generators()) logical = logical && !symplectic_product(string, g);
    logical = logical && !s.group.contains(string);
  }
  o.require(all_equal(h, 1), "FBFR k=1 in all " + std::to_string(h.snapshots.size()) + " rounds");
  o.require(logical, "(0,1,0) string in C(S)\\S every round");
  auto h2 = run(c, parse_schedule("FBR", c), 2);
  o.require(all_equal(h2, 0), "FBR k=0");
  return o;
}

Outcome criterion7() {
  Outcome o;
  auto c = build_code(Family::floquet_color, 3);
  for (const char* name : {"012", "012102", "alt6"}) {
    auto h = run(c, parse_schedule(name, c), 2);
    auto a = period_automorphism(c, h);
    std::string n = name;
    o.require(all_equal(h, 4), n + " k=4");
    if (n == "012")
      o.require(a.order == 3, n + " order " + std::to_string(a.order));
    else
      o.require(a.matrix.is_identity() && a.order == 1, n + " identity");
    o.require(reversible_throughout(h), n + " reversible");
  }
  auto p = parent_code(c);
  o.require(c.n_qubits() - p.group.rank() == 8, "parent k=" + std::to_string(c.n_qubits() - p.group.rank()));
  return o;
}

Outcome criterion8() {
  Outcome o;
  auto split = [](const std::string& s) {
    std::vector<std::string> v;
    for (char ch : s) v.emplace_back(1, ch);
    return v;
  };
  bool examples = is_rewinding(split("012021")) && is_rewinding(split("GBRBGR")) && is_rewinding(split("012102")) &&
                  !is_rewinding(split("012")) && !is_rewinding(split("GBR"));
  o.require(examples, "examples");
  std::mt19937_64 rng(8);
  std::size_t broken = 0;
  for (int t = 0; t < 1000; ++t) {
    std::size_t len = 1 + rng() % 10;
    std::vector<std::string> p;
    for (std::size_t i = 0; i < len; ++i) p.emplace_back(1, static_cast<char>('0' + rng() % 3));
    bool v = is_rewinding(p);
    for (std::size_t r = 1; r < len; ++r) {
      std::vector<std::string> rot(p.begin() + r, p.end());
      rot.insert(rot.end(), p.begin(), p.begin() + r);
      if (is_rewinding(rot) != v) ++broken;
    }
  }
  o.require(broken == 0, "rotation invariance on 1000 random periods");
  return o;
}

Outcome criterion9() {
  Outcome o;
  // Phase equivalence is not re-proved; the invariant bundle (k, nonlocal
  // counts, automorphism, survivors) stands in for it at L=4.
  o.require(cmd_reproduce("table1", 4).ok, "substituted: 3D toric code invariant bundle at L=4");
  o.require(cmd_reproduce("table2", 4).ok, "X-cube invariant bundle at L=4");
  return o;
}

struct Criterion {
  int id;
  double budget_seconds;
  std::function<Outcome()> fn;
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Acceptance criteria"};
  std::vector<int> known;
  app.add_option("--known-failures", known, "Criteria expected to fail; exit 0 iff exactly these fail")->delimiter(',');
  CLI11_PARSE(app, argc, argv);

  // Runtime budgets in seconds. Criterion 4 covers L=2 (30 s) plus the slow
  // L=4 run (600 s); criterion 9 reruns both L=4 tables.
  const std::vector<Criterion> criteria = {
      {1, 10, criterion1}, {2, 5, criterion2},   {3, 5, criterion3},  {4, 630, criterion4}, {5, 60, criterion5},
      {6, 60, criterion6}, {7, 30, criterion7}, {8, 1, criterion8}, {9, 1200, criterion9}};
  std::set<int> failed;
  for (const auto& c : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.fn();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (secs > c.budget_seconds) o.require(false, "over the " + std::to_string(static_cast<int>(c.budget_seconds)) + " s budget");
    if (!o.ok) failed.insert(c.id);
    std::printf("criterion %d: %s - %s (%.2f s)\n", c.id, o.ok ? "PASS" : "FAIL", o.detail.c_str(), secs);
    std::fflush(stdout);
  }
  if (app.count("--known-failures")) {
    std::set<int> expected(known.begin(), known.end());
    bool match = expected == failed;
    std::printf("known failures %s\n", match ? "match" : "DO NOT match");
    return match ? 0 : 1;
  }
  return failed.empty() ? 0 : 1;
}
