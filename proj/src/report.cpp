#include "floqsim/report.hpp"

#include <algorithm>
#include <chrono>
#include <ctime>
#include <iomanip>
#include <random>
#include <sstream>

#include "floqsim/code.hpp"
#include "floqsim/errors.hpp"
#include "floqsim/logical.hpp"
#include "floqsim/oracle.hpp"
#include "floqsim/schedule.hpp"

namespace floqsim {

const std::vector<std::string>& known_analyses() {
  static const std::vector<std::string> a = {"k", "automorphism", "nonlocal", "surviving", "reversibility"};
  return a;
}

namespace {

template <class T>
T field(const Json& j, const char* name, const T& fallback) {
  if (!j.contains(name)) return fallback;
  try {
    return j.at(name).get<T>();
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("field '") + name + "': " + e.what());
  }
}

std::string utc_now() {
  std::time_t t = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&t, &tm);
  std::ostringstream os;
  os << std::put_time(&tm, "%Y-%m-%dT%H:%M:%SZ");
  return os.str();
}

std::vector<PauliOp> ops_of(const CodeInstance& code, const std::vector<std::size_t>& idx) {
  std::vector<PauliOp> out;
  for (auto i : idx) out.push_back(code.checks[i].op);
  return out;
}

Json matrix_json(const BitMatrix& m) {
  Json rows = Json::array();
  for (const auto& s : m.to_strings()) rows.push_back(s);
  return rows;
}

}  // namespace

RunConfig parse_run_config(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    std::size_t line = 1 + std::count(text.begin(), text.begin() + std::min(e.byte, text.size()), '\n');
    throw ConfigError("config line " + std::to_string(line) + ": " + e.what());
  }
  if (!j.is_object()) throw ConfigError("config must be a JSON object");
  static const std::vector<std::string> keys = {"family", "L",        "boundary", "schedule", "init", "periods",
                                                "warmup", "analyses", "out",      "seed",     "diameter"};
  for (const auto& [k, v] : j.items())
    if (std::find(keys.begin(), keys.end(), k) == keys.end()) throw ConfigError("unknown field '" + k + "'");
  RunConfig c;
  c.family = field<std::string>(j, "family", "");
  c.L = field<int>(j, "L", 0);
  c.boundary = field<std::string>(j, "boundary", "torus");
  c.schedule = field<std::string>(j, "schedule", "");
  if (j.contains("init")) c.init = field<std::string>(j, "init", "");
  c.periods = field<std::size_t>(j, "periods", 2);
  c.warmup = field<std::size_t>(j, "warmup", 2);
  c.analyses = field<std::vector<std::string>>(j, "analyses", {"k"});
  c.out = field<std::string>(j, "out", "");
  c.seed = field<std::uint64_t>(j, "seed", 1);
  c.diameter = field<int>(j, "diameter", 4);
  validate_config(c);
  return c;
}

void validate_config(const RunConfig& c) {
  if (c.family.empty()) throw ConfigError("field 'family' is required");
  family_from_name(c.family);
  if (c.L < 2) throw ConfigError("field 'L' must be at least 2");
  if (c.schedule.empty()) throw ConfigError("field 'schedule' is required");
  if (c.periods < 1) throw ConfigError("field 'periods' must be at least 1");
  if (c.diameter < 1) throw ConfigError("field 'diameter' must be positive");
  for (const auto& a : c.analyses)
    if (std::find(known_analyses().begin(), known_analyses().end(), a) == known_analyses().end())
      throw ConfigError("field 'analyses': unknown analysis '" + a + "'");
}

Json config_to_json(const RunConfig& c) {
  Json j;
  j["family"] = c.family;
  j["L"] = c.L;
  j["boundary"] = c.boundary;
  j["schedule"] = c.schedule;
  j["init"] = c.init ? Json(*c.init) : Json(nullptr);
  j["periods"] = c.periods;
  j["warmup"] = c.warmup;
  j["analyses"] = c.analyses;
  j["seed"] = c.seed;
  j["diameter"] = c.diameter;
  return j;
}

Json cmd_run(const RunConfig& config) {
  validate_config(config);
  auto t0 = std::chrono::steady_clock::now();
  auto want = [&](const char* a) {
    return std::find(config.analyses.begin(), config.analyses.end(), a) != config.analyses.end();
  };
  const Family fam = family_from_name(config.family);
  CodeInstance code = build_code(fam, config.L, {{"boundary", config.boundary}});
  Schedule sched = parse_schedule(config.schedule, code, config.init);
  IsgHistory h = run(code, sched, config.periods, config.warmup);
  const std::size_t n = code.n_qubits();

  Json rep;
  rep["schema"] = kReportSchema;
  rep["tool_version"] = kToolVersion;
  rep["config"] = config_to_json(config);
  rep["n_qubits"] = n;
  rep["period"] = sched.period;
  rep["init"] = sched.init;
  rep["rewinding"] = is_rewinding(sched);
  rep["warmup_periods_run"] = h.warmup;
  Json rounds = Json::array();
  for (std::size_t t = 0; t < h.snapshots.size(); ++t) {
    const auto& s = h.snapshots[t];
    Json r;
    r["round"] = s.round;
    r["label"] = s.label;
    r["rank"] = s.group.rank();
    r["k"] = n - s.group.rank();
    if (want("nonlocal")) r["nonlocal_count"] = nonlocal_count(s.group, code, config.diameter);
    if (want("reversibility")) {
      const auto& prev = t ? h.snapshots[t - 1].group : h.start;
      r["reversible_from_previous"] = reversibility_check(prev, s.group);
    }
    rounds.push_back(r);
  }
  rep["rounds"] = rounds;
  if (want("automorphism")) {
    auto a = period_automorphism(code, h);
    rep["automorphism"] = {{"k", a.k},
                           {"matrix", matrix_json(a.matrix)},
                           {"order", a.order},
                           {"measured_logicals", a.measured_logicals}};
  }
  if (want("surviving")) {
    auto center = stabilizers_of_check_group(code).generators();
    auto boxes = periodic_boxes(code, config.diameter);
    Json surv = Json::array();
    const std::size_t p = sched.period.size();
    for (std::size_t t = 0; t < p; ++t) {
      const auto& prev = t ? h.snapshots[t - 1].group : h.start;
      auto next = ops_of(code, sched.period_checks[t]);
      auto survivors = surviving_subgroup(prev, next);
      auto modulo = center;
      modulo.insert(modulo.end(), next.begin(), next.end());
      auto sum = summarize_surviving(survivors, modulo, boxes);
      Json e;
      e["from"] = t ? sched.period[t - 1] : sched.period[p - 1];
      e["to"] = sched.period[t];
      e["survivors_rank"] = survivors.rank();
      e["quotient_rank"] = sum.quotient_rank;
      e["local_regions"] = sum.local_weights.size();
      if (!sum.local_weights.empty()) {
        e["min_local_weight"] = *std::min_element(sum.local_weights.begin(), sum.local_weights.end());
        e["max_local_weight"] = *std::max_element(sum.local_weights.begin(), sum.local_weights.end());
      }
      surv.push_back(e);
    }
    rep["surviving"] = surv;
  }
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  rep["timestamp"] = {{"utc", utc_now()}, {"wall_clock_seconds", secs}};
  return rep;
}

std::string report_summary(const Json& r) {
  std::ostringstream os;
  const auto& c = r.at("config");
  os << c.at("family").get<std::string>() << " L=" << c.at("L").get<int>() << " (" << c.at("boundary").get<std::string>()
     << "), n=" << r.at("n_qubits").get<std::size_t>() << ", schedule " << c.at("schedule").get<std::string>()
     << (r.at("rewinding").get<bool>() ? " (rewinding)" : "") << "\n";
  os << "round label   k";
  bool nl = !r.at("rounds").empty() && r.at("rounds")[0].contains("nonlocal_count");
  if (nl) os << "  nonlocal";
  os << "\n";
  for (const auto& x : r.at("rounds")) {
    os << std::setw(5) << x.at("round").get<std::size_t>() << " " << std::setw(5) << x.at("label").get<std::string>()
       << " " << std::setw(3) << x.at("k").get<std::size_t>();
    if (nl) os << "  " << std::setw(8) << x.at("nonlocal_count").get<std::size_t>();
    os << "\n";
  }
  if (r.contains("automorphism")) {
    const auto& a = r.at("automorphism");
    os << "automorphism order " << a.at("order").get<std::size_t>() << ", measured classes "
       << a.at("measured_logicals").size() << "\n";
  }
  return os.str();
}

std::string deterministic_dump(const Json& report) {
  Json copy = report;
  copy.erase("timestamp");
  return copy.dump(2);
}

// Reproduction tables.

namespace {

struct Table {
  Json rows = Json::array();
  std::vector<std::string> lines;
  bool ok = true;

  template <class A, class B>
  void expect(const std::string& what, const A& expected, const B& computed) {
    bool good = Json(expected) == Json(computed);
    ok = ok && good;
    rows.push_back({{"quantity", what}, {"expected", expected}, {"computed", computed}, {"ok", good}});
    std::ostringstream os;
    os << (good ? "  ok        " : "  MISMATCH  ") << std::left << std::setw(44) << what << " expected "
       << Json(expected).dump() << "  computed " << Json(computed).dump();
    lines.push_back(os.str());
  }
};

std::vector<std::size_t> ks(const IsgHistory& h, std::size_t rounds) {
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < rounds; ++t) out.push_back(h.n_qubits - h.snapshots[t].group.rank());
  return out;
}

std::vector<std::size_t> nonlocals(const CodeInstance& c, const IsgHistory& h, std::size_t rounds) {
  std::vector<std::size_t> out;
  for (std::size_t t = 0; t < rounds; ++t) out.push_back(nonlocal_count(h.snapshots[t].group, c, 4));
  return out;
}

void table_layered_3d(Table& tb, Family fam, int L) {
  CodeInstance c = build_code(fam, L);
  auto s = parse_schedule("GBRBGR", c);
  auto h = run(c, s, 3);
  const std::size_t k = fam == Family::floquet_tc_3d ? 3 : static_cast<std::size_t>(6 * L - 3);
  tb.expect("k per round, GBRBGR", std::vector<std::size_t>(6, k), ks(h, 6));
  auto nl = nonlocals(c, h, 6);
  if (fam == Family::floquet_tc_3d) {
    // Two copies of the toric code up to three nonlocal stabilizers in B and R.
    tb.expect("nonlocal count per round (d=4)", std::vector<std::size_t>{0, 3, 3, 3, 0, 3}, nl);
  } else {
    // The B-ISG carries three independent nonlocal stabilizers.
    tb.expect("nonlocal count, first B round (d=4)", std::size_t{3}, nl[1]);
    tb.expect("nonlocal count, second B round (d=4)", std::size_t{3}, nl[3]);
  }
  auto a = period_automorphism(c, h);
  tb.expect("automorphism order", std::size_t{1}, a.order);
}

void table_color(Table& tb, int L) {
  CodeInstance c = build_code(Family::floquet_color, L);
  for (std::string sname : {"012", "012102", "alt6"}) {
    auto s = parse_schedule(sname, c);
    auto h = run(c, s, 3);
    const std::size_t p = s.period.size();
    tb.expect("k per round, " + sname, std::vector<std::size_t>(p, 4), ks(h, p));
    auto a = period_automorphism(c, h);
    tb.expect("automorphism order, " + sname, std::size_t{sname == "012" ? 3u : 1u}, a.order);
    bool rev = true;
    for (std::size_t t = 0; t < p; ++t) rev = rev && reversibility_check(t ? h.snapshots[t - 1].group : h.start, h.snapshots[t].group);
    tb.expect("reversible consecutive ISGs, " + sname, true, rev);
  }
  auto parent = parent_code(c);
  tb.expect("parent code k", std::size_t{8}, c.n_qubits() - parent.group.rank());
}

void table_ftc(Table& tb, int L) {
  CodeInstance c = build_code(Family::ftc_3d, L);
  bool rel = !c.cells.empty();
  for (const auto& cell : c.cells) {
    PauliOp prod(c.n_qubits());
    for (auto i : cell) prod *= c.named_generators[i].op;
    rel = rel && prod.is_identity();
  }
  tb.expect("armchair relation on every 3-cell", true, rel);
  auto s = parse_schedule("FBFR", c);
  auto h = run(c, s, 2);
  tb.expect("k per round, FBFR", std::vector<std::size_t>(16, 1), ks(h, 16));
  PauliOp string;
  bool have = false;
  for (const auto& [w, op] : winding_loops(c))
    if (w == std::vector<int>{0, 1, 0}) {
      string = op;
      have = true;
    }
  bool logical = have;
  for (std::size_t t = 0; t < 16 && have; ++t) {
    const auto& g = h.snapshots[t].group;
    bool commutes = std::none_of(g.generators().begin(), g.generators().end(),
                                 [&](const PauliOp& x) { return symplectic_product(x, string); });
    logical = logical && commutes && !g.contains(string);
  }
  tb.expect("(0,1,0) string in C(S)\\S every round", true, logical);
  auto a = period_automorphism(c, h);
  tb.expect("automorphism order, FBFR", std::size_t{1}, a.order);
  auto s2 = parse_schedule("FBR", c);
  auto h2 = run(c, s2, 2);
  tb.expect("k after one period, FBR", std::size_t{0}, h2.n_qubits - h2.snapshots[14].group.rank());
}

void table_planar2d(Table& tb, int L) {
  CodeInstance c = build_code(Family::floquet_tc_2d, L, {{"boundary", "planar"}});
  auto s = parse_schedule("GBRBGR", c);
  auto h = run(c, s, 3);
  tb.expect("k per round, GBRBGR", std::vector<std::size_t>(6, 1), ks(h, 6));
  tb.expect("automorphism order, GBRBGR", std::size_t{1}, period_automorphism(c, h).order);
  // The three-round schedule measures the logical out at the second G round.
  auto s2 = parse_schedule("GBR", c);
  auto h2 = run(c, s2, 3, 0);
  LogicalFrame f = logical_basis(h2.start);
  std::size_t measured_at = npos;
  for (const auto& p : f.flat()) {
    PauliOp cur = p;
    const StabilizerGroup* prev = &h2.start;
    for (std::size_t t = 0; t < h2.snapshots.size(); ++t) {
      auto r = evolve_logical(cur, *prev, ops_of(c, s2.period_checks[t % 3]));
      if (!r) {
        measured_at = std::min(measured_at, t);
        break;
      }
      cur = *r;
      prev = &h2.snapshots[t].group;
    }
  }
  tb.expect("GBR: round where the logical is measured", std::string("G@3"),
            measured_at == npos ? std::string("none") : s2.period[measured_at % 3] + "@" + std::to_string(measured_at));
  tb.expect("GBR: k after the second G round", std::size_t{0}, h2.n_qubits - h2.snapshots[3].group.rank());
}

void table_planar3d(Table& tb, int L) {
  CodeInstance c = build_code(Family::floquet_tc_3d, L, {{"boundary", "planar"}});
  std::size_t cut_condensation = 0;
  for (const auto& ch : c.checks)
    if (ch.note.rfind("condensation", 0) == 0 && ch.note.find("(cut)") != std::string::npos) ++cut_condensation;
  tb.expect("cut interlayer condensation checks", std::size_t{0}, cut_condensation);
  auto s = parse_schedule("GBRBGR", c);
  auto h = run(c, s, 3);
  // Charge-condensing boundaries on two opposite faces, loop-condensing on the
  // other four: one logical qubit.
  tb.expect("k per round, GBRBGR", std::vector<std::size_t>(6, 1), ks(h, 6));
  tb.expect("automorphism order, GBRBGR", std::size_t{1}, period_automorphism(c, h).order);
}

}  // namespace

const std::vector<std::string>& reproduce_tables() {
  static const std::vector<std::string> t = {"table1", "table2", "colorcode", "ftc3d", "planar2d", "planar3d"};
  return t;
}

ReproduceResult cmd_reproduce(const std::string& table, std::optional<int> L) {
  auto t0 = std::chrono::steady_clock::now();
  Table tb;
  int size = 0;
  if (table == "table1") {
    size = L.value_or(4);
    table_layered_3d(tb, Family::floquet_tc_3d, size);
  } else if (table == "table2") {
    size = L.value_or(4);
    table_layered_3d(tb, Family::xcube_floquet, size);
  } else if (table == "colorcode") {
    size = L.value_or(3);
    table_color(tb, size);
  } else if (table == "ftc3d") {
    size = L.value_or(2);
    table_ftc(tb, size);
  } else if (table == "planar2d") {
    size = L.value_or(4);
    table_planar2d(tb, size);
  } else if (table == "planar3d") {
    size = L.value_or(2);
    table_planar3d(tb, size);
  } else {
    throw ConfigError("unknown table '" + table + "'");
  }
  ReproduceResult r;
  r.ok = tb.ok;
  r.lines.push_back(table + " (L=" + std::to_string(size) + ")");
  r.lines.insert(r.lines.end(), tb.lines.begin(), tb.lines.end());
  r.report["schema"] = kReportSchema;
  r.report["tool_version"] = kToolVersion;
  r.report["table"] = table;
  r.report["L"] = size;
  r.report["rows"] = tb.rows;
  r.report["ok"] = tb.ok;
  double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  r.report["timestamp"] = {{"utc", utc_now()}, {"wall_clock_seconds", secs}};
  return r;
}

SelftestResult cmd_selftest(std::uint64_t seed) {
  SelftestResult res;
  auto record = [&](const std::string& name, bool ok, const std::string& detail = {}) {
    res.ok = res.ok && ok;
    res.lines.push_back(std::string(ok ? "pass  " : "FAIL  ") + name + (detail.empty() ? "" : ": " + detail));
  };
  auto o = oracle::run_oracle_suite(seed);
  record("state-vector oracle (" + std::to_string(o.trials) + " sequences)", o.mismatches == 0, o.first_failure);

  struct Case {
    Family f;
    int L;
  };
  for (auto [f, L] : {Case{Family::floquet_tc_2d, 2}, Case{Family::floquet_tc_2d, 4}, Case{Family::floquet_color, 3},
                      Case{Family::floquet_tc_3d, 2}, Case{Family::xcube_floquet, 2}, Case{Family::ftc_3d, 2}}) {
    std::string name = family_name(f) + " L=" + std::to_string(L);
    try {
      CodeInstance c = build_code(f, L);
      bool commute = true;
      for (const auto& label : c.labels()) {
        auto ops = c.round_checks(label);
        for (std::size_t i = 0; i < ops.size() && commute; ++i)
          for (std::size_t j = i + 1; j < ops.size() && commute; ++j)
            commute = !symplectic_product(ops[i], ops[j]);
      }
      record(name + ": per-round commutation", commute);
      stabilizers_of_check_group(c);
      record(name + ": named generators in the check-group center", true);
      auto s = parse_schedule(c.schedules.front().name, c);
      auto h = run(c, s, 2);
      auto frame = logical_basis(h.snapshots.back().group);
      bool frame_ok = true;
      const auto flat = frame.flat();
      for (std::size_t a = 0; a < flat.size(); ++a) {
        for (const auto& g : frame.base.generators()) frame_ok = frame_ok && !symplectic_product(flat[a], g);
        frame_ok = frame_ok && !frame.base.contains(flat[a]);
        for (std::size_t b = 0; b < flat.size(); ++b) {
          bool paired = (a < frame.k() ? a + frame.k() : a - frame.k()) == b;
          frame_ok = frame_ok && symplectic_product(flat[a], flat[b]) == paired;
        }
      }
      record(name + ": logical frame invariants", frame_ok);
    } catch (const Error& e) {
      record(name, false, e.what());
    }
  }
  std::mt19937_64 rng(seed);
  bool rot = true;
  const std::vector<std::string> alphabet = {"0", "1", "2"};
  for (int t = 0; t < 1000; ++t) {
    std::vector<std::string> p(1 + rng() % 8);
    for (auto& x : p) x = alphabet[rng() % 3];
    bool v = is_rewinding(p);
    std::rotate(p.begin(), p.begin() + static_cast<long>(rng() % p.size()), p.end());
    rot = rot && is_rewinding(p) == v;
  }
  record("rewinding predicate rotation invariance", rot);
  // Injected fault: a named generator that no longer commutes with the checks.
  CodeInstance broken = build_code(Family::floquet_tc_2d, 2);
  broken.named_generators.front().op.set(0, 'X');
  broken.named_generators.front().op.set(1, 'Z');
  bool caught = false;
  try {
    stabilizers_of_check_group(broken);
  } catch (const StructureMismatch&) {
    caught = true;
  }
  record("corrupted fixture raises StructureMismatch", caught);
  return res;
}

}  // namespace floqsim
