#include "floqsim/schedule.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include <json.hpp>

#include "floqsim/errors.hpp"

namespace floqsim {

std::vector<std::string> tokenize_labels(const std::string& text, const std::vector<std::string>& labels) {
  std::vector<std::string> out;
  std::size_t i = 0;
  while (i < text.size()) {
    if (std::isspace(static_cast<unsigned char>(text[i])) || text[i] == ',') {
      ++i;
      continue;
    }
    const std::string* best = nullptr;
    for (const auto& l : labels)
      if (!l.empty() && text.compare(i, l.size(), l) == 0 && (!best || l.size() > best->size())) best = &l;
    if (!best) throw UnknownLabel("no declared round label at '" + text.substr(i) + "'");
    out.push_back(*best);
    i += best->size();
  }
  return out;
}

Schedule parse_schedule(const std::string& text, const CodeInstance& code, const std::optional<std::string>& init) {
  const auto labels = code.labels();
  Schedule s;
  s.name = text;
  if (code.has_schedule(text)) {
    const auto& d = code.schedule(text);
    s.period = d.period;
    s.init = d.init;
  } else {
    s.period = tokenize_labels(text, labels);
    if (!code.schedules.empty()) s.init = code.schedules.front().init;
  }
  if (init) s.init = tokenize_labels(*init, labels);
  if (s.period.empty()) throw ConfigError("schedule period is empty");
  for (const auto& l : s.period) s.period_checks.push_back(code.round_indices(l));
  for (const auto& l : s.init) s.init_checks.push_back(code.round_indices(l));
  return s;
}

bool is_rewinding(const std::vector<std::string>& period) {
  const std::size_t p = period.size();
  for (std::size_t r = 0; r < p; ++r) {
    std::vector<std::string> v;
    for (std::size_t i = 0; i <= p; ++i) v.push_back(period[(r + i) % p]);
    if (std::equal(v.begin(), v.begin() + v.size() / 2, v.rbegin())) return true;
  }
  return false;
}

namespace {

std::vector<PauliOp> gather(const CodeInstance& code, const std::vector<std::size_t>& idx) {
  std::vector<PauliOp> out;
  out.reserve(idx.size());
  for (auto i : idx) out.push_back(code.checks[i].op);
  return out;
}

}  // namespace

IsgHistory run(const CodeInstance& code, const Schedule& schedule, std::size_t periods, std::size_t warmup) {
  if (periods < 1) throw ConfigError("periods must be at least 1");
  const std::size_t n = code.n_qubits();
  const std::size_t p = schedule.period.size();
  std::vector<std::vector<PauliOp>> rounds;
  for (const auto& idx : schedule.period_checks) rounds.push_back(gather(code, idx));
  StabilizerGroup g(n);
  for (const auto& idx : schedule.init_checks) g = g.measure_round(gather(code, idx));
  std::vector<std::size_t> last_warm;
  // A positive warmup is a minimum: warm-up continues until one period
  // returns the group unchanged, for at most kMaxExtraWarmup more periods.
  constexpr std::size_t kMaxExtraWarmup = 16;
  std::size_t done = 0;
  for (bool settled = false; done < warmup || (warmup > 0 && !settled && done < warmup + kMaxExtraWarmup); ++done) {
    last_warm.clear();
    StabilizerGroup before = g;
    for (const auto& r : rounds) {
      g = g.measure_round(r);
      last_warm.push_back(g.rank());
    }
    settled = g == before;
  }
  IsgHistory h{code.family, code.L, n, schedule, done, periods, g, {}};
  for (std::size_t t = 0; t < periods * p; ++t) {
    g = g.measure_round(rounds[t % p]);
    h.snapshots.push_back({t, t % p, schedule.period[t % p], g});
  }
  std::vector<std::size_t> prev, last;
  for (std::size_t t = 0; t < p; ++t) last.push_back(h.snapshots[(periods - 1) * p + t].group.rank());
  if (periods >= 2)
    for (std::size_t t = 0; t < p; ++t) prev.push_back(h.snapshots[(periods - 2) * p + t].group.rank());
  else
    prev = last_warm;
  if (!prev.empty() && prev != last) {
    for (std::size_t t = 0; t < p; ++t)
      if (prev[t] != last[t])
        throw PeriodicityViolation("rank at round " + std::to_string(t) + " (" + schedule.period[t] + ") went from " +
                                   std::to_string(prev[t]) + " to " + std::to_string(last[t]));
  }
  return h;
}

std::size_t logical_count(const CodeInstance& code, const StabilizerGroup& s) {
  if (s.n_qubits() != code.n_qubits()) throw DimensionError("group and code qubit counts differ");
  return code.n_qubits() - s.rank();
}

std::string history_to_json(const IsgHistory& h, bool with_generators) {
  nlohmann::ordered_json j;
  j["family"] = family_name(h.family);
  j["L"] = h.L;
  j["n_qubits"] = h.n_qubits;
  j["schedule"] = h.schedule.period;
  j["init"] = h.schedule.init;
  j["warmup"] = h.warmup;
  j["periods"] = h.periods;
  auto& rounds = j["rounds"] = nlohmann::ordered_json::array();
  for (const auto& s : h.snapshots) {
    nlohmann::ordered_json r;
    r["round"] = s.round;
    r["label"] = s.label;
    r["rank"] = s.group.rank();
    r["k"] = h.n_qubits - s.group.rank();
    if (with_generators) {
      auto& g = r["generators"] = nlohmann::ordered_json::array();
      for (const auto& op : s.group.generators()) g.push_back(op.to_sparse());
    }
    rounds.push_back(r);
  }
  return j.dump(2);
}

std::string history_to_csv(const IsgHistory& h) {
  std::ostringstream os;
  os << "round,label,rank,k\n";
  for (const auto& s : h.snapshots)
    os << s.round << ',' << s.label << ',' << s.group.rank() << ',' << h.n_qubits - s.group.rank() << '\n';
  return os.str();
}

}  // namespace floqsim
