#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "floqsim/code.hpp"
#include "floqsim/stabilizer.hpp"

namespace floqsim {

struct Schedule {
  std::string name;  // declared schedule name, or the text it was parsed from
  std::vector<std::string> period;
  std::vector<std::string> init;
  // Check indices bound to each label, in period / init order.
  std::vector<std::vector<std::size_t>> period_checks;
  std::vector<std::vector<std::size_t>> init_checks;
};

// Splits text into declared labels by greedy longest match; whitespace and
// commas separate tokens. Throws UnknownLabel.
std::vector<std::string> tokenize_labels(const std::string& text, const std::vector<std::string>& labels);

// text is a declared schedule name or a label sequence. Without an explicit
// init, a declared schedule keeps its own prefix and free text takes the
// prefix shared by the code's declared schedules.
Schedule parse_schedule(const std::string& text, const CodeInstance& code,
                        const std::optional<std::string>& init = std::nullopt);

bool is_rewinding(const std::vector<std::string>& period);
inline bool is_rewinding(const Schedule& s) { return is_rewinding(s.period); }

struct Snapshot {
  std::size_t round;     // index within the measured rounds
  std::size_t position;  // index within the period
  std::string label;
  StabilizerGroup group;
};

struct IsgHistory {
  Family family;
  int L;
  std::size_t n_qubits;
  Schedule schedule;
  std::size_t warmup;  // warm-up periods actually run
  std::size_t periods;
  StabilizerGroup start;  // group just before the first measured round
  std::vector<Snapshot> snapshots;
};

// Empty group, init prefix once, then warm-up and periods full periods. A
// positive warmup is a minimum: warm-up goes on until a period leaves the group
// unchanged (at most 16 extra periods). Throws PeriodicityViolation if ranks
// of the last two periods differ.
IsgHistory run(const CodeInstance& code, const Schedule& schedule, std::size_t periods, std::size_t warmup = 2);

std::size_t logical_count(const CodeInstance& code, const StabilizerGroup& s);

std::string history_to_json(const IsgHistory& h, bool with_generators = false);
std::string history_to_csv(const IsgHistory& h);

}  // namespace floqsim
