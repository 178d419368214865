#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "floqsim/code.hpp"
#include "floqsim/gf2.hpp"
#include "floqsim/schedule.hpp"
#include "floqsim/stabilizer.hpp"

namespace floqsim {

// Symplectic basis of C(S)/S.
struct LogicalFrame {
  StabilizerGroup base;
  std::vector<std::pair<PauliOp, PauliOp>> pairs;  // (X_i, Z_i)
  std::size_t k() const { return pairs.size(); }
  // X_0..X_{k-1}, Z_0..Z_{k-1}.
  std::vector<PauliOp> flat() const;
};

LogicalFrame logical_basis(const StabilizerGroup& s);

// Coordinates of a commutant element in the frame: entry i is the X_i
// coefficient, entry k + i the Z_i coefficient.
BitVec frame_coordinates(const LogicalFrame& f, const PauliOp& p);

// L * s for some s in S_curr commuting with every next check, or nullopt when
// the class is measured by the next round.
std::optional<PauliOp> evolve_logical(const PauliOp& l, const StabilizerGroup& s_curr,
                                      const std::vector<PauliOp>& next_checks);

struct AutomorphismReport {
  BitMatrix matrix;  // row a: image of frame element a (flat order) in frame coordinates
  std::size_t order = 0;  // 0 when some class was measured or no power is the identity
  std::vector<std::size_t> measured_logicals;  // flat frame indices
  std::size_t k = 0;
};

// Evolves a frame of the group at history.start through the first measured
// period. Throws PeriodicityViolation if the group at the end differs.
AutomorphismReport period_automorphism(const CodeInstance& code, const IsgHistory& history);

// Smallest m in [1, max_order] with m^m = I, else 0.
std::size_t matrix_order(const BitMatrix& m, std::size_t max_order = 64);

bool reversibility_check(const StabilizerGroup& a, const StabilizerGroup& b);

// Periodic boxes of side d + 1 at every offset.
std::vector<BitVec> periodic_boxes(const CodeInstance& code, int d);
std::size_t nonlocal_count(const StabilizerGroup& s, const CodeInstance& code, int d = 4);

StabilizerGroup surviving_subgroup(const StabilizerGroup& s_curr, const std::vector<PauliOp>& next_checks);

struct SurvivingSummary {
  std::size_t quotient_rank = 0;  // rank of survivors modulo (static stabilizers, next checks)
  std::vector<std::size_t> local_weights;  // lowest weight of a new local survivor per region
};
SurvivingSummary summarize_surviving(const StabilizerGroup& survivors, const std::vector<PauliOp>& modulo,
                                     const std::vector<BitVec>& regions);

struct EffectiveQubitMap {
  std::vector<std::size_t> block;
  std::vector<PauliOp> block_stabilizers;
  PauliOp x_eff, z_eff;
};
struct Verdict {
  bool ok = true;
  std::string reason;
};
Verdict validate_effective_map(const EffectiveQubitMap& m, const StabilizerGroup& s);

// Noncontractible closed products of two-qubit checks, one per winding class
// found, keyed by winding parity per axis.
std::vector<std::pair<std::vector<int>, PauliOp>> winding_loops(const CodeInstance& code);

}  // namespace floqsim
