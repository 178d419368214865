#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "floqsim/bits.hpp"
#include "floqsim/gf2.hpp"
#include "floqsim/pauli.hpp"

namespace floqsim {

// Pivot table over symplectic columns for incremental row reduction.
class PauliEchelon {
 public:
  explicit PauliEchelon(std::size_t n) : n_(n), slot_(2 * n, -1) {}
  std::size_t n_qubits() const { return n_; }
  std::size_t rank() const { return rows_.size(); }
  const std::vector<PauliOp>& rows() const { return rows_; }
  // Reduces p against the table; the remainder is zero iff p is in the span.
  PauliOp reduce(PauliOp p) const;
  // Adds p to the span; returns false if it was already there.
  bool insert(const PauliOp& p);

 private:
  std::size_t n_;
  std::vector<int> slot_;
  std::vector<PauliOp> rows_;
};

// Reduced row-echelon basis of the span of ops (columns x_0..x_{n-1}, z_0..z_{n-1}).
std::vector<PauliOp> canonical_basis(std::size_t n, const std::vector<PauliOp>& ops);
std::size_t pauli_rank(std::size_t n, const std::vector<PauliOp>& ops);
// ops as rows of a 2n-column BitMatrix.
BitMatrix to_bit_matrix(std::size_t n, const std::vector<PauliOp>& ops);
PauliOp from_symplectic_row(std::size_t n, const BitVec& row);

// Abelian group of signless Paulis held as its canonical RREF generating set.
class StabilizerGroup {
 public:
  explicit StabilizerGroup(std::size_t n = 0) : n_(n) {}

  // Throws NonCommuting(i, j) for the first anticommuting input pair.
  static StabilizerGroup from_generators(std::size_t n, const std::vector<PauliOp>& ops);

  std::size_t n_qubits() const { return n_; }
  std::size_t rank() const { return gens_.size(); }
  const std::vector<PauliOp>& generators() const { return gens_; }

  // Membership; on success the witness holds coefficients over generators().
  bool contains(const PauliOp& p, BitVec* witness = nullptr) const;
  PauliOp element(const BitVec& coeffs) const;

  StabilizerGroup measure(const PauliOp& check) const;
  // Throws NonCommutingRound if two checks of the round anticommute.
  StabilizerGroup measure_round(const std::vector<PauliOp>& checks) const;

  friend bool operator==(const StabilizerGroup& a, const StabilizerGroup& b) {
    return a.n_ == b.n_ && a.gens_ == b.gens_;
  }

 private:
  static StabilizerGroup from_canonical(std::size_t n, std::vector<PauliOp> gens);
  void check_invariants() const;

  std::size_t n_;
  std::vector<PauliOp> gens_;
};

// A product of a group's generators, with the coefficients kept alongside.
struct GroupElementExpr {
  BitVec coefficients;
  PauliOp value;
};
std::optional<GroupElementExpr> express(const StabilizerGroup& s, const PauliOp& p);

// { g in <gens> : g commutes with every generator }.
StabilizerGroup center_of_group(std::size_t n, const std::vector<PauliOp>& gens);
// Elements of the host group commuting with every constraint.
StabilizerGroup centralizer_within(const StabilizerGroup& host, const std::vector<PauliOp>& constraints);
StabilizerGroup centralizer_within(std::size_t n, const std::vector<PauliOp>& host,
                                   const std::vector<PauliOp>& constraints);
StabilizerGroup intersect(const StabilizerGroup& a, const StabilizerGroup& b);
// Elements of S supported inside the region (mask over qubits).
StabilizerGroup restrict_to_region(const StabilizerGroup& s, const BitVec& region);
StabilizerGroup restrict_to_region(const StabilizerGroup& s, const std::vector<std::size_t>& region);
// Same, without canonicalizing the result.
std::vector<PauliOp> restricted_elements(const std::vector<PauliOp>& gens, const BitVec& region);

// Paulis commuting with every op: the right null space of the swapped rows.
std::vector<PauliOp> commutant(std::size_t n, const std::vector<PauliOp>& ops);

}  // namespace floqsim
