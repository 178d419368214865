#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "floqsim/pauli.hpp"
#include "floqsim/stabilizer.hpp"

namespace floqsim::oracle {

// Dense density-matrix simulation of projective Pauli measurements starting
// from the maximally mixed state; outcomes are drawn from rng_seed. Returns
// the canonical basis of the signless Paulis with expectation +-1.
std::vector<PauliOp> projector_group(std::size_t n, const std::vector<PauliOp>& sequence, std::uint64_t rng_seed);

struct OracleSummary {
  std::size_t trials = 0;
  std::size_t mismatches = 0;
  std::string first_failure;
};

// Random sequences of up to max_len measurements on 1..max_n qubits, each
// compared against StabilizerGroup::measure.
OracleSummary run_oracle_suite(std::uint64_t seed, std::size_t trials = 200, std::size_t max_n = 5,
                               std::size_t max_len = 12);

}  // namespace floqsim::oracle
