#pragma once

#include <string>
#include <vector>

#include "floqsim/code.hpp"

namespace floqsim::detail {

inline int mod(int a, int m) { return ((a % m) + m) % m; }

// Appends a check and returns its index.
inline std::size_t add_check(CodeInstance& c, PauliOp op, std::vector<std::string> rounds,
                             std::string color, std::string note = {}) {
  c.checks.push_back(Check{std::move(op), std::move(rounds), std::move(color), std::move(note)});
  return c.checks.size() - 1;
}

inline PauliOp pair_op(std::size_t n, std::size_t a, std::size_t b, char p) {
  PauliOp op(n);
  op.set(a, p);
  op.set(b, p);
  return op;
}

CodeInstance build_square_octagon(int L);
CodeInstance build_coupled_layers(Family family, int L);
CodeInstance build_color(int L);
CodeInstance build_ftc(int L);

}  // namespace floqsim::detail
