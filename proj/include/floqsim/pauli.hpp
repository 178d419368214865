#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "floqsim/bits.hpp"

namespace floqsim {

// Signless Pauli operator on n qubits stored as an X part and a Z part.
// As a row of the 2n-column symplectic matrix, column q < n is x_q and
// column n + q is z_q.
class PauliOp {
 public:
  PauliOp() = default;
  explicit PauliOp(std::size_t n) : x_(n), z_(n) {}
  PauliOp(BitVec x, BitVec z);

  // Dense form such as "XIZY"; '_' is accepted for identity.
  static PauliOp from_string(std::string_view s);
  // Sparse form such as "X0 Y3 Z7" on n qubits.
  static PauliOp from_sparse(std::size_t n, std::string_view s);
  static PauliOp from_map(std::size_t n, const std::vector<std::pair<std::size_t, char>>& ops);

  std::size_t n_qubits() const { return x_.size(); }
  const BitVec& x() const { return x_; }
  const BitVec& z() const { return z_; }
  BitVec& x() { return x_; }
  BitVec& z() { return z_; }

  char get(std::size_t q) const;
  void set(std::size_t q, char p);

  bool is_identity() const { return !x_.any() && !z_.any(); }
  std::size_t weight() const;
  std::vector<std::size_t> support() const;

  bool col(std::size_t c) const;
  // Lowest symplectic column holding a 1, or npos for the identity.
  std::size_t first_col() const;
  void flip_col(std::size_t c);

  PauliOp& operator*=(const PauliOp& o);
  std::string to_string() const;
  std::string to_sparse() const;

  friend bool operator==(const PauliOp&, const PauliOp&) = default;
  friend bool operator<(const PauliOp& a, const PauliOp& b) {
    return a.x_ == b.x_ ? a.z_ < b.z_ : a.x_ < b.x_;
  }

 private:
  BitVec x_, z_;
};

// 0 iff P and Q commute.
bool symplectic_product(const PauliOp& p, const PauliOp& q);
PauliOp multiply(const PauliOp& p, const PauliOp& q);

inline PauliOp operator*(PauliOp a, const PauliOp& b) { return a *= b; }

}  // namespace floqsim
