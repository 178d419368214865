#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "floqsim/bits.hpp"

namespace floqsim {

// Dense GF(2) matrix, row-major, each row a packed BitVec.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(std::size_t rows, std::size_t cols) : cols_(cols), rows_(rows, BitVec(cols)) {}

  static BitMatrix identity(std::size_t n);
  static BitMatrix from_rows(std::vector<BitVec> rows, std::size_t cols);
  static BitMatrix from_strings(const std::vector<std::string>& rows);

  std::size_t row_count() const { return rows_.size(); }
  std::size_t col_count() const { return cols_; }
  const BitVec& row(std::size_t i) const { return rows_[i]; }
  BitVec& row(std::size_t i) { return rows_[i]; }
  const std::vector<BitVec>& rows() const { return rows_; }
  bool get(std::size_t i, std::size_t j) const { return rows_[i].get(j); }
  void set(std::size_t i, std::size_t j, bool v = true) { rows_[i].set(j, v); }
  void add_row(BitVec r);

  BitMatrix transpose() const;
  BitMatrix operator*(const BitMatrix& o) const;
  bool is_identity() const;
  std::vector<std::string> to_strings() const;

  friend bool operator==(const BitMatrix&, const BitMatrix&) = default;

 private:
  std::size_t cols_ = 0;
  std::vector<BitVec> rows_;
};

struct RrefResult {
  BitMatrix matrix;  // same shape as the input, zero rows last
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_columns;
};

RrefResult f2_rref(const BitMatrix& m);
std::size_t f2_rank(const BitMatrix& m);

// Row relations: a basis of { c : sum_i c_i * row_i = 0 }.
// Vectors have length row_count; dimension is row_count - rank, i.e. the
// right null space of the transpose.
BitMatrix f2_kernel(const BitMatrix& m);

// Right null space { x : M x = 0 }, dimension col_count - rank.
BitMatrix f2_nullspace(const BitMatrix& m);

// Some x of length row_count with sum_i x_i * row_i = b, or nullopt when
// b is outside the row space. b has length col_count.
std::optional<BitVec> f2_solve(const BitMatrix& m, const BitVec& b);

}  // namespace floqsim
