#include "floqsim/gf2.hpp"

#include "floqsim/errors.hpp"

namespace floqsim {

BitMatrix BitMatrix::identity(std::size_t n) {
  BitMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.set(i, i);
  return m;
}

BitMatrix BitMatrix::from_rows(std::vector<BitVec> rows, std::size_t cols) {
  BitMatrix m;
  m.cols_ = cols;
  for (auto& r : rows) m.add_row(std::move(r));
  return m;
}

BitMatrix BitMatrix::from_strings(const std::vector<std::string>& rows) {
  BitMatrix m;
  m.cols_ = rows.empty() ? 0 : rows.front().size();
  for (const auto& s : rows) m.add_row(BitVec::from_string(s));
  return m;
}

void BitMatrix::add_row(BitVec r) {
  if (r.size() != cols_) throw DimensionError("row length " + std::to_string(r.size()) +
                                              " in a matrix with " + std::to_string(cols_) + " columns");
  rows_.push_back(std::move(r));
}

BitMatrix BitMatrix::transpose() const {
  BitMatrix t(cols_, rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t j = rows_[i].first_set(); j != npos && j < cols_; ++j)
      if (rows_[i].get(j)) t.set(j, i);
  return t;
}

BitMatrix BitMatrix::operator*(const BitMatrix& o) const {
  if (cols_ != o.row_count()) throw DimensionError("matrix product shape mismatch");
  BitMatrix out(rows_.size(), o.col_count());
  for (std::size_t i = 0; i < rows_.size(); ++i)
    for (std::size_t k = 0; k < cols_; ++k)
      if (rows_[i].get(k)) out.rows_[i] ^= o.rows_[k];
  return out;
}

bool BitMatrix::is_identity() const {
  return rows_.size() == cols_ && *this == identity(cols_);
}

std::vector<std::string> BitMatrix::to_strings() const {
  std::vector<std::string> out;
  for (const auto& r : rows_) out.push_back(r.to_string());
  return out;
}

RrefResult f2_rref(const BitMatrix& m) {
  RrefResult res;
  std::vector<BitVec> rows = m.rows();
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.col_count() && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && !rows[p].get(c)) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && rows[i].get(c)) rows[i] ^= rows[r];
    res.pivot_columns.push_back(c);
    ++r;
  }
  res.rank = r;
  res.matrix = BitMatrix::from_rows(std::move(rows), m.col_count());
  return res;
}

std::size_t f2_rank(const BitMatrix& m) {
  // Forward elimination keyed by leading column; no back substitution.
  std::vector<BitVec> piv(m.col_count());
  std::vector<char> has(m.col_count(), 0);
  std::size_t rank = 0;
  for (BitVec r : m.rows()) {
    for (std::size_t c = r.first_set(); c != npos; c = r.first_set()) {
      if (!has[c]) {
        piv[c] = std::move(r);
        has[c] = 1;
        ++rank;
        break;
      }
      r ^= piv[c];
    }
  }
  return rank;
}

namespace {

// Echelon table with combination tracking, shared by kernel and solve.
struct TrackedEchelon {
  std::vector<BitVec> row, comb;
  std::vector<char> has;
  std::vector<BitVec> relations;

  explicit TrackedEchelon(const BitMatrix& m) : row(m.col_count()), comb(m.col_count()), has(m.col_count(), 0) {
    for (std::size_t i = 0; i < m.row_count(); ++i) {
      BitVec r = m.row(i);
      BitVec c(m.row_count());
      c.set(i);
      reduce(r, c);
      std::size_t lead = r.first_set();
      if (lead == npos) {
        relations.push_back(std::move(c));
      } else {
        row[lead] = std::move(r);
        comb[lead] = std::move(c);
        has[lead] = 1;
      }
    }
  }

  void reduce(BitVec& r, BitVec& c) const {
    for (std::size_t lead = r.first_set(); lead != npos && has[lead]; lead = r.first_set()) {
      r ^= row[lead];
      c ^= comb[lead];
    }
  }
};

}  // namespace

BitMatrix f2_kernel(const BitMatrix& m) {
  TrackedEchelon e(m);
  return BitMatrix::from_rows(std::move(e.relations), m.row_count());
}

BitMatrix f2_nullspace(const BitMatrix& m) {
  RrefResult rr = f2_rref(m);
  std::vector<char> is_pivot(m.col_count(), 0);
  for (std::size_t c : rr.pivot_columns) is_pivot[c] = 1;
  BitMatrix out(0, m.col_count());
  for (std::size_t f = 0; f < m.col_count(); ++f) {
    if (is_pivot[f]) continue;
    BitVec v(m.col_count());
    v.set(f);
    for (std::size_t r = 0; r < rr.rank; ++r)
      if (rr.matrix.get(r, f)) v.set(rr.pivot_columns[r]);
    out.add_row(std::move(v));
  }
  return out;
}

std::optional<BitVec> f2_solve(const BitMatrix& m, const BitVec& b) {
  if (b.size() != m.col_count()) throw DimensionError("right-hand side length mismatch");
  TrackedEchelon e(m);
  BitVec r = b;
  BitVec c(m.row_count());
  e.reduce(r, c);
  if (r.any()) return std::nullopt;
  return c;
}

}  // namespace floqsim
