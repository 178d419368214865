#include "floqsim/stabilizer.hpp"

#include <algorithm>

#include "floqsim/errors.hpp"

namespace floqsim {

PauliOp PauliEchelon::reduce(PauliOp p) const {
  for (std::size_t c = p.first_col(); c != npos && slot_[c] >= 0; c = p.first_col()) p *= rows_[slot_[c]];
  return p;
}

bool PauliEchelon::insert(const PauliOp& p) {
  PauliOp r = reduce(p);
  std::size_t c = r.first_col();
  if (c == npos) return false;
  slot_[c] = static_cast<int>(rows_.size());
  rows_.push_back(std::move(r));
  return true;
}

std::vector<PauliOp> canonical_basis(std::size_t n, const std::vector<PauliOp>& ops) {
  PauliEchelon e(n);
  for (const auto& p : ops) {
    if (p.n_qubits() != n) throw DimensionError("operator on the wrong qubit count");
    e.insert(p);
  }
  std::vector<PauliOp> rows = e.rows();
  std::sort(rows.begin(), rows.end(),
            [](const PauliOp& a, const PauliOp& b) { return a.first_col() < b.first_col(); });
  // Back substitution: clear each pivot column from the rows above it.
  for (std::size_t r = 1; r < rows.size(); ++r) {
    std::size_t c = rows[r].first_col();
    for (std::size_t s = 0; s < r; ++s)
      if (rows[s].col(c)) rows[s] *= rows[r];
  }
  return rows;
}

std::size_t pauli_rank(std::size_t n, const std::vector<PauliOp>& ops) {
  PauliEchelon e(n);
  for (const auto& p : ops) e.insert(p);
  return e.rank();
}

BitMatrix to_bit_matrix(std::size_t n, const std::vector<PauliOp>& ops) {
  BitMatrix m(0, 2 * n);
  for (const auto& p : ops) {
    BitVec r(2 * n);
    for (std::size_t q = 0; q < n; ++q) {
      if (p.x().get(q)) r.set(q);
      if (p.z().get(q)) r.set(n + q);
    }
    m.add_row(std::move(r));
  }
  return m;
}

PauliOp from_symplectic_row(std::size_t n, const BitVec& row) {
  PauliOp p(n);
  for (std::size_t q = 0; q < n; ++q) {
    if (row.get(q)) p.x().set(q);
    if (row.get(n + q)) p.z().set(q);
  }
  return p;
}

StabilizerGroup StabilizerGroup::from_canonical(std::size_t n, std::vector<PauliOp> gens) {
  StabilizerGroup s(n);
  s.gens_ = std::move(gens);
#ifndef NDEBUG
  s.check_invariants();
#endif
  return s;
}

void StabilizerGroup::check_invariants() const {
  for (std::size_t i = 0; i < gens_.size(); ++i)
    for (std::size_t j = i + 1; j < gens_.size(); ++j)
      if (symplectic_product(gens_[i], gens_[j])) throw NonCommuting(i, j);
  if (gens_.size() > n_) throw StructureMismatch("rank exceeds qubit count");
}

StabilizerGroup StabilizerGroup::from_generators(std::size_t n, const std::vector<PauliOp>& ops) {
  for (std::size_t i = 0; i < ops.size(); ++i) {
    if (ops[i].n_qubits() != n) throw DimensionError("operator on the wrong qubit count");
    for (std::size_t j = i + 1; j < ops.size(); ++j)
      if (symplectic_product(ops[i], ops[j])) throw NonCommuting(i, j);
  }
  StabilizerGroup s(n);
  s.gens_ = canonical_basis(n, ops);
  return s;
}

bool StabilizerGroup::contains(const PauliOp& p, BitVec* witness) const {
  if (p.n_qubits() != n_) throw DimensionError("operator on the wrong qubit count");
  PauliOp r = p;
  BitVec w(gens_.size());
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    if (r.col(gens_[i].first_col())) {
      r *= gens_[i];
      w.set(i);
    }
  }
  if (!r.is_identity()) return false;
  if (witness) *witness = std::move(w);
  return true;
}

PauliOp StabilizerGroup::element(const BitVec& coeffs) const {
  PauliOp p(n_);
  for (std::size_t i = 0; i < gens_.size(); ++i)
    if (coeffs.get(i)) p *= gens_[i];
  return p;
}

StabilizerGroup StabilizerGroup::measure(const PauliOp& check) const { return measure_round({check}); }

StabilizerGroup StabilizerGroup::measure_round(const std::vector<PauliOp>& checks) const {
  for (std::size_t i = 0; i < checks.size(); ++i) {
    if (checks[i].n_qubits() != n_) throw DimensionError("check on the wrong qubit count");
    for (std::size_t j = i + 1; j < checks.size(); ++j)
      if (symplectic_product(checks[i], checks[j])) throw NonCommutingRound(i, j);
  }
  std::vector<PauliOp> gens = gens_;
  std::vector<PauliOp> deferred;
  std::vector<std::size_t> anti;
  for (const auto& c : checks) {
    anti.clear();
    for (std::size_t i = 0; i < gens.size(); ++i)
      if (symplectic_product(gens[i], c)) anti.push_back(i);
    if (anti.empty()) {
      // Commutes with everything measured so far and with the rest of the round.
      deferred.push_back(c);
      continue;
    }
    const std::size_t p = anti.front();
    for (std::size_t k = 1; k < anti.size(); ++k) gens[anti[k]] *= gens[p];
    gens[p] = c;
  }
  gens.insert(gens.end(), deferred.begin(), deferred.end());
  return from_canonical(n_, canonical_basis(n_, gens));
}

std::optional<GroupElementExpr> express(const StabilizerGroup& s, const PauliOp& p) {
  BitVec w;
  if (!s.contains(p, &w)) return std::nullopt;
  return GroupElementExpr{w, p};
}

namespace {

// Elements sum_i c_i basis_i with c in the row-relation space of A, where
// A[i][j] = sp(basis_i, constraint_j).
std::vector<PauliOp> commuting_combinations(std::size_t n, const std::vector<PauliOp>& basis,
                                            const std::vector<PauliOp>& constraints) {
  BitMatrix a(basis.size(), constraints.size());
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = 0; j < constraints.size(); ++j)
      if (symplectic_product(basis[i], constraints[j])) a.set(i, j);
  BitMatrix ker = f2_kernel(a);
  std::vector<PauliOp> out;
  for (const auto& c : ker.rows()) {
    PauliOp p(n);
    for (std::size_t i = 0; i < basis.size(); ++i)
      if (c.get(i)) p *= basis[i];
    out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

StabilizerGroup center_of_group(std::size_t n, const std::vector<PauliOp>& gens) {
  std::vector<PauliOp> basis = canonical_basis(n, gens);
  return StabilizerGroup::from_generators(n, commuting_combinations(n, basis, gens));
}

StabilizerGroup centralizer_within(const StabilizerGroup& host, const std::vector<PauliOp>& constraints) {
  std::size_t n = host.n_qubits();
  return StabilizerGroup::from_generators(n, commuting_combinations(n, host.generators(), constraints));
}

StabilizerGroup centralizer_within(std::size_t n, const std::vector<PauliOp>& host,
                                   const std::vector<PauliOp>& constraints) {
  return centralizer_within(StabilizerGroup::from_generators(n, host), constraints);
}

StabilizerGroup intersect(const StabilizerGroup& a, const StabilizerGroup& b) {
  if (a.n_qubits() != b.n_qubits()) throw DimensionError("intersecting groups on different qubit counts");
  std::size_t n = a.n_qubits();
  std::vector<PauliOp> stacked = a.generators();
  stacked.insert(stacked.end(), b.generators().begin(), b.generators().end());
  BitMatrix ker = f2_kernel(to_bit_matrix(n, stacked));
  std::vector<PauliOp> out;
  for (const auto& c : ker.rows()) {
    PauliOp p(n);
    for (std::size_t i = 0; i < a.rank(); ++i)
      if (c.get(i)) p *= a.generators()[i];
    out.push_back(std::move(p));
  }
  return StabilizerGroup::from_generators(n, out);
}

std::vector<PauliOp> restricted_elements(const std::vector<PauliOp>& gens, const BitVec& region) {
  if (gens.empty()) return {};
  std::size_t n = gens.front().n_qubits();
  BitVec outside(n);
  for (std::size_t q = 0; q < n; ++q)
    if (!region.get(q)) outside.set(q);
  // Eliminate on the outside part while carrying the full operator.
  std::vector<int> slot(2 * n, -1);
  std::vector<PauliOp> masked, full;
  std::vector<PauliOp> out;
  for (const auto& g : gens) {
    PauliOp m = g;
    m.x() &= outside;
    m.z() &= outside;
    PauliOp f = g;
    for (std::size_t c = m.first_col(); c != npos; c = m.first_col()) {
      int s = slot[c];
      if (s < 0) break;
      m *= masked[s];
      f *= full[s];
    }
    std::size_t c = m.first_col();
    if (c == npos) {
      if (!f.is_identity()) out.push_back(std::move(f));
    } else {
      slot[c] = static_cast<int>(masked.size());
      masked.push_back(std::move(m));
      full.push_back(std::move(f));
    }
  }
  return out;
}

StabilizerGroup restrict_to_region(const StabilizerGroup& s, const BitVec& region) {
  if (region.size() != s.n_qubits()) throw DimensionError("region mask length mismatch");
  return StabilizerGroup::from_generators(s.n_qubits(), restricted_elements(s.generators(), region));
}

StabilizerGroup restrict_to_region(const StabilizerGroup& s, const std::vector<std::size_t>& region) {
  BitVec mask(s.n_qubits());
  for (std::size_t q : region) {
    if (q >= s.n_qubits()) throw DimensionError("region qubit out of range");
    mask.set(q);
  }
  return restrict_to_region(s, mask);
}

std::vector<PauliOp> commutant(std::size_t n, const std::vector<PauliOp>& ops) {
  // sp(P, s) = P.x . s.z + P.z . s.x, so row s of the system is (s.z | s.x).
  BitMatrix m(0, 2 * n);
  for (const auto& s : ops) {
    BitVec r(2 * n);
    for (std::size_t q = 0; q < n; ++q) {
      if (s.z().get(q)) r.set(q);
      if (s.x().get(q)) r.set(n + q);
    }
    m.add_row(std::move(r));
  }
  BitMatrix ns = f2_nullspace(m);
  std::vector<PauliOp> out;
  for (const auto& v : ns.rows()) out.push_back(from_symplectic_row(n, v));
  return out;
}

}  // namespace floqsim
