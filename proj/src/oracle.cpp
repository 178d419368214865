#include "floqsim/oracle.hpp"

#include <complex>
#include <random>

#include <Eigen/Dense>

namespace floqsim::oracle {

namespace {

using Mat = Eigen::MatrixXcd;
using cd = std::complex<double>;

Mat pauli_matrix(const PauliOp& p) {
  const std::size_t n = p.n_qubits();
  Mat out = Mat::Identity(1, 1);
  for (std::size_t q = 0; q < n; ++q) {
    Mat s(2, 2);
    switch (p.get(q)) {
      case 'X': s << 0, 1, 1, 0; break;
      case 'Y': s << 0, cd(0, -1), cd(0, 1), 0; break;
      case 'Z': s << 1, 0, 0, -1; break;
      default: s << 1, 0, 0, 1; break;
    }
    // Qubit 0 is the most significant tensor factor.
    Mat k(out.rows() * 2, out.cols() * 2);
    for (Eigen::Index i = 0; i < out.rows(); ++i)
      for (Eigen::Index j = 0; j < out.cols(); ++j) k.block(2 * i, 2 * j, 2, 2) = out(i, j) * s;
    out = std::move(k);
  }
  return out;
}

PauliOp pauli_from_index(std::size_t n, std::size_t idx) {
  PauliOp p(n);
  const char letters[] = {'I', 'X', 'Y', 'Z'};
  for (std::size_t q = 0; q < n; ++q) {
    p.set(q, letters[idx % 4]);
    idx /= 4;
  }
  return p;
}

}  // namespace

std::vector<PauliOp> projector_group(std::size_t n, const std::vector<PauliOp>& sequence, std::uint64_t rng_seed) {
  const Eigen::Index dim = Eigen::Index(1) << n;
  Mat rho = Mat::Identity(dim, dim) / static_cast<double>(dim);
  std::mt19937_64 rng(rng_seed);
  const Mat id = Mat::Identity(dim, dim);
  for (const auto& p : sequence) {
    Mat pm = pauli_matrix(p);
    double plus = std::real((rho * (id + pm)).trace()) / 2.0;
    int sign;
    if (plus > 1 - 1e-9)
      sign = 1;
    else if (plus < 1e-9)
      sign = -1;
    else
      sign = std::uniform_real_distribution<double>(0, 1)(rng) < plus ? 1 : -1;
    Mat proj = (id + static_cast<double>(sign) * pm) / 2.0;
    rho = proj * rho * proj;
    rho /= std::real(rho.trace());
  }
  std::vector<PauliOp> found;
  const std::size_t total = std::size_t(1) << (2 * n);
  for (std::size_t idx = 1; idx < total; ++idx) {
    PauliOp q = pauli_from_index(n, idx);
    double e = std::abs((rho * pauli_matrix(q)).trace());
    if (e > 1 - 1e-6) found.push_back(q);
  }
  return canonical_basis(n, found);
}

OracleSummary run_oracle_suite(std::uint64_t seed, std::size_t trials, std::size_t max_n, std::size_t max_len) {
  std::mt19937_64 rng(seed);
  OracleSummary s;
  for (std::size_t t = 0; t < trials; ++t) {
    std::size_t n = 1 + rng() % max_n;
    std::size_t len = 1 + rng() % max_len;
    std::vector<PauliOp> seq;
    StabilizerGroup g(n);
    for (std::size_t i = 0; i < len; ++i) {
      PauliOp p;
      do {
        p = pauli_from_index(n, rng() % (std::size_t(1) << (2 * n)));
      } while (p.is_identity());
      seq.push_back(p);
      g = g.measure(p);
    }
    ++s.trials;
    auto expect = projector_group(n, seq, rng());
    if (expect != g.generators()) {
      ++s.mismatches;
      if (s.first_failure.empty()) {
        s.first_failure = "n=" + std::to_string(n) + " sequence:";
        for (const auto& p : seq) s.first_failure += " " + p.to_string();
      }
    }
  }
  return s;
}

}  // namespace floqsim::oracle
