#include "floqsim/pauli.hpp"

#include <bit>
#include <cctype>
#include <sstream>

#include "floqsim/errors.hpp"

namespace floqsim {

namespace {

void check_dims(const PauliOp& p, const PauliOp& q) {
  if (p.n_qubits() != q.n_qubits())
    throw DimensionError("Pauli operators on " + std::to_string(p.n_qubits()) + " and " +
                         std::to_string(q.n_qubits()) + " qubits");
}

}  // namespace

PauliOp::PauliOp(BitVec x, BitVec z) : x_(std::move(x)), z_(std::move(z)) {
  if (x_.size() != z_.size()) throw DimensionError("x and z parts differ in length");
}

PauliOp PauliOp::from_string(std::string_view s) {
  PauliOp p(s.size());
  for (std::size_t q = 0; q < s.size(); ++q) p.set(q, s[q]);
  return p;
}

PauliOp PauliOp::from_sparse(std::size_t n, std::string_view s) {
  PauliOp p(n);
  std::istringstream in{std::string(s)};
  std::string tok;
  while (in >> tok) {
    if (tok.size() < 2) throw DimensionError("bad sparse Pauli token '" + tok + "'");
    std::size_t q = std::stoul(tok.substr(1));
    if (q >= n) throw DimensionError("qubit " + std::to_string(q) + " out of range");
    p.set(q, tok[0]);
  }
  return p;
}

PauliOp PauliOp::from_map(std::size_t n, const std::vector<std::pair<std::size_t, char>>& ops) {
  PauliOp p(n);
  for (auto [q, c] : ops) {
    if (q >= n) throw DimensionError("qubit " + std::to_string(q) + " out of range");
    p.set(q, c);
  }
  return p;
}

char PauliOp::get(std::size_t q) const {
  bool xb = x_.get(q), zb = z_.get(q);
  return xb ? (zb ? 'Y' : 'X') : (zb ? 'Z' : 'I');
}

void PauliOp::set(std::size_t q, char p) {
  switch (std::toupper(static_cast<unsigned char>(p))) {
    case 'I': case '_': x_.set(q, false); z_.set(q, false); break;
    case 'X': x_.set(q, true); z_.set(q, false); break;
    case 'Y': x_.set(q, true); z_.set(q, true); break;
    case 'Z': x_.set(q, false); z_.set(q, true); break;
    default: throw DimensionError(std::string("bad Pauli letter '") + p + "'");
  }
}

std::size_t PauliOp::weight() const {
  std::size_t c = 0;
  const auto& xw = x_.words();
  const auto& zw = z_.words();
  for (std::size_t k = 0; k < xw.size(); ++k) c += std::popcount(xw[k] | zw[k]);
  return c;
}

std::vector<std::size_t> PauliOp::support() const {
  std::vector<std::size_t> out;
  for (std::size_t q = 0; q < n_qubits(); ++q)
    if (x_.get(q) || z_.get(q)) out.push_back(q);
  return out;
}

bool PauliOp::col(std::size_t c) const {
  std::size_t n = n_qubits();
  return c < n ? x_.get(c) : z_.get(c - n);
}

std::size_t PauliOp::first_col() const {
  std::size_t f = x_.first_set();
  if (f != npos) return f;
  f = z_.first_set();
  return f == npos ? npos : n_qubits() + f;
}

void PauliOp::flip_col(std::size_t c) {
  std::size_t n = n_qubits();
  if (c < n) x_.flip(c); else z_.flip(c - n);
}

PauliOp& PauliOp::operator*=(const PauliOp& o) {
  check_dims(*this, o);
  x_ ^= o.x_;
  z_ ^= o.z_;
  return *this;
}

std::string PauliOp::to_string() const {
  std::string s(n_qubits(), 'I');
  for (std::size_t q = 0; q < n_qubits(); ++q) s[q] = get(q);
  return s;
}

std::string PauliOp::to_sparse() const {
  std::string s;
  for (std::size_t q : support()) {
    if (!s.empty()) s += ' ';
    s += get(q);
    s += std::to_string(q);
  }
  return s;
}

bool symplectic_product(const PauliOp& p, const PauliOp& q) {
  check_dims(p, q);
  const auto& px = p.x().words();
  const auto& pz = p.z().words();
  const auto& qx = q.x().words();
  const auto& qz = q.z().words();
  Word acc = 0;
  for (std::size_t k = 0; k < px.size(); ++k) acc ^= (px[k] & qz[k]) ^ (pz[k] & qx[k]);
  return std::popcount(acc) & 1;
}

PauliOp multiply(const PauliOp& p, const PauliOp& q) { return p * q; }

}  // namespace floqsim
