#include <random>

#include <gtest/gtest.h>

#include "floqsim/errors.hpp"
#include "floqsim/pauli.hpp"

using namespace floqsim;

namespace {

PauliOp random_pauli(std::mt19937_64& rng, std::size_t n) {
  PauliOp p(n);
  const char letters[] = {'I', 'X', 'Y', 'Z'};
  for (std::size_t q = 0; q < n; ++q) p.set(q, letters[rng() % 4]);
  return p;
}

}  // namespace

TEST(pauli, parse_and_print) {
  auto p = PauliOp::from_string("XIZY");
  EXPECT_EQ(p.n_qubits(), 4u);
  EXPECT_EQ(p.to_string(), "XIZY");
  EXPECT_EQ(p.to_sparse(), "X0 Z2 Y3");
  EXPECT_EQ(PauliOp::from_sparse(4, "X0 Z2 Y3"), p);
  EXPECT_EQ(PauliOp::from_string("X_Z_").to_string(), "XIZI");
  EXPECT_EQ(p.weight(), 3u);
  EXPECT_EQ(p.support(), (std::vector<std::size_t>{0, 2, 3}));
  EXPECT_TRUE(PauliOp(5).is_identity());
}

TEST(pauli, symplectic_product_examples) {
  auto sp = [](const char* a, const char* b) {
    return symplectic_product(PauliOp::from_string(a), PauliOp::from_string(b));
  };
  EXPECT_TRUE(sp("XI", "ZI"));
  EXPECT_FALSE(sp("XX", "ZZ"));
  EXPECT_FALSE(sp("YI", "YI"));
}

TEST(pauli, multiply_examples) {
  auto m = [](const char* a, const char* b) {
    return multiply(PauliOp::from_string(a), PauliOp::from_string(b)).to_string();
  };
  EXPECT_EQ(m("X", "Z"), "Y");
  EXPECT_EQ(m("XYZ", "XYZ"), "III");
  EXPECT_EQ(m("XX", "ZZ"), "YY");
}

TEST(pauli, size_mismatch_throws) {
  EXPECT_THROW(symplectic_product(PauliOp(2), PauliOp(3)), DimensionError);
  EXPECT_THROW(multiply(PauliOp(2), PauliOp(3)), DimensionError);
}

TEST(pauli, symplectic_product_symmetric_and_bilinear) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 500; ++t) {
    std::size_t n = 1 + rng() % 130;
    auto p = random_pauli(rng, n), q = random_pauli(rng, n), r = random_pauli(rng, n);
    EXPECT_EQ(symplectic_product(p, q), symplectic_product(q, p));
    EXPECT_EQ(symplectic_product(p * q, r), symplectic_product(p, r) != symplectic_product(q, r));
  }
}

TEST(pauli, multiply_is_abelian_group_at_bit_level) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 200; ++t) {
    std::size_t n = 1 + rng() % 70;
    auto p = random_pauli(rng, n), q = random_pauli(rng, n), r = random_pauli(rng, n);
    EXPECT_EQ(p * q, q * p);
    EXPECT_EQ((p * q) * r, p * (q * r));
    EXPECT_TRUE((p * p).is_identity());
  }
}
