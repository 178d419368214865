#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace floqsim {

using Word = std::uint64_t;
constexpr std::size_t npos = static_cast<std::size_t>(-1);

inline std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

// Fixed-length bit vector packed into 64-bit words; padding bits stay zero.
class BitVec {
 public:
  BitVec() = default;
  explicit BitVec(std::size_t nbits) : n_(nbits), w_(words_for(nbits), 0) {}

  std::size_t size() const { return n_; }
  bool get(std::size_t i) const { return (w_[i >> 6] >> (i & 63)) & 1; }
  void set(std::size_t i, bool v = true) {
    Word m = Word{1} << (i & 63);
    if (v) w_[i >> 6] |= m; else w_[i >> 6] &= ~m;
  }
  void flip(std::size_t i) { w_[i >> 6] ^= Word{1} << (i & 63); }

  bool any() const {
    for (Word x : w_) if (x) return true;
    return false;
  }
  std::size_t popcount() const {
    std::size_t c = 0;
    for (Word x : w_) c += std::popcount(x);
    return c;
  }
  std::size_t first_set() const {
    for (std::size_t k = 0; k < w_.size(); ++k)
      if (w_[k]) return (k << 6) + std::countr_zero(w_[k]);
    return npos;
  }
  BitVec& operator^=(const BitVec& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] ^= o.w_[k];
    return *this;
  }
  BitVec& operator&=(const BitVec& o) {
    for (std::size_t k = 0; k < w_.size(); ++k) w_[k] &= o.w_[k];
    return *this;
  }
  // Parity of the inner product over GF(2).
  bool dot(const BitVec& o) const {
    Word acc = 0;
    for (std::size_t k = 0; k < w_.size(); ++k) acc ^= w_[k] & o.w_[k];
    return std::popcount(acc) & 1;
  }

  std::vector<Word>& words() { return w_; }
  const std::vector<Word>& words() const { return w_; }

  std::string to_string() const {
    std::string s(n_, '0');
    for (std::size_t i = 0; i < n_; ++i) if (get(i)) s[i] = '1';
    return s;
  }
  static BitVec from_string(const std::string& s) {
    BitVec v(s.size());
    for (std::size_t i = 0; i < s.size(); ++i) if (s[i] == '1') v.set(i);
    return v;
  }

  friend bool operator==(const BitVec&, const BitVec&) = default;
  friend bool operator<(const BitVec& a, const BitVec& b) {
    return a.n_ != b.n_ ? a.n_ < b.n_ : a.w_ < b.w_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Word> w_;
};

inline BitVec operator^(BitVec a, const BitVec& b) { return a ^= b; }

}  // namespace floqsim
