#pragma once

// Exact arithmetic in Z/p^nZ for a prime p and n in {1,2,3}.  All
// moduli fit comfortably in 64 bits (p <= ~2.6M even at n = 3), so
// values are plain machine integers; products go through 128 bits.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mhsum/errors.hpp"
#include "mhsum/rational.hpp"

namespace mhsum {

struct PrimePower {
  std::uint32_t p = 0;
  std::uint32_t n = 0;
  std::uint64_t modulus = 0;  // p^n

  static PrimePower make(std::uint32_t p, std::uint32_t n) {
    if (n < 1 || n > 3)
      throw InvalidRangeError("residue exponent n must be 1, 2 or 3");
    if (!is_prime(p))
      throw InvalidRangeError(std::to_string(p) + " is not prime");
    std::uint64_t m = 1;
    for (std::uint32_t i = 0; i < n; ++i) m *= p;
    return PrimePower{p, n, m};
  }

  friend bool operator==(const PrimePower&, const PrimePower&) = default;

  std::string to_string() const {
    return std::to_string(p) + (n > 1 ? "^" + std::to_string(n) : "");
  }

  static bool is_prime(std::uint64_t v) {
    if (v < 2) return false;
    for (std::uint64_t d = 2; d * d <= v; ++d)
      if (v % d == 0) return false;
    return true;
  }
};

class Residue {
 public:
  Residue(std::uint64_t value, PrimePower m) : v_(value % m.modulus), m_(m) {}

  static Residue from_int(long long value, PrimePower m) {
    long long r = value % static_cast<long long>(m.modulus);
    if (r < 0) r += static_cast<long long>(m.modulus);
    return Residue(static_cast<std::uint64_t>(r), m);
  }

  std::uint64_t value() const { return v_; }
  const PrimePower& modulus() const { return m_; }

  Residue& operator+=(const Residue& o) {
    require_same(o);
    v_ += o.v_;
    if (v_ >= m_.modulus) v_ -= m_.modulus;
    return *this;
  }
  Residue& operator-=(const Residue& o) {
    require_same(o);
    v_ = v_ >= o.v_ ? v_ - o.v_ : v_ + m_.modulus - o.v_;
    return *this;
  }
  Residue& operator*=(const Residue& o) {
    require_same(o);
    v_ = mulmod(v_, o.v_, m_.modulus);
    return *this;
  }

  friend Residue operator+(Residue a, const Residue& b) { return a += b; }
  friend Residue operator-(Residue a, const Residue& b) { return a -= b; }
  friend Residue operator*(Residue a, const Residue& b) { return a *= b; }

  Residue operator-() const {
    return Residue(v_ == 0 ? 0 : m_.modulus - v_, m_);
  }

  Residue pow(std::uint64_t e) const {
    std::uint64_t acc = 1 % m_.modulus, base = v_;
    for (; e > 0; e >>= 1) {
      if (e & 1) acc = mulmod(acc, base, m_.modulus);
      base = mulmod(base, base, m_.modulus);
    }
    return Residue(acc, m_);
  }

  // Extended-Euclid inverse; the value must be a unit mod p^n.
  Residue inverse() const {
    std::int64_t t = 0, newt = 1;
    std::int64_t r = static_cast<std::int64_t>(m_.modulus),
                 newr = static_cast<std::int64_t>(v_);
    while (newr != 0) {
      const std::int64_t qq = r / newr;
      t = std::exchange(newt, t - qq * newt);
      r = std::exchange(newr, r - qq * newr);
    }
    if (r != 1)
      throw NonInvertibleDenominatorError(
          std::to_string(v_) + " is not invertible mod " + m_.to_string());
    if (t < 0) t += static_cast<std::int64_t>(m_.modulus);
    return Residue(static_cast<std::uint64_t>(t), m_);
  }

  friend bool operator==(const Residue& a, const Residue& b) {
    return a.m_ == b.m_ && a.v_ == b.v_;
  }

  // "v mod p^n", e.g. "20 mod 5^2".
  std::string to_string() const {
    return std::to_string(v_) + " mod " + m_.to_string();
  }

 private:
  static std::uint64_t mulmod(std::uint64_t a, std::uint64_t b,
                              std::uint64_t m) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
  }

  void require_same(const Residue& o) const {
    if (!(m_ == o.m_))
      throw InvalidRangeError("residue arithmetic across moduli " +
                              m_.to_string() + " and " + o.m_.to_string());
  }

  std::uint64_t v_;
  PrimePower m_;
};

// Embedding of a p-integral rational a/b as a * b^{-1} mod p^n.
inline Residue mod_reduce(const Rational& a, std::uint32_t p,
                          std::uint32_t n) {
  const PrimePower m = PrimePower::make(p, n);
  const std::uint64_t den = a.den_mod(m.modulus);
  if (den % p == 0)
    throw NonInvertibleDenominatorError("denominator of " + a.to_string() +
                                        " is divisible by " +
                                        std::to_string(p));
  return Residue(a.num_mod(m.modulus), m) * Residue(den, m).inverse();
}

inline Residue mod_reduce(const Rational& a, PrimePower m) {
  return mod_reduce(a, m.p, m.n);
}

// Per-(p,n) context for harmonic-sum loops: inverses of 1..p-1 mod p^n,
// built once.  Immutable after construction.
struct ModContext {
  PrimePower m;
  std::vector<std::uint64_t> inv;  // inv[a] for 1 <= a <= p-1

  explicit ModContext(PrimePower mm) : m(mm), inv(m.p, 0) {
    for (std::uint32_t a = 1; a < m.p; ++a)
      inv[a] = Residue(a, m).inverse().value();
  }
  ModContext(std::uint32_t p, std::uint32_t n)
      : ModContext(PrimePower::make(p, n)) {}

  Residue residue(std::uint64_t v) const { return Residue(v, m); }
  Residue zero() const { return Residue(0, m); }
  Residue one() const { return Residue(1, m); }

  // m^{-k} mod p^n for 1 <= m <= p-1, k >= 0.
  Residue inv_pow(std::uint32_t a, std::uint64_t k) const {
    return Residue(inv[a], m).pow(k);
  }
};

}  // namespace mhsum
