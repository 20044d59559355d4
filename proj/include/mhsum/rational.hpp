#pragma once

// Arbitrary-precision exact rationals on top of GMP's mpq layer.  Values
// are canonical at all times: reduced to lowest terms, denominator > 0,
// zero is 0/1.  No floating-point conversion is provided anywhere.

#include <gmp.h>

#include <compare>
#include <cstdint>
#include <string>
#include <utility>

#include "mhsum/errors.hpp"

namespace mhsum {

class Rational {
 public:
  Rational() { mpq_init(v_); }

  Rational(long n) : Rational() { mpq_set_si(v_, n, 1); }  // NOLINT: implicit

  Rational(long num, long den) : Rational() {
    if (den == 0) throw NotInvertibleError("rational with zero denominator");
    mpz_set_si(mpq_numref(v_), num);
    mpz_set_si(mpq_denref(v_), den);
    if (mpz_sgn(mpq_denref(v_)) < 0) {
      mpz_neg(mpq_numref(v_), mpq_numref(v_));
      mpz_neg(mpq_denref(v_), mpq_denref(v_));
    }
    mpq_canonicalize(v_);
  }

  Rational(const Rational& o) : Rational() { mpq_set(v_, o.v_); }
  Rational(Rational&& o) noexcept : Rational() { mpq_swap(v_, o.v_); }

  Rational& operator=(const Rational& o) {
    if (this != &o) mpq_set(v_, o.v_);
    return *this;
  }
  Rational& operator=(Rational&& o) noexcept {
    mpq_swap(v_, o.v_);
    return *this;
  }

  ~Rational() { mpq_clear(v_); }

  // Accepts "num", "num/den", optional leading minus, base 10.
  static Rational from_string(const std::string& s) {
    Rational r;
    if (s.empty() || mpq_set_str(r.v_, s.c_str(), 10) != 0)
      throw InvalidRangeError("unparsable rational literal: '" + s + "'");
    if (mpz_sgn(mpq_denref(r.v_)) == 0)
      throw NotInvertibleError("rational with zero denominator: '" + s + "'");
    mpq_canonicalize(r.v_);
    return r;
  }

  static Rational from_mpz(mpz_srcptr z) {
    Rational r;
    mpq_set_z(r.v_, z);
    return r;
  }

  bool is_zero() const { return mpq_sgn(v_) == 0; }
  int sign() const { return mpq_sgn(v_); }

  // True iff the value is an integer (denominator 1).
  bool is_integer() const { return mpz_cmp_ui(mpq_denref(v_), 1) == 0; }

  Rational& operator+=(const Rational& o) {
    mpq_add(v_, v_, o.v_);
    return *this;
  }
  Rational& operator-=(const Rational& o) {
    mpq_sub(v_, v_, o.v_);
    return *this;
  }
  Rational& operator*=(const Rational& o) {
    mpq_mul(v_, v_, o.v_);
    return *this;
  }
  Rational& operator/=(const Rational& o) {
    if (o.is_zero()) throw NotInvertibleError("division of rational by zero");
    mpq_div(v_, v_, o.v_);
    return *this;
  }

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }

  Rational operator-() const {
    Rational r;
    mpq_neg(r.v_, v_);
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) {
    return mpq_equal(a.v_, b.v_) != 0;
  }
  friend std::strong_ordering operator<=>(const Rational& a,
                                          const Rational& b) {
    const int c = mpq_cmp(a.v_, b.v_);
    return c < 0    ? std::strong_ordering::less
           : c == 0 ? std::strong_ordering::equal
                    : std::strong_ordering::greater;
  }

  // Integer exponent; negative exponents require a nonzero base.
  Rational pow(long e) const {
    if (e < 0) {
      if (is_zero()) throw NotInvertibleError("0 raised to a negative power");
      return inverse().pow(-e);
    }
    Rational r;
    mpz_pow_ui(mpq_numref(r.v_), mpq_numref(v_),
               static_cast<unsigned long>(e));
    mpz_pow_ui(mpq_denref(r.v_), mpq_denref(v_),
               static_cast<unsigned long>(e));
    return r;  // canonical: powering preserves coprimality and den sign
  }

  Rational inverse() const {
    if (is_zero()) throw NotInvertibleError("inverse of zero rational");
    Rational r;
    mpq_inv(r.v_, v_);
    return r;
  }

  // Always "num/den", e.g. "25/12", "0/1", "-7/4".
  std::string to_string() const {
    std::string out = mpz_string(mpq_numref(v_));
    out += '/';
    out += mpz_string(mpq_denref(v_));
    return out;
  }

  // Non-negative remainder of the numerator / denominator modulo m.
  std::uint64_t num_mod(std::uint64_t m) const {
    return mpz_fdiv_ui(mpq_numref(v_), m);
  }
  std::uint64_t den_mod(std::uint64_t m) const {
    return mpz_fdiv_ui(mpq_denref(v_), m);
  }

  // The value as an unsigned 64-bit integer; requires denominator 1.
  std::uint64_t to_u64() const {
    if (!is_integer() || sign() < 0 || !mpz_fits_ulong_p(mpq_numref(v_)))
      throw InvalidRangeError("rational " + to_string() +
                              " is not an unsigned 64-bit integer");
    return mpz_get_ui(mpq_numref(v_));
  }

  long to_long() const {
    if (!is_integer() || !mpz_fits_slong_p(mpq_numref(v_)))
      throw InvalidRangeError("rational " + to_string() +
                              " is not a signed machine integer");
    return mpz_get_si(mpq_numref(v_));
  }

 private:
  static std::string mpz_string(mpz_srcptr z) {
    char* raw = mpz_get_str(nullptr, 10, z);
    std::string s(raw);
    void (*freefn)(void*, size_t);
    mp_get_memory_functions(nullptr, nullptr, &freefn);
    freefn(raw, s.size() + 1);
    return s;
  }

  mpq_t v_;
};

// Binomial coefficient by the falling factorial n(n-1)...(n-m+1)/m!,
// valid for any integer n (including negative) and m >= 0.  Always an
// integer; returned as Rational for composability with exact sums.
inline Rational binomial(long n, unsigned long m) {
  mpz_t z, nn;
  mpz_init(z);
  mpz_init_set_si(nn, n);
  mpz_bin_ui(z, nn, m);
  Rational r = Rational::from_mpz(z);
  mpz_clear(nn);
  mpz_clear(z);
  return r;
}

inline Rational factorial(unsigned long n) {
  mpz_t z;
  mpz_init(z);
  mpz_fac_ui(z, n);
  Rational r = Rational::from_mpz(z);
  mpz_clear(z);
  return r;
}

}  // namespace mhsum
