#pragma once

// Truncated power series in one indeterminate x over Rational.  The
// order E is fixed per value; arithmetic is exact through x^E and every
// binary operation requires equal orders (OrderMismatch otherwise).

#include <string>
#include <utility>
#include <vector>

#include "mhsum/errors.hpp"
#include "mhsum/rational.hpp"

namespace mhsum {

class TruncatedSeries {
 public:
  // The zero series of the given order.
  explicit TruncatedSeries(int order) : c_(check_order(order) + 1) {}

  TruncatedSeries(int order, Rational constant)
      : TruncatedSeries(order) {
    c_[0] = std::move(constant);
  }

  // order = coeffs.size() - 1.
  static TruncatedSeries from_coeffs(std::vector<Rational> coeffs) {
    if (coeffs.empty())
      throw InvalidRangeError("series needs at least the constant term");
    TruncatedSeries s(static_cast<int>(coeffs.size()) - 1);
    s.c_ = std::move(coeffs);
    return s;
  }

  int order() const { return static_cast<int>(c_.size()) - 1; }

  const Rational& coeff(int e) const {
    if (e < 0 || e > order())
      throw InvalidRangeError("series coefficient index out of range");
    return c_[static_cast<size_t>(e)];
  }

  void set_coeff(int e, Rational v) {
    if (e < 0 || e > order())
      throw InvalidRangeError("series coefficient index out of range");
    c_[static_cast<size_t>(e)] = std::move(v);
  }

  TruncatedSeries& operator+=(const TruncatedSeries& o) {
    require_same_order(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
    return *this;
  }
  TruncatedSeries& operator-=(const TruncatedSeries& o) {
    require_same_order(o);
    for (size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
    return *this;
  }
  TruncatedSeries& operator*=(const TruncatedSeries& o) {
    *this = *this * o;
    return *this;
  }

  friend TruncatedSeries operator+(TruncatedSeries a,
                                   const TruncatedSeries& b) {
    return a += b;
  }
  friend TruncatedSeries operator-(TruncatedSeries a,
                                   const TruncatedSeries& b) {
    return a -= b;
  }

  // Exact Cauchy product truncated at the common order.
  friend TruncatedSeries operator*(const TruncatedSeries& a,
                                   const TruncatedSeries& b) {
    a.require_same_order(b);
    TruncatedSeries r(a.order());
    for (size_t i = 0; i < a.c_.size(); ++i) {
      if (a.c_[i].is_zero()) continue;
      for (size_t j = 0; i + j < a.c_.size(); ++j)
        r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    return r;
  }

  TruncatedSeries scaled(const Rational& s) const {
    TruncatedSeries r(*this);
    r.scale(s);
    return r;
  }

  TruncatedSeries& scale(const Rational& s) {
    for (auto& c : c_) c *= s;
    return *this;
  }
  friend TruncatedSeries operator*(TruncatedSeries a, const Rational& s) {
    return a.scale(s);
  }
  friend TruncatedSeries operator*(const Rational& s, TruncatedSeries a) {
    return a.scale(s);
  }

  TruncatedSeries operator-() const {
    TruncatedSeries r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
  }

  // Multiplicative inverse through order E; requires nonzero constant
  // term.  b_0 = 1/a_0, b_k = -(sum_{j=1..k} a_j b_{k-j}) / a_0.
  TruncatedSeries inverse() const {
    if (c_[0].is_zero())
      throw NotInvertibleError("series with zero constant term");
    TruncatedSeries r(order());
    const Rational inv0 = c_[0].inverse();
    r.c_[0] = inv0;
    for (size_t k = 1; k < c_.size(); ++k) {
      Rational acc;
      for (size_t j = 1; j <= k; ++j) acc += c_[j] * r.c_[k - j];
      r.c_[k] = -acc * inv0;
    }
    return r;
  }

  // Integer power; negative exponents invert first.
  TruncatedSeries pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    TruncatedSeries acc(order(), Rational(1));
    TruncatedSeries base(*this);
    for (; e > 0; e >>= 1) {
      if (e & 1) acc = acc * base;
      if (e > 1) base = base * base;
    }
    return acc;
  }

  friend bool operator==(const TruncatedSeries& a,
                         const TruncatedSeries& b) {
    return a.c_ == b.c_;
  }

  // First exponent where the two series differ, or -1 if equal.
  int first_mismatch(const TruncatedSeries& o) const {
    require_same_order(o);
    for (size_t i = 0; i < c_.size(); ++i)
      if (!(c_[i] == o.c_[i])) return static_cast<int>(i);
    return -1;
  }

  // "[c0, c1, ..., cE]" with coefficients as num/den.
  std::string to_string() const {
    std::string out = "[";
    for (size_t i = 0; i < c_.size(); ++i) {
      if (i) out += ", ";
      out += c_[i].to_string();
    }
    out += ']';
    return out;
  }

 private:
  static int check_order(int order) {
    if (order < 0) throw InvalidRangeError("series order must be >= 0");
    return order;
  }

  void require_same_order(const TruncatedSeries& o) const {
    if (c_.size() != o.c_.size())
      throw OrderMismatchError("series orders differ: " +
                               std::to_string(order()) + " vs " +
                               std::to_string(o.order()));
  }

  std::vector<Rational> c_;
};

inline TruncatedSeries series_mul(const TruncatedSeries& a,
                                  const TruncatedSeries& b) {
  return a * b;
}

inline TruncatedSeries series_inv(const TruncatedSeries& a) {
  return a.inverse();
}

}  // namespace mhsum
