#pragma once

// Dense polynomials in q over Rational, and quotients of them, used by
// the symbolic verification route that checks the q-identities as
// rational functions rather than at sample points.  Sizes stay small
// (the symbolic route is capped at N <= 4, wt <= 4), so the quotient
// field normalizes eagerly via the Euclidean gcd.

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "mhsum/errors.hpp"
#include "mhsum/rational.hpp"

namespace mhsum {

class QPoly {
 public:
  QPoly() = default;  // zero polynomial

  explicit QPoly(Rational constant) {
    if (!constant.is_zero()) c_.push_back(std::move(constant));
  }

  static QPoly from_coeffs(std::vector<Rational> coeffs) {
    QPoly p;
    p.c_ = std::move(coeffs);
    p.trim();
    return p;
  }

  // The indeterminate q.
  static QPoly variable() {
    return from_coeffs({Rational(0), Rational(1)});
  }

  bool is_zero() const { return c_.empty(); }
  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 if 0

  const Rational& coeff(int i) const {
    static const Rational kZero;
    if (i < 0 || i > degree()) return kZero;
    return c_[static_cast<size_t>(i)];
  }

  const Rational& leading() const {
    if (is_zero()) throw InvalidRangeError("leading coeff of zero poly");
    return c_.back();
  }

  friend QPoly operator+(const QPoly& a, const QPoly& b) {
    std::vector<Rational> c(std::max(a.c_.size(), b.c_.size()));
    for (size_t i = 0; i < c.size(); ++i) {
      if (i < a.c_.size()) c[i] += a.c_[i];
      if (i < b.c_.size()) c[i] += b.c_[i];
    }
    return from_coeffs(std::move(c));
  }

  friend QPoly operator-(const QPoly& a, const QPoly& b) {
    return a + (-b);
  }

  QPoly operator-() const {
    QPoly r(*this);
    for (auto& c : r.c_) c = -c;
    return r;
  }

  friend QPoly operator*(const QPoly& a, const QPoly& b) {
    if (a.is_zero() || b.is_zero()) return QPoly();
    std::vector<Rational> c(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j)
        c[i + j] += a.c_[i] * b.c_[j];
    return from_coeffs(std::move(c));
  }

  QPoly& operator+=(const QPoly& o) { return *this = *this + o; }
  QPoly& operator-=(const QPoly& o) { return *this = *this - o; }
  QPoly& operator*=(const QPoly& o) { return *this = *this * o; }

  QPoly scaled(const Rational& s) const {
    if (s.is_zero()) return QPoly();
    QPoly r(*this);
    for (auto& c : r.c_) c *= s;
    return r;
  }

  // Quotient and remainder over the rational field.
  static std::pair<QPoly, QPoly> divmod(const QPoly& a, const QPoly& b) {
    if (b.is_zero()) throw NotInvertibleError("polynomial division by zero");
    QPoly rem = a, quot;
    quot.c_.assign(
        a.degree() >= b.degree()
            ? static_cast<size_t>(a.degree() - b.degree()) + 1
            : 0,
        Rational(0));
    const Rational lead_inv = b.leading().inverse();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
      const int shift = rem.degree() - b.degree();
      const Rational f = rem.leading() * lead_inv;
      quot.c_[static_cast<size_t>(shift)] = f;
      for (size_t i = 0; i < b.c_.size(); ++i)
        rem.c_[static_cast<size_t>(shift) + i] -= f * b.c_[i];
      rem.trim();
    }
    quot.trim();
    return {std::move(quot), std::move(rem)};
  }

  // Monic gcd by the Euclidean algorithm; gcd(0,0) = 0.
  static QPoly gcd(QPoly a, QPoly b) {
    while (!b.is_zero()) {
      QPoly r = divmod(a, b).second;
      a = std::move(b);
      b = std::move(r);
    }
    if (!a.is_zero()) a = a.scaled(a.leading().inverse());
    return a;
  }

  Rational eval(const Rational& x) const {
    Rational acc;
    for (size_t i = c_.size(); i-- > 0;) acc = acc * x + c_[i];
    return acc;
  }

  friend bool operator==(const QPoly& a, const QPoly& b) {
    return a.c_ == b.c_;
  }

  std::string to_string() const {
    if (is_zero()) return "0";
    std::string out;
    for (size_t i = 0; i < c_.size(); ++i) {
      if (c_[i].is_zero()) continue;
      if (!out.empty()) out += " + ";
      out += c_[i].to_string();
      if (i > 0) out += "*q^" + std::to_string(i);
    }
    return out;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }

  std::vector<Rational> c_;
};

// num/den in lowest terms with monic denominator; den is never zero.
class QRatFun {
 public:
  QRatFun() : num_(), den_(Rational(1)) {}

  QRatFun(Rational constant)  // NOLINT: implicit
      : num_(std::move(constant)), den_(Rational(1)) {}

  QRatFun(QPoly num, QPoly den) {
    if (den.is_zero())
      throw NotInvertibleError("rational function with zero denominator");
    const QPoly g = QPoly::gcd(num, den);
    if (!g.is_zero()) {
      num = QPoly::divmod(num, g).first;
      den = QPoly::divmod(den, g).first;
    }
    const Rational lead_inv = den.leading().inverse();
    num_ = num.scaled(lead_inv);
    den_ = den.scaled(lead_inv);
  }

  static QRatFun variable() { return QRatFun(QPoly::variable(), QPoly(Rational(1))); }

  const QPoly& num() const { return num_; }
  const QPoly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  friend QRatFun operator+(const QRatFun& a, const QRatFun& b) {
    return QRatFun(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
  }
  friend QRatFun operator-(const QRatFun& a, const QRatFun& b) {
    return QRatFun(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
  }
  friend QRatFun operator*(const QRatFun& a, const QRatFun& b) {
    return QRatFun(a.num_ * b.num_, a.den_ * b.den_);
  }
  friend QRatFun operator/(const QRatFun& a, const QRatFun& b) {
    if (b.is_zero())
      throw NotInvertibleError("division of rational function by zero");
    return QRatFun(a.num_ * b.den_, a.den_ * b.num_);
  }

  QRatFun operator-() const {
    QRatFun r(*this);
    r.num_ = -r.num_;
    return r;
  }

  QRatFun& operator+=(const QRatFun& o) { return *this = *this + o; }
  QRatFun& operator-=(const QRatFun& o) { return *this = *this - o; }
  QRatFun& operator*=(const QRatFun& o) { return *this = *this * o; }
  QRatFun& operator/=(const QRatFun& o) { return *this = *this / o; }

  QRatFun inverse() const {
    if (is_zero()) throw NotInvertibleError("inverse of zero rational function");
    return QRatFun(den_, num_);
  }

  QRatFun pow(long e) const {
    if (e < 0) return inverse().pow(-e);
    QRatFun acc{Rational(1)};
    QRatFun base(*this);
    for (; e > 0; e >>= 1) {
      if (e & 1) acc *= base;
      if (e > 1) base *= base;
    }
    return acc;
  }

  // Canonical form makes structural equality the right test.
  friend bool operator==(const QRatFun& a, const QRatFun& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }

  Rational eval(const Rational& x) const {
    const Rational d = den_.eval(x);
    if (d.is_zero())
      throw NotInvertibleError("rational function has a pole at " +
                               x.to_string());
    return num_.eval(x) / d;
  }

  std::string to_string() const {
    return "(" + num_.to_string() + ") / (" + den_.to_string() + ")";
  }

 private:
  QPoly num_, den_;
};

}  // namespace mhsum
