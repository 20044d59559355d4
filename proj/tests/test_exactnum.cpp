#include <catch2/catch_amalgamated.hpp>

#include "mhsum/bernoulli.hpp"
#include "mhsum/qpoly.hpp"
#include "mhsum/rational.hpp"
#include "mhsum/residue.hpp"
#include "mhsum/series.hpp"

using namespace mhsum;

TEST_CASE("rationals normalize and print canonically") {
  CHECK(Rational(2, 4) == Rational(1, 2));
  CHECK(Rational(-3, -6) == Rational(1, 2));
  CHECK(Rational(3, -6) == Rational(-1, 2));
  CHECK(Rational(3).to_string() == "3/1");
  CHECK(Rational(-7, 3).to_string() == "-7/3");
  CHECK(Rational().to_string() == "0/1");
  CHECK_THROWS_AS(Rational(1, 0), NotInvertibleError);
}

TEST_CASE("rational parsing round-trips and rejects junk") {
  for (const char* s : {"0/1", "1/2", "-22/7", "5/1"}) {
    CHECK(Rational::from_string(s).to_string() == s);
  }
  CHECK(Rational::from_string("3") == Rational(3));
  CHECK(Rational::from_string("6/4") == Rational(3, 2));
  CHECK_THROWS_AS(Rational::from_string("x"), Error);
  CHECK_THROWS_AS(Rational::from_string("1/0"), Error);
  CHECK_THROWS_AS(Rational::from_string(""), Error);
}

TEST_CASE("rational arithmetic, powers and inversion") {
  const Rational a(3, 4), b(-2, 5);
  CHECK(a + b == Rational(7, 20));
  CHECK(a * b == Rational(-3, 10));
  CHECK(a / b == Rational(-15, 8));
  CHECK(a - a == Rational(0));
  CHECK(a.pow(3) == Rational(27, 64));
  CHECK(a.pow(0) == Rational(1));
  CHECK(a.pow(-2) == Rational(16, 9));
  CHECK(Rational(0).pow(0) == Rational(1));
  CHECK_THROWS_AS(Rational(0).inverse(), NotInvertibleError);
  CHECK_THROWS_AS(Rational(0).pow(-1), NotInvertibleError);
  CHECK(Rational(1, 3) < Rational(1, 2));
  CHECK(Rational(-1).sign() == -1);
}

TEST_CASE("falling-factorial binomial handles negative upper arguments") {
  CHECK(binomial(5, 2) == Rational(10));
  CHECK(binomial(0, 0) == Rational(1));
  CHECK(binomial(3, 5) == Rational(0));
  CHECK(binomial(-1, 0) == Rational(1));
  CHECK(binomial(-1, 1) == Rational(-1));
  CHECK(binomial(-1, 2) == Rational(1));
  CHECK(binomial(-2, 2) == Rational(3));
  CHECK(binomial(-3, 3) == Rational(-10));
  CHECK(factorial(0) == Rational(1));
  CHECK(factorial(6) == Rational(720));
}

TEST_CASE("binomial matches Pascal recurrence on a grid") {
  for (long n = 1; n <= 12; ++n)
    for (unsigned long m = 1; m <= 12; ++m)
      CHECK(binomial(n, m) == binomial(n - 1, m - 1) + binomial(n - 1, m));
}

TEST_CASE("prime powers validate their arguments") {
  CHECK(PrimePower::make(5, 2).modulus == 25);
  CHECK(PrimePower::make(7, 3).modulus == 343);
  CHECK(PrimePower::make(5, 1).to_string() == "5");
  CHECK(PrimePower::make(5, 2).to_string() == "5^2");
  CHECK_THROWS_AS(PrimePower::make(6, 1), InvalidRangeError);
  CHECK_THROWS_AS(PrimePower::make(5, 0), InvalidRangeError);
  CHECK_THROWS_AS(PrimePower::make(5, 4), InvalidRangeError);
  CHECK(PrimePower::is_prime(2));
  CHECK(PrimePower::is_prime(97));
  CHECK_FALSE(PrimePower::is_prime(1));
  CHECK_FALSE(PrimePower::is_prime(91));
}

TEST_CASE("residue inverses agree with brute force") {
  const PrimePower m = PrimePower::make(13, 1);
  for (std::uint64_t v = 1; v < 13; ++v) {
    const Residue inv = Residue(v, m).inverse();
    std::uint64_t brute = 0;
    for (std::uint64_t w = 1; w < 13; ++w)
      if (v * w % 13 == 1) brute = w;
    CHECK(inv.value() == brute);
  }
  const PrimePower m2 = PrimePower::make(7, 2);
  for (std::uint64_t v = 1; v < 49; ++v) {
    if (v % 7 == 0) {
      CHECK_THROWS_AS(Residue(v, m2).inverse(), NonInvertibleDenominatorError);
    } else {
      CHECK((Residue(v, m2).inverse() * Residue(v, m2)).value() == 1);
    }
  }
}

TEST_CASE("residue arithmetic basics") {
  const PrimePower m = PrimePower::make(5, 2);
  CHECK(Residue::from_int(-3, m).value() == 22);
  CHECK((Residue(20, m) + Residue(10, m)).value() == 5);
  CHECK((Residue(3, m) - Residue(7, m)).value() == 21);
  CHECK((-Residue(0, m)).value() == 0);
  CHECK((-Residue(4, m)).value() == 21);
  CHECK(Residue(2, m).pow(10).value() == 1024 % 25);
  CHECK(Residue(22, m).to_string() == "22 mod 5^2");
  const PrimePower other = PrimePower::make(7, 1);
  CHECK_THROWS_AS(Residue(1, m) + Residue(1, other), InvalidRangeError);
}

TEST_CASE("rationals embed into Z/p^n via modular inverse") {
  // 5/9 mod 25: inverse of 9 is 14 (9*14 = 126 = 1 + 5*25), so 5*14 = 70 = 20.
  CHECK(mod_reduce(Rational(5, 9), 5, 2).value() == 20);
  CHECK(mod_reduce(Rational(-1, 2), 7, 1).value() == 3);
  CHECK(mod_reduce(Rational(22), 5, 2).value() == 22);
  CHECK_THROWS_AS(mod_reduce(Rational(1, 5), 5, 2),
                  NonInvertibleDenominatorError);
  CHECK_THROWS_AS(mod_reduce(Rational(3, 10), 5, 1),
                  NonInvertibleDenominatorError);
}

TEST_CASE("mod context tabulates inverses once") {
  const ModContext ctx(11, 2);
  for (std::uint32_t a = 1; a < 11; ++a) {
    CHECK(ctx.inv[a] == Residue(a, ctx.m).inverse().value());
    CHECK((ctx.inv_pow(a, 3) * ctx.residue(a).pow(3)).value() == 1);
  }
  CHECK(ctx.inv_pow(2, 0).value() == 1);
  CHECK(ctx.zero().value() == 0);
  CHECK(ctx.one().value() == 1);
}

namespace {
// Independent construction: B_j = sum_{m=0}^{j} 1/(m+1) *
// sum_{v=0}^{m} (-1)^v C(m,v) (v+1)^j, which lands on the B_1 = +1/2
// convention.  Completely different shape from the table's recurrence.
Rational bernoulli_double_sum(int j) {
  Rational total;
  for (int m = 0; m <= j; ++m) {
    Rational inner;
    for (int v = 0; v <= m; ++v) {
      const Rational term =
          binomial(m, static_cast<unsigned long>(v)) * Rational(v + 1).pow(j);
      inner += (v % 2 == 0) ? term : -term;
    }
    total += inner / Rational(m + 1);
  }
  return total;
}
}  // namespace

TEST_CASE("Bernoulli table matches the double-sum construction") {
  const BernoulliTable table(14);
  for (int j = 0; j <= 14; ++j) CHECK(table.at(j) == bernoulli_double_sum(j));
  CHECK(table.at(0) == Rational(1));
  CHECK(table.at(1) == Rational(1, 2));
  CHECK(table.at(2) == Rational(1, 6));
  CHECK(table.at(4) == Rational(-1, 30));
  CHECK(table.at(12) == Rational(-691, 2730));
  for (int j = 3; j <= 13; j += 2) CHECK(table.at(j) == Rational(0));
  CHECK_THROWS_AS(table.at(15), InvalidRangeError);
  CHECK_THROWS_AS(table.at(-1), InvalidRangeError);
}

TEST_CASE("Bernoulli residues hit the von Staudt-Clausen wall exactly") {
  const BernoulliTable table(12);
  // B_4 = -1/30 is fine mod 7 but its denominator kills p = 5 (4 = p - 1).
  CHECK(bernoulli_residue(table, 4, 7, 1).value() ==
        mod_reduce(Rational(-1, 30), 7, 1).value());
  CHECK_THROWS_AS(bernoulli_residue(table, 4, 5, 1),
                  NonInvertibleDenominatorError);
  CHECK_THROWS_AS(bernoulli_residue(table, 12, 7, 2),
                  NonInvertibleDenominatorError);
  CHECK(bernoulli_residue(table, 10, 5, 2).value() ==
        mod_reduce(Rational(5, 66), 5, 2).value());
}

TEST_CASE("rational functions of q reduce to canonical form") {
  const QRatFun q = QRatFun::variable();
  const QRatFun one(Rational(1));
  // (q^2 - 1)/(q - 1) == q + 1 must hold structurally, not just numerically.
  CHECK((q * q - one) / (q - one) == q + one);
  CHECK((q - q) == QRatFun(Rational(0)));
  CHECK(-(-q) == q);
  const QRatFun f = (q + one) / (q * q + q);  // = 1/q
  CHECK(f * q == one);
  CHECK(f == q.inverse());
  CHECK(f.eval(Rational(1, 2)) == Rational(2));
  CHECK_THROWS_AS(QRatFun(Rational(0)).inverse(), NotInvertibleError);
  CHECK(q.pow(-2) * q.pow(2) == one);
  CHECK(q.pow(0) == one);
}

TEST_CASE("rational function evaluation commutes with arithmetic") {
  const QRatFun q = QRatFun::variable();
  const QRatFun f = (q * q + QRatFun(Rational(3))) / (q - QRatFun(Rational(2)));
  const QRatFun g = q.inverse() + q;
  const Rational at(1, 3);
  CHECK((f + g).eval(at) == f.eval(at) + g.eval(at));
  CHECK((f * g).eval(at) == f.eval(at) * g.eval(at));
  CHECK((f / g).eval(at) == f.eval(at) / g.eval(at));
}

TEST_CASE("truncated series multiply by Cauchy convolution") {
  // order 3 = coefficients of x^0..x^3
  TruncatedSeries a(3), b(3);
  // a = 1 + 2x + 3x^2 + 4x^3, b = 1 - x
  for (int i = 0; i <= 3; ++i) a.set_coeff(i, Rational(i + 1));
  b.set_coeff(0, Rational(1));
  b.set_coeff(1, Rational(-1));
  const TruncatedSeries c = a * b;
  CHECK(c.order() == 3);
  CHECK(c.coeff(0) == Rational(1));
  CHECK(c.coeff(1) == Rational(1));
  CHECK(c.coeff(2) == Rational(1));
  CHECK(c.coeff(3) == Rational(1));
  CHECK_THROWS_AS(c.coeff(4), InvalidRangeError);
  CHECK_THROWS_AS(c.coeff(-1), InvalidRangeError);
  TruncatedSeries other(2);
  CHECK_THROWS_AS(a * other, OrderMismatchError);
}

TEST_CASE("series inversion is exact to the truncation order") {
  TruncatedSeries s(6, Rational(2));
  s.set_coeff(1, Rational(1, 3));
  s.set_coeff(4, Rational(-5));
  const TruncatedSeries inv = s.inverse();
  const TruncatedSeries prod = s * inv;
  CHECK(prod.coeff(0) == Rational(1));
  for (int i = 1; i <= 6; ++i) CHECK(prod.coeff(i) == Rational(0));
  CHECK(s.pow(-2) == inv * inv);
  CHECK(s.pow(0) == TruncatedSeries(6, Rational(1)));
  TruncatedSeries zero_const(3);
  zero_const.set_coeff(1, Rational(1));
  CHECK_THROWS_AS(zero_const.inverse(), NotInvertibleError);
}

TEST_CASE("series comparison reports the first mismatching coefficient") {
  TruncatedSeries a(2, Rational(1)), b(2, Rational(1));
  b.set_coeff(2, Rational(7));
  CHECK(a != b);
  CHECK(a.first_mismatch(b) == 2);
  CHECK(a.first_mismatch(a) == -1);
  CHECK(a.to_string() == "[1/1, 0/1, 0/1]");
  CHECK((a - a) == TruncatedSeries(2));
  CHECK(a.scaled(Rational(3, 2)).coeff(0) == Rational(3, 2));
}
