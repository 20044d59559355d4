#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mhsum/errors.hpp"
#include "mhsum/index.hpp"
#include "mhsum/qpoly.hpp"
#include "mhsum/rational.hpp"
#include "mhsum/report.hpp"

namespace mhsum {

// Evaluation point for the q-deformed sums.  The admissible range is
// 0 < q <= 1; the right endpoint recovers the classical sums because every
// q-integer below is computed as a geometric sum rather than a quotient.
struct QPoint {
  Rational value;

  explicit QPoint(Rational v) : value(std::move(v)) {
    if (value.sign() <= 0 || Rational(1) < value)
      throw InvalidRangeError("q must lie in (0, 1], got " + value.to_string());
  }

  static QPoint parse(const std::string& s) { return QPoint(Rational::from_string(s)); }

  std::string to_string() const { return value.to_string(); }
};

// --- q-arithmetic primitives -----------------------------------------------
//
// [m]_q = 1 + q + ... + q^{m-1}; the geometric-sum form keeps q = 1 in the
// domain.  Negative arguments follow [m] = -q^m [-m].

inline Rational q_int(long m, const Rational& q) {
  if (m < 0) return -(q.pow(m) * q_int(-m, q));
  Rational acc(0), pw(1);
  for (long i = 0; i < m; ++i) {
    acc += pw;
    pw *= q;
  }
  return acc;
}

inline Rational q_factorial(long m, const Rational& q) {
  if (m < 0) throw InvalidRangeError("q-factorial needs m >= 0");
  Rational acc(1);
  for (long i = 1; i <= m; ++i) acc *= q_int(i, q);
  return acc;
}

inline Rational q_binom(long n, long m, const Rational& q) {
  if (m < 0 || n < 0 || m > n) return Rational(0);
  return q_factorial(n, q) / (q_factorial(m, q) * q_factorial(n - m, q));
}

// --- shared summation kernel ------------------------------------------------
//
// Sums prod_i w(i, m_i) * tail(m_r) over chains 1 <= m_1 <= ... <= m_r <= N
// (strict chains when strict = true) by prefix accumulation: O(r N) weight
// evaluations instead of an r-fold loop.

template <class F, class WeightFn, class TailFn>
F chain_sum(int r, int N, bool strict, const WeightFn& w, const TailFn& tail, const F& zero) {
  if (r < 1 || N < 0) throw InvalidRangeError("chain_sum needs r >= 1, N >= 0");
  std::vector<F> acc(static_cast<size_t>(N) + 1, zero);
  for (int m = 1; m <= N; ++m) acc[m] = w(0, m);
  for (int i = 1; i < r; ++i) {
    std::vector<F> next(static_cast<size_t>(N) + 1, zero);
    F prefix = zero;
    for (int m = 1; m <= N; ++m) {
      if (strict) {
        next[m] = w(i, m) * prefix;
        prefix += acc[m];
      } else {
        prefix += acc[m];
        next[m] = w(i, m) * prefix;
      }
    }
    acc = std::move(next);
  }
  F total = zero;
  for (int m = 1; m <= N; ++m) total += acc[m] * tail(m);
  return total;
}

// Per-(q, N) tables shared by the q-sum evaluators.  F is any field type
// constructible from Rational with +, -, *, pow, inverse (Rational itself, or
// QRatFun for the symbolic route).
template <class F>
struct QEval {
  F q;
  int N;
  std::vector<F> qint;      // [m] for 0 <= m <= N
  std::vector<F> qint_inv;  // 1/[m] for 1 <= m <= N (slot 0 unused)
  std::vector<F> qfact;     // [m]! for 0 <= m <= N

  QEval(F qval, int n) : q(std::move(qval)), N(n) {
    if (N < 0) throw InvalidRangeError("QEval needs N >= 0");
    qint.reserve(N + 1);
    qint_inv.reserve(N + 1);
    qfact.reserve(N + 1);
    F cur{Rational(0)}, pw{Rational(1)};
    qint.push_back(cur);
    qint_inv.push_back(cur);
    qfact.push_back(pw);
    for (int m = 1; m <= N; ++m) {
      cur += pw;
      pw = pw * q;
      qint.push_back(cur);
      qint_inv.push_back(cur.inverse());
      qfact.push_back(qfact.back() * cur);
    }
  }

  F qpow(long e) const { return q.pow(e); }

  F qbinom(int n, int m) const {
    if (m < 0 || m > n) return F{Rational(0)};
    return qfact[n] * (qfact[m] * qfact[n - m]).inverse();
  }
};

// H*_N(k; q): nondecreasing chains weighted by q^{(k_i-1)m_i}/[m_i]^{k_i}
// with the alternating q-binomial bracket attached to the top variable.
template <class F>
F H_star_q_eval(const Index& k, int N, const QEval<F>& ctx) {
  if (k.empty()) throw EmptyIndexError("H* is defined for nonempty indices");
  if (N < 1 || N > ctx.N) throw InvalidRangeError("H* needs 1 <= N <= table size");
  const F zero{Rational(0)};
  auto w = [&](int i, int m) {
    return ctx.qpow(static_cast<long>(k.at(i) - 1) * m) * ctx.qint_inv[m].pow(k.at(i));
  };
  auto tail = [&](int m) {
    F t = ctx.qpow(static_cast<long>(m) * (m + 1) / 2) * ctx.qbinom(N, m);
    return m % 2 == 1 ? t : -t;
  };
  return chain_sum(k.depth(), N, false, w, tail, zero);
}

// z*_N(k; e; q): same chains, weight q^{(e_i+1)m_i}/[m_i]^{k_i+e_i}, no
// bracket.  Passing e = nullptr means the all-zeros shift; z*_N((); q) = 1.
template <class F>
F z_star_q_eval(const Index& k, const ExponentTuple* e, int N, const QEval<F>& ctx) {
  if (e != nullptr && e->depth() != k.depth())
    throw DepthMismatchError("exponent tuple depth must match index depth");
  if (k.empty()) return F{Rational(1)};
  if (N < 1 || N > ctx.N) throw InvalidRangeError("z* needs 1 <= N <= table size");
  const F zero{Rational(0)};
  auto w = [&](int i, int m) {
    const int ei = e ? e->at(i) : 0;
    return ctx.qpow(static_cast<long>(ei + 1) * m) * ctx.qint_inv[m].pow(k.at(i) + ei);
  };
  auto tail = [&](int) { return F{Rational(1)}; };
  return chain_sum(k.depth(), N, false, w, tail, zero);
}

inline Rational H_star_q(const Index& k, int N, const QPoint& q) {
  QEval<Rational> ctx(q.value, N);
  return H_star_q_eval(k, N, ctx);
}

inline Rational z_star_q(const Index& k, const ExponentTuple& e, int N, const QPoint& q) {
  QEval<Rational> ctx(q.value, N);
  return z_star_q_eval(k, &e, N, ctx);
}

inline Rational z_star_q(const Index& k, int N, const QPoint& q) {
  QEval<Rational> ctx(q.value, N);
  return z_star_q_eval(k, nullptr, N, ctx);
}

// --- classical evaluators -----------------------------------------------
//
// Deliberately a separate code path from the q-kernel: plain recursive
// enumeration of chains, so agreement of the q-sums at q = 1 with these is a
// genuine cross-check of two different summation algorithms.

namespace detail {

template <class TermFn>
void for_each_chain(int r, int N, bool strict, const TermFn& f) {
  std::vector<int> m(static_cast<size_t>(r));
  auto rec = [&](auto&& self, int pos, int lo) -> void {
    if (pos == r) {
      f(m);
      return;
    }
    for (int v = lo; v <= N; ++v) {
      m[pos] = v;
      self(self, pos + 1, strict ? v + 1 : v);
    }
  };
  rec(rec, 0, 1);
}

inline Rational chain_term(const Index& k, const std::vector<int>& m) {
  Rational t(1);
  for (size_t i = 0; i < m.size(); ++i) t /= Rational(m[i]).pow(k.at(static_cast<int>(i)));
  return t;
}

}  // namespace detail

// zeta_N(k): strict chains m_1 < ... < m_r <= N of prod m_i^{-k_i}.
inline Rational zeta_N(const Index& k, int N) {
  if (N < 0) throw InvalidRangeError("zeta_N needs N >= 0");
  Rational total(0);
  detail::for_each_chain(k.depth(), N, true,
                         [&](const std::vector<int>& m) { total += detail::chain_term(k, m); });
  return total;
}

// zeta*_N(k): same with non-strict chains.
inline Rational zeta_star_N(const Index& k, int N) {
  if (N < 0) throw InvalidRangeError("zeta_star_N needs N >= 0");
  Rational total(0);
  detail::for_each_chain(k.depth(), N, false,
                         [&](const std::vector<int>& m) { total += detail::chain_term(k, m); });
  return total;
}

// H*_N(k): classical specialization, with the alternating binomial bracket.
inline Rational H_star(const Index& k, int N) {
  if (k.empty()) throw EmptyIndexError("H* is defined for nonempty indices");
  if (N < 1) throw InvalidRangeError("H* needs N >= 1");
  Rational total(0);
  detail::for_each_chain(k.depth(), N, false, [&](const std::vector<int>& m) {
    Rational t = detail::chain_term(k, m);
    const int top = m.back();
    t *= binomial(N, static_cast<unsigned long>(top));
    total += top % 2 == 1 ? t : -t;
  });
  return total;
}

// --- Ohno-type combination ----------------------------------------------
//
// lhs(k, e, N, q)  = sum over nonnegative e-tuples eps of weight e of
//                    b(k; eps) H*_N(k + eps; q)
// rhs(k, e, N, q)  = sum_{j=0}^{e} z*_N({1}^{e-j}; q) *
//                    sum over weight-j tuples e' of z*_N(k^dual; e'; q)

template <class F>
F ohno_lhs_q_eval(const Index& k, int e, int N, const QEval<F>& ctx) {
  if (e < 0) throw InvalidRangeError("Ohno shift must be >= 0");
  F total{Rational(0)};
  for (const ExponentTuple& eps : enum_J(e, k.depth())) {
    const auto c = b_coeff(k, eps);
    if (c == 0) continue;
    total += F{Rational(static_cast<long>(c))} * H_star_q_eval(index_plus(k, eps), N, ctx);
  }
  return total;
}

template <class F>
F ohno_rhs_q_eval(const Index& k, int e, int N, const QEval<F>& ctx) {
  if (e < 0) throw InvalidRangeError("Ohno shift must be >= 0");
  const Index dual = hoffman_dual(k);
  F total{Rational(0)};
  for (int j = 0; j <= e; ++j) {
    F inner{Rational(0)};
    for (const ExponentTuple& ep : enum_J(j, dual.depth()))
      inner += z_star_q_eval(dual, &ep, N, ctx);
    total += z_star_q_eval(ones(e - j), nullptr, N, ctx) * inner;
  }
  return total;
}

inline Rational ohno_lhs_q(const Index& k, int e, int N, const QPoint& q) {
  QEval<Rational> ctx(q.value, N);
  return ohno_lhs_q_eval(k, e, N, ctx);
}

inline Rational ohno_rhs_q(const Index& k, int e, int N, const QPoint& q) {
  QEval<Rational> ctx(q.value, N);
  return ohno_rhs_q_eval(k, e, N, ctx);
}

// Classical Ohno combination over the enumeration-based evaluators.
inline Rational ohno_lhs(const Index& k, int e, int N) {
  if (e < 0) throw InvalidRangeError("Ohno shift must be >= 0");
  Rational total(0);
  for (const ExponentTuple& eps : enum_J(e, k.depth())) {
    const auto c = b_coeff(k, eps);
    if (c == 0) continue;
    total += Rational(static_cast<long>(c)) * H_star(index_plus(k, eps), N);
  }
  return total;
}

inline Rational ohno_rhs(const Index& k, int e, int N) {
  if (e < 0) throw InvalidRangeError("Ohno shift must be >= 0");
  const Index dual = hoffman_dual(k);
  Rational total(0);
  for (int j = 0; j <= e; ++j) {
    Rational inner(0);
    for (const ExponentTuple& ep : enum_J(j, dual.depth()))
      inner += zeta_star_N(index_plus(dual, ep), N);
    total += zeta_star_N(ones(e - j), N) * inner;
  }
  return total;
}

// --- symbolic route ----------------------------------------------------
//
// Same combinators instantiated over rational functions in q, so identities
// are checked as equalities in Q(q) rather than at sampled points.

inline QEval<QRatFun> symbolic_context(int N) { return QEval<QRatFun>(QRatFun::variable(), N); }

inline QRatFun H_star_q_symbolic(const Index& k, int N) {
  auto ctx = symbolic_context(N);
  return H_star_q_eval(k, N, ctx);
}

inline QRatFun z_star_q_symbolic(const Index& k, const ExponentTuple& e, int N) {
  auto ctx = symbolic_context(N);
  return z_star_q_eval(k, &e, N, ctx);
}

inline QRatFun ohno_lhs_q_symbolic(const Index& k, int e, int N) {
  auto ctx = symbolic_context(N);
  return ohno_lhs_q_eval(k, e, N, ctx);
}

inline QRatFun ohno_rhs_q_symbolic(const Index& k, int e, int N) {
  auto ctx = symbolic_context(N);
  return ohno_rhs_q_eval(k, e, N, ctx);
}

// --- single-identity checks ---------------------------------------------

struct IdentityQuery {
  std::string id;
  Index k{};
  int e = 0;
  int N = 1;
  std::optional<Rational> q{};
};

namespace detail {

// Depth-one alternating binomial sums, written as direct loops so they do not
// share code with the general evaluators they are checked against.
inline Rational euler_sum_lhs(int N) {
  Rational total(0);
  for (int m = 1; m <= N; ++m) {
    Rational t = binomial(N, static_cast<unsigned long>(m)) / Rational(m);
    total += m % 2 == 1 ? t : -t;
  }
  return total;
}

inline Rational euler_sum_rhs(int N) {
  Rational total(0);
  for (int n = 1; n <= N; ++n) total += Rational(1, n);
  return total;
}

inline Rational van_hamme_lhs(int N, const Rational& q) {
  Rational total(0);
  for (int m = 1; m <= N; ++m) {
    Rational t = q.pow(static_cast<long>(m) * (m + 1) / 2) * q_binom(N, m, q) / q_int(m, q);
    total += m % 2 == 1 ? t : -t;
  }
  return total;
}

inline Rational van_hamme_rhs(int N, const Rational& q) {
  Rational total(0);
  for (int n = 1; n <= N; ++n) total += q.pow(n) / q_int(n, q);
  return total;
}

}  // namespace detail

inline VerificationReport verify_identity(const IdentityQuery& query) {
  const std::string& id = query.id;
  if (id == "euler") {
    Rational lhs = detail::euler_sum_lhs(query.N);
    Rational rhs = detail::euler_sum_rhs(query.N);
    return report_compare(id, {{"N", std::to_string(query.N)}}, lhs == rhs, lhs.to_string(),
                          rhs.to_string());
  }
  if (id == "van-hamme") {
    if (!query.q) throw ConfigError("van-hamme needs a q value");
    QPoint q(*query.q);
    Rational lhs = detail::van_hamme_lhs(query.N, q.value);
    Rational rhs = detail::van_hamme_rhs(query.N, q.value);
    return report_compare(id, {{"N", std::to_string(query.N)}, {"q", q.to_string()}},
                          lhs == rhs, lhs.to_string(), rhs.to_string());
  }
  if (id == "hoffman") {
    Rational lhs = H_star(query.k, query.N);
    Rational rhs = zeta_star_N(hoffman_dual(query.k), query.N);
    return report_compare(id, {{"k", query.k.to_string()}, {"N", std::to_string(query.N)}},
                          lhs == rhs, lhs.to_string(), rhs.to_string());
  }
  if (id == "bradley") {
    if (!query.q) throw ConfigError("bradley needs a q value");
    QPoint q(*query.q);
    Rational lhs = H_star_q(query.k, query.N, q);
    Rational rhs = z_star_q(hoffman_dual(query.k), query.N, q);
    return report_compare(
        id, {{"k", query.k.to_string()}, {"N", std::to_string(query.N)}, {"q", q.to_string()}},
        lhs == rhs, lhs.to_string(), rhs.to_string());
  }
  if (id == "ohno") {
    Rational lhs = ohno_lhs(query.k, query.e, query.N);
    Rational rhs = ohno_rhs(query.k, query.e, query.N);
    return report_compare(id,
                          {{"k", query.k.to_string()},
                           {"e", std::to_string(query.e)},
                           {"N", std::to_string(query.N)}},
                          lhs == rhs, lhs.to_string(), rhs.to_string());
  }
  if (id == "q-ohno") {
    if (!query.q) throw ConfigError("q-ohno needs a q value");
    QPoint q(*query.q);
    Rational lhs = ohno_lhs_q(query.k, query.e, query.N, q);
    Rational rhs = ohno_rhs_q(query.k, query.e, query.N, q);
    return report_compare(id,
                          {{"k", query.k.to_string()},
                           {"e", std::to_string(query.e)},
                           {"N", std::to_string(query.N)},
                           {"q", q.to_string()}},
                          lhs == rhs, lhs.to_string(), rhs.to_string());
  }
  if (id == "q-ohno-symbolic") {
    QRatFun lhs = ohno_lhs_q_symbolic(query.k, query.e, query.N);
    QRatFun rhs = ohno_rhs_q_symbolic(query.k, query.e, query.N);
    return report_compare(id,
                          {{"k", query.k.to_string()},
                           {"e", std::to_string(query.e)},
                           {"N", std::to_string(query.N)}},
                          lhs == rhs, lhs.to_string(), rhs.to_string());
  }
  throw UnknownIdentityError("unknown identity id: " + id);
}

}  // namespace mhsum
