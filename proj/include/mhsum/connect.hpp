#pragma once

#include <string>
#include <utility>
#include <vector>

#include "mhsum/errors.hpp"
#include "mhsum/index.hpp"
#include "mhsum/qsum.hpp"
#include "mhsum/rational.hpp"
#include "mhsum/report.hpp"
#include "mhsum/series.hpp"

namespace mhsum {

// State of the transport machinery: a left index whose entries may reach 0
// while moves are applied, and a fully formed right index.  All series below
// are truncations in the connecting variable x.
struct ConnState {
  std::vector<int> left;  // nonempty, entries >= 0
  Index right;            // possibly empty

  ConnState(std::vector<int> l, Index r) : left(std::move(l)), right(std::move(r)) {
    if (left.empty()) throw EmptyIndexError("transport state needs a nonempty left index");
    for (int v : left)
      if (v < 0) throw InvalidRangeError("left entries must be >= 0");
  }

  static ConnState initial(const Index& k) {
    if (k.empty()) throw EmptyIndexError("transport starts from a nonempty index");
    return ConnState(k.entries(), Index{});
  }

  bool terminal() const { return left.size() == 1 && left[0] == 0; }

  bool operator==(const ConnState& o) const { return left == o.left && right == o.right; }

  std::string to_string() const {
    std::string s = "(";
    for (size_t i = 0; i < left.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(left[i]);
    }
    s += " ; ";
    const auto& r = right.entries();
    for (size_t i = 0; i < r.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(r[i]);
    }
    s += ")";
    return s;
  }
};

// Move a: decrement the last left entry, push a fresh 1 on the right.
inline ConnState transport_a(const ConnState& st) {
  if (st.left.back() < 1)
    throw InapplicableMoveError("move a needs a positive trailing left entry at " +
                                st.to_string());
  std::vector<int> left = st.left;
  --left.back();
  std::vector<int> right{1};
  for (int v : st.right.entries()) right.push_back(v);
  return ConnState(std::move(left), Index(std::move(right)));
}

// Move b: absorb a trailing zero, decrementing its neighbour and bumping the
// first right entry.
inline ConnState transport_b(const ConnState& st) {
  if (st.left.size() < 2 || st.left.back() != 0)
    throw InapplicableMoveError("move b needs a trailing zero with a neighbour at " +
                                st.to_string());
  if (st.left[st.left.size() - 2] < 1)
    throw InapplicableMoveError("move b needs a positive neighbour at " + st.to_string());
  if (st.right.empty())
    throw InapplicableMoveError("move b needs a nonempty right index at " + st.to_string());
  std::vector<int> left(st.left.begin(), st.left.end() - 1);
  --left.back();
  std::vector<int> right = st.right.entries();
  ++right[0];
  return ConnState(std::move(left), Index(std::move(right)));
}

// Full chain from (k; ()) to ((0); dual).  Applies a while the trailing entry
// is positive, b when a zero can be absorbed; weight-many moves in total.
inline std::vector<ConnState> transport_chain(const Index& k) {
  std::vector<ConnState> chain{ConnState::initial(k)};
  while (!chain.back().terminal()) {
    const ConnState& cur = chain.back();
    if (cur.left.back() >= 1)
      chain.push_back(transport_a(cur));
    else if (cur.left.size() >= 2)
      chain.push_back(transport_b(cur));
    else
      throw ChainBrokenError("no applicable move at " + cur.to_string());
    if (chain.size() > static_cast<size_t>(k.weight()) + 1)
      throw ChainBrokenError("transport chain exceeded weight bound for " + k.to_string());
  }
  return chain;
}

namespace detail {

// Shared per-(q, N, order) tables for the series evaluators.
struct ConnTables {
  Rational q;
  int N, order;
  std::vector<Rational> qi;        // [m]
  std::vector<Rational> qm;        // q^m
  std::vector<Rational> fact_inv;  // 1/[m]!
  std::vector<Rational> alt;       // (-1)^{m-1} q^{m(m+1)/2} / [m]!
  std::vector<TruncatedSeries> D;     // [h] - q^h x
  std::vector<TruncatedSeries> Dinv;  // 1/([h] - q^h x)
  std::vector<TruncatedSeries> W;     // prod_{h<=n} D(h)

  ConnTables(const Rational& qv, int n, int ord) : q(qv), N(n), order(ord) {
    if (N < 1) throw InvalidRangeError("series tables need N >= 1");
    if (order < 0) throw InvalidRangeError("series order must be >= 0");
    qi.resize(N + 1);
    qm.resize(N + 1);
    fact_inv.resize(N + 1);
    alt.resize(N + 1);
    D.reserve(N + 1);
    Dinv.reserve(N + 1);
    W.reserve(N + 1);
    Rational fact(1), pw(1), acc(0);
    qi[0] = Rational(0);
    qm[0] = Rational(1);
    fact_inv[0] = Rational(1);
    alt[0] = Rational(0);
    D.push_back(TruncatedSeries(order, Rational(1)));
    Dinv.push_back(TruncatedSeries(order, Rational(1)));
    W.push_back(TruncatedSeries(order, Rational(1)));
    for (int m = 1; m <= N; ++m) {
      acc += pw;
      pw *= q;
      qi[m] = acc;
      qm[m] = pw;  // after the update pw = q^m
      fact *= acc;
      fact_inv[m] = fact.inverse();
      Rational a = q.pow(static_cast<long>(m) * (m + 1) / 2) * fact_inv[m];
      alt[m] = m % 2 == 1 ? a : -a;
      TruncatedSeries d(order, qi[m]);
      if (order >= 1) d.set_coeff(1, -qm[m]);
      D.push_back(d);
      Dinv.push_back(d.inverse());
      W.push_back(W.back() * d);
    }
  }

  // Weight of one left-chain position: q^{(k-1)m} / ([m] ([m]-q^m x)^{k-1}).
  TruncatedSeries left_factor(int k, int m) const {
    return Dinv[m].pow(k - 1).scaled(q.pow(static_cast<long>(k - 1) * m) * qi[m].inverse());
  }

  // Boundary bracket [m]/([m]-q^m x) attached at both ends of the left chain.
  TruncatedSeries bracket(int m) const { return Dinv[m].scaled(qi[m]); }

  // Weight of one right-chain position: q^n / (([n]-q^n x) [n]^{l-1}).
  TruncatedSeries right_factor(int l, int n) const {
    return Dinv[n].scaled(qm[n] * qi[n].pow(l - 1).inverse());
  }

  TruncatedSeries zero() const { return TruncatedSeries(order); }
  TruncatedSeries one() const { return TruncatedSeries(order, Rational(1)); }

  // inner(n) = sum over nondecreasing left chains with m_r <= n of the full
  // left weight times (-1)^{m_r-1} q^{m_r(m_r+1)/2} / ([m_r]! [n-m_r]!).
  std::vector<TruncatedSeries> left_inner(const std::vector<int>& left) const {
    const int r = static_cast<int>(left.size());
    std::vector<TruncatedSeries> acc(N + 1, zero());
    for (int m = 1; m <= N; ++m) {
      acc[m] = left_factor(left[0], m) * bracket(m);
      if (r == 1) acc[m] = acc[m] * bracket(m);
    }
    for (int i = 1; i < r; ++i) {
      std::vector<TruncatedSeries> next(N + 1, zero());
      TruncatedSeries prefix = zero();
      for (int m = 1; m <= N; ++m) {
        prefix += acc[m];
        next[m] = left_factor(left[i], m) * prefix;
        if (i == r - 1) next[m] = next[m] * bracket(m);
      }
      acc = std::move(next);
    }
    std::vector<TruncatedSeries> inner(N + 1, zero());
    for (int n = 1; n <= N; ++n) {
      TruncatedSeries s = zero();
      for (int m = 1; m <= n; ++m) s += acc[m].scaled(alt[m] * fact_inv[n - m]);
      inner[n] = s;
    }
    return inner;
  }
};

}  // namespace detail

// Connecting factor C(m, n) = (-1)^{m-1} q^{m(m+1)/2} prod_{h<=n}([h]-q^h x)
// over [m]! [n-m]!, as a series in x.
inline TruncatedSeries connector(int m, int n, const QPoint& q, int order) {
  if (m < 1 || n < m) throw InvalidRangeError("connector needs 1 <= m <= n");
  detail::ConnTables t(q.value, n, order);
  return t.W[n].scaled(t.alt[m] * t.fact_inv[n - m]);
}

// Z*_N(left; right): connected double sum over 1 <= m_1 <= ... <= m_r <= n_1
// <= ... <= n_s <= N with the connecting factor C(m_r, n_1); the right block
// is pinned to N when the right index is empty.
inline TruncatedSeries Z_star(const ConnState& st, const QPoint& q, int N, int order) {
  detail::ConnTables t(q.value, N, order);
  const auto inner = t.left_inner(st.left);
  const int s = st.right.depth();
  if (s == 0) return t.W[N] * inner[N];
  // Suffix DP over the right chain: H[n] covers chains n_j = n <= ... <= n_s.
  std::vector<TruncatedSeries> H(N + 1, t.zero());
  for (int n = 1; n <= N; ++n) H[n] = t.right_factor(st.right.at(s - 1), n);
  for (int j = s - 1; j >= 1; --j) {
    std::vector<TruncatedSeries> next(N + 1, t.zero());
    TruncatedSeries suffix = t.zero();
    for (int n = N; n >= 1; --n) {
      suffix += H[n];
      next[n] = t.right_factor(st.right.at(j - 1), n) * suffix;
    }
    H = std::move(next);
  }
  TruncatedSeries total = t.zero();
  for (int n = 1; n <= N; ++n) total += t.W[n] * inner[n] * H[n];
  return total;
}

// P_N(k) replaces the connecting factor by the plain q-binomial bracket; its
// x-coefficients are the shifted H* combinations.
inline TruncatedSeries P_N(const Index& k, const QPoint& q, int N, int order) {
  if (k.empty()) throw EmptyIndexError("P_N needs a nonempty index");
  detail::ConnTables t(q.value, N, order);
  const auto inner = t.left_inner(k.entries());
  // inner(N) already carries (-1)^{m-1} q^{m(m+1)/2} / ([m]! [N-m]!); scaling
  // by [N]! turns the factorial pair into the q-binomial.
  return inner[N].scaled(t.fact_inv[N].inverse());
}

// Q_N(l): plain right-chain sum, no connecting factor.
inline TruncatedSeries Q_N(const Index& l, const QPoint& q, int N, int order) {
  if (l.empty()) throw EmptyIndexError("Q_N needs a nonempty index");
  detail::ConnTables t(q.value, N, order);
  auto w = [&](int j, int n) { return t.right_factor(l.at(j), n); };
  auto tail = [&](int) { return t.one(); };
  return chain_sum(l.depth(), N, false, w, tail, t.zero());
}

// R_N = prod_{h<=N} (1 - q^h x/[h])^{-1}; its x-coefficients are the
// one-entry z*-values at ones.
inline TruncatedSeries R_N(const QPoint& q, int N, int order) {
  detail::ConnTables t(q.value, N, order);
  TruncatedSeries denom = t.one();
  for (int h = 1; h <= N; ++h) {
    TruncatedSeries f(order, Rational(1));
    if (order >= 1) f.set_coeff(1, -(t.qm[h] * t.qi[h].inverse()));
    denom = denom * f;
  }
  return denom.inverse();
}

// --- statement-level checks ----------------------------------------------

inline VerificationReport verify_transport_chain(const Index& k, const QPoint& q, int N,
                                                 int order) {
  const auto chain = transport_chain(k);
  const Index dual = hoffman_dual(k);
  bool ok = chain.size() == static_cast<size_t>(k.weight()) + 1;
  ok = ok && chain.back() == ConnState({0}, dual);
  TruncatedSeries first = Z_star(chain.front(), q, N, order);
  TruncatedSeries prev = first;
  for (size_t i = 1; ok && i < chain.size(); ++i) {
    TruncatedSeries cur = Z_star(chain[i], q, N, order);
    ok = prev == cur;
    prev = std::move(cur);
  }
  return report_compare("transport-chain",
                        {{"k", k.to_string()},
                         {"N", std::to_string(N)},
                         {"q", q.to_string()},
                         {"order", std::to_string(order)},
                         {"moves", std::to_string(chain.size() - 1)}},
                        ok, first.to_string(), prev.to_string());
}

inline VerificationReport verify_pqr(const Index& k, const QPoint& q, int N, int order) {
  TruncatedSeries p = P_N(k, q, N, order);
  TruncatedSeries qr = Q_N(hoffman_dual(k), q, N, order) * R_N(q, N, order);
  return report_compare("pqr",
                        {{"k", k.to_string()},
                         {"N", std::to_string(N)},
                         {"q", q.to_string()},
                         {"order", std::to_string(order)}},
                        p == qr, p.to_string(), qr.to_string());
}

// Coefficient bridge: the x-coefficients of P and of Q*R are exactly the two
// sides of the shifted-sum identity, order by order.
inline VerificationReport verify_pq_coefficients(const Index& k, const QPoint& q, int N,
                                                 int order) {
  TruncatedSeries p = P_N(k, q, N, order);
  TruncatedSeries qr = Q_N(hoffman_dual(k), q, N, order) * R_N(q, N, order);
  TruncatedSeries lhs_direct(order), rhs_direct(order);
  QEval<Rational> ctx(q.value, N);
  for (int e = 0; e <= order; ++e) {
    lhs_direct.set_coeff(e, ohno_lhs_q_eval(k, e, N, ctx));
    rhs_direct.set_coeff(e, ohno_rhs_q_eval(k, e, N, ctx));
  }
  const bool ok = p == lhs_direct && qr == rhs_direct;
  return report_compare("pq-coefficients",
                        {{"k", k.to_string()},
                         {"N", std::to_string(N)},
                         {"q", q.to_string()},
                         {"order", std::to_string(order)}},
                        ok, p.to_string() + " | " + qr.to_string(),
                        lhs_direct.to_string() + " | " + rhs_direct.to_string());
}

// Telescoping kernel: sum_{m<=n} [m]/([m]-q^m x) (-1)^{m-1} q^{m(m-1)/2} /
// ([m]! [n-m]!) collapses to 1/prod_{h<=n}([h]-q^h x).  The exponent here is
// m(m-1)/2, not the m(m+1)/2 of the connecting factor.
inline VerificationReport verify_partial_fraction(int n1, const QPoint& q, int order) {
  if (n1 < 1) throw InvalidRangeError("partial fraction needs n1 >= 1");
  detail::ConnTables t(q.value, n1, order);
  TruncatedSeries lhs = t.zero();
  for (int m = 1; m <= n1; ++m) {
    Rational c = q.value.pow(static_cast<long>(m) * (m - 1) / 2) * t.fact_inv[m] *
                 t.fact_inv[n1 - m];
    if (m % 2 == 0) c = -c;
    lhs += t.bracket(m).scaled(c);
  }
  TruncatedSeries rhs = t.W[n1].inverse();
  return report_compare("partial-fraction",
                        {{"n1", std::to_string(n1)},
                         {"q", q.to_string()},
                         {"order", std::to_string(order)}},
                        lhs == rhs, lhs.to_string(), rhs.to_string());
}

// Geometric expansion of a bracket power: 1/([m]-q^m x)^k as an explicit
// binomial series in x.
inline VerificationReport verify_expansion(int m, int k, const QPoint& q, int order) {
  if (m < 1 || k < 0) throw InvalidRangeError("expansion needs m >= 1, k >= 0");
  const Rational qi = q_int(m, q.value);
  const Rational qm = q.value.pow(m);
  TruncatedSeries d(order, qi);
  if (order >= 1) d.set_coeff(1, -qm);
  TruncatedSeries lhs = d.pow(-k);
  TruncatedSeries rhs(order);
  for (int e = 0; e <= order; ++e)
    rhs.set_coeff(e, binomial(k + e - 1, static_cast<unsigned long>(e)) * qm.pow(e) *
                         qi.pow(k + e).inverse());
  return report_compare("expansion",
                        {{"m", std::to_string(m)},
                         {"k", std::to_string(k)},
                         {"q", q.to_string()},
                         {"order", std::to_string(order)}},
                        lhs == rhs, lhs.to_string(), rhs.to_string());
}

}  // namespace mhsum
