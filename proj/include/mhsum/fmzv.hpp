#pragma once

#include <algorithm>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mhsum/bernoulli.hpp"
#include "mhsum/errors.hpp"
#include "mhsum/index.hpp"
#include "mhsum/qsum.hpp"
#include "mhsum/rational.hpp"
#include "mhsum/report.hpp"
#include "mhsum/residue.hpp"

namespace mhsum {

// --- truncated sums mod p^n ------------------------------------------------
//
// zeta_p / zeta_star_p evaluate the depth-r harmonic sums with upper limit
// p - 1 directly in Z/p^n by the same prefix-accumulation scheme as the exact
// evaluators; O(r p) inverse-power lookups per index.

namespace detail {

inline Residue harmonic_mod(const Index& k, const ModContext& ctx, bool strict) {
  if (k.empty()) return ctx.one();
  const std::uint32_t top = ctx.m.p - 1;
  const int r = k.depth();
  std::vector<Residue> acc(top + 1, ctx.zero());
  for (std::uint32_t m = 1; m <= top; ++m) acc[m] = ctx.inv_pow(m, k.at(0));
  for (int i = 1; i < r; ++i) {
    std::vector<Residue> next(top + 1, ctx.zero());
    Residue prefix = ctx.zero();
    for (std::uint32_t m = 1; m <= top; ++m) {
      if (strict) {
        next[m] = ctx.inv_pow(m, k.at(i)) * prefix;
        prefix += acc[m];
      } else {
        prefix += acc[m];
        next[m] = ctx.inv_pow(m, k.at(i)) * prefix;
      }
    }
    acc = std::move(next);
  }
  Residue total = ctx.zero();
  for (std::uint32_t m = 1; m <= top; ++m) total += acc[m];
  return total;
}

// Row of signed binomials (-1)^{m-1} C(p-1, m) mod p^n, built iteratively.
inline std::vector<Residue> signed_binom_row(const ModContext& ctx) {
  const std::uint32_t top = ctx.m.p - 1;
  std::vector<Residue> row(top + 1, ctx.zero());
  Residue c = ctx.one();
  for (std::uint32_t m = 1; m <= top; ++m) {
    c = c * ctx.residue(ctx.m.p - m) * ctx.residue(ctx.inv[m]);
    row[m] = m % 2 == 1 ? c : -c;
  }
  return row;
}

inline Rational sign(long j) { return Rational(j % 2 == 0 ? 1 : -1); }

}  // namespace detail

inline Residue zeta_p(const Index& k, const ModContext& ctx) {
  return detail::harmonic_mod(k, ctx, true);
}

inline Residue zeta_star_p(const Index& k, const ModContext& ctx) {
  return detail::harmonic_mod(k, ctx, false);
}

// Cross-route used by the tests: evaluate the exact rational sum with upper
// limit p - 1, then embed mod p^n.  Only viable for small p.
inline Residue zeta_p_via_rational(const Index& k, std::uint32_t p, std::uint32_t n) {
  return mod_reduce(zeta_N(k, static_cast<int>(p) - 1), p, n);
}

inline Residue zeta_star_p_via_rational(const Index& k, std::uint32_t p, std::uint32_t n) {
  return mod_reduce(zeta_star_N(k, static_cast<int>(p) - 1), p, n);
}

// H*_{p-1}(k) mod p^n: non-strict chains with the signed binomial attached to
// the top variable.
inline Residue H_star_mod(const Index& k, const ModContext& ctx) {
  if (k.empty()) throw EmptyIndexError("H* is defined for nonempty indices");
  const std::uint32_t top = ctx.m.p - 1;
  const auto row = detail::signed_binom_row(ctx);
  const int r = k.depth();
  std::vector<Residue> acc(top + 1, ctx.zero());
  for (std::uint32_t m = 1; m <= top; ++m) acc[m] = ctx.inv_pow(m, k.at(0));
  for (int i = 1; i < r; ++i) {
    std::vector<Residue> next(top + 1, ctx.zero());
    Residue prefix = ctx.zero();
    for (std::uint32_t m = 1; m <= top; ++m) {
      prefix += acc[m];
      next[m] = ctx.inv_pow(m, k.at(i)) * prefix;
    }
    acc = std::move(next);
  }
  Residue total = ctx.zero();
  for (std::uint32_t m = 1; m <= top; ++m) total += acc[m] * row[m];
  return total;
}

// All sums below are stated for primes comfortably above the weight; below
// that the congruences may degenerate, so checks report SKIPPED instead of
// evaluating.
inline bool prime_large_enough(std::uint32_t p, int weight, std::uint32_t n) {
  return static_cast<long>(p) > static_cast<long>(weight) + static_cast<long>(n) + 1;
}

namespace detail {

inline VerificationReport skip_small_prime(const std::string& id, ParamList params,
                                           std::uint32_t p, int weight, std::uint32_t n) {
  return report_skip(id, std::move(params),
                     "p=" + std::to_string(p) + " <= weight " + std::to_string(weight) +
                         " + n " + std::to_string(n) + " + 1");
}

// Depth-graded sums over all indices of weight k and depth r, optionally with
// the i-th entry forced >= 2.
inline Residue index_sum(int k, int r, const ModContext& ctx, bool star) {
  Residue total = ctx.zero();
  for (const Index& idx : enum_I(k, r)) total += harmonic_mod(idx, ctx, !star);
  return total;
}

inline Residue fixed_entry_sum(int k, int r, int i, const ModContext& ctx, bool star) {
  Residue total = ctx.zero();
  for (const Index& idx : enum_I_i(k, r, i)) total += harmonic_mod(idx, ctx, !star);
  return total;
}

inline std::string two(const Residue& a, const Residue& b) {
  return a.to_string() + " | " + b.to_string();
}

}  // namespace detail

// --- depth-graded statements mod p ----------------------------------------

// Both depth-graded sums vanish mod p.
inline VerificationReport verify_depth_sum_zero(int k, int r, std::uint32_t p) {
  ParamList params{{"k", std::to_string(k)}, {"r", std::to_string(r)}, {"p", std::to_string(p)}};
  if (r < 1 || r > k) throw InvalidRangeError("depth sum needs 1 <= r <= k");
  if (!prime_large_enough(p, k, 1)) return detail::skip_small_prime("depth-sum-zero", params, p, k, 1);
  ModContext ctx(p, 1);
  Residue s = detail::index_sum(k, r, ctx, false);
  Residue t = detail::index_sum(k, r, ctx, true);
  const Residue z = ctx.zero();
  return report_compare("depth-sum-zero", params, s == z && t == z, detail::two(s, t),
                        detail::two(z, z));
}

// zeta*({1}^e) vanishes mod p.
inline VerificationReport verify_zeta_star_ones(int e, std::uint32_t p) {
  ParamList params{{"e", std::to_string(e)}, {"p", std::to_string(p)}};
  if (e < 1) throw InvalidRangeError("need e >= 1");
  if (!prime_large_enough(p, e, 1)) return detail::skip_small_prime("zeta-star-ones", params, p, e, 1);
  ModContext ctx(p, 1);
  Residue lhs = zeta_star_p(ones(e), ctx);
  return report_compare("zeta-star-ones", params, lhs == ctx.zero(), lhs.to_string(),
                        ctx.zero().to_string());
}

// H*_{p-1}(k) = -zeta*_{p-1}(k) mod p: the signed binomial row collapses to -1.
inline VerificationReport verify_hstar_bridge(const Index& k, std::uint32_t p) {
  ParamList params{{"k", k.to_string()}, {"p", std::to_string(p)}};
  if (!prime_large_enough(p, k.weight(), 1))
    return detail::skip_small_prime("hstar-bridge", params, p, k.weight(), 1);
  ModContext ctx(p, 1);
  Residue lhs = H_star_mod(k, ctx);
  Residue rhs = -zeta_star_p(k, ctx);
  return report_compare("hstar-bridge", params, lhs == rhs, lhs.to_string(), rhs.to_string());
}

// Fixed-entry depth-graded sums mod p against their Bernoulli closed forms.
inline VerificationReport verify_sw(int k, int r, int i, std::uint32_t p,
                                    const BernoulliTable& bern) {
  ParamList params{{"k", std::to_string(k)},
                   {"r", std::to_string(r)},
                   {"i", std::to_string(i)},
                   {"p", std::to_string(p)}};
  if (!(1 <= i && i <= r && r < k)) throw InvalidRangeError("need 1 <= i <= r < k");
  if (!prime_large_enough(p, k, 1)) return detail::skip_small_prime("sw", params, p, k, 1);
  try {
    ModContext ctx(p, 1);
    Residue lhs = detail::fixed_entry_sum(k, r, i, ctx, false);
    Rational closed = detail::sign(i) *
                      (binomial(k - 1, i - 1) + detail::sign(r) * binomial(k - 1, r - i)) *
                      bern.at(p - k) / Rational(k);
    Residue rhs = mod_reduce(closed, p, 1);
    return report_compare("sw", params, lhs == rhs, lhs.to_string(), rhs.to_string());
  } catch (const NonInvertibleDenominatorError& e) {
    return report_skip("sw", params, e.what());
  }
}

inline VerificationReport verify_sw_star(int k, int r, int i, std::uint32_t p,
                                         const BernoulliTable& bern) {
  ParamList params{{"k", std::to_string(k)},
                   {"r", std::to_string(r)},
                   {"i", std::to_string(i)},
                   {"p", std::to_string(p)}};
  if (!(1 <= i && i <= r && r < k)) throw InvalidRangeError("need 1 <= i <= r < k");
  if (!prime_large_enough(p, k, 1)) return detail::skip_small_prime("sw-star", params, p, k, 1);
  try {
    ModContext ctx(p, 1);
    Residue lhs = detail::fixed_entry_sum(k, r, i, ctx, true);
    Rational closed = detail::sign(i) *
                      (binomial(k - 1, r - i) + detail::sign(r) * binomial(k - 1, i - 1)) *
                      bern.at(p - k) / Rational(k);
    Residue rhs = mod_reduce(closed, p, 1);
    return report_compare("sw-star", params, lhs == rhs, lhs.to_string(), rhs.to_string());
  } catch (const NonInvertibleDenominatorError& e) {
    return report_skip("sw-star", params, e.what());
  }
}

// For even weight both fixed-entry sums vanish mod p.
inline VerificationReport verify_sw_even(int k, int r, int i, std::uint32_t p) {
  ParamList params{{"k", std::to_string(k)},
                   {"r", std::to_string(r)},
                   {"i", std::to_string(i)},
                   {"p", std::to_string(p)}};
  if (k % 2 != 0) throw ParityViolationError("even-weight statement needs k even");
  if (!(1 <= i && i <= r && r < k)) throw InvalidRangeError("need 1 <= i <= r < k");
  if (!prime_large_enough(p, k, 1)) return detail::skip_small_prime("sw-even", params, p, k, 1);
  ModContext ctx(p, 1);
  Residue s = detail::fixed_entry_sum(k, r, i, ctx, false);
  Residue t = detail::fixed_entry_sum(k, r, i, ctx, true);
  const Residue z = ctx.zero();
  return report_compare("sw-even", params, s == z && t == z, detail::two(s, t),
                        detail::two(z, z));
}

// Shifted-sum identity mod p: the binomially weighted star sums of k + eps
// match minus the star sums of the dual.
inline VerificationReport verify_hims(const Index& k, int e, std::uint32_t p) {
  ParamList params{{"k", k.to_string()}, {"e", std::to_string(e)}, {"p", std::to_string(p)}};
  if (k.empty()) throw EmptyIndexError("shifted-sum statement needs a nonempty index");
  if (e < 0) throw InvalidRangeError("shift must be >= 0");
  const int wt = k.weight() + e;
  if (!prime_large_enough(p, wt, 1)) return detail::skip_small_prime("hims", params, p, wt, 1);
  ModContext ctx(p, 1);
  Residue lhs = ctx.zero();
  for (const ExponentTuple& eps : enum_J(e, k.depth())) {
    const auto c = b_coeff(k, eps);
    if (c == 0) continue;
    lhs += ctx.residue(c) * zeta_star_p(index_plus(k, eps), ctx);
  }
  const Index dual = hoffman_dual(k);
  Residue rhs = ctx.zero();
  for (const ExponentTuple& ep : enum_J(e, dual.depth()))
    rhs += zeta_star_p(index_plus(dual, ep), ctx);
  rhs = -rhs;
  return report_compare("hims", params, lhs == rhs, lhs.to_string(), rhs.to_string());
}

// --- depth-graded statements mod p^2 and p^3 -------------------------------

inline VerificationReport verify_a2_depth_sum(int k, int r, std::uint32_t p,
                                              const BernoulliTable& bern, bool star) {
  const std::string id = star ? "a2-depth-sum-star" : "a2-depth-sum";
  ParamList params{{"k", std::to_string(k)}, {"r", std::to_string(r)}, {"p", std::to_string(p)}};
  if (r < 1 || r > k) throw InvalidRangeError("depth sum needs 1 <= r <= k");
  if (!prime_large_enough(p, k, 2)) return detail::skip_small_prime(id, params, p, k, 2);
  try {
    ModContext ctx(p, 2);
    Residue lhs = detail::index_sum(k, r, ctx, star);
    Rational closed = binomial(k, r) * bern.at(p - k - 1) / Rational(k + 1) * Rational(p);
    if (!star) closed *= detail::sign(r + 1);
    Residue rhs = mod_reduce(closed, p, 2);
    return report_compare(id, params, lhs == rhs, lhs.to_string(), rhs.to_string());
  } catch (const NonInvertibleDenominatorError& e) {
    return report_skip(id, params, e.what());
  }
}

inline VerificationReport verify_a3_depth_sum(int k, int r, std::uint32_t p,
                                              const BernoulliTable& bern, bool star) {
  const std::string id = star ? "a3-depth-sum-star" : "a3-depth-sum";
  ParamList params{{"k", std::to_string(k)}, {"r", std::to_string(r)}, {"p", std::to_string(p)}};
  if (k % 2 != 1) throw ParityViolationError("mod-p^3 depth sums need odd weight");
  if (r < 1 || r > k) throw InvalidRangeError("depth sum needs 1 <= r <= k");
  if (!prime_large_enough(p, k, 3)) return detail::skip_small_prime(id, params, p, k, 3);
  try {
    ModContext ctx(p, 3);
    Residue lhs = detail::index_sum(k, r, ctx, star);
    Rational closed = Rational(k + 1, 2) * binomial(k, r) * bern.at(p - k - 2) /
                      Rational(k + 2) * Rational(p).pow(2);
    closed *= star ? Rational(-1) : detail::sign(r);
    Residue rhs = mod_reduce(closed, p, 3);
    return report_compare(id, params, lhs == rhs, lhs.to_string(), rhs.to_string());
  } catch (const NonInvertibleDenominatorError& e) {
    return report_skip(id, params, e.what());
  }
}

// Fixed-entry depth-graded sums mod p^2 for even weight.
inline VerificationReport verify_a2_fixed_entry_sum(int k, int r, int i, std::uint32_t p,
                                                    const BernoulliTable& bern, bool star) {
  const std::string id = star ? "a2-fixed-entry-sum-star" : "a2-fixed-entry-sum";
  ParamList params{{"k", std::to_string(k)},
                   {"r", std::to_string(r)},
                   {"i", std::to_string(i)},
                   {"p", std::to_string(p)}};
  if (k % 2 != 0) throw ParityViolationError("mod-p^2 fixed-entry sums need even weight");
  if (!(1 <= i && i <= r && r < k)) throw InvalidRangeError("need 1 <= i <= r < k");
  if (!prime_large_enough(p, k, 2)) return detail::skip_small_prime(id, params, p, k, 2);
  try {
    ModContext ctx(p, 2);
    Residue lhs = detail::fixed_entry_sum(k, r, i, ctx, star);
    Rational coeff;
    if (!star) {
      coeff = detail::sign(r + 1) *
              (binomial(k - 1, r) +
               detail::sign(r - i) * ((Rational(k - r) * binomial(k, i - 1)) +
                                      binomial(k - 1, i - 1) +
                                      detail::sign(r + 1) * binomial(k - 1, r - i))) /
              Rational(2);
    } else {
      coeff = (binomial(k - 1, r) +
               detail::sign(i + 1) * ((Rational(k - r) * binomial(k, r - i)) +
                                      binomial(k - 1, r - i) +
                                      detail::sign(r + 1) * binomial(k - 1, i - 1))) /
              Rational(2);
    }
    Rational closed = coeff * bern.at(p - k - 1) / Rational(k + 1) * Rational(p);
    Residue rhs = mod_reduce(closed, p, 2);
    return report_compare(id, params, lhs == rhs, lhs.to_string(), rhs.to_string());
  } catch (const NonInvertibleDenominatorError& e) {
    return report_skip(id, params, e.what());
  }
}

// (-1)^{r-1} times the strict depth sum equals the star depth sum mod p^2,
// checked on the computed sums themselves.
inline VerificationReport verify_a2_depth_sum_reflection(int k, int r, std::uint32_t p) {
  ParamList params{{"k", std::to_string(k)}, {"r", std::to_string(r)}, {"p", std::to_string(p)}};
  if (r < 1 || r > k) throw InvalidRangeError("depth sum needs 1 <= r <= k");
  if (!prime_large_enough(p, k, 2))
    return detail::skip_small_prime("a2-depth-sum-reflection", params, p, k, 2);
  ModContext ctx(p, 2);
  Residue s = detail::index_sum(k, r, ctx, false);
  Residue t = detail::index_sum(k, r, ctx, true);
  if (r % 2 == 0) s = -s;
  return report_compare("a2-depth-sum-reflection", params, s == t, s.to_string(), t.to_string());
}

// Internal consistency of the modular evaluators: mod-p^2 sums reduced mod p
// must agree with the direct mod-p computation.
inline VerificationReport verify_mt2_sw_consistency(int k, int r, std::uint32_t p) {
  ParamList params{{"k", std::to_string(k)}, {"r", std::to_string(r)}, {"p", std::to_string(p)}};
  if (r < 1 || r > k) throw InvalidRangeError("depth sum needs 1 <= r <= k");
  if (!prime_large_enough(p, k, 2))
    return detail::skip_small_prime("mt2-sw-consistency", params, p, k, 2);
  ModContext wide(p, 2), narrow(p, 1);
  Residue s2 = detail::index_sum(k, r, wide, false);
  Residue t2 = detail::index_sum(k, r, wide, true);
  Residue s1 = detail::index_sum(k, r, narrow, false);
  Residue t1 = detail::index_sum(k, r, narrow, true);
  Residue s2r = narrow.residue(s2.value() % p);
  Residue t2r = narrow.residue(t2.value() % p);
  return report_compare("mt2-sw-consistency", params, s2r == s1 && t2r == t1,
                        detail::two(s2r, t2r), detail::two(s1, t1));
}

// --- low-depth star values --------------------------------------------------

inline VerificationReport verify_a_pair(int k1, int k2, std::uint32_t p,
                                        const BernoulliTable& bern) {
  ParamList params{{"k1", std::to_string(k1)},
                   {"k2", std::to_string(k2)},
                   {"p", std::to_string(p)}};
  if (k1 < 1 || k2 < 1) throw InvalidRangeError("entries must be >= 1");
  const int l = k1 + k2;
  if (!prime_large_enough(p, l, 1)) return detail::skip_small_prime("a-pair", params, p, l, 1);
  try {
    ModContext ctx(p, 1);
    Residue lhs = zeta_star_p(Index({k1, k2}), ctx);
    Rational closed = detail::sign(k2) * binomial(l, static_cast<unsigned long>(k1)) *
                      bern.at(p - l) / Rational(l);
    Residue rhs = mod_reduce(closed, p, 1);
    return report_compare("a-pair", params, lhs == rhs, lhs.to_string(), rhs.to_string());
  } catch (const NonInvertibleDenominatorError& e) {
    return report_skip("a-pair", params, e.what());
  }
}

inline VerificationReport verify_a_triple(int k1, int k2, int k3, std::uint32_t p,
                                          const BernoulliTable& bern) {
  ParamList params{{"k1", std::to_string(k1)},
                   {"k2", std::to_string(k2)},
                   {"k3", std::to_string(k3)},
                   {"p", std::to_string(p)}};
  if (k1 < 1 || k2 < 1 || k3 < 1) throw InvalidRangeError("entries must be >= 1");
  const int l = k1 + k2 + k3;
  if (l % 2 != 1) throw ParityViolationError("triple star value needs odd total weight");
  if (!prime_large_enough(p, l, 1)) return detail::skip_small_prime("a-triple", params, p, l, 1);
  try {
    ModContext ctx(p, 1);
    Residue lhs = zeta_star_p(Index({k1, k2, k3}), ctx);
    Rational closed = (detail::sign(k3) * binomial(l, static_cast<unsigned long>(k3)) -
                       detail::sign(k1) * binomial(l, static_cast<unsigned long>(k1))) *
                      bern.at(p - l) / Rational(2 * l);
    Residue rhs = mod_reduce(closed, p, 1);
    return report_compare("a-triple", params, lhs == rhs, lhs.to_string(), rhs.to_string());
  } catch (const NonInvertibleDenominatorError& e) {
    return report_skip("a-triple", params, e.what());
  }
}

inline VerificationReport verify_a2_repeated(int k, int r, std::uint32_t p,
                                             const BernoulliTable& bern) {
  ParamList params{{"k", std::to_string(k)}, {"r", std::to_string(r)}, {"p", std::to_string(p)}};
  if (k < 1 || r < 1) throw InvalidRangeError("need k, r >= 1");
  const int wt = k * r;
  if (!prime_large_enough(p, wt, 2)) return detail::skip_small_prime("a2-repeated", params, p, wt, 2);
  try {
    ModContext ctx(p, 2);
    Residue lhs = zeta_star_p(Index(std::vector<int>(r, k)), ctx);
    Rational closed = Rational(k) * bern.at(p - wt - 1) / Rational(wt + 1) * Rational(p);
    Residue rhs = mod_reduce(closed, p, 2);
    return report_compare("a2-repeated", params, lhs == rhs, lhs.to_string(), rhs.to_string());
  } catch (const NonInvertibleDenominatorError& e) {
    return report_skip("a2-repeated", params, e.what());
  }
}

inline VerificationReport verify_a2_pair(int k1, int k2, std::uint32_t p,
                                         const BernoulliTable& bern) {
  ParamList params{{"k1", std::to_string(k1)},
                   {"k2", std::to_string(k2)},
                   {"p", std::to_string(p)}};
  if (k1 < 1 || k2 < 1) throw InvalidRangeError("entries must be >= 1");
  const int l = k1 + k2;
  if (l % 2 != 0) throw ParityViolationError("mod-p^2 pair value needs even total weight");
  if (!prime_large_enough(p, l, 2)) return detail::skip_small_prime("a2-pair", params, p, l, 2);
  try {
    ModContext ctx(p, 2);
    Residue lhs = zeta_star_p(Index({k1, k2}), ctx);
    Rational coeff = detail::sign(k1) * Rational(k2) *
                         binomial(l + 1, static_cast<unsigned long>(k1)) -
                     detail::sign(k2) * Rational(k1) *
                         binomial(l + 1, static_cast<unsigned long>(k2)) +
                     Rational(l);
    Rational closed = coeff / Rational(2) * bern.at(p - l - 1) / Rational(l + 1) * Rational(p);
    Residue rhs = mod_reduce(closed, p, 2);
    return report_compare("a2-pair", params, lhs == rhs, lhs.to_string(), rhs.to_string());
  } catch (const NonInvertibleDenominatorError& e) {
    return report_skip("a2-pair", params, e.what());
  }
}

inline VerificationReport verify_a3_single(int k, std::uint32_t p, const BernoulliTable& bern) {
  ParamList params{{"k", std::to_string(k)}, {"p", std::to_string(p)}};
  if (k < 1) throw InvalidRangeError("need k >= 1");
  if (k % 2 != 1) throw ParityViolationError("mod-p^3 single value needs odd weight");
  if (!prime_large_enough(p, k, 3)) return detail::skip_small_prime("a3-single", params, p, k, 3);
  try {
    ModContext ctx(p, 3);
    Residue lhs = zeta_p(Index({k}), ctx);
    Rational closed = -Rational(static_cast<long>(k) * (k + 1), 2) * bern.at(p - k - 2) /
                      Rational(k + 2) * Rational(p).pow(2);
    Residue rhs = mod_reduce(closed, p, 3);
    return report_compare("a3-single", params, lhs == rhs, lhs.to_string(), rhs.to_string());
  } catch (const NonInvertibleDenominatorError& e) {
    return report_skip("a3-single", params, e.what());
  }
}

// --- algebraic relations mod p^n --------------------------------------------

// Antipode relation: alternating convolution of reversed-prefix strict sums
// against suffix star sums telescopes to zero at any modulus.
inline VerificationReport verify_antipode(const Index& k, std::uint32_t p, std::uint32_t n) {
  ParamList params{{"k", k.to_string()}, {"p", std::to_string(p)}, {"n", std::to_string(n)}};
  if (k.empty()) throw EmptyIndexError("antipode needs a nonempty index");
  if (!prime_large_enough(p, k.weight(), n))
    return detail::skip_small_prime("antipode", params, p, k.weight(), n);
  ModContext ctx(p, n);
  const int r = k.depth();
  Residue total = ctx.zero();
  for (int j = 0; j <= r; ++j) {
    std::vector<int> pre(k.entries().begin(), k.entries().begin() + j);
    std::reverse(pre.begin(), pre.end());
    std::vector<int> suf(k.entries().begin() + j, k.entries().end());
    Residue term = zeta_p(Index(pre), ctx) * zeta_star_p(Index(suf), ctx);
    total += j % 2 == 0 ? term : -term;
  }
  return report_compare("antipode", params, total == ctx.zero(), total.to_string(),
                        ctx.zero().to_string());
}

// Shifted-sum identity mod p^2: the correction terms carry one factor of p,
// with the dual-side binomials taken on the dual index.
inline VerificationReport verify_a2_ohno(const Index& k, int e, std::uint32_t p) {
  ParamList params{{"k", k.to_string()}, {"e", std::to_string(e)}, {"p", std::to_string(p)}};
  if (k.empty()) throw EmptyIndexError("shifted-sum statement needs a nonempty index");
  if (e < 0) throw InvalidRangeError("shift must be >= 0");
  const int wt = k.weight() + e + 1;
  if (!prime_large_enough(p, wt, 2)) return detail::skip_small_prime("a2-ohno", params, p, wt, 2);
  ModContext ctx(p, 2);
  const Residue pp = ctx.residue(p);
  Residue lhs = ctx.zero();
  for (int j = 0; j <= e; ++j) {
    Residue inner = ctx.zero();
    for (const ExponentTuple& eps : enum_J(j, k.depth()))
      inner += zeta_star_p(index_plus(k, eps), ctx);
    lhs += zeta_star_p(ones(e - j), ctx) * inner;
  }
  const Index dual = hoffman_dual(k);
  Residue rhs = ctx.zero();
  for (const ExponentTuple& ep : enum_J(e, dual.depth())) {
    const auto c = b_coeff(dual, ep);
    if (c == 0) continue;
    const Index base = index_plus(dual, ep);
    Residue term = -zeta_star_p(base, ctx) - zeta_star_p(index_append(base, 1), ctx) * pp +
                   zeta_star_p(index_succ(base), ctx) * pp;
    rhs += ctx.residue(c) * term;
  }
  return report_compare("a2-ohno", params, lhs == rhs, lhs.to_string(), rhs.to_string());
}

// --- binomial congruence rows -----------------------------------------------

// (-1)^{m-1} C(p-1, m) = -1 - p sum_{m<=u<=p-1} 1/u + p/m mod p^2, all m.
inline VerificationReport verify_binom_congruence_p2(std::uint32_t p) {
  ParamList params{{"p", std::to_string(p)}};
  if (p < 3) throw InvalidRangeError("need an odd prime");
  ModContext ctx(p, 2);
  const auto row = detail::signed_binom_row(ctx);
  const Residue pp = ctx.residue(p);
  Residue suffix = ctx.zero();  // sum_{u >= m} 1/u, built backwards
  std::string bad_lhs, bad_rhs;
  bool ok = true;
  for (std::uint32_t m = p - 1; m >= 1 && ok; --m) {
    const Residue invm = ctx.residue(ctx.inv[m]);
    suffix += invm;
    Residue rhs = -ctx.one() - pp * suffix + pp * invm;
    if (!(row[m] == rhs)) {
      ok = false;
      bad_lhs = "m=" + std::to_string(m) + ": " + row[m].to_string();
      bad_rhs = "m=" + std::to_string(m) + ": " + rhs.to_string();
    }
  }
  const std::string all = "all m in [1, " + std::to_string(p - 1) + "] agree";
  return report_compare("binom-congruence-p2", params, ok, ok ? all : bad_lhs,
                        ok ? all : bad_rhs);
}

// Same row mod p^3 with the second-order correction; the non-strict double
// sum is (S^2 + S_2)/2 over the suffix.
inline VerificationReport verify_binom_congruence_p3(std::uint32_t p) {
  ParamList params{{"p", std::to_string(p)}};
  if (p < 3) throw InvalidRangeError("need an odd prime");
  ModContext ctx(p, 3);
  const auto row = detail::signed_binom_row(ctx);
  const Residue pp = ctx.residue(p);
  const Residue pp2 = pp * pp;
  const Residue half = ctx.residue(2).inverse();
  Residue s1 = ctx.zero(), s2 = ctx.zero();
  std::string bad_lhs, bad_rhs;
  bool ok = true;
  for (std::uint32_t m = p - 1; m >= 1 && ok; --m) {
    const Residue invm = ctx.residue(ctx.inv[m]);
    s1 += invm;
    s2 += invm * invm;
    const Residue dbl = (s1 * s1 + s2) * half;  // sum over m <= u1 <= u2 <= p-1
    Residue rhs = -ctx.one() - (s1 - invm) * pp - (dbl - invm * s1) * pp2;
    if (!(row[m] == rhs)) {
      ok = false;
      bad_lhs = "m=" + std::to_string(m) + ": " + row[m].to_string();
      bad_rhs = "m=" + std::to_string(m) + ": " + rhs.to_string();
    }
  }
  const std::string all = "all m in [1, " + std::to_string(p - 1) + "] agree";
  return report_compare("binom-congruence-p3", params, ok, ok ? all : bad_lhs,
                        ok ? all : bad_rhs);
}

// --- exact binomial-sum identities -------------------------------------------

// Two closed forms for convolution sums of binomial products, checked in
// exact integer arithmetic for 1 <= i <= r < k.
inline VerificationReport verify_binomial_sum(int k, int r, int i) {
  ParamList params{{"k", std::to_string(k)}, {"r", std::to_string(r)}, {"i", std::to_string(i)}};
  if (!(1 <= i && i <= r && r < k)) throw InvalidRangeError("need 1 <= i <= r < k");
  Rational plain(0), weighted(0);
  for (int e = 0; e <= k - r - 1; ++e) {
    Rational c = binomial(i + e - 1, static_cast<unsigned long>(e)) *
                 binomial(k - i - e - 1, static_cast<unsigned long>(k - r - 1 - e));
    plain += c;
    weighted += c * detail::sign(i - 1 + e) *
                binomial(k + 1, static_cast<unsigned long>(i + e + 1));
  }
  Rational plain_rhs = binomial(k - 1, static_cast<unsigned long>(r));
  Rational weighted_rhs = detail::sign(i + 1) *
                          (Rational(k - r) * binomial(k, static_cast<unsigned long>(r - i)) +
                           binomial(k - 1, static_cast<unsigned long>(r - i)) +
                           detail::sign(r + 1) * binomial(k - 1, static_cast<unsigned long>(i - 1)));
  const bool ok = plain == plain_rhs && weighted == weighted_rhs;
  return report_compare("binomial-sum", params, ok,
                        plain.to_string() + " | " + weighted.to_string(),
                        plain_rhs.to_string() + " | " + weighted_rhs.to_string());
}

}  // namespace mhsum
