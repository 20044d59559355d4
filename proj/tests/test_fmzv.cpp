#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "mhsum/bernoulli.hpp"
#include "mhsum/fmzv.hpp"
#include "mhsum/qsum.hpp"

using namespace mhsum;

namespace {
std::vector<Index> all_indices_up_to(int max_wt) {
  std::vector<Index> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int rest) -> void {
    if (rest == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int v = 1; v <= rest; ++v) {
      cur.push_back(v);
      self(self, rest - v);
      cur.pop_back();
    }
  };
  for (int w = 1; w <= max_wt; ++w) rec(rec, w);
  return out;
}
}  // namespace

TEST_CASE("modular harmonic sums agree with exact-rational reduction") {
  // Two genuinely different routes: the modular prefix recursion versus the
  // exact rational nested sum reduced at the very end.
  for (std::uint32_t n = 1; n <= 2; ++n) {
    const ModContext ctx(7, n);
    for (const Index& k : all_indices_up_to(4)) {
      CHECK(zeta_p(k, ctx) == zeta_p_via_rational(k, 7, n));
      CHECK(zeta_star_p(k, ctx) == zeta_star_p_via_rational(k, 7, n));
    }
  }
  const ModContext ctx3(5, 3);
  for (const Index& k : all_indices_up_to(3)) {
    CHECK(zeta_p(k, ctx3) == zeta_p_via_rational(k, 5, 3));
    CHECK(zeta_star_p(k, ctx3) == zeta_star_p_via_rational(k, 5, 3));
  }
}

TEST_CASE("pinned depth-one anchors") {
  // 1 + 1/4 + 1/9 + 1/16 = 205/144; 144^{-1} mod 25 exists and gives 20.
  CHECK(zeta_p(Index({2}), ModContext(5, 2)).value() == 20);
  CHECK(mod_reduce(Rational(205, 144), 5, 2).value() == 20);
  // Wolstenholme: H_{p-1} vanishes mod p^2 for p >= 5.
  CHECK(zeta_p(Index({1}), ModContext(5, 2)).value() == 0);
  CHECK(zeta_p(Index({1}), ModContext(11, 2)).value() == 0);
  CHECK(zeta_p(Index({1}), ModContext(13, 2)).value() == 0);
  // 1 + 1/8 + ... + 1/216 at p = 7 reduces to 196 mod 343.
  CHECK(zeta_p(Index({3}), ModContext(7, 3)).value() == 196);
  CHECK(zeta_p(Index(), ModContext(7, 1)).value() == 1);
  CHECK(zeta_star_p(Index(), ModContext(7, 1)).value() == 1);
}

TEST_CASE("depth-one cube anchor matches its closed form directly") {
  // Below the sweep guard for p = 7 (weight 3 at n = 3), so pinned here at
  // the evaluator level: -k(k+1)/2 * B_{p-k-2}/(k+2) * p^2 at k = 3.
  const BernoulliTable bern(8);
  // -k(k+1)/2 = -6, B_{p-k-2} = B_2, divisor k+2 = 5, p^2 = 49.
  const Rational closed =
      Rational(-6) * bern.at(2) / Rational(5) * Rational(49);
  CHECK(mod_reduce(closed, 7, 3).value() == 196);
}

TEST_CASE("guard predicate and skip reporting") {
  CHECK(prime_large_enough(11, 5, 1));
  CHECK_FALSE(prime_large_enough(7, 5, 1));
  CHECK_FALSE(prime_large_enough(7, 3, 3));
  const VerificationReport r = verify_depth_sum_zero(5, 2, 5);
  CHECK(r.skipped());
  bool has_reason = false;
  for (const auto& [key, value] : r.params)
    if (key == "reason") has_reason = !value.empty();
  CHECK(has_reason);
  // a skipped case never claims values
  CHECK(r.lhs.empty());
  CHECK(r.rhs.empty());
}

TEST_CASE("fixed weight and depth sums vanish modulo p") {
  for (int k = 1; k <= 5; ++k)
    for (int r = 1; r <= k; ++r)
      for (std::uint32_t p : {7u, 11u, 13u}) {
        const VerificationReport rep = verify_depth_sum_zero(k, r, p);
        if (prime_large_enough(p, k, 1)) {
          CHECK(rep.passed());
        } else {
          CHECK(rep.skipped());
        }
      }
}

TEST_CASE("all-ones star values vanish modulo p") {
  for (int e = 1; e <= 5; ++e)
    for (std::uint32_t p : {11u, 13u}) CHECK(verify_zeta_star_ones(e, p).passed());
}

TEST_CASE("binomial-tail sums reduce to star values with a sign") {
  for (const Index& k : all_indices_up_to(4))
    for (std::uint32_t p : {7u, 11u, 13u}) {
      const VerificationReport rep = verify_hstar_bridge(k, p);
      if (prime_large_enough(p, k.weight(), 1)) {
        CHECK(rep.passed());
      } else {
        CHECK(rep.skipped());
      }
    }
  // direct spot check: H*_{p-1} == -zeta*_{p-1} mod p
  const ModContext ctx(11, 1);
  const Index k({2, 1});
  CHECK(H_star_mod(k, ctx) == -zeta_star_p(k, ctx));
}

TEST_CASE("weight-and-depth sums with one forced entry match Bernoulli data") {
  const BernoulliTable bern(100);
  for (int k = 2; k <= 7; ++k)
    for (int r = 1; r < k; ++r)
      for (int i = 1; i <= r; ++i)
        for (std::uint32_t p : {11u, 13u, 17u}) {
          CHECK_FALSE(verify_sw(k, r, i, p, bern).failed());
          CHECK_FALSE(verify_sw_star(k, r, i, p, bern).failed());
        }
  // pinned nonzero residue: k=3, r=2, i=1, p=7 gives 1/30 = 4 mod 7.
  const VerificationReport rep = verify_sw(3, 2, 1, 7, bern);
  CHECK(rep.passed());
  CHECK(rep.lhs == "4 mod 7");
  CHECK(rep.rhs == "4 mod 7");
}

TEST_CASE("even-weight fixed-entry sums vanish mod p in both variants") {
  for (int k = 2; k <= 6; k += 2)
    for (int r = 1; r < k; ++r)
      for (int i = 1; i <= r; ++i)
        for (std::uint32_t p : {11u, 13u}) CHECK_FALSE(verify_sw_even(k, r, i, p).failed());
  CHECK_THROWS_AS(verify_sw_even(3, 2, 1, 11), ParityViolationError);
}

TEST_CASE("shift-sum congruence holds modulo p") {
  for (const Index& k : all_indices_up_to(4))
    for (int e = 0; e <= 2; ++e)
      for (std::uint32_t p : {11u, 13u}) CHECK_FALSE(verify_hims(k, e, p).failed());
  CHECK(verify_hims(Index({2, 1}), 2, 13).passed());
}

TEST_CASE("depth sums modulo p squared match their closed forms") {
  const BernoulliTable bern(100);
  for (int k = 1; k <= 5; ++k)
    for (int r = 1; r <= k; ++r)
      for (std::uint32_t p : {11u, 13u, 17u}) {
        CHECK_FALSE(verify_a2_depth_sum(k, r, p, bern, false).failed());
        CHECK_FALSE(verify_a2_depth_sum(k, r, p, bern, true).failed());
      }
}

TEST_CASE("depth sums modulo p cubed require odd weight") {
  const BernoulliTable bern(100);
  for (int k = 1; k <= 5; k += 2)
    for (int r = 1; r <= k; ++r)
      for (std::uint32_t p : {13u, 17u}) {
        CHECK_FALSE(verify_a3_depth_sum(k, r, p, bern, false).failed());
        CHECK_FALSE(verify_a3_depth_sum(k, r, p, bern, true).failed());
      }
  CHECK_THROWS_AS(verify_a3_depth_sum(2, 1, 13, bern, false),
                  ParityViolationError);
}

TEST_CASE("even-weight fixed-entry sums modulo p squared") {
  const BernoulliTable bern(100);
  for (int k = 2; k <= 6; k += 2)
    for (int r = 1; r < k; ++r)
      for (int i = 1; i <= r; ++i)
        for (std::uint32_t p : {13u, 17u}) {
          CHECK_FALSE(verify_a2_fixed_entry_sum(k, r, i, p, bern, false).failed());
          CHECK_FALSE(verify_a2_fixed_entry_sum(k, r, i, p, bern, true).failed());
        }
  CHECK_THROWS_AS(verify_a2_fixed_entry_sum(3, 2, 1, 13, bern, false),
                  ParityViolationError);
}

TEST_CASE("star and non-star depth sums are sign reflections") {
  for (int k = 1; k <= 5; ++k)
    for (int r = 1; r <= k; ++r)
      for (std::uint32_t p : {11u, 13u})
        CHECK_FALSE(verify_a2_depth_sum_reflection(k, r, p).failed());
}

TEST_CASE("mod p squared sums reduce consistently to mod p") {
  for (int k = 1; k <= 5; ++k)
    for (int r = 1; r <= k; ++r)
      for (std::uint32_t p : {11u, 13u})
        CHECK_FALSE(verify_mt2_sw_consistency(k, r, p).failed());
}

TEST_CASE("two and three entry star values have Bernoulli closed forms") {
  const BernoulliTable bern(100);
  for (int k1 = 1; k1 <= 4; ++k1)
    for (int k2 = 1; k1 + k2 <= 5; ++k2)
      for (std::uint32_t p : {11u, 13u})
        CHECK_FALSE(verify_a_pair(k1, k2, p, bern).failed());
  for (std::uint32_t p : {11u, 13u}) {
    CHECK_FALSE(verify_a_triple(1, 1, 1, p, bern).failed());
    CHECK_FALSE(verify_a_triple(2, 2, 1, p, bern).failed());
    CHECK_FALSE(verify_a_triple(1, 2, 2, p, bern).failed());
    CHECK_FALSE(verify_a_triple(3, 1, 1, p, bern).failed());
  }
  CHECK_THROWS_AS(verify_a_triple(1, 1, 2, 11, bern), ParityViolationError);
}

TEST_CASE("repeated-entry and pair star values modulo p squared") {
  const BernoulliTable bern(100);
  for (std::uint32_t p : {11u, 13u, 17u}) {
    CHECK_FALSE(verify_a2_repeated(1, 3, p, bern).failed());
    CHECK_FALSE(verify_a2_repeated(2, 2, p, bern).failed());
    CHECK_FALSE(verify_a2_repeated(3, 1, p, bern).failed());
    CHECK_FALSE(verify_a2_pair(1, 3, p, bern).failed());
    CHECK_FALSE(verify_a2_pair(2, 2, p, bern).failed());
    CHECK_FALSE(verify_a2_pair(1, 1, p, bern).failed());
  }
  CHECK_THROWS_AS(verify_a2_pair(1, 2, 11, bern), ParityViolationError);
}

TEST_CASE("single-entry value modulo p cubed for odd exponents") {
  const BernoulliTable bern(100);
  for (int k = 1; k <= 5; k += 2)
    for (std::uint32_t p : {11u, 13u, 17u})
      CHECK_FALSE(verify_a3_single(k, p, bern).failed());
  CHECK(verify_a3_single(3, 11, bern).passed());
  CHECK_THROWS_AS(verify_a3_single(2, 11, bern), ParityViolationError);
}

TEST_CASE("alternating reversal convolution telescopes to zero") {
  for (const Index& k : all_indices_up_to(4))
    for (std::uint32_t n = 1; n <= 2; ++n)
      for (std::uint32_t p : {11u, 13u})
        CHECK_FALSE(verify_antipode(k, p, n).failed());
  CHECK(verify_antipode(Index({2, 1}), 13, 2).passed());
}

TEST_CASE("shift-sum congruence lifts to p squared with correction terms") {
  for (const Index& k : all_indices_up_to(3))
    for (int e = 0; e <= 2; ++e)
      for (std::uint32_t p : {13u, 17u}) CHECK_FALSE(verify_a2_ohno(k, e, p).failed());
  CHECK(verify_a2_ohno(Index({2}), 1, 13).passed());
  CHECK(verify_a2_ohno(Index({1, 2}), 1, 13).passed());
}

TEST_CASE("signed binomial rows satisfy their congruences") {
  for (std::uint32_t p : {5u, 7u, 11u, 13u, 17u}) {
    CHECK(verify_binom_congruence_p2(p).passed());
    CHECK(verify_binom_congruence_p3(p).passed());
  }
}

TEST_CASE("binomial summation lemma at even weight") {
  // includes both pinned examples and a degenerate r = k - 1 case
  CHECK(verify_binomial_sum(4, 2, 1).passed());
  CHECK(verify_binomial_sum(8, 3, 2).passed());
  CHECK(verify_binomial_sum(6, 5, 3).passed());
  for (int k = 2; k <= 8; k += 2)
    for (int r = 1; r < k; ++r)
      for (int i = 1; i <= r; ++i) CHECK(verify_binomial_sum(k, r, i).passed());
  CHECK_THROWS_AS(verify_binomial_sum(4, 4, 1), InvalidRangeError);
  CHECK_THROWS_AS(verify_binomial_sum(4, 2, 3), InvalidRangeError);
}

TEST_CASE("input validation on the modular verifiers") {
  const BernoulliTable bern(40);
  CHECK_THROWS_AS(verify_depth_sum_zero(0, 1, 11), InvalidRangeError);
  CHECK_THROWS_AS(verify_depth_sum_zero(3, 4, 11), InvalidRangeError);
  CHECK_THROWS_AS(verify_sw(3, 3, 1, 11, bern), InvalidRangeError);
  CHECK_THROWS_AS(verify_sw(3, 2, 0, 11, bern), InvalidRangeError);
  CHECK_THROWS_AS(verify_a2_depth_sum(0, 1, 11, bern, false), InvalidRangeError);
  CHECK_THROWS_AS(verify_a2_repeated(0, 1, 11, bern), InvalidRangeError);
  CHECK_THROWS_AS(verify_hims(Index(), 1, 11), EmptyIndexError);
}
