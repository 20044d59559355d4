#include <vector>

#include <catch2/catch_amalgamated.hpp>

#include "mhsum/connect.hpp"
#include "mhsum/qsum.hpp"

using namespace mhsum;

namespace {
const QPoint qhalf{Rational(1, 2)};
const QPoint q23{Rational(2, 3)};

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

TEST_CASE("connection states validate and print both halves") {
  const ConnState st({1, 1, 0}, Index({1, 1}));
  CHECK(st.to_string() == "(1,1,0 ; 1,1)");
  CHECK(ConnState::initial(Index({2, 1})).to_string() == "(2,1 ; )");
  CHECK(ConnState::initial(Index({2, 1})).left == std::vector<int>{2, 1});
  CHECK_FALSE(ConnState::initial(Index({1})).terminal());
  CHECK(ConnState({0}, Index({3, 1})).terminal());
  CHECK_THROWS_AS(ConnState({}, Index()), EmptyIndexError);
  CHECK_THROWS_AS(ConnState({-1}, Index()), InvalidRangeError);
}

TEST_CASE("move one peels a unit off the last left entry") {
  const ConnState st = transport_a(ConnState({1, 1, 2}, Index()));
  CHECK(st == ConnState({1, 1, 1}, Index({1})));
  const ConnState st2 = transport_a(ConnState({1, 1, 1}, Index({1})));
  CHECK(st2 == ConnState({1, 1, 0}, Index({1, 1})));
  CHECK_THROWS_AS(transport_a(ConnState({1, 0}, Index({2}))),
                  InapplicableMoveError);
}

TEST_CASE("move two retires an exhausted left entry") {
  const ConnState st = transport_b(ConnState({1, 1, 0}, Index({1, 1})));
  CHECK(st == ConnState({1, 0}, Index({2, 1})));
  // needs a zero tail, a positive neighbor, and a nonempty right half
  CHECK_THROWS_AS(transport_b(ConnState({1, 1}, Index({1}))),
                  InapplicableMoveError);
  CHECK_THROWS_AS(transport_b(ConnState({0}, Index({1}))),
                  InapplicableMoveError);
  CHECK_THROWS_AS(transport_b(ConnState({1, 0}, Index())),
                  InapplicableMoveError);
}

TEST_CASE("transport chain for (1,1,2) follows the pinned route") {
  const std::vector<ConnState> chain = transport_chain(Index({1, 1, 2}));
  REQUIRE(chain.size() == 5);
  CHECK(chain[0] == ConnState({1, 1, 2}, Index()));
  CHECK(chain[1] == ConnState({1, 1, 1}, Index({1})));
  CHECK(chain[2] == ConnState({1, 1, 0}, Index({1, 1})));
  CHECK(chain[3] == ConnState({1, 0}, Index({2, 1})));
  CHECK(chain[4] == ConnState({0}, Index({3, 1})));
}

TEST_CASE("every chain ends at the dual in weight-many moves") {
  for (const Index& k : all_indices_up_to(6)) {
    const std::vector<ConnState> chain = transport_chain(k);
    CHECK(static_cast<int>(chain.size()) == k.weight() + 1);
    CHECK(chain.front() == ConnState::initial(k));
    CHECK(chain.back().terminal());
    CHECK(chain.back().right == hoffman_dual(k));
  }
}

TEST_CASE("connector factor matches its hand expansion at small arguments") {
  // C(1,1) = q * ([1] - q x) = q - q^2 x.
  const TruncatedSeries c = connector(1, 1, qhalf, 2);
  CHECK(c.coeff(0) == Rational(1, 2));
  CHECK(c.coeff(1) == Rational(-1, 4));
  // C(2,2) = -q^3 (1 - qx)([2] - q^2 x)/[2]!
  //        = -(1/12)(3/2 - x + x^2/8) = -1/8 + x/12 - x^2/96.
  const TruncatedSeries c22 = connector(2, 2, qhalf, 3);
  CHECK(c22.coeff(0) == Rational(-1, 8));
  CHECK(c22.coeff(1) == Rational(1, 12));
  CHECK(c22.coeff(2) == Rational(-1, 96));
  CHECK_THROWS_AS(connector(0, 1, qhalf, 2), InvalidRangeError);
  CHECK_THROWS_AS(connector(3, 2, qhalf, 2), InvalidRangeError);
}

TEST_CASE("connected sum with empty right half matches a pinned series") {
  // N = 1: single m = 1 term q/([1]-qx) = q sum_e (qx)^e.
  const TruncatedSeries z = Z_star(ConnState::initial(Index({1})), qhalf, 1, 4);
  CHECK(z.coeff(0) == Rational(1, 2));
  CHECK(z.coeff(1) == Rational(1, 4));
  CHECK(z.coeff(2) == Rational(1, 8));
  CHECK(z.coeff(3) == Rational(1, 16));
}

TEST_CASE("transport moves preserve the connected sum exactly") {
  for (const Index& k : all_indices_up_to(5)) {
    for (int N = 1; N <= 3; ++N) {
      const std::vector<ConnState> chain = transport_chain(k);
      const TruncatedSeries first = Z_star(chain.front(), qhalf, N, 4);
      for (size_t i = 1; i < chain.size(); ++i)
        CHECK(Z_star(chain[i], qhalf, N, 4) == first);
    }
  }
}

TEST_CASE("chain invariance reports carry the move count") {
  const VerificationReport r = verify_transport_chain(Index({2, 1}), q23, 4, 3);
  CHECK(r.passed());
  CHECK(r.identity == "transport-chain");
  bool has_moves = false;
  for (const auto& [key, value] : r.params)
    if (key == "moves") {
      has_moves = true;
      CHECK(value == "3");
    }
  CHECK(has_moves);
}

TEST_CASE("boundary-value generating series factorizes through the dual") {
  for (const Index& k : all_indices_up_to(5)) {
    for (int N = 1; N <= 4; ++N) {
      CHECK(verify_pqr(k, qhalf, N, 4).passed());
      CHECK(verify_pq_coefficients(k, qhalf, N, 4).passed());
    }
  }
}

TEST_CASE("resolvent product has constant term one and inverts cleanly") {
  const TruncatedSeries r1 = R_N(qhalf, 1, 4);
  // R_1 = (1 - qx/[1])^{-1} = sum (x/2)^e.
  CHECK(r1.coeff(0) == Rational(1));
  CHECK(r1.coeff(1) == Rational(1, 2));
  CHECK(r1.coeff(2) == Rational(1, 4));
  CHECK(r1.coeff(3) == Rational(1, 8));
  for (int N = 1; N <= 6; ++N)
    CHECK(R_N(q23, N, 5).coeff(0) == Rational(1));
}

TEST_CASE("x-expansion coefficients recover the shift-sum sides") {
  const Index k({1, 2});
  const int N = 3;
  const TruncatedSeries p = P_N(k, qhalf, N, 4);
  const TruncatedSeries qr =
      Q_N(hoffman_dual(k), qhalf, N, 4) * R_N(qhalf, N, 4);
  for (int e = 0; e < 4; ++e) {
    CHECK(p.coeff(e) == ohno_lhs_q(k, e, N, qhalf));
    CHECK(qr.coeff(e) == ohno_rhs_q(k, e, N, qhalf));
  }
}

TEST_CASE("single-denominator partial fractions hold to high order") {
  for (int n1 = 1; n1 <= 8; ++n1) {
    CHECK(verify_partial_fraction(n1, qhalf, 6).passed());
    CHECK(verify_partial_fraction(n1, q23, 6).passed());
  }
  CHECK_THROWS_AS(verify_partial_fraction(0, qhalf, 4), InvalidRangeError);
}

TEST_CASE("geometric expansion of inverse denominators is exact") {
  for (int m = 1; m <= 6; ++m)
    for (int k = 0; k <= 5; ++k) CHECK(verify_expansion(m, k, qhalf, 6).passed());
  CHECK_THROWS_AS(verify_expansion(0, 1, qhalf, 4), InvalidRangeError);
  CHECK_THROWS_AS(verify_expansion(1, -1, qhalf, 4), InvalidRangeError);
}
