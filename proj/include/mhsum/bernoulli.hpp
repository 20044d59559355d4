#pragma once

// Seki-Bernoulli numbers B_0..B_max as exact rationals.  Convention:
// B_1 = +1/2; every formula in this library only ever consumes indices
// >= 2, where the two sign conventions agree.

#include <cstdint>
#include <vector>

#include "mhsum/errors.hpp"
#include "mhsum/rational.hpp"
#include "mhsum/residue.hpp"

namespace mhsum {

class BernoulliTable {
 public:
  // Classical recurrence sum_{j=0}^{n} C(n+1,j) B_j = 0 (which yields
  // B_1 = -1/2), then the index-1 entry is negated to Seki's +1/2.
  explicit BernoulliTable(int max_index) {
    if (max_index < 0)
      throw InvalidRangeError("Bernoulli table size must be >= 0");
    b_.reserve(static_cast<size_t>(max_index) + 1);
    b_.push_back(Rational(1));
    for (int n = 1; n <= max_index; ++n) {
      Rational acc;
      for (int j = 0; j < n; ++j)
        acc += binomial(n + 1, static_cast<unsigned long>(j)) * b_[j];
      b_.push_back(-acc / Rational(n + 1));
    }
    if (max_index >= 1) b_[1] = Rational(1, 2);
  }

  int max_index() const { return static_cast<int>(b_.size()) - 1; }

  const Rational& at(int j) const {
    if (j < 0 || j > max_index())
      throw InvalidRangeError("Bernoulli index " + std::to_string(j) +
                              " outside table (max " +
                              std::to_string(max_index()) + ")");
    return b_[static_cast<size_t>(j)];
  }

 private:
  std::vector<Rational> b_;
};

// B_j mod p^n.  By von Staudt-Clausen this fails with
// NonInvertibleDenominator exactly when j > 0 is even and (p-1) | j.
inline Residue bernoulli_residue(const BernoulliTable& table, int j,
                                 std::uint32_t p, std::uint32_t n) {
  return mod_reduce(table.at(j), p, n);
}

}  // namespace mhsum
