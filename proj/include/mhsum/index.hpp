#pragma once

// Index and exponent-tuple combinatorics: the Hoffman dual, entrywise
// sums, enumeration of composition families, and the binomial-product
// coefficient b(k;e) attached to an (index, exponent-tuple) pair.

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mhsum/errors.hpp"
#include "mhsum/rational.hpp"

namespace mhsum {

// Tuple of positive integers (k_1,...,k_r).  The empty index is a valid
// distinguished value with wt = dep = 0.
class Index {
 public:
  Index() = default;

  explicit Index(std::vector<int> entries) : e_(std::move(entries)) {
    for (int v : e_)
      if (v < 1)
        throw InvalidRangeError("index entries must be positive, got " +
                                std::to_string(v));
  }

  // Comma-separated positive integers, e.g. "1,1,2"; "" is the empty index.
  static Index parse(const std::string& s) {
    std::vector<int> entries;
    size_t pos = 0;
    while (pos < s.size()) {
      size_t next = s.find(',', pos);
      if (next == std::string::npos) next = s.size();
      const std::string tok = s.substr(pos, next - pos);
      size_t used = 0;
      int v = 0;
      try {
        v = std::stoi(tok, &used);
      } catch (const std::exception&) {
        throw InvalidRangeError("unparsable index literal: '" + s + "'");
      }
      if (used != tok.size())
        throw InvalidRangeError("unparsable index literal: '" + s + "'");
      entries.push_back(v);
      pos = next + 1;
    }
    return Index(std::move(entries));
  }

  bool empty() const { return e_.empty(); }
  int depth() const { return static_cast<int>(e_.size()); }

  int weight() const {
    int w = 0;
    for (int v : e_) w += v;
    return w;
  }

  int at(int i) const { return e_[static_cast<size_t>(i)]; }
  const std::vector<int>& entries() const { return e_; }

  friend bool operator==(const Index&, const Index&) = default;
  friend auto operator<=>(const Index&, const Index&) = default;

  // "(1,1,2)"; the empty index prints as "()".
  std::string to_string() const {
    std::string out = "(";
    for (size_t i = 0; i < e_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(e_[i]);
    }
    out += ')';
    return out;
  }

 private:
  std::vector<int> e_;
};

// Tuple of non-negative integers (e_1,...,e_r) with r >= 1.
class ExponentTuple {
 public:
  explicit ExponentTuple(std::vector<int> entries) : e_(std::move(entries)) {
    if (e_.empty())
      throw InvalidRangeError("exponent tuple must have depth >= 1");
    for (int v : e_)
      if (v < 0)
        throw InvalidRangeError("exponent entries must be >= 0, got " +
                                std::to_string(v));
  }

  static ExponentTuple zeros(int depth) {
    if (depth < 1)
      throw InvalidRangeError("exponent tuple must have depth >= 1");
    return ExponentTuple(std::vector<int>(static_cast<size_t>(depth), 0));
  }

  int depth() const { return static_cast<int>(e_.size()); }

  int weight() const {
    int w = 0;
    for (int v : e_) w += v;
    return w;
  }

  int at(int i) const { return e_[static_cast<size_t>(i)]; }
  const std::vector<int>& entries() const { return e_; }

  friend bool operator==(const ExponentTuple&, const ExponentTuple&) = default;

  std::string to_string() const {
    std::string out = "(";
    for (size_t i = 0; i < e_.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(e_[i]);
    }
    out += ')';
    return out;
  }

 private:
  std::vector<int> e_;
};

// ({1}^e); e = 0 gives the empty index.
inline Index ones(int e) {
  if (e < 0) throw InvalidRangeError("ones(e) needs e >= 0");
  return Index(std::vector<int>(static_cast<size_t>(e), 1));
}

// Hoffman dual through the run decomposition
//   k = ({1}^{a_1-1}, b_1+1, ..., {1}^{a_{s-1}-1}, b_{s-1}+1, {1}^{a_s-1}, b_s)
//   k^v = (a_1, {1}^{b_1-1}, a_2+1, {1}^{b_2-1}, ..., a_s+1, {1}^{b_s-1})
// with all a_i, b_i >= 1.  An involution; wt is preserved and
// dep(k^v) = wt(k) - dep(k) + 1.
inline Index hoffman_dual(const Index& k) {
  if (k.empty()) throw EmptyIndexError("Hoffman dual of the empty index");
  std::vector<int> a, b;
  int run = 0;  // ones seen since the last segment closed
  for (int i = 0; i < k.depth(); ++i) {
    const int v = k.at(i);
    const bool last = i == k.depth() - 1;
    if (v == 1 && !last) {
      ++run;
      continue;
    }
    a.push_back(run + 1);
    b.push_back(last ? v : v - 1);
    run = 0;
  }
  std::vector<int> dual;
  for (size_t t = 0; t < a.size(); ++t) {
    dual.push_back(t == 0 ? a[t] : a[t] + 1);
    for (int j = 0; j < b[t] - 1; ++j) dual.push_back(1);
  }
  return Index(std::move(dual));
}

// Entrywise sum k + e.
inline Index index_plus(const Index& k, const ExponentTuple& e) {
  if (k.depth() != e.depth())
    throw DepthMismatchError("index depth " + std::to_string(k.depth()) +
                             " vs exponent depth " +
                             std::to_string(e.depth()));
  std::vector<int> sum(k.entries());
  for (int i = 0; i < e.depth(); ++i) sum[static_cast<size_t>(i)] += e.at(i);
  return Index(std::move(sum));
}

// k^+ : last entry incremented.
inline Index index_succ(const Index& k) {
  if (k.empty()) throw EmptyIndexError("successor of the empty index");
  std::vector<int> e(k.entries());
  e.back() += 1;
  return Index(std::move(e));
}

// (k_1,...,k_r,v).
inline Index index_append(const Index& k, int v) {
  std::vector<int> e(k.entries());
  e.push_back(v);
  return Index(std::move(e));
}

// All compositions of k into r positive parts, ascending lexicographic
// order; |result| = C(k-1, r-1).
inline std::vector<Index> enum_I(int k, int r) {
  if (r < 1 || r > k)
    throw InvalidRangeError("enum_I needs 1 <= r <= k, got k=" +
                            std::to_string(k) + " r=" + std::to_string(r));
  std::vector<Index> out;
  std::vector<int> cur(static_cast<size_t>(r));
  auto rec = [&](auto&& self, int pos, int rest) -> void {
    if (pos == r - 1) {
      cur[static_cast<size_t>(pos)] = rest;
      out.emplace_back(cur);
      return;
    }
    for (int v = 1; v <= rest - (r - 1 - pos); ++v) {
      cur[static_cast<size_t>(pos)] = v;
      self(self, pos + 1, rest - v);
    }
  };
  rec(rec, 0, k);
  return out;
}

// Subset of enum_I(k,r) with k_i >= 2 (1-based i); |result| = C(k-2, r-1).
inline std::vector<Index> enum_I_i(int k, int r, int i) {
  if (!(1 <= i && i <= r && r < k))
    throw InvalidRangeError("enum_I_i needs 1 <= i <= r < k, got k=" +
                            std::to_string(k) + " r=" + std::to_string(r) +
                            " i=" + std::to_string(i));
  std::vector<Index> out;
  for (auto& idx : enum_I(k, r))
    if (idx.at(i - 1) >= 2) out.push_back(idx);
  return out;
}

// All weak compositions of e into r non-negative parts, descending
// lexicographic order; |result| = C(e+r-1, r-1).
inline std::vector<ExponentTuple> enum_J(int e, int r) {
  if (e < 0 || r < 1)
    throw InvalidRangeError("enum_J needs e >= 0, r >= 1, got e=" +
                            std::to_string(e) + " r=" + std::to_string(r));
  std::vector<ExponentTuple> out;
  std::vector<int> cur(static_cast<size_t>(r));
  auto rec = [&](auto&& self, int pos, int rest) -> void {
    if (pos == r - 1) {
      cur[static_cast<size_t>(pos)] = rest;
      out.emplace_back(cur);
      return;
    }
    for (int v = rest; v >= 0; --v) {
      cur[static_cast<size_t>(pos)] = v;
      self(self, pos + 1, rest - v);
    }
  };
  rec(rec, 0, e);
  return out;
}

// b(k;e) = prod_i C(k_i + e_i + [i=1] + [i=r] - 2, e_i), with binomials
// read as falling factorials so that C(e-1,e) is 1 at e=0 and 0 for
// e > 0.  Always a non-negative integer.
inline std::uint64_t b_coeff(const Index& k, const ExponentTuple& e) {
  if (k.empty()) throw EmptyIndexError("b(k;e) needs a nonempty index");
  if (k.depth() != e.depth())
    throw DepthMismatchError("b(k;e) depth mismatch: " +
                             std::to_string(k.depth()) + " vs " +
                             std::to_string(e.depth()));
  const int r = k.depth();
  Rational prod(1);
  for (int i = 0; i < r; ++i) {
    const long upper =
        k.at(i) + e.at(i) + (i == 0 ? 1 : 0) + (i == r - 1 ? 1 : 0) - 2;
    prod *= binomial(upper, static_cast<unsigned long>(e.at(i)));
    if (prod.is_zero()) return 0;
  }
  return prod.to_u64();
}

}  // namespace mhsum
