#pragma once

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "mhsum/bernoulli.hpp"
#include "mhsum/connect.hpp"
#include "mhsum/errors.hpp"
#include "mhsum/fmzv.hpp"
#include "mhsum/index.hpp"
#include "mhsum/qsum.hpp"
#include "mhsum/report.hpp"

namespace mhsum {

// Parameter ranges for a verification sweep.  Every statement in the registry
// enumerates its cases from these bounds; guards inside the fmzv checks turn
// out-of-range primes into SKIPPED rows rather than silently passing.
struct SweepConfig {
  int max_weight = 5;
  int max_e = 3;
  int max_N = 6;
  int order = 4;
  std::vector<Rational> q_points{Rational(1, 2), Rational(2, 3), Rational(3, 5)};
  std::vector<std::uint32_t> primes{5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47, 53};
  std::vector<std::string> only;  // statement ids; empty = everything

  void validate() const {
    if (max_weight < 1) throw ConfigError("max_weight must be >= 1");
    if (max_e < 0) throw ConfigError("max_e must be >= 0");
    if (max_N < 1) throw ConfigError("max_N must be >= 1");
    if (order < 0) throw ConfigError("order must be >= 0");
    if (q_points.empty()) throw ConfigError("need at least one q sample");
    for (const Rational& q : q_points)
      if (q.sign() <= 0 || !(q < Rational(1)))
        throw ConfigError("q samples must lie strictly between 0 and 1, got " + q.to_string());
    if (primes.empty()) throw ConfigError("need at least one prime");
    for (std::uint32_t p : primes) {
      if (p < 3 || !PrimePower::is_prime(p))
        throw ConfigError(std::to_string(p) + " is not an odd prime");
    }
  }
};

namespace detail {

inline std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

inline std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::string item;
  std::istringstream in(s);
  while (std::getline(in, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

inline int parse_int(const std::string& v, const std::string& where) {
  try {
    size_t pos = 0;
    const int x = std::stoi(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return x;
  } catch (const std::exception&) {
    throw ConfigError(where + ": expected an integer, got '" + v + "'");
  }
}

}  // namespace detail

// Flat key = value file; '#' starts a comment.  Keys mirror the CLI flags:
// max_weight, max_e, max_N, order, q, primes, only.
inline SweepConfig parse_config_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file " + path);
  SweepConfig cfg;
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = detail::trim(line);
    if (line.empty()) continue;
    const std::string where = path + ":" + std::to_string(lineno);
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw ConfigError(where + ": expected key = value");
    const std::string key = detail::trim(line.substr(0, eq));
    const std::string value = detail::trim(line.substr(eq + 1));
    if (value.empty()) throw ConfigError(where + ": empty value for '" + key + "'");
    if (key == "max_weight") {
      cfg.max_weight = detail::parse_int(value, where);
    } else if (key == "max_e") {
      cfg.max_e = detail::parse_int(value, where);
    } else if (key == "max_N") {
      cfg.max_N = detail::parse_int(value, where);
    } else if (key == "order") {
      cfg.order = detail::parse_int(value, where);
    } else if (key == "q") {
      cfg.q_points.clear();
      for (const std::string& item : detail::split_list(value)) {
        try {
          cfg.q_points.push_back(Rational::from_string(item));
        } catch (const Error&) {
          throw ConfigError(where + ": bad rational '" + item + "'");
        }
      }
    } else if (key == "primes") {
      cfg.primes.clear();
      for (const std::string& item : detail::split_list(value))
        cfg.primes.push_back(static_cast<std::uint32_t>(detail::parse_int(item, where)));
    } else if (key == "only") {
      cfg.only = detail::split_list(value);
    } else {
      throw ConfigError(where + ": unknown key '" + key + "'");
    }
  }
  return cfg;
}

// All nonempty indices of weight 1..max_wt, weight-major, lexicographic within
// a weight.  Deterministic enumeration order keeps reports byte-stable.
inline std::vector<Index> indices_up_to_weight(int max_wt) {
  std::vector<Index> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int remaining) -> void {
    if (remaining == 0) {
      out.emplace_back(cur);
      return;
    }
    for (int v = 1; v <= remaining; ++v) {
      cur.push_back(v);
      self(self, remaining - v);
      cur.pop_back();
    }
  };
  for (int w = 1; w <= max_wt; ++w) rec(rec, w);
  return out;
}

namespace registry {

using Out = std::vector<VerificationReport>;

inline void euler(const SweepConfig& c, const BernoulliTable&, Out& out) {
  for (int N = 1; N <= c.max_N; ++N)
    out.push_back(verify_identity({.id = "euler", .N = N}));
}

inline void hoffman(const SweepConfig& c, const BernoulliTable&, Out& out) {
  for (const Index& k : indices_up_to_weight(c.max_weight))
    for (int N = 1; N <= c.max_N; ++N)
      out.push_back(verify_identity({.id = "hoffman", .k = k, .N = N}));
}

inline void ohno(const SweepConfig& c, const BernoulliTable&, Out& out) {
  for (const Index& k : indices_up_to_weight(c.max_weight))
    for (int e = 0; e <= c.max_e; ++e)
      for (int N = 1; N <= c.max_N; ++N)
        out.push_back(verify_identity({.id = "ohno", .k = k, .e = e, .N = N}));
}

inline void van_hamme(const SweepConfig& c, const BernoulliTable&, Out& out) {
  for (int N = 1; N <= c.max_N; ++N)
    for (const Rational& q : c.q_points)
      out.push_back(verify_identity({.id = "van-hamme", .N = N, .q = q}));
}

inline void bradley(const SweepConfig& c, const BernoulliTable&, Out& out) {
  for (const Index& k : indices_up_to_weight(c.max_weight))
    for (int N = 1; N <= c.max_N; ++N)
      for (const Rational& q : c.q_points)
        out.push_back(verify_identity({.id = "bradley", .k = k, .N = N, .q = q}));
}

inline void q_ohno(const SweepConfig& c, const BernoulliTable&, Out& out) {
  for (const Index& k : indices_up_to_weight(c.max_weight))
    for (int e = 0; e <= c.max_e; ++e)
      for (int N = 1; N <= c.max_N; ++N)
        for (const Rational& q : c.q_points)
          out.push_back(verify_identity({.id = "q-ohno", .k = k, .e = e, .N = N, .q = q}));
}

inline void q_ohno_symbolic(const SweepConfig& c, const BernoulliTable&, Out& out) {
  for (const Index& k : indices_up_to_weight(std::min(c.max_weight, 4)))
    for (int e = 0; e <= std::min(c.max_e, 2); ++e)
      for (int N = 1; N <= std::min(c.max_N, 4); ++N)
        out.push_back(verify_identity({.id = "q-ohno-symbolic", .k = k, .e = e, .N = N}));
}

inline void transport_chain_stmt(const SweepConfig& c, const BernoulliTable&, Out& out) {
  for (const Index& k : indices_up_to_weight(c.max_weight))
    for (int N = 1; N <= c.max_N; ++N)
      for (const Rational& q : c.q_points)
        out.push_back(verify_transport_chain(k, QPoint(q), N, c.order));
}

inline void pqr(const SweepConfig& c, const BernoulliTable&, Out& out) {
  for (const Index& k : indices_up_to_weight(c.max_weight))
    for (int N = 1; N <= c.max_N; ++N)
      for (const Rational& q : c.q_points)
        out.push_back(verify_pqr(k, QPoint(q), N, c.order));
}

inline void pq_coefficients(const SweepConfig& c, const BernoulliTable&, Out& out) {
  for (const Index& k : indices_up_to_weight(c.max_weight))
    for (int N = 1; N <= c.max_N; ++N)
      for (const Rational& q : c.q_points)
        out.push_back(verify_pq_coefficients(k, QPoint(q), N, c.order));
}

inline void partial_fraction(const SweepConfig& c, const BernoulliTable&, Out& out) {
  for (int n1 = 1; n1 <= c.max_N; ++n1)
    for (const Rational& q : c.q_points)
      out.push_back(verify_partial_fraction(n1, QPoint(q), c.order));
}

inline void expansion(const SweepConfig& c, const BernoulliTable&, Out& out) {
  for (int m = 1; m <= c.max_N; ++m)
    for (int k = 0; k <= c.max_weight; ++k)
      for (const Rational& q : c.q_points)
        out.push_back(verify_expansion(m, k, QPoint(q), c.order));
}

inline void depth_sum_zero(const SweepConfig& c, const BernoulliTable&, Out& out) {
  for (int k = 1; k <= c.max_weight; ++k)
    for (int r = 1; r <= k; ++r)
      for (std::uint32_t p : c.primes) out.push_back(verify_depth_sum_zero(k, r, p));
}

inline void zeta_star_ones(const SweepConfig& c, const BernoulliTable&, Out& out) {
  for (int e = 1; e <= c.max_weight; ++e)
    for (std::uint32_t p : c.primes) out.push_back(verify_zeta_star_ones(e, p));
}

inline void hstar_bridge(const SweepConfig& c, const BernoulliTable&, Out& out) {
  for (const Index& k : indices_up_to_weight(c.max_weight))
    for (std::uint32_t p : c.primes) out.push_back(verify_hstar_bridge(k, p));
}

inline void sw(const SweepConfig& c, const BernoulliTable& bern, Out& out) {
  for (int k = 2; k <= c.max_weight; ++k)
    for (int r = 1; r < k; ++r)
      for (int i = 1; i <= r; ++i)
        for (std::uint32_t p : c.primes) out.push_back(verify_sw(k, r, i, p, bern));
}

inline void sw_star(const SweepConfig& c, const BernoulliTable& bern, Out& out) {
  for (int k = 2; k <= c.max_weight; ++k)
    for (int r = 1; r < k; ++r)
      for (int i = 1; i <= r; ++i)
        for (std::uint32_t p : c.primes) out.push_back(verify_sw_star(k, r, i, p, bern));
}

inline void sw_even(const SweepConfig& c, const BernoulliTable&, Out& out) {
  for (int k = 2; k <= c.max_weight; k += 2)
    for (int r = 1; r < k; ++r)
      for (int i = 1; i <= r; ++i)
        for (std::uint32_t p : c.primes) out.push_back(verify_sw_even(k, r, i, p));
}

inline void hims(const SweepConfig& c, const BernoulliTable&, Out& out) {
  for (const Index& k : indices_up_to_weight(c.max_weight))
    for (int e = 0; e <= c.max_e; ++e)
      for (std::uint32_t p : c.primes) out.push_back(verify_hims(k, e, p));
}

inline void a2_depth_sum(const SweepConfig& c, const BernoulliTable& bern, Out& out) {
  for (int k = 1; k <= c.max_weight; ++k)
    for (int r = 1; r <= k; ++r)
      for (std::uint32_t p : c.primes) out.push_back(verify_a2_depth_sum(k, r, p, bern, false));
}

inline void a2_depth_sum_star(const SweepConfig& c, const BernoulliTable& bern, Out& out) {
  for (int k = 1; k <= c.max_weight; ++k)
    for (int r = 1; r <= k; ++r)
      for (std::uint32_t p : c.primes) out.push_back(verify_a2_depth_sum(k, r, p, bern, true));
}

inline void a3_depth_sum(const SweepConfig& c, const BernoulliTable& bern, Out& out) {
  for (int k = 1; k <= c.max_weight; k += 2)
    for (int r = 1; r <= k; ++r)
      for (std::uint32_t p : c.primes) out.push_back(verify_a3_depth_sum(k, r, p, bern, false));
}

inline void a3_depth_sum_star(const SweepConfig& c, const BernoulliTable& bern, Out& out) {
  for (int k = 1; k <= c.max_weight; k += 2)
    for (int r = 1; r <= k; ++r)
      for (std::uint32_t p : c.primes) out.push_back(verify_a3_depth_sum(k, r, p, bern, true));
}

inline void a2_fixed_entry_sum(const SweepConfig& c, const BernoulliTable& bern, Out& out) {
  for (int k = 2; k <= c.max_weight; k += 2)
    for (int r = 1; r < k; ++r)
      for (int i = 1; i <= r; ++i)
        for (std::uint32_t p : c.primes)
          out.push_back(verify_a2_fixed_entry_sum(k, r, i, p, bern, false));
}

inline void a2_fixed_entry_sum_star(const SweepConfig& c, const BernoulliTable& bern, Out& out) {
  for (int k = 2; k <= c.max_weight; k += 2)
    for (int r = 1; r < k; ++r)
      for (int i = 1; i <= r; ++i)
        for (std::uint32_t p : c.primes)
          out.push_back(verify_a2_fixed_entry_sum(k, r, i, p, bern, true));
}

inline void a2_depth_sum_reflection(const SweepConfig& c, const BernoulliTable&, Out& out) {
  for (int k = 1; k <= c.max_weight; ++k)
    for (int r = 1; r <= k; ++r)
      for (std::uint32_t p : c.primes) out.push_back(verify_a2_depth_sum_reflection(k, r, p));
}

inline void mt2_sw_consistency(const SweepConfig& c, const BernoulliTable&, Out& out) {
  for (int k = 1; k <= c.max_weight; ++k)
    for (int r = 1; r <= k; ++r)
      for (std::uint32_t p : c.primes) out.push_back(verify_mt2_sw_consistency(k, r, p));
}

inline void a_pair(const SweepConfig& c, const BernoulliTable& bern, Out& out) {
  for (int k1 = 1; k1 < c.max_weight; ++k1)
    for (int k2 = 1; k1 + k2 <= c.max_weight; ++k2)
      for (std::uint32_t p : c.primes) out.push_back(verify_a_pair(k1, k2, p, bern));
}

inline void a_triple(const SweepConfig& c, const BernoulliTable& bern, Out& out) {
  for (int k1 = 1; k1 <= c.max_weight - 2; ++k1)
    for (int k2 = 1; k1 + k2 < c.max_weight; ++k2)
      for (int k3 = 1; k1 + k2 + k3 <= c.max_weight; ++k3) {
        if ((k1 + k2 + k3) % 2 != 1) continue;
        for (std::uint32_t p : c.primes) out.push_back(verify_a_triple(k1, k2, k3, p, bern));
      }
}

inline void a2_repeated(const SweepConfig& c, const BernoulliTable& bern, Out& out) {
  for (int k = 1; k <= c.max_weight; ++k)
    for (int r = 1; k * r <= c.max_weight; ++r)
      for (std::uint32_t p : c.primes) out.push_back(verify_a2_repeated(k, r, p, bern));
}

inline void a2_pair(const SweepConfig& c, const BernoulliTable& bern, Out& out) {
  for (int k1 = 1; k1 < c.max_weight; ++k1)
    for (int k2 = 1; k1 + k2 <= c.max_weight; ++k2) {
      if ((k1 + k2) % 2 != 0) continue;
      for (std::uint32_t p : c.primes) out.push_back(verify_a2_pair(k1, k2, p, bern));
    }
}

inline void a3_single(const SweepConfig& c, const BernoulliTable& bern, Out& out) {
  for (int k = 1; k <= c.max_weight; k += 2)
    for (std::uint32_t p : c.primes) out.push_back(verify_a3_single(k, p, bern));
}

inline void antipode(const SweepConfig& c, const BernoulliTable&, Out& out) {
  for (const Index& k : indices_up_to_weight(c.max_weight))
    for (std::uint32_t p : c.primes) out.push_back(verify_antipode(k, p, 2));
}

inline void a2_ohno(const SweepConfig& c, const BernoulliTable&, Out& out) {
  for (const Index& k : indices_up_to_weight(c.max_weight))
    for (int e = 0; e <= c.max_e; ++e)
      for (std::uint32_t p : c.primes) out.push_back(verify_a2_ohno(k, e, p));
}

inline void binom_congruence_p2(const SweepConfig& c, const BernoulliTable&, Out& out) {
  for (std::uint32_t p : c.primes) out.push_back(verify_binom_congruence_p2(p));
}

inline void binom_congruence_p3(const SweepConfig& c, const BernoulliTable&, Out& out) {
  for (std::uint32_t p : c.primes) out.push_back(verify_binom_congruence_p3(p));
}

inline void binomial_sum(const SweepConfig& c, const BernoulliTable&, Out& out) {
  for (int k = 2; k <= std::max(c.max_weight, 8); k += 2)
    for (int r = 1; r < k; ++r)
      for (int i = 1; i <= r; ++i) out.push_back(verify_binomial_sum(k, r, i));
}

}  // namespace registry

struct Statement {
  const char* id;
  const char* group;  // classical | q | connector | fmzv
  void (*run)(const SweepConfig&, const BernoulliTable&, std::vector<VerificationReport>&);
};

inline const std::vector<Statement>& statement_registry() {
  static const std::vector<Statement> table{
      {"euler", "classical", registry::euler},
      {"hoffman", "classical", registry::hoffman},
      {"ohno", "classical", registry::ohno},
      {"van-hamme", "q", registry::van_hamme},
      {"bradley", "q", registry::bradley},
      {"q-ohno", "q", registry::q_ohno},
      {"q-ohno-symbolic", "q", registry::q_ohno_symbolic},
      {"transport-chain", "connector", registry::transport_chain_stmt},
      {"pqr", "connector", registry::pqr},
      {"pq-coefficients", "connector", registry::pq_coefficients},
      {"partial-fraction", "connector", registry::partial_fraction},
      {"expansion", "connector", registry::expansion},
      {"depth-sum-zero", "fmzv", registry::depth_sum_zero},
      {"zeta-star-ones", "fmzv", registry::zeta_star_ones},
      {"hstar-bridge", "fmzv", registry::hstar_bridge},
      {"sw", "fmzv", registry::sw},
      {"sw-star", "fmzv", registry::sw_star},
      {"sw-even", "fmzv", registry::sw_even},
      {"hims", "fmzv", registry::hims},
      {"a2-depth-sum", "fmzv", registry::a2_depth_sum},
      {"a2-depth-sum-star", "fmzv", registry::a2_depth_sum_star},
      {"a3-depth-sum", "fmzv", registry::a3_depth_sum},
      {"a3-depth-sum-star", "fmzv", registry::a3_depth_sum_star},
      {"a2-fixed-entry-sum", "fmzv", registry::a2_fixed_entry_sum},
      {"a2-fixed-entry-sum-star", "fmzv", registry::a2_fixed_entry_sum_star},
      {"a2-depth-sum-reflection", "fmzv", registry::a2_depth_sum_reflection},
      {"mt2-sw-consistency", "fmzv", registry::mt2_sw_consistency},
      {"a-pair", "fmzv", registry::a_pair},
      {"a-triple", "fmzv", registry::a_triple},
      {"a2-repeated", "fmzv", registry::a2_repeated},
      {"a2-pair", "fmzv", registry::a2_pair},
      {"a3-single", "fmzv", registry::a3_single},
      {"antipode", "fmzv", registry::antipode},
      {"a2-ohno", "fmzv", registry::a2_ohno},
      {"binom-congruence-p2", "fmzv", registry::binom_congruence_p2},
      {"binom-congruence-p3", "fmzv", registry::binom_congruence_p3},
      {"binomial-sum", "fmzv", registry::binomial_sum},
  };
  return table;
}

inline std::vector<std::string> group_ids(const std::string& group) {
  std::vector<std::string> out;
  for (const Statement& s : statement_registry())
    if (group == "all" || group == s.group) out.push_back(s.id);
  if (out.empty()) throw UnknownIdentityError("unknown statement group: " + group);
  return out;
}

// Runs the registry in its fixed order, restricted to config.only when given.
inline std::vector<VerificationReport> run_sweep(const SweepConfig& cfg) {
  cfg.validate();
  for (const std::string& id : cfg.only) {
    const auto& reg = statement_registry();
    if (std::none_of(reg.begin(), reg.end(),
                     [&](const Statement& s) { return id == s.id; }))
      throw UnknownIdentityError("unknown statement id: " + id);
  }
  const std::uint32_t max_p = *std::max_element(cfg.primes.begin(), cfg.primes.end());
  const BernoulliTable bern(max_p);
  std::vector<VerificationReport> out;
  for (const Statement& s : statement_registry()) {
    if (!cfg.only.empty() &&
        std::find(cfg.only.begin(), cfg.only.end(), s.id) == cfg.only.end())
      continue;
    s.run(cfg, bern, out);
  }
  return out;
}

}  // namespace mhsum
