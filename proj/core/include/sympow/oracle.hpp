#ifndef SYMPOW_ORACLE_HPP
#define SYMPOW_ORACLE_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sympow/fatpoints.hpp"
#include "sympow/ideal.hpp"

namespace sympow {

struct OracleReport {
  std::string query;
  bool result = false;
  std::optional<long> value;          // for value-style checks (alpha, q, ...)
  std::optional<Poly> witness;        // failing generator on negative verdicts
  std::string detail;                 // bounds used, dimension tables, ...
  std::string field_desc;
  std::uint64_t seed = 0;
  double millis = 0.0;

  std::string to_json() const;
};

// Estimated work units for a brute-force containment run; jobs above the
// budget are rejected instead of hanging.
long long estimate_containment_work(const FatPointScheme& z, int m, int r);
inline constexpr long long kDefaultWorkBudget = 400'000'000;

// Tests every minimal generator of I^{(m)} for membership in I^r against a
// degree-truncated Groebner basis.  Negative reports carry the first failing
// generator as a witness.
OracleReport contains_bruteforce(const FatPointScheme& z, int m, int r,
                                 long long budget = kDefaultWorkBudget);

// Least t with a nonzero degree-t form vanishing to order m*m_i everywhere.
long alpha_bruteforce(const FatPointScheme& z, int m);

// Graded identity I^r_t = f^q I((rm-q)Z)_{t-2q} on a conic configuration,
// q minimized over r-part compositions.
OracleReport check_conic_power_structure(const FatPointScheme& z, int m, int r,
                                     int t);

// Surjectivity of I(Z1)_a (x) I(Z2)_b -> I(Z1+Z2)_{a+b} by span rank.
OracleReport check_mult_map_surjectivity(const FatPointScheme& z1, int a,
                                         const FatPointScheme& z2, int b);

// Z = (d-1)p_1 + p_2 + ... + p_{2d} on 2d general points: checks the least
// degree d, the generator degree profile, dim I(mZ)_{md} = m+1, and the
// graded equality I(Z)^m = I(mZ) through degree md + d.
OracleReport check_cubic_family(int d, int m, std::uint64_t seed = 20260826);

// I^r = I^{(r)} /\ M^{r alpha} graded through r*alpha + reg + 1; requires
// alpha(I) = reg(I) and errors out otherwise.
OracleReport check_power_truncation(int n, int r, std::uint64_t seed = 20260826);

struct CrossRow {
  int m = 0, r = 0;
  int predicted = -1;  // 1 contains, 0 not, -1 undecided
  int oracle = -1;
  bool agree = false;
};

struct CrossTable {
  std::string kind;
  int n = 0;
  std::vector<CrossRow> rows;
  bool all_agree = true;

  std::string to_csv() const;
  std::string to_json() const;
};

// Full (m, r) in [1, m_max] x [1, r_max] grid: closed-form predictor vs the
// brute-force oracle.
CrossTable crossvalidate(const FatPointScheme& z, bool conic_kind, int m_max,
                         int r_max, long long budget = kDefaultWorkBudget);

}  // namespace sympow

#endif
