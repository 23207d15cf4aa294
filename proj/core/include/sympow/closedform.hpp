#ifndef SYMPOW_CLOSEDFORM_HPP
#define SYMPOW_CLOSEDFORM_HPP

#include <optional>
#include <string>

#include <gmpxx.h>

namespace sympow {

// Closed-form predictor: containment criteria and invariant values for
// points on a smooth conic (any n) and general points (n <= 9).  All
// inequalities are evaluated in exact integer arithmetic with cleared
// denominators.

enum class ConfigClass { ConicUniform, GeneralSimple };

enum class Tri { False, True, Undecided };

struct Verdict {
  Tri contains = Tri::Undecided;
  std::string method;       // which criterion decided the query
  std::string certificate;  // human-readable comparison data
};

// Least s >= 0 with 2(t - 2s) >= (m - s) n; the conic-power exponent of a
// single graded piece.  Requires n >= 5; t < 2m is the zero piece (nullopt).
std::optional<int> q_single(int n, int m, int t);

// Minimum of sum q_single over compositions t = t_1 + ... + t_r with each
// t_i >= 2m, by dynamic programming.  Requires t >= 2mr.
std::optional<int> q_power(int n, int r, int t, int m = 1);

// Closed form max(0, ceil((r(n+1) - 2t)/(n-3))) for odd n (checked against
// the DP in tests).
int q_power_closed_odd(int n, int r, int t);

Verdict contains_conic(int n, int m, int r);
Verdict contains_general(int n, int m, int r);  // n <= 9; n <= 5 delegates

// alpha(I^(m)) table; conic kind takes the uniform sub-multiplicity s.
long alpha_symbolic(ConfigClass kind, int n, int m, int s = 1);
mpq_class gamma_value(ConfigClass kind, int n, int s = 1);
mpq_class resurgence(ConfigClass kind, int n);

struct RhoBounds {
  mpq_class lower, upper;
};
RhoBounds rho_bounds(long alpha, const mpq_class& gamma, long reg);

// Containment decision from alpha/reg data alone.
Verdict alpha_reg_rule(long alpha_i, long reg_i, long alpha_sym_m, int r);

// dim I(mZ)_t for n >= 5 points on the conic, uniform multiplicity m.
long hilbert_conic(int n, int m, int t);

struct SufficiencyBounds {
  bool els_hoh;         // m >= 2r (theorem)
  bool conjecture_1_1;  // m >= 2r - 1 (conjectural)
};
SufficiencyBounds sufficiency_bounds(int m, int r);

}  // namespace sympow

#endif
