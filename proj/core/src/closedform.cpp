#include "sympow/closedform.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

#include "sympow/ideal.hpp"  // binom

namespace sympow {

namespace {

long ceildiv(long a, long b) {  // b > 0
  long q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

Verdict verdict(bool c, std::string method, std::string cert) {
  return Verdict{c ? Tri::True : Tri::False, std::move(method), std::move(cert)};
}

}  // namespace

std::optional<int> q_single(int n, int m, int t) {
  if (n < 5) throw std::invalid_argument("q_single requires n >= 5");
  if (t < 2 * m) return std::nullopt;  // zero piece
  long s = std::max(0L, ceildiv(static_cast<long>(m) * n - 2L * t, n - 4));
  return static_cast<int>(s);
}

std::optional<int> q_power(int n, int r, int t, int m) {
  if (n < 5) throw std::invalid_argument("q_power requires n >= 5");
  if (t < 2 * m * r) return std::nullopt;
  constexpr int kInf = std::numeric_limits<int>::max() / 2;
  std::vector<std::vector<int>> dp(r + 1, std::vector<int>(t + 1, kInf));
  dp[0][0] = 0;
  for (int j = 1; j <= r; ++j)
    for (int u = 0; u <= t; ++u) {
      for (int ti = 2 * m; ti <= u; ++ti) {
        if (dp[j - 1][u - ti] == kInf) continue;
        int q = *q_single(n, m, ti);
        dp[j][u] = std::min(dp[j][u], dp[j - 1][u - ti] + q);
      }
    }
  return dp[r][t];
}

int q_power_closed_odd(int n, int r, int t) {
  if (n < 5 || n % 2 == 0) throw std::invalid_argument("odd n >= 5 required");
  return static_cast<int>(
      std::max(0L, ceildiv(static_cast<long>(r) * (n + 1) - 2L * t, n - 3)));
}

Verdict contains_conic(int n, int m, int r) {
  if (n < 1 || m < 1 || r < 1) throw std::invalid_argument("n, m, r >= 1");
  if (n % 2 == 0 || n == 1) {
    return verdict(m >= r, "Thm3.4a",
                   "m=" + std::to_string(m) + " vs r=" + std::to_string(r));
  }
  long lhs = static_cast<long>(n + 1) * r - 1;
  long rhs = static_cast<long>(n) * m;
  return verdict(lhs <= rhs, "Thm3.4b",
                 std::to_string(lhs) + " <= " + std::to_string(rhs));
}

Verdict contains_general(int n, int m, int r) {
  if (n < 1) throw std::invalid_argument("n >= 1 required");
  if (m < 1 || r < 1) throw std::invalid_argument("m, r >= 1");
  if (n > 9)
    return Verdict{Tri::Undecided, "unsupported",
                   "no closed form for general n > 9"};
  if (n <= 5) {
    Verdict v = contains_conic(n, m, r);
    v.method = "conic-delegation/" + v.method;
    return v;
  }
  switch (n) {
    case 6:
      return verdict(12L * m >= 15L * r - 5, "Prop4.1",
                     std::to_string(12L * m) + " vs " + std::to_string(15L * r - 5));
    case 7:
      if (m == 1 && r == 1) return verdict(true, "Prop4.3", "m=r=1");
      return verdict(7L * m >= 8L * r, "Prop4.3",
                     std::to_string(7L * m) + " vs " + std::to_string(8L * r));
    case 8:
      if (m == 1 && r == 1) return verdict(true, "Prop4.4", "m=r=1");
      return verdict(12L * m >= 17L * r - 4, "Prop4.4",
                     std::to_string(12L * m) + " vs " + std::to_string(17L * r - 4));
    default:  // 9
      return verdict(3L * m >= 4L * r - 1, "Prop4.5",
                     std::to_string(3L * m) + " vs " + std::to_string(4L * r - 1));
  }
}

long alpha_symbolic(ConfigClass kind, int n, int m, int s) {
  if (m < 1) throw std::invalid_argument("m >= 1");
  if (kind == ConfigClass::ConicUniform) {
    if (n < 5) throw std::invalid_argument("conic alpha table needs n >= 5");
    return 2L * m * s;
  }
  switch (n) {
    case 1:
    case 2:
      return m;
    case 3:
      return ceildiv(3L * m, 2);
    case 4:
    case 5:
      return 2L * m;
    case 6:
      return ceildiv(12L * m, 5);
    case 7:
      return ceildiv(21L * m, 8);
    case 8:
      return ceildiv(48L * m, 17);
    case 9:
      return 3L * m;
    default:
      throw std::invalid_argument("alpha table supports n <= 9");
  }
}

mpq_class gamma_value(ConfigClass kind, int n, int s) {
  if (kind == ConfigClass::ConicUniform) {
    if (n < 5) throw std::invalid_argument("conic gamma needs n >= 5");
    return mpq_class(2 * s);
  }
  switch (n) {
    case 1:
    case 2:
      return mpq_class(1);
    case 3:
      return mpq_class(3, 2);
    case 4:
    case 5:
      return mpq_class(2);
    case 6:
      return mpq_class(12, 5);
    case 7:
      return mpq_class(21, 8);
    case 8:
      return mpq_class(48, 17);
    case 9:
      return mpq_class(3);
    default:
      throw std::invalid_argument("gamma table supports n <= 9");
  }
}

mpq_class resurgence(ConfigClass kind, int n) {
  if (kind == ConfigClass::ConicUniform) {
    if (n < 1) throw std::invalid_argument("n >= 1");
    if (n % 2 == 0 || n == 1) return mpq_class(1);
    return mpq_class(n + 1, n);
  }
  if (n < 1 || n > 9) throw std::invalid_argument("resurgence table supports n <= 9");
  if (n <= 5) return resurgence(ConfigClass::ConicUniform, n);
  switch (n) {
    case 6:
      return mpq_class(5, 4);
    case 7:
      return mpq_class(8, 7);
    case 8:
      return mpq_class(17, 12);
    default:
      return mpq_class(4, 3);
  }
}

RhoBounds rho_bounds(long alpha, const mpq_class& gamma, long reg) {
  if (gamma <= 0) throw std::invalid_argument("gamma must be positive");
  return RhoBounds{mpq_class(alpha) / gamma, mpq_class(reg) / gamma};
}

Verdict alpha_reg_rule(long alpha_i, long reg_i, long alpha_sym_m, int r) {
  if (alpha_i == reg_i) {
    bool c = alpha_sym_m >= static_cast<long>(r) * alpha_i;
    return verdict(c, "Cor1.2",
                   std::to_string(alpha_sym_m) + " vs r*alpha=" +
                       std::to_string(static_cast<long>(r) * alpha_i));
  }
  if (alpha_sym_m >= static_cast<long>(r) * reg_i)
    return verdict(true, "reg-sufficiency",
                   std::to_string(alpha_sym_m) + " >= r*reg=" +
                       std::to_string(static_cast<long>(r) * reg_i));
  if (alpha_sym_m < static_cast<long>(r) * alpha_i)
    return verdict(false, "alpha-necessity",
                   std::to_string(alpha_sym_m) + " < r*alpha=" +
                       std::to_string(static_cast<long>(r) * alpha_i));
  return Verdict{Tri::Undecided, "bound-only",
                 "alpha(I^(m)) between r*alpha and r*reg"};
}

long hilbert_conic(int n, int m, int t) {
  if (t < 0) throw std::invalid_argument("t >= 0");
  if (m < 1) throw std::invalid_argument("m >= 1");
  if (t < 2 * m) return 0;
  int q = *q_single(n, m, t);
  return binom(t - 2L * q + 2, 2) - n * binom(m - q + 1L, 2);
}

SufficiencyBounds sufficiency_bounds(int m, int r) {
  if (m < 1 || r < 1) throw std::invalid_argument("m, r >= 1");
  // r = 1 is trivially sufficient: I^(m) is contained in I for all m >= 1
  return SufficiencyBounds{m >= 2 * r || r == 1, m >= 2 * r - 1 || r == 1};
}

}  // namespace sympow
