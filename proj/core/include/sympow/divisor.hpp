#ifndef SYMPOW_DIVISOR_HPP
#define SYMPOW_DIVISOR_HPP

#include <string>
#include <vector>

namespace sympow {

// Class a L - sum n_i E_i on the blowup of the plane at n points.
struct DivClass {
  long long a = 0;
  std::vector<long long> m;

  int n() const { return static_cast<int>(m.size()); }
  bool operator==(const DivClass& o) const { return a == o.a && m == o.m; }
};

// Intersection pairing: a_F a_G - sum m_i n_i.
long long pair(const DivClass& f, const DivClass& g);
long long self_intersection(const DivClass& f);

DivClass canonical_class(int n);  // -3L + E_1 + ... + E_n

// tL - sum (r m_i) E_i for a fat point scheme in degree t.
DivClass class_of(long long t, const std::vector<long long>& mult);

// One step of the reduction used on blowups of up to 8 general points:
// sort multiplicities descending, then if k = a - m1 - m2 - m3 < 0 apply the
// quadratic transform centered at the three largest.
struct CremonaStep {
  std::string action;  // "sort", "cremona", "drop-negative"
  DivClass before;
  DivClass after;
  long long k = 0;  // for "cremona"
};

struct CremonaResult {
  DivClass terminal;
  std::vector<CremonaStep> transcript;
  // Exceptional multiples split off when a terminal multiplicity was negative.
  std::vector<CremonaStep> fixed_part;
};

CremonaResult cremona_reduce(const DivClass& f);

// Effectivity of the class on the blowup at n <= 8 general points: reduce,
// then the terminal class is effective iff a >= 0 (plus the split-off
// exceptional curves recorded in the transcript).
bool is_effective_general(const DivClass& f);

// All classes of self-intersection -1 rational curves on the blowup at
// n <= 8 general points.  Sizes 1, 3, 6, 10, 16, 27, 56, 240.
std::vector<DivClass> minus_one_classes(int n);

// Nefness of tL - sum n_i E_i.
//   general points, n <= 8: pairing >= 0 against every (-1)-class (and L).
//   general points, n == 9, uniform multiplicity m: t >= 3m.
bool is_nef_general(const DivClass& f);
bool is_nef_general9_uniform(long long t, long long m);
// points on a smooth conic: nonnegative against E_i, L - E_i - E_j, and the
// conic proper transform 2L - sum E_i.
bool is_nef_conic(const DivClass& f);

}  // namespace sympow

#endif
