#include "sympow/divisor.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sympow {

long long pair(const DivClass& f, const DivClass& g) {
  if (f.n() != g.n()) throw std::invalid_argument("mismatched blowup sizes");
  long long s = f.a * g.a;
  for (int i = 0; i < f.n(); ++i) s -= f.m[i] * g.m[i];
  return s;
}

long long self_intersection(const DivClass& f) { return pair(f, f); }

DivClass canonical_class(int n) {
  DivClass k;
  k.a = -3;
  k.m.assign(n, -1);
  return k;
}

DivClass class_of(long long t, const std::vector<long long>& mult) {
  return DivClass{t, mult};
}

namespace {

bool sort_desc(DivClass& f) {
  auto sorted = f.m;
  std::sort(sorted.begin(), sorted.end(), std::greater<>());
  if (sorted == f.m) return false;
  f.m = std::move(sorted);
  return true;
}

}  // namespace

CremonaResult cremona_reduce(const DivClass& f) {
  CremonaResult out;
  DivClass cur = f;

  // split off multiples of exceptional curves up front and at each landing
  auto drop_negatives = [&](DivClass& d) {
    for (auto& mi : d.m)
      if (mi < 0) {
        DivClass before = d;
        mi = 0;
        out.fixed_part.push_back(CremonaStep{"drop-negative", before, d, 0});
      }
  };

  drop_negatives(cur);
  while (true) {
    DivClass before = cur;
    if (sort_desc(cur))
      out.transcript.push_back(CremonaStep{"sort", before, cur, 0});
    if (cur.n() < 3 || cur.a < 0) break;
    long long k = cur.a - cur.m[0] - cur.m[1] - cur.m[2];
    if (k >= 0) break;
    before = cur;
    cur.a += k;
    for (int i = 0; i < 3; ++i) cur.m[i] += k;
    out.transcript.push_back(CremonaStep{"cremona", before, cur, k});
    drop_negatives(cur);
  }
  out.terminal = cur;
  return out;
}

bool is_effective_general(const DivClass& f) {
  if (f.n() > 8)
    throw std::invalid_argument("effectivity reduction needs n <= 8");
  return cremona_reduce(f).terminal.a >= 0;
}

std::vector<DivClass> minus_one_classes(int n) {
  if (n < 1 || n > 8)
    throw std::invalid_argument("(-1)-classes enumerated for 1 <= n <= 8");
  // orbit closure of the exceptional classes under Cremona moves on all
  // triples of indices
  auto key = [](const DivClass& d) {
    std::vector<long long> k = d.m;
    k.insert(k.begin(), d.a);
    return k;
  };
  std::set<std::vector<long long>> seen;
  std::vector<DivClass> all, frontier;
  // every class found gets its multiplicity permutations added too; Cremona
  // moves on index triples alone do not realize the index symmetry for small n
  auto insert_with_perms = [&](DivClass d) {
    std::vector<long long> sorted = d.m;
    std::sort(sorted.begin(), sorted.end());
    do {
      DivClass g{d.a, sorted};
      if (seen.insert(key(g)).second) {
        all.push_back(g);
        frontier.push_back(g);
      }
    } while (std::next_permutation(sorted.begin(), sorted.end()));
  };
  {
    DivClass e;
    e.a = 0;
    e.m.assign(n, 0);
    e.m[0] = -1;  // the class of E_1; a L - sum n_i E_i convention
    insert_with_perms(e);
  }
  if (n >= 2) {
    DivClass l;
    l.a = 1;
    l.m.assign(n, 0);
    l.m[0] = l.m[1] = 1;  // L - E_1 - E_2
    insert_with_perms(l);
  }
  while (!frontier.empty()) {
    std::vector<DivClass> work = std::move(frontier);
    frontier.clear();
    for (const DivClass& d : work)
      for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
          for (int l = j + 1; l < n; ++l) {
            long long k = d.a - d.m[i] - d.m[j] - d.m[l];
            DivClass g = d;
            g.a += k;
            g.m[i] += k;
            g.m[j] += k;
            g.m[l] += k;
            if (g.a < 0) continue;  // curve classes all have a >= 0
            insert_with_perms(g);
          }
  }
  std::sort(all.begin(), all.end(), [](const DivClass& x, const DivClass& y) {
    if (x.a != y.a) return x.a < y.a;
    return x.m > y.m;
  });
  return all;
}

bool is_nef_general(const DivClass& f) {
  int n = f.n();
  if (f.a < 0) return false;
  if (n == 0) return true;
  if (n > 8)
    throw std::invalid_argument("nefness via (-1)-classes needs n <= 8");
  for (const DivClass& c : minus_one_classes(n))
    if (pair(f, c) < 0) return false;
  // against L - E_i for n < 3 where no (-1)-class sees pairs
  if (n <= 2)
    for (int i = 0; i < n; ++i)
      if (f.a - f.m[i] < 0) return false;
  return true;
}

bool is_nef_general9_uniform(long long t, long long m) { return t >= 3 * m; }

bool is_nef_conic(const DivClass& f) {
  int n = f.n();
  if (f.a < 0) return false;
  for (int i = 0; i < n; ++i) {
    if (f.m[i] < 0) return false;                       // F . E_i
    for (int j = i + 1; j < n; ++j)
      if (f.a - f.m[i] - f.m[j] < 0) return false;      // F . (L - E_i - E_j)
  }
  long long q = 2 * f.a;                                // F . (2L - sum E_i)
  for (int i = 0; i < n; ++i) q -= f.m[i];
  return q >= 0;
}

}  // namespace sympow
