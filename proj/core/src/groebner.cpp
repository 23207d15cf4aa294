#include "sympow/groebner.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <set>
#include <stdexcept>

namespace sympow {

namespace {

Poly reduce_full(const Poly& f, const std::vector<Poly>& basis) {
  Poly p = f;
  Poly rem(f.ring());
  while (!p.is_zero()) {
    bool reduced = false;
    for (const Poly& g : basis) {
      if (g.is_zero()) continue;
      if (g.leading().mono.divides(p.leading().mono)) {
        Monomial m = p.leading().mono / g.leading().mono;
        Scalar c = p.leading().coeff / g.leading().coeff;
        p = p - g.times_monomial(m, c);
        reduced = true;
        break;
      }
    }
    if (!reduced) {
      rem = rem + Poly::monomial(p.ring(), p.leading().mono, p.leading().coeff);
      p = p - Poly::monomial(p.ring(), p.leading().mono, p.leading().coeff);
    }
  }
  return rem;
}

Poly s_poly(const Poly& f, const Poly& g) {
  Monomial l = Monomial::lcm(f.leading().mono, g.leading().mono);
  Monomial mf = l / f.leading().mono;
  Monomial mg = l / g.leading().mono;
  return f.times_monomial(mf, g.leading().coeff) -
         g.times_monomial(mg, f.leading().coeff);
}

bool coprime(const Monomial& a, const Monomial& b) {
  for (int i = 0; i < kMaxVars; ++i)
    if (a.e[i] > 0 && b.e[i] > 0) return false;
  return true;
}

struct Pair {
  int deg;
  int i, j;  // i < j
  bool operator<(const Pair& o) const {
    if (deg != o.deg) return deg < o.deg;
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
};

}  // namespace

GroebnerBasis buchberger(const std::vector<Poly>& gens, RingPtr ring,
                         std::optional<int> truncation) {
  std::vector<Poly> basis;
  for (const Poly& g : gens) {
    if (g.is_zero()) continue;
    if (truncation && g.degree() > *truncation) continue;
    basis.push_back(g.in_ring(ring).monic());
  }

  std::set<Pair> queue;
  std::set<std::pair<int, int>> done;
  auto push_pairs = [&](int j) {
    for (int i = 0; i < j; ++i) {
      Monomial l = Monomial::lcm(basis[i].leading().mono,
                                 basis[j].leading().mono);
      int d = l.degree();
      if (truncation && d > *truncation) continue;
      queue.insert(Pair{d, i, j});
    }
  };
  for (int j = 1; j < static_cast<int>(basis.size()); ++j) push_pairs(j);

  while (!queue.empty()) {
    Pair p = *queue.begin();
    queue.erase(queue.begin());
    done.insert({p.i, p.j});
    const Poly& f = basis[p.i];
    const Poly& g = basis[p.j];
    if (coprime(f.leading().mono, g.leading().mono)) continue;
    // chain criterion
    Monomial l = Monomial::lcm(f.leading().mono, g.leading().mono);
    bool skip = false;
    for (int k = 0; k < static_cast<int>(basis.size()); ++k) {
      if (k == p.i || k == p.j) continue;
      if (!basis[k].leading().mono.divides(l)) continue;
      auto key = [&](int a, int b) {
        return std::make_pair(std::min(a, b), std::max(a, b));
      };
      if (done.count(key(p.i, k)) && done.count(key(p.j, k))) {
        skip = true;
        break;
      }
    }
    if (skip) continue;
    Poly r = reduce_full(s_poly(f, g), basis);
    if (r.is_zero()) continue;
    basis.push_back(r.monic());
    push_pairs(static_cast<int>(basis.size()) - 1);
  }

  // inter-reduce: first pick one generator per minimal leading monomial
  // (earliest wins on ties), then tail-reduce each survivor against the other
  // survivors.  Leads of survivors are pairwise non-dividing, so the leads
  // stay put and only tails change.
  std::vector<Poly> survivors;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    bool redundant = false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (j == i) continue;
      if (basis[j].leading().mono.divides(basis[i].leading().mono) &&
          !(j > i && basis[j].leading().mono == basis[i].leading().mono)) {
        redundant = true;
        break;
      }
    }
    if (!redundant) survivors.push_back(basis[i]);
  }
  std::vector<Poly> final_set;
  for (std::size_t i = 0; i < survivors.size(); ++i) {
    std::vector<Poly> others;
    for (std::size_t j = 0; j < survivors.size(); ++j)
      if (j != i) others.push_back(survivors[j]);
    Poly r = reduce_full(survivors[i], others);
    if (!r.is_zero()) final_set.push_back(r.monic());
  }
  std::sort(final_set.begin(), final_set.end(),
            [&](const Poly& a, const Poly& b) {
              return ring->order.compare(a.leading().mono, b.leading().mono,
                                         ring->nvars) < 0;
            });

  GroebnerBasis out;
  out.ring = std::move(ring);
  out.generators = std::move(final_set);
  out.reduced = true;
  out.truncation_degree = truncation;
  return out;
}

Poly normal_form(const Poly& f, const GroebnerBasis& G) {
  if (G.truncation_degree && f.degree() > *G.truncation_degree)
    throw std::invalid_argument("degree exceeds basis truncation bound");
  return reduce_full(f.in_ring(G.ring), G.generators);
}

bool ideal_member(const Poly& f, const std::vector<Poly>& gens) {
  if (f.is_zero()) return true;
  GroebnerBasis G = buchberger(gens, f.ring(), f.degree());
  return normal_form(f, G).is_zero();
}

Poly lift_poly(const Poly& f, const RingPtr& ext) {
  int shift = ext->nvars - f.ring()->nvars;
  assert(shift >= 0);
  std::vector<Term> terms;
  for (const auto& t : f.terms()) {
    Monomial m;
    for (int i = 0; i < f.ring()->nvars; ++i) m.e[i + shift] = t.mono.e[i];
    terms.push_back(Term{m, t.coeff});
  }
  return Poly(ext, std::move(terms));
}

std::vector<Poly> eliminate(const std::vector<Poly>& gens, int k) {
  if (gens.empty()) return {};
  RingPtr src = gens.front().ring();
  if (src->nvars <= k) throw std::invalid_argument("too few variables");
  RingPtr block = Ring::make(src->nvars, src->field, MonomialOrder::block(k));
  std::vector<Poly> lifted;
  for (const Poly& g : gens) lifted.push_back(g.in_ring(block));
  GroebnerBasis G = buchberger(lifted, block);

  RingPtr target = Ring::make(src->nvars - k, src->field);
  std::vector<Poly> out;
  for (const Poly& g : G.generators) {
    bool free_of_block = true;
    for (const auto& t : g.terms())
      for (int i = 0; i < k; ++i)
        if (t.mono.e[i] > 0) free_of_block = false;
    if (!free_of_block) continue;
    std::vector<Term> terms;
    for (const auto& t : g.terms()) {
      Monomial m;
      for (int i = k; i < src->nvars; ++i) m.e[i - k] = t.mono.e[i];
      terms.push_back(Term{m, t.coeff});
    }
    out.emplace_back(target, std::move(terms));
  }
  return out;
}

}  // namespace sympow
