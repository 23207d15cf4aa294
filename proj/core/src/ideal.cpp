#include "sympow/ideal.hpp"

#include <algorithm>
#include <stdexcept>

#include "sympow/linalg.hpp"

namespace sympow {

long long binom(long long n, long long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  k = std::min(k, n - k);
  long long r = 1;
  for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

Ideal::Ideal(RingPtr ring, std::vector<Poly> generators)
    : ring_(std::move(ring)) {
  for (Poly& g : generators) {
    if (g.is_zero()) continue;
    if (!g.is_homogeneous())
      throw std::invalid_argument("ideal generators must be homogeneous");
    if (g.degree() == 0)
      throw std::invalid_argument("degree-0 generator: unit ideal excluded");
    gens_.push_back(std::move(g));
  }
}

Ideal Ideal::unit(RingPtr ring) {
  Ideal i;
  i.ring_ = std::move(ring);
  i.unit_ = true;
  return i;
}

Ideal Ideal::irrelevant(RingPtr ring) {
  std::vector<Poly> gens;
  for (int v = 0; v < ring->nvars; ++v)
    gens.push_back(Poly::variable(ring, v));
  return Ideal(std::move(ring), std::move(gens));
}

Ideal Ideal::operator+(const Ideal& o) const {
  if (!(*ring_ == *o.ring_)) throw std::invalid_argument("ring mismatch");
  if (unit_ || o.unit_) return unit(ring_);
  std::vector<Poly> gens = gens_;
  gens.insert(gens.end(), o.gens_.begin(), o.gens_.end());
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::operator*(const Ideal& o) const {
  if (!(*ring_ == *o.ring_)) throw std::invalid_argument("ring mismatch");
  if (unit_) return o;
  if (o.unit_) return *this;
  std::vector<Poly> gens;
  for (const Poly& f : gens_)
    for (const Poly& g : o.gens_) gens.push_back(f * g);
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::power(int e) const {
  if (e < 1) throw std::invalid_argument("ideal power requires e >= 1");
  if (unit_) return *this;
  // e-fold products over multisets of generator indices
  std::vector<Poly> gens;
  std::vector<int> idx(e, 0);
  const int n = static_cast<int>(gens_.size());
  if (n == 0) return Ideal(ring_, {});
  while (true) {
    Poly p = gens_[idx[0]];
    for (int i = 1; i < e; ++i) p = p * gens_[idx[i]];
    gens.push_back(std::move(p));
    int i = e - 1;
    while (i >= 0 && idx[i] == n - 1) --i;
    if (i < 0) break;
    ++idx[i];
    for (int j = i + 1; j < e; ++j) idx[j] = idx[i];  // nondecreasing
  }
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::intersect(const Ideal& o) const {
  if (!(*ring_ == *o.ring_)) throw std::invalid_argument("ring mismatch");
  if (unit_) return o;
  if (o.unit_) return *this;
  if (gens_.empty() || o.gens_.empty()) return Ideal(ring_, {});
  // t*I + (1-t)*J, then contract away t
  RingPtr ext = Ring::make(ring_->nvars + 1, ring_->field,
                           MonomialOrder::block(1));
  Poly t = Poly::variable(ext, 0);
  Poly one_minus_t = Poly::constant(ext, ext->field.one()) - t;
  std::vector<Poly> gens;
  for (const Poly& f : gens_) gens.push_back(t * lift_poly(f, ext));
  for (const Poly& g : o.gens_) gens.push_back(one_minus_t * lift_poly(g, ext));
  std::vector<Poly> inter = eliminate(gens, 1);
  // a homogeneous ideal contains each homogeneous component of its members,
  // so splitting basis elements regenerates the same ideal
  std::vector<Poly> back;
  for (const Poly& p : inter) {
    Poly q = p.in_ring(ring_);
    std::map<int, std::vector<Term>> parts;
    for (const auto& term : q.terms())
      parts[term.mono.degree()].push_back(term);
    for (auto& [deg, terms] : parts)
      back.emplace_back(ring_, std::move(terms));
  }
  return Ideal(ring_, std::move(back));
}

Ideal Ideal::quotient_by(const Poly& g) const {
  if (g.is_zero()) throw std::invalid_argument("quotient by zero");
  if (unit_) return *this;
  Ideal gi(ring_, {g});
  Ideal inter = intersect(gi);
  std::vector<Poly> gens;
  bool has_constant = false;
  for (const Poly& p : inter.generators()) {
    auto q = p.divided_by(g);
    if (!q) throw std::logic_error("intersection element not divisible");
    if (q->degree() == 0 && !q->is_zero()) has_constant = true;
    if (!q->is_zero() && q->degree() > 0) gens.push_back(*q);
  }
  if (has_constant) return unit(ring_);
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::saturate_irrelevant() const {
  if (unit_) return *this;
  Ideal cur = *this;
  while (true) {
    // I : M = intersection of I : v over the ring variables
    // a unit quotient imposes no constraint on the intersection
    Ideal next = cur.quotient_by(Poly::variable(ring_, 0));
    for (int v = 1; v < ring_->nvars; ++v) {
      Ideal q = cur.quotient_by(Poly::variable(ring_, v));
      if (next.is_unit())
        next = std::move(q);
      else if (!q.is_unit())
        next = next.intersect(q);
    }
    if (next.is_unit()) return unit(ring_);
    if (next == cur) return cur;
    cur = std::move(next);
  }
}

const GroebnerBasis& Ideal::groebner(MonomialOrder order,
                                     std::optional<int> truncation) const {
  auto key = std::make_tuple(static_cast<int>(order.kind), order.eliminated,
                             truncation ? *truncation : -1);
  auto it = gb_cache_.find(key);
  if (it != gb_cache_.end()) return *it->second;
  RingPtr r = order == ring_->order ? ring_
                                    : Ring::make(ring_->nvars, ring_->field, order);
  auto gb = std::make_shared<GroebnerBasis>(buchberger(gens_, r, truncation));
  return *gb_cache_.emplace(key, std::move(gb)).first->second;
}

bool Ideal::contains(const Poly& f) const {
  if (f.is_zero()) return true;
  if (unit_) return true;
  const GroebnerBasis& G = groebner(MonomialOrder::grevlex(), f.degree());
  return normal_form(f, G).is_zero();
}

bool Ideal::operator==(const Ideal& o) const {
  if (unit_ != o.unit_) return false;
  if (unit_) return true;
  const GroebnerBasis& a = groebner(MonomialOrder::grevlex());
  const GroebnerBasis& b = o.groebner(MonomialOrder::grevlex());
  if (a.generators.size() != b.generators.size()) return false;
  for (std::size_t i = 0; i < a.generators.size(); ++i)
    if (a.generators[i] != b.generators[i].in_ring(a.ring)) return false;
  return true;
}

int Ideal::graded_dim(int t) const {
  if (t < 0) throw std::invalid_argument("negative degree");
  long long total = binom(t + ring_->nvars - 1, ring_->nvars - 1);
  if (unit_) return static_cast<int>(total);
  auto it = dim_cache_.find(t);
  if (it != dim_cache_.end()) return it->second;
  const GroebnerBasis& G = groebner(MonomialOrder::grevlex(), t);
  int standard = 0;
  for (const Monomial& m : monomials_of_degree(*ring_, t)) {
    bool divisible = false;
    for (const Poly& g : G.generators)
      if (g.leading().mono.divides(m)) {
        divisible = true;
        break;
      }
    if (!divisible) ++standard;
  }
  int dim = static_cast<int>(total) - standard;
  dim_cache_[t] = dim;
  return dim;
}

std::vector<Poly> Ideal::graded_basis(int t) const {
  std::vector<Monomial> basis = monomials_of_degree(*ring_, t);
  SpanBuilder span(basis.size(), ring_->field);
  std::vector<Poly> gens = unit_
      ? std::vector<Poly>{Poly::constant(ring_, ring_->field.one())}
      : gens_;
  for (const Poly& g : gens) {
    int d = g.degree();
    if (d > t || g.is_zero()) continue;
    for (const Monomial& m : monomials_of_degree(*ring_, t - d))
      span.add(coordinates(g.times_monomial(m, ring_->field.one()), basis));
  }
  std::vector<Poly> out;
  for (const auto& row : span.canonical_basis())
    out.push_back(from_coordinates(ring_, basis, row));
  return out;
}

int Ideal::hilbert_rvalue(int t) const {
  return static_cast<int>(binom(t + ring_->nvars - 1, ring_->nvars - 1)) -
         graded_dim(t);
}

int Ideal::alpha() const {
  if (is_zero_ideal()) throw std::domain_error("alpha of the zero ideal");
  if (alpha_) return *alpha_;
  int t = unit_ ? 0 : 1;
  while (graded_dim(t) == 0) ++t;
  alpha_ = t;
  return t;
}

int Ideal::reg_points() const {
  if (reg_) return *reg_;
  constexpr int kCap = 200;
  int prev = hilbert_rvalue(0);
  for (int t = 1; t <= kCap; ++t) {
    int cur = hilbert_rvalue(t);
    if (cur == prev) {
      reg_ = t;
      return t;
    }
    prev = cur;
  }
  throw std::domain_error("Hilbert function did not stabilize: not 0-dimensional");
}

int Ideal::min_gen_count(int t) const {
  if (t < 0) return 0;
  std::vector<Monomial> basis = monomials_of_degree(*ring_, t);
  SpanBuilder span(basis.size(), ring_->field);
  if (t >= 1) {
    for (const Poly& b : graded_basis(t - 1))
      for (int v = 0; v < ring_->nvars; ++v)
        span.add(coordinates(
            b.times_monomial(Monomial::var(v), ring_->field.one()), basis));
  }
  return graded_dim(t) - static_cast<int>(span.rank());
}

int Ideal::omega() const {
  if (is_zero_ideal()) throw std::domain_error("omega of the zero ideal");
  if (omega_) return *omega_;
  // Saturated fat-point ideals are generated by degree reg+1; scan through
  // reg+1 and verify one degree beyond.
  int bound = reg_points() + 1;
  int best = 0;
  for (int t = alpha(); t <= bound; ++t)
    if (min_gen_count(t) > 0) best = t;
  if (min_gen_count(bound + 1) != 0)
    throw std::logic_error("generator found above the regularity bound");
  omega_ = best;
  return best;
}

Ideal Ideal::truncate(int d) const {
  if (d < 0) throw std::invalid_argument("negative truncation degree");
  if (unit_ || gens_.empty()) return *this;
  if (d <= alpha()) return *this;
  std::vector<Poly> gens = graded_basis(d);
  int max_gen_deg = 0;
  for (const Poly& g : gens_) max_gen_deg = std::max(max_gen_deg, g.degree());
  int top = std::max(d, max_gen_deg);
  for (int t = d + 1; t <= top; ++t) {
    // new minimal generators of I above degree d survive truncation
    std::vector<Monomial> basis = monomials_of_degree(*ring_, t);
    SpanBuilder span(basis.size(), ring_->field);
    for (const Poly& b : graded_basis(t - 1))
      for (int v = 0; v < ring_->nvars; ++v)
        span.add(coordinates(
            b.times_monomial(Monomial::var(v), ring_->field.one()), basis));
    for (const Poly& b : graded_basis(t)) {
      auto row = coordinates(b, basis);
      if (!span.contains(row)) gens.push_back(b);
    }
  }
  return Ideal(ring_, std::move(gens));
}

}  // namespace sympow
