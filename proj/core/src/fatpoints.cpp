#include "sympow/fatpoints.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <random>
#include <stdexcept>

#include "sympow/closedform.hpp"

namespace sympow {

namespace {

bool same_projective_point(const ProjPoint& a, const ProjPoint& b) {
  // all 2x2 minors of the 2x3 coordinate matrix vanish
  for (int i = 0; i < 3; ++i)
    for (int j = i + 1; j < 3; ++j)
      if (!(a[i] * b[j] - a[j] * b[i]).is_zero()) return false;
  return true;
}

Scalar det3(const std::array<ProjPoint, 3>& p) {
  return p[0][0] * (p[1][1] * p[2][2] - p[1][2] * p[2][1]) -
         p[0][1] * (p[1][0] * p[2][2] - p[1][2] * p[2][0]) +
         p[0][2] * (p[1][0] * p[2][1] - p[1][1] * p[2][0]);
}

void check_distinct(const std::vector<ProjPoint>& pts) {
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j)
      if (same_projective_point(pts[i], pts[j]))
        throw std::invalid_argument("duplicate points in configuration");
}

bool three_collinear(const std::vector<ProjPoint>& pts) {
  const std::size_t n = pts.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k)
        if (det3({pts[i], pts[j], pts[k]}).is_zero()) return true;
  return false;
}

// rank of the degree-2 evaluation matrix on any 6 points
bool six_on_conic(const std::vector<ProjPoint>& pts, const Field& field) {
  if (pts.size() < 6) return false;
  std::vector<std::size_t> idx(pts.size());
  std::iota(idx.begin(), idx.end(), 0);
  std::vector<std::size_t> pick(6);
  std::function<bool(std::size_t, int)> rec = [&](std::size_t start, int chosen) {
    if (chosen == 6) {
      Matrix m(6, 6, field);
      static const int exps[6][3] = {{2, 0, 0}, {1, 1, 0}, {1, 0, 1},
                                     {0, 2, 0}, {0, 1, 1}, {0, 0, 2}};
      for (int r = 0; r < 6; ++r) {
        const ProjPoint& p = pts[pick[r]];
        for (int c = 0; c < 6; ++c) {
          Scalar v = field.one();
          for (int var = 0; var < 3; ++var)
            for (int e = 0; e < exps[c][var]; ++e) v *= p[var];
          m.at(r, c) = v;
        }
      }
      return rref(m, field).rank < 6;
    }
    for (std::size_t i = start; i + (5 - chosen) < idx.size(); ++i) {
      pick[chosen] = idx[i];
      if (rec(i + 1, chosen + 1)) return true;
    }
    return false;
  };
  return rec(0, 0);
}

}  // namespace

RingPtr scheme_ring(const FatPointScheme& z) {
  return Ring::make(3, z.config.field());
}

Poly conic_form(const RingPtr& ring) {
  return parse_poly("y^2 - x*z", ring);
}

PointConfig PointConfig::on_conic(const std::vector<long>& params,
                                  const Field& f) {
  if (params.empty()) throw std::invalid_argument("n >= 1 required");
  std::vector<ProjPoint> pts;
  for (long t : params) {
    Scalar s = f.from_long(t);
    pts.push_back(ProjPoint{f.one(), s, s * s});
  }
  check_distinct(pts);
  PointConfig c(ConfigKind::OnConic, std::move(pts), f);
  c.params_ = params;
  return c;
}

PointConfig PointConfig::explicit_points(std::vector<ProjPoint> pts,
                                         const Field& f) {
  if (pts.empty()) throw std::invalid_argument("n >= 1 required");
  for (const ProjPoint& p : pts)
    if (p[0].is_zero() && p[1].is_zero() && p[2].is_zero())
      throw std::invalid_argument("zero coordinate triple");
  check_distinct(pts);
  return PointConfig(ConfigKind::Explicit, std::move(pts), f);
}

PointConfig PointConfig::generic(int n, std::uint64_t seed, const Field& f,
                                 int predictor_grid) {
  if (n < 1) throw std::invalid_argument("n >= 1 required");
  std::mt19937_64 rng(seed);
  constexpr int kRetries = 32;
  for (int attempt = 0; attempt < kRetries; ++attempt) {
    std::vector<ProjPoint> pts;
    for (int i = 0; i < n; ++i) {
      ProjPoint p{f.random(rng), f.random(rng), f.random(rng)};
      if (p[0].is_zero() && p[1].is_zero() && p[2].is_zero()) p[0] = f.one();
      pts.push_back(p);
    }
    bool dup = false;
    for (std::size_t i = 0; i < pts.size() && !dup; ++i)
      for (std::size_t j = i + 1; j < pts.size() && !dup; ++j)
        dup = same_projective_point(pts[i], pts[j]);
    if (dup || (n >= 3 && three_collinear(pts)) || six_on_conic(pts, f))
      continue;

    PointConfig c(ConfigKind::Generic, std::move(pts), f);
    c.seed_ = seed;
    // semicontinuity battery: least degrees of uniform mZ must match the
    // known generic values
    if (n <= 9 && predictor_grid > 0) {
      bool ok = true;
      for (int m = 1; m <= predictor_grid && ok; ++m) {
        long expected = alpha_symbolic(ConfigClass::GeneralSimple, n, m);
        FatPointScheme z = FatPointScheme::uniform(c, m);
        if (expected > 1 && graded_piece_dim(z, static_cast<int>(expected) - 1) != 0)
          ok = false;
        if (ok && graded_piece_dim(z, static_cast<int>(expected)) <= 0)
          ok = false;
      }
      if (!ok) continue;
    }
    return c;
  }
  throw std::runtime_error("genericity battery exhausted its retries");
}

FatPointScheme::FatPointScheme(PointConfig c, std::vector<int> mult)
    : config(std::move(c)), multiplicities(std::move(mult)) {
  if (static_cast<int>(multiplicities.size()) != config.size())
    throw std::invalid_argument("multiplicity count != point count");
  for (int m : multiplicities)
    if (m < 0) throw std::invalid_argument("negative multiplicity");
}

FatPointScheme FatPointScheme::uniform(PointConfig c, int m) {
  std::vector<int> mult(c.size(), m);
  return FatPointScheme(std::move(c), std::move(mult));
}

bool FatPointScheme::is_uniform() const {
  return std::all_of(multiplicities.begin(), multiplicities.end(),
                     [&](int m) { return m == multiplicities.front(); });
}

bool FatPointScheme::is_zero() const {
  return std::all_of(multiplicities.begin(), multiplicities.end(),
                     [](int m) { return m == 0; });
}

FatPointScheme FatPointScheme::scaled(int m) const {
  std::vector<int> mult = multiplicities;
  for (int& x : mult) x *= m;
  return FatPointScheme(config, std::move(mult));
}

long long FatPointScheme::colength() const {
  long long s = 0;
  for (int m : multiplicities) s += binom(m + 1, 2);
  return s;
}

namespace {

// Stacked Hasse-vanishing conditions: one row per (point, derivative order
// tuple a with |a| <= m_i - 1), one column per degree-t monomial.
Matrix conditions_matrix(const FatPointScheme& z, int t,
                         const std::vector<Monomial>& basis) {
  const Field& field = z.config.field();
  Matrix m(0, 0, field);
  for (int i = 0; i < z.n(); ++i) {
    int mi = z.multiplicities[i];
    if (mi == 0) continue;
    const ProjPoint& p = z.config.points()[i];
    for (int a0 = 0; a0 < mi; ++a0)
      for (int a1 = 0; a0 + a1 < mi; ++a1)
        for (int a2 = 0; a0 + a1 + a2 < mi; ++a2) {
          std::vector<Scalar> row;
          row.reserve(basis.size());
          int a[3] = {a0, a1, a2};
          for (const Monomial& mono : basis) {
            bool ok = true;
            Scalar v = field.one();
            for (int var = 0; var < 3; ++var) {
              if (a[var] > mono.e[var]) {
                ok = false;
                break;
              }
              v *= field.binomial(mono.e[var], a[var]);
              for (int e = a[var]; e < mono.e[var]; ++e) v *= p[var];
            }
            row.push_back(ok ? v : field.zero());
          }
          m.append_row(row);
        }
  }
  return m;
}

}  // namespace

GradedPiece graded_piece(const FatPointScheme& z, int t) {
  if (t < 0) throw std::invalid_argument("t >= 0 required");
  RingPtr ring = scheme_ring(z);
  std::vector<Monomial> basis = monomials_of_degree(*ring, t);
  Matrix m = conditions_matrix(z, t, basis);
  GradedPiece out{t, {}};
  if (m.rows() == 0) {
    for (const Monomial& mono : basis)
      out.basis.push_back(Poly::monomial(ring, mono, ring->field.one()));
    return out;
  }
  for (const auto& v : kernel_basis(m, ring->field))
    out.basis.push_back(from_coordinates(ring, basis, v));
  return out;
}

int graded_piece_dim(const FatPointScheme& z, int t) {
  RingPtr ring = scheme_ring(z);
  std::vector<Monomial> basis = monomials_of_degree(*ring, t);
  Matrix m = conditions_matrix(z, t, basis);
  if (m.rows() == 0) return static_cast<int>(basis.size());
  return static_cast<int>(basis.size() - rref(m, ring->field).rank);
}

int hilbert_rank(const FatPointScheme& z, int t) {
  return static_cast<int>(binom(t + 2, 2)) - graded_piece_dim(z, t);
}

int alpha_scheme(const FatPointScheme& z) {
  if (z.is_zero()) throw std::domain_error("alpha of the empty scheme");
  for (int t = 1;; ++t)
    if (graded_piece_dim(z, t) > 0) return t;
}

int reg_scheme(const FatPointScheme& z) {
  if (z.is_zero()) return 0;
  long long target = z.colength();
  int prev = hilbert_rank(z, 0);
  for (int t = 1;; ++t) {
    int cur = hilbert_rank(z, t);
    if (cur == prev) {
      if (cur != target)
        throw std::logic_error("Hilbert function stabilized off the colength");
      return t;
    }
    prev = cur;
  }
}

Ideal fat_ideal(const FatPointScheme& z) {
  RingPtr ring = scheme_ring(z);
  if (z.is_zero()) return Ideal::unit(ring);
  int bound = reg_scheme(z) + 1;
  std::vector<Poly> gens;
  std::vector<Poly> prev_basis;
  for (int t = 1; t <= bound + 1; ++t) {
    std::vector<Monomial> basis = monomials_of_degree(*ring, t);
    SpanBuilder span(basis.size(), ring->field);
    for (const Poly& b : prev_basis)
      for (int v = 0; v < 3; ++v)
        span.add(coordinates(b.times_monomial(Monomial::var(v), ring->field.one()),
                             basis));
    GradedPiece piece = graded_piece(z, t);
    int fresh = 0;
    for (const Poly& b : piece.basis)
      if (span.add(coordinates(b, basis))) {
        gens.push_back(b);
        ++fresh;
      }
    if (t == bound + 1 && fresh != 0)
      throw std::logic_error("fat-point ideal generator above regularity bound");
    prev_basis = std::move(piece.basis);
  }
  return Ideal(ring, std::move(gens));
}

Ideal symbolic_power(const FatPointScheme& z, int m) {
  if (m < 1) throw std::invalid_argument("m >= 1 required");
  return fat_ideal(z.scaled(m));
}

Ideal point_ideal(const ProjPoint& p, const RingPtr& ring) {
  Matrix m(1, 3, ring->field);
  for (int i = 0; i < 3; ++i) m.at(0, i) = p[i];
  std::vector<Poly> gens;
  for (const auto& v : kernel_basis(m, ring->field)) {
    std::vector<Term> terms;
    for (int i = 0; i < 3; ++i)
      if (!v[i].is_zero()) terms.push_back(Term{Monomial::var(i), v[i]});
    gens.emplace_back(ring, std::move(terms));
  }
  return Ideal(ring, std::move(gens));
}

Ideal symbolic_power_via_intersection(const FatPointScheme& z, int m) {
  if (m < 1) throw std::invalid_argument("m >= 1 required");
  RingPtr ring = scheme_ring(z);
  Ideal acc = Ideal::unit(ring);
  for (int i = 0; i < z.n(); ++i) {
    int e = m * z.multiplicities[i];
    if (e == 0) continue;
    Ideal pi = point_ideal(z.config.points()[i], ring).power(e);
    acc = acc.is_unit() ? pi : acc.intersect(pi);
  }
  return acc;
}

ConicStrip strip_conic_factor(const GradedPiece& piece,
                              const FatPointScheme& z) {
  if (z.config.kind() != ConfigKind::OnConic)
    throw std::invalid_argument("conic stripping needs an OnConic configuration");
  if (piece.basis.empty())
    throw std::invalid_argument("empty graded piece");
  RingPtr ring = piece.basis.front().ring();
  Poly f = conic_form(ring);
  int e = 0;
  std::vector<Poly> current = piece.basis;
  while (true) {
    std::vector<Poly> next;
    bool all = true;
    for (const Poly& b : current) {
      auto q = b.divided_by(f);
      if (!q) {
        all = false;
        break;
      }
      next.push_back(*q);
    }
    if (!all) break;
    current = std::move(next);
    ++e;
  }
  return ConicStrip{e, GradedPiece{piece.degree - 2 * e, std::move(current)}};
}

}  // namespace sympow
