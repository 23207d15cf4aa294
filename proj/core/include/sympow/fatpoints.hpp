#ifndef SYMPOW_FATPOINTS_HPP
#define SYMPOW_FATPOINTS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "sympow/ideal.hpp"
#include "sympow/linalg.hpp"
#include "sympow/poly.hpp"

namespace sympow {

enum class ConfigKind { OnConic, Generic, Explicit };

using ProjPoint = std::array<Scalar, 3>;

// A validated configuration of distinct points in the projective plane.
// OnConic points are (1 : t : t^2) on y^2 - xz; Generic points are seeded
// pseudorandom draws that passed the genericity battery.
class PointConfig {
 public:
  static PointConfig on_conic(const std::vector<long>& params, const Field& f);
  // Resamples (bounded retries) until the battery passes: points distinct,
  // no 3 collinear, no 6 on a conic, and for n <= 9 the least degrees of the
  // uniform schemes mZ match the known values for m <= predictor_grid.
  static PointConfig generic(int n, std::uint64_t seed, const Field& f,
                             int predictor_grid = 4);
  static PointConfig explicit_points(std::vector<ProjPoint> pts, const Field& f);

  ConfigKind kind() const { return kind_; }
  int size() const { return static_cast<int>(points_.size()); }
  const std::vector<ProjPoint>& points() const { return points_; }
  const Field& field() const { return field_; }
  std::uint64_t seed() const { return seed_; }
  const std::vector<long>& conic_params() const { return params_; }

 private:
  PointConfig(ConfigKind k, std::vector<ProjPoint> pts, const Field& f)
      : kind_(k), points_(std::move(pts)), field_(f) {}
  ConfigKind kind_;
  std::vector<ProjPoint> points_;
  Field field_;
  std::uint64_t seed_ = 0;
  std::vector<long> params_;
};

// Z = m_1 p_1 + ... + m_n p_n.  Zero multiplicities impose no conditions.
struct FatPointScheme {
  PointConfig config;
  std::vector<int> multiplicities;

  FatPointScheme(PointConfig c, std::vector<int> mult);
  static FatPointScheme uniform(PointConfig c, int m);

  int n() const { return config.size(); }
  bool is_uniform() const;
  bool is_zero() const;
  // Multiplicities scaled by m (the scheme underlying the m-th symbolic power).
  FatPointScheme scaled(int m) const;
  // Degree of the scheme: sum of C(m_i + 1, 2).
  long long colength() const;
};

struct GradedPiece {
  int degree;
  std::vector<Poly> basis;  // linearly independent, homogeneous of `degree`
  int dim() const { return static_cast<int>(basis.size()); }
};

// Basis of the degree-t forms with all Hasse derivatives of order <= m_i - 1
// vanishing at p_i, via the kernel of the stacked conditions matrix.
GradedPiece graded_piece(const FatPointScheme& z, int t);
// Rank route only (no kernel basis); dim I(Z)_t.
int graded_piece_dim(const FatPointScheme& z, int t);

int hilbert_rank(const FatPointScheme& z, int t);  // dim (R/I(Z))_t
int alpha_scheme(const FatPointScheme& z);         // least t with a section
int reg_scheme(const FatPointScheme& z);

// Minimal generating set of I(Z) extracted degree by degree from graded
// pieces.
Ideal fat_ideal(const FatPointScheme& z);
// I(Z)^(m) = I of the scheme with multiplicities m * m_i  (route B).
Ideal symbolic_power(const FatPointScheme& z, int m);
// Route A: intersection of powers of the point ideals, through elimination.
Ideal symbolic_power_via_intersection(const FatPointScheme& z, int m);
// The ideal of a single projective point (two linear forms).
Ideal point_ideal(const ProjPoint& p, const RingPtr& ring);

// Largest e with f^e (f the conic form y^2 - xz) dividing every element of
// the piece, plus the reduced piece in degree t - 2e.
struct ConicStrip {
  int exponent;
  GradedPiece reduced;
};
ConicStrip strip_conic_factor(const GradedPiece& piece, const FatPointScheme& z);

// The conic form y^2 - xz.
Poly conic_form(const RingPtr& ring);

RingPtr scheme_ring(const FatPointScheme& z);

}  // namespace sympow

#endif
