#ifndef SYMPOW_IDEAL_HPP
#define SYMPOW_IDEAL_HPP

#include <map>
#include <memory>
#include <optional>
#include <tuple>
#include <vector>

#include "sympow/groebner.hpp"
#include "sympow/poly.hpp"

namespace sympow {

// Binomial coefficient as a plain integer count.
long long binom(long long n, long long k);

// Homogeneous ideal with cached Groebner bases and numeric invariants.
// The unit ideal is represented by a flag, never by a degree-0 generator.
class Ideal {
 public:
  Ideal(RingPtr ring, std::vector<Poly> generators);
  static Ideal unit(RingPtr ring);
  static Ideal irrelevant(RingPtr ring);  // M = <x, y, z>

  const RingPtr& ring() const { return ring_; }
  const std::vector<Poly>& generators() const { return gens_; }
  bool is_unit() const { return unit_; }
  bool is_zero_ideal() const { return !unit_ && gens_.empty(); }

  Ideal operator+(const Ideal& o) const;
  Ideal operator*(const Ideal& o) const;
  Ideal power(int e) const;  // e >= 1
  Ideal intersect(const Ideal& o) const;
  Ideal quotient_by(const Poly& g) const;  // I : <g>
  Ideal saturate_irrelevant() const;       // I : M^infinity

  const GroebnerBasis& groebner(MonomialOrder order,
                                std::optional<int> truncation = std::nullopt) const;
  bool contains(const Poly& f) const;
  bool operator==(const Ideal& o) const;

  // dim I_t from the truncated grevlex basis (standard-monomial count).
  int graded_dim(int t) const;
  // Basis of I_t as polynomials.
  std::vector<Poly> graded_basis(int t) const;
  // dim (R/I)_t.
  int hilbert_rvalue(int t) const;

  int alpha() const;
  int omega() const;
  int reg_points() const;  // 0-dimensional subschemes only
  // Minimal generator count in degree t: dim I_t - dim(R_1 * I_{t-1}).
  int min_gen_count(int t) const;
  // The ideal generated by the graded pieces I_t, t >= d (equals I cap M^d).
  Ideal truncate(int d) const;

 private:
  Ideal() = default;
  RingPtr ring_;
  std::vector<Poly> gens_;
  bool unit_ = false;

  mutable std::map<std::tuple<int, int, int>, std::shared_ptr<GroebnerBasis>> gb_cache_;
  mutable std::map<int, int> dim_cache_;
  mutable std::optional<int> alpha_, omega_, reg_;
};

}  // namespace sympow

#endif
