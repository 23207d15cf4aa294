#ifndef SYMPOW_POLY_HPP
#define SYMPOW_POLY_HPP

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "sympow/field.hpp"

namespace sympow {

inline constexpr int kMaxVars = 5;  // x, y, z plus up to 2 elimination vars

// Exponent tuple; entries beyond the ring's variable count stay zero.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};

  int degree() const {
    int d = 0;
    for (auto x : e) d += x;
    return d;
  }
  bool operator==(const Monomial& o) const { return e == o.e; }

  Monomial operator*(const Monomial& o) const;
  bool divides(const Monomial& o) const;
  Monomial operator/(const Monomial& o) const;  // requires o.divides(*this)
  static Monomial lcm(const Monomial& a, const Monomial& b);
  static Monomial var(int i, int power = 1);
};

struct MonomialOrder {
  enum Kind { Grevlex, Lex, Block } kind = Grevlex;
  int eliminated = 0;  // Block: leading `eliminated` variables go first

  static MonomialOrder grevlex() { return {Grevlex, 0}; }
  static MonomialOrder lex() { return {Lex, 0}; }
  static MonomialOrder block(int k) { return {Block, k}; }

  // <0, 0, >0 as a is below, equal to, above b.
  int compare(const Monomial& a, const Monomial& b, int nvars) const;
  bool less(const Monomial& a, const Monomial& b, int nvars) const {
    return compare(a, b, nvars) < 0;
  }
  bool operator==(const MonomialOrder& o) const {
    return kind == o.kind && eliminated == o.eliminated;
  }
};

struct Ring {
  int nvars;
  Field field;
  MonomialOrder order;

  static std::shared_ptr<const Ring> make(int nvars, const Field& f,
                                          MonomialOrder ord = MonomialOrder::grevlex());
  const char* var_name(int i) const;
  int var_index(const std::string& name) const;  // -1 if unknown
  bool operator==(const Ring& o) const {
    return nvars == o.nvars && field == o.field && order == o.order;
  }
};

using RingPtr = std::shared_ptr<const Ring>;

struct Term {
  Monomial mono;
  Scalar coeff;
};

// Terms sorted strictly descending under the ring's monomial order; no zero
// coefficients stored.
class Poly {
 public:
  Poly() = default;
  explicit Poly(RingPtr ring) : ring_(std::move(ring)) {}
  Poly(RingPtr ring, std::vector<Term> terms);  // normalizes

  static Poly zero(RingPtr ring) { return Poly(std::move(ring)); }
  static Poly constant(RingPtr ring, const Scalar& c);
  static Poly monomial(RingPtr ring, const Monomial& m, const Scalar& c);
  static Poly variable(RingPtr ring, int i);

  const RingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  const Term& leading() const { return terms_.front(); }

  // -1 for the zero polynomial.
  int degree() const;
  bool is_homogeneous() const;

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator*(const Poly& o) const;
  Poly operator-() const;
  Poly scaled(const Scalar& c) const;
  Poly times_monomial(const Monomial& m, const Scalar& c) const;
  Poly pow(unsigned e) const;
  Poly monic() const;
  bool operator==(const Poly& o) const;
  bool operator!=(const Poly& o) const { return !(*this == o); }

  // Exact division; nullopt when the divisor does not divide exactly.
  std::optional<Poly> divided_by(const Poly& g) const;

  // Re-sorts the terms into a ring with at least as many variables (or the
  // same variables under another order).
  Poly in_ring(RingPtr target) const;

  Scalar coefficient(const Monomial& m) const;
  // Evaluation at a projective point (coordinate vector over the ring field).
  Scalar eval(const std::vector<Scalar>& point) const;

  std::string str() const;

 private:
  void normalize();
  RingPtr ring_;
  std::vector<Term> terms_;
};

// Text grammar: signed integer/rational coefficients, variable names,
// ^ powers, optional *, parentheses.  Throws std::invalid_argument with a
// position on syntax errors.
Poly parse_poly(const std::string& text, RingPtr ring);

// Divided-power derivative: the coefficient of x^b contributes
// prod_i C(b_i, a_i) x^(b-a).  Characteristic-safe order-of-vanishing device.
Poly hasse_derivative(const Poly& f, const Monomial& a);

// All monomials of total degree t in the first `nvars` variables, sorted
// descending under the ring order.  The coordinate basis of R_t.
std::vector<Monomial> monomials_of_degree(const Ring& ring, int t);

// Coefficient vector of f relative to a monomial basis (degree-t forms).
std::vector<Scalar> coordinates(const Poly& f, const std::vector<Monomial>& basis);
Poly from_coordinates(RingPtr ring, const std::vector<Monomial>& basis,
                      const std::vector<Scalar>& coords);

}  // namespace sympow

#endif
