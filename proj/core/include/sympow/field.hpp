#ifndef SYMPOW_FIELD_HPP
#define SYMPOW_FIELD_HPP

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <variant>

#include <gmpxx.h>

namespace sympow {

// Exact scalar over one of two backends: arbitrary-precision rationals,
// or the prime field F_p for a runtime modulus p.  Backends never mix
// within one computation; mixing throws.

enum class FieldKind { Rational, Prime };

struct FpElem {
  std::uint64_t v = 0;  // canonical representative in [0, p)
  std::uint64_t p = 0;  // p == 0 denotes the neutral zero of any F_p
};

class Field;

class Scalar {
 public:
  Scalar() : rep_(FpElem{}) {}  // field-agnostic zero
  explicit Scalar(mpq_class q) : rep_(std::move(q)) {}
  explicit Scalar(FpElem e) : rep_(e) {}

  bool is_zero() const;
  bool is_one() const;
  bool is_rational() const { return std::holds_alternative<mpq_class>(rep_); }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar inv() const;
  bool operator==(const Scalar& o) const;
  bool operator!=(const Scalar& o) const { return !(*this == o); }

  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }

  const mpq_class& rational() const { return std::get<mpq_class>(rep_); }
  const FpElem& fp() const { return std::get<FpElem>(rep_); }

  std::string str() const;

 private:
  std::variant<mpq_class, FpElem> rep_;
};

class Field {
 public:
  static Field rationals() { return Field(FieldKind::Rational, 0); }
  static Field prime(std::uint64_t p);

  FieldKind kind() const { return kind_; }
  std::uint64_t modulus() const { return p_; }

  Scalar zero() const;
  Scalar one() const;
  Scalar from_long(long v) const;
  Scalar from_mpz(const mpz_class& v) const;
  Scalar from_mpq(const mpq_class& v) const;
  // Parses "a" or "a/b".
  Scalar from_string(const std::string& s) const;
  Scalar binomial(unsigned long n, unsigned long k) const;
  Scalar random(std::mt19937_64& rng) const;

  bool operator==(const Field& o) const { return kind_ == o.kind_ && p_ == o.p_; }
  bool operator!=(const Field& o) const { return !(*this == o); }

  std::string str() const;

 private:
  Field(FieldKind k, std::uint64_t p) : kind_(k), p_(p) {}
  FieldKind kind_;
  std::uint64_t p_;
};

}  // namespace sympow

#endif
