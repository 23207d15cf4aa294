#include "sympow/field.hpp"

namespace sympow {

namespace {

std::uint64_t addp(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

std::uint64_t subp(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + p - b;
}

std::uint64_t mulp(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powp(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1 % p;
  while (e) {
    if (e & 1) r = mulp(r, a, p);
    a = mulp(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invp(std::uint64_t a, std::uint64_t p) {
  if (a == 0) throw std::domain_error("division by zero in F_p");
  return powp(a, p - 2, p);  // p prime
}

// Resolves the modulus of a binary op; a zero with p == 0 adopts the other
// operand's field.
std::uint64_t join(const FpElem& a, const FpElem& b) {
  if (a.p == 0) return b.p;
  if (b.p == 0) return a.p;
  if (a.p != b.p) throw std::invalid_argument("mixed F_p moduli");
  return a.p;
}

[[noreturn]] void mixed() {
  throw std::invalid_argument("mixed field backends in scalar arithmetic");
}

}  // namespace

bool Scalar::is_zero() const {
  if (is_rational()) return rational() == 0;
  return fp().v == 0;
}

bool Scalar::is_one() const {
  if (is_rational()) return rational() == 1;
  return fp().v == 1;
}

Scalar Scalar::operator+(const Scalar& o) const {
  if (is_rational() != o.is_rational()) {
    if (is_zero()) return o;
    if (o.is_zero()) return *this;
    mixed();
  }
  if (is_rational()) return Scalar(mpq_class(rational() + o.rational()));
  std::uint64_t p = join(fp(), o.fp());
  if (p == 0) return Scalar();
  return Scalar(FpElem{addp(fp().v, o.fp().v, p), p});
}

Scalar Scalar::operator-(const Scalar& o) const { return *this + (-o); }

Scalar Scalar::operator-() const {
  if (is_rational()) return Scalar(mpq_class(-rational()));
  if (fp().p == 0) return *this;
  return Scalar(FpElem{fp().v == 0 ? 0 : fp().p - fp().v, fp().p});
}

Scalar Scalar::operator*(const Scalar& o) const {
  if (is_rational() != o.is_rational()) {
    if (is_zero() || o.is_zero()) return Scalar();
    mixed();
  }
  if (is_rational()) return Scalar(mpq_class(rational() * o.rational()));
  std::uint64_t p = join(fp(), o.fp());
  if (p == 0) return Scalar();
  return Scalar(FpElem{mulp(fp().v, o.fp().v, p), p});
}

Scalar Scalar::operator/(const Scalar& o) const { return *this * o.inv(); }

Scalar Scalar::inv() const {
  if (is_rational()) {
    if (rational() == 0) throw std::domain_error("division by zero");
    return Scalar(mpq_class(1 / rational()));
  }
  return Scalar(FpElem{invp(fp().v, fp().p), fp().p});
}

bool Scalar::operator==(const Scalar& o) const {
  if (is_rational() != o.is_rational()) return is_zero() && o.is_zero();
  if (is_rational()) return rational() == o.rational();
  if (fp().p != 0 && o.fp().p != 0 && fp().p != o.fp().p) return false;
  return fp().v == o.fp().v;
}

std::string Scalar::str() const {
  if (is_rational()) return rational().get_str();
  return std::to_string(fp().v);
}

Field Field::prime(std::uint64_t p) {
  if (p < 2) throw std::invalid_argument("modulus must be >= 2");
  mpz_class z(static_cast<unsigned long>(p));
  if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0)
    throw std::invalid_argument("modulus is not prime");
  return Field(FieldKind::Prime, p);
}

Scalar Field::zero() const {
  if (kind_ == FieldKind::Rational) return Scalar(mpq_class(0));
  return Scalar(FpElem{0, p_});
}

Scalar Field::one() const {
  if (kind_ == FieldKind::Rational) return Scalar(mpq_class(1));
  return Scalar(FpElem{1 % p_, p_});
}

Scalar Field::from_long(long v) const {
  if (kind_ == FieldKind::Rational) return Scalar(mpq_class(v));
  long r = v % static_cast<long>(p_);
  if (r < 0) r += static_cast<long>(p_);
  return Scalar(FpElem{static_cast<std::uint64_t>(r), p_});
}

Scalar Field::from_mpz(const mpz_class& v) const {
  if (kind_ == FieldKind::Rational) return Scalar(mpq_class(v));
  mpz_class r = v % mpz_class(static_cast<unsigned long>(p_));
  if (r < 0) r += static_cast<unsigned long>(p_);
  return Scalar(FpElem{r.get_ui(), p_});
}

Scalar Field::from_mpq(const mpq_class& v) const {
  if (kind_ == FieldKind::Rational) return Scalar(v);
  return from_mpz(v.get_num()) / from_mpz(v.get_den());
}

Scalar Field::from_string(const std::string& s) const {
  mpq_class q(s);
  q.canonicalize();
  return from_mpq(q);
}

Scalar Field::binomial(unsigned long n, unsigned long k) const {
  mpz_class b;
  mpz_bin_uiui(b.get_mpz_t(), n, k);
  return from_mpz(b);
}

Scalar Field::random(std::mt19937_64& rng) const {
  if (kind_ == FieldKind::Rational) {
    // small rationals keep coefficient growth in check in tests
    std::uniform_int_distribution<long> d(-20, 20);
    return Scalar(mpq_class(d(rng)));
  }
  std::uniform_int_distribution<std::uint64_t> d(0, p_ - 1);
  return Scalar(FpElem{d(rng), p_});
}

std::string Field::str() const {
  if (kind_ == FieldKind::Rational) return "rational";
  return "p:" + std::to_string(p_);
}

}  // namespace sympow
