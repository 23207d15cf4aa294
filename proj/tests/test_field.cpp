#include <doctest.h>

#include <random>

#include "sympow/field.hpp"

using namespace sympow;

TEST_SUITE("field") {

TEST_CASE("rational arithmetic is exact") {
  Field q = Field::rationals();
  Scalar a = q.from_string("1/3"), b = q.from_string("1/6");
  CHECK((a + b) == q.from_string("1/2"));
  CHECK((a * b) == q.from_string("1/18"));
  CHECK((a - a).is_zero());
  CHECK((a / a).is_one());
}

TEST_CASE("prime field representatives are canonical in [0, p)") {
  Field f = Field::prime(101);
  Scalar a = f.from_long(-1);
  CHECK(a == f.from_long(100));
  CHECK((f.from_long(50) + f.from_long(51)).is_zero());
  Scalar inv = f.from_long(7).inv();
  CHECK((inv * f.from_long(7)).is_one());
}

TEST_CASE("large prime field multiplication does not overflow") {
  Field f = Field::prime(2147483647);
  Scalar a = f.from_long(2147483646);
  CHECK((a * a).is_one());  // (-1)^2
  Scalar b = f.from_long(1234567891);
  CHECK((b * b.inv()).is_one());
}

TEST_CASE("composite modulus rejected") {
  CHECK_THROWS(Field::prime(91));
  CHECK_THROWS(Field::prime(1));
}

TEST_CASE("mixed backends refuse to combine") {
  Field q = Field::rationals(), f = Field::prime(101);
  CHECK_THROWS(q.one() + f.one());
  // the neutral zero adopts either backend
  CHECK((Scalar() + f.from_long(3)) == f.from_long(3));
  CHECK((Scalar() + q.from_long(3)) == q.from_long(3));
}

TEST_CASE("binomials reduce modulo p") {
  Field f = Field::prime(5);
  CHECK(f.binomial(5, 1).is_zero());
  CHECK(f.binomial(5, 5).is_one());
  Field q = Field::rationals();
  CHECK(q.binomial(6, 2) == q.from_long(15));
}

TEST_CASE("seeded random draws are deterministic") {
  Field f = Field::prime(2147483647);
  std::mt19937_64 a(7), b(7);
  for (int i = 0; i < 10; ++i) CHECK(f.random(a) == f.random(b));
}

}  // TEST_SUITE
