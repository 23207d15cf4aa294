#include <doctest.h>

#include "sympow/fatpoints.hpp"
#include "sympow/ideal.hpp"

using namespace sympow;

namespace {

RingPtr qring() {
  static RingPtr r = Ring::make(3, Field::rationals());
  return r;
}

Ideal of(std::initializer_list<const char*> texts) {
  std::vector<Poly> gens;
  for (const char* t : texts) gens.push_back(parse_poly(t, qring()));
  return Ideal(qring(), std::move(gens));
}

}  // namespace

TEST_SUITE("ideal") {

TEST_CASE("powers expand generator products") {
  CHECK(of({"y", "z"}).power(2) == of({"y^2", "y*z", "z^2"}));
  CHECK_THROWS(of({"y", "z"}).power(0));
  CHECK_THROWS(Ideal(qring(), {parse_poly("3", qring())}));
}

TEST_CASE("alpha of conic point-ideal powers") {
  Field f = Field::prime(2147483647);
  FatPointScheme z = FatPointScheme::uniform(
      PointConfig::on_conic({0, 1, 2, 3, 4}, f), 1);
  for (int m = 1; m <= 2; ++m)
    for (int r = 1; r <= 2; ++r)
      CHECK(fat_ideal(z.scaled(m)).power(r).alpha() == 2 * m * r);
}

TEST_CASE("intersection of two point ideals") {
  Field q = Field::rationals();
  RingPtr ring = qring();
  Ideal ip = point_ideal({q.one(), q.zero(), q.zero()}, ring);
  Ideal iq = point_ideal({q.zero(), q.one(), q.zero()}, ring);
  CHECK(ip.intersect(iq) == of({"z", "x*y"}));
}

TEST_CASE("intersection identities") {
  Ideal i = of({"x", "y^2"});
  CHECK(i.intersect(i) == i);
  CHECK(of({"x"}).intersect(of({"y"})) == of({"x*y"}));
}

TEST_CASE("saturation strips irrelevant components") {
  CHECK(of({"x^2", "x*y", "x*z"}).saturate_irrelevant() == of({"x"}));
  CHECK(Ideal::irrelevant(qring()).power(2).saturate_irrelevant().is_unit());
}

TEST_CASE("graded dimensions") {
  CHECK(of({"x"}).graded_dim(2) == 3);
  Field f = Field::prime(2147483647);
  FatPointScheme six = FatPointScheme::uniform(PointConfig::generic(6, 1, f), 1);
  CHECK(fat_ideal(six).graded_dim(3) == 4);
  FatPointScheme conic5 = FatPointScheme::uniform(
      PointConfig::on_conic({0, 1, 2, 3, 4}, f), 1);
  CHECK(fat_ideal(conic5.scaled(2)).graded_dim(4) == 1);
}

TEST_CASE("alpha examples") {
  Field f = Field::prime(2147483647);
  CHECK(fat_ideal(FatPointScheme::uniform(PointConfig::generic(5, 1, f), 1))
            .alpha() == 2);
  CHECK(fat_ideal(FatPointScheme::uniform(PointConfig::generic(6, 1, f), 1))
            .alpha() == 3);
  CHECK(of({"x"}).alpha() == 1);
}

TEST_CASE("omega examples") {
  CHECK(of({"x", "y^2"}).omega() == 2);
  Field f = Field::prime(2147483647);
  // 5 conic points: generators are the conic and two cubics
  FatPointScheme conic5 = FatPointScheme::uniform(
      PointConfig::on_conic({0, 1, 2, 3, 4}, f), 1);
  CHECK(fat_ideal(conic5).omega() == 3);
}

TEST_CASE("regularity examples") {
  Field f = Field::prime(2147483647);
  CHECK(fat_ideal(FatPointScheme::uniform(PointConfig::generic(6, 1, f), 1))
            .reg_points() == 3);
  CHECK(fat_ideal(FatPointScheme::uniform(PointConfig::generic(8, 1, f), 1))
            .reg_points() == 4);
  RingPtr ring = Ring::make(3, f);
  CHECK(point_ideal({f.one(), f.zero(), f.zero()}, ring).reg_points() == 1);
}

TEST_CASE("hilbert function stabilizes at the colength") {
  Field f = Field::prime(2147483647);
  FatPointScheme z(PointConfig::generic(4, 1, f), {2, 1, 1, 1});
  Ideal i = fat_ideal(z);
  int reg = i.reg_points();
  CHECK(i.hilbert_rvalue(reg) == z.colength());
  CHECK(i.hilbert_rvalue(reg + 3) == z.colength());
}

TEST_CASE("truncation") {
  Ideal i = of({"x", "y^2"});
  CHECK(i.truncate(0) == i);
  CHECK(of({"x"}).truncate(2) == of({"x^2", "x*y", "x*z"}));
  Ideal t = i.truncate(3);
  CHECK(t.graded_dim(2) == 0);
  for (int d = 3; d <= 5; ++d) CHECK(t.graded_dim(d) == i.graded_dim(d));
}

TEST_CASE("minimal generator counts") {
  Ideal i = of({"x", "y^2"});
  CHECK(i.min_gen_count(1) == 1);
  CHECK(i.min_gen_count(2) == 1);
  CHECK(i.min_gen_count(3) == 0);
}

}  // TEST_SUITE
