#include <doctest.h>

#include "sympow/closedform.hpp"
#include "sympow/oracle.hpp"

using namespace sympow;

namespace {
const Field kFp = Field::prime(2147483647);

FatPointScheme conic(int n) {
  std::vector<long> params;
  for (int i = 0; i < n; ++i) params.push_back(i);
  return FatPointScheme::uniform(PointConfig::on_conic(params, kFp), 1);
}

FatPointScheme general(int n, std::uint64_t seed = 1) {
  return FatPointScheme::uniform(PointConfig::generic(n, seed, kFp), 1);
}
}  // namespace

TEST_SUITE("oracle") {

TEST_CASE("identity containment") {
  OracleReport rep = contains_bruteforce(conic(5), 1, 1);
  CHECK(rep.result);
  CHECK_FALSE(rep.witness.has_value());
}

TEST_CASE("negative verdicts carry re-verifiable witnesses") {
  FatPointScheme z = conic(5);
  OracleReport rep = contains_bruteforce(z, 2, 2);
  CHECK_FALSE(rep.result);
  REQUIRE(rep.witness.has_value());
  const Poly& w = *rep.witness;
  // in the symbolic power: lies in the graded piece of 2Z
  RingPtr ring = scheme_ring(z);
  int t = w.degree();
  auto basis = monomials_of_degree(*ring, t);
  GradedPiece piece = graded_piece(z.scaled(2), t);
  SpanBuilder sym(basis.size(), kFp);
  for (const Poly& b : piece.basis) sym.add(coordinates(b, basis));
  CHECK(sym.contains(coordinates(w, basis)));
  // not in I^2: graded piece of the power does not contain it
  Ideal i2 = fat_ideal(z).power(2);
  SpanBuilder pow(basis.size(), kFp);
  for (const Poly& b : i2.graded_basis(t)) pow.add(coordinates(b, basis));
  CHECK_FALSE(pow.contains(coordinates(w, basis)));
}

TEST_CASE("positive boundary case at nine points") {
  CHECK(contains_bruteforce(general(9), 3, 2).result);
}

TEST_CASE("work bound rejects oversized jobs") {
  CHECK_THROWS_AS(contains_bruteforce(conic(9), 4, 4, 10),
                  std::runtime_error);
}

TEST_CASE("alpha by brute force") {
  CHECK(alpha_bruteforce(general(7), 3) == 8);
  CHECK(alpha_bruteforce(general(8), 1) == 3);
  CHECK(alpha_bruteforce(conic(5), 4) == 8);
}

TEST_CASE("conic power structure spot checks") {
  FatPointScheme z = conic(5);
  OracleReport a = check_conic_power_structure(z, 1, 2, 5);
  CHECK(a.result);
  CHECK(a.value == 1);
  OracleReport b = check_conic_power_structure(z, 1, 1, 3);
  CHECK(b.result);
  CHECK(b.value == 0);
  OracleReport c = check_conic_power_structure(conic(7), 2, 2, 8);
  CHECK(c.result);
}

TEST_CASE("multiplication maps on the conic") {
  FatPointScheme z = conic(5);
  CHECK(check_mult_map_surjectivity(z, 3, z, 3).result);
  // multiplication by linear forms: Z2 = 0
  FatPointScheme zero(z.config, std::vector<int>(5, 0));
  CHECK(check_mult_map_surjectivity(z, 3, zero, 1).result);
  // below alpha the map is vacuously fine
  OracleReport v = check_mult_map_surjectivity(z, 1, z, 1);
  CHECK(v.result);
  CHECK(v.detail.find("vacuous") != std::string::npos);
}

TEST_CASE("cubic family with a double point") {
  OracleReport rep = check_cubic_family(3, 1);
  CHECK(rep.result);
  CHECK(rep.value == 3);
}

TEST_CASE("power truncation identity") {
  CHECK(check_power_truncation(6, 2).result);
  CHECK(check_power_truncation(3, 2).result);
  CHECK_THROWS_AS(check_power_truncation(8, 2), std::domain_error);
}

TEST_CASE("ordinary powers sit inside symbolic powers") {
  for (int n : {5, 6}) {
    FatPointScheme z = general(n);
    Ideal i = fat_ideal(z);
    Ideal i2 = i.power(2);
    for (const Poly& g : i2.generators()) {
      bool ok = true;
      for (int p = 0; p < z.n() && ok; ++p) {
        // order-2 vanishing: all Hasse derivatives of order <= 1 vanish
        for (int a0 = 0; a0 <= 1 && ok; ++a0)
          for (int a1 = 0; a0 + a1 <= 1 && ok; ++a1)
            for (int a2 = 0; a0 + a1 + a2 <= 1 && ok; ++a2) {
              Monomial a;
              a.e[0] = a0;
              a.e[1] = a1;
              a.e[2] = a2;
              const ProjPoint& pt = z.config.points()[p];
              if (!hasse_derivative(g, a).eval({pt[0], pt[1], pt[2]}).is_zero())
                ok = false;
            }
      }
      CHECK(ok);
    }
  }
}

TEST_CASE("oracle grid is monotone and matches sufficiency") {
  CrossTable t = crossvalidate(conic(6), true, 3, 3);
  CHECK(t.all_agree);
  auto cell = [&](int m, int r) {
    for (const CrossRow& row : t.rows)
      if (row.m == m && row.r == r) return row.oracle;
    return -1;
  };
  for (int m = 1; m <= 2; ++m)
    for (int r = 1; r <= 3; ++r)
      if (cell(m, r) == 1) {
        CHECK(cell(m + 1, r) == 1);
        if (r > 1) CHECK(cell(m, r - 1) == 1);
      }
  for (int m = 1; m <= 3; ++m)
    for (int r = 1; r <= 3; ++r)
      if (m >= 2 * r) CHECK(cell(m, r) == 1);
}

TEST_CASE("reports serialize to json") {
  OracleReport rep = contains_bruteforce(conic(5), 1, 1);
  std::string j = rep.to_json();
  CHECK(j.find("\"result\": true") != std::string::npos);
  CrossTable t = crossvalidate(conic(5), true, 2, 2);
  CHECK(t.to_csv().rfind("m,r,", 0) == 0);
  CHECK(t.to_json().find("\"rows\"") != std::string::npos);
}

}  // TEST_SUITE
