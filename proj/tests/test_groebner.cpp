#include <doctest.h>

#include <random>

#include "helpers.hpp"
#include "sympow/groebner.hpp"

using namespace sympow;
using sympow::testing::random_form;

namespace {

Poly spoly(const Poly& f, const Poly& g) {
  Monomial l = Monomial::lcm(f.leading().mono, g.leading().mono);
  return f.times_monomial(l / f.leading().mono, g.leading().coeff) -
         g.times_monomial(l / g.leading().mono, f.leading().coeff);
}

}  // namespace

TEST_SUITE("groebner") {

TEST_CASE("a basis that is already reduced") {
  RingPtr ring = Ring::make(3, Field::rationals());
  GroebnerBasis gb = buchberger({parse_poly("x", ring), parse_poly("y", ring)},
                                ring);
  CHECK(gb.generators.size() == 2);
}

TEST_CASE("conic plus a line") {
  RingPtr ring = Ring::make(3, Field::rationals());
  GroebnerBasis gb = buchberger(
      {parse_poly("y^2 - x*z", ring), parse_poly("x", ring)}, ring);
  bool has_x = false, has_y2 = false;
  for (const Poly& g : gb.generators) {
    if (g == parse_poly("x", ring)) has_x = true;
    if (g == parse_poly("y^2", ring)) has_y2 = true;
  }
  CHECK(has_x);
  CHECK(has_y2);
}

TEST_CASE("normal form basics") {
  RingPtr ring = Ring::make(3, Field::rationals());
  GroebnerBasis gb = buchberger({parse_poly("x", ring)}, ring);
  CHECK(normal_form(parse_poly("x^2 + x*y", ring), gb).is_zero());
  CHECK(normal_form(parse_poly("y^2", ring), gb) == parse_poly("y^2", ring));
}

TEST_CASE("normal form ignores multiples of the basis") {
  RingPtr ring = Ring::make(3, Field::prime(101));
  std::mt19937_64 rng(41);
  Poly f = parse_poly("x^2 + y*z", ring);
  GroebnerBasis gb = buchberger({f}, ring);
  for (int trial = 0; trial < 6; ++trial) {
    Poly g = random_form(ring, 2, rng), h = random_form(ring, 4, rng);
    CHECK(normal_form(g * f + h, gb) == normal_form(h, gb));
    Poly nf = normal_form(h, gb);
    CHECK(normal_form(nf, gb) == nf);  // idempotent
  }
}

TEST_CASE("ideal membership") {
  RingPtr ring = Ring::make(3, Field::rationals());
  std::vector<Poly> gens{parse_poly("x", ring), parse_poly("y", ring)};
  CHECK(ideal_member(parse_poly("x^2 + y^2", ring), gens));
  CHECK_FALSE(ideal_member(parse_poly("z", ring), gens));
}

TEST_CASE("membership of constructed combinations") {
  RingPtr ring = Ring::make(3, Field::prime(101));
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 5; ++trial) {
    Poly g1 = random_form(ring, 2, rng) + parse_poly("x^2", ring);
    Poly g2 = random_form(ring, 2, rng) + parse_poly("y*z", ring);
    Poly f = random_form(ring, 1, rng) * g1 + random_form(ring, 1, rng) * g2;
    if (!f.is_zero()) CHECK(ideal_member(f, {g1, g2}));
  }
}

TEST_CASE("truncated membership agrees with full membership") {
  RingPtr ring = Ring::make(3, Field::prime(101));
  std::mt19937_64 rng(47);
  for (int trial = 0; trial < 4; ++trial) {
    std::vector<Poly> gens{random_form(ring, 2, rng) + parse_poly("x^2", ring),
                           random_form(ring, 3, rng) + parse_poly("y^3", ring)};
    GroebnerBasis full = buchberger(gens, ring);
    GroebnerBasis trunc = buchberger(gens, ring, 4);
    for (int inner = 0; inner < 5; ++inner) {
      Poly f = random_form(ring, 4, rng);
      CHECK(normal_form(f, full).is_zero() == normal_form(f, trunc).is_zero());
    }
  }
}

TEST_CASE("all s-polynomials reduce to zero") {
  RingPtr ring = Ring::make(3, Field::rationals());
  std::vector<Poly> gens{parse_poly("y^2 - x*z", ring),
                         parse_poly("x^2*y - z^3", ring)};
  GroebnerBasis gb = buchberger(gens, ring);
  for (std::size_t i = 0; i < gb.generators.size(); ++i)
    for (std::size_t j = i + 1; j < gb.generators.size(); ++j)
      CHECK(normal_form(spoly(gb.generators[i], gb.generators[j]), gb).is_zero());
}

TEST_CASE("elimination of an auxiliary variable") {
  // the ring (t, x, y, z) with t eliminated first
  RingPtr ext = Ring::make(4, Field::rationals(), MonomialOrder::block(1));
  std::vector<Poly> gens{parse_poly("t*x - 1", ext), parse_poly("t*y - 1", ext)};
  std::vector<Poly> out = eliminate(gens, 1);
  REQUIRE(out.size() == 1);
  RingPtr ring = out.front().ring();
  CHECK(out.front().monic() == parse_poly("x - y", ring).monic());

  CHECK(eliminate({parse_poly("t", ext)}, 1).empty());
}

}  // TEST_SUITE
