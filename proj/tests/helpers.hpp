#ifndef SYMPOW_TESTS_HELPERS_HPP
#define SYMPOW_TESTS_HELPERS_HPP

#include <random>

#include "sympow/poly.hpp"

namespace sympow::testing {

// Random homogeneous polynomial of the given degree (possibly zero).
inline Poly random_form(const RingPtr& ring, int degree, std::mt19937_64& rng) {
  std::vector<Term> terms;
  for (const Monomial& m : monomials_of_degree(*ring, degree)) {
    Scalar c = ring->field.random(rng);
    if (!c.is_zero()) terms.push_back(Term{m, c});
  }
  return Poly(ring, std::move(terms));
}

inline Poly random_nonzero_form(const RingPtr& ring, int degree,
                                std::mt19937_64& rng) {
  for (;;) {
    Poly f = random_form(ring, degree, rng);
    if (!f.is_zero()) return f;
  }
}

}  // namespace sympow::testing

#endif
