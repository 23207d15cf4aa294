#ifndef SYMPOW_GROEBNER_HPP
#define SYMPOW_GROEBNER_HPP

#include <optional>
#include <vector>

#include "sympow/poly.hpp"

namespace sympow {

struct GroebnerBasis {
  RingPtr ring;
  std::vector<Poly> generators;  // monic, inter-reduced
  bool reduced = false;
  // When set, the basis is only valid for membership of elements of degree
  // <= truncation_degree (homogeneous input required for soundness).
  std::optional<int> truncation_degree;
};

// Buchberger with normal pair-selection strategy (minimal lcm degree first,
// ties by generator index) and the coprime-lcm and chain criteria.
GroebnerBasis buchberger(const std::vector<Poly>& gens, RingPtr ring,
                         std::optional<int> truncation = std::nullopt);

// Remainder of full multivariate division by G.  Throws when G is truncated
// below deg f.
Poly normal_form(const Poly& f, const GroebnerBasis& G);

// True iff f lies in <gens>.  Homogeneous inputs; uses a degree-truncated
// grevlex basis at deg f.
bool ideal_member(const Poly& f, const std::vector<Poly>& gens);

// Generators of <gens> intersected with the subring omitting the first k
// variables, computed through a block-elimination basis.  Results live in a
// ring with k fewer variables.
std::vector<Poly> eliminate(const std::vector<Poly>& gens, int k);

// Lifts f into a ring with `extra` new leading variables (exponents shift
// right), under the given order.
Poly lift_poly(const Poly& f, const RingPtr& ext);

}  // namespace sympow

#endif
