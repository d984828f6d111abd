// Weights are exact rational vectors in the ambient coordinate space of a
// root system (epsilon basis for classical types, the standard orthogonal
// realizations for exceptional ones). The invariant form is the standard dot
// product in these coordinates.

#pragma once

#include <cstddef>
#include <vector>

#include "dix/numeric.hpp"

namespace dix {

using Weight = std::vector<Rat>;

Rat dot(const Weight& a, const Weight& b);
Weight add(const Weight& a, const Weight& b);
Weight sub(const Weight& a, const Weight& b);
Weight neg(const Weight& a);
Weight scale(const Rat& s, const Weight& a);
Weight zero_weight(std::size_t dim);
bool is_zero(const Weight& a);
Weight sum(const std::vector<Weight>& ws, std::size_t dim);

// <a, b-check> = 2<a,b>/<b,b>
Rat pairing(const Weight& a, const Weight& coroot_of);

// Lexicographic order, usable as a map comparator.
struct WeightLess {
  bool operator()(const Weight& a, const Weight& b) const;
};

std::string to_string(const Weight& w);

// Solves sum_j c_j <basis_i, basis_j> = rhs_i exactly (Gram must be
// nonsingular); returns the coefficients c.
std::vector<Rat> solve_gram(const std::vector<Weight>& basis,
                            const std::vector<Rat>& rhs);

}  // namespace dix
