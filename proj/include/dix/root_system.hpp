// Exact root data for the simple types A..G, Bourbaki numbering throughout.
//
// Classical types use the epsilon basis (A_{n-1} lives in R^n, B_n/C_n/D_n in
// R^n); E6/E7 are realized inside the R^8 realization of E8, F4 in R^4 and G2
// in R^3, so the invariant form is the plain dot product everywhere.

#pragma once

#include <map>
#include <string>
#include <vector>

#include "dix/weight.hpp"

namespace dix {

enum class LieType : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

LieType lie_type_from_string(const std::string& s);
std::string to_string(LieType t);

struct RootSystem {
  LieType type;
  int rank = 0;
  int ambient = 0;                           // dimension of the coordinate space
  std::vector<Weight> simple;                // Bourbaki order
  std::vector<Weight> positive;              // sorted by (height, coords)
  std::vector<std::vector<int>> simple_coords;  // positive[i] in the simple basis
  std::vector<std::vector<int>> cartan;      // <a_i, a_j-check>
  Weight highest;                            // highest root
  Weight height_vector;                      // <simple_i, height_vector> = 1 for all i

  int height(std::size_t pos_index) const;
  // Index of a positive root given by coordinates, or -1.
  int index_of(const Weight& w) const;
  Rat height_of(const Weight& w) const { return dot(w, height_vector); }

  std::map<Weight, int, WeightLess> pos_index_;
};

// Throws std::invalid_argument for an invalid (type, rank) combination.
RootSystem build_root_system(LieType type, int rank);

}  // namespace dix
