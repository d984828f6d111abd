// Equal-rank pair (G,K) given by a Vogan datum: one noncompact simple node.
// A root sum(m_i a_i) is noncompact iff m_{nc} is odd.

#pragma once

#include <string>
#include <vector>

#include "dix/root_system.hpp"

namespace dix {

struct RealPair {
  RootSystem rs;
  int noncompact_node = 0;  // 0-based simple index
  std::vector<Weight> compact_pos;
  std::vector<Weight> noncompact_pos;
  std::vector<char> compact_flag;  // per positive-root index
  Weight rho, rho_c, rho_n;
  std::vector<Weight> k_simples;  // simple system of Delta_c^+
  std::string k_type_label;       // e.g. "A5+A1", "D5+C"
};

RealPair make_real_pair(RootSystem rs, int noncompact_node_1based);

// Product over the selected roots of <lam,a>/<rho_sel,a>, exactly.
// rho_sel is half the sum of the selected roots.
Rat eval_weyl_dim_poly(const std::vector<Weight>& roots,
                       const Weight& rho_sel, const Weight& lam);

// P_K(lam) over Delta_c^+.
Rat weyl_dim_pk(const RealPair& pair, const Weight& lam);

// Simple system (indecomposable elements) of an arbitrary positive system.
std::vector<Weight> simple_system(const std::vector<Weight>& pos);

// Dynkin-type label of a set of simple roots, components sorted by rank
// descending; rank deficit vs. `full_rank` appends one "+C" per missing
// dimension (central torus).
std::string dynkin_label(const std::vector<Weight>& simples, int full_rank);

}  // namespace dix
