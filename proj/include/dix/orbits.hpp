// Real forms of the catalog nilpotent orbits: the characteristic h, the
// grading it induces, and the derived root sets feeding the solver.

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dix/catalog.hpp"
#include "dix/partitions.hpp"
#include "dix/real_pair.hpp"
#include "dix/tableaux.hpp"

namespace dix {

struct ComplexOrbit {
  LieType type;
  std::string descriptor;   // partition text or Bala-Carter label
  Partition partition;      // empty for exceptional orbits
  long dim = 0;             // complex dimension
  bool very_even = false;
};

struct RealFormOrbit {
  int form_id = 0;
  Weight h;
  std::vector<int> level;        // alpha(h) per positive root of the pair
  std::vector<Weight> p1;        // noncompact roots at level +1 (as vectors)
  std::vector<Weight> dn_l;      // Delta_n^+(l): level-0 noncompact positives
  std::vector<Weight> dc_l;      // Delta_c^+(l): level-0 compact positives
  Weight rho_n_l, rho_c_l;
  long N = 0;     // positive roots positive on h
  long cneg = 0;  // compact positive roots negative on h
  long u_size = 0;
  std::string source;  // "tableau k=..." or "diagram"

  long fold_count() const { return static_cast<long>(p1.size() + dn_l.size()); }
};

// Computes the grading data for a characteristic h, verifying integrality and
// both dimension identities. Throws std::runtime_error naming the failed
// check otherwise.
RealFormOrbit grading(const RealPair& pair, const Weight& h, int form_id = 0,
                      std::string source = {});

// Solves alpha_i(h) = label_i over the g-simple nodes. With `ext` present the
// noncompact node's label is derived from (-highest)(h) = ext; otherwise every
// node must be labelled (missing entries default to 0). Errors are reported
// distinctly: inconsistent system, non-integral root values, invariant
// failure.
Weight decode_characteristic(const RealPair& pair, const DiagramLabels& labels);

// All real forms of the catalog orbit of `cp`, in catalog order.
std::vector<RealFormOrbit> enumerate_real_forms(const CatalogPair& cp,
                                                const RealPair& pair);

// The complex orbit attached to a catalog pair (for gate-passing pairs).
ComplexOrbit complex_orbit(const CatalogPair& cp);

}  // namespace dix
