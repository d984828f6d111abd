// The Springer gate: Macdonald parameters and type-C symbols for the two
// families the tables parametrize explicitly, and the table-driven gate
// verdict guarded by the dimension identity dim(O^C) = 2 #Delta_n^+.

#pragma once

#include <optional>
#include <string>

#include "dix/orbits.hpp"

namespace dix {

struct MacdonaldParameter {
  bool is_pair = false;        // false: single partition (type A)
  Partition alpha;             // first partition of the (alpha, beta) pair
  Partition beta;              // the single partition lives here for type A
  std::string to_string() const;
};

struct Symbol {
  std::vector<int> top, bottom;  // strictly increasing, #top = #bottom + 1
  bool rows_strictly_increasing() const;
  std::string to_string() const;
};

// SU(p,q) -> [2^p, 1^{q-p}]; Sp(p,q) -> (0, [2^p, 1^{q-p}]). Throws
// std::domain_error for pairs the tables do not parametrize this way.
MacdonaldParameter macdonald_parameter(const CatalogPair& cp);

// Type-B/C symbol of a pair of partitions with |alpha|+|beta| = n: alpha
// sorted increasingly padded to m+1 parts, beta to m parts (m minimal),
// top_i = alpha_i + 2(i-1), bottom_i = beta_i + 2(i-1) + 1.
Symbol symbol_c(const MacdonaldParameter& param, int n);

struct GateResult {
  bool is_springer = false;
  std::optional<ComplexOrbit> orbit;
  std::string reason;        // set when is_springer is false
  long dim_expected = 0;     // 2 * #Delta_n^+
  long dim_orbit = 0;        // orbit dimension (when present)
};

// Table verdict plus the dimension gate; a table-included pair failing the
// dimension check throws (catalog corruption).
GateResult springer_gate(const CatalogPair& cp, const RealPair& pair);

}  // namespace dix
