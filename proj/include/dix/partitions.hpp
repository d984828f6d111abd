// Nilpotent-orbit partitions for the classical types and their dimensions.

#pragma once

#include <string>
#include <vector>

#include "dix/root_system.hpp"

namespace dix {

using Partition = std::vector<int>;

struct PartitionCheck {
  bool ok = false;
  bool very_even = false;  // D only: all parts even (two orbits I/II)
  std::string reason;
};

// Classification rules per type:
//   A: any partition of n (sl(n), n = sum)
//   B: partition of 2n+1, even parts with even multiplicity
//   C: partition of 2n, odd parts with even multiplicity
//   D: partition of 2n, even parts with even multiplicity
// Throws for exceptional types.
PartitionCheck validate_partition(LieType type, const Partition& p);

// Complex dimension of the corresponding nilpotent orbit.
long orbit_dimension(LieType type, const Partition& p);

Partition transpose(const Partition& p);
std::string to_string(const Partition& p);
Partition parse_partition(const std::string& s);  // "[3,2,2]" or "3,2,2"

}  // namespace dix
