// The DP state for evaluating the signed product of shift operators: an
// integer-coefficient map from lattice shift vectors to multiplicities, kept
// as a vector sorted by key. Folding a root beta replaces L by L minus a copy
// of L shifted by -beta; a constant shift preserves lexicographic key order,
// so each fold is a single linear merge with cancellation.
//
// Keys are shift vectors doubled (twice a root-lattice vector is integral in
// every realization used here), packed into int16 coordinates.

#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <vector>

#include "dix/numeric.hpp"
#include "dix/weight.hpp"

namespace dix {

class ShiftLedger {
 public:
  static constexpr int kMaxDim = 8;
  using Key = std::array<int16_t, kMaxDim>;

  struct Entry {
    Key key;
    long long coeff;
    bool operator==(const Entry&) const = default;
  };

  explicit ShiftLedger(int dim);

  // Packs a weight into a key at the doubled scale; throws if not integral
  // after doubling or out of int16 range.
  Key pack(const Weight& w) const;
  Weight unpack(const Key& k) const;

  // L <- L - shift(L, -beta).
  void fold(const Weight& beta);

  std::size_t size() const { return entries_.size(); }
  int dim() const { return dim_; }
  int folds_applied() const { return folds_; }
  const std::vector<Entry>& entries() const { return entries_; }

  // Telescoping invariants of the product of (1 - shift) factors.
  long long coeff_sum() const;
  Int abs_coeff_sum() const;

  // Binary checkpoint of the full state.
  void save(std::ostream& os) const;
  static ShiftLedger load(std::istream& is);

 private:
  int dim_;
  int folds_ = 0;
  std::vector<Entry> entries_;
};

}  // namespace dix
