// Truncated formal K-character calculus: discrete-series K-spectra, the
// spin-difference character, Dirac indices at character level, and the
// Blattner inversion, all with explicit validity-height bookkeeping.
//
// A VirtualCharacter is exact on every weight nu with
// ht(anchor - nu) <= valid_height, where ht is the linear functional taking
// the value 1 on each simple root. Operations combine validity
// conservatively (min of the inputs minus the shift spread) — multiplicities
// beyond the tracked validity are never reported.

#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "dix/real_pair.hpp"

namespace dix {

struct VirtualCharacter {
  std::map<Weight, long long, WeightLess> mults;
  Weight anchor;      // validity is measured downward from here
  Rat valid_height;   // exact for ht(anchor - nu) <= valid_height

  bool within_validity(const RealPair& pair, const Weight& nu) const;
  long long mult(const RealPair& pair, const Weight& nu) const;  // throws beyond validity
};

// Exact Freudenthal character of the K-irreducible with highest weight hw
// (dominant integral for Delta_c^+), down to height `cutoff` below hw.
VirtualCharacter irr_char(const RealPair& pair, const Weight& hw, int cutoff);

// S^+ - S^- as a finite signed character: sum over I subset Delta_n^+ of
// (-1)^{#I} e^{2rho(I) - rho_n}. The root list may be overridden (used by the
// sign-flip property test).
VirtualCharacter spin_difference(const RealPair& pair);
VirtualCharacter spin_difference(const RealPair& pair,
                                 const std::vector<Weight>& noncompact_pos);

// Borel-Weil-Bott Euler characteristic of the weight nu: nullopt when
// nu + rho_c is singular, otherwise (sign, highest weight).
std::optional<std::pair<int, Weight>> bwb_euler(const RealPair& pair, const Weight& nu);

// K-spectrum of the virtual discrete-series module X_b(lam), summing Kostant
// degrees d <= cutoff.
VirtualCharacter ds_spectrum(const RealPair& pair, const Weight& lam, int cutoff);

// X tensor (S^+ - S^-), validity adjusted by the spin spread.
VirtualCharacter dirac_index_char(const VirtualCharacter& x, const RealPair& pair);

// char S(n cap p) tensor (S^+ - S^-) == e^{-rho_n} within validity.
bool koszul_check(const RealPair& pair, int cutoff);

// sum over A of (-1)^{#A} X_b(gamma + rho_c - rho_n + 2rho(A))|_K == E_gamma
// within validity.
bool blattner_inversion_check(const RealPair& pair, const Weight& gamma, int cutoff);

// Characters of S^d(n cap p) summed over d <= cutoff (vector-partition
// multiplicities over the multiset Delta_n^+). Exposed for tests.
VirtualCharacter sym_np_char(const RealPair& pair, int cutoff);

// Compare two characters on the intersection of their validity regions
// anchored at `anchor`.
bool chars_agree(const RealPair& pair, const VirtualCharacter& a,
                 const VirtualCharacter& b);

}  // namespace dix
