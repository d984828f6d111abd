// Signed Young tableaux and the per-family enumeration of real forms of the
// catalog orbits. Signs alternate along rows; the characteristic h assigns to
// a row of length d the string (d-1, d-3, ..., -(d-1)) left to right, with
// values landing in the coordinate block named by the sign of their box.

#pragma once

#include <string>
#include <utility>
#include <vector>

#include "dix/weight.hpp"

namespace dix {

struct SignedTableau {
  // (row length, leading sign), lengths weakly decreasing
  std::vector<std::pair<int, char>> rows;

  int sign_count(char s) const;  // boxes carrying s, signs alternating per row
  bool shape_valid() const;
  std::string to_string() const;
};

struct ClassicalForm {
  SignedTableau tableau;
  Weight h;           // dominant for Delta_c^+ of the corresponding pair
  std::string note;   // e.g. "k=2" or "split I/II"
};

// SU(p,q): orbit [2^min(p,q), 1^|p-q|], forms k = 0..min(p,q).
std::vector<ClassicalForm> real_forms_su(int p, int q);
// Sp(2n,R): orbit [2^n], forms k = 0..n.
std::vector<ClassicalForm> real_forms_sp2nr(int n);
// SO_e(2p,q2) with q2 odd (B) or even (D): orbit [3, 2^{2p-2}, 1^rest].
std::vector<ClassicalForm> real_forms_so(int twop, int q2);
// SO*(2n): orbit [2^n] (n even) or [2^{n-1},1^2] (n odd).
std::vector<ClassicalForm> real_forms_sostar(int n);

}  // namespace dix
