#include "dix/charlab.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <stdexcept>

namespace dix {

namespace {

Rat ht(const RealPair& pair, const Weight& w) { return pair.rs.height_of(w); }

int ceil_to_int(const Rat& q) {
  Int z;
  mpz_cdiv_q(z.get_mpz_t(), q.get_num().get_mpz_t(), q.get_den().get_mpz_t());
  return static_cast<int>(z.get_si());
}

VirtualCharacter tensor(const VirtualCharacter& a, const VirtualCharacter& b,
                        Weight anchor, Rat valid) {
  VirtualCharacter out;
  out.anchor = std::move(anchor);
  out.valid_height = std::move(valid);
  for (const auto& [w1, m1] : a.mults)
    for (const auto& [w2, m2] : b.mults) {
      Weight w = add(w1, w2);
      auto [it, inserted] = out.mults.try_emplace(w, m1 * m2);
      if (!inserted) it->second += m1 * m2;
    }
  std::erase_if(out.mults, [](const auto& kv) { return kv.second == 0; });
  return out;
}

}  // namespace

bool VirtualCharacter::within_validity(const RealPair& pair, const Weight& nu) const {
  Rat d = ht(pair, sub(anchor, nu));
  if (d < 0) d = -d;
  return d <= valid_height;
}

long long VirtualCharacter::mult(const RealPair& pair, const Weight& nu) const {
  if (!within_validity(pair, nu))
    throw std::out_of_range("multiplicity requested beyond tracked validity");
  auto it = mults.find(nu);
  return it == mults.end() ? 0 : it->second;
}

VirtualCharacter irr_char(const RealPair& pair, const Weight& hw, int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("irr_char: cutoff >= 0");
  for (const auto& a : pair.k_simples)
    if (pairing(hw, a) < 0)
      throw std::invalid_argument("irr_char: highest weight not Delta_c^+-dominant");

  VirtualCharacter out;
  out.anchor = hw;
  out.valid_height = cutoff;
  out.mults[hw] = 1;

  const Weight& rc = pair.rho_c;
  const Rat top_norm = dot(add(hw, rc), add(hw, rc));

  // Strata: exact number of simple-root subtractions from hw. Every weight of
  // E_hw at stratum s has all higher weights in strata < s.
  std::set<Weight, WeightLess> level{hw};
  std::set<Weight, WeightLess> seen{hw};
  for (int step = 0; step < cutoff && !level.empty(); ++step) {
    std::set<Weight, WeightLess> next;
    for (const auto& w : level)
      for (const auto& a : pair.k_simples) {
        Weight mu = sub(w, a);
        if (seen.insert(mu).second) next.insert(mu);
      }
    for (const auto& mu : next) {
      Rat den = top_norm - dot(add(mu, rc), add(mu, rc));
      if (den == 0) continue;  // cannot be a weight of E_hw
      Rat s = 0;
      for (const auto& a : pair.compact_pos) {
        for (int j = 1;; ++j) {
          Weight w = add(mu, scale(Rat(j), a));
          if (ht(pair, sub(hw, w)) < 0) break;
          auto it = out.mults.find(w);
          if (it != out.mults.end())
            s += Rat(2) * dot(w, a) * Rat(static_cast<long>(it->second));
        }
      }
      Rat m = s / den;
      Int z;
      if (!as_integer(m, z))
        throw std::runtime_error("Freudenthal produced a non-integer multiplicity");
      if (z != 0) out.mults[mu] = static_cast<long long>(z.get_si());
    }
    level = std::move(next);
  }
  return out;
}

VirtualCharacter spin_difference(const RealPair& pair) {
  return spin_difference(pair, pair.noncompact_pos);
}

VirtualCharacter spin_difference(const RealPair& pair,
                                 const std::vector<Weight>& ncp) {
  if (ncp.size() > 22)
    throw std::domain_error("spin_difference: 2^#Dn+ expansion too large");
  Weight rho_n = scale(Rat(1, 2), sum(ncp, pair.rs.ambient));
  VirtualCharacter out;
  out.anchor = rho_n;
  out.valid_height = Rat(1000000);  // finite character, exact everywhere
  std::vector<Weight> acc{zero_weight(pair.rs.ambient)};
  std::vector<int> sign{1};
  for (const auto& b : ncp) {
    std::size_t n = acc.size();
    for (std::size_t i = 0; i < n; ++i) {
      acc.push_back(add(acc[i], b));
      sign.push_back(-sign[i]);
    }
  }
  for (std::size_t i = 0; i < acc.size(); ++i) {
    Weight w = sub(acc[i], rho_n);
    auto [it, inserted] = out.mults.try_emplace(w, sign[i]);
    if (!inserted) it->second += sign[i];
  }
  std::erase_if(out.mults, [](const auto& kv) { return kv.second == 0; });
  return out;
}

std::optional<std::pair<int, Weight>> bwb_euler(const RealPair& pair, const Weight& nu) {
  Weight x = add(nu, pair.rho_c);
  int sign = 1;
  for (int guard = 0; guard < 100000; ++guard) {
    const Weight* negroot = nullptr;
    for (const auto& a : pair.k_simples) {
      Rat p = dot(x, a);
      if (p == 0) return std::nullopt;
      if (p < 0) {
        negroot = &a;
        break;
      }
    }
    if (!negroot) return std::make_pair(sign, sub(x, pair.rho_c));
    x = sub(x, scale(Rat(2) * dot(x, *negroot) / dot(*negroot, *negroot), *negroot));
    sign = -sign;
  }
  throw std::runtime_error("bwb_euler: reflection loop did not terminate");
}

VirtualCharacter sym_np_char(const RealPair& pair, int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("sym_np_char: cutoff >= 0");
  VirtualCharacter out;
  // Weights ascend from 0; a weight at height <= cutoff receives no
  // contribution from degrees > cutoff since every root has height >= 1.
  out.anchor = zero_weight(pair.rs.ambient);
  out.valid_height = cutoff;
  const auto& ncp = pair.noncompact_pos;
  std::function<void(std::size_t, int, Weight)> rec = [&](std::size_t i, int deg,
                                                          Weight w) {
    if (i == ncp.size()) {
      auto [it, inserted] = out.mults.try_emplace(std::move(w), 1);
      if (!inserted) ++it->second;
      return;
    }
    for (int d = 0; deg + d <= cutoff; ++d) {
      rec(i + 1, deg + d, w);
      w = add(w, ncp[i]);
    }
  };
  rec(0, 0, zero_weight(pair.rs.ambient));
  return out;
}

VirtualCharacter ds_spectrum(const RealPair& pair, const Weight& lam, int cutoff) {
  if (cutoff < 0) throw std::invalid_argument("ds_spectrum: cutoff >= 0");
  const auto& ncp = pair.noncompact_pos;
  std::map<Weight, long long, WeightLess> irreps;
  std::function<void(std::size_t, int, Weight)> rec = [&](std::size_t i, int deg,
                                                          Weight delta) {
    if (i == ncp.size()) {
      Weight nu = sub(add(add(lam, pair.rho), delta), scale(Rat(2), pair.rho_c));
      auto r = bwb_euler(pair, nu);
      if (r) {
        auto [it, inserted] = irreps.try_emplace(r->second, r->first);
        if (!inserted) it->second += r->first;
      }
      return;
    }
    for (int d = 0; deg + d <= cutoff; ++d) {
      rec(i + 1, deg + d, delta);
      delta = add(delta, ncp[i]);
    }
  };
  rec(0, 0, zero_weight(pair.rs.ambient));

  // Anchor at the lowest K-type. Omitted Kostant degrees only produce terms
  // whose Euler weight sits >= cutoff above lam+rho; BWB reflections and the
  // rho-shifts cost at most 2 ht(rho_n) of that margin.
  Weight anchor = sub(add(lam, pair.rho_n), pair.rho_c);
  Rat validity = Rat(cutoff) - Rat(2) * ht(pair, pair.rho_n);
  if (validity < 0) validity = 0;
  VirtualCharacter out;
  out.anchor = anchor;
  out.valid_height = validity;
  for (const auto& [hw, c] : irreps) {
    if (c == 0) continue;
    // expand E_hw deep enough to cover the validity window below the anchor
    Rat depth = validity + ht(pair, sub(hw, anchor));
    if (depth < 0) continue;
    int cut = ceil_to_int(depth) + 1;
    auto ch = irr_char(pair, hw, cut);
    for (const auto& [w, m] : ch.mults) {
      auto [it, inserted] = out.mults.try_emplace(w, c * m);
      if (!inserted) it->second += c * m;
    }
  }
  std::erase_if(out.mults, [](const auto& kv) { return kv.second == 0; });
  return out;
}

VirtualCharacter dirac_index_char(const VirtualCharacter& x, const RealPair& pair) {
  VirtualCharacter spin = spin_difference(pair);
  Rat spread = ht(pair, pair.rho_n);  // spin weights have |ht| <= ht(rho_n)
  Rat validity = x.valid_height - spread;
  if (validity < 0)
    throw std::invalid_argument(
        "dirac_index_char: input validity insufficient; need cutoff >= spin spread " +
        to_string(spread));
  return tensor(x, spin, x.anchor, validity);
}

bool koszul_check(const RealPair& pair, int cutoff) {
  if (cutoff < 1) throw std::invalid_argument("koszul_check: cutoff >= 1");
  auto sym = sym_np_char(pair, cutoff);
  auto spin = spin_difference(pair);
  auto prod = tensor(sym, spin, zero_weight(pair.rs.ambient), 0);
  Rat htrn = ht(pair, pair.rho_n);
  Weight target = neg(pair.rho_n);
  bool seen_target = false;
  for (const auto& [w, m] : prod.mults) {
    if (ht(pair, w) + htrn <= cutoff) {  // coefficient exact in this window
      if (w == target) {
        if (m != 1) return false;
        seen_target = true;
      } else if (m != 0) {
        return false;
      }
    }
  }
  return seen_target;
}

bool chars_agree(const RealPair& pair, const VirtualCharacter& a,
                 const VirtualCharacter& b) {
  auto check = [&](const VirtualCharacter& x, const VirtualCharacter& y) {
    for (const auto& [w, m] : x.mults) {
      if (!x.within_validity(pair, w) || !y.within_validity(pair, w)) continue;
      auto it = y.mults.find(w);
      long long ym = it == y.mults.end() ? 0 : it->second;
      if (ym != m) return false;
    }
    return true;
  };
  return check(a, b) && check(b, a);
}

bool blattner_inversion_check(const RealPair& pair, const Weight& gamma, int cutoff) {
  for (const auto& a : pair.k_simples)
    if (pairing(gamma, a) < 0)
      throw std::invalid_argument("blattner_inversion_check: gamma not dominant");
  const auto& ncp = pair.noncompact_pos;
  if (ncp.size() > 20) throw std::domain_error("blattner inversion: 2^#Dn+ too large");

  VirtualCharacter acc;
  acc.anchor = gamma;
  acc.valid_height = Rat(cutoff) - Rat(4) * ht(pair, pair.rho_n);
  if (acc.valid_height < 0)
    throw std::invalid_argument("blattner inversion: cutoff below the validity floor " +
                                to_string(Rat(4) * ht(pair, pair.rho_n)));

  for (std::size_t mask = 0; mask < (std::size_t(1) << ncp.size()); ++mask) {
    Weight two_rho_a = zero_weight(pair.rs.ambient);
    int bits = 0;
    for (std::size_t b = 0; b < ncp.size(); ++b)
      if (mask >> b & 1) {
        two_rho_a = add(two_rho_a, ncp[b]);
        ++bits;
      }
    Weight arg = add(sub(add(gamma, pair.rho_c), pair.rho_n), two_rho_a);
    auto ds = ds_spectrum(pair, arg, cutoff);
    for (const auto& [w, m] : ds.mults) {
      long long signed_m = bits % 2 ? -m : m;
      auto [it, inserted] = acc.mults.try_emplace(w, signed_m);
      if (!inserted) it->second += signed_m;
    }
  }
  std::erase_if(acc.mults, [](const auto& kv) { return kv.second == 0; });

  auto want = irr_char(pair, gamma, ceil_to_int(acc.valid_height) + 1);
  want.valid_height = acc.valid_height;
  return chars_agree(pair, acc, want);
}

}  // namespace dix
