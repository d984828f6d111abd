#include "dix/real_pair.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dix {

RealPair make_real_pair(RootSystem rs, int noncompact_node_1based) {
  RealPair p;
  p.rs = std::move(rs);
  if (noncompact_node_1based < 1 || noncompact_node_1based > p.rs.rank)
    throw std::invalid_argument("noncompact node out of range");
  p.noncompact_node = noncompact_node_1based - 1;

  for (std::size_t i = 0; i < p.rs.positive.size(); ++i) {
    bool compact = p.rs.simple_coords[i][p.noncompact_node] % 2 == 0;
    p.compact_flag.push_back(compact ? 1 : 0);
    (compact ? p.compact_pos : p.noncompact_pos).push_back(p.rs.positive[i]);
  }
  p.rho = scale(Rat(1, 2), sum(p.rs.positive, p.rs.ambient));
  p.rho_c = scale(Rat(1, 2), sum(p.compact_pos, p.rs.ambient));
  p.rho_n = scale(Rat(1, 2), sum(p.noncompact_pos, p.rs.ambient));
  p.k_simples = simple_system(p.compact_pos);
  p.k_type_label = dynkin_label(p.k_simples, p.rs.rank);
  return p;
}

Rat eval_weyl_dim_poly(const std::vector<Weight>& roots,
                       const Weight& rho_sel, const Weight& lam) {
  Rat num = 1, den = 1;
  for (const auto& a : roots) {
    num *= dot(lam, a);
    if (num == 0) return Rat(0);
    den *= dot(rho_sel, a);
  }
  return num / den;
}

Rat weyl_dim_pk(const RealPair& pair, const Weight& lam) {
  return eval_weyl_dim_poly(pair.compact_pos, pair.rho_c, lam);
}

std::vector<Weight> simple_system(const std::vector<Weight>& pos) {
  std::set<Weight, WeightLess> ps(pos.begin(), pos.end());
  std::vector<Weight> out;
  for (const auto& a : pos) {
    bool decomposable = false;
    for (const auto& b : pos) {
      if (b == a) continue;
      if (ps.count(sub(a, b))) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.push_back(a);
  }
  return out;
}

namespace {

// Classify one connected component given its simple roots.
std::string component_label(const std::vector<Weight>& comp) {
  const int n = static_cast<int>(comp.size());
  if (n == 1) return "A1";

  // adjacency with bond multiplicities m_ij = <a_i,a_j-check><a_j,a_i-check>
  std::vector<std::vector<int>> adj(n);
  int max_bond = 1;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Int z1, z2;
      as_integer(pairing(comp[i], comp[j]), z1);
      as_integer(pairing(comp[j], comp[i]), z2);
      Int prod = z1 * z2;
      int m = static_cast<int>(prod.get_si());
      if (m > 0) {
        adj[i].push_back(j);
        adj[j].push_back(i);
        max_bond = std::max(max_bond, m);
      }
    }
  if (max_bond == 3) return "G2";
  if (max_bond == 2) {
    if (n == 2) return "B2";
    int longs = 0;
    Rat maxnorm = 0;
    for (const auto& a : comp) {
      Rat nn = dot(a, a);
      if (nn > maxnorm) maxnorm = nn;
    }
    for (const auto& a : comp)
      if (dot(a, a) == maxnorm) ++longs;
    if (n == 4 && longs == 2) return "F4";
    return (longs == 1 ? "C" : "B") + std::to_string(n);
  }
  // simply laced: A (chain), D (branch, two arms of length 1), E
  int branch = -1;
  for (int i = 0; i < n; ++i)
    if (adj[i].size() >= 3) branch = i;
  if (branch < 0) return "A" + std::to_string(n);
  if (adj[branch].size() != 3) throw std::runtime_error("invalid Dynkin graph");
  std::vector<int> arms;
  for (int s : adj[branch]) {
    int len = 1, prev = branch, cur = s;
    for (;;) {
      int nxt = -1;
      for (int t : adj[cur])
        if (t != prev) nxt = t;
      if (nxt < 0) break;
      prev = cur;
      cur = nxt;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return "D" + std::to_string(n);
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4 && n >= 6 && n <= 8)
    return "E" + std::to_string(n);
  throw std::runtime_error("unrecognized Dynkin component");
}

}  // namespace

std::string dynkin_label(const std::vector<Weight>& simples, int full_rank) {
  // split into connected components
  const int n = static_cast<int>(simples.size());
  std::vector<int> comp_id(n, -1);
  int ncomp = 0;
  for (int i = 0; i < n; ++i) {
    if (comp_id[i] >= 0) continue;
    std::vector<int> stack{i};
    comp_id[i] = ncomp;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int j = 0; j < n; ++j)
        if (comp_id[j] < 0 && dot(simples[v], simples[j]) != 0) {
          comp_id[j] = ncomp;
          stack.push_back(j);
        }
    }
    ++ncomp;
  }
  std::vector<std::string> labels;
  for (int c = 0; c < ncomp; ++c) {
    std::vector<Weight> comp;
    for (int i = 0; i < n; ++i)
      if (comp_id[i] == c) comp.push_back(simples[i]);
    labels.push_back(component_label(comp));
  }
  std::sort(labels.begin(), labels.end(), [](const std::string& a, const std::string& b) {
    long ra = std::stol(a.substr(1)), rb = std::stol(b.substr(1));
    if (ra != rb) return ra > rb;
    return a < b;
  });
  std::string out;
  for (const auto& l : labels) out += (out.empty() ? "" : "+") + l;
  for (int i = n; i < full_rank; ++i) out += out.empty() ? "C" : "+C";
  return out;
}

}  // namespace dix
