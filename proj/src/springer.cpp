#include "dix/springer.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dix {

std::string MacdonaldParameter::to_string() const {
  if (!is_pair) return dix::to_string(beta);
  return "(" + dix::to_string(alpha) + "," + dix::to_string(beta) + ")";
}

bool Symbol::rows_strictly_increasing() const {
  auto inc = [](const std::vector<int>& v) {
    for (std::size_t i = 1; i < v.size(); ++i)
      if (v[i] <= v[i - 1]) return false;
    return true;
  };
  return inc(top) && inc(bottom) && top.size() == bottom.size() + 1;
}

std::string Symbol::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < top.size(); ++i) os << (i ? " " : "") << top[i];
  os << " / ";
  for (std::size_t i = 0; i < bottom.size(); ++i) os << (i ? " " : "") << bottom[i];
  os << ")";
  return os.str();
}

MacdonaldParameter macdonald_parameter(const CatalogPair& cp) {
  MacdonaldParameter mp;
  if (cp.family == Family::Su) {
    int p = std::min(cp.p, cp.q), q = std::max(cp.p, cp.q);
    mp.is_pair = false;
    mp.beta = Partition(p, 2);
    mp.beta.resize(q, 1);
    return mp;
  }
  if (cp.family == Family::SpPQ) {
    int p = std::min(cp.p, cp.q), q = std::max(cp.p, cp.q);
    mp.is_pair = true;
    mp.beta = Partition(p, 2);
    mp.beta.resize(q, 1);
    return mp;
  }
  throw std::domain_error("macdonald_parameter: not covered by table data for " + cp.id);
}

Symbol symbol_c(const MacdonaldParameter& param, int n) {
  if (!param.is_pair)
    throw std::invalid_argument("symbol_c needs a (alpha,beta) pair parameter");
  long total = std::accumulate(param.alpha.begin(), param.alpha.end(), 0L) +
               std::accumulate(param.beta.begin(), param.beta.end(), 0L);
  if (total != n) throw std::invalid_argument("symbol_c: |alpha|+|beta| != n");
  for (const Partition* p : {&param.alpha, &param.beta})
    for (std::size_t i = 1; i < p->size(); ++i)
      if ((*p)[i] > (*p)[i - 1])
        throw std::invalid_argument("symbol_c: malformed partition");

  int m = std::max(static_cast<int>(param.beta.size()),
                   static_cast<int>(param.alpha.size()) - 1);
  std::vector<int> a(param.alpha.rbegin(), param.alpha.rend());
  std::vector<int> b(param.beta.rbegin(), param.beta.rend());
  a.insert(a.begin(), m + 1 - a.size(), 0);
  b.insert(b.begin(), m - b.size(), 0);

  Symbol s;
  for (int i = 0; i < m + 1; ++i) s.top.push_back(a[i] + 2 * i);
  for (int i = 0; i < m; ++i) s.bottom.push_back(b[i] + 2 * i + 1);
  return s;
}

GateResult springer_gate(const CatalogPair& cp, const RealPair& pair) {
  GateResult g;
  g.dim_expected = 2L * static_cast<long>(pair.noncompact_pos.size());
  if (!cp.springer) {
    g.is_springer = false;
    g.reason = cp.gate_reason;
    return g;
  }
  ComplexOrbit o = complex_orbit(cp);
  g.dim_orbit = o.dim;
  if (o.dim != g.dim_expected)
    throw std::runtime_error("springer_gate: catalog corruption for " + cp.id +
                             ": orbit dim " + std::to_string(o.dim) +
                             " != 2#Dn+ = " + std::to_string(g.dim_expected));
  g.is_springer = true;
  g.orbit = std::move(o);
  return g;
}

}  // namespace dix
