#pragma once

#include <random>
#include <string>

#include "dix/catalog.hpp"
#include "dix/orbits.hpp"

namespace dixtest {

inline dix::RealPair pair_for(const std::string& id) {
  auto cat = dix::Catalog::load_default();
  return dix::build_pair(cat.resolve(id));
}

inline dix::CatalogPair entry_for(const std::string& id) {
  return dix::Catalog::load_default().resolve(id);
}

// Deterministic random rational weight with small numerators.
inline dix::Weight random_weight(std::mt19937& rng, int dim) {
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 4);
  dix::Weight w;
  for (int i = 0; i < dim; ++i) {
    dix::Rat q(num(rng), den(rng));
    q.canonicalize();
    w.push_back(q);
  }
  return w;
}

// Reflection of lam in the hyperplane of root a.
inline dix::Weight reflect(const dix::Weight& lam, const dix::Weight& a) {
  return dix::sub(lam, dix::scale(dix::Rat(2) * dix::dot(lam, a) / dix::dot(a, a), a));
}

}  // namespace dixtest
