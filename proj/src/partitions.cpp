#include "dix/partitions.hpp"

#include <map>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dix {

PartitionCheck validate_partition(LieType type, const Partition& p) {
  PartitionCheck res;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (p[i] < 1) {
      res.reason = "parts must be positive";
      return res;
    }
    if (i && p[i] > p[i - 1]) {
      res.reason = "parts must be weakly decreasing";
      return res;
    }
  }
  long total = std::accumulate(p.begin(), p.end(), 0L);
  std::map<int, int> mult;
  for (int d : p) ++mult[d];

  switch (type) {
    case LieType::A:
      res.ok = true;
      return res;
    case LieType::B: {
      if (total % 2 == 0) {
        res.reason = "so(2n+1) partitions have odd size";
        return res;
      }
      for (auto [d, m] : mult)
        if (d % 2 == 0 && m % 2 != 0) {
          res.reason = "even parts must have even multiplicity";
          return res;
        }
      res.ok = true;
      return res;
    }
    case LieType::C: {
      if (total % 2 != 0) {
        res.reason = "sp(2n) partitions have even size";
        return res;
      }
      for (auto [d, m] : mult)
        if (d % 2 != 0 && m % 2 != 0) {
          res.reason = "odd parts must have even multiplicity";
          return res;
        }
      res.ok = true;
      return res;
    }
    case LieType::D: {
      if (total % 2 != 0) {
        res.reason = "so(2n) partitions have even size";
        return res;
      }
      for (auto [d, m] : mult)
        if (d % 2 == 0 && m % 2 != 0) {
          res.reason = "even parts must have even multiplicity";
          return res;
        }
      res.ok = true;
      res.very_even = true;
      for (int d : p)
        if (d % 2 != 0) res.very_even = false;
      return res;
    }
    default:
      throw std::invalid_argument("partitions classify classical orbits only");
  }
}

Partition transpose(const Partition& p) {
  Partition t;
  if (p.empty()) return t;
  for (int i = 1; i <= p[0]; ++i) {
    int c = 0;
    for (int d : p)
      if (d >= i) ++c;
    t.push_back(c);
  }
  return t;
}

long orbit_dimension(LieType type, const Partition& p) {
  auto check = validate_partition(type, p);
  if (!check.ok) throw std::invalid_argument("invalid partition: " + check.reason);
  long m = std::accumulate(p.begin(), p.end(), 0L);
  Partition t = transpose(p);
  long sq = 0;
  for (int s : t) sq += long(s) * s;
  long odd = 0;
  for (int d : p)
    if (d % 2 != 0) ++odd;
  switch (type) {
    case LieType::A: return m * m - sq;
    case LieType::B:
    case LieType::D: return (m * m - m) / 2 - (sq - odd) / 2;
    case LieType::C: return (m * m + m) / 2 - (sq + odd) / 2;
    default: throw std::invalid_argument("orbit_dimension: classical types only");
  }
}

std::string to_string(const Partition& p) {
  std::ostringstream os;
  os << "[";
  for (std::size_t i = 0; i < p.size(); ++i) os << (i ? "," : "") << p[i];
  os << "]";
  return os.str();
}

Partition parse_partition(const std::string& s) {
  Partition p;
  std::string body = s;
  if (!body.empty() && body.front() == '[') body = body.substr(1, body.size() - 2);
  std::istringstream is(body);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (!tok.empty()) p.push_back(std::stoi(tok));
  }
  return p;
}

}  // namespace dix
