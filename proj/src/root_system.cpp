#include "dix/root_system.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace dix {

LieType lie_type_from_string(const std::string& s) {
  if (s.size() == 1) {
    switch (s[0]) {
      case 'A': case 'a': return LieType::A;
      case 'B': case 'b': return LieType::B;
      case 'C': case 'c': return LieType::C;
      case 'D': case 'd': return LieType::D;
      case 'E': case 'e': return LieType::E;
      case 'F': case 'f': return LieType::F;
      case 'G': case 'g': return LieType::G;
    }
  }
  throw std::invalid_argument("unknown Lie type '" + s + "'");
}

std::string to_string(LieType t) { return std::string(1, static_cast<char>(t)); }

namespace {

std::vector<Weight> make_simple_roots(LieType t, int n, int& ambient) {
  auto e = [](int dim, int i) {
    Weight w(dim, Rat(0));
    w[i] = 1;
    return w;
  };
  std::vector<Weight> s;
  switch (t) {
    case LieType::A: {
      if (n < 1) throw std::invalid_argument("A_n needs n >= 1");
      ambient = n + 1;
      for (int i = 0; i < n; ++i) s.push_back(sub(e(ambient, i), e(ambient, i + 1)));
      return s;
    }
    case LieType::B: {
      if (n < 1) throw std::invalid_argument("B_n needs n >= 1");
      ambient = n;
      for (int i = 0; i + 1 < n; ++i) s.push_back(sub(e(n, i), e(n, i + 1)));
      s.push_back(e(n, n - 1));
      return s;
    }
    case LieType::C: {
      if (n < 1) throw std::invalid_argument("C_n needs n >= 1");
      ambient = n;
      for (int i = 0; i + 1 < n; ++i) s.push_back(sub(e(n, i), e(n, i + 1)));
      s.push_back(scale(2, e(n, n - 1)));
      return s;
    }
    case LieType::D: {
      if (n < 2) throw std::invalid_argument("D_n needs n >= 2");
      ambient = n;
      for (int i = 0; i + 1 < n; ++i) s.push_back(sub(e(n, i), e(n, i + 1)));
      s.push_back(add(e(n, n - 2), e(n, n - 1)));
      return s;
    }
    case LieType::G: {
      if (n != 2) throw std::invalid_argument("G_n only exists for n = 2");
      ambient = 3;
      s.push_back({Rat(1), Rat(-1), Rat(0)});
      s.push_back({Rat(-2), Rat(1), Rat(1)});
      return s;
    }
    case LieType::F: {
      if (n != 4) throw std::invalid_argument("F_n only exists for n = 4");
      ambient = 4;
      Rat h(1, 2);
      s.push_back({Rat(0), Rat(1), Rat(-1), Rat(0)});
      s.push_back({Rat(0), Rat(0), Rat(1), Rat(-1)});
      s.push_back({Rat(0), Rat(0), Rat(0), Rat(1)});
      s.push_back({h, -h, -h, -h});
      return s;
    }
    case LieType::E: {
      if (n < 6 || n > 8) throw std::invalid_argument("E_n only exists for n = 6,7,8");
      ambient = 8;
      Rat h(1, 2);
      s.push_back({h, -h, -h, -h, -h, -h, -h, h});
      s.push_back({Rat(1), Rat(1), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0), Rat(0)});
      for (int i = 1; i <= 6; ++i) {
        Weight w(8, Rat(0));
        w[i] = 1;
        w[i - 1] = -1;
        s.push_back(w);
      }
      s.resize(n);
      return s;
    }
  }
  throw std::invalid_argument("bad Lie type");
}

long expected_count(LieType t, int n) {
  switch (t) {
    case LieType::A: return long(n) * (n + 1) / 2;
    case LieType::B:
    case LieType::C: return long(n) * n;
    case LieType::D: return long(n) * (n - 1);
    case LieType::G: return 6;
    case LieType::F: return 24;
    case LieType::E: return n == 6 ? 36 : (n == 7 ? 63 : 120);
  }
  return -1;
}

}  // namespace

RootSystem build_root_system(LieType type, int rank) {
  RootSystem rs;
  rs.type = type;
  rs.rank = rank;
  rs.simple = make_simple_roots(type, rank, rs.ambient);

  // Closure: r + a_i is a root iff the a_i-string through r descends further
  // than <r, a_i-check>.
  std::set<Weight, WeightLess> roots(rs.simple.begin(), rs.simple.end());
  std::vector<Weight> frontier(rs.simple);
  while (!frontier.empty()) {
    std::vector<Weight> next;
    for (const auto& r : frontier) {
      for (const auto& ai : rs.simple) {
        int p = 0;
        Weight cur = sub(r, ai);
        while (roots.count(cur)) {
          ++p;
          cur = sub(cur, ai);
        }
        Rat q = Rat(p) - pairing(r, ai);
        if (q >= 1) {
          Weight cand = add(r, ai);
          if (roots.insert(cand).second) next.push_back(cand);
        }
      }
    }
    frontier = std::move(next);
  }

  rs.positive.assign(roots.begin(), roots.end());
  if (static_cast<long>(rs.positive.size()) != expected_count(type, rank))
    throw std::runtime_error("root generation produced the wrong count for " +
                             to_string(type) + std::to_string(rank));

  rs.height_vector = [&] {
    std::vector<Rat> ones(rank, Rat(1));
    auto c = solve_gram(rs.simple, ones);
    Weight h = zero_weight(rs.ambient);
    for (int j = 0; j < rank; ++j) h = add(h, scale(c[j], rs.simple[j]));
    return h;
  }();

  // simple coordinates; also sort positives by height then coords
  auto coords_of = [&](const Weight& r) {
    std::vector<Rat> rhs(rank);
    for (int i = 0; i < rank; ++i) rhs[i] = dot(r, rs.simple[i]);
    auto c = solve_gram(rs.simple, rhs);
    std::vector<int> out(rank);
    for (int i = 0; i < rank; ++i) {
      Int z;
      if (!as_integer(c[i], z) || !z.fits_slong_p())
        throw std::runtime_error("non-integral simple coordinates");
      out[i] = static_cast<int>(z.get_si());
      if (out[i] < 0) throw std::runtime_error("negative simple coordinate");
    }
    return out;
  };
  std::vector<std::pair<std::vector<int>, Weight>> tagged;
  for (const auto& r : rs.positive) tagged.push_back({coords_of(r), r});
  std::stable_sort(tagged.begin(), tagged.end(), [](const auto& a, const auto& b) {
    int ha = 0, hb = 0;
    for (int x : a.first) ha += x;
    for (int x : b.first) hb += x;
    if (ha != hb) return ha < hb;
    return a.first < b.first;
  });
  rs.positive.clear();
  rs.simple_coords.clear();
  for (auto& [c, r] : tagged) {
    rs.simple_coords.push_back(c);
    rs.positive.push_back(r);
  }
  rs.highest = rs.positive.back();

  rs.cartan.assign(rank, std::vector<int>(rank));
  for (int i = 0; i < rank; ++i)
    for (int j = 0; j < rank; ++j) {
      Int z;
      if (!as_integer(pairing(rs.simple[i], rs.simple[j]), z))
        throw std::runtime_error("non-integral Cartan entry");
      rs.cartan[i][j] = static_cast<int>(z.get_si());
    }

  for (std::size_t i = 0; i < rs.positive.size(); ++i)
    rs.pos_index_[rs.positive[i]] = static_cast<int>(i);
  return rs;
}

int RootSystem::height(std::size_t pos_index) const {
  int h = 0;
  for (int x : simple_coords[pos_index]) h += x;
  return h;
}

int RootSystem::index_of(const Weight& w) const {
  auto it = pos_index_.find(w);
  return it == pos_index_.end() ? -1 : it->second;
}

}  // namespace dix
