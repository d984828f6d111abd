#include "dix/weight.hpp"

#include <sstream>
#include <stdexcept>

namespace dix {

Rat dot(const Weight& a, const Weight& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Rat s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Weight add(const Weight& a, const Weight& b) {
  Weight out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += b[i];
  return out;
}

Weight sub(const Weight& a, const Weight& b) {
  Weight out(a);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] -= b[i];
  return out;
}

Weight neg(const Weight& a) {
  Weight out(a);
  for (auto& x : out) x = -x;
  return out;
}

Weight scale(const Rat& s, const Weight& a) {
  Weight out(a);
  for (auto& x : out) x *= s;
  return out;
}

Weight zero_weight(std::size_t dim) { return Weight(dim, Rat(0)); }

bool is_zero(const Weight& a) {
  for (const auto& x : a)
    if (x != 0) return false;
  return true;
}

Weight sum(const std::vector<Weight>& ws, std::size_t dim) {
  Weight out = zero_weight(dim);
  for (const auto& w : ws) out = add(out, w);
  return out;
}

Rat pairing(const Weight& a, const Weight& coroot_of) {
  return Rat(2) * dot(a, coroot_of) / dot(coroot_of, coroot_of);
}

bool WeightLess::operator()(const Weight& a, const Weight& b) const {
  if (a.size() != b.size()) return a.size() < b.size();
  for (std::size_t i = 0; i < a.size(); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0;
  }
  return false;
}

std::string to_string(const Weight& w) {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < w.size(); ++i) {
    if (i) os << ",";
    os << to_string(w[i]);
  }
  os << ")";
  return os.str();
}

std::vector<Rat> solve_gram(const std::vector<Weight>& basis,
                            const std::vector<Rat>& rhs) {
  const std::size_t n = basis.size();
  if (rhs.size() != n) throw std::invalid_argument("solve_gram: size mismatch");
  std::vector<std::vector<Rat>> m(n, std::vector<Rat>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m[i][j] = dot(basis[i], basis[j]);
    m[i][n] = rhs[i];
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && m[piv][col] == 0) ++piv;
    if (piv == n) throw std::runtime_error("solve_gram: singular Gram matrix");
    std::swap(m[col], m[piv]);
    Rat pv = m[col][col];
    for (auto& x : m[col]) x /= pv;
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || m[r][col] == 0) continue;
      Rat f = m[r][col];
      for (std::size_t j = col; j <= n; ++j) m[r][j] -= f * m[col][j];
    }
  }
  std::vector<Rat> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = m[i][n];
  return out;
}

}  // namespace dix
