#include "dix/tableaux.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace dix {

int SignedTableau::sign_count(char s) const {
  int c = 0;
  for (auto [len, lead] : rows) {
    int lead_count = (len + 1) / 2, other_count = len / 2;
    if (lead == s)
      c += lead_count;
    else
      c += other_count;
  }
  return c;
}

bool SignedTableau::shape_valid() const {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].first < 1) return false;
    if (i && rows[i].first > rows[i - 1].first) return false;
    if (rows[i].second != '+' && rows[i].second != '-') return false;
  }
  return true;
}

std::string SignedTableau::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (i) os << " ";
    char c = rows[i].second;
    for (int j = 0; j < rows[i].first; ++j) {
      os << c;
      c = (c == '+') ? '-' : '+';
    }
  }
  return os.str();
}

namespace {

Weight to_rat(const std::vector<int>& v) {
  Weight w;
  w.reserve(v.size());
  for (int x : v) w.push_back(Rat(x));
  return w;
}

// Collect the h-values of boxes of one sign.
std::vector<int> box_values(const SignedTableau& t, char sign) {
  std::vector<int> vals;
  for (auto [len, lead] : t.rows) {
    char c = lead;
    int v = len - 1;
    for (int j = 0; j < len; ++j, v -= 2, c = (c == '+') ? '-' : '+')
      if (c == sign) vals.push_back(v);
  }
  return vals;
}

// U(m) block: values are the coordinates, sorted decreasing.
std::vector<int> gl_coords(std::vector<int> vals) {
  std::sort(vals.rbegin(), vals.rend());
  return vals;
}

// SO(m)/Sp(m) block: values pair off as (v,-v) plus zeros; coordinates are the
// nonnegative representatives sorted decreasing, padded by zeros to the rank.
std::vector<int> paired_coords(const std::vector<int>& vals, int rank) {
  std::vector<int> pos;
  int zeros = 0;
  for (int v : vals) {
    if (v > 0) pos.push_back(v);
    if (v == 0) ++zeros;
  }
  if (static_cast<int>(pos.size()) * 2 + zeros != static_cast<int>(vals.size()) ||
      static_cast<int>(pos.size()) > rank)
    throw std::runtime_error("tableau h-values do not pair off");
  std::sort(pos.rbegin(), pos.rend());
  pos.resize(rank, 0);
  return pos;
}

}  // namespace

std::vector<ClassicalForm> real_forms_su(int p, int q) {
  if (p < 1 || q < 1) throw std::invalid_argument("su(p,q) needs p,q >= 1");
  const int m = std::min(p, q);
  std::vector<ClassicalForm> out;
  for (int k = 0; k <= m; ++k) {
    SignedTableau t;
    for (int i = 0; i < k; ++i) t.rows.push_back({2, '+'});
    for (int i = 0; i < m - k; ++i) t.rows.push_back({2, '-'});
    for (int i = 0; i < std::abs(p - q); ++i) t.rows.push_back({1, p > q ? '+' : '-'});
    auto plus = gl_coords(box_values(t, '+'));
    auto minus = gl_coords(box_values(t, '-'));
    plus.insert(plus.end(), minus.begin(), minus.end());
    out.push_back({t, to_rat(plus), "k=" + std::to_string(k)});
  }
  return out;
}

std::vector<ClassicalForm> real_forms_sp2nr(int n) {
  if (n < 1) throw std::invalid_argument("sp(2n,R) needs n >= 1");
  std::vector<ClassicalForm> out;
  for (int k = 0; k <= n; ++k) {
    SignedTableau t;
    for (int i = 0; i < k; ++i) t.rows.push_back({2, '+'});
    for (int i = 0; i < n - k; ++i) t.rows.push_back({2, '-'});
    out.push_back({t, to_rat(gl_coords(box_values(t, '+'))), "k=" + std::to_string(k)});
  }
  return out;
}

std::vector<ClassicalForm> real_forms_so(int twop, int q2) {
  const int p = twop / 2;
  const bool odd = q2 % 2 != 0;
  const int qrank = q2 / 2;
  if (twop % 2 != 0 || p < 1 || qrank < (odd ? 0 : 1))
    throw std::invalid_argument("so(2p,q) parameters out of range");
  const int ones = twop + q2 - 3 - 2 * (2 * p - 2);
  if (ones < 0) throw std::invalid_argument("so(2p,q): orbit does not fit");

  std::vector<ClassicalForm> out;
  for (char first : {'+', '-'}) {
    const int nplus_needed = twop;
    int nplus = (first == '+' ? 2 : 1) + (2 * p - 2);
    int sing_plus = nplus_needed - nplus;
    int sing_minus = ones - sing_plus;
    if (sing_plus < 0 || sing_minus < 0) continue;

    SignedTableau t;
    t.rows.push_back({3, first});
    for (int i = 0; i < p - 1; ++i) t.rows.push_back({2, '+'});
    for (int i = 0; i < p - 1; ++i) t.rows.push_back({2, '-'});
    for (int i = 0; i < sing_plus; ++i) t.rows.push_back({1, '+'});
    for (int i = 0; i < sing_minus; ++i) t.rows.push_back({1, '-'});

    auto pc = paired_coords(box_values(t, '+'), p);
    auto qc = paired_coords(box_values(t, '-'), qrank);

    // An even-orthogonal side with no zero coordinate gives two SO-orbits
    // (negate the last coordinate); the odd side always carries a zero.
    bool split_plus = std::all_of(pc.begin(), pc.end(), [](int v) { return v != 0; });
    bool split_minus =
        !odd && qrank > 0 && std::all_of(qc.begin(), qc.end(), [](int v) { return v != 0; });

    std::vector<int> base(pc);
    base.insert(base.end(), qc.begin(), qc.end());
    auto emit = [&](bool fp, bool fm, const std::string& note) {
      std::vector<int> v(base);
      if (fp) v[p - 1] = -v[p - 1];
      if (fm) v[p + qrank - 1] = -v[p + qrank - 1];
      out.push_back({t, to_rat(v), note});
    };
    std::string tag(1, first);
    emit(false, false, tag);
    if (split_plus) emit(true, false, tag + " II+");
    if (split_minus) emit(false, true, tag + " II-");
    if (split_plus && split_minus) emit(true, true, tag + " II+-");
  }
  return out;
}

std::vector<ClassicalForm> real_forms_sostar(int n) {
  if (n < 2) throw std::invalid_argument("so*(2n) needs n >= 2");
  const int two_rows = (n % 2 == 0) ? n : n - 1;
  std::vector<ClassicalForm> out;
  for (int k = 0; k <= two_rows; k += 2) {
    SignedTableau t;
    for (int i = 0; i < k; ++i) t.rows.push_back({2, '+'});
    for (int i = 0; i < two_rows - k; ++i) t.rows.push_back({2, '-'});
    if (n % 2 != 0) {
      t.rows.push_back({1, '+'});
      t.rows.push_back({1, '-'});
    }
    out.push_back({t, to_rat(gl_coords(box_values(t, '+'))), "k=" + std::to_string(k)});
  }
  return out;
}

}  // namespace dix
