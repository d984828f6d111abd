#include "dix/ledger.hpp"

#include <cstring>
#include <istream>
#include <limits>
#include <ostream>
#include <stdexcept>

namespace dix {

ShiftLedger::ShiftLedger(int dim) : dim_(dim) {
  if (dim < 1 || dim > kMaxDim) throw std::invalid_argument("ledger dimension out of range");
  entries_.push_back(Entry{Key{}, 1});
}

ShiftLedger::Key ShiftLedger::pack(const Weight& w) const {
  if (static_cast<int>(w.size()) != dim_)
    throw std::invalid_argument("ledger pack: dimension mismatch");
  Key k{};
  for (int i = 0; i < dim_; ++i) {
    Int z;
    if (!as_integer(Rat(2) * w[i], z))
      throw std::invalid_argument("ledger pack: weight not half-integral");
    long v = z.get_si();
    if (!z.fits_slong_p() || v < std::numeric_limits<int16_t>::min() ||
        v > std::numeric_limits<int16_t>::max())
      throw std::overflow_error("ledger pack: coordinate out of range");
    k[i] = static_cast<int16_t>(v);
  }
  return k;
}

Weight ShiftLedger::unpack(const Key& k) const {
  Weight w(dim_);
  for (int i = 0; i < dim_; ++i) {
    w[i] = Rat(k[i], 2);
    w[i].canonicalize();
  }
  return w;
}

namespace {
inline bool key_less(const ShiftLedger::Key& a, const ShiftLedger::Key& b) {
  return a < b;
}
}  // namespace

void ShiftLedger::fold(const Weight& beta) {
  const Key b = pack(beta);
  // shifted stream: entries with key - b, coefficient negated; both streams
  // are sorted, so merge with cancellation.
  std::vector<Entry> merged;
  merged.reserve(entries_.size() * 2);
  std::size_t i = 0, j = 0;
  const std::size_t n = entries_.size();
  auto shifted_key = [&](std::size_t idx) {
    Key k = entries_[idx].key;
    for (int d = 0; d < dim_; ++d) k[d] = static_cast<int16_t>(k[d] - b[d]);
    return k;
  };
  while (i < n || j < n) {
    if (j >= n) {
      merged.push_back(entries_[i++]);
      continue;
    }
    Key sk = shifted_key(j);
    if (i >= n) {
      merged.push_back(Entry{sk, -entries_[j++].coeff});
      continue;
    }
    if (key_less(entries_[i].key, sk)) {
      merged.push_back(entries_[i++]);
    } else if (key_less(sk, entries_[i].key)) {
      merged.push_back(Entry{sk, -entries_[j++].coeff});
    } else {
      long long c = entries_[i].coeff - entries_[j].coeff;
      if (c != 0) merged.push_back(Entry{entries_[i].key, c});
      ++i;
      ++j;
    }
  }
  entries_ = std::move(merged);
  ++folds_;
}

long long ShiftLedger::coeff_sum() const {
  long long s = 0;
  for (const auto& e : entries_) s += e.coeff;
  return s;
}

Int ShiftLedger::abs_coeff_sum() const {
  Int s = 0;
  for (const auto& e : entries_) {
    long c = static_cast<long>(e.coeff);
    s += c < 0 ? -c : c;
  }
  return s;
}

void ShiftLedger::save(std::ostream& os) const {
  const char magic[8] = {'d', 'i', 'x', 'l', 'e', 'd', 'g', '1'};
  os.write(magic, 8);
  std::uint64_t meta[3] = {static_cast<std::uint64_t>(dim_),
                           static_cast<std::uint64_t>(folds_),
                           static_cast<std::uint64_t>(entries_.size())};
  os.write(reinterpret_cast<const char*>(meta), sizeof(meta));
  for (const auto& e : entries_) {
    os.write(reinterpret_cast<const char*>(e.key.data()), sizeof(Key));
    os.write(reinterpret_cast<const char*>(&e.coeff), sizeof(e.coeff));
  }
}

ShiftLedger ShiftLedger::load(std::istream& is) {
  char magic[8];
  is.read(magic, 8);
  if (!is || std::memcmp(magic, "dixledg1", 8) != 0)
    throw std::runtime_error("ledger load: bad header");
  std::uint64_t meta[3];
  is.read(reinterpret_cast<char*>(meta), sizeof(meta));
  ShiftLedger l(static_cast<int>(meta[0]));
  l.folds_ = static_cast<int>(meta[1]);
  l.entries_.clear();
  l.entries_.resize(meta[2]);
  for (auto& e : l.entries_) {
    is.read(reinterpret_cast<char*>(e.key.data()), sizeof(Key));
    is.read(reinterpret_cast<char*>(&e.coeff), sizeof(e.coeff));
  }
  if (!is) throw std::runtime_error("ledger load: truncated file");
  return l;
}

}  // namespace dix
