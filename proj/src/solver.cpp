#include "dix/solver.hpp"

#include <algorithm>
#include <bit>
#include <filesystem>
#include <fstream>
#include <numeric>
#include <stdexcept>
#include <thread>

namespace dix {

namespace {

namespace fs = std::filesystem;

// Scaled-integer P_K evaluator: points carried at 4x, roots at 2x, so every
// linear factor is the integer 8<lam, a>.
class PkEvaluator {
 public:
  PkEvaluator(const RealPair& pair, const RealFormOrbit& form)
      : pair_(pair), form_(form) {
    const int dim = pair.rs.ambient;
    for (const auto& a : pair.compact_pos) {
      std::vector<long> r(dim);
      for (int i = 0; i < dim; ++i) {
        Int z;
        if (!as_integer(Rat(2) * a[i], z))
          throw std::runtime_error("root not half-integral");
        r[i] = z.get_si();
      }
      roots2_.push_back(std::move(r));
    }
    denom_ = 1;
    for (const auto& a : pair.compact_pos) {
      Int z;
      as_integer(Rat(8) * dot(pair.rho_c, a), z);
      denom_ *= z;
    }
  }

  // Exact P_K at an arbitrary rational point (slow path, no ledger).
  Rat at(const Weight& lam) const { return weyl_dim_pk(pair_, lam); }

  // Sum over the ledger of coeff * P_K(base + key/2), exact. Points on a
  // compact wall contribute zero and are skipped.
  Rat ledger_sum(const ShiftLedger& ledger, const Weight& base, int threads) const {
    const int dim = pair_.rs.ambient;
    std::vector<long> base4(dim);
    for (int i = 0; i < dim; ++i) {
      Int z;
      if (!as_integer(Rat(4) * base[i], z) || !z.fits_slong_p())
        throw std::invalid_argument("evaluation point is not quarter-integral");
      base4[i] = z.get_si();
    }
    // Per-root: factor(key) = dot(base4, root2) + 2 * dot(key, root2)
    std::vector<long> base_dots(roots2_.size());
    for (std::size_t r = 0; r < roots2_.size(); ++r) {
      long s = 0;
      for (int i = 0; i < dim; ++i) s += base4[i] * roots2_[r][i];
      base_dots[r] = s;
    }

    const auto& entries = ledger.entries();
    int nthreads = threads > 0 ? threads
                               : static_cast<int>(std::thread::hardware_concurrency());
    nthreads = std::max(1, std::min<int>(nthreads, 16));
    if (entries.size() < 4096) nthreads = 1;

    std::vector<Int> partial(nthreads, Int(0));
    auto work = [&](int t) {
      const std::size_t lo = entries.size() * t / nthreads;
      const std::size_t hi = entries.size() * (t + 1) / nthreads;
      Int acc = 0, term;
      mpz_class prod;
      for (std::size_t e = lo; e < hi; ++e) {
        const auto& key = entries[e].key;
        bool wall = false;
        prod = static_cast<long>(entries[e].coeff);
        long long chunk = 1;
        for (std::size_t r = 0; r < roots2_.size(); ++r) {
          long d = base_dots[r];
          const auto& root = roots2_[r];
          for (int i = 0; i < dim; ++i) d += 2L * key[i] * root[i];
          if (d == 0) {
            wall = true;
            break;
          }
          if (chunk > (1LL << 42) || chunk < -(1LL << 42)) {
            prod *= static_cast<long>(chunk);
            chunk = 1;
          }
          chunk *= d;
        }
        if (wall) continue;
        prod *= static_cast<long>(chunk);
        acc += prod;
      }
      partial[t] = std::move(acc);
    };
    if (nthreads == 1) {
      work(0);
    } else {
      std::vector<std::thread> pool;
      for (int t = 0; t < nthreads; ++t) pool.emplace_back(work, t);
      for (auto& th : pool) th.join();
    }
    Int total = 0;
    for (auto& p : partial) total += p;
    return Rat(total) / Rat(denom_);
  }

 private:
  const RealPair& pair_;
  const RealFormOrbit& form_;
  std::vector<std::vector<long>> roots2_;
  Int denom_;
};

Rat pk_l(const RealFormOrbit& form, const Weight& lam) {
  return eval_weyl_dim_poly(form.dc_l, form.rho_c_l, lam);
}

int overall_sign(const RealFormOrbit& form, bool c3_form) {
  long e = form.N + form.cneg + (c3_form ? static_cast<long>(form.dn_l.size()) : 0);
  return e % 2 ? -1 : 1;
}

std::vector<Weight> fold_roots(const RealFormOrbit& form) {
  std::vector<Weight> folds(form.dn_l);
  folds.insert(folds.end(), form.p1.begin(), form.p1.end());
  // Deterministic order chosen for early merge collisions: group by equal
  // coordinates prefix.
  std::sort(folds.begin(), folds.end(), WeightLess{});
  return folds;
}

std::string checkpoint_name(const std::string& dir, int fold) {
  return dir + "/ledger_fold" + std::to_string(fold) + ".bin";
}

}  // namespace

Rat compute_constant_naive(const RealPair& pair, const RealFormOrbit& form,
                           const Weight* lam0_in, bool c3_form) {
  const Weight lam0 = lam0_in ? *lam0_in : form.rho_c_l;
  Rat pkl = pk_l(form, lam0);
  if (pkl == 0)
    throw std::invalid_argument(
        "P_{K cap L}(lam0) = 0; choose a base point off the Delta_c(l) walls "
        "(e.g. rho_c(l))");
  const auto& A = form.dn_l;
  const auto& C = form.p1;
  if (static_cast<int>(A.size() + C.size()) > kNaiveFoldGuard)
    throw std::domain_error("naive engine guard exceeded (" +
                            std::to_string(A.size() + C.size()) + " > " +
                            std::to_string(kNaiveFoldGuard) + "); use the DP");

  const std::size_t na = A.size(), nc = C.size();
  const Weight base = c3_form ? lam0 : sub(lam0, form.rho_n_l);
  Rat total = 0;
  std::vector<Weight> asum(1u << na, zero_weight(pair.rs.ambient));
  for (std::size_t m = 1; m < (1u << na); ++m) {
    unsigned low = std::countr_zero(m);
    asum[m] = add(asum[m & (m - 1)], A[low]);
  }
  for (std::size_t mc = 0; mc < (1u << nc); ++mc) {
    Weight csum = zero_weight(pair.rs.ambient);
    int cbits = std::popcount(mc);
    for (std::size_t b = 0; b < nc; ++b)
      if (mc >> b & 1) csum = add(csum, C[b]);
    for (std::size_t ma = 0; ma < (1u << na); ++ma) {
      int bits = cbits + std::popcount(ma);
      // C1: lam0 - rho_n(l) + 2rho(A) - 2rho(C); C3: lam0 - 2rho(A) - 2rho(C)
      Weight arg = c3_form ? sub(sub(base, asum[ma]), csum)
                           : sub(add(base, asum[ma]), csum);
      Rat v = weyl_dim_pk(pair, arg);
      if (bits % 2)
        total -= v;
      else
        total += v;
    }
  }
  return Rat(overall_sign(form, c3_form)) * total / pkl;
}

Rat compute_constant_dp(const RealPair& pair, const RealFormOrbit& form,
                        const Weight* lam0_in, const SolverOptions& opts,
                        std::size_t* distinct_shifts) {
  const Weight lam0 = lam0_in ? *lam0_in : form.rho_c_l;
  Rat pkl = pk_l(form, lam0);
  if (pkl == 0)
    throw std::invalid_argument("P_{K cap L}(lam0) = 0; choose another base point");

  auto folds = fold_roots(form);
  ShiftLedger ledger(pair.rs.ambient);
  int start_fold = 0;
  if (opts.resume && !opts.checkpoint_dir.empty()) {
    for (int f = static_cast<int>(folds.size()); f >= 1; --f) {
      std::ifstream in(checkpoint_name(opts.checkpoint_dir, f), std::ios::binary);
      if (in) {
        ledger = ShiftLedger::load(in);
        start_fold = f;
        break;
      }
    }
  }
  for (std::size_t f = start_fold; f < folds.size(); ++f) {
    ledger.fold(folds[f]);
    if (!opts.checkpoint_dir.empty()) {
      fs::create_directories(opts.checkpoint_dir);
      std::ofstream out(checkpoint_name(opts.checkpoint_dir, static_cast<int>(f) + 1),
                        std::ios::binary | std::ios::trunc);
      ledger.save(out);
      out.close();
      fs::remove(checkpoint_name(opts.checkpoint_dir, static_cast<int>(f)));
    }
    if (opts.progress) opts.progress(static_cast<int>(f) + 1, ledger.size());
    if (opts.max_ledger_entries && ledger.size() > opts.max_ledger_entries)
      throw std::runtime_error(
          "ledger exceeds the configured memory budget after fold " +
          std::to_string(f + 1) +
          (opts.checkpoint_dir.empty()
               ? "; rerun with a checkpoint directory to make the run resumable"
               : "; snapshot saved, rerun with --resume and a larger budget"));
  }
  if (distinct_shifts) *distinct_shifts = ledger.size();

  PkEvaluator ev(pair, form);
  Rat total = ev.ledger_sum(ledger, lam0, opts.threads);
  return Rat(overall_sign(form, /*c3_form=*/true)) * total / pkl;
}

Int compute_constant_shuffle_su(int p, int q, int k) {
  if (!(q >= p && p >= 1 && 0 <= k && k <= p))
    throw std::invalid_argument("shuffle oracle needs q >= p >= 1 and 0 <= k <= p");
  const int n = p + q;
  // N and the term data depend only on (p,q,k); each shuffle contributes
  // (-1)^{#A+#C} P_K(Lambda) with #A = k(p-k), #C = k(q-p),
  // P_K(Lambda) = (-1)^{(p-k)(q-p+k)}.
  long N = static_cast<long>(k) * q + static_cast<long>(p - k) * (q - p + k) +
           static_cast<long>(q - p) * k;
  long per_exp = N + static_cast<long>(k) * (p - k) +
                 static_cast<long>(k) * (q - p) +
                 static_cast<long>(p - k) * (q - p + k);
  Int per_term = per_exp % 2 ? -1 : 1;
  // enumerate the (k, p-k)-shuffles of (p, ..., 1)
  Int count = 0;
  std::vector<int> comb(k);
  std::iota(comb.begin(), comb.end(), 0);
  auto advance = [&]() {
    int i = k - 1;
    while (i >= 0 && comb[i] == p - k + i) --i;
    if (i < 0) return false;
    ++comb[i];
    for (int j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
    return true;
  };
  if (k == 0) {
    count = 1;
  } else {
    do {
      ++count;
    } while (advance());
  }
  Int result = per_term * count;
  // sanity: the closed form the enumeration collapses to
  (void)n;
  return result;
}

bool verify_constant(const RealPair& pair, const RealFormOrbit& form,
                     const Int& c, int num_points, const SolverOptions& opts) {
  if (num_points < 1) throw std::invalid_argument("verify_constant: num_points >= 1");
  // Directions orthogonal to Delta_c(l): h itself, rho_n(l), and rho(u).
  std::vector<Weight> dirs;
  auto push_dir = [&](const Weight& w) {
    if (is_zero(w)) return;
    for (const auto& a : form.dc_l)
      if (dot(w, a) != 0) return;
    for (const auto& d : dirs)
      if (d == w) return;
    dirs.push_back(w);
  };
  push_dir(form.h);
  push_dir(form.rho_n_l);
  {
    Weight rho_u = zero_weight(pair.rs.ambient);
    for (std::size_t i = 0; i < pair.rs.positive.size(); ++i)
      if (form.level[i] < 0) rho_u = add(rho_u, pair.rs.positive[i]);
      else if (form.level[i] > 0) rho_u = sub(rho_u, pair.rs.positive[i]);
    push_dir(scale(Rat(1, 2), rho_u));
  }
  if (dirs.empty()) push_dir(pair.rho_n);
  if (dirs.empty()) return num_points == 0;

  auto folds = fold_roots(form);
  ShiftLedger ledger(pair.rs.ambient);
  for (const auto& b : folds) ledger.fold(b);
  PkEvaluator ev(pair, form);

  int done = 0;
  for (int t = 1; done < num_points; ++t) {
    const Weight& xi = dirs[done % dirs.size()];
    Weight pt = add(form.rho_c_l, scale(Rat(t), xi));
    Rat pkl = pk_l(form, pt);
    if (pkl == 0) continue;  // skipped and replaced by the next t
    Rat val = Rat(overall_sign(form, true)) * ev.ledger_sum(ledger, pt, opts.threads) / pkl;
    if (val != Rat(c)) return false;
    ++done;
  }
  return true;
}

ConstantResult compute_constant(const CatalogPair& cp, const RealPair& pair,
                                const RealFormOrbit& form,
                                const std::string& method, int check_points,
                                const SolverOptions& opts) {
  ConstantResult res;
  res.pair_id = cp.id;
  res.form_id = form.form_id;
  res.method = method;
  auto t0 = std::chrono::steady_clock::now();

  Rat value;
  if (method == "dp") {
    value = compute_constant_dp(pair, form, nullptr, opts, &res.distinct_shifts);
  } else if (method == "naive") {
    value = compute_constant_naive(pair, form);
  } else if (method == "shuffle") {
    if (cp.family != Family::Su)
      throw std::invalid_argument("shuffle oracle applies to su(p,q) only");
    int p = std::min(cp.p, cp.q), q = std::max(cp.p, cp.q);
    value = Rat(compute_constant_shuffle_su(p, q, form.form_id));
  } else if (method == "closed") {
    if (cp.family != Family::Su)
      throw std::invalid_argument("closed form applies to su(p,q) only");
    int p = std::min(cp.p, cp.q), q = std::max(cp.p, cp.q);
    int k = form.form_id, n = p + q;
    Int binom;
    mpz_bin_uiui(binom.get_mpz_t(), p, k);
    value = Rat((long(k) * (n - k)) % 2 ? -binom : binom);
  } else {
    throw std::invalid_argument("unknown method '" + method + "'");
  }

  if (!as_integer(value, res.c))
    throw std::runtime_error("constant is not an integer: " + to_string(value) +
                             " (pair " + cp.id + ", form " +
                             std::to_string(form.form_id) + ")");
  if (check_points > 0) {
    if (!verify_constant(pair, form, res.c, check_points, opts))
      throw std::runtime_error("point verification failed for " + cp.id);
    res.eval_points_used = 1 + check_points;
  } else {
    res.eval_points_used = 1;
  }
  res.elapsed_s =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return res;
}

}  // namespace dix
