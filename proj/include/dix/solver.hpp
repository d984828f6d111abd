// Exact evaluation of the constants attaching the Dirac index polynomial to
// associated-cycle multiplicities, one per real form.
//
// Sign convention (pinned against every printed table value): the Weyl
// dimension polynomial is taken with respect to the compact positive system
// that makes the form's characteristic h dominant. Relative to the fixed
// Dynkin system this contributes (-1)^{#{a in Dc+ : a(h) < 0}} on top of the
// (-1)^N discrete-series sign; the classical tableau characteristics are
// already dominant, so their sign is plain (-1)^N.

#pragma once

#include <chrono>
#include <functional>
#include <optional>
#include <string>

#include "dix/ledger.hpp"
#include "dix/orbits.hpp"

namespace dix {

struct ConstantResult {
  std::string pair_id;
  int form_id = 0;
  Int c;
  std::string method;  // dp | naive | shuffle | closed
  int eval_points_used = 0;
  std::size_t distinct_shifts = 0;
  double elapsed_s = 0;
};

struct SolverOptions {
  int threads = 0;                  // 0: hardware_concurrency
  std::string checkpoint_dir;      // fold-by-fold ledger snapshots when set
  bool resume = false;             // pick up the newest usable snapshot
  std::size_t max_ledger_entries = 0;  // 0: unlimited; exceeded -> checkpoint + throw
  std::function<void(int fold, std::size_t ledger_size)> progress;
};

inline constexpr int kNaiveFoldGuard = 24;

// Subset-sum evaluation of the product form at lam0 (default rho_c(l)).
// c3_form toggles between the two displayed versions of the identity; both
// must give the same constant. Throws std::domain_error when the fold count
// exceeds the guard (use the DP), std::invalid_argument when P_{K cap L}
// vanishes at lam0.
Rat compute_constant_naive(const RealPair& pair, const RealFormOrbit& form,
                           const Weight* lam0 = nullptr, bool c3_form = false);

// Zonotope-ledger evaluation; identical value to the naive engine wherever
// both run.
Rat compute_constant_dp(const RealPair& pair, const RealFormOrbit& form,
                        const Weight* lam0 = nullptr,
                        const SolverOptions& opts = {},
                        std::size_t* distinct_shifts = nullptr);

// Independent SU(p,q) oracle: enumerates (k,p-k)-shuffles with the sign
// bookkeeping of the worked computation. Requires q >= p >= 1, 0 <= k <= p.
Int compute_constant_shuffle_su(int p, int q, int k);

// Re-evaluates the quotient at lam0 = rho_c(l) + t*xi for num_points choices
// with xi orthogonal to Delta_c(l); true iff every quotient equals c.
bool verify_constant(const RealPair& pair, const RealFormOrbit& form,
                     const Int& c, int num_points,
                     const SolverOptions& opts = {});

// Full pipeline: DP (or naive) + integrality + point verification.
ConstantResult compute_constant(const CatalogPair& cp, const RealPair& pair,
                                const RealFormOrbit& form,
                                const std::string& method = "dp",
                                int check_points = 0,
                                const SolverOptions& opts = {});

}  // namespace dix
