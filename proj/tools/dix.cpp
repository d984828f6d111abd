// dix: exact Dirac-index / associated-cycle constants for equal-rank pairs.
//
// Subcommands: pairs list, orbit describe, springer gate, constants compute,
// tables verify, charlab verify, report. Exit codes: 0 pass, 1 mismatch or
// verification failure, 2 usage error.

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "dix/catalog.hpp"
#include "dix/charlab.hpp"
#include "dix/orbits.hpp"
#include "dix/solver.hpp"
#include "dix/springer.hpp"

using nlohmann::json;
using namespace dix;

namespace {

struct GlobalOpts {
  std::string catalog_path;
  int threads = 0;
  bool json_out = false;
};

Catalog load_catalog(const GlobalOpts& g) {
  if (!g.catalog_path.empty()) return Catalog::load_file(g.catalog_path);
  return Catalog::load_default();
}

int thread_count(const GlobalOpts& g) {
  if (g.threads > 0) return g.threads;
  if (const char* env = std::getenv("DIX_THREADS")) {
    int n = std::atoi(env);
    if (n > 0) return n;
  }
  return 0;
}

std::string now_iso8601() {
  auto t = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  char buf[32];
  std::strftime(buf, sizeof buf, "%FT%TZ", std::gmtime(&t));
  return buf;
}

json weight_json(const Weight& w) {
  json a = json::array();
  for (const auto& x : w) a.push_back(to_string(x));
  return a;
}

json form_json(const RealPair& pair, const RealFormOrbit& f) {
  json j;
  j["form"] = f.form_id;
  j["h"] = weight_json(f.h);
  j["source"] = f.source;
  std::map<int, int> hist;
  for (int l : f.level) ++hist[l];
  json lh = json::object();
  for (auto [l, c] : hist) lh[std::to_string(l)] = c;
  j["level_histogram_positive_roots"] = lh;
  j["num_p1"] = f.p1.size();
  j["num_dn_l"] = f.dn_l.size();
  j["num_dc_l"] = f.dc_l.size();
  j["num_u"] = f.u_size;
  j["N"] = f.N;
  j["compact_negative_on_h"] = f.cneg;
  j["dim_identity"] = f.u_size - static_cast<long>(f.p1.size());
  (void)pair;
  return j;
}

json gate_json(const CatalogPair& cp, const RealPair& pair) {
  auto g = springer_gate(cp, pair);
  json j;
  j["pair"] = cp.id;
  j["is_springer"] = g.is_springer;
  j["dim_check"] = {{"two_num_noncompact", g.dim_expected},
                    {"orbit_dim", g.is_springer ? json(g.dim_orbit) : json()}};
  if (g.orbit) {
    j["orbit"] = {{"descriptor", g.orbit->descriptor}, {"dim", g.orbit->dim}};
    if (!g.orbit->partition.empty()) {
      j["orbit"]["partition"] = g.orbit->partition;
      j["orbit"]["very_even"] = g.orbit->very_even;
    }
  } else {
    j["orbit"] = nullptr;
    j["reason"] = g.reason;
  }
  return j;
}

json result_json(const ConstantResult& r) {
  return json{{"pair", r.pair_id},
              {"form", r.form_id},
              {"c", r.c.get_str()},
              {"method", r.method},
              {"eval_points_used", r.eval_points_used},
              {"distinct_shifts", r.distinct_shifts},
              {"elapsed_s", r.elapsed_s}};
}

int cmd_pairs_list(const GlobalOpts& g) {
  auto cat = load_catalog(g);
  json out = json::array();
  for (const auto& cp : cat.fixed_pairs()) {
    json j{{"id", cp.id},
           {"k_type", cp.k_type},
           {"dim", cp.dim_nc},
           {"num_forms", cp.num_forms},
           {"springer", cp.springer}};
    if (cp.orbit_label) j["orbit"] = *cp.orbit_label;
    if (!cp.printed_constants.empty()) j["constants"] = cp.printed_constants;
    out.push_back(j);
  }
  json fam = json::array();
  for (const char* f : {"su(p,q)", "so(2p,2q+1)", "sp(2n,R)", "so*(2n)",
                        "so(2p,2q)", "sp(p,q)"})
    fam.push_back(f);
  if (g.json_out) {
    std::cout << json{{"pairs", out}, {"families", fam}}.dump(2) << "\n";
  } else {
    std::cout << "fixed pairs:\n";
    for (const auto& j : out)
      std::cout << "  " << j["id"].get<std::string>() << "  K=" <<
          j["k_type"].get<std::string>() << "  dim=" << j["dim"]
                << "  forms=" << j["num_forms"]
                << (j["springer"].get<bool>() ? "" : "  [gate: excluded]") << "\n";
    std::cout << "families: ";
    for (const auto& f : fam) std::cout << f.get<std::string>() << " ";
    std::cout << "\n";
  }
  return 0;
}

int cmd_orbit_describe(const GlobalOpts& g, const std::string& id, int form_sel) {
  auto cat = load_catalog(g);
  auto cp = cat.resolve(id);
  auto pair = build_pair(cp);
  auto forms = enumerate_real_forms(cp, pair);
  json out;
  out["pair"] = cp.id;
  out["k_type"] = pair.k_type_label;
  out["num_positive"] = pair.rs.positive.size();
  out["num_compact"] = pair.compact_pos.size();
  out["num_noncompact"] = pair.noncompact_pos.size();
  auto orbit = complex_orbit(cp);
  out["orbit"] = {{"descriptor", orbit.descriptor}, {"dim", orbit.dim}};
  json fl = json::array();
  for (const auto& f : forms) {
    if (form_sel >= 0 && f.form_id != form_sel) continue;
    fl.push_back(form_json(pair, f));
  }
  out["forms"] = fl;
  if (g.json_out) {
    std::cout << out.dump(2) << "\n";
  } else {
    std::cout << "pair " << cp.id << "  K=" << pair.k_type_label << "  orbit "
              << orbit.descriptor << " (dim " << orbit.dim << ")\n";
    for (const auto& f : fl) {
      std::cout << "  form " << f["form"] << ": h=";
      for (const auto& x : f["h"]) std::cout << x.get<std::string>() << " ";
      std::cout << " N=" << f["N"] << " #p1=" << f["num_p1"] << " #Dn+(l)="
                << f["num_dn_l"] << " #Dc+(l)=" << f["num_dc_l"]
                << " [" << f["source"].get<std::string>() << "]\n";
    }
  }
  return 0;
}

int cmd_springer_gate(const GlobalOpts& g, const std::string& id) {
  auto cat = load_catalog(g);
  auto cp = cat.resolve(id);
  auto pair = build_pair(cp);
  json out = gate_json(cp, pair);
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_constants_compute(const GlobalOpts& g, const std::string& id, int form_sel,
                          std::string method, int check_points,
                          const std::string& checkpoint_dir, bool resume) {
  auto cat = load_catalog(g);
  auto cp = cat.resolve(id);
  auto pair = build_pair(cp);
  if (!cp.springer) {
    std::cerr << "pair " << cp.id << " fails the Springer gate: " << cp.gate_reason
              << "\n";
    return 1;
  }
  auto forms = enumerate_real_forms(cp, pair);
  SolverOptions opts;
  opts.threads = thread_count(g);
  opts.checkpoint_dir = checkpoint_dir;
  opts.resume = resume;
  if (!g.json_out && !checkpoint_dir.empty())
    opts.progress = [](int fold, std::size_t n) {
      std::cerr << "fold " << fold << ": ledger " << n << "\n";
    };
  json results = json::array();
  for (const auto& f : forms) {
    if (form_sel >= 0 && f.form_id != form_sel) continue;
    auto r = compute_constant(cp, pair, f, method, check_points, opts);
    results.push_back(result_json(r));
    if (!g.json_out)
      std::cout << cp.id << " form " << f.form_id << ": c = " << r.c.get_str()
                << "  (" << r.method << ", " << r.distinct_shifts
                << " shifts, " << r.elapsed_s << "s)\n";
  }
  if (g.json_out) {
    json rec{{"command", "constants compute"},
             {"catalog_version", cat.version_hash()},
             {"inputs",
              {{"pair", cp.id}, {"form", form_sel}, {"method", method},
               {"check_points", check_points}}},
             {"results", results},
             {"timestamp", now_iso8601()}};
    std::cout << rec.dump(2) << "\n";
  }
  return 0;
}

int cmd_report(const GlobalOpts& g, const std::string& id, int form_sel) {
  auto cat = load_catalog(g);
  auto cp = cat.resolve(id);
  auto pair = build_pair(cp);
  json out;
  out["pair"] = cp.id;
  out["k_type"] = pair.k_type_label;
  out["gate"] = gate_json(cp, pair);
  if (cp.springer) {
    auto forms = enumerate_real_forms(cp, pair);
    SolverOptions opts;
    opts.threads = thread_count(g);
    json fl = json::array();
    for (const auto& f : forms) {
      if (form_sel >= 0 && f.form_id != form_sel) continue;
      json fj = form_json(pair, f);
      auto r = compute_constant(cp, pair, f, "dp", 3, opts);
      fj["constant"] = result_json(r);
      fj["verified_points"] = r.eval_points_used;
      fl.push_back(fj);
    }
    out["forms"] = fl;
  } else {
    out["forms"] = json::array();
  }
  std::cout << out.dump(2) << "\n";
  return 0;
}

int cmd_tables_verify(const GlobalOpts& g, int table, bool long_runs) {
  auto cat = load_catalog(g);
  SolverOptions opts;
  opts.threads = thread_count(g);
  int failures = 0;
  json report = json::array();
  auto note = [&](const std::string& entry, bool ok, const std::string& detail) {
    if (!ok) ++failures;
    report.push_back({{"entry", entry}, {"ok", ok}, {"detail", detail}});
    if (!g.json_out)
      std::cout << (ok ? "ok   " : "FAIL ") << entry
                << (detail.empty() ? "" : "  " + detail) << "\n";
  };

  if (table == 1) {
    std::vector<std::string> ids;
    for (int p = 1; p <= 7; ++p)
      for (int q = 1; p + q <= 8; ++q)
        ids.push_back("su(" + std::to_string(p) + "," + std::to_string(q) + ")");
    for (int n = 1; n <= 6; ++n) ids.push_back("sp(" + std::to_string(2 * n) + ",R)");
    for (int p = 1; p <= 5; ++p)
      for (int q = p - 1; p + q <= 6; ++q)
        ids.push_back("so(" + std::to_string(2 * p) + "," + std::to_string(2 * q + 1) + ")");
    for (int p = 1; p <= 5; ++p)
      for (int q = p; p + q <= 6; ++q)
        if (p + q >= 3)
          ids.push_back("so(" + std::to_string(2 * p) + "," + std::to_string(2 * q) + ")");
    for (int n = 2; n <= 6; ++n) ids.push_back("so*(" + std::to_string(2 * n) + ")");
    for (const auto& id : ids) {
      try {
        auto cp = cat.resolve(id);
        auto pair = build_pair(cp);
        auto orbit = complex_orbit(cp);
        bool dim_ok = orbit.dim == 2L * static_cast<long>(pair.noncompact_pos.size());
        auto forms = enumerate_real_forms(cp, pair);  // throws on identity failure
        bool count_ok = static_cast<int>(forms.size()) == cp.num_forms;
        note(id, dim_ok && count_ok,
             "forms=" + std::to_string(forms.size()) + "/" +
                 std::to_string(cp.num_forms) + " dimO=" + std::to_string(orbit.dim) +
                 "/" + std::to_string(2 * pair.noncompact_pos.size()));
      } catch (const std::exception& e) {
        note(id, false, e.what());
      }
    }
  } else if (table == 2) {
    for (const auto& cp : cat.fixed_pairs()) {
      if (!cp.springer) continue;
      bool is_long = cp.id.rfind("e8", 0) == 0;
      if (is_long && !long_runs) {
        if (!g.json_out)
          std::cout << "skip " << cp.id << " (E8 entry; rerun with --long)\n";
        report.push_back({{"entry", cp.id}, {"ok", nullptr}, {"detail", "skipped (--long)"}});
        continue;
      }
      try {
        auto pair = build_pair(cp);
        auto forms = enumerate_real_forms(cp, pair);
        for (const auto& f : forms) {
          auto r = compute_constant(cp, pair, f, "dp", 0, opts);
          bool ok = r.c == static_cast<long>(cp.printed_constants.at(f.form_id));
          note(cp.id + " form " + std::to_string(f.form_id), ok,
               "c=" + r.c.get_str() + " printed=" +
                   std::to_string(cp.printed_constants.at(f.form_id)));
        }
      } catch (const std::exception& e) {
        note(cp.id, false, e.what());
      }
    }
  } else {
    std::cerr << "unknown table " << table << " (1 or 2)\n";
    return 2;
  }

  if (g.json_out)
    std::cout << json{{"command", "tables verify"},
                      {"table", table},
                      {"catalog_version", cat.version_hash()},
                      {"report", report},
                      {"failures", failures},
                      {"timestamp", now_iso8601()}}
                     .dump(2)
              << "\n";
  return failures == 0 ? 0 : 1;
}

int cmd_charlab_verify(const GlobalOpts& g, const std::string& id, int cutoff) {
  auto cat = load_catalog(g);
  auto cp = cat.resolve(id);
  auto pair = build_pair(cp);
  json checks = json::array();
  int failures = 0;
  auto note = [&](const std::string& name, bool ok, const std::string& detail = "") {
    if (!ok) ++failures;
    checks.push_back({{"check", name}, {"ok", ok}, {"detail", detail}});
    if (!g.json_out)
      std::cout << (ok ? "ok   " : "FAIL ") << name
                << (detail.empty() ? "" : "  " + detail) << "\n";
  };

  try {
    note("koszul", koszul_check(pair, cutoff));
  } catch (const std::exception& e) {
    note("koszul", false, e.what());
  }

  // Dirac index of discrete series: DI(ds(lam)) == E_{lam - rho_c} for three
  // regular dominant lambdas.
  for (int k = 1; k <= 3; ++k) {
    Weight lam = scale(Rat(k), pair.rho);
    try {
      auto ds = ds_spectrum(pair, lam, cutoff);
      auto di = dirac_index_char(ds, pair);
      auto want = irr_char(pair, sub(lam, pair.rho_c), cutoff);
      want.valid_height = di.valid_height;
      note("dirac-index ds(" + std::to_string(k) + "rho)", chars_agree(pair, di, want));
    } catch (const std::exception& e) {
      note("dirac-index ds(" + std::to_string(k) + "rho)", false, e.what());
    }
  }

  // Blattner inversion for two dominant gammas.
  std::vector<Weight> gammas{zero_weight(pair.rs.ambient)};
  if (!pair.compact_pos.empty()) gammas.push_back(pair.compact_pos.back());
  else gammas.push_back(scale(Rat(2), pair.rho_n));
  for (std::size_t i = 0; i < gammas.size(); ++i) {
    try {
      note("blattner-inversion gamma" + std::to_string(i),
           blattner_inversion_check(pair, gammas[i], cutoff));
    } catch (const std::exception& e) {
      note("blattner-inversion gamma" + std::to_string(i), false, e.what());
    }
  }

  if (g.json_out)
    std::cout << json{{"command", "charlab verify"},
                      {"pair", cp.id},
                      {"cutoff", cutoff},
                      {"checks", checks},
                      {"failures", failures},
                      {"timestamp", now_iso8601()}}
                     .dump(2)
              << "\n";
  return failures == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact Dirac-index constants on nilpotent-orbit real forms"};
  app.require_subcommand(1);
  GlobalOpts g;
  app.add_option("--catalog", g.catalog_path, "catalog JSON path (default: built in)");
  app.add_option("--threads", g.threads, "worker threads (or env DIX_THREADS)");
  app.add_flag("--json", g.json_out, "machine-readable output");

  auto* pairs = app.add_subcommand("pairs", "catalog pairs");
  pairs->add_subcommand("list", "list catalog pairs and family patterns");

  auto* orbit = app.add_subcommand("orbit", "orbit data");
  auto* describe = orbit->add_subcommand("describe", "characteristics and gradings");
  std::string id;
  int form_sel = -1;
  describe->add_option("--pair", id, "pair id")->required();
  describe->add_option("--form", form_sel, "restrict to one real form");

  auto* spr = app.add_subcommand("springer", "Springer gate");
  auto* gate = spr->add_subcommand("gate", "gate verdict with dimension trace");
  std::string gate_id;
  gate->add_option("--pair", gate_id, "pair id")->required();

  auto* constants = app.add_subcommand("constants", "the integer constants");
  auto* compute = constants->add_subcommand("compute", "compute constants");
  std::string cid, method = "dp", checkpoint_dir;
  int cform = -1, check_points = 0;
  bool resume = false;
  compute->add_option("--pair", cid, "pair id")->required();
  compute->add_option("--form", cform, "form index (default: all)");
  compute->add_option("--method", method, "dp|naive|shuffle|closed")
      ->check(CLI::IsMember({"dp", "naive", "shuffle", "closed"}));
  compute->add_option("--check-points", check_points, "extra evaluation points");
  compute->add_option("--checkpoint", checkpoint_dir, "ledger snapshot directory");
  compute->add_flag("--resume", resume, "resume from the newest snapshot");

  auto* tables = app.add_subcommand("tables", "table verification");
  auto* verify = tables->add_subcommand("verify", "replay printed table data");
  int table = 0;
  bool long_runs = false;
  verify->add_option("--table", table, "1 or 2")->required();
  verify->add_flag("--long", long_runs, "include the E8 entries");

  auto* charlab = app.add_subcommand("charlab", "character-identity lab");
  auto* cverify = charlab->add_subcommand("verify", "run the identity suite");
  std::string chid;
  int cutoff = 12;
  cverify->add_option("--pair", chid, "pair id")->required();
  cverify->add_option("--cutoff", cutoff, "height cutoff");

  auto* report = app.add_subcommand("report", "full per-pair report");
  std::string rid;
  int rform = -1;
  report->add_option("--pair", rid, "pair id")->required();
  report->add_option("--form", rform, "form index (default: all)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (pairs->parsed()) return cmd_pairs_list(g);
    if (describe->parsed()) return cmd_orbit_describe(g, id, form_sel);
    if (gate->parsed()) return cmd_springer_gate(g, gate_id);
    if (compute->parsed())
      return cmd_constants_compute(g, cid, cform, method, check_points,
                                   checkpoint_dir, resume);
    if (verify->parsed()) return cmd_tables_verify(g, table, long_runs);
    if (cverify->parsed()) return cmd_charlab_verify(g, chid, cutoff);
    if (report->parsed()) return cmd_report(g, rid, rform);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  std::cerr << "no subcommand\n";
  return 2;
}
