// Catalog of the equal-rank pairs the tool knows about. Fixed exceptional
// entries with their labelled diagrams come from the static JSON file;
// classical families are instantiated on demand from ids like "su(3,2)",
// "so(4,5)", "sp(6,R)", "so*(8)", "sp(2,2)".

#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "dix/partitions.hpp"
#include "dix/real_pair.hpp"

namespace dix {

struct DiagramLabels {
  std::map<int, int> node_labels;  // 1-based Bourbaki node -> alpha(h)
  std::optional<int> ext;          // value on the lowest-root node, if drawn
};

enum class Family { Su, SoOdd, Sp2nR, SoStar, SoEven, SpPQ, Exceptional };

struct CatalogPair {
  std::string id;
  std::vector<std::string> aliases;
  Family family = Family::Exceptional;
  LieType type = LieType::A;
  int rank = 0;
  int nc_node = 0;  // 1-based
  int p = 0, q = 0, n = 0;
  std::string k_type;                     // expected K label ("" = unchecked)
  std::optional<std::string> orbit_label; // BC label for exceptional pairs
  Partition orbit_partition;              // classical pairs
  int dim_nc = 0;                         // #Delta_n^+ (real-form orbit dim)
  int num_forms = 0;
  bool springer = true;
  std::string gate_reason;
  std::vector<DiagramLabels> diagrams;    // exceptional only
  std::vector<long long> printed_constants;
};

class Catalog {
 public:
  static Catalog load_default();
  static Catalog load_file(const std::string& path);
  static Catalog load_json_text(const std::string& text);

  // Resolves fixed ids, aliases, and classical family ids; throws
  // std::invalid_argument with the list of known ids when unknown.
  CatalogPair resolve(const std::string& id) const;

  const std::vector<CatalogPair>& fixed_pairs() const { return fixed_; }
  const std::string& version_hash() const { return version_hash_; }

 private:
  std::vector<CatalogPair> fixed_;
  std::string version_hash_;
};

// Builds the RealPair for a catalog entry and verifies its K-type label.
RealPair build_pair(const CatalogPair& cp);

}  // namespace dix
