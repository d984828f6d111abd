#include "dix/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <functional>
#include <sstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace dix {

using nlohmann::json;

extern const char* kDefaultCatalogJson;  // generated from data/catalog.json

namespace {

std::string strip(const std::string& s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out += std::tolower(c);
  return out;
}

// "su(3,2)" -> {"su", {3,2}}; "sp(6,r)" -> {"sp", {6,-1}} with r flag, etc.
struct ParsedId {
  std::string head;
  std::vector<int> args;
  bool r_flag = false;
};

std::optional<ParsedId> parse_family_id(const std::string& raw) {
  std::string s = strip(raw);
  auto lp = s.find('(');
  if (lp == std::string::npos || s.back() != ')') return std::nullopt;
  ParsedId out;
  out.head = s.substr(0, lp);
  std::string body = s.substr(lp + 1, s.size() - lp - 2);
  std::istringstream is(body);
  std::string tok;
  while (std::getline(is, tok, ',')) {
    if (tok == "r") {
      out.r_flag = true;
    } else {
      try {
        out.args.push_back(std::stoi(tok));
      } catch (...) {
        return std::nullopt;
      }
    }
  }
  return out;
}

Partition su_orbit(int p, int q) {
  Partition part(std::min(p, q), 2);
  part.resize(std::min(p, q) + std::abs(p - q), 1);
  return part;
}

}  // namespace

Catalog Catalog::load_default() { return load_json_text(kDefaultCatalogJson); }

Catalog Catalog::load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open catalog file: " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return load_json_text(ss.str());
}

Catalog Catalog::load_json_text(const std::string& text) {
  Catalog cat;
  json j = json::parse(text);
  {
    std::ostringstream h;
    h << std::hex << std::hash<std::string>{}(text);
    cat.version_hash_ = h.str();
  }
  for (const auto& e : j.at("exceptional")) {
    CatalogPair cp;
    cp.id = e.at("id").get<std::string>();
    if (e.contains("aliases"))
      cp.aliases = e.at("aliases").get<std::vector<std::string>>();
    cp.family = Family::Exceptional;
    cp.type = lie_type_from_string(e.at("lie_type").get<std::string>());
    cp.rank = e.at("rank").get<int>();
    cp.nc_node = e.at("noncompact_node").get<int>();
    cp.k_type = e.at("k_type").get<std::string>();
    cp.dim_nc = e.at("dim_nc").get<int>();
    if (!e.at("orbit").is_null()) cp.orbit_label = e.at("orbit").get<std::string>();
    cp.springer = e.at("springer").get<bool>();
    if (e.contains("gate_reason")) cp.gate_reason = e.at("gate_reason").get<std::string>();
    for (const auto& f : e.at("forms")) {
      DiagramLabels d;
      for (auto it = f.at("labels").begin(); it != f.at("labels").end(); ++it)
        d.node_labels[std::stoi(it.key())] = it.value().get<int>();
      if (f.contains("ext")) d.ext = f.at("ext").get<int>();
      cp.diagrams.push_back(std::move(d));
    }
    cp.num_forms = static_cast<int>(cp.diagrams.size());
    if (e.contains("constants"))
      cp.printed_constants = e.at("constants").get<std::vector<long long>>();
    cat.fixed_.push_back(std::move(cp));
  }
  return cat;
}

CatalogPair Catalog::resolve(const std::string& id) const {
  std::string want = strip(id);
  for (const auto& cp : fixed_) {
    if (strip(cp.id) == want) return cp;
    for (const auto& a : cp.aliases)
      if (strip(a) == want) return cp;
  }
  auto parsed = parse_family_id(id);
  if (parsed) {
    const auto& pid = *parsed;
    auto need = [&](std::size_t k) {
      if (pid.args.size() != k)
        throw std::invalid_argument("bad parameters in pair id '" + id + "'");
    };
    if (pid.head == "su") {
      need(2);
      int p = pid.args[0], q = pid.args[1];
      if (p < 1 || q < 1) throw std::invalid_argument("su(p,q) needs p,q >= 1");
      CatalogPair cp;
      cp.id = "su(" + std::to_string(p) + "," + std::to_string(q) + ")";
      cp.family = Family::Su;
      cp.type = LieType::A;
      cp.rank = p + q - 1;
      cp.nc_node = p;
      cp.p = p;
      cp.q = q;
      cp.orbit_partition = su_orbit(p, q);
      cp.dim_nc = p * q;
      cp.num_forms = std::min(p, q) + 1;
      return cp;
    }
    if (pid.head == "sp" && pid.r_flag) {
      need(1);
      int twon = pid.args[0];
      if (twon < 2 || twon % 2 != 0)
        throw std::invalid_argument("sp(2n,R) needs even 2n >= 2");
      int n = twon / 2;
      CatalogPair cp;
      cp.id = "sp(" + std::to_string(twon) + ",R)";
      cp.family = Family::Sp2nR;
      cp.type = LieType::C;
      cp.rank = n;
      cp.nc_node = n;
      cp.n = n;
      cp.orbit_partition = Partition(n, 2);
      cp.dim_nc = n * (n + 1) / 2;
      cp.num_forms = n + 1;
      return cp;
    }
    if (pid.head == "sp") {
      need(2);
      int p = pid.args[0], q = pid.args[1];
      if (p < 1 || q < 1) throw std::invalid_argument("sp(p,q) needs p,q >= 1");
      CatalogPair cp;
      cp.id = "sp(" + std::to_string(p) + "," + std::to_string(q) + ")";
      cp.family = Family::SpPQ;
      cp.type = LieType::C;
      cp.rank = p + q;
      cp.nc_node = p;
      cp.p = p;
      cp.q = q;
      cp.springer = false;
      cp.gate_reason =
          "the symbol of the Macdonald parameter (0, [2^p,1^{q-p}]) does not "
          "correspond to a nilpotent orbit of sp(2(p+q)); sigma_K is not a "
          "Springer representation";
      cp.dim_nc = 2 * p * q;  // crossing e_i-e_j and e_i+e_j
      cp.num_forms = 0;
      return cp;
    }
    if (pid.head == "so*" || pid.head == "so\xe2\x8b\x86" || pid.head == "sostar") {
      need(1);
      int twon = pid.args[0];
      if (twon < 4 || twon % 2 != 0)
        throw std::invalid_argument("so*(2n) needs even 2n >= 4");
      int n = twon / 2;
      CatalogPair cp;
      cp.id = "so*(" + std::to_string(twon) + ")";
      cp.family = Family::SoStar;
      cp.type = LieType::D;
      cp.rank = n;
      cp.nc_node = n;
      cp.n = n;
      if (n % 2 == 0) {
        cp.orbit_partition = Partition(n, 2);
        cp.num_forms = n / 2 + 1;
      } else {
        cp.orbit_partition = Partition(n - 1, 2);
        cp.orbit_partition.resize(n + 1, 1);
        cp.num_forms = (n + 1) / 2;
      }
      cp.dim_nc = n * (n - 1) / 2;
      return cp;
    }
    if (pid.head == "so") {
      need(2);
      int a = pid.args[0], b = pid.args[1];
      if (a % 2 != 0) std::swap(a, b);
      if (a % 2 != 0) throw std::invalid_argument("so(a,b) needs an even block");
      int p = a / 2;
      CatalogPair cp;
      cp.family = b % 2 ? Family::SoOdd : Family::SoEven;
      cp.id = "so(" + std::to_string(a) + "," + std::to_string(b) + ")";
      cp.p = p;
      cp.q = b / 2;
      if (b % 2) {
        if (!(cp.q >= p - 1 && p >= 1))
          throw std::invalid_argument("so(2p,2q+1) needs q >= p-1 >= 0");
        cp.type = LieType::B;
        cp.rank = p + cp.q;
        cp.orbit_partition = Partition{3};
        cp.orbit_partition.insert(cp.orbit_partition.end(), 2 * p - 2, 2);
        cp.orbit_partition.insert(cp.orbit_partition.end(), 2 * (cp.q - p) + 2, 1);
        cp.dim_nc = p * (2 * cp.q + 1);
        cp.num_forms = cp.q > p - 1 ? 3 : 2;
      } else {
        if (!(cp.q >= p && p >= 1))
          throw std::invalid_argument("so(2p,2q) needs q >= p >= 1");
        cp.type = LieType::D;
        cp.rank = p + cp.q;
        cp.orbit_partition = Partition{3};
        cp.orbit_partition.insert(cp.orbit_partition.end(), 2 * p - 2, 2);
        cp.orbit_partition.insert(cp.orbit_partition.end(), 2 * (cp.q - p) + 1, 1);
        cp.dim_nc = 2 * p * cp.q;
        cp.num_forms = cp.q == p ? 4 : 3;
      }
      cp.nc_node = p;
      if (cp.type == LieType::D && cp.rank < 3)
        throw std::invalid_argument("so(2p,2q) needs rank p+q >= 3");
      return cp;
    }
  }
  std::string known = "g2 f4 f4-spin9 e6-a5a1 e6-d5c e7-d6a1 e7-a7 e7-e6xC "
                      "e8-e7a1 e8-d8 su(p,q) so(2p,2q+1) so(2p,2q) sp(2n,R) "
                      "so*(2n) sp(p,q)";
  throw std::invalid_argument("unknown pair id '" + id + "'; known: " + known);
}

RealPair build_pair(const CatalogPair& cp) {
  RealPair pair = make_real_pair(build_root_system(cp.type, cp.rank), cp.nc_node);
  if (!cp.k_type.empty() && pair.k_type_label != cp.k_type)
    throw std::runtime_error("catalog corruption: pair " + cp.id + " has K-type " +
                             pair.k_type_label + ", expected " + cp.k_type);
  if (cp.dim_nc && static_cast<int>(pair.noncompact_pos.size()) != cp.dim_nc)
    throw std::runtime_error("catalog corruption: pair " + cp.id +
                             " has #Delta_n^+ = " +
                             std::to_string(pair.noncompact_pos.size()) +
                             ", expected " + std::to_string(cp.dim_nc));
  return pair;
}

}  // namespace dix
