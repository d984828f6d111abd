#include "dix/orbits.hpp"

#include <map>
#include <stdexcept>

namespace dix {

RealFormOrbit grading(const RealPair& pair, const Weight& h, int form_id,
                      std::string source) {
  RealFormOrbit f;
  f.form_id = form_id;
  f.h = h;
  f.source = std::move(source);
  const auto& rs = pair.rs;

  for (std::size_t i = 0; i < rs.positive.size(); ++i) {
    Rat lv = dot(rs.positive[i], h);
    Int z;
    if (!as_integer(lv, z))
      throw std::runtime_error("grading: non-integral level " + to_string(lv) +
                               " on root " + to_string(rs.positive[i]));
    int l = static_cast<int>(z.get_si());
    f.level.push_back(l);
    bool compact = pair.compact_flag[i];
    if (l > 0) ++f.N;
    if (l != 0) f.u_size += 1;  // counts the pair (root, -root) once below
    if (compact && l < 0) ++f.cneg;
    if (l == 0) (compact ? f.dc_l : f.dn_l).push_back(rs.positive[i]);
    if (!compact && l == 1) f.p1.push_back(rs.positive[i]);
    if (!compact && l == -1) f.p1.push_back(neg(rs.positive[i]));
  }
  f.rho_n_l = scale(Rat(1, 2), sum(f.dn_l, rs.ambient));
  f.rho_c_l = scale(Rat(1, 2), sum(f.dc_l, rs.ambient));

  // eqn dimnext: #Delta(u) - #Delta(p1) = #Delta_n^+
  if (f.u_size - static_cast<long>(f.p1.size()) !=
      static_cast<long>(pair.noncompact_pos.size()))
    throw std::runtime_error(
        "grading: dimension identity #D(u) - #D(p1) = #Dn+ fails (" +
        std::to_string(f.u_size) + " - " + std::to_string(f.p1.size()) +
        " != " + std::to_string(pair.noncompact_pos.size()) + ")");
  // degree identity: #Dc+ - #Dc+(l) - #Dn+(l) = #D(p1)
  if (static_cast<long>(pair.compact_pos.size()) -
          static_cast<long>(f.dc_l.size()) - static_cast<long>(f.dn_l.size()) !=
      static_cast<long>(f.p1.size()))
    throw std::runtime_error("grading: degree identity fails");
  return f;
}

Weight decode_characteristic(const RealPair& pair, const DiagramLabels& labels) {
  const auto& rs = pair.rs;
  const int r = rs.rank;
  const int nc = pair.noncompact_node;  // 0-based

  std::vector<Weight> rows;
  std::vector<Rat> rhs;
  for (int i = 0; i < r; ++i) {
    auto it = labels.node_labels.find(i + 1);
    if (i == nc && labels.ext) continue;  // derived from the extended node
    int val = it == labels.node_labels.end() ? 0 : it->second;
    rows.push_back(rs.simple[i]);
    rhs.push_back(Rat(val));
  }
  if (labels.ext) {
    rows.push_back(neg(rs.highest));
    rhs.push_back(Rat(*labels.ext));
  }
  if (static_cast<int>(rows.size()) != r)
    throw std::runtime_error("decode: wrong number of label equations");

  std::vector<Rat> c;
  try {
    c = solve_gram(rows, rhs);
  } catch (const std::exception&) {
    throw std::runtime_error("decode: inconsistent label system");
  }
  // h = sum c_j row_j expressed back in coordinates: solve for h in the span
  // of the simple roots
  // rows is a basis of the span; h = sum c_j rows_j with Gram solve gives the
  // dual expansion directly.
  Weight h = zero_weight(rs.ambient);
  for (int j = 0; j < r; ++j) h = add(h, scale(c[j], rows[j]));

  for (const auto& a : rs.positive) {
    Int z;
    if (!as_integer(dot(a, h), z))
      throw std::runtime_error("decode: non-integral root value on " + to_string(a));
  }
  // k-diagram dominance: printed labels are >= 0 on the compact nodes; this is
  // data, but the derived noncompact value makes (-highest)(h) the remaining
  // k-simple pairing to check when the extended node is present.
  if (labels.ext && *labels.ext < 0)
    throw std::runtime_error("decode: extended-node label must be >= 0");
  return h;
}

std::vector<RealFormOrbit> enumerate_real_forms(const CatalogPair& cp,
                                                const RealPair& pair) {
  std::vector<RealFormOrbit> out;
  auto from_classical = [&](const std::vector<ClassicalForm>& forms) {
    for (std::size_t i = 0; i < forms.size(); ++i)
      out.push_back(grading(pair, forms[i].h, static_cast<int>(i),
                            "tableau " + forms[i].note + " [" +
                                forms[i].tableau.to_string() + "]"));
  };
  switch (cp.family) {
    case Family::Su: from_classical(real_forms_su(cp.p, cp.q)); break;
    case Family::Sp2nR: from_classical(real_forms_sp2nr(cp.n)); break;
    case Family::SoOdd: from_classical(real_forms_so(2 * cp.p, 2 * cp.q + 1)); break;
    case Family::SoEven: from_classical(real_forms_so(2 * cp.p, 2 * cp.q)); break;
    case Family::SoStar: from_classical(real_forms_sostar(cp.n)); break;
    case Family::SpPQ:
      throw std::invalid_argument("pair " + cp.id +
                                  " fails the Springer gate; no real forms are enumerated");
    case Family::Exceptional: {
      for (std::size_t i = 0; i < cp.diagrams.size(); ++i) {
        Weight h = decode_characteristic(pair, cp.diagrams[i]);
        out.push_back(grading(pair, h, static_cast<int>(i), "diagram"));
      }
      break;
    }
  }
  if (cp.num_forms && static_cast<int>(out.size()) != cp.num_forms)
    throw std::runtime_error("enumerate_real_forms: " + cp.id + " produced " +
                             std::to_string(out.size()) + " forms, table says " +
                             std::to_string(cp.num_forms));
  return out;
}

ComplexOrbit complex_orbit(const CatalogPair& cp) {
  ComplexOrbit o;
  o.type = cp.type;
  if (!cp.orbit_partition.empty()) {
    o.partition = cp.orbit_partition;
    o.descriptor = to_string(cp.orbit_partition);
    auto chk = validate_partition(cp.type, cp.orbit_partition);
    if (!chk.ok)
      throw std::runtime_error("catalog orbit partition invalid for " + cp.id +
                               ": " + chk.reason);
    o.very_even = chk.very_even;
    o.dim = orbit_dimension(cp.type, cp.orbit_partition);
  } else if (cp.orbit_label) {
    o.descriptor = *cp.orbit_label;
    o.dim = 2L * cp.dim_nc;
  } else {
    throw std::invalid_argument("pair " + cp.id + " has no catalog orbit");
  }
  return o;
}

}  // namespace dix
