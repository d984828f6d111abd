#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "dix/orbits.hpp"
#include "dix/partitions.hpp"
#include "test_util.hpp"

using namespace dix;
using dixtest::entry_for;
using dixtest::pair_for;

TEST_CASE("partition classification rules") {
  CHECK_FALSE(validate_partition(LieType::C, {3, 1}).ok);   // odd parts must pair up
  CHECK(validate_partition(LieType::B, {3, 2, 2}).ok);
  CHECK(validate_partition(LieType::A, {1, 1, 1, 1}).ok);
  CHECK_FALSE(validate_partition(LieType::B, {4, 3}).ok);   // even part unpaired
  CHECK_FALSE(validate_partition(LieType::D, {3, 2, 1}).ok);
  CHECK(validate_partition(LieType::D, {2, 2}).very_even);
  CHECK_FALSE(validate_partition(LieType::D, {3, 3, 1, 1}).very_even);
  CHECK_FALSE(validate_partition(LieType::A, {1, 2}).ok);   // not decreasing
  CHECK_THROWS(validate_partition(LieType::E, {2, 1}));
}

TEST_CASE("orbit dimensions") {
  for (int p = 1; p <= 3; ++p)
    for (int q = p; q <= 4; ++q) {
      Partition part(p, 2);
      part.resize(q, 1);
      CHECK(orbit_dimension(LieType::A, part) == 2 * p * q);
    }
  for (int n = 1; n <= 5; ++n)
    CHECK(orbit_dimension(LieType::C, Partition(n, 2)) == n * (n + 1));
  CHECK(orbit_dimension(LieType::A, Partition(4, 1)) == 0);
  CHECK(orbit_dimension(LieType::B, {3, 1, 1}) == 6);
  CHECK(orbit_dimension(LieType::B, {3}) == 2);
}

TEST_CASE("su real-form characteristics match the printed pattern") {
  // q >= p: h_k = (1^k, (-1)^{p-k} | 1^{p-k}, 0^{q-p}, (-1)^k)
  for (int p = 1; p <= 3; ++p)
    for (int q = p; q <= 4; ++q) {
      auto forms = real_forms_su(p, q);
      REQUIRE(static_cast<int>(forms.size()) == p + 1);
      for (int k = 0; k <= p; ++k) {
        Weight expect;
        for (int i = 0; i < k; ++i) expect.push_back(Rat(1));
        for (int i = 0; i < p - k; ++i) expect.push_back(Rat(-1));
        for (int i = 0; i < p - k; ++i) expect.push_back(Rat(1));
        for (int i = 0; i < q - p; ++i) expect.push_back(Rat(0));
        for (int i = 0; i < k; ++i) expect.push_back(Rat(-1));
        CHECK(forms[k].h == expect);
      }
    }
  // the printed su(2,1)-pattern instance: blocks (1|2), k=1 gives (1 | 0, -1)
  auto f12 = real_forms_su(1, 2);
  CHECK(f12[1].h == Weight{Rat(1), Rat(0), Rat(-1)});
}

TEST_CASE("real-form counts match the table across the sweep") {
  auto count = [](const std::string& id) {
    auto cp = entry_for(id);
    auto pair = dix::build_pair(cp);
    return std::pair<int, int>{static_cast<int>(enumerate_real_forms(cp, pair).size()),
                               cp.num_forms};
  };
  for (int p = 1; p <= 7; ++p)
    for (int q = 1; p + q <= 8; ++q) {
      auto [got, want] = count("su(" + std::to_string(p) + "," + std::to_string(q) + ")");
      CHECK(got == want);
      CHECK(want == std::min(p, q) + 1);
    }
  for (int n = 1; n <= 6; ++n) {
    auto [got, want] = count("sp(" + std::to_string(2 * n) + ",R)");
    CHECK(got == n + 1);
    CHECK(want == n + 1);
  }
  for (int p = 1; p <= 5; ++p)
    for (int q = std::max(1, p - 1); p + q <= 6; ++q) {
      auto [got, want] = count("so(" + std::to_string(2 * p) + "," + std::to_string(2 * q + 1) + ")");
      CHECK(got == (q > p - 1 ? 3 : 2));
      CHECK(got == want);
    }
  for (int p = 1; p <= 3; ++p)
    for (int q = p; p + q <= 6; ++q) {
      if (p + q < 3) continue;
      auto [got, want] = count("so(" + std::to_string(2 * p) + "," + std::to_string(2 * q) + ")");
      CHECK(got == (q == p ? 4 : 3));
      CHECK(got == want);
    }
  for (int n = 2; n <= 6; ++n) {
    auto [got, want] = count("so*(" + std::to_string(2 * n) + ")");
    CHECK(got == (n % 2 == 0 ? n / 2 + 1 : (n + 1) / 2));
    CHECK(got == want);
  }
}

TEST_CASE("su N-formula from the worked computation") {
  for (int p = 1; p <= 3; ++p)
    for (int q = p; p + q <= 7; ++q) {
      auto cp = entry_for("su(" + std::to_string(p) + "," + std::to_string(q) + ")");
      auto pair = dix::build_pair(cp);
      auto forms = enumerate_real_forms(cp, pair);
      for (int k = 0; k <= p; ++k)
        CHECK(forms[k].N == k * q + (p - k) * (q - p + k) + (q - p) * k);
    }
}

TEST_CASE("grading identities hold on every catalog form") {
  std::vector<std::string> ids{"g2",      "f4",      "e6-a5a1", "e6-d5c", "e7-d6a1",
                               "e7-a7",   "e7-e6xC", "e8-e7a1", "e8-d8",  "su(3,4)",
                               "sp(8,R)", "so(4,7)", "so(6,6)", "so*(10)"};
  for (const auto& id : ids) {
    auto cp = entry_for(id);
    auto pair = dix::build_pair(cp);
    // enumerate_real_forms throws if either identity fails
    auto forms = enumerate_real_forms(cp, pair);
    for (const auto& f : forms) {
      CHECK(f.u_size - static_cast<long>(f.p1.size()) ==
            static_cast<long>(pair.noncompact_pos.size()));
      CHECK(f.N >= 0);
    }
  }
}

TEST_CASE("su(p,p) form k=0 has the trivial grading") {
  auto cp = entry_for("su(3,3)");
  auto pair = dix::build_pair(cp);
  auto f = enumerate_real_forms(cp, pair)[0];
  CHECK(f.dn_l.empty());
  CHECK(f.p1.empty());
  CHECK(f.N == 0);
}

TEST_CASE("su(2,2) k=1 level-zero noncompact roots match the worked description") {
  auto cp = entry_for("su(2,2)");
  auto pair = dix::build_pair(cp);
  auto f = enumerate_real_forms(cp, pair)[1];
  // Delta_n^+(l) = {e_1-e_3} cup {e_2-e_4} at p=q=2, k=1
  REQUIRE(f.dn_l.size() == 2);
  std::set<Weight, WeightLess> got(f.dn_l.begin(), f.dn_l.end());
  CHECK(got.count(Weight{Rat(1), Rat(0), Rat(-1), Rat(0)}) == 1);
  CHECK(got.count(Weight{Rat(0), Rat(1), Rat(0), Rat(-1)}) == 1);
}

TEST_CASE("decode: g2 labels give the dim-4 real form") {
  auto cp = entry_for("g2");
  auto pair = dix::build_pair(cp);
  Weight h = decode_characteristic(pair, cp.diagrams[0]);
  auto f = grading(pair, h);
  CHECK(f.u_size - static_cast<long>(f.p1.size()) == 4);
}

TEST_CASE("decode: e8-d8 labels give the dim-64 real form") {
  auto cp = entry_for("e8-d8");
  auto pair = dix::build_pair(cp);
  Weight h = decode_characteristic(pair, cp.diagrams[0]);
  auto f = grading(pair, h);
  CHECK(f.u_size - static_cast<long>(f.p1.size()) == 64);
}

TEST_CASE("decode failure modes are distinct") {
  auto cp = entry_for("g2");
  auto pair = dix::build_pair(cp);
  // non-integral: alpha_1(h) = 1/2 is impossible to request via int labels,
  // so corrupt instead with labels making levels non-integral is not
  // representable; exercise the invariant failure path: labels that give an
  // h violating the dimension identity for this catalog orbit.
  DiagramLabels bad;
  bad.node_labels[1] = 2;  // compact node
  bad.ext = 2;
  Weight h = decode_characteristic(pair, bad);
  CHECK_THROWS_AS(grading(pair, h), std::runtime_error);
  DiagramLabels neg_ext;
  neg_ext.node_labels[1] = 1;
  neg_ext.ext = -3;
  CHECK_THROWS_AS(decode_characteristic(pair, neg_ext), std::runtime_error);
}

TEST_CASE("catalog orbits satisfy dim(O^C) = 2 #Dn+") {
  for (const char* id : {"g2", "f4", "e6-a5a1", "e6-d5c", "e7-d6a1", "e7-a7",
                         "e7-e6xC", "e8-e7a1", "e8-d8", "su(2,3)", "sp(6,R)",
                         "so(2,5)", "so(4,4)", "so*(8)", "so*(6)"}) {
    auto cp = entry_for(id);
    auto pair = dix::build_pair(cp);
    auto orbit = complex_orbit(cp);
    CHECK(orbit.dim == 2L * static_cast<long>(pair.noncompact_pos.size()));
  }
}

TEST_CASE("signed tableaux satisfy signature counts") {
  auto forms = real_forms_su(2, 3);
  for (const auto& f : forms) {
    CHECK(f.tableau.shape_valid());
    CHECK(f.tableau.sign_count('+') == 2);
    CHECK(f.tableau.sign_count('-') == 3);
  }
  for (const auto& f : real_forms_so(4, 5)) {
    CHECK(f.tableau.shape_valid());
    CHECK(f.tableau.sign_count('+') == 4);
    CHECK(f.tableau.sign_count('-') == 5);
  }
}
