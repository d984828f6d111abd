#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "dix/springer.hpp"
#include "test_util.hpp"

using namespace dix;
using dixtest::entry_for;
using dixtest::pair_for;

TEST_CASE("macdonald parameters") {
  auto su35 = macdonald_parameter(entry_for("su(3,5)"));
  CHECK_FALSE(su35.is_pair);
  CHECK(su35.beta == Partition{2, 2, 2, 1, 1});

  auto sp22 = macdonald_parameter(entry_for("sp(2,2)"));
  CHECK(sp22.is_pair);
  CHECK(sp22.alpha.empty());
  CHECK(sp22.beta == Partition{2, 2});

  auto su11 = macdonald_parameter(entry_for("su(1,1)"));
  CHECK(su11.beta == Partition{2});

  CHECK_THROWS_AS(macdonald_parameter(entry_for("g2")), std::domain_error);
  CHECK_THROWS_AS(macdonald_parameter(entry_for("so(2,3)")), std::domain_error);
}

TEST_CASE("symbol examples") {
  MacdonaldParameter mp;
  mp.is_pair = true;
  mp.beta = {2, 1};
  auto s = symbol_c(mp, 3);
  CHECK(s.top == std::vector<int>{0, 2, 4});
  CHECK(s.bottom == std::vector<int>{2, 5});

  mp.beta = {2};
  s = symbol_c(mp, 2);
  CHECK(s.top == std::vector<int>{0, 2});
  CHECK(s.bottom == std::vector<int>{3});

  mp.beta = {};
  s = symbol_c(mp, 0);
  CHECK(s.top == std::vector<int>{0});
  CHECK(s.bottom.empty());

  mp.beta = {2, 1};
  CHECK_THROWS_AS(symbol_c(mp, 5), std::invalid_argument);
}

TEST_CASE("symbols reproduce the printed Sp(p,q) arrays for p <= q <= 6") {
  for (int p = 1; p <= 6; ++p)
    for (int q = p; q <= 6; ++q) {
      MacdonaldParameter mp;
      mp.is_pair = true;
      mp.beta = Partition(p, 2);
      mp.beta.resize(q, 1);
      auto s = symbol_c(mp, p + q);
      std::vector<int> top, bottom;
      for (int i = 0; i <= q; ++i) top.push_back(2 * i);
      if (q > p) {
        for (int i = 1; i <= q - p; ++i) bottom.push_back(2 * i);
        for (int i = q - p + 1; i <= q; ++i) bottom.push_back(2 * i + 1);
      } else {
        for (int i = 1; i <= q; ++i) bottom.push_back(2 * i + 1);
      }
      CHECK(s.top == top);
      CHECK(s.bottom == bottom);
      CHECK(s.rows_strictly_increasing());
    }
}

TEST_CASE("symbol rows strictly increase for random partition pairs") {
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> part(0, 5);
  for (int trial = 0; trial < 200; ++trial) {
    MacdonaldParameter mp;
    mp.is_pair = true;
    int n = 0;
    for (int i = 0; i < 4; ++i) {
      int v = part(rng);
      if (v) mp.alpha.push_back(v), n += v;
    }
    for (int i = 0; i < 4; ++i) {
      int v = part(rng);
      if (v) mp.beta.push_back(v), n += v;
    }
    std::sort(mp.alpha.rbegin(), mp.alpha.rend());
    std::sort(mp.beta.rbegin(), mp.beta.rend());
    auto s = symbol_c(mp, n);
    CHECK(s.rows_strictly_increasing());
  }
}

TEST_CASE("springer gate verdicts") {
  for (int p = 1; p <= 3; ++p)
    for (int q = p; q <= 4; ++q) {
      auto cp = entry_for("su(" + std::to_string(p) + "," + std::to_string(q) + ")");
      auto g = springer_gate(cp, dix::build_pair(cp));
      CHECK(g.is_springer);
      REQUIRE(g.orbit.has_value());
      Partition want(p, 2);
      want.resize(q, 1);
      CHECK(g.orbit->partition == want);
    }
  {
    auto cp = entry_for("sp(2,2)");
    auto g = springer_gate(cp, dix::build_pair(cp));
    CHECK_FALSE(g.is_springer);
    CHECK_FALSE(g.reason.empty());
  }
  {
    auto cp = entry_for("f4-spin9");
    auto g = springer_gate(cp, dix::build_pair(cp));
    CHECK_FALSE(g.is_springer);
    CHECK_FALSE(g.reason.empty());
  }
  for (const char* id : {"g2", "f4", "e6-a5a1", "e7-a7", "e8-d8", "sp(8,R)",
                         "so(2,7)", "so*(12)"}) {
    auto cp = entry_for(id);
    auto g = springer_gate(cp, dix::build_pair(cp));
    CHECK(g.is_springer);
    CHECK(g.dim_orbit == g.dim_expected);
  }
}
