#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <vector>

#include "causalab/statistics.hpp"

using namespace causalab;
using Catch::Approx;

namespace {

// Deliberately independent re-derivation of the Pearson statistic for an
// X - Y - Z grouping: E_xyz = N_xy N_yz / N_y, df = (dx - 1) dy (dz - 1).
struct BruteChi2 {
  double statistic = 0.0;
  int df = 0;
};

int card_of(const CountsTable& t, const std::vector<int>& vars) {
  int c = 1;
  for (int v : vars) c *= t.cards[v];
  return c;
}

int group_index(const std::array<int, 4>& cell, const CountsTable& t,
                const std::vector<int>& vars) {
  int idx = 0;
  for (int v : vars) idx = idx * t.cards[v] + cell[v];
  return idx;
}

BruteChi2 brute_chi2(const CountsTable& t, const VarGrouping& g) {
  const int dx = card_of(t, g.x);
  const int dy = card_of(t, g.y);
  const int dz = card_of(t, g.z);
  std::vector<double> nxy(dx * dy, 0.0), nyz(dy * dz, 0.0), ny(dy, 0.0);
  std::vector<double> nxyz(dx * dy * dz, 0.0);
  for (int j1 = 0; j1 < t.cards[0]; ++j1)
    for (int k1 = 0; k1 < t.cards[1]; ++k1)
      for (int j2 = 0; j2 < t.cards[2]; ++j2)
        for (int k2 = 0; k2 < t.cards[3]; ++k2) {
          const std::array<int, 4> cell = {j1, k1, j2, k2};
          const double n = static_cast<double>(t.at(j1, k1, j2, k2));
          const int x = group_index(cell, t, g.x);
          const int y = group_index(cell, t, g.y);
          const int z = group_index(cell, t, g.z);
          nxy[x * dy + y] += n;
          nyz[y * dz + z] += n;
          ny[y] += n;
          nxyz[(x * dy + y) * dz + z] += n;
        }
  BruteChi2 out;
  out.df = (dx - 1) * dy * (dz - 1);
  for (int x = 0; x < dx; ++x)
    for (int y = 0; y < dy; ++y)
      for (int z = 0; z < dz; ++z) {
        if (ny[y] <= 0.0) continue;
        const double e = nxy[x * dy + y] * nyz[y * dz + z] / ny[y];
        if (e <= 0.0) continue;
        const double d = nxyz[(x * dy + y) * dz + z] - e;
        out.statistic += d * d / e;
      }
  return out;
}

CountsTable random_table(std::uint64_t seed, long long scale) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long long> cell(0, scale);
  CountsTable t;
  t.cards = {2, 2, 2, 2};
  t.n.assign(16, 0);
  for (auto& v : t.n) v = cell(rng);
  return t;
}

}  // namespace

TEST_CASE("chi2_primitive_test matches the brute-force statistic", "[statistics]") {
  const std::vector<MarkovCondition> prims = {
      MarkovCondition::Independence,    MarkovCondition::ChainK1J1J2,
      MarkovCondition::ChainJ1K1J2,     MarkovCondition::ChainJ1K2J2,
      MarkovCondition::ChainJ1K1_J2_K2, MarkovCondition::ChainK1_J1_J2K2};
  for (std::uint64_t seed = 1; seed <= 20; ++seed) {
    const CountsTable t = random_table(seed, 500);
    for (MarkovCondition prim : prims) {
      const Chi2Result got = chi2_primitive_test(t, prim, 0.05);
      const BruteChi2 want = brute_chi2(t, grouping_of(prim));
      INFO("seed " << seed << " condition " << to_string(prim));
      REQUIRE(got.df == want.df);
      REQUIRE(got.statistic == Approx(want.statistic).margin(1e-10));
    }
  }
}

TEST_CASE("chi2_cdf reproduces the 0.95 quantiles", "[statistics]") {
  REQUIRE(chi2_cdf(5.991, 2) == Approx(0.95).margin(1e-4));
  REQUIRE(chi2_cdf(12.592, 6) == Approx(0.95).margin(1e-4));
  REQUIRE(chi2_cdf(16.919, 9) == Approx(0.95).margin(1e-4));
}

TEST_CASE("chi2_quantile inverts chi2_cdf", "[statistics]") {
  for (int df : {1, 2, 6, 9, 15}) {
    const double q = chi2_quantile(0.95, df);
    REQUIRE(chi2_cdf(q, df) == Approx(0.95).margin(1e-10));
  }
  REQUIRE(chi2_quantile(0.95, 9) == Approx(16.919).margin(2e-3));
}

TEST_CASE("critical value comes from the requested alpha", "[statistics]") {
  const CountsTable t = random_table(3, 500);
  const Chi2Result r5 = chi2_primitive_test(t, MarkovCondition::Independence, 0.05);
  const Chi2Result r1 = chi2_primitive_test(t, MarkovCondition::Independence, 0.01);
  REQUIRE(r5.df == 9);
  REQUIRE(r5.critical == Approx(16.919).margin(2e-3));
  REQUIRE(r1.critical > r5.critical);
  REQUIRE(r5.accepted == (r5.statistic <= r5.critical));
}

TEST_CASE("joint distribution indexing is row-major over (j1,k1,j2,k2)",
          "[statistics]") {
  JointDistribution d;
  d.cards = {2, 2, 2, 2};
  d.p.assign(16, 0.0);
  REQUIRE(d.index(0, 0, 0, 0) == 0);
  REQUIRE(d.index(0, 0, 0, 1) == 1);
  REQUIRE(d.index(0, 0, 1, 0) == 2);
  REQUIRE(d.index(0, 1, 0, 0) == 4);
  REQUIRE(d.index(1, 0, 0, 0) == 8);
  d.at(1, 0, 1, 1) = 1.0;
  REQUIRE(d.p[11] == 1.0);
  REQUIRE_NOTHROW(d.validate());
  d.at(1, 0, 1, 1) = 0.5;
  REQUIRE_THROWS_AS(d.validate(), std::invalid_argument);
}

TEST_CASE("sampling preserves the total and the seed determines the draw",
          "[statistics]") {
  JointDistribution d;
  d.cards = {2, 2, 2, 2};
  d.p.assign(16, 1.0 / 16.0);
  const CountsTable a = sample_counts(d, 100000, 42);
  const CountsTable b = sample_counts(d, 100000, 42);
  const CountsTable c = sample_counts(d, 100000, 43);
  REQUIRE(a.total() == 100000);
  REQUIRE(a.n == b.n);
  REQUIRE(a.n != c.n);
  const JointDistribution f = frequencies(a);
  for (std::size_t i = 0; i < f.p.size(); ++i)
    REQUIRE(f.p[i] == Approx(1.0 / 16.0).margin(0.01));
}

TEST_CASE("exact deviation vanishes on factorized distributions", "[statistics]") {
  JointDistribution d;
  d.cards = {2, 2, 2, 2};
  d.p.assign(16, 0.0);
  const double pj1[2] = {0.3, 0.7};
  const double pk1[2][2] = {{0.6, 0.4}, {0.2, 0.8}};
  const double pj2[2] = {0.55, 0.45};
  const double pk2[2][2] = {{0.9, 0.1}, {0.35, 0.65}};
  for (int j1 = 0; j1 < 2; ++j1)
    for (int k1 = 0; k1 < 2; ++k1)
      for (int j2 = 0; j2 < 2; ++j2)
        for (int k2 = 0; k2 < 2; ++k2)
          d.at(j1, k1, j2, k2) = pj1[j1] * pk1[j1][k1] * pj2[j2] * pk2[j2][k2];
  REQUIRE(exact_ci_deviation(d, MarkovCondition::Independence) < 1e-14);
  REQUIRE(exact_ci_deviation(d, MarkovCondition::ChainJ1K1_J2_K2) < 1e-14);
  REQUIRE(exact_ci_deviation(d, MarkovCondition::ChainK1J1J2K2) < 1e-14);
}

TEST_CASE("exact deviation detects a correlated pair", "[statistics]") {
  JointDistribution d;
  d.cards = {2, 2, 2, 2};
  d.p.assign(16, 0.0);
  // j2 copies k1, so (J1,K1) and (J2,K2) are dependent
  for (int j1 = 0; j1 < 2; ++j1)
    for (int k1 = 0; k1 < 2; ++k1)
      for (int k2 = 0; k2 < 2; ++k2)
        d.at(j1, k1, k1, k2) = 0.25 * 0.5;
  // the copy construction gives |P(x,z) - P(x) P(z)| = 0.0625 at its peak
  REQUIRE(exact_ci_deviation(d, MarkovCondition::Independence) > 0.05);
  REQUIRE(exact_ci_deviation(d, MarkovCondition::ChainJ1K1_J2_K2) < 1e-14);
}

TEST_CASE("composite conditions aggregate their primitive parts", "[statistics]") {
  const CountsTable t = random_table(9, 400);
  const MarkovTestResult r =
      chi2_condition_test(t, MarkovCondition::ChainK1J1J2K2, 0.05);
  REQUIRE(r.parts.size() == 2);
  REQUIRE(r.parts[0].primitive == MarkovCondition::ChainK1J1J2);
  REQUIRE(r.parts[1].primitive == MarkovCondition::ChainJ1K1_J2_K2);
  bool all = true;
  double minp = 1.0;
  for (const auto& part : r.parts) {
    all = all && part.result.accepted;
    minp = std::min(minp, part.result.p_value);
  }
  REQUIRE(r.accepted == all);
  REQUIRE(r.min_p == Approx(minp));

  const MarkovTestResult single =
      chi2_condition_test(t, MarkovCondition::Independence, 0.05);
  REQUIRE(single.parts.size() == 1);
}

TEST_CASE("primitive decomposition matches the condition tags", "[statistics]") {
  REQUIRE(is_primitive(MarkovCondition::Independence));
  REQUIRE(is_primitive(MarkovCondition::ChainJ1K1_J2_K2));
  REQUIRE_FALSE(is_primitive(MarkovCondition::ChainK1J1J2K2));
  const auto parts = primitive_conditions(MarkovCondition::ChainK1J1K2J2);
  REQUIRE(parts.size() == 2);
  REQUIRE(primitive_conditions(MarkovCondition::Independence).size() == 1);
  REQUIRE(to_string(MarkovCondition::Independence) == "indep(J1K1;J2K2)");
}

TEST_CASE("structurally empty rows keep the statistic finite", "[statistics]") {
  CountsTable t;
  t.cards = {2, 2, 2, 2};
  t.n.assign(16, 0);
  // only j1 = 0 ever occurs
  for (int k1 = 0; k1 < 2; ++k1)
    for (int j2 = 0; j2 < 2; ++j2)
      for (int k2 = 0; k2 < 2; ++k2) t.at(0, k1, j2, k2) = 50 + 7 * j2 + k2;
  const Chi2Result r = chi2_primitive_test(t, MarkovCondition::Independence, 0.05);
  REQUIRE(std::isfinite(r.statistic));
  REQUIRE(r.df == 9);
  REQUIRE_THROWS_AS(
      chi2_primitive_test(CountsTable{{2, 2, 2, 2}, std::vector<long long>(16, 0)},
                          MarkovCondition::Independence, 0.05),
      std::invalid_argument);
}
