// Joint outcome distributions over (J1, K1, J2, K2), multinomial sampling,
// exact conditional-independence deviations, and chi-squared tests for the
// Markov conditions that separate the strategy classes.

#ifndef CAUSALAB_STATISTICS_HPP
#define CAUSALAB_STATISTICS_HPP

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace causalab {

// Variable ids used in groupings: 0 = J1, 1 = K1, 2 = J2, 3 = K2.
// J are measurement outcomes, K preparation choices; player 1 owns (J1, K1).

struct JointDistribution {
  std::array<int, 4> cards{};   // (n_j1, n_k1, n_j2, n_k2)
  std::vector<double> p;        // row-major over (j1, k1, j2, k2), 0-based

  std::size_t size() const { return p.size(); }
  int index(int j1, int k1, int j2, int k2) const {
    return ((j1 * cards[1] + k1) * cards[2] + j2) * cards[3] + k2;
  }
  double at(int j1, int k1, int j2, int k2) const { return p[index(j1, k1, j2, k2)]; }
  double& at(int j1, int k1, int j2, int k2) { return p[index(j1, k1, j2, k2)]; }

  // Entries at least -1e-12 (clamped to 0), total within tol of 1.
  void validate(double tol = 1e-10) const;
};

struct CountsTable {
  std::array<int, 4> cards{};
  std::vector<long long> n;

  std::size_t size() const { return n.size(); }
  int index(int j1, int k1, int j2, int k2) const {
    return ((j1 * cards[1] + k1) * cards[2] + j2) * cards[3] + k2;
  }
  long long at(int j1, int k1, int j2, int k2) const { return n[index(j1, k1, j2, k2)]; }
  long long& at(int j1, int k1, int j2, int k2) { return n[index(j1, k1, j2, k2)]; }
  long long total() const;
};

// Multinomial draw of n_samples outcomes, deterministic per seed. n_samples
// must be positive.
CountsTable sample_counts(const JointDistribution& dist, long long n_samples,
                          std::uint64_t seed);

JointDistribution frequencies(const CountsTable& counts);

// Conditional-independence conditions between the players' variables.
// Primitives first; the chains below them are conjunctions of primitives.
enum class MarkovCondition {
  Independence,     // (J1,K1) independent of (J2,K2)
  ChainK1J1J2,      // K1 - J1 - J2
  ChainJ1K1J2,      // J1 - K1 - J2
  ChainJ1K2J2,      // J1 - K2 - J2
  ChainJ1K1_J2_K2,  // (J1,K1) - J2 - K2
  ChainK1_J1_J2K2,  // K1 - J1 - (J2,K2)
  ChainJ1K1J2K2,    // J1 - K1 - J2 - K2
  ChainK1J1J2K2,    // K1 - J1 - J2 - K2
  ChainK1J1K2J2,    // K1 - J1 - K2 - J2
};

bool is_primitive(MarkovCondition c);
std::vector<MarkovCondition> primitive_conditions(MarkovCondition c);
std::string to_string(MarkovCondition c);

// X - Y - Z grouping of a primitive condition; empty y means plain
// independence of the x and z groups. Unused variables are marginalized.
struct VarGrouping {
  std::vector<int> x, y, z;
};
VarGrouping grouping_of(MarkovCondition primitive);

// Largest absolute deviation from the conditional-independence identity:
//   max over cells, skipping P(y) = 0, of |P(x,z|y) - P(x|y) P(z|y)|.
// Composite conditions return the maximum over their primitives.
double exact_ci_deviation(const JointDistribution& dist, MarkovCondition cond);

struct Chi2Result {
  double statistic = 0.0;
  int df = 0;
  double p_value = 0.0;
  double critical = 0.0;   // quantile of 1 - alpha at df
  bool accepted = false;   // statistic <= critical
};

// Pearson test of one primitive condition on grouped counts. Expected cell
// counts below zero never occur; empty expected cells contribute zero and do
// not reduce df. Throws std::invalid_argument on an all-zero table.
Chi2Result chi2_primitive_test(const CountsTable& counts, MarkovCondition primitive,
                               double alpha);

struct ConditionPart {
  MarkovCondition primitive;
  Chi2Result result;
};

struct MarkovTestResult {
  MarkovCondition condition;
  std::vector<ConditionPart> parts;
  bool accepted = false;  // all parts accepted
  double min_p = 1.0;
};

MarkovTestResult chi2_condition_test(const CountsTable& counts, MarkovCondition cond,
                                     double alpha);

// Regularized lower incomplete gamma at (df/2, x/2); series expansion on one
// side of the argument split, continued fraction on the other.
double chi2_cdf(double x, int df);
double chi2_quantile(double p, int df);

}  // namespace causalab

#endif
