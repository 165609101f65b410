#include "causalab/statistics.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace causalab {

namespace {

long long card_product(const std::array<int, 4>& cards) {
  long long n = 1;
  for (int c : cards) {
    if (c < 1) throw std::invalid_argument("variable cardinalities must be positive");
    n *= c;
  }
  return n;
}

std::array<int, 4> digits_of(const std::array<int, 4>& cards, int flat) {
  std::array<int, 4> d{};
  for (int v = 3; v >= 0; --v) {
    d[v] = flat % cards[v];
    flat /= cards[v];
  }
  return d;
}

int group_card(const std::array<int, 4>& cards, const std::vector<int>& vars) {
  int n = 1;
  for (int v : vars) n *= cards[v];
  return n;
}

int group_index(const std::array<int, 4>& digits, const std::array<int, 4>& cards,
                const std::vector<int>& vars) {
  int idx = 0;
  for (int v : vars) idx = idx * cards[v] + digits[v];
  return idx;
}

}  // namespace

void JointDistribution::validate(double tol) const {
  if (static_cast<long long>(p.size()) != card_product(cards))
    throw std::invalid_argument("JointDistribution: table size does not match cards");
  double total = 0.0;
  for (double v : p) {
    if (v < -1e-12)
      throw std::invalid_argument("JointDistribution: negative probability");
    total += v;
  }
  if (std::abs(total - 1.0) > tol)
    throw std::invalid_argument("JointDistribution: probabilities do not sum to 1");
}

long long CountsTable::total() const {
  long long t = 0;
  for (long long v : n) t += v;
  return t;
}

CountsTable sample_counts(const JointDistribution& dist, long long n_samples,
                          std::uint64_t seed) {
  if (n_samples < 1) throw std::invalid_argument("sample_counts: need at least one sample");
  dist.validate();
  CountsTable counts;
  counts.cards = dist.cards;
  counts.n.assign(dist.size(), 0);
  std::mt19937_64 rng(seed);
  // Chain of binomials: cell i gets Binomial(remaining, p_i / mass left).
  long long remaining = n_samples;
  double mass_left = 1.0;
  for (std::size_t i = 0; i < dist.size() && remaining > 0; ++i) {
    const double pi = std::max(dist.p[i], 0.0);
    if (i + 1 == dist.size()) {
      counts.n[i] = remaining;
      break;
    }
    double q = (mass_left > 0.0) ? pi / mass_left : 1.0;
    q = std::clamp(q, 0.0, 1.0);
    std::binomial_distribution<long long> binom(remaining, q);
    const long long c = binom(rng);
    counts.n[i] = c;
    remaining -= c;
    mass_left -= pi;
  }
  return counts;
}

JointDistribution frequencies(const CountsTable& counts) {
  const long long total = counts.total();
  if (total <= 0) throw std::invalid_argument("frequencies: empty counts table");
  JointDistribution dist;
  dist.cards = counts.cards;
  dist.p.resize(counts.size());
  for (std::size_t i = 0; i < counts.size(); ++i)
    dist.p[i] = static_cast<double>(counts.n[i]) / static_cast<double>(total);
  return dist;
}

bool is_primitive(MarkovCondition c) {
  switch (c) {
    case MarkovCondition::Independence:
    case MarkovCondition::ChainK1J1J2:
    case MarkovCondition::ChainJ1K1J2:
    case MarkovCondition::ChainJ1K2J2:
    case MarkovCondition::ChainJ1K1_J2_K2:
    case MarkovCondition::ChainK1_J1_J2K2:
      return true;
    default:
      return false;
  }
}

std::vector<MarkovCondition> primitive_conditions(MarkovCondition c) {
  switch (c) {
    case MarkovCondition::ChainJ1K1J2K2:
      return {MarkovCondition::ChainJ1K1J2, MarkovCondition::ChainJ1K1_J2_K2};
    case MarkovCondition::ChainK1J1J2K2:
      return {MarkovCondition::ChainK1J1J2, MarkovCondition::ChainJ1K1_J2_K2};
    case MarkovCondition::ChainK1J1K2J2:
      return {MarkovCondition::ChainJ1K2J2, MarkovCondition::ChainK1_J1_J2K2};
    default:
      return {c};
  }
}

std::string to_string(MarkovCondition c) {
  switch (c) {
    case MarkovCondition::Independence: return "indep(J1K1;J2K2)";
    case MarkovCondition::ChainK1J1J2: return "K1-J1-J2";
    case MarkovCondition::ChainJ1K1J2: return "J1-K1-J2";
    case MarkovCondition::ChainJ1K2J2: return "J1-K2-J2";
    case MarkovCondition::ChainJ1K1_J2_K2: return "(J1K1)-J2-K2";
    case MarkovCondition::ChainK1_J1_J2K2: return "K1-J1-(J2K2)";
    case MarkovCondition::ChainJ1K1J2K2: return "J1-K1-J2-K2";
    case MarkovCondition::ChainK1J1J2K2: return "K1-J1-J2-K2";
    case MarkovCondition::ChainK1J1K2J2: return "K1-J1-K2-J2";
  }
  return "?";
}

VarGrouping grouping_of(MarkovCondition primitive) {
  switch (primitive) {
    case MarkovCondition::Independence: return {{0, 1}, {}, {2, 3}};
    case MarkovCondition::ChainK1J1J2: return {{1}, {0}, {2}};
    case MarkovCondition::ChainJ1K1J2: return {{0}, {1}, {2}};
    case MarkovCondition::ChainJ1K2J2: return {{0}, {3}, {2}};
    case MarkovCondition::ChainJ1K1_J2_K2: return {{0, 1}, {2}, {3}};
    case MarkovCondition::ChainK1_J1_J2K2: return {{1}, {0}, {2, 3}};
    default:
      throw std::invalid_argument("grouping_of: condition is not primitive");
  }
}

namespace {

// Accumulate the joint table into the (x, y, z) grouping; y may be empty, in
// which case the y axis has a single cell.
template <typename T>
std::vector<double> grouped_table(const std::array<int, 4>& cards,
                                  const std::vector<T>& values, const VarGrouping& g,
                                  int& dx, int& dy, int& dz) {
  dx = group_card(cards, g.x);
  dy = g.y.empty() ? 1 : group_card(cards, g.y);
  dz = group_card(cards, g.z);
  std::vector<double> table(static_cast<std::size_t>(dx) * dy * dz, 0.0);
  const long long n = card_product(cards);
  for (long long flat = 0; flat < n; ++flat) {
    const auto digits = digits_of(cards, static_cast<int>(flat));
    const int ix = group_index(digits, cards, g.x);
    const int iy = g.y.empty() ? 0 : group_index(digits, cards, g.y);
    const int iz = group_index(digits, cards, g.z);
    table[(static_cast<std::size_t>(ix) * dy + iy) * dz + iz] +=
        static_cast<double>(values[flat]);
  }
  return table;
}

double primitive_deviation(const JointDistribution& dist, MarkovCondition primitive) {
  const VarGrouping g = grouping_of(primitive);
  int dx, dy, dz;
  const auto table = grouped_table(dist.cards, dist.p, g, dx, dy, dz);
  auto at = [&](int x, int y, int z) {
    return table[(static_cast<std::size_t>(x) * dy + y) * dz + z];
  };
  double worst = 0.0;
  for (int y = 0; y < dy; ++y) {
    double py = 0.0;
    for (int x = 0; x < dx; ++x)
      for (int z = 0; z < dz; ++z) py += at(x, y, z);
    if (py <= 0.0) continue;
    for (int x = 0; x < dx; ++x) {
      double pxy = 0.0;
      for (int z = 0; z < dz; ++z) pxy += at(x, y, z);
      for (int z = 0; z < dz; ++z) {
        double pzy = 0.0;
        for (int xx = 0; xx < dx; ++xx) pzy += at(xx, y, z);
        const double dev = std::abs(at(x, y, z) / py - (pxy / py) * (pzy / py));
        worst = std::max(worst, dev);
      }
    }
  }
  return worst;
}

}  // namespace

double exact_ci_deviation(const JointDistribution& dist, MarkovCondition cond) {
  double worst = 0.0;
  for (MarkovCondition prim : primitive_conditions(cond))
    worst = std::max(worst, primitive_deviation(dist, prim));
  return worst;
}

Chi2Result chi2_primitive_test(const CountsTable& counts, MarkovCondition primitive,
                               double alpha) {
  if (!is_primitive(primitive))
    throw std::invalid_argument("chi2_primitive_test: condition is not primitive");
  if (counts.total() <= 0)
    throw std::invalid_argument("chi2_primitive_test: all counts are zero");
  const VarGrouping g = grouping_of(primitive);
  int dx, dy, dz;
  const auto table = grouped_table(counts.cards, counts.n, g, dx, dy, dz);
  auto at = [&](int x, int y, int z) {
    return table[(static_cast<std::size_t>(x) * dy + y) * dz + z];
  };

  double stat = 0.0;
  for (int y = 0; y < dy; ++y) {
    double ny = 0.0;
    for (int x = 0; x < dx; ++x)
      for (int z = 0; z < dz; ++z) ny += at(x, y, z);
    if (ny <= 0.0) continue;
    for (int x = 0; x < dx; ++x) {
      double nxy = 0.0;
      for (int z = 0; z < dz; ++z) nxy += at(x, y, z);
      for (int z = 0; z < dz; ++z) {
        double nzy = 0.0;
        for (int xx = 0; xx < dx; ++xx) nzy += at(xx, y, z);
        const double expected = nxy * nzy / ny;
        if (expected <= 0.0) continue;
        const double diff = at(x, y, z) - expected;
        stat += diff * diff / expected;
      }
    }
  }

  Chi2Result r;
  r.statistic = stat;
  // df is fixed by the grouping shape, never reduced for empty cells.
  r.df = g.y.empty() ? (dx - 1) * (dz - 1) : (dx - 1) * dy * (dz - 1);
  r.p_value = 1.0 - chi2_cdf(stat, r.df);
  r.critical = chi2_quantile(1.0 - alpha, r.df);
  r.accepted = stat <= r.critical;
  return r;
}

MarkovTestResult chi2_condition_test(const CountsTable& counts, MarkovCondition cond,
                                     double alpha) {
  MarkovTestResult out;
  out.condition = cond;
  out.accepted = true;
  for (MarkovCondition prim : primitive_conditions(cond)) {
    ConditionPart part{prim, chi2_primitive_test(counts, prim, alpha)};
    out.accepted = out.accepted && part.result.accepted;
    out.min_p = std::min(out.min_p, part.result.p_value);
    out.parts.push_back(std::move(part));
  }
  return out;
}

namespace {

// Regularized lower incomplete gamma P(a, x), a > 0, x >= 0.
double gammp(double a, double x) {
  if (x < 0.0 || a <= 0.0) throw std::invalid_argument("gammp: bad arguments");
  if (x == 0.0) return 0.0;
  if (x < a + 1.0) {
    // Series representation.
    double ap = a;
    double sum = 1.0 / a;
    double del = sum;
    for (int i = 0; i < 500; ++i) {
      ap += 1.0;
      del *= x / ap;
      sum += del;
      if (std::abs(del) < std::abs(sum) * 1e-15) break;
    }
    return sum * std::exp(-x + a * std::log(x) - std::lgamma(a));
  }
  // Continued fraction (modified Lentz).
  const double tiny = 1e-300;
  double b = x + 1.0 - a;
  double c = 1.0 / tiny;
  double d = 1.0 / b;
  double h = d;
  for (int i = 1; i <= 500; ++i) {
    const double an = -i * (i - a);
    b += 2.0;
    d = an * d + b;
    if (std::abs(d) < tiny) d = tiny;
    c = b + an / c;
    if (std::abs(c) < tiny) c = tiny;
    d = 1.0 / d;
    const double del = d * c;
    h *= del;
    if (std::abs(del - 1.0) < 1e-15) break;
  }
  const double q = std::exp(-x + a * std::log(x) - std::lgamma(a)) * h;
  return 1.0 - q;
}

}  // namespace

double chi2_cdf(double x, int df) {
  if (df < 1) throw std::invalid_argument("chi2_cdf: df must be positive");
  if (x <= 0.0) return 0.0;
  return gammp(df / 2.0, x / 2.0);
}

double chi2_quantile(double p, int df) {
  if (p < 0.0 || p >= 1.0) throw std::invalid_argument("chi2_quantile: p outside [0,1)");
  if (p == 0.0) return 0.0;
  double lo = 0.0;
  double hi = df + 10.0;
  while (chi2_cdf(hi, df) < p) hi *= 2.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (chi2_cdf(mid, df) < p)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace causalab
