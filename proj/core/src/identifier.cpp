#include "causalab/identifier.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace causalab {

std::string to_string(VerdictLabel label) {
  switch (label) {
    case VerdictLabel::SI: return "S_I";
    case VerdictLabel::SC: return "S_C";
    case VerdictLabel::SQ: return "S_Q";
    case VerdictLabel::SN12: return "S_N_1to2";
    case VerdictLabel::SN21: return "S_N_2to1";
    case VerdictLabel::SC12: return "S_C_1to2";
    case VerdictLabel::SQ12: return "S_Q_1to2";
    case VerdictLabel::SC21: return "S_C_2to1";
    case VerdictLabel::SQ21: return "S_Q_2to1";
    case VerdictLabel::ParallelMemoryPending: return "parallel_memory_pending";
    case VerdictLabel::Seq12MemoryPending: return "seq_1to2_memory_pending";
    case VerdictLabel::Seq21MemoryPending: return "seq_2to1_memory_pending";
    case VerdictLabel::Unidentified: return "Unidentified";
  }
  return "?";
}

bool is_memory_pending(VerdictLabel label) {
  return label == VerdictLabel::ParallelMemoryPending ||
         label == VerdictLabel::Seq12MemoryPending ||
         label == VerdictLabel::Seq21MemoryPending;
}

MarkovCondition markov_condition_of(StrategyClass cls, Direction dir) {
  switch (cls) {
    case StrategyClass::Individual:
      return MarkovCondition::Independence;
    case StrategyClass::ClassicalParallel:
    case StrategyClass::QuantumParallel:
      return MarkovCondition::ChainK1J1J2K2;
    case StrategyClass::SequentialNoMemory:
      if (dir == Direction::FirstToSecond) return MarkovCondition::ChainJ1K1J2K2;
      if (dir == Direction::SecondToFirst) return MarkovCondition::ChainK1J1K2J2;
      break;
    case StrategyClass::SequentialClassical:
    case StrategyClass::SequentialQuantum:
      if (dir == Direction::FirstToSecond) return MarkovCondition::ChainJ1K1_J2_K2;
      if (dir == Direction::SecondToFirst) return MarkovCondition::ChainK1_J1_J2K2;
      break;
  }
  throw std::invalid_argument("markov_condition_of: sequential class needs a direction");
}

VerdictLabel expected_label(StrategyClass cls, Direction dir) {
  switch (cls) {
    case StrategyClass::Individual: return VerdictLabel::SI;
    case StrategyClass::ClassicalParallel: return VerdictLabel::SC;
    case StrategyClass::QuantumParallel: return VerdictLabel::SQ;
    case StrategyClass::SequentialNoMemory:
      if (dir == Direction::FirstToSecond) return VerdictLabel::SN12;
      if (dir == Direction::SecondToFirst) return VerdictLabel::SN21;
      break;
    case StrategyClass::SequentialClassical:
      if (dir == Direction::FirstToSecond) return VerdictLabel::SC12;
      if (dir == Direction::SecondToFirst) return VerdictLabel::SC21;
      break;
    case StrategyClass::SequentialQuantum:
      if (dir == Direction::FirstToSecond) return VerdictLabel::SQ12;
      if (dir == Direction::SecondToFirst) return VerdictLabel::SQ21;
      break;
  }
  throw std::invalid_argument("expected_label: sequential class needs a direction");
}

Eigen::Matrix2d correlators_from_counts(const std::array<CountsTable, 4>& pair_counts) {
  Eigen::Matrix2d e;
  for (int idx = 0; idx < 4; ++idx) {
    const CountsTable& t = pair_counts[idx];
    if (t.cards[0] != 2 || t.cards[2] != 2)
      throw std::invalid_argument("correlators_from_counts: outcomes must be binary");
    const long long total = t.total();
    if (total == 0)
      throw std::invalid_argument("correlators_from_counts: empty counts table");
    double acc = 0.0;
    for (int j1 = 0; j1 < 2; ++j1)
      for (int k1 = 0; k1 < t.cards[1]; ++k1)
        for (int j2 = 0; j2 < 2; ++j2)
          for (int k2 = 0; k2 < t.cards[3]; ++k2) {
            const int sign = (j1 == 0 ? 1 : -1) * (j2 == 0 ? 1 : -1);
            acc += sign * static_cast<double>(t.at(j1, k1, j2, k2));
          }
    e(idx / 2, idx % 2) = acc / static_cast<double>(total);
  }
  return e;
}

Eigen::Matrix2d correlators_from_exact(const std::array<JointDistribution, 4>& pair_dists) {
  Eigen::Matrix2d e;
  for (int idx = 0; idx < 4; ++idx) {
    const JointDistribution& d = pair_dists[idx];
    if (d.cards[0] != 2 || d.cards[2] != 2)
      throw std::invalid_argument("correlators_from_exact: outcomes must be binary");
    double acc = 0.0;
    for (int j1 = 0; j1 < 2; ++j1)
      for (int k1 = 0; k1 < d.cards[1]; ++k1)
        for (int j2 = 0; j2 < 2; ++j2)
          for (int k2 = 0; k2 < d.cards[3]; ++k2) {
            const int sign = (j1 == 0 ? 1 : -1) * (j2 == 0 ? 1 : -1);
            acc += sign * d.at(j1, k1, j2, k2);
          }
    e(idx / 2, idx % 2) = acc;
  }
  return e;
}

VerdictLabel resolve_memory_label(VerdictLabel pending, bool violated) {
  switch (pending) {
    case VerdictLabel::ParallelMemoryPending:
      return violated ? VerdictLabel::SQ : VerdictLabel::SC;
    case VerdictLabel::Seq12MemoryPending:
      return violated ? VerdictLabel::SQ12 : VerdictLabel::SC12;
    case VerdictLabel::Seq21MemoryPending:
      return violated ? VerdictLabel::SQ21 : VerdictLabel::SC21;
    default:
      throw std::invalid_argument("resolve_memory_label: label is not memory-pending");
  }
}

Eigen::Matrix2d correlator_sigmas(const std::array<CountsTable, 4>& pair_counts) {
  const Eigen::Matrix2d e = correlators_from_counts(pair_counts);
  Eigen::Matrix2d s;
  for (int idx = 0; idx < 4; ++idx) {
    const double n = static_cast<double>(pair_counts[idx].total());
    const double v = std::max(0.0, 1.0 - e(idx / 2, idx % 2) * e(idx / 2, idx % 2));
    s(idx / 2, idx % 2) = std::sqrt(v / n);
  }
  return s;
}

ChshResult chsh_max(const Eigen::Matrix2d& correlators, double margin) {
  ChshResult res;
  res.correlators = correlators;
  res.threshold = 2.0 + margin;
  for (int mask = 0; mask < 16; ++mask) {
    const std::array<int, 4> c = {mask & 1 ? -1 : 1, mask & 2 ? -1 : 1,
                                  mask & 4 ? -1 : 1, mask & 8 ? -1 : 1};
    if (c[0] * c[1] * c[2] * c[3] != -1) continue;
    const double s = std::abs(c[0] * correlators(0, 0) + c[1] * correlators(0, 1) +
                              c[2] * correlators(1, 0) + c[3] * correlators(1, 1));
    if (s > res.max_value) {
      res.max_value = s;
      res.best_signs = c;
    }
  }
  res.violated = res.max_value > res.threshold;
  return res;
}

namespace {

struct LevelCandidate {
  MarkovCondition condition;
  VerdictLabel label;
};

// Evaluates one level's candidates; on any acceptance fills the verdict and
// returns true. Ties go to the largest minimum p-value.
bool run_level(const CountsTable& counts, double alpha, int level,
               const std::vector<LevelCandidate>& candidates, Verdict& v) {
  int best = -1;
  std::vector<MarkovTestResult> results;
  results.reserve(candidates.size());
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    results.push_back(chi2_condition_test(counts, candidates[i].condition, alpha));
    v.conditions.push_back(results.back());
    if (!results.back().accepted) continue;
    if (best < 0) {
      best = static_cast<int>(i);
    } else {
      v.ambiguity = true;
      if (results[i].min_p > results[best].min_p) best = static_cast<int>(i);
    }
  }
  if (best < 0) return false;
  v.label = candidates[best].label;
  v.level = level;
  return true;
}

}  // namespace

Verdict step1_identify(const CountsTable& counts, double alpha) {
  Verdict v;
  if (run_level(counts, alpha, 1,
                {{MarkovCondition::Independence, VerdictLabel::SI}}, v))
    return v;
  if (run_level(counts, alpha, 2,
                {{MarkovCondition::ChainJ1K1J2K2, VerdictLabel::SN12},
                 {MarkovCondition::ChainK1J1K2J2, VerdictLabel::SN21},
                 {MarkovCondition::ChainK1J1J2K2, VerdictLabel::ParallelMemoryPending}},
                v))
    return v;
  if (run_level(counts, alpha, 3,
                {{MarkovCondition::ChainJ1K1_J2_K2, VerdictLabel::Seq12MemoryPending},
                 {MarkovCondition::ChainK1_J1_J2K2, VerdictLabel::Seq21MemoryPending}},
                v))
    return v;
  v.label = VerdictLabel::Unidentified;
  v.level = 0;
  v.note = "all conditions rejected";
  return v;
}

Verdict step2_memory_type(Verdict partial, const std::array<CountsTable, 4>& step2_counts,
                          double chsh_margin) {
  if (!is_memory_pending(partial.label))
    throw std::invalid_argument("step2_memory_type: verdict is not memory-pending");
  const ChshResult chsh = chsh_max(correlators_from_counts(step2_counts), chsh_margin);
  Verdict v = std::move(partial);
  v.chsh = chsh;
  v.label = resolve_memory_label(v.label, chsh.violated);
  if (!chsh.violated)
    v.note = "classical-memory label is one-sided; a quantum memory can also "
             "produce non-violating correlations";
  return v;
}

Verdict identify(const CountsTable& step1_counts,
                 const std::optional<std::array<CountsTable, 4>>& step2_counts,
                 double alpha, double chsh_margin) {
  Verdict v = step1_identify(step1_counts, alpha);
  if (!is_memory_pending(v.label)) return v;
  if (!step2_counts.has_value()) {
    v.note = "memory detected but no step-2 data supplied";
    return v;
  }
  return step2_memory_type(std::move(v), *step2_counts, chsh_margin);
}

}  // namespace causalab
