// Two-step identification pipeline: level-wise Markov hypothesis testing on
// the joint counts, then a CHSH check that separates classical from quantum
// memory for the memory-bearing verdicts.

#ifndef CAUSALAB_IDENTIFIER_HPP
#define CAUSALAB_IDENTIFIER_HPP

#include <array>
#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "causalab/statistics.hpp"
#include "causalab/strategy.hpp"

namespace causalab {

struct ChshResult {
  Eigen::Matrix2d correlators;      // (i, j) entry is <A_{i+1} B_{j+1}>
  double max_value = 0.0;           // max |sum c_ij E_ij| over sign patterns
  std::array<int, 4> best_signs{};  // (c11, c12, c21, c22) of the maximizer
  double threshold = 2.0;           // local bound plus the margin in force
  bool violated = false;
};

// Verdict labels; the pending ones mark a detected memory whose type has not
// been resolved by the CHSH step yet.
enum class VerdictLabel {
  SI,
  SC,
  SQ,
  SN12,
  SN21,
  SC12,
  SQ12,
  SC21,
  SQ21,
  ParallelMemoryPending,
  Seq12MemoryPending,
  Seq21MemoryPending,
  Unidentified,
};

std::string to_string(VerdictLabel label);
bool is_memory_pending(VerdictLabel label);

struct Verdict {
  VerdictLabel label = VerdictLabel::Unidentified;
  int level = 0;  // 1..3 for the level that produced the label, 0 otherwise
  std::vector<MarkovTestResult> conditions;  // in evaluation order
  std::optional<ChshResult> chsh;
  bool ambiguity = false;  // more than one same-level condition accepted
  std::string note;
};

// The Markov condition characterizing a strategy class (the composite that an
// exact in-class distribution satisfies with zero deviation).
MarkovCondition markov_condition_of(StrategyClass cls, Direction dir = Direction::None);

// The label the pipeline should settle on for an exactly simulated class,
// given a CHSH step consistent with the class (memory classes included).
VerdictLabel expected_label(StrategyClass cls, Direction dir = Direction::None);

// Correlators <A_i B_j> from the four setting-pair counts tables, ordered
// (1,1), (1,2), (2,1), (2,2); outcome 1 maps to +1, outcome 2 to -1,
// preparation variables are marginalized out. Throws on an empty table.
Eigen::Matrix2d correlators_from_counts(const std::array<CountsTable, 4>& pair_counts);

// Same correlators from exact distributions instead of sampled counts.
Eigen::Matrix2d correlators_from_exact(const std::array<JointDistribution, 4>& pair_dists);

// The label a memory-pending verdict settles on once the CHSH step is known.
VerdictLabel resolve_memory_label(VerdictLabel pending, bool violated);

// Binomial-style standard error of each correlator, sqrt((1 - E^2) / N).
Eigen::Matrix2d correlator_sigmas(const std::array<CountsTable, 4>& pair_counts);

// Maximum over the eight sign patterns with |c_ij| = 1 and product -1;
// violated iff max exceeds 2 + margin.
ChshResult chsh_max(const Eigen::Matrix2d& correlators, double margin = 0.0);

// Step 1 of the pipeline: walk the condition hierarchy level by level until
// a condition is accepted. Ties within a level go to the largest minimum
// p-value and set the ambiguity flag.
Verdict step1_identify(const CountsTable& counts, double alpha = 0.05);

// Step 2: resolve a memory-pending verdict with CHSH data. A violation means
// quantum memory; otherwise the memory is treated as classical (one-sided:
// a quantum memory can also produce non-violating statistics).
Verdict step2_memory_type(Verdict partial, const std::array<CountsTable, 4>& step2_counts,
                          double chsh_margin = 0.0);

// Full pipeline; non-memory verdicts never consume step-2 data. A pending
// verdict with no step-2 counts is returned as-is.
Verdict identify(const CountsTable& step1_counts,
                 const std::optional<std::array<CountsTable, 4>>& step2_counts,
                 double alpha = 0.05, double chsh_margin = 0.0);

}  // namespace causalab

#endif
