// Environment strategies for the two-player measure-and-prepare game, their
// process-matrix representations, and the two probability backends (direct
// operational simulation and the generalized Born rule).
//
// Wire convention: player 1 measures on in1 and re-prepares on out1, player 2
// on in2/out2. Process matrices act on in1 x out1 x in2 x out2 in that order.

#ifndef CAUSALAB_STRATEGY_HPP
#define CAUSALAB_STRATEGY_HPP

#include <optional>
#include <string>
#include <vector>

#include "causalab/channel.hpp"
#include "causalab/operators.hpp"
#include "causalab/settings.hpp"
#include "causalab/statistics.hpp"

namespace causalab {

enum class StrategyClass {
  Individual,          // two fixed local states, no link
  ClassicalParallel,   // shared classical randomness over local states
  QuantumParallel,     // one joint (possibly entangled) input state
  SequentialNoMemory,  // fixed input to the first player, fixed relay channel
  SequentialClassical, // classical randomness over (input, relay channel)
  SequentialQuantum,   // quantum memory across the relay
};

enum class Direction {
  None,       // parallel classes
  FirstToSecond,  // player 1 acts first, relay feeds player 2
  SecondToFirst,  // player 2 acts first, relay feeds player 1
};

std::string to_string(StrategyClass c);
std::string to_string(Direction d);

struct WireDims {
  int in1 = 2;
  int out1 = 2;
  int in2 = 2;
  int out2 = 2;

  std::vector<int> as_vector() const { return {in1, out1, in2, out2}; }
  int total() const { return in1 * out1 * in2 * out2; }
  bool operator==(const WireDims&) const = default;
};

struct ParallelBranch {
  double weight = 1.0;
  CMat state1;  // handed to player 1
  CMat state2;  // handed to player 2
};

struct SequentialBranch {
  double weight = 1.0;
  CMat first_state;      // handed to the first player
  QuantumChannel relay;  // first player's output wire -> second player's input wire
};

// One branch of a quantum-memory sequential strategy. Either a parallel
// joint state (memory realized as entanglement with no relay) or a kept
// memory system: `first_with_memory` lives on (first player's input x
// memory), `relay` maps (memory x first player's output) to the second
// player's input.
struct MemoryBranch {
  double weight = 1.0;
  bool parallel = false;
  CMat joint_state;                        // parallel case, on in1 x in2
  CMat first_with_memory;                  // memory case
  std::optional<QuantumChannel> relay;     // memory case
  int memory_dim = 0;                      // memory case
};

class StrategySpec {
 public:
  static StrategySpec individual(const CMat& state1, const CMat& state2);
  static StrategySpec classical_parallel(std::vector<ParallelBranch> branches);
  static StrategySpec quantum_parallel(const CMat& joint_state, int dim1, int dim2);
  static StrategySpec sequential(Direction dir, const CMat& first_state,
                                 QuantumChannel relay);
  static StrategySpec sequential_classical(Direction dir,
                                           std::vector<SequentialBranch> branches);
  static StrategySpec sequential_quantum(Direction dir,
                                         std::vector<MemoryBranch> branches,
                                         const WireDims& dims);

  StrategyClass cls() const { return cls_; }
  Direction direction() const { return dir_; }
  const WireDims& dims() const { return dims_; }

  const std::vector<ParallelBranch>& parallel_branches() const { return parallel_; }
  const CMat& joint_state() const { return joint_state_; }
  const std::vector<SequentialBranch>& sequential_branches() const { return sequential_; }
  const std::vector<MemoryBranch>& memory_branches() const { return memory_; }

  // Multilinear core shared by the operational backend and process-matrix
  // reconstruction: with (E1, R1) an effect/preparation pair for player 1
  // and (E2, R2) for player 2, returns the operational value whose
  // restriction to actual instruments gives the outcome probability. Linear
  // in each of the four slots.
  double operational_form(const CMat& e1, const CMat& r1, const CMat& e2,
                          const CMat& r2) const;

 private:
  StrategySpec() = default;

  StrategyClass cls_ = StrategyClass::Individual;
  Direction dir_ = Direction::None;
  WireDims dims_;
  std::vector<ParallelBranch> parallel_;
  CMat joint_state_;
  std::vector<SequentialBranch> sequential_;
  std::vector<MemoryBranch> memory_;
};

// Bundled demonstration strategies, by CLI name:
//   si    two |+> states
//   sc    even classical mixture of |00> and |11>
//   sq    maximally entangled joint state
//   sn12  |0> to player 1, identity relay
//   sc12  shared bit: |0> with identity relay, |1> with bit-flip relay
//   sq12  3/4 entangled-parallel + 1/4 kept-memory branch with a CNOT relay
//         (memory controls, relayed wire is the target)
StrategySpec reference_strategy(const std::string& name);
std::vector<std::string> reference_strategy_names();

// Operational backend: play the game branch by branch.
JointDistribution simulate_distribution(const StrategySpec& spec,
                                        const MpSetting& setting);

// Transpose-absorbed instrument representation: cond(j,k) * (M_j tensor rho_k)
// on the player's (input x output) wires.
CMat instrument_choi(const PlayerSetting& p, int j, int k);

// Born backend: P = tr[ W (C1 tensor C2) ] over the instrument pairs.
JointDistribution born_distribution(const CMat& w, const WireDims& dims,
                                    const MpSetting& setting);

// Closed-form process matrix; SequentialQuantum has no closed form here and
// must go through reconstruct_process_matrix.
CMat build_process_matrix(const StrategySpec& spec);

// Linear-inversion reconstruction from the operational form evaluated on a
// Hermitian product basis. Exact for every strategy class.
CMat reconstruct_process_matrix(const StrategySpec& spec);

CMat process_matrix_of(const StrategySpec& spec);  // closed form when available

struct ProcessMatrixReport {
  double trace = 0.0;
  // Smallest eigenvalue of the process matrix after transposing the two
  // input wires; this is the representation in which physical strategies
  // are positive semi-definite under the transpose-absorbed pairing.
  double min_eigenvalue = 0.0;
  double residual_no_signal_to_2 = 0.0;  // output-2 marginal condition
  double residual_no_signal_to_1 = 0.0;  // output-1 marginal condition
  double residual_causal_mixture = 0.0;  // one-way-ordering decomposition
  bool physical = false;
};

ProcessMatrixReport validate_process_matrix(const CMat& w, const WireDims& dims,
                                            double tol = 1e-8);

// Frobenius distance between w and its projection onto the closed-form
// family of the named class (marginal-based). Supported classes:
// Individual, QuantumParallel, SequentialNoMemory and SequentialQuantum
// (both directions). Throws std::invalid_argument otherwise.
double structural_class_check(const CMat& w, const WireDims& dims, StrategyClass cls,
                              Direction dir = Direction::None);

}  // namespace causalab

#endif
