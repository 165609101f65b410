// Completely positive trace-preserving maps in Kraus form, plus the Choi
// representation used by the process-matrix layer.

#ifndef CAUSALAB_CHANNEL_HPP
#define CAUSALAB_CHANNEL_HPP

#include <cstdint>
#include <vector>

#include "causalab/operators.hpp"

namespace causalab {

class QuantumChannel {
 public:
  // Kraus operators of shape dim_out x dim_in; sum K^dag K = I is enforced.
  QuantumChannel(std::vector<CMat> kraus, double tp_tol = 1e-8);

  int dim_in() const { return dim_in_; }
  int dim_out() const { return dim_out_; }
  const std::vector<CMat>& kraus() const { return kraus_; }

  CMat apply(const CMat& rho) const;

  // Choi matrix on (input tensor output) satisfying
  //   tr[ choi() (rho tensor M) ] = tr[ apply(rho) M ]
  // for every input state rho and output effect M. The input-side transpose
  // is absorbed into the matrix, so the pairing above needs none.
  CMat choi() const;

  static QuantumChannel identity_channel(int d);
  static QuantumChannel bit_flip();
  // Discards the input and emits `output` (dim_in given separately).
  static QuantumChannel constant_channel(int dim_in, const CMat& output);
  // Two-qubit CNOT (first factor controls, second is the target) followed by
  // tracing out the control; maps a 4-dim input to the 2-dim target wire.
  static QuantumChannel cnot_keep_target();
  // Haar-Stinespring random channel: isometry into output x environment from
  // a Haar unitary, environment traced out. Requires dim_out * dim_env to be
  // at least dim_in.
  static QuantumChannel random_channel(int dim_in, int dim_out, int dim_env, Rng& rng);
  static QuantumChannel random_channel(int dim_in, int dim_out, int dim_env,
                                       std::uint64_t seed);

 private:
  std::vector<CMat> kraus_;
  int dim_in_;
  int dim_out_;
};

}  // namespace causalab

#endif
