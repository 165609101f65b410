// Measure-and-prepare experiment settings: per-player POVMs, preparation
// lists, and the classical preparation rule P(k|j), plus the bundled setting
// catalogs and random/informationally-complete generators.

#ifndef CAUSALAB_SETTINGS_HPP
#define CAUSALAB_SETTINGS_HPP

#include <array>
#include <cstdint>
#include <vector>

#include "causalab/operators.hpp"

namespace causalab {

struct PlayerSetting {
  std::vector<CMat> effects;  // POVM, indexed by measurement outcome j
  std::vector<CMat> preps;    // re-prepared states, indexed by k
  Eigen::MatrixXd cond;       // cond(j,k) = P(k|j), rows sum to 1

  int n_outcomes() const { return static_cast<int>(effects.size()); }
  int n_preps() const { return static_cast<int>(preps.size()); }
  int dim_in() const { return static_cast<int>(effects.front().rows()); }
  int dim_out() const { return static_cast<int>(preps.front().rows()); }
};

struct MpSetting {
  PlayerSetting alice;
  PlayerSetting bob;
};

// Throws std::invalid_argument when a POVM does not resolve the identity,
// preps are not states, cond is not row-stochastic, or two cond rows
// coincide (max row difference below 1e-9).
void validate_setting(const PlayerSetting& p, const char* who);
void validate_setting(const MpSetting& s);

// Two POVM bases per player for the correlation step. pair(i, j) assembles a
// plain MpSetting from basis i for Alice and basis j for Bob with both
// preparations pinned to |0><0| and the default preparation rule.
struct Step2Setting {
  std::array<std::vector<CMat>, 2> alice_povms;
  std::array<std::vector<CMat>, 2> bob_povms;

  MpSetting pair(int alice_basis, int bob_basis) const;
};

// cond(j,k): 0.65 on the diagonal, 0.35 off it (the bundled two-outcome
// preparation rule).
Eigen::MatrixXd default_prep_rule();

struct AnglePair {
  double theta_deg;
  double phi_deg;
};

// Bundled single-basis settings 1..7 (selector "e1:n"). Two-outcome POVMs
// and two preparations per player from the angle catalog; the second POVM
// element is completed as I minus the first so the pair is exactly a POVM.
MpSetting catalog_e1_setting(int n);

// Bundled two-basis settings 1..7 (selector "e2:n") for the correlation step.
Step2Setting catalog_e2_setting(int n);

// Catalog angles as shipped, for reports and serialization.
std::array<AnglePair, 2> catalog_e1_alice_meas(int n);
std::array<AnglePair, 2> catalog_e1_bob_meas(int n);
std::array<AnglePair, 2> catalog_e1_alice_preps(int n);
std::array<AnglePair, 2> catalog_e1_bob_preps(int n);

// Informationally complete setting: effect pool spanning the full operator
// space on each input (for d = 2 the six Pauli eigenprojectors scaled by
// 1/3) and d^2 linearly independent preparations on each output.
MpSetting tomographically_complete_setting(int d_in1, int d_out1, int d_in2, int d_out2);

// Seeded random two-outcome setting: one random effect pair {M, I-M} per
// player, two random preparations per player, default preparation rule.
// Four sub-streams are derived from the seed, one per ingredient.
MpSetting random_s2_setting(int d_in1, int d_out1, int d_in2, int d_out2,
                            std::uint64_t seed);

// True when both effect families and both preparation families span the
// operator space of their wire (numerical rank at relative tolerance 1e-8).
bool is_tomographically_complete(const MpSetting& s);

}  // namespace causalab

#endif
