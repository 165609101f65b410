#include "causalab/settings.hpp"

#include <stdexcept>
#include <string>

namespace causalab {

namespace {

// Setting catalogs, indexed 1..7. Second POVM angles are the printed
// antipodes; construction uses I minus the first element, which agrees with
// them to rounding.
constexpr AnglePair kE1AliceMeas[8] = {
    {0, 0}, {0, 0}, {36, 103}, {18, 76}, {2, 177}, {12, 212}, {25, 163}, {12, 292}};
constexpr AnglePair kE1BobMeas[8] = {
    {0, 0}, {45, 0}, {15, 340}, {87, 50}, {62, 143}, {1, 271}, {8, 270}, {134, 32}};
constexpr AnglePair kE1AlicePrep2[8] = {
    {0, 0}, {45, 0}, {152, 158}, {149, 17}, {38, 85}, {172, 236}, {37, 248}, {75, 110}};
constexpr AnglePair kE1BobPrep2 = {45, 0};

constexpr AnglePair kE2Alice[8][2] = {
    {{0, 0}, {0, 0}},        {{0, 0}, {90, 0}},      {{36, 103}, {49, 46}},
    {{18, 76}, {79, 95}},    {{2, 177}, {61, 19}},   {{12, 212}, {18, 252}},
    {{25, 163}, {88, 300}},  {{12, 292}, {91, 330}}};
constexpr AnglePair kE2Bob[8][2] = {
    {{0, 0}, {0, 0}},        {{45, 0}, {135, 0}},    {{15, 340}, {79, 211}},
    {{87, 50}, {48, 291}},   {{62, 143}, {28, 59}},  {{1, 271}, {68, 262}},
    {{8, 270}, {109, 24}},   {{134, 32}, {33, 58}}};

void check_catalog_index(int n) {
  if (n < 1 || n > 7)
    throw std::invalid_argument("setting catalog index must be in 1..7");
}

std::vector<CMat> two_outcome_povm(const AnglePair& first) {
  CMat m1 = bloch_pure_state(first.theta_deg, first.phi_deg);
  return {m1, identity(2) - m1};
}

}  // namespace

Eigen::MatrixXd default_prep_rule() {
  Eigen::MatrixXd cond(2, 2);
  cond << 0.65, 0.35, 0.35, 0.65;
  return cond;
}

void validate_setting(const PlayerSetting& p, const char* who) {
  const std::string tag(who);
  if (p.effects.empty() || p.preps.empty())
    throw std::invalid_argument(tag + ": empty effect or preparation list");
  const int di = p.dim_in();
  CMat sum = CMat::Zero(di, di);
  for (const CMat& e : p.effects) {
    require_effect(e, who);
    if (e.rows() != di) throw std::invalid_argument(tag + ": mixed effect dimensions");
    sum += e;
  }
  if ((sum - identity(di)).cwiseAbs().maxCoeff() > 1e-10)
    throw std::invalid_argument(tag + ": POVM does not resolve the identity");
  const int dL = p.dim_out();
  for (const CMat& r : p.preps) {
    require_density(r, who);
    if (r.rows() != dL) throw std::invalid_argument(tag + ": mixed preparation dimensions");
  }
  if (p.cond.rows() != p.n_outcomes() || p.cond.cols() != p.n_preps())
    throw std::invalid_argument(tag + ": cond shape mismatch");
  for (int j = 0; j < p.cond.rows(); ++j) {
    double row_sum = 0.0;
    for (int k = 0; k < p.cond.cols(); ++k) {
      if (p.cond(j, k) < 0.0)
        throw std::invalid_argument(tag + ": cond has a negative entry");
      row_sum += p.cond(j, k);
    }
    if (std::abs(row_sum - 1.0) > 1e-10)
      throw std::invalid_argument(tag + ": cond row does not sum to 1");
  }
  for (int a = 0; a < p.cond.rows(); ++a)
    for (int b = a + 1; b < p.cond.rows(); ++b) {
      const double diff = (p.cond.row(a) - p.cond.row(b)).cwiseAbs().maxCoeff();
      if (diff < 1e-9)
        throw std::invalid_argument(tag + ": two cond rows coincide");
    }
}

void validate_setting(const MpSetting& s) {
  validate_setting(s.alice, "alice setting");
  validate_setting(s.bob, "bob setting");
}

MpSetting Step2Setting::pair(int alice_basis, int bob_basis) const {
  if (alice_basis < 0 || alice_basis > 1 || bob_basis < 0 || bob_basis > 1)
    throw std::invalid_argument("Step2Setting::pair: basis index must be 0 or 1");
  const CMat zero = bloch_pure_state(0.0, 0.0);
  MpSetting s;
  s.alice = PlayerSetting{alice_povms[alice_basis], {zero, zero}, default_prep_rule()};
  s.bob = PlayerSetting{bob_povms[bob_basis], {zero, zero}, default_prep_rule()};
  return s;
}

MpSetting catalog_e1_setting(int n) {
  check_catalog_index(n);
  MpSetting s;
  s.alice.effects = two_outcome_povm(kE1AliceMeas[n]);
  s.alice.preps = {bloch_pure_state(0, 0),
                   bloch_pure_state(kE1AlicePrep2[n].theta_deg, kE1AlicePrep2[n].phi_deg)};
  s.alice.cond = default_prep_rule();
  s.bob.effects = two_outcome_povm(kE1BobMeas[n]);
  s.bob.preps = {bloch_pure_state(0, 0),
                 bloch_pure_state(kE1BobPrep2.theta_deg, kE1BobPrep2.phi_deg)};
  s.bob.cond = default_prep_rule();
  validate_setting(s);
  return s;
}

Step2Setting catalog_e2_setting(int n) {
  check_catalog_index(n);
  Step2Setting s;
  for (int b = 0; b < 2; ++b) {
    s.alice_povms[b] = two_outcome_povm(kE2Alice[n][b]);
    s.bob_povms[b] = two_outcome_povm(kE2Bob[n][b]);
  }
  return s;
}

std::array<AnglePair, 2> catalog_e1_alice_meas(int n) {
  check_catalog_index(n);
  auto [t, p] = antipode_deg(kE1AliceMeas[n].theta_deg, kE1AliceMeas[n].phi_deg);
  return {kE1AliceMeas[n], AnglePair{t, p}};
}

std::array<AnglePair, 2> catalog_e1_bob_meas(int n) {
  check_catalog_index(n);
  auto [t, p] = antipode_deg(kE1BobMeas[n].theta_deg, kE1BobMeas[n].phi_deg);
  return {kE1BobMeas[n], AnglePair{t, p}};
}

std::array<AnglePair, 2> catalog_e1_alice_preps(int n) {
  check_catalog_index(n);
  return {AnglePair{0, 0}, kE1AlicePrep2[n]};
}

std::array<AnglePair, 2> catalog_e1_bob_preps(int n) {
  check_catalog_index(n);
  return {AnglePair{0, 0}, kE1BobPrep2};
}

namespace {

// Eigenprojectors of every non-identity basis element, renormalized by
// conjugation so the pool sums to the identity. For d = 2 this is exactly
// the six Pauli eigenprojectors divided by 3.
std::vector<CMat> ic_effect_pool(int d) {
  std::vector<CMat> projs;
  const auto basis = hermitian_basis(d);
  for (std::size_t b = 1; b < basis.size(); ++b) {
    Eigen::SelfAdjointEigenSolver<CMat> es(basis[b]);
    // Group eigenvectors by eigenvalue so degenerate eigenspaces give one
    // projector, skipping null spaces.
    int i = 0;
    while (i < d) {
      const double lambda = es.eigenvalues()(i);
      CMat proj = CMat::Zero(d, d);
      int j = i;
      while (j < d && std::abs(es.eigenvalues()(j) - lambda) < 1e-9) {
        proj += es.eigenvectors().col(j) * es.eigenvectors().col(j).adjoint();
        ++j;
      }
      if (std::abs(lambda) > 1e-9) projs.push_back(proj);
      i = j;
    }
  }
  CMat total = CMat::Zero(d, d);
  for (const CMat& p : projs) total += p;
  Eigen::SelfAdjointEigenSolver<CMat> es(total);
  CMat inv_sqrt = es.eigenvectors() *
                  es.eigenvalues().cwiseSqrt().cwiseInverse().asDiagonal() *
                  es.eigenvectors().adjoint();
  for (CMat& p : projs) p = inv_sqrt * p * inv_sqrt;
  return projs;
}

std::vector<CMat> ic_prep_states(int d) {
  std::vector<CMat> states;
  if (d == 2) {
    // Tetrahedral Bloch directions.
    const double s = 1.0 / std::sqrt(3.0);
    const double dirs[4][3] = {
        {s, s, s}, {s, -s, -s}, {-s, s, -s}, {-s, -s, s}};
    for (const auto& n : dirs) {
      CMat rho(2, 2);
      rho(0, 0) = 0.5 * (1.0 + n[2]);
      rho(1, 1) = 0.5 * (1.0 - n[2]);
      rho(0, 1) = 0.5 * Complex(n[0], -n[1]);
      rho(1, 0) = 0.5 * Complex(n[0], n[1]);
      states.push_back(rho);
    }
    return states;
  }
  // Basis states plus two-level superpositions: spans the operator space.
  auto ket = [d](int i) {
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(d);
    v(i) = 1.0;
    return v;
  };
  for (int i = 0; i < d; ++i) states.push_back(ket(i) * ket(i).adjoint());
  for (int i = 0; i < d; ++i)
    for (int j = i + 1; j < d; ++j) {
      Eigen::VectorXcd plus = (ket(i) + ket(j)) / std::sqrt(2.0);
      states.push_back(plus * plus.adjoint());
      Eigen::VectorXcd plus_i = (ket(i) + Complex(0, 1) * ket(j)) / std::sqrt(2.0);
      states.push_back(plus_i * plus_i.adjoint());
    }
  return states;
}

// Row-stochastic matrix with pairwise distinct rows: row j tilts the uniform
// distribution along a fixed zero-sum direction with slope j-dependent.
Eigen::MatrixXd distinct_prep_rule(int n_j, int n_k) {
  Eigen::MatrixXd cond(n_j, n_k);
  if (n_k == 1) throw std::invalid_argument("prep rule needs at least two preparations");
  for (int j = 0; j < n_j; ++j) {
    const double t = (j + 1.0) / (n_j + 1.0);
    for (int k = 0; k < n_k; ++k) {
      const double u = (2.0 * k - (n_k - 1.0)) / (n_k - 1.0);
      cond(j, k) = (1.0 + t * u) / n_k;
    }
  }
  return cond;
}

PlayerSetting ic_player(int d_in, int d_out) {
  PlayerSetting p;
  p.effects = ic_effect_pool(d_in);
  p.preps = ic_prep_states(d_out);
  p.cond = distinct_prep_rule(static_cast<int>(p.effects.size()),
                              static_cast<int>(p.preps.size()));
  return p;
}

}  // namespace

MpSetting tomographically_complete_setting(int d_in1, int d_out1, int d_in2,
                                           int d_out2) {
  MpSetting s;
  s.alice = ic_player(d_in1, d_out1);
  s.bob = ic_player(d_in2, d_out2);
  validate_setting(s);
  return s;
}

MpSetting random_s2_setting(int d_in1, int d_out1, int d_in2, int d_out2,
                            std::uint64_t seed) {
  MpSetting s;
  CMat ma = random_effect(d_in1, split_seed(seed, 0));
  s.alice.effects = {ma, identity(d_in1) - ma};
  CMat mb = random_effect(d_in2, split_seed(seed, 1));
  s.bob.effects = {mb, identity(d_in2) - mb};
  Rng rng_a = make_rng(split_seed(seed, 2));
  s.alice.preps = {random_density(d_out1, rng_a), random_density(d_out1, rng_a)};
  Rng rng_b = make_rng(split_seed(seed, 3));
  s.bob.preps = {random_density(d_out2, rng_b), random_density(d_out2, rng_b)};
  s.alice.cond = default_prep_rule();
  s.bob.cond = default_prep_rule();
  validate_setting(s);
  return s;
}

namespace {

bool spans_operator_space(const std::vector<CMat>& family) {
  const int d = static_cast<int>(family.front().rows());
  CMat coords(static_cast<int>(family.size()), d * d);
  for (std::size_t i = 0; i < family.size(); ++i)
    for (int r = 0; r < d; ++r)
      for (int c = 0; c < d; ++c) coords(static_cast<int>(i), r * d + c) = family[i](r, c);
  Eigen::JacobiSVD<CMat> svd(coords);
  const double smax = svd.singularValues().maxCoeff();
  int rank = 0;
  for (int i = 0; i < svd.singularValues().size(); ++i)
    if (svd.singularValues()(i) > 1e-8 * smax) ++rank;
  return rank == d * d;
}

}  // namespace

bool is_tomographically_complete(const MpSetting& s) {
  return spans_operator_space(s.alice.effects) && spans_operator_space(s.bob.effects) &&
         spans_operator_space(s.alice.preps) && spans_operator_space(s.bob.preps);
}

}  // namespace causalab
