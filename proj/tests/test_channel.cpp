#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "causalab/channel.hpp"
#include "causalab/operators.hpp"

using namespace causalab;
using Catch::Approx;

TEST_CASE("identity channel leaves states untouched", "[channel]") {
  const auto id = QuantumChannel::identity_channel(3);
  const CMat rho = random_density(3, 7);
  REQUIRE(frobenius_distance(id.apply(rho), rho) < 1e-14);
}

TEST_CASE("identity Choi operator is the swap", "[channel]") {
  const CMat c = QuantumChannel::identity_channel(2).choi();
  CMat swap = CMat::Zero(4, 4);
  swap(0, 0) = swap(1, 2) = swap(2, 1) = swap(3, 3) = 1;
  REQUIRE(frobenius_distance(c, swap) < 1e-13);
}

TEST_CASE("Choi pairing identity holds for random channels", "[channel]") {
  for (std::uint64_t seed = 1; seed <= 5; ++seed) {
    Rng rng = make_rng(seed);
    const auto lam = QuantumChannel::random_channel(2, 3, 2, rng);
    const CMat c = lam.choi();
    const CMat rho = random_density(2, 100 + seed);
    const CMat m = random_effect(3, 200 + seed);
    const double lhs = (c * kron(rho, m)).trace().real();
    const double rhs = (lam.apply(rho) * m).trace().real();
    REQUIRE(lhs == Approx(rhs).margin(1e-12));
  }
}

TEST_CASE("bit flip swaps the computational basis", "[channel]") {
  const auto flip = QuantumChannel::bit_flip();
  REQUIRE(frobenius_distance(flip.apply(bloch_pure_state(0, 0)),
                             bloch_pure_state(180, 0)) < 1e-13);
  REQUIRE(frobenius_distance(flip.apply(bloch_pure_state(180, 0)),
                             bloch_pure_state(0, 0)) < 1e-13);
}

TEST_CASE("constant channel ignores its input", "[channel]") {
  const CMat target = random_density(2, 5);
  const auto con = QuantumChannel::constant_channel(3, target);
  REQUIRE(frobenius_distance(con.apply(random_density(3, 6)), target) < 1e-13);
  REQUIRE(frobenius_distance(con.apply(random_density(3, 7)), target) < 1e-13);
}

TEST_CASE("cnot_keep_target computes a controlled flip then drops the control",
          "[channel]") {
  const auto relay = QuantumChannel::cnot_keep_target();
  REQUIRE(relay.dim_in() == 4);
  REQUIRE(relay.dim_out() == 2);
  const CMat zero = bloch_pure_state(0, 0);
  const CMat one = bloch_pure_state(180, 0);
  REQUIRE(frobenius_distance(relay.apply(kron(zero, zero)), zero) < 1e-13);
  REQUIRE(frobenius_distance(relay.apply(kron(one, zero)), one) < 1e-13);
  REQUIRE(frobenius_distance(relay.apply(kron(one, one)), zero) < 1e-13);
  // a superposed control decoheres the target to the maximally mixed state
  const CMat plus = bloch_pure_state(90, 0);
  REQUIRE(frobenius_distance(relay.apply(kron(plus, zero)), 0.5 * identity(2)) <
          1e-13);
}

TEST_CASE("random channels are trace preserving and seed-deterministic",
          "[channel]") {
  const auto lam = QuantumChannel::random_channel(3, 2, 4, 17);
  CMat sum = CMat::Zero(3, 3);
  for (const CMat& k : lam.kraus()) sum += k.adjoint() * k;
  REQUIRE(frobenius_distance(sum, identity(3)) < 1e-10);
  REQUIRE(std::abs(lam.apply(random_density(3, 1)).trace().real() - 1.0) < 1e-10);

  const auto again = QuantumChannel::random_channel(3, 2, 4, 17);
  REQUIRE(frobenius_distance(lam.choi(), again.choi()) < 1e-14);
  const auto other = QuantumChannel::random_channel(3, 2, 4, 18);
  REQUIRE(frobenius_distance(lam.choi(), other.choi()) > 1e-3);
}

TEST_CASE("non-trace-preserving Kraus lists are rejected", "[channel]") {
  std::vector<CMat> kraus = {0.5 * identity(2)};
  REQUIRE_THROWS_AS(QuantumChannel(kraus), std::invalid_argument);
}

TEST_CASE("Choi trace equals the input dimension", "[channel]") {
  Rng rng = make_rng(23);
  const auto lam = QuantumChannel::random_channel(3, 5, 2, rng);
  REQUIRE(lam.choi().trace().real() == Approx(3.0).margin(1e-10));
}
