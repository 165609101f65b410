#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>

#include "causalab/operators.hpp"

using namespace causalab;
using Catch::Approx;

namespace {

const std::complex<double> kI(0.0, 1.0);

CMat pauli_x() {
  CMat m(2, 2);
  m << 0, 1, 1, 0;
  return m;
}

CMat pauli_y() {
  CMat m(2, 2);
  m << 0, -kI, kI, 0;
  return m;
}

CMat pauli_z() {
  CMat m(2, 2);
  m << 1, 0, 0, -1;
  return m;
}

CMat phi_plus() {
  CMat v = CMat::Zero(4, 1);
  v(0, 0) = 1.0 / std::sqrt(2.0);
  v(3, 0) = 1.0 / std::sqrt(2.0);
  return v * v.adjoint();
}

}  // namespace

TEST_CASE("kron matches the hand-computed 2x2 oracle", "[operators]") {
  CMat a(2, 2), b(2, 2);
  a << 1, 2, 3, 4;
  b << 0, 5, 6, 7;
  const CMat k = kron(a, b);
  REQUIRE(k.rows() == 4);
  CMat expect(4, 4);
  expect << 0, 5, 0, 10,
            6, 7, 12, 14,
            0, 15, 0, 20,
            18, 21, 24, 28;
  REQUIRE(frobenius_distance(k, expect) < 1e-14);
}

TEST_CASE("kron of a factor list associates left to right", "[operators]") {
  const CMat a = random_density(2, 11);
  const CMat b = random_density(3, 12);
  const CMat c = random_density(2, 13);
  REQUIRE(frobenius_distance(kron({a, b, c}), kron(kron(a, b), c)) < 1e-13);
}

TEST_CASE("partial trace on a product recovers the kept factor", "[operators]") {
  const CMat a = random_density(2, 21);
  const CMat b = random_density(3, 22);
  const CMat ab = kron(a, b);
  REQUIRE(frobenius_distance(partial_trace(ab, {2, 3}, {0}), a) < 1e-13);
  REQUIRE(frobenius_distance(partial_trace(ab, {2, 3}, {1}), b) < 1e-13);
  REQUIRE(frobenius_distance(partial_trace(ab, {2, 3}, {0, 1}), ab) < 1e-14);
}

TEST_CASE("partial trace preserves the total trace", "[operators]") {
  const CMat w = kron({random_density(2, 31), random_density(2, 32),
                       random_density(2, 33)});
  const CMat reduced = partial_trace(w, {2, 2, 2}, {1});
  REQUIRE(std::abs(reduced.trace().real() - w.trace().real()) < 1e-13);
  REQUIRE(std::abs(reduced.trace().imag()) < 1e-13);
}

TEST_CASE("partial trace of the Bell state gives the maximally mixed qubit",
          "[operators]") {
  const CMat r = partial_trace(phi_plus(), {2, 2}, {0});
  REQUIRE(frobenius_distance(r, 0.5 * identity(2)) < 1e-14);
}

TEST_CASE("reorder_subsystems permutes tensor factors", "[operators]") {
  const CMat a = random_density(2, 41);
  const CMat b = random_density(3, 42);
  const CMat c = random_density(2, 43);
  // perm[new_pos] = old index
  const CMat swapped = reorder_subsystems(kron(a, b), {2, 3}, {1, 0});
  REQUIRE(frobenius_distance(swapped, kron(b, a)) < 1e-13);
  const CMat rot = reorder_subsystems(kron({a, b, c}), {2, 3, 2}, {2, 0, 1});
  REQUIRE(frobenius_distance(rot, kron({c, a, b})) < 1e-13);
}

TEST_CASE("reorder_subsystems round-trips through the inverse permutation",
          "[operators]") {
  const CMat w = kron({random_density(2, 51), random_density(2, 52),
                       random_density(2, 53), random_density(2, 54)});
  const std::vector<int> dims = {2, 2, 2, 2};
  const CMat moved = reorder_subsystems(w, dims, {2, 0, 3, 1});
  // inverse of {2,0,3,1} is {1,3,0,2}
  const CMat back = reorder_subsystems(moved, dims, {1, 3, 0, 2});
  REQUIRE(frobenius_distance(back, w) < 1e-13);
}

TEST_CASE("partial transpose acts factor-wise on products", "[operators]") {
  const CMat a = random_density(2, 61);
  const CMat b = random_density(3, 62);
  const CMat pt = partial_transpose(kron(a, b), {2, 3}, {1});
  REQUIRE(frobenius_distance(pt, kron(a, b.transpose())) < 1e-13);
  const CMat twice = partial_transpose(pt, {2, 3}, {1});
  REQUIRE(frobenius_distance(twice, kron(a, b)) < 1e-13);
}

TEST_CASE("partial transpose witnesses Bell-state entanglement", "[operators]") {
  const CMat pt = partial_transpose(phi_plus(), {2, 2}, {0});
  REQUIRE(min_eigenvalue_hermitian(pt) == Approx(-0.5).margin(1e-12));
}

TEST_CASE("bloch_pure_state covers poles and equator", "[operators]") {
  CMat zero(2, 2), one(2, 2), plus(2, 2);
  zero << 1, 0, 0, 0;
  one << 0, 0, 0, 1;
  plus << 0.5, 0.5, 0.5, 0.5;
  REQUIRE(frobenius_distance(bloch_pure_state(0, 0), zero) < 1e-12);
  REQUIRE(frobenius_distance(bloch_pure_state(180, 0), one) < 1e-12);
  REQUIRE(frobenius_distance(bloch_pure_state(90, 0), plus) < 1e-12);
}

TEST_CASE("bloch_pure_state yields rank-one density matrices", "[operators]") {
  const CMat s = bloch_pure_state(37.0, 211.0);
  REQUIRE(is_hermitian(s));
  REQUIRE(s.trace().real() == Approx(1.0).margin(1e-12));
  REQUIRE((s * s - s).norm() < 1e-12);
}

TEST_CASE("antipode projects onto the complementary outcome", "[operators]") {
  const auto [t, p] = antipode_deg(37.0, 211.0);
  const CMat sum = bloch_pure_state(37.0, 211.0) + bloch_pure_state(t, p);
  REQUIRE(frobenius_distance(sum, identity(2)) < 1e-12);
}

TEST_CASE("hermitian_basis is orthogonal and spans", "[operators]") {
  const auto basis = hermitian_basis(2);
  REQUIRE(basis.size() == 4);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    REQUIRE(is_hermitian(basis[i]));
    for (std::size_t j = i + 1; j < basis.size(); ++j) {
      REQUIRE(std::abs(hs_inner_real(basis[i], basis[j])) < 1e-12);
    }
  }
  // expand a random hermitian operator and reassemble it
  const CMat h = random_effect(2, 71) - 0.3 * identity(2);
  CMat back = CMat::Zero(2, 2);
  for (const CMat& b : basis)
    back += (hs_inner_real(b, h) / hs_inner_real(b, b)) * b;
  REQUIRE(frobenius_distance(back, h) < 1e-12);
}

TEST_CASE("hermitian_basis dimension scales as d squared", "[operators]") {
  REQUIRE(hermitian_basis(3).size() == 9);
}

TEST_CASE("haar_unitary is unitary and seed-deterministic", "[operators]") {
  const CMat u = haar_unitary(4, 99);
  REQUIRE(frobenius_distance(u.adjoint() * u, identity(4)) < 1e-12);
  REQUIRE(frobenius_distance(u, haar_unitary(4, 99)) < 1e-15);
  REQUIRE(frobenius_distance(u, haar_unitary(4, 100)) > 1e-3);
}

TEST_CASE("random_effect and random_density satisfy their constraints",
          "[operators]") {
  const CMat e = random_effect(3, 81);
  REQUIRE(is_hermitian(e));
  REQUIRE(min_eigenvalue_hermitian(e) >= -1e-12);
  REQUIRE(min_eigenvalue_hermitian(identity(3) - e) >= -1e-12);

  const CMat rho = random_density(3, 82);
  REQUIRE(is_hermitian(rho));
  REQUIRE(rho.trace().real() == Approx(1.0).margin(1e-12));
  REQUIRE(min_eigenvalue_hermitian(rho) >= -1e-12);

  Rng rng = make_rng(83);
  const CMat pure = random_pure_density(3, rng);
  REQUIRE((pure * pure - pure).norm() < 1e-12);
}

TEST_CASE("require helpers reject malformed operators", "[operators]") {
  CMat bad(2, 2);
  bad << 2, 0, 0, -0.5;
  REQUIRE_THROWS_AS(require_density(bad, "state"), std::invalid_argument);
  REQUIRE_THROWS_AS(require_effect(bad, "effect"), std::invalid_argument);
  REQUIRE_NOTHROW(require_density(bloch_pure_state(10, 20), "state"));
  REQUIRE_NOTHROW(require_effect(0.5 * identity(2), "effect"));
}

TEST_CASE("hs_inner_real reproduces Pauli orthogonality", "[operators]") {
  REQUIRE(hs_inner_real(pauli_x(), pauli_x()) == Approx(2.0).margin(1e-13));
  REQUIRE(hs_inner_real(pauli_x(), pauli_z()) == Approx(0.0).margin(1e-13));
  REQUIRE(hs_inner_real(pauli_y(), pauli_y()) == Approx(2.0).margin(1e-13));
}

TEST_CASE("min_eigenvalue_hermitian matches a diagonal oracle", "[operators]") {
  CMat d = CMat::Zero(3, 3);
  d(0, 0) = 1.0;
  d(1, 1) = -2.0;
  d(2, 2) = 0.25;
  REQUIRE(min_eigenvalue_hermitian(d) == Approx(-2.0).margin(1e-13));
}

TEST_CASE("split_seed separates streams deterministically", "[operators]") {
  REQUIRE(split_seed(1, 0) == split_seed(1, 0));
  REQUIRE(split_seed(1, 0) != split_seed(1, 1));
  REQUIRE(split_seed(1, 0) != split_seed(2, 0));
}
