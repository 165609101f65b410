#include "causalab/channel.hpp"

#include <stdexcept>

namespace causalab {

QuantumChannel::QuantumChannel(std::vector<CMat> kraus, double tp_tol)
    : kraus_(std::move(kraus)) {
  if (kraus_.empty()) throw std::invalid_argument("QuantumChannel: empty Kraus set");
  dim_out_ = static_cast<int>(kraus_.front().rows());
  dim_in_ = static_cast<int>(kraus_.front().cols());
  CMat acc = CMat::Zero(dim_in_, dim_in_);
  for (const CMat& k : kraus_) {
    if (k.rows() != dim_out_ || k.cols() != dim_in_)
      throw std::invalid_argument("QuantumChannel: inconsistent Kraus shapes");
    acc += k.adjoint() * k;
  }
  if ((acc - identity(dim_in_)).cwiseAbs().maxCoeff() > tp_tol)
    throw std::invalid_argument("QuantumChannel: Kraus set is not trace preserving");
}

CMat QuantumChannel::apply(const CMat& rho) const {
  if (rho.rows() != dim_in_ || rho.cols() != dim_in_)
    throw std::invalid_argument("QuantumChannel::apply: input dimension mismatch");
  CMat out = CMat::Zero(dim_out_, dim_out_);
  for (const CMat& k : kraus_) out += k * rho * k.adjoint();
  return out;
}

CMat QuantumChannel::choi() const {
  const int di = dim_in_;
  const int dL = dim_out_;
  CMat c = CMat::Zero(di * dL, di * dL);
  CMat unit = CMat::Zero(di, di);
  for (int a = 0; a < di; ++a)
    for (int b = 0; b < di; ++b) {
      unit.setZero();
      unit(a, b) = 1.0;
      CMat block = apply(unit);
      // |b><a| on the input slot carries the absorbed transpose.
      for (int r = 0; r < dL; ++r)
        for (int s = 0; s < dL; ++s) c(b * dL + r, a * dL + s) += block(r, s);
    }
  return c;
}

QuantumChannel QuantumChannel::identity_channel(int d) {
  return QuantumChannel({identity(d)});
}

QuantumChannel QuantumChannel::bit_flip() {
  CMat x(2, 2);
  x << 0, 1, 1, 0;
  return QuantumChannel({x});
}

QuantumChannel QuantumChannel::constant_channel(int dim_in, const CMat& output) {
  require_density(output, "constant_channel");
  Eigen::SelfAdjointEigenSolver<CMat> es(output);
  std::vector<CMat> kraus;
  const int dL = static_cast<int>(output.rows());
  for (int m = 0; m < dL; ++m) {
    const double lambda = std::max(es.eigenvalues()(m), 0.0);
    if (lambda <= 0.0) continue;
    for (int i = 0; i < dim_in; ++i) {
      CMat k = CMat::Zero(dL, dim_in);
      k.col(i) = std::sqrt(lambda) * es.eigenvectors().col(m);
      kraus.push_back(k);
    }
  }
  return QuantumChannel(std::move(kraus));
}

QuantumChannel QuantumChannel::cnot_keep_target() {
  CMat cnot = CMat::Zero(4, 4);
  cnot(0, 0) = 1.0;
  cnot(1, 1) = 1.0;
  cnot(2, 3) = 1.0;
  cnot(3, 2) = 1.0;
  std::vector<CMat> kraus;
  for (int a = 0; a < 2; ++a) {
    CMat bra = CMat::Zero(2, 4);  // <a| on the control, identity on the target
    bra(0, a * 2 + 0) = 1.0;
    bra(1, a * 2 + 1) = 1.0;
    kraus.push_back(bra * cnot);
  }
  return QuantumChannel(std::move(kraus));
}

QuantumChannel QuantumChannel::random_channel(int dim_in, int dim_out, int dim_env,
                                              Rng& rng) {
  if (dim_out * dim_env < dim_in)
    throw std::invalid_argument("random_channel: dim_out * dim_env < dim_in");
  CMat u = haar_unitary(dim_out * dim_env, rng);
  // Isometry dim_in -> env x out: the first dim_in columns of u.
  CMat v = u.leftCols(dim_in);
  std::vector<CMat> kraus;
  kraus.reserve(dim_env);
  for (int e = 0; e < dim_env; ++e)
    kraus.push_back(v.middleRows(e * dim_out, dim_out));
  return QuantumChannel(std::move(kraus));
}

QuantumChannel QuantumChannel::random_channel(int dim_in, int dim_out, int dim_env,
                                              std::uint64_t seed) {
  Rng rng = make_rng(seed);
  return random_channel(dim_in, dim_out, dim_env, rng);
}

}  // namespace causalab
