#include "causalab/operators.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace causalab {

namespace {

std::uint64_t splitmix64(std::uint64_t& state) {
  state += 0x9e3779b97f4a7c15ULL;
  std::uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

int total_dim(const std::vector<int>& dims) {
  int n = 1;
  for (int d : dims) {
    if (d < 1) throw std::invalid_argument("subsystem dims must be positive");
    n *= d;
  }
  return n;
}

void check_square(const CMat& op, int n, const char* where) {
  if (op.rows() != n || op.cols() != n)
    throw std::invalid_argument(std::string(where) + ": operator size does not match dims");
}

}  // namespace

std::uint64_t split_seed(std::uint64_t master, std::uint64_t stream) {
  std::uint64_t s = master;
  (void)splitmix64(s);
  s ^= 0x632be59bd9b4e019ULL * (stream + 1);
  std::uint64_t out = splitmix64(s);
  out ^= splitmix64(s);
  return out;
}

CMat identity(int d) {
  if (d < 1) throw std::invalid_argument("identity: dimension must be positive");
  return CMat::Identity(d, d);
}

CMat kron(const CMat& a, const CMat& b) {
  CMat out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

CMat kron(const std::vector<CMat>& factors) {
  if (factors.empty()) throw std::invalid_argument("kron: no factors");
  CMat out = factors.front();
  for (std::size_t i = 1; i < factors.size(); ++i) out = kron(out, factors[i]);
  return out;
}

CMat partial_trace(const CMat& op, const std::vector<int>& dims,
                   const std::vector<int>& keep) {
  const int n = total_dim(dims);
  check_square(op, n, "partial_trace");
  const int ns = static_cast<int>(dims.size());
  for (std::size_t i = 0; i < keep.size(); ++i) {
    if (keep[i] < 0 || keep[i] >= ns)
      throw std::invalid_argument("partial_trace: keep index out of range");
    if (i > 0 && keep[i] <= keep[i - 1])
      throw std::invalid_argument("partial_trace: keep must be strictly increasing");
  }

  std::vector<int> traced;
  for (int s = 0; s < ns; ++s)
    if (std::find(keep.begin(), keep.end(), s) == keep.end()) traced.push_back(s);

  std::vector<int> stride(ns, 1);
  for (int s = ns - 2; s >= 0; --s) stride[s] = stride[s + 1] * dims[s + 1];

  // Flat offsets of every kept multi-index and every traced multi-index.
  auto offsets = [&](const std::vector<int>& subs) {
    std::vector<int> offs{0};
    for (int s : subs) {
      std::vector<int> next;
      next.reserve(offs.size() * dims[s]);
      for (int base : offs)
        for (int v = 0; v < dims[s]; ++v) next.push_back(base + v * stride[s]);
      offs = std::move(next);
    }
    return offs;
  };
  const std::vector<int> keep_offs = offsets(keep);
  const std::vector<int> tr_offs = offsets(traced);

  const int dk = static_cast<int>(keep_offs.size());
  CMat out = CMat::Zero(dk, dk);
  for (int r = 0; r < dk; ++r)
    for (int c = 0; c < dk; ++c) {
      Complex acc = 0.0;
      for (int t : tr_offs) acc += op(keep_offs[r] + t, keep_offs[c] + t);
      out(r, c) = acc;
    }
  return out;
}

CMat reorder_subsystems(const CMat& op, const std::vector<int>& dims,
                        const std::vector<int>& perm) {
  const int n = total_dim(dims);
  check_square(op, n, "reorder_subsystems");
  const int ns = static_cast<int>(dims.size());
  if (static_cast<int>(perm.size()) != ns)
    throw std::invalid_argument("reorder_subsystems: perm size mismatch");
  std::vector<bool> seen(ns, false);
  for (int p : perm) {
    if (p < 0 || p >= ns || seen[p])
      throw std::invalid_argument("reorder_subsystems: perm is not a permutation");
    seen[p] = true;
  }

  std::vector<int> old_stride(ns, 1);
  for (int s = ns - 2; s >= 0; --s) old_stride[s] = old_stride[s + 1] * dims[s + 1];

  // map[new flat index] = old flat index
  std::vector<int> map(n, 0);
  std::vector<int> digit(ns, 0);
  for (int idx = 0; idx < n; ++idx) {
    int old = 0;
    for (int p = 0; p < ns; ++p) old += digit[p] * old_stride[perm[p]];
    map[idx] = old;
    for (int p = ns - 1; p >= 0; --p) {
      if (++digit[p] < dims[perm[p]]) break;
      digit[p] = 0;
    }
  }

  CMat out(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out(i, j) = op(map[i], map[j]);
  return out;
}

CMat partial_transpose(const CMat& op, const std::vector<int>& dims,
                       const std::vector<int>& subsystems) {
  const int n = total_dim(dims);
  check_square(op, n, "partial_transpose");
  const int ns = static_cast<int>(dims.size());
  std::vector<bool> flip(ns, false);
  for (int s : subsystems) {
    if (s < 0 || s >= ns)
      throw std::invalid_argument("partial_transpose: subsystem index out of range");
    flip[s] = true;
  }
  std::vector<int> stride(ns, 1);
  for (int s = ns - 2; s >= 0; --s) stride[s] = stride[s + 1] * dims[s + 1];

  CMat out(n, n);
  std::vector<int> rd(ns), cd(ns);
  for (int r = 0; r < n; ++r) {
    int t = r;
    for (int s = 0; s < ns; ++s) {
      rd[s] = t / stride[s];
      t %= stride[s];
    }
    for (int c = 0; c < n; ++c) {
      t = c;
      for (int s = 0; s < ns; ++s) {
        cd[s] = t / stride[s];
        t %= stride[s];
      }
      int rr = 0, cc = 0;
      for (int s = 0; s < ns; ++s) {
        rr += (flip[s] ? cd[s] : rd[s]) * stride[s];
        cc += (flip[s] ? rd[s] : cd[s]) * stride[s];
      }
      out(r, c) = op(rr, cc);
    }
  }
  return out;
}

CMat bloch_pure_state(double theta_deg, double phi_deg) {
  const double t = theta_deg * std::numbers::pi / 180.0;
  const double p = phi_deg * std::numbers::pi / 180.0;
  const double nx = std::sin(t) * std::cos(p);
  const double ny = std::sin(t) * std::sin(p);
  const double nz = std::cos(t);
  CMat rho(2, 2);
  rho(0, 0) = 0.5 * (1.0 + nz);
  rho(1, 1) = 0.5 * (1.0 - nz);
  rho(0, 1) = 0.5 * Complex(nx, -ny);
  rho(1, 0) = 0.5 * Complex(nx, ny);
  return rho;
}

std::pair<double, double> antipode_deg(double theta_deg, double phi_deg) {
  return {180.0 - theta_deg, std::fmod(phi_deg + 180.0, 360.0)};
}

std::vector<CMat> hermitian_basis(int d) {
  if (d < 1) throw std::invalid_argument("hermitian_basis: dimension must be positive");
  std::vector<CMat> basis;
  basis.reserve(static_cast<std::size_t>(d) * d);
  basis.push_back(identity(d));
  for (int j = 0; j < d; ++j)
    for (int k = j + 1; k < d; ++k) {
      CMat sym = CMat::Zero(d, d);
      sym(j, k) = 1.0;
      sym(k, j) = 1.0;
      basis.push_back(sym);
      CMat asym = CMat::Zero(d, d);
      asym(j, k) = Complex(0.0, -1.0);
      asym(k, j) = Complex(0.0, 1.0);
      basis.push_back(asym);
    }
  for (int l = 1; l < d; ++l) {
    CMat diag = CMat::Zero(d, d);
    const double scale = std::sqrt(2.0 / (l * (l + 1.0)));
    for (int j = 0; j < l; ++j) diag(j, j) = scale;
    diag(l, l) = -scale * l;
    basis.push_back(diag);
  }
  return basis;
}

CMat haar_unitary(int d, Rng& rng) {
  if (d < 1) throw std::invalid_argument("haar_unitary: dimension must be positive");
  std::normal_distribution<double> normal(0.0, 1.0);
  CMat g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  Eigen::HouseholderQR<CMat> qr(g);
  CMat q = qr.householderQ();
  CMat r = qr.matrixQR().triangularView<Eigen::Upper>();
  // Fix the gauge: make diag(R) positive so Q is Haar rather than QR-biased.
  for (int j = 0; j < d; ++j) {
    Complex rjj = r(j, j);
    Complex phase = (std::abs(rjj) > 0.0) ? rjj / std::abs(rjj) : Complex(1.0, 0.0);
    q.col(j) *= phase;
  }
  return q;
}

CMat haar_unitary(int d, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  return haar_unitary(d, rng);
}

CMat random_effect(int d, Rng& rng) {
  CMat u = haar_unitary(d, rng);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  Eigen::VectorXd lambda(d);
  for (int i = 0; i < d; ++i) lambda(i) = unif(rng);
  return u * lambda.asDiagonal() * u.adjoint();
}

CMat random_effect(int d, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  return random_effect(d, rng);
}

CMat random_density(int d, Rng& rng) {
  std::normal_distribution<double> normal(0.0, 1.0);
  CMat g(d, d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) {
      const double re = normal(rng);
      const double im = normal(rng);
      g(i, j) = Complex(re, im);
    }
  CMat rho = g * g.adjoint();
  return rho / rho.trace().real();
}

CMat random_density(int d, std::uint64_t seed) {
  Rng rng = make_rng(seed);
  return random_density(d, rng);
}

CMat random_pure_density(int d, Rng& rng) {
  CMat u = haar_unitary(d, rng);
  Eigen::VectorXcd psi = u.col(0);
  return psi * psi.adjoint();
}

bool is_hermitian(const CMat& m, double tol) {
  if (m.rows() != m.cols()) return false;
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

double min_eigenvalue_hermitian(const CMat& m) {
  Eigen::SelfAdjointEigenSolver<CMat> es(m, Eigen::EigenvaluesOnly);
  return es.eigenvalues().minCoeff();
}

void require_density(const CMat& m, const char* what, double tol) {
  if (!is_hermitian(m, tol))
    throw std::invalid_argument(std::string(what) + ": state is not Hermitian");
  if (std::abs(m.trace().real() - 1.0) > tol || std::abs(m.trace().imag()) > tol)
    throw std::invalid_argument(std::string(what) + ": state trace is not 1");
  if (min_eigenvalue_hermitian(m) < -tol)
    throw std::invalid_argument(std::string(what) + ": state has a negative eigenvalue");
}

void require_effect(const CMat& m, const char* what, double tol) {
  if (!is_hermitian(m, tol))
    throw std::invalid_argument(std::string(what) + ": effect is not Hermitian");
  Eigen::SelfAdjointEigenSolver<CMat> es(m, Eigen::EigenvaluesOnly);
  if (es.eigenvalues().minCoeff() < -tol || es.eigenvalues().maxCoeff() > 1.0 + tol)
    throw std::invalid_argument(std::string(what) + ": effect eigenvalues outside [0,1]");
}

double hs_inner_real(const CMat& a, const CMat& b) {
  return (a.adjoint() * b).trace().real();
}

double frobenius_distance(const CMat& a, const CMat& b) {
  return (a - b).norm();
}

}  // namespace causalab
