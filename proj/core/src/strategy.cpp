#include "causalab/strategy.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace causalab {

namespace {

double trace_product(const CMat& a, const CMat& b) {
  // tr(ab) without forming the product; both arguments Hermitian in practice.
  return a.cwiseProduct(b.transpose()).sum().real();
}

void check_weights(const std::vector<double>& weights, const char* what) {
  double sum = 0.0;
  for (double w : weights) {
    if (w <= 0.0) throw std::invalid_argument(std::string(what) + ": branch weight must be positive");
    sum += w;
  }
  if (std::abs(sum - 1.0) > 1e-10)
    throw std::invalid_argument(std::string(what) + ": branch weights must sum to 1");
}

CMat phi_plus_state() {
  Eigen::VectorXcd v = Eigen::VectorXcd::Zero(4);
  v(0) = 1.0 / std::sqrt(2.0);
  v(3) = 1.0 / std::sqrt(2.0);
  return v * v.adjoint();
}

}  // namespace

std::string to_string(StrategyClass c) {
  switch (c) {
    case StrategyClass::Individual: return "individual";
    case StrategyClass::ClassicalParallel: return "classical-parallel";
    case StrategyClass::QuantumParallel: return "quantum-parallel";
    case StrategyClass::SequentialNoMemory: return "sequential-no-memory";
    case StrategyClass::SequentialClassical: return "sequential-classical";
    case StrategyClass::SequentialQuantum: return "sequential-quantum";
  }
  return "?";
}

std::string to_string(Direction d) {
  switch (d) {
    case Direction::None: return "none";
    case Direction::FirstToSecond: return "1to2";
    case Direction::SecondToFirst: return "2to1";
  }
  return "?";
}

StrategySpec StrategySpec::individual(const CMat& state1, const CMat& state2) {
  require_density(state1, "individual strategy, player 1 state");
  require_density(state2, "individual strategy, player 2 state");
  StrategySpec s;
  s.cls_ = StrategyClass::Individual;
  s.dir_ = Direction::None;
  s.dims_ = WireDims{static_cast<int>(state1.rows()), 2, static_cast<int>(state2.rows()), 2};
  s.parallel_ = {ParallelBranch{1.0, state1, state2}};
  return s;
}

StrategySpec StrategySpec::classical_parallel(std::vector<ParallelBranch> branches) {
  if (branches.empty())
    throw std::invalid_argument("classical_parallel: no branches");
  std::vector<double> ws;
  for (const auto& b : branches) {
    require_density(b.state1, "classical_parallel branch, player 1 state");
    require_density(b.state2, "classical_parallel branch, player 2 state");
    if (b.state1.rows() != branches.front().state1.rows() ||
        b.state2.rows() != branches.front().state2.rows())
      throw std::invalid_argument("classical_parallel: inconsistent branch dimensions");
    ws.push_back(b.weight);
  }
  check_weights(ws, "classical_parallel");
  StrategySpec s;
  s.cls_ = StrategyClass::ClassicalParallel;
  s.dir_ = Direction::None;
  s.dims_ = WireDims{static_cast<int>(branches.front().state1.rows()), 2,
                     static_cast<int>(branches.front().state2.rows()), 2};
  s.parallel_ = std::move(branches);
  return s;
}

StrategySpec StrategySpec::quantum_parallel(const CMat& joint_state, int dim1, int dim2) {
  require_density(joint_state, "quantum_parallel joint state");
  if (joint_state.rows() != static_cast<Eigen::Index>(dim1) * dim2)
    throw std::invalid_argument("quantum_parallel: joint state does not match dims");
  StrategySpec s;
  s.cls_ = StrategyClass::QuantumParallel;
  s.dir_ = Direction::None;
  s.dims_ = WireDims{dim1, 2, dim2, 2};
  s.joint_state_ = joint_state;
  return s;
}

StrategySpec StrategySpec::sequential(Direction dir, const CMat& first_state,
                                      QuantumChannel relay) {
  return sequential_classical(dir, {SequentialBranch{1.0, first_state, std::move(relay)}});
}

StrategySpec StrategySpec::sequential_classical(Direction dir,
                                                std::vector<SequentialBranch> branches) {
  if (dir == Direction::None)
    throw std::invalid_argument("sequential strategy needs a direction");
  if (branches.empty())
    throw std::invalid_argument("sequential strategy: no branches");
  std::vector<double> ws;
  for (const auto& b : branches) {
    require_density(b.first_state, "sequential branch state");
    if (b.first_state.rows() != branches.front().first_state.rows() ||
        b.relay.dim_in() != branches.front().relay.dim_in() ||
        b.relay.dim_out() != branches.front().relay.dim_out())
      throw std::invalid_argument("sequential strategy: inconsistent branch dimensions");
    ws.push_back(b.weight);
  }
  check_weights(ws, "sequential strategy");
  StrategySpec s;
  s.cls_ = branches.size() == 1 ? StrategyClass::SequentialNoMemory
                                : StrategyClass::SequentialClassical;
  s.dir_ = dir;
  const int d_first = static_cast<int>(branches.front().first_state.rows());
  const int d_relay_in = branches.front().relay.dim_in();
  const int d_relay_out = branches.front().relay.dim_out();
  if (dir == Direction::FirstToSecond)
    s.dims_ = WireDims{d_first, d_relay_in, d_relay_out, 2};
  else
    s.dims_ = WireDims{d_relay_out, 2, d_first, d_relay_in};
  s.sequential_ = std::move(branches);
  return s;
}

StrategySpec StrategySpec::sequential_quantum(Direction dir,
                                              std::vector<MemoryBranch> branches,
                                              const WireDims& dims) {
  if (dir == Direction::None)
    throw std::invalid_argument("sequential_quantum needs a direction");
  if (branches.empty())
    throw std::invalid_argument("sequential_quantum: no branches");
  const int first_in = dir == Direction::FirstToSecond ? dims.in1 : dims.in2;
  const int first_out = dir == Direction::FirstToSecond ? dims.out1 : dims.out2;
  const int second_in = dir == Direction::FirstToSecond ? dims.in2 : dims.in1;
  std::vector<double> ws;
  for (const auto& b : branches) {
    ws.push_back(b.weight);
    if (b.parallel) {
      require_density(b.joint_state, "sequential_quantum parallel branch");
      if (b.joint_state.rows() != static_cast<Eigen::Index>(dims.in1) * dims.in2)
        throw std::invalid_argument("sequential_quantum: joint state does not match dims");
    } else {
      if (!b.relay || b.memory_dim < 1)
        throw std::invalid_argument("sequential_quantum: memory branch needs a relay and memory_dim");
      require_density(b.first_with_memory, "sequential_quantum memory branch state");
      if (b.first_with_memory.rows() != static_cast<Eigen::Index>(first_in) * b.memory_dim)
        throw std::invalid_argument("sequential_quantum: memory-branch state dimension mismatch");
      if (b.relay->dim_in() != b.memory_dim * first_out || b.relay->dim_out() != second_in)
        throw std::invalid_argument("sequential_quantum: relay dimensions mismatch");
    }
  }
  check_weights(ws, "sequential_quantum");
  StrategySpec s;
  s.cls_ = StrategyClass::SequentialQuantum;
  s.dir_ = dir;
  s.dims_ = dims;
  s.memory_ = std::move(branches);
  return s;
}

double StrategySpec::operational_form(const CMat& e1, const CMat& r1, const CMat& e2,
                                      const CMat& r2) const {
  switch (cls_) {
    case StrategyClass::Individual:
    case StrategyClass::ClassicalParallel: {
      double acc = 0.0;
      for (const auto& b : parallel_)
        acc += b.weight * trace_product(b.state1, e1) * trace_product(b.state2, e2);
      return acc * r1.trace().real() * r2.trace().real();
    }
    case StrategyClass::QuantumParallel:
      return trace_product(joint_state_, kron(e1, e2)) * r1.trace().real() *
             r2.trace().real();
    case StrategyClass::SequentialNoMemory:
    case StrategyClass::SequentialClassical: {
      double acc = 0.0;
      if (dir_ == Direction::FirstToSecond) {
        for (const auto& b : sequential_)
          acc += b.weight * trace_product(b.first_state, e1) *
                 trace_product(b.relay.apply(r1), e2);
        return acc * r2.trace().real();
      }
      for (const auto& b : sequential_)
        acc += b.weight * trace_product(b.first_state, e2) *
               trace_product(b.relay.apply(r2), e1);
      return acc * r1.trace().real();
    }
    case StrategyClass::SequentialQuantum: {
      const bool fwd = dir_ == Direction::FirstToSecond;
      const CMat& first_effect = fwd ? e1 : e2;
      const CMat& first_prep = fwd ? r1 : r2;
      const CMat& second_effect = fwd ? e2 : e1;
      const CMat& second_prep = fwd ? r2 : r1;
      double acc = 0.0;
      for (const auto& b : memory_) {
        if (b.parallel) {
          acc += b.weight * trace_product(b.joint_state, kron(e1, e2)) *
                 first_prep.trace().real();
        } else {
          // Memory left behind by the first player's measurement, then the
          // relay carries (memory x re-preparation) to the second player.
          const int d_first = static_cast<int>(first_effect.rows());
          CMat post = kron(first_effect, identity(b.memory_dim)) * b.first_with_memory;
          CMat memory_state =
              partial_trace(post, {d_first, b.memory_dim}, {1});
          acc += b.weight *
                 trace_product(b.relay->apply(kron(memory_state, first_prep)),
                               second_effect);
        }
      }
      return acc * second_prep.trace().real();
    }
  }
  throw std::logic_error("operational_form: unhandled class");
}

StrategySpec reference_strategy(const std::string& name) {
  const CMat zero = bloch_pure_state(0, 0);
  const CMat one = bloch_pure_state(180, 0);
  const CMat plus = bloch_pure_state(90, 0);
  if (name == "si") return StrategySpec::individual(plus, plus);
  if (name == "sc")
    return StrategySpec::classical_parallel(
        {ParallelBranch{0.5, zero, zero}, ParallelBranch{0.5, one, one}});
  if (name == "sq") return StrategySpec::quantum_parallel(phi_plus_state(), 2, 2);
  if (name == "sn12")
    return StrategySpec::sequential(Direction::FirstToSecond, zero,
                                    QuantumChannel::identity_channel(2));
  if (name == "sc12")
    return StrategySpec::sequential_classical(
        Direction::FirstToSecond,
        {SequentialBranch{0.5, zero, QuantumChannel::identity_channel(2)},
         SequentialBranch{0.5, one, QuantumChannel::bit_flip()}});
  if (name == "sq12") {
    MemoryBranch par;
    par.weight = 0.75;
    par.parallel = true;
    par.joint_state = phi_plus_state();
    MemoryBranch mem;
    mem.weight = 0.25;
    mem.parallel = false;
    mem.first_with_memory = phi_plus_state();
    mem.relay = QuantumChannel::cnot_keep_target();
    mem.memory_dim = 2;
    return StrategySpec::sequential_quantum(Direction::FirstToSecond,
                                            {par, mem}, WireDims{2, 2, 2, 2});
  }
  throw std::invalid_argument("reference_strategy: unknown name '" + name + "'");
}

std::vector<std::string> reference_strategy_names() {
  return {"si", "sc", "sq", "sn12", "sc12", "sq12"};
}

namespace {

void check_setting_dims(const StrategySpec& spec, const MpSetting& setting) {
  const WireDims& d = spec.dims();
  if (setting.alice.dim_in() != d.in1 || setting.alice.dim_out() != d.out1 ||
      setting.bob.dim_in() != d.in2 || setting.bob.dim_out() != d.out2)
    throw std::invalid_argument("setting wires do not match the strategy dims");
}

}  // namespace

JointDistribution simulate_distribution(const StrategySpec& spec,
                                        const MpSetting& setting) {
  check_setting_dims(spec, setting);
  JointDistribution dist;
  dist.cards = {setting.alice.n_outcomes(), setting.alice.n_preps(),
                setting.bob.n_outcomes(), setting.bob.n_preps()};
  dist.p.assign(static_cast<std::size_t>(dist.cards[0]) * dist.cards[1] *
                    dist.cards[2] * dist.cards[3],
                0.0);
  for (int j1 = 0; j1 < dist.cards[0]; ++j1)
    for (int k1 = 0; k1 < dist.cards[1]; ++k1)
      for (int j2 = 0; j2 < dist.cards[2]; ++j2)
        for (int k2 = 0; k2 < dist.cards[3]; ++k2) {
          double v = setting.alice.cond(j1, k1) * setting.bob.cond(j2, k2) *
                     spec.operational_form(setting.alice.effects[j1],
                                           setting.alice.preps[k1],
                                           setting.bob.effects[j2],
                                           setting.bob.preps[k2]);
          if (v < 0.0 && v > -1e-12) v = 0.0;
          dist.at(j1, k1, j2, k2) = v;
        }
  dist.validate();
  return dist;
}

CMat instrument_choi(const PlayerSetting& p, int j, int k) {
  if (j < 0 || j >= p.n_outcomes() || k < 0 || k >= p.n_preps())
    throw std::invalid_argument("instrument_choi: outcome index out of range");
  return p.cond(j, k) * kron(p.effects[j], p.preps[k]);
}

JointDistribution born_distribution(const CMat& w, const WireDims& dims,
                                    const MpSetting& setting) {
  if (w.rows() != dims.total() || w.cols() != dims.total())
    throw std::invalid_argument("born_distribution: matrix size does not match dims");
  if (setting.alice.dim_in() != dims.in1 || setting.alice.dim_out() != dims.out1 ||
      setting.bob.dim_in() != dims.in2 || setting.bob.dim_out() != dims.out2)
    throw std::invalid_argument("born_distribution: setting wires do not match dims");

  std::vector<CMat> alice_instr, bob_instr;
  for (int j = 0; j < setting.alice.n_outcomes(); ++j)
    for (int k = 0; k < setting.alice.n_preps(); ++k)
      alice_instr.push_back(instrument_choi(setting.alice, j, k));
  for (int j = 0; j < setting.bob.n_outcomes(); ++j)
    for (int k = 0; k < setting.bob.n_preps(); ++k)
      bob_instr.push_back(instrument_choi(setting.bob, j, k));

  JointDistribution dist;
  dist.cards = {setting.alice.n_outcomes(), setting.alice.n_preps(),
                setting.bob.n_outcomes(), setting.bob.n_preps()};
  dist.p.assign(alice_instr.size() * bob_instr.size(), 0.0);
  std::size_t cell = 0;
  for (const CMat& ca : alice_instr)
    for (const CMat& cb : bob_instr) {
      double v = trace_product(w, kron(ca, cb));
      if (v < -1e-10)
        throw std::invalid_argument("born_distribution: negative probability; matrix is not physical");
      if (v < 0.0) v = 0.0;
      dist.p[cell++] = v;
    }
  dist.validate();
  return dist;
}

namespace {

CMat parallel_block_to_process(const CMat& on_inputs, const WireDims& d) {
  // on_inputs acts on in1 x in2; pad the outputs and move to canonical order.
  CMat padded = kron(on_inputs, kron(identity(d.out1), identity(d.out2)));
  return reorder_subsystems(padded, {d.in1, d.in2, d.out1, d.out2}, {0, 2, 1, 3});
}

}  // namespace

CMat build_process_matrix(const StrategySpec& spec) {
  const WireDims& d = spec.dims();
  switch (spec.cls()) {
    case StrategyClass::Individual:
    case StrategyClass::ClassicalParallel: {
      CMat w = CMat::Zero(d.total(), d.total());
      for (const auto& b : spec.parallel_branches())
        w += b.weight * parallel_block_to_process(kron(b.state1, b.state2), d);
      return w;
    }
    case StrategyClass::QuantumParallel:
      return parallel_block_to_process(spec.joint_state(), d);
    case StrategyClass::SequentialNoMemory:
    case StrategyClass::SequentialClassical: {
      CMat w = CMat::Zero(d.total(), d.total());
      if (spec.direction() == Direction::FirstToSecond) {
        for (const auto& b : spec.sequential_branches())
          w += b.weight *
               kron({b.first_state, b.relay.choi(), identity(d.out2)});
        return w;
      }
      for (const auto& b : spec.sequential_branches()) {
        CMat block = kron({b.first_state, b.relay.choi(), identity(d.out1)});
        // Built on in2 x (out2 x in1) x out1; bring to canonical order.
        w += b.weight *
             reorder_subsystems(block, {d.in2, d.out2, d.in1, d.out1}, {2, 3, 0, 1});
      }
      return w;
    }
    case StrategyClass::SequentialQuantum:
      throw std::invalid_argument(
          "build_process_matrix: quantum-memory strategies have no closed form here; "
          "use reconstruct_process_matrix");
  }
  throw std::logic_error("build_process_matrix: unhandled class");
}

CMat reconstruct_process_matrix(const StrategySpec& spec) {
  const WireDims& d = spec.dims();
  const auto b1 = hermitian_basis(d.in1);
  const auto b2 = hermitian_basis(d.out1);
  const auto b3 = hermitian_basis(d.in2);
  const auto b4 = hermitian_basis(d.out2);
  auto norms = [](const std::vector<CMat>& bs) {
    std::vector<double> ns;
    ns.reserve(bs.size());
    for (const CMat& b : bs) ns.push_back(hs_inner_real(b, b));
    return ns;
  };
  const auto n1 = norms(b1), n2 = norms(b2), n3 = norms(b3), n4 = norms(b4);
  CMat w = CMat::Zero(d.total(), d.total());
  for (std::size_t a = 0; a < b1.size(); ++a)
    for (std::size_t b = 0; b < b2.size(); ++b)
      for (std::size_t c = 0; c < b3.size(); ++c)
        for (std::size_t e = 0; e < b4.size(); ++e) {
          const double f = spec.operational_form(b1[a], b2[b], b3[c], b4[e]);
          const double coeff = f / (n1[a] * n2[b] * n3[c] * n4[e]);
          if (coeff == 0.0) continue;
          w += coeff * kron({b1[a], b2[b], b3[c], b4[e]});
        }
  return w;
}

CMat process_matrix_of(const StrategySpec& spec) {
  if (spec.cls() == StrategyClass::SequentialQuantum)
    return reconstruct_process_matrix(spec);
  return build_process_matrix(spec);
}

ProcessMatrixReport validate_process_matrix(const CMat& w, const WireDims& dims,
                                            double tol) {
  if (w.rows() != dims.total() || w.cols() != dims.total())
    throw std::invalid_argument("validate_process_matrix: size mismatch");
  const std::vector<int> dv = dims.as_vector();
  ProcessMatrixReport rep;
  rep.trace = w.trace().real();

  rep.min_eigenvalue =
      min_eigenvalue_hermitian(partial_transpose(w, dv, {0, 2}));

  // Output-2 marginal: (in2, out2) block must be (in2 marginal) x mixed out2.
  {
    CMat lhs = kron(partial_trace(w, dv, {2}) / dims.out2, identity(dims.out2));
    CMat rhs = partial_trace(w, dv, {2, 3});
    rep.residual_no_signal_to_2 = frobenius_distance(lhs, rhs);
  }
  // Output-1 marginal, same shape on player 1.
  {
    CMat lhs = kron(partial_trace(w, dv, {0}) / dims.out1, identity(dims.out1));
    CMat rhs = partial_trace(w, dv, {0, 1});
    rep.residual_no_signal_to_1 = frobenius_distance(lhs, rhs);
  }
  // One-way-ordering decomposition: W is the sum of its two one-way
  // reductions minus the doubly reduced part.
  {
    CMat t1 = reorder_subsystems(
        kron(partial_trace(w, dv, {0, 2, 3}) / dims.out1, identity(dims.out1)),
        {dims.in1, dims.in2, dims.out2, dims.out1}, {0, 3, 1, 2});
    CMat t2 = kron(partial_trace(w, dv, {0, 1, 2}) / dims.out2, identity(dims.out2));
    CMat t3 = reorder_subsystems(
        kron({partial_trace(w, dv, {0, 2}) / (dims.out1 * dims.out2),
              identity(dims.out1), identity(dims.out2)}),
        {dims.in1, dims.in2, dims.out1, dims.out2}, {0, 2, 1, 3});
    rep.residual_causal_mixture = frobenius_distance(w, t1 + t2 - t3);
  }

  const double expected_trace = static_cast<double>(dims.out1) * dims.out2;
  rep.physical = std::abs(rep.trace - expected_trace) <= tol &&
                 rep.min_eigenvalue >= -std::max(tol, 1e-8) &&
                 rep.residual_no_signal_to_2 <= tol &&
                 rep.residual_no_signal_to_1 <= tol &&
                 rep.residual_causal_mixture <= tol;
  return rep;
}

double structural_class_check(const CMat& w, const WireDims& dims, StrategyClass cls,
                              Direction dir) {
  if (w.rows() != dims.total() || w.cols() != dims.total())
    throw std::invalid_argument("structural_class_check: size mismatch");
  const std::vector<int> dv = dims.as_vector();
  const double dout = static_cast<double>(dims.out1) * dims.out2;
  switch (cls) {
    case StrategyClass::Individual: {
      CMat m1 = partial_trace(w, dv, {0}) / dout;
      CMat m2 = partial_trace(w, dv, {2}) / dout;
      CMat proj = reorder_subsystems(
          kron({kron(m1, m2), identity(dims.out1), identity(dims.out2)}),
          {dims.in1, dims.in2, dims.out1, dims.out2}, {0, 2, 1, 3});
      return frobenius_distance(w, proj);
    }
    case StrategyClass::QuantumParallel: {
      CMat joint = partial_trace(w, dv, {0, 2}) / dout;
      CMat proj = reorder_subsystems(
          kron({joint, identity(dims.out1), identity(dims.out2)}),
          {dims.in1, dims.in2, dims.out1, dims.out2}, {0, 2, 1, 3});
      return frobenius_distance(w, proj);
    }
    case StrategyClass::SequentialNoMemory: {
      if (dir == Direction::FirstToSecond) {
        CMat first = partial_trace(w, dv, {0}) / dout;
        CMat relay = partial_trace(w, dv, {1, 2}) / dims.out2;
        return frobenius_distance(w, kron({first, relay, identity(dims.out2)}));
      }
      if (dir == Direction::SecondToFirst) {
        CMat first = partial_trace(w, dv, {2}) / dout;
        CMat relay = partial_trace(w, dv, {0, 3}) / dims.out1;
        CMat proj = reorder_subsystems(
            kron({relay, first, identity(dims.out1)}),
            {dims.in1, dims.out2, dims.in2, dims.out1}, {0, 3, 2, 1});
        return frobenius_distance(w, proj);
      }
      break;
    }
    case StrategyClass::SequentialQuantum: {
      if (dir == Direction::FirstToSecond) {
        CMat proj = kron(partial_trace(w, dv, {0, 1, 2}) / dims.out2,
                         identity(dims.out2));
        return frobenius_distance(w, proj);
      }
      if (dir == Direction::SecondToFirst) {
        CMat proj = reorder_subsystems(
            kron(partial_trace(w, dv, {0, 2, 3}) / dims.out1, identity(dims.out1)),
            {dims.in1, dims.in2, dims.out2, dims.out1}, {0, 3, 1, 2});
        return frobenius_distance(w, proj);
      }
      break;
    }
    default:
      break;
  }
  throw std::invalid_argument(
      "structural_class_check: unsupported class tag " + to_string(cls) + "/" +
      to_string(dir));
}

}  // namespace causalab
