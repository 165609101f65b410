// Acceptance harness: one self-contained check per shipped guarantee, each
// printing a single PASS/FAIL line. Exit status is the number of failures.

#include <array>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "causalab/identifier.hpp"
#include "causalab/io.hpp"
#include "causalab/operators.hpp"
#include "causalab/settings.hpp"
#include "causalab/statistics.hpp"
#include "causalab/strategy.hpp"
#include "causalab/theorems.hpp"

using namespace causalab;

namespace {

constexpr std::uint64_t kMasterSeed = 1;

struct Outcome {
  bool pass = false;
  std::string detail;
};

double elapsed_s(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::string fmt(double v) {
  std::ostringstream os;
  os.precision(6);
  os << v;
  return os.str();
}

// 1. Both backends normalize and agree elementwise on every bundled
//    strategy-setting combination.
Outcome criterion1() {
  const auto start = std::chrono::steady_clock::now();
  double worst_sum = 0.0;
  double worst_diff = 0.0;
  double recon_residual = 0.0;
  for (const std::string& name : reference_strategy_names()) {
    const StrategySpec spec = reference_strategy(name);
    const CMat w = process_matrix_of(spec);
    if (spec.cls() == StrategyClass::SequentialQuantum) {
      const ProcessMatrixReport rep = validate_process_matrix(w, spec.dims());
      recon_residual = std::max(
          {recon_residual, rep.residual_no_signal_to_2, rep.residual_no_signal_to_1,
           rep.residual_causal_mixture});
    }
    for (int n = 1; n <= 7; ++n) {
      const MpSetting setting = catalog_e1_setting(n);
      const JointDistribution sim = simulate_distribution(spec, setting);
      const JointDistribution born = born_distribution(w, spec.dims(), setting);
      double s1 = 0.0, s2 = 0.0;
      for (double v : sim.p) s1 += v;
      for (double v : born.p) s2 += v;
      worst_sum = std::max({worst_sum, std::abs(s1 - 1.0), std::abs(s2 - 1.0)});
      for (std::size_t i = 0; i < sim.p.size(); ++i)
        worst_diff = std::max(worst_diff, std::abs(sim.p[i] - born.p[i]));
    }
  }
  const double secs = elapsed_s(start);
  Outcome o;
  o.pass = worst_sum <= 1e-10 && worst_diff <= 1e-10 && recon_residual <= 1e-9 &&
           secs < 10.0;
  o.detail = "worst sum error " + fmt(worst_sum) + ", worst backend gap " +
             fmt(worst_diff) + ", reconstruction residual " + fmt(recon_residual) +
             ", " + fmt(secs) + " s";
  return o;
}

// 2. Every bundled process matrix satisfies the validity conditions.
Outcome criterion2() {
  double worst_residual = 0.0;
  double worst_trace = 0.0;
  bool all_physical = true;
  for (const std::string& name : reference_strategy_names()) {
    const StrategySpec spec = reference_strategy(name);
    const CMat w = process_matrix_of(spec);
    const ProcessMatrixReport rep = validate_process_matrix(w, spec.dims());
    all_physical = all_physical && rep.physical;
    worst_residual = std::max(
        {worst_residual, rep.residual_no_signal_to_2, rep.residual_no_signal_to_1,
         rep.residual_causal_mixture});
    const double target = spec.dims().out1 * spec.dims().out2;
    worst_trace = std::max(worst_trace, std::abs(rep.trace - target));
  }
  Outcome o;
  o.pass = all_physical && worst_residual <= 1e-8 && worst_trace <= 1e-8;
  o.detail = "worst residual " + fmt(worst_residual) + ", worst trace error " +
             fmt(worst_trace);
  return o;
}

// 3. In-class strategies satisfy their Markov condition exactly while
//    out-of-class ones violate it, over 50 random trials per class.
Outcome criterion3() {
  const auto start = std::chrono::steady_clock::now();
  const Theorem1Report rep = theorem1_suite(50, kMasterSeed);
  int in_ok = 0, out_ok = 0, trials = 0;
  for (const auto& c : rep.cases) {
    in_ok += c.in_class_ok;
    out_ok += c.out_class_ok;
    trials += c.trials;
  }
  const double secs = elapsed_s(start);
  Outcome o;
  o.pass = rep.all_pass && in_ok == trials && out_ok == trials && secs < 120.0;
  o.detail = "in-class " + std::to_string(in_ok) + "/" + std::to_string(trials) +
             ", out-of-class " + std::to_string(out_ok) + "/" +
             std::to_string(trials) + ", " + fmt(secs) + " s";
  return o;
}

// 4. Out-of-class membership is generic: violations on at least 99.5% of 200
//    random settings for each strategy-class pair.
Outcome criterion4() {
  const auto start = std::chrono::steady_clock::now();
  const Theorem2Report rep = theorem2_suite(200, kMasterSeed);
  int pairs_checked = 0;
  double worst_fraction = 1.0;
  bool control_clean = true;
  for (const auto& p : rep.pairs) {
    if (p.control) {
      control_clean = control_clean && p.pass && p.violations == 0;
      continue;
    }
    ++pairs_checked;
    worst_fraction = std::min(worst_fraction, p.violation_fraction);
  }
  const double secs = elapsed_s(start);
  Outcome o;
  o.pass = rep.all_pass && pairs_checked >= 6 && worst_fraction >= 0.995 &&
           control_clean && secs < 300.0;
  o.detail = std::to_string(pairs_checked) + " pairs, worst violation fraction " +
             fmt(worst_fraction) + ", control clean " +
             (control_clean ? "yes" : "no") + ", " + fmt(secs) + " s";
  return o;
}

// Independent re-derivation of the grouped Pearson statistic used by
// criterion 5 (kept separate from the library on purpose).
double brute_statistic(const CountsTable& t, const VarGrouping& g) {
  const auto card = [&](const std::vector<int>& vars) {
    int c = 1;
    for (int v : vars) c *= t.cards[v];
    return c;
  };
  const auto gidx = [&](const std::array<int, 4>& cell,
                        const std::vector<int>& vars) {
    int idx = 0;
    for (int v : vars) idx = idx * t.cards[v] + cell[v];
    return idx;
  };
  const int dx = card(g.x), dy = card(g.y), dz = card(g.z);
  std::vector<double> nxy(dx * dy, 0.0), nyz(dy * dz, 0.0), ny(dy, 0.0),
      nxyz(dx * dy * dz, 0.0);
  for (int j1 = 0; j1 < t.cards[0]; ++j1)
    for (int k1 = 0; k1 < t.cards[1]; ++k1)
      for (int j2 = 0; j2 < t.cards[2]; ++j2)
        for (int k2 = 0; k2 < t.cards[3]; ++k2) {
          const std::array<int, 4> cell = {j1, k1, j2, k2};
          const double n = static_cast<double>(t.at(j1, k1, j2, k2));
          const int x = gidx(cell, g.x), y = gidx(cell, g.y), z = gidx(cell, g.z);
          nxy[x * dy + y] += n;
          nyz[y * dz + z] += n;
          ny[y] += n;
          nxyz[(x * dy + y) * dz + z] += n;
        }
  double stat = 0.0;
  for (int x = 0; x < dx; ++x)
    for (int y = 0; y < dy; ++y)
      for (int z = 0; z < dz; ++z) {
        if (ny[y] <= 0.0) continue;
        const double e = nxy[x * dy + y] * nyz[y * dz + z] / ny[y];
        if (e <= 0.0) continue;
        const double d = nxyz[(x * dy + y) * dz + z] - e;
        stat += d * d / e;
      }
  return stat;
}

// 5. The chi-squared layer agrees with a brute-force recomputation and the
//    published 0.95 critical values.
Outcome criterion5() {
  const std::vector<MarkovCondition> prims = {
      MarkovCondition::Independence,    MarkovCondition::ChainK1J1J2,
      MarkovCondition::ChainJ1K1J2,     MarkovCondition::ChainJ1K2J2,
      MarkovCondition::ChainJ1K1_J2_K2, MarkovCondition::ChainK1_J1_J2K2};
  double worst_gap = 0.0;
  std::mt19937_64 rng(split_seed(kMasterSeed, 5001));
  std::uniform_int_distribution<long long> cell(0, 700);
  for (int trial = 0; trial < 20; ++trial) {
    CountsTable t;
    t.cards = {2, 2, 2, 2};
    t.n.resize(16);
    for (auto& v : t.n) v = cell(rng);
    for (MarkovCondition prim : prims) {
      const double lib = chi2_primitive_test(t, prim, 0.05).statistic;
      const double ref = brute_statistic(t, grouping_of(prim));
      worst_gap = std::max(worst_gap, std::abs(lib - ref));
    }
  }
  const double cdf_gap = std::max(
      {std::abs(chi2_cdf(5.991, 2) - 0.95), std::abs(chi2_cdf(12.592, 6) - 0.95),
       std::abs(chi2_cdf(16.919, 9) - 0.95)});
  Outcome o;
  o.pass = worst_gap <= 1e-10 && cdf_gap <= 1e-4;
  o.detail = "worst statistic gap " + fmt(worst_gap) + ", worst CDF gap " +
             fmt(cdf_gap);
  return o;
}

// 6. Finite-sample step-1 identification: 42 strategy-setting cells, 20 seeded
//    runs each at one million samples, at least 95% correct per cell.
Outcome criterion6() {
  const auto start = std::chrono::steady_clock::now();
  const Table3Report rep = reproduce_table3(1000000, 20, 0.05, kMasterSeed);
  int failing = 0;
  double worst_rate = 1.0;
  std::string worst_cell = "none";
  for (const auto& c : rep.cells) {
    if (!c.pass) ++failing;
    if (c.step1_rate < worst_rate) {
      worst_rate = c.step1_rate;
      worst_cell = c.strategy_tag + "@set" + std::to_string(c.setting);
    }
  }
  const double secs = elapsed_s(start);
  Outcome o;
  o.pass = rep.all_pass && failing == 0 && secs < 600.0;
  o.detail = std::to_string(failing) + "/42 cells below 95% (worst " +
             worst_cell + " at " + fmt(worst_rate) + "), " + fmt(secs) + " s";
  return o;
}

// 7. The correlation layer certifies quantum memory at the maximal violation
//    and never flags the classical reference.
Outcome criterion7() {
  const StrategySpec sq = reference_strategy("sq");
  const StrategySpec sc = reference_strategy("sc");
  const auto pairs_of = [](const StrategySpec& spec, int n) {
    const Step2Setting s2 = catalog_e2_setting(n);
    return std::array<JointDistribution, 4>{
        simulate_distribution(spec, s2.pair(0, 0)),
        simulate_distribution(spec, s2.pair(0, 1)),
        simulate_distribution(spec, s2.pair(1, 0)),
        simulate_distribution(spec, s2.pair(1, 1))};
  };

  const ChshResult qr = chsh_max(correlators_from_exact(pairs_of(sq, 1)));
  const double tsirelson_gap = std::abs(qr.max_value - 2.0 * std::sqrt(2.0));

  double worst_classical = 0.0;
  bool classical_flagged = false;
  for (int n = 1; n <= 7; ++n) {
    const ChshResult cr = chsh_max(correlators_from_exact(pairs_of(sc, n)));
    worst_classical = std::max(worst_classical, cr.max_value);
    classical_flagged = classical_flagged || cr.violated;
  }

  const VerdictLabel q_label =
      resolve_memory_label(VerdictLabel::ParallelMemoryPending, qr.violated);
  const VerdictLabel c_label =
      resolve_memory_label(VerdictLabel::ParallelMemoryPending, classical_flagged);

  Outcome o;
  o.pass = tsirelson_gap <= 1e-9 && qr.violated &&
           worst_classical <= 2.0 + 1e-10 && !classical_flagged &&
           q_label == VerdictLabel::SQ && c_label == VerdictLabel::SC;
  o.detail = "Tsirelson gap " + fmt(tsirelson_gap) + ", classical max " +
             fmt(worst_classical) + ", labels " + to_string(q_label) + "/" +
             to_string(c_label);
  return o;
}

// 8. The quantum-memory reference at correlation setting 3: the pipeline label
//    must sit on the same side of the local bound as the ideal value, and the
//    reproduce report must record the comparison.
Outcome criterion8() {
  const StrategySpec sq12 = reference_strategy("sq12");
  const Step2Setting s2 = catalog_e2_setting(3);
  const std::array<JointDistribution, 4> pairs = {
      simulate_distribution(sq12, s2.pair(0, 0)),
      simulate_distribution(sq12, s2.pair(0, 1)),
      simulate_distribution(sq12, s2.pair(1, 0)),
      simulate_distribution(sq12, s2.pair(1, 1))};
  const ChshResult r = chsh_max(correlators_from_exact(pairs));
  const VerdictLabel label =
      resolve_memory_label(VerdictLabel::Seq12MemoryPending, r.violated);
  const bool side_consistent =
      (r.max_value > 2.0) == (label == VerdictLabel::SQ12);

  const Table3Report rep = reproduce_table3(1000, 1, 0.05, kMasterSeed);
  bool recorded = false;
  for (const std::string& note : rep.notes)
    if (note.find("sq12") != std::string::npos &&
        note.find("setting 3") != std::string::npos)
      recorded = true;

  Outcome o;
  o.pass = side_consistent && recorded;
  o.detail = "ideal max S " + fmt(r.max_value) + ", label " + to_string(label) +
             ", note recorded " + (recorded ? "yes" : "no");
  return o;
}

// 9. Same master seed, same bytes: every suite report is reproducible.
Outcome criterion9() {
  const std::string t1a = theorem1_report_to_json_text(theorem1_suite(5, kMasterSeed));
  const std::string t1b = theorem1_report_to_json_text(theorem1_suite(5, kMasterSeed));
  const std::string t2a = theorem2_report_to_json_text(theorem2_suite(20, kMasterSeed));
  const std::string t2b = theorem2_report_to_json_text(theorem2_suite(20, kMasterSeed));
  const std::string lma = lemma_report_to_json_text(lemma_suite(5, kMasterSeed));
  const std::string lmb = lemma_report_to_json_text(lemma_suite(5, kMasterSeed));
  const std::string t3a =
      table3_report_to_json_text(reproduce_table3(20000, 2, 0.05, kMasterSeed));
  const std::string t3b =
      table3_report_to_json_text(reproduce_table3(20000, 2, 0.05, kMasterSeed));
  const std::string other =
      theorem1_report_to_json_text(theorem1_suite(5, kMasterSeed + 1));

  Outcome o;
  o.pass = t1a == t1b && t2a == t2b && lma == lmb && t3a == t3b && t1a != other;
  o.detail = std::string("theorem1 ") + (t1a == t1b ? "stable" : "unstable") +
             ", theorem2 " + (t2a == t2b ? "stable" : "unstable") + ", lemmas " +
             (lma == lmb ? "stable" : "unstable") + ", reproduction " +
             (t3a == t3b ? "stable" : "unstable");
  return o;
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::function<Outcome()>> criteria = {
      criterion1, criterion2, criterion3, criterion4, criterion5,
      criterion6, criterion7, criterion8, criterion9};

  int first = 1, last = static_cast<int>(criteria.size());
  if (argc == 2) {
    try {
      first = last = std::stoi(argv[1]);
    } catch (const std::exception&) {
      std::cerr << "usage: causalab_acceptance [1-9]\n";
      return 64;
    }
    if (first < 1 || first > static_cast<int>(criteria.size())) {
      std::cerr << "usage: causalab_acceptance [1-9]\n";
      return 64;
    }
  } else if (argc > 2) {
    std::cerr << "usage: causalab_acceptance [1-9]\n";
    return 64;
  }

  int failures = 0;
  for (int n = first; n <= last; ++n) {
    Outcome o;
    try {
      o = criteria[n - 1]();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::cout << "criterion " << n << ": " << (o.pass ? "PASS" : "FAIL") << " ("
              << o.detail << ")\n";
    if (!o.pass) ++failures;
  }
  return failures;
}
