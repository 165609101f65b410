// Command-line front end: simulation of the built-in or user-supplied
// strategies against the bundled settings, identification of external counts,
// and the verification suites.

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "causalab/io.hpp"
#include "causalab/settings.hpp"
#include "causalab/statistics.hpp"
#include "causalab/strategy.hpp"
#include "causalab/theorems.hpp"

namespace {

using causalab::CountsTable;
using causalab::JointDistribution;
using causalab::MpSetting;
using causalab::Step2Setting;
using causalab::StrategySpec;
using Json = nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitUser = 2;
constexpr int kExitIo = 3;
constexpr int kExitInternal = 4;

std::uint64_t env_default_seed() {
  if (const char* env = std::getenv("CAUSAL_LAB_SEED")) {
    try {
      return std::stoull(env);
    } catch (const std::exception&) {
      throw std::runtime_error("CAUSAL_LAB_SEED is not a valid unsigned integer");
    }
  }
  return 1;
}

// Fills options the user did not pass from a JSON config file; command-line
// flags always win, built-in defaults lose to both.
class ConfigLayer {
 public:
  explicit ConfigLayer(const std::string& path) {
    if (path.empty()) return;
    try {
      doc_ = Json::parse(causalab::read_text_file(path));
    } catch (const Json::parse_error& e) {
      throw std::runtime_error(std::string("bad config JSON: ") + e.what());
    }
    if (!doc_.is_object()) throw std::runtime_error("config file must hold a JSON object");
  }

  template <typename T>
  void fill(const CLI::Option* opt, const char* key, T& var) const {
    if (opt->count() > 0 || !doc_.is_object() || !doc_.contains(key)) return;
    try {
      var = doc_[key].get<T>();
    } catch (const Json::exception& e) {
      throw std::runtime_error(std::string("config key \"") + key + "\": " + e.what());
    }
  }

  bool has(const char* key) const { return doc_.is_object() && doc_.contains(key); }

 private:
  Json doc_;
};

struct Selector {
  enum class Kind { E1, E2, S2, Ic } kind;
  int index = 0;           // catalog index for e1/e2
  std::uint64_t seed = 0;  // seed for s2
};

Selector parse_selector(const std::string& text) {
  auto bad = [&]() -> Selector {
    throw std::runtime_error("invalid setting selector '" + text +
                             "' (expected e1:n, e2:n, s2:seed, or ic)");
  };
  if (text == "ic") return {Selector::Kind::Ic, 0, 0};
  const auto colon = text.find(':');
  if (colon == std::string::npos) return bad();
  const std::string head = text.substr(0, colon);
  const std::string tail = text.substr(colon + 1);
  if (tail.empty()) return bad();
  try {
    if (head == "e1" || head == "e2") {
      std::size_t pos = 0;
      const int n = std::stoi(tail, &pos);
      if (pos != tail.size() || n < 1 || n > 7) return bad();
      return {head == "e1" ? Selector::Kind::E1 : Selector::Kind::E2, n, 0};
    }
    if (head == "s2") {
      std::size_t pos = 0;
      const std::uint64_t s = std::stoull(tail, &pos);
      if (pos != tail.size()) return bad();
      return {Selector::Kind::S2, 0, s};
    }
  } catch (const std::exception&) {
    return bad();
  }
  return bad();
}

StrategySpec load_strategy(const std::string& name_or_path) {
  for (const std::string& tag : causalab::reference_strategy_names())
    if (name_or_path == tag) return causalab::reference_strategy(tag);
  if (name_or_path.size() >= 5 &&
      name_or_path.compare(name_or_path.size() - 5, 5, ".json") == 0)
    return causalab::read_strategy_json(name_or_path);
  throw std::runtime_error("unknown strategy '" + name_or_path +
                           "' (expected a built-in name or a .json path)");
}

struct SimulateArgs {
  std::string strategy = "si";
  std::string setting = "e1:1";
  long long samples = 100000;
  std::uint64_t seed = 0;
  bool exact = false;
  std::string out = "counts.csv";
  std::string emit_w;
};

int run_simulate(const SimulateArgs& a) {
  const StrategySpec spec = load_strategy(a.strategy);
  const Selector sel = parse_selector(a.setting);
  if (a.samples < 1) throw std::runtime_error("--samples must be at least 1");

  Json sidecar;
  sidecar["config"] = {{"strategy", a.strategy},
                       {"setting", a.setting},
                       {"samples", a.samples},
                       {"seed", a.seed}};

  if (sel.kind == Selector::Kind::E2) {
    const Step2Setting s2 = causalab::catalog_e2_setting(sel.index);
    std::array<CountsTable, 4> tables;
    Json exact_pairs;
    static const char* kPairKey[4] = {"11", "12", "21", "22"};
    for (int i = 0; i < 2; ++i)
      for (int j = 0; j < 2; ++j) {
        const int idx = i * 2 + j;
        const JointDistribution dist =
            causalab::simulate_distribution(spec, s2.pair(i, j));
        tables[idx] =
            causalab::sample_counts(dist, a.samples, causalab::split_seed(a.seed, idx));
        if (a.exact)
          exact_pairs[kPairKey[idx]] =
              Json::parse(causalab::distribution_to_json_text(dist));
      }
    causalab::write_pair_counts_csv(a.out, tables);
    if (a.exact) {
      sidecar["exact"] = {{"pairs", exact_pairs}};
      causalab::write_json_document(a.out + ".exact.json", sidecar.dump(2) + "\n", true);
    }
  } else {
    MpSetting setting;
    if (sel.kind == Selector::Kind::E1)
      setting = causalab::catalog_e1_setting(sel.index);
    else if (sel.kind == Selector::Kind::S2)
      setting = causalab::random_s2_setting(2, 2, 2, 2, sel.seed);
    else
      setting = causalab::tomographically_complete_setting(2, 2, 2, 2);
    const JointDistribution dist = causalab::simulate_distribution(spec, setting);
    causalab::write_counts_csv(a.out, causalab::sample_counts(dist, a.samples, a.seed));
    if (a.exact) {
      sidecar["exact"] = Json::parse(causalab::distribution_to_json_text(dist));
      causalab::write_json_document(a.out + ".exact.json", sidecar.dump(2) + "\n", true);
    }
  }

  if (!a.emit_w.empty()) {
    const causalab::CMat w = causalab::process_matrix_of(spec);
    const auto report = causalab::validate_process_matrix(w, spec.dims());
    causalab::write_json_document(
        a.emit_w, causalab::process_matrix_to_json_text(w, spec.dims(), report), true);
  }
  std::cout << "wrote " << a.out << "\n";
  return kExitOk;
}

struct IdentifyArgs {
  std::string counts;
  std::vector<std::string> step2;
  double alpha = 0.05;
  double chsh_margin = 0.0;  // in units of the correlator standard error
  std::string out;
};

int run_identify(const IdentifyArgs& a) {
  if (a.alpha <= 0.0 || a.alpha >= 1.0)
    throw std::runtime_error("--alpha must lie strictly between 0 and 1");
  const CountsTable step1 = causalab::read_counts_any(a.counts);
  std::optional<std::array<CountsTable, 4>> step2;
  if (!a.step2.empty()) step2 = causalab::read_step2_counts(a.step2);

  double margin = 0.0;
  if (a.chsh_margin > 0.0 && step2.has_value()) {
    const Eigen::Matrix2d sig = causalab::correlator_sigmas(*step2);
    margin = a.chsh_margin * std::sqrt(sig.array().square().sum());
  }
  const causalab::Verdict v = causalab::identify(step1, step2, a.alpha, margin);
  const std::string text = causalab::verdict_to_json_text(v);
  std::cout << text;
  if (!a.out.empty()) causalab::write_json_document(a.out, text, true);
  return kExitOk;
}

struct SuiteArgs {
  std::string which;
  int trials = 50;
  long long samples = 1000000;
  int seeds = 20;
  double alpha = 0.05;
  std::uint64_t seed = 0;
  std::string out;
  std::string rows;
};

int run_suites(const SuiteArgs& a) {
  std::string text;
  std::vector<causalab::TrialRow> rows;
  if (a.which == "theorem1") {
    const auto rep = causalab::theorem1_suite(a.trials, a.seed);
    text = causalab::theorem1_report_to_json_text(rep);
    rows = rep.rows;
  } else if (a.which == "theorem2") {
    const auto rep = causalab::theorem2_suite(a.trials, a.seed);
    text = causalab::theorem2_report_to_json_text(rep);
    rows = rep.rows;
  } else if (a.which == "lemmas") {
    const auto rep = causalab::lemma_suite(a.trials, a.seed);
    text = causalab::lemma_report_to_json_text(rep);
    rows = rep.rows;
  } else if (a.which == "reproduce-table3") {
    const auto rep = causalab::reproduce_table3(a.samples, a.seeds, a.alpha, a.seed);
    text = causalab::table3_report_to_json_text(rep);
  } else {
    throw std::runtime_error("unknown suite '" + a.which +
                             "' (theorem1 | theorem2 | lemmas | reproduce-table3)");
  }
  std::cout << text;
  if (!a.out.empty()) causalab::write_json_document(a.out, text, true);
  if (!a.rows.empty()) causalab::write_trial_rows_csv(a.rows, rows);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Definite-order strategy laboratory: simulation, identification, "
               "and verification suites for two-player measure-and-prepare "
               "experiments"};
  app.require_subcommand(1);

  SimulateArgs sim;
  IdentifyArgs idf;
  SuiteArgs sui;
  std::string sim_config, idf_config, sui_config;

  CLI::App* c_sim = app.add_subcommand(
      "simulate", "Sample counts from a strategy under a setting selector");
  auto* o_sim_strategy = c_sim->add_option(
      "--strategy", sim.strategy, "Built-in name (si|sc|sq|sn12|sc12|sq12) or JSON path");
  auto* o_sim_setting =
      c_sim->add_option("--setting", sim.setting, "Selector: e1:n | e2:n | s2:seed | ic");
  auto* o_sim_samples = c_sim->add_option("--samples", sim.samples, "Total sample count");
  auto* o_sim_seed = c_sim->add_option("--seed", sim.seed, "Sampling seed");
  c_sim->add_flag("--exact", sim.exact, "Also write an exact-distribution sidecar JSON");
  c_sim->add_option("--out", sim.out, "Counts CSV path (default counts.csv)");
  c_sim->add_option("--emit-process-matrix", sim.emit_w,
                    "Write the strategy's process matrix and validity report as JSON");
  c_sim->add_option("--config", sim_config, "JSON config file (flags win)");

  CLI::App* c_idf = app.add_subcommand(
      "identify", "Run the two-step identification pipeline on counts files");
  c_idf->add_option("--counts", idf.counts, "Step-1 counts (CSV or JSON)")->required();
  c_idf->add_option("--step2", idf.step2,
                    "Step-2 counts: one pair-column CSV or four per-pair files");
  auto* o_idf_alpha = c_idf->add_option("--alpha", idf.alpha, "Significance level");
  auto* o_idf_margin = c_idf->add_option(
      "--chsh-margin", idf.chsh_margin,
      "Require the CHSH maximum to exceed 2 by this many standard errors");
  c_idf->add_option("--out", idf.out, "Also write the verdict JSON to this path");
  c_idf->add_option("--config", idf_config, "JSON config file (flags win)");

  CLI::App* c_sui = app.add_subcommand("suites", "Run a verification suite");
  c_sui->add_option("suite", sui.which, "theorem1 | theorem2 | lemmas | reproduce-table3")
      ->required();
  auto* o_sui_trials = c_sui->add_option("--trials", sui.trials, "Trials per case/pair");
  auto* o_sui_samples =
      c_sui->add_option("--samples", sui.samples, "Samples per run (reproduce-table3)");
  auto* o_sui_seeds =
      c_sui->add_option("--seeds", sui.seeds, "Sampling repetitions (reproduce-table3)");
  auto* o_sui_alpha = c_sui->add_option("--alpha", sui.alpha, "Significance level");
  auto* o_sui_seed = c_sui->add_option("--seed", sui.seed, "Master seed");
  c_sui->add_option("--out", sui.out, "Write the report JSON to this path");
  c_sui->add_option("--rows", sui.rows, "Write per-trial rows CSV to this path");
  c_sui->add_option("--config", sui_config, "JSON config file (flags win)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUser;
  }

  try {
    if (c_sim->parsed()) {
      const ConfigLayer cfg(sim_config);
      cfg.fill(o_sim_strategy, "strategy", sim.strategy);
      cfg.fill(o_sim_setting, "setting", sim.setting);
      cfg.fill(o_sim_samples, "samples", sim.samples);
      cfg.fill(o_sim_seed, "seed", sim.seed);
      if (o_sim_seed->count() == 0 && !cfg.has("seed")) sim.seed = env_default_seed();
      return run_simulate(sim);
    }
    if (c_idf->parsed()) {
      const ConfigLayer cfg(idf_config);
      cfg.fill(o_idf_alpha, "alpha", idf.alpha);
      cfg.fill(o_idf_margin, "chsh_margin", idf.chsh_margin);
      return run_identify(idf);
    }
    const ConfigLayer cfg(sui_config);
    cfg.fill(o_sui_trials, "trials", sui.trials);
    cfg.fill(o_sui_samples, "samples", sui.samples);
    cfg.fill(o_sui_seeds, "seeds", sui.seeds);
    cfg.fill(o_sui_alpha, "alpha", sui.alpha);
    cfg.fill(o_sui_seed, "seed", sui.seed);
    if (o_sui_seed->count() == 0 && !cfg.has("seed")) sui.seed = env_default_seed();
    return run_suites(sui);
  } catch (const causalab::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUser;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUser;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitInternal;
  }
}
