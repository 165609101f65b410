// File formats: counts tables as CSV (plain and pair-column variants, plus a
// JSON mirror), and JSON serialization for matrices, settings, strategy
// specs, verdicts, and suite reports. JSON text builders are exposed as
// strings so the public headers stay free of the JSON library.

#ifndef CAUSALAB_IO_HPP
#define CAUSALAB_IO_HPP

#include <array>
#include <stdexcept>
#include <string>
#include <vector>

#include "causalab/identifier.hpp"
#include "causalab/settings.hpp"
#include "causalab/statistics.hpp"
#include "causalab/strategy.hpp"
#include "causalab/theorems.hpp"

namespace causalab {

// Filesystem-level failure (cannot open, short write); format and content
// problems throw plain std::runtime_error instead.
struct IoError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// UTC wall-clock stamp, ISO 8601. The only non-deterministic field any
// writer emits; it always lives under a top-level "meta" object.
std::string timestamp_utc();

// Counts CSV: header "j1,k1,j2,k2,count", 1-based indices, LF endings, every
// cell written. Readers infer the cardinalities, treat absent cells as zero,
// and throw std::runtime_error on malformed input, duplicate cells, or
// negative counts.
void write_counts_csv(const std::string& path, const CountsTable& counts);
CountsTable read_counts_csv(const std::string& path);

// Pair-column variant for the correlation step: header
// "pair,j1,k1,j2,k2,count" with pair in {11, 12, 21, 22}; tables ordered
// (1,1), (1,2), (2,1), (2,2).
void write_pair_counts_csv(const std::string& path,
                           const std::array<CountsTable, 4>& tables);
std::array<CountsTable, 4> read_pair_counts_csv(const std::string& path);

// JSON mirror of the counts CSV: {"rows": [[j1,k1,j2,k2,count], ...]}.
void write_counts_json(const std::string& path, const CountsTable& counts);
CountsTable read_counts_json(const std::string& path);

// Dispatch on extension: ".json" uses the JSON mirror, anything else CSV.
CountsTable read_counts_any(const std::string& path);

// One pair-column file, or four plain files ordered (1,1),(1,2),(2,1),(2,2).
std::array<CountsTable, 4> read_step2_counts(const std::vector<std::string>& paths);

// JSON text builders (two-space indent, trailing newline, stable key order).
std::string matrix_to_json_text(const CMat& m);
std::string distribution_to_json_text(const JointDistribution& d);
std::string setting_to_json_text(const MpSetting& s);
std::string strategy_to_json_text(const StrategySpec& spec);
std::string verdict_to_json_text(const Verdict& v);
std::string process_matrix_to_json_text(const CMat& w, const WireDims& dims,
                                        const ProcessMatrixReport& report);
std::string theorem1_report_to_json_text(const Theorem1Report& rep);
std::string theorem2_report_to_json_text(const Theorem2Report& rep);
std::string lemma_report_to_json_text(const LemmaReport& rep);
std::string table3_report_to_json_text(const Table3Report& rep);

// Parsers for the formats above; throw std::runtime_error with a reason on
// malformed documents (structural problems) and propagate
// std::invalid_argument from domain validation.
CMat matrix_from_json_text(const std::string& text);
MpSetting setting_from_json_text(const std::string& text);
StrategySpec strategy_from_json_text(const std::string& text);

MpSetting read_setting_json(const std::string& path);
StrategySpec read_strategy_json(const std::string& path);

// Writes JSON text to a file; when stamp is true the document gains a
// {"meta": {"generated_at": ...}} object, the only run-dependent field.
void write_json_document(const std::string& path, const std::string& text, bool stamp);

// Per-trial rows as CSV: "seed,subject,condition,deviation,residual,pass".
void write_trial_rows_csv(const std::string& path, const std::vector<TrialRow>& rows);

std::string read_text_file(const std::string& path);

}  // namespace causalab

#endif
