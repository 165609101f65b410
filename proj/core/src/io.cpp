#include "causalab/io.hpp"

#include <cctype>
#include <cstdio>
#include <ctime>
#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "causalab/channel.hpp"

namespace causalab {

using Json = nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::runtime_error(what); }

std::ofstream open_out(const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw IoError("cannot open for writing: " + path);
  return out;
}

std::ifstream open_in(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError("cannot open for reading: " + path);
  return in;
}

void finish_out(std::ofstream& out, const std::string& path) {
  out.flush();
  if (!out) throw IoError("write failed: " + path);
}

std::string strip_cr(std::string line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == ' '))
    line.pop_back();
  return line;
}

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string cur;
  for (char ch : line) {
    if (ch == ',') {
      fields.push_back(cur);
      cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  fields.push_back(cur);
  return fields;
}

long long parse_ll(const std::string& s, const std::string& context) {
  try {
    std::size_t pos = 0;
    const long long v = std::stoll(s, &pos);
    if (pos != s.size()) fail("trailing characters in number '" + s + "' " + context);
    return v;
  } catch (const std::invalid_argument&) {
    fail("not a number: '" + s + "' " + context);
  } catch (const std::out_of_range&) {
    fail("number out of range: '" + s + "' " + context);
  }
}

struct RawCell {
  int j1, k1, j2, k2;
  long long count;
};

CountsTable assemble_counts(const std::vector<RawCell>& cells, const std::string& path) {
  if (cells.empty()) fail("no data rows in " + path);
  std::array<int, 4> cards = {0, 0, 0, 0};
  for (const RawCell& c : cells) {
    if (c.j1 < 1 || c.k1 < 1 || c.j2 < 1 || c.k2 < 1)
      fail("indices must be 1-based and positive in " + path);
    if (c.count < 0) fail("negative count in " + path);
    cards[0] = std::max(cards[0], c.j1);
    cards[1] = std::max(cards[1], c.k1);
    cards[2] = std::max(cards[2], c.j2);
    cards[3] = std::max(cards[3], c.k2);
  }
  CountsTable t;
  t.cards = cards;
  t.n.assign(static_cast<std::size_t>(cards[0]) * cards[1] * cards[2] * cards[3], 0);
  std::vector<bool> seen(t.n.size(), false);
  for (const RawCell& c : cells) {
    const int idx = t.index(c.j1 - 1, c.k1 - 1, c.j2 - 1, c.k2 - 1);
    if (seen[idx]) fail("duplicate cell in " + path);
    seen[idx] = true;
    t.n[idx] = c.count;
  }
  return t;
}

}  // namespace

std::string timestamp_utc() {
  const std::time_t now = std::time(nullptr);
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

std::string read_text_file(const std::string& path) {
  std::ifstream in = open_in(path);
  std::ostringstream os;
  os << in.rdbuf();
  if (!in && !in.eof()) throw IoError("read failed: " + path);
  return os.str();
}

void write_counts_csv(const std::string& path, const CountsTable& counts) {
  std::ofstream out = open_out(path);
  out << "j1,k1,j2,k2,count\n";
  for (int j1 = 0; j1 < counts.cards[0]; ++j1)
    for (int k1 = 0; k1 < counts.cards[1]; ++k1)
      for (int j2 = 0; j2 < counts.cards[2]; ++j2)
        for (int k2 = 0; k2 < counts.cards[3]; ++k2)
          out << j1 + 1 << ',' << k1 + 1 << ',' << j2 + 1 << ',' << k2 + 1 << ','
              << counts.at(j1, k1, j2, k2) << '\n';
  finish_out(out, path);
}

CountsTable read_counts_csv(const std::string& path) {
  std::ifstream in = open_in(path);
  std::string line;
  if (!std::getline(in, line)) fail("empty file: " + path);
  if (strip_cr(line) != "j1,k1,j2,k2,count")
    fail("bad header in " + path + " (expected j1,k1,j2,k2,count)");
  std::vector<RawCell> cells;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    const std::string ctx = "at " + path + ":" + std::to_string(lineno);
    if (f.size() != 5) fail("expected 5 fields " + ctx);
    cells.push_back({static_cast<int>(parse_ll(f[0], ctx)),
                     static_cast<int>(parse_ll(f[1], ctx)),
                     static_cast<int>(parse_ll(f[2], ctx)),
                     static_cast<int>(parse_ll(f[3], ctx)), parse_ll(f[4], ctx)});
  }
  return assemble_counts(cells, path);
}

void write_pair_counts_csv(const std::string& path,
                           const std::array<CountsTable, 4>& tables) {
  static const int kPairTag[4] = {11, 12, 21, 22};
  std::ofstream out = open_out(path);
  out << "pair,j1,k1,j2,k2,count\n";
  for (int idx = 0; idx < 4; ++idx) {
    const CountsTable& t = tables[idx];
    for (int j1 = 0; j1 < t.cards[0]; ++j1)
      for (int k1 = 0; k1 < t.cards[1]; ++k1)
        for (int j2 = 0; j2 < t.cards[2]; ++j2)
          for (int k2 = 0; k2 < t.cards[3]; ++k2)
            out << kPairTag[idx] << ',' << j1 + 1 << ',' << k1 + 1 << ',' << j2 + 1
                << ',' << k2 + 1 << ',' << t.at(j1, k1, j2, k2) << '\n';
  }
  finish_out(out, path);
}

std::array<CountsTable, 4> read_pair_counts_csv(const std::string& path) {
  std::ifstream in = open_in(path);
  std::string line;
  if (!std::getline(in, line)) fail("empty file: " + path);
  if (strip_cr(line) != "pair,j1,k1,j2,k2,count")
    fail("bad header in " + path + " (expected pair,j1,k1,j2,k2,count)");
  std::map<int, std::vector<RawCell>> by_pair;
  int lineno = 1;
  while (std::getline(in, line)) {
    ++lineno;
    line = strip_cr(line);
    if (line.empty()) continue;
    const auto f = split_csv_line(line);
    const std::string ctx = "at " + path + ":" + std::to_string(lineno);
    if (f.size() != 6) fail("expected 6 fields " + ctx);
    const int pair = static_cast<int>(parse_ll(f[0], ctx));
    if (pair != 11 && pair != 12 && pair != 21 && pair != 22)
      fail("pair must be one of 11,12,21,22 " + ctx);
    by_pair[pair].push_back({static_cast<int>(parse_ll(f[1], ctx)),
                             static_cast<int>(parse_ll(f[2], ctx)),
                             static_cast<int>(parse_ll(f[3], ctx)),
                             static_cast<int>(parse_ll(f[4], ctx)),
                             parse_ll(f[5], ctx)});
  }
  static const int kPairTag[4] = {11, 12, 21, 22};
  std::array<CountsTable, 4> tables;
  for (int idx = 0; idx < 4; ++idx) {
    auto it = by_pair.find(kPairTag[idx]);
    if (it == by_pair.end())
      fail("missing pair " + std::to_string(kPairTag[idx]) + " in " + path);
    tables[idx] = assemble_counts(it->second, path);
  }
  return tables;
}

void write_counts_json(const std::string& path, const CountsTable& counts) {
  Json rows = Json::array();
  for (int j1 = 0; j1 < counts.cards[0]; ++j1)
    for (int k1 = 0; k1 < counts.cards[1]; ++k1)
      for (int j2 = 0; j2 < counts.cards[2]; ++j2)
        for (int k2 = 0; k2 < counts.cards[3]; ++k2)
          rows.push_back({j1 + 1, k1 + 1, j2 + 1, k2 + 1, counts.at(j1, k1, j2, k2)});
  const Json doc = {{"rows", rows}};
  std::ofstream out = open_out(path);
  out << doc.dump(2) << '\n';
  finish_out(out, path);
}

CountsTable read_counts_json(const std::string& path) {
  Json doc;
  try {
    doc = Json::parse(read_text_file(path));
  } catch (const Json::parse_error& e) {
    fail("bad JSON in " + path + ": " + e.what());
  }
  if (!doc.is_object() || !doc.contains("rows") || !doc["rows"].is_array())
    fail("counts JSON needs a top-level \"rows\" array in " + path);
  std::vector<RawCell> cells;
  for (const Json& r : doc["rows"]) {
    if (!r.is_array() || r.size() != 5)
      fail("each counts row must be [j1,k1,j2,k2,count] in " + path);
    cells.push_back({r[0].get<int>(), r[1].get<int>(), r[2].get<int>(),
                     r[3].get<int>(), r[4].get<long long>()});
  }
  return assemble_counts(cells, path);
}

CountsTable read_counts_any(const std::string& path) {
  if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0)
    return read_counts_json(path);
  return read_counts_csv(path);
}

std::array<CountsTable, 4> read_step2_counts(const std::vector<std::string>& paths) {
  if (paths.size() == 1) return read_pair_counts_csv(paths[0]);
  if (paths.size() == 4) {
    std::array<CountsTable, 4> tables;
    for (int i = 0; i < 4; ++i) tables[i] = read_counts_any(paths[i]);
    return tables;
  }
  fail("step-2 data must be one pair-column file or four counts files");
}

namespace {

Json matrix_to_json(const CMat& m) {
  Json data = Json::array();
  for (Eigen::Index r = 0; r < m.rows(); ++r)
    for (Eigen::Index c = 0; c < m.cols(); ++c)
      data.push_back({m(r, c).real(), m(r, c).imag()});
  return Json{{"dim", {m.rows(), m.cols()}}, {"data", data}};
}

CMat matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("dim") || !j.contains("data"))
    fail("matrix JSON needs \"dim\" and \"data\"");
  const auto& dim = j["dim"];
  if (!dim.is_array() || dim.size() != 2) fail("matrix \"dim\" must be [rows, cols]");
  const Eigen::Index rows = dim[0].get<Eigen::Index>();
  const Eigen::Index cols = dim[1].get<Eigen::Index>();
  if (rows < 1 || cols < 1) fail("matrix dims must be positive");
  const auto& data = j["data"];
  if (!data.is_array() || static_cast<Eigen::Index>(data.size()) != rows * cols)
    fail("matrix \"data\" length must be rows*cols");
  CMat m(rows, cols);
  Eigen::Index idx = 0;
  for (const Json& e : data) {
    double re = 0.0, im = 0.0;
    if (e.is_number()) {
      re = e.get<double>();
    } else if (e.is_array() && (e.size() == 1 || e.size() == 2)) {
      re = e[0].get<double>();
      if (e.size() == 2) im = e[1].get<double>();
    } else {
      fail("matrix entries must be numbers or [re, im] pairs");
    }
    m(idx / cols, idx % cols) = std::complex<double>(re, im);
    ++idx;
  }
  return m;
}

// A state-like entry: either a full matrix or Bloch angles in degrees.
CMat state_from_json(const Json& j) {
  if (j.is_object() && j.contains("theta_deg"))
    return bloch_pure_state(j["theta_deg"].get<double>(),
                            j.value("phi_deg", 0.0));
  return matrix_from_json(j);
}

Json player_to_json(const PlayerSetting& p) {
  Json effects = Json::array(), preps = Json::array(), cond = Json::array();
  for (const CMat& e : p.effects) effects.push_back(matrix_to_json(e));
  for (const CMat& r : p.preps) preps.push_back(matrix_to_json(r));
  for (Eigen::Index r = 0; r < p.cond.rows(); ++r) {
    Json row = Json::array();
    for (Eigen::Index c = 0; c < p.cond.cols(); ++c) row.push_back(p.cond(r, c));
    cond.push_back(row);
  }
  return Json{{"effects", effects}, {"preps", preps}, {"cond", cond}};
}

PlayerSetting player_from_json(const Json& j, const char* who) {
  if (!j.is_object() || !j.contains("effects") || !j.contains("preps") ||
      !j.contains("cond"))
    fail(std::string(who) + " setting needs \"effects\", \"preps\", \"cond\"");
  PlayerSetting p;
  for (const Json& e : j["effects"]) p.effects.push_back(state_from_json(e));
  for (const Json& r : j["preps"]) p.preps.push_back(state_from_json(r));
  const auto& cond = j["cond"];
  if (!cond.is_array() || cond.empty()) fail("\"cond\" must be an array of rows");
  p.cond.resize(static_cast<Eigen::Index>(cond.size()),
                static_cast<Eigen::Index>(cond[0].size()));
  for (std::size_t r = 0; r < cond.size(); ++r) {
    if (!cond[r].is_array() ||
        cond[r].size() != static_cast<std::size_t>(p.cond.cols()))
      fail("\"cond\" rows must have equal length");
    for (std::size_t c = 0; c < cond[r].size(); ++c)
      p.cond(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
          cond[r][c].get<double>();
  }
  validate_setting(p, who);
  return p;
}

Json channel_to_json(const QuantumChannel& ch) {
  Json kraus = Json::array();
  for (const CMat& k : ch.kraus()) kraus.push_back(matrix_to_json(k));
  return Json{{"kraus", kraus}};
}

QuantumChannel channel_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("kraus") || !j["kraus"].is_array() ||
      j["kraus"].empty())
    fail("channel JSON needs a non-empty \"kraus\" array");
  std::vector<CMat> kraus;
  for (const Json& k : j["kraus"]) kraus.push_back(matrix_from_json(k));
  return QuantumChannel(std::move(kraus));
}

Json strategy_to_json(const StrategySpec& spec) {
  Json j;
  j["class"] = to_string(spec.cls());
  j["direction"] = to_string(spec.direction());
  switch (spec.cls()) {
    case StrategyClass::Individual:
      j["state1"] = matrix_to_json(spec.parallel_branches().front().state1);
      j["state2"] = matrix_to_json(spec.parallel_branches().front().state2);
      break;
    case StrategyClass::ClassicalParallel: {
      Json branches = Json::array();
      for (const auto& b : spec.parallel_branches())
        branches.push_back({{"weight", b.weight},
                            {"state1", matrix_to_json(b.state1)},
                            {"state2", matrix_to_json(b.state2)}});
      j["branches"] = branches;
      break;
    }
    case StrategyClass::QuantumParallel:
      j["joint_state"] = matrix_to_json(spec.joint_state());
      j["dim1"] = spec.dims().in1;
      j["dim2"] = spec.dims().in2;
      break;
    case StrategyClass::SequentialNoMemory:
      j["first_state"] = matrix_to_json(spec.sequential_branches().front().first_state);
      j["relay"] = channel_to_json(spec.sequential_branches().front().relay);
      break;
    case StrategyClass::SequentialClassical: {
      Json branches = Json::array();
      for (const auto& b : spec.sequential_branches())
        branches.push_back({{"weight", b.weight},
                            {"first_state", matrix_to_json(b.first_state)},
                            {"relay", channel_to_json(b.relay)}});
      j["branches"] = branches;
      break;
    }
    case StrategyClass::SequentialQuantum: {
      Json branches = Json::array();
      for (const auto& b : spec.memory_branches()) {
        if (b.parallel) {
          branches.push_back({{"weight", b.weight},
                              {"parallel", true},
                              {"joint_state", matrix_to_json(b.joint_state)}});
        } else {
          branches.push_back({{"weight", b.weight},
                              {"parallel", false},
                              {"first_with_memory", matrix_to_json(b.first_with_memory)},
                              {"memory_dim", b.memory_dim},
                              {"relay", channel_to_json(*b.relay)}});
        }
      }
      j["branches"] = branches;
      j["dims"] = {spec.dims().in1, spec.dims().out1, spec.dims().in2,
                   spec.dims().out2};
      break;
    }
  }
  return j;
}

StrategySpec strategy_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("class")) fail("strategy JSON needs \"class\"");
  const std::string cls = j["class"].get<std::string>();
  const std::string dir_tag = j.value("direction", std::string("none"));
  Direction dir = Direction::None;
  if (dir_tag == "1to2") dir = Direction::FirstToSecond;
  else if (dir_tag == "2to1") dir = Direction::SecondToFirst;
  else if (dir_tag != "none") fail("unknown direction: " + dir_tag);

  if (cls == "individual")
    return StrategySpec::individual(state_from_json(j.at("state1")),
                                    state_from_json(j.at("state2")));
  if (cls == "classical-parallel") {
    std::vector<ParallelBranch> branches;
    for (const Json& b : j.at("branches"))
      branches.push_back({b.at("weight").get<double>(),
                          state_from_json(b.at("state1")),
                          state_from_json(b.at("state2"))});
    return StrategySpec::classical_parallel(std::move(branches));
  }
  if (cls == "quantum-parallel") {
    const CMat joint = state_from_json(j.at("joint_state"));
    const int dim1 = j.value("dim1", 2);
    const int dim2 = j.value("dim2", 2);
    return StrategySpec::quantum_parallel(joint, dim1, dim2);
  }
  if (cls == "sequential-no-memory")
    return StrategySpec::sequential(dir, state_from_json(j.at("first_state")),
                                    channel_from_json(j.at("relay")));
  if (cls == "sequential-classical") {
    std::vector<SequentialBranch> branches;
    for (const Json& b : j.at("branches"))
      branches.push_back({b.at("weight").get<double>(),
                          state_from_json(b.at("first_state")),
                          channel_from_json(b.at("relay"))});
    return StrategySpec::sequential_classical(dir, std::move(branches));
  }
  if (cls == "sequential-quantum") {
    std::vector<MemoryBranch> branches;
    for (const Json& b : j.at("branches")) {
      MemoryBranch mb;
      mb.weight = b.at("weight").get<double>();
      mb.parallel = b.at("parallel").get<bool>();
      if (mb.parallel) {
        mb.joint_state = state_from_json(b.at("joint_state"));
      } else {
        mb.first_with_memory = state_from_json(b.at("first_with_memory"));
        mb.memory_dim = b.at("memory_dim").get<int>();
        mb.relay = channel_from_json(b.at("relay"));
      }
      branches.push_back(std::move(mb));
    }
    const auto& dims = j.at("dims");
    if (!dims.is_array() || dims.size() != 4)
      fail("sequential-quantum needs \"dims\": [in1, out1, in2, out2]");
    return StrategySpec::sequential_quantum(
        dir, std::move(branches),
        WireDims{dims[0].get<int>(), dims[1].get<int>(), dims[2].get<int>(),
                 dims[3].get<int>()});
  }
  fail("unknown strategy class: " + cls);
}

Json chsh_to_json(const ChshResult& c) {
  return Json{{"correlators",
               {{c.correlators(0, 0), c.correlators(0, 1)},
                {c.correlators(1, 0), c.correlators(1, 1)}}},
              {"max_s", c.max_value},
              {"threshold", c.threshold},
              {"violated", c.violated},
              {"best_signs", c.best_signs}};
}

Json verdict_to_json(const Verdict& v) {
  Json conditions = Json::array();
  for (const MarkovTestResult& r : v.conditions)
    for (const ConditionPart& part : r.parts)
      conditions.push_back({{"tag", to_string(part.primitive)},
                            {"composite", to_string(r.condition)},
                            {"composite_accepted", r.accepted},
                            {"chi2", part.result.statistic},
                            {"df", part.result.df},
                            {"p", part.result.p_value},
                            {"critical", part.result.critical},
                            {"accepted", part.result.accepted}});
  Json j{{"label", to_string(v.label)},
         {"level", v.level},
         {"conditions", conditions},
         {"ambiguity", v.ambiguity},
         {"chsh", nullptr}};
  if (v.chsh) j["chsh"] = chsh_to_json(*v.chsh);
  if (!v.note.empty()) j["note"] = v.note;
  return j;
}

Json rows_summary(std::size_t n) { return Json{{"trial_rows", n}}; }

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string matrix_to_json_text(const CMat& m) { return dump(matrix_to_json(m)); }

std::string distribution_to_json_text(const JointDistribution& d) {
  return dump(Json{{"cards", d.cards}, {"p", d.p}});
}

std::string setting_to_json_text(const MpSetting& s) {
  return dump(Json{{"alice", player_to_json(s.alice)}, {"bob", player_to_json(s.bob)}});
}

std::string strategy_to_json_text(const StrategySpec& spec) {
  return dump(strategy_to_json(spec));
}

std::string verdict_to_json_text(const Verdict& v) { return dump(verdict_to_json(v)); }

std::string process_matrix_to_json_text(const CMat& w, const WireDims& dims,
                                        const ProcessMatrixReport& report) {
  return dump(Json{{"dims", {dims.in1, dims.out1, dims.in2, dims.out2}},
                   {"matrix", matrix_to_json(w)},
                   {"report",
                    {{"trace", report.trace},
                     {"min_eigenvalue", report.min_eigenvalue},
                     {"residual_no_signal_to_2", report.residual_no_signal_to_2},
                     {"residual_no_signal_to_1", report.residual_no_signal_to_1},
                     {"residual_causal_mixture", report.residual_causal_mixture},
                     {"physical", report.physical}}}});
}

std::string theorem1_report_to_json_text(const Theorem1Report& rep) {
  Json cases = Json::array();
  for (const Theorem1Case& c : rep.cases)
    cases.push_back({{"class", c.class_tag},
                     {"out_class", c.out_class_tag},
                     {"condition", to_string(c.condition)},
                     {"trials", c.trials},
                     {"in_class_ok", c.in_class_ok},
                     {"out_class_ok", c.out_class_ok},
                     {"max_in_deviation", c.max_in_deviation},
                     {"max_in_residual", c.max_in_residual},
                     {"min_out_deviation", c.min_out_deviation},
                     {"min_out_residual", c.min_out_residual},
                     {"pass", c.pass}});
  return dump(Json{{"suite", "theorem1"},
                   {"master_seed", rep.master_seed},
                   {"trials", rep.trials},
                   {"in_tolerance", rep.in_tolerance},
                   {"out_threshold", rep.out_threshold},
                   {"residual_floor", rep.residual_floor},
                   {"cases", cases},
                   {"summary", rows_summary(rep.rows.size())},
                   {"all_pass", rep.all_pass}});
}

std::string theorem2_report_to_json_text(const Theorem2Report& rep) {
  Json pairs = Json::array();
  for (const Theorem2Pair& p : rep.pairs)
    pairs.push_back({{"strategy", p.strategy_tag},
                     {"class", p.class_tag},
                     {"condition", to_string(p.condition)},
                     {"control", p.control},
                     {"structural_residual", p.structural_residual},
                     {"trials", p.trials},
                     {"violations", p.violations},
                     {"violation_fraction", p.violation_fraction},
                     {"min_deviation", p.min_deviation},
                     {"median_deviation", p.median_deviation},
                     {"pass", p.pass}});
  return dump(Json{{"suite", "theorem2"},
                   {"master_seed", rep.master_seed},
                   {"trials_per_pair", rep.trials_per_pair},
                   {"violation_threshold", rep.violation_threshold},
                   {"required_fraction", rep.required_fraction},
                   {"pairs", pairs},
                   {"summary", rows_summary(rep.rows.size())},
                   {"all_pass", rep.all_pass}});
}

std::string lemma_report_to_json_text(const LemmaReport& rep) {
  Json checks = Json::array();
  for (const LemmaCheck& c : rep.checks)
    checks.push_back({{"name", c.name},
                      {"trials", c.trials},
                      {"ok", c.ok},
                      {"worst_deviation", c.worst_deviation},
                      {"pass", c.pass},
                      {"detail", c.detail}});
  return dump(Json{{"suite", "lemmas"},
                   {"master_seed", rep.master_seed},
                   {"trials", rep.trials},
                   {"checks", checks},
                   {"summary", rows_summary(rep.rows.size())},
                   {"all_pass", rep.all_pass}});
}

std::string table3_report_to_json_text(const Table3Report& rep) {
  Json cells = Json::array();
  for (const Table3Cell& c : rep.cells)
    cells.push_back({{"strategy", c.strategy_tag},
                     {"setting", c.setting},
                     {"runs", c.runs},
                     {"step1_correct", c.step1_correct},
                     {"step1_rate", c.step1_rate},
                     {"expected_step1", c.expected_step1},
                     {"final_label", c.final_label},
                     {"memory_class", c.memory_class},
                     {"ideal_max_s", c.ideal_max_s},
                     {"pass", c.pass}});
  return dump(Json{{"suite", "reproduce-table3"},
                   {"master_seed", rep.master_seed},
                   {"samples", rep.samples},
                   {"seeds", rep.seeds},
                   {"alpha", rep.alpha},
                   {"required_rate", rep.required_rate},
                   {"cells", cells},
                   {"notes", rep.notes},
                   {"all_pass", rep.all_pass}});
}

CMat matrix_from_json_text(const std::string& text) {
  try {
    return matrix_from_json(Json::parse(text));
  } catch (const Json::exception& e) {
    fail(std::string("bad matrix JSON: ") + e.what());
  }
}

MpSetting setting_from_json_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(std::string("bad setting JSON: ") + e.what());
  }
  try {
    if (!j.is_object() || !j.contains("alice") || !j.contains("bob"))
      fail("setting JSON needs \"alice\" and \"bob\"");
    MpSetting s;
    s.alice = player_from_json(j["alice"], "alice");
    s.bob = player_from_json(j["bob"], "bob");
    return s;
  } catch (const Json::exception& e) {
    fail(std::string("bad setting JSON: ") + e.what());
  }
}

StrategySpec strategy_from_json_text(const std::string& text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const Json::parse_error& e) {
    fail(std::string("bad strategy JSON: ") + e.what());
  }
  try {
    return strategy_from_json(j);
  } catch (const Json::exception& e) {
    fail(std::string("bad strategy JSON: ") + e.what());
  }
}

MpSetting read_setting_json(const std::string& path) {
  return setting_from_json_text(read_text_file(path));
}

StrategySpec read_strategy_json(const std::string& path) {
  return strategy_from_json_text(read_text_file(path));
}

void write_json_document(const std::string& path, const std::string& text, bool stamp) {
  std::string body = text;
  if (stamp) {
    Json j;
    try {
      j = Json::parse(text);
    } catch (const Json::parse_error& e) {
      fail(std::string("internal: invalid JSON document: ") + e.what());
    }
    j["meta"] = Json{{"generated_at", timestamp_utc()}};
    body = j.dump(2) + "\n";
  }
  std::ofstream out = open_out(path);
  out << body;
  finish_out(out, path);
}

void write_trial_rows_csv(const std::string& path, const std::vector<TrialRow>& rows) {
  std::ofstream out = open_out(path);
  out << "seed,subject,condition,deviation,residual,pass\n";
  std::ostringstream os;
  os.precision(17);
  for (const TrialRow& r : rows) {
    os.str("");
    os << r.seed << ',' << r.subject << ',' << r.condition << ',' << r.deviation
       << ',' << r.residual << ',' << (r.pass ? 1 : 0) << '\n';
    out << os.str();
  }
  finish_out(out, path);
}

}  // namespace causalab
