// Copyright 2026 The obsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <cerrno>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <json.hpp>
#include <map>
#include <numbers>
#include <set>
#include <sstream>

#include "obsim/obsim.hpp"

namespace obsim::cli {
namespace {

const std::set<std::string> kScenarios = {"quantum-machine", "epsilon-sweep", "wood-product",
                                          "elastic",         "classify",      "all"};

// Flags that take a value, in the order they are documented.
const std::vector<std::string> kValueKeys = {"seed",   "trials", "gamma-grid", "epsilon", "length", "breaks",
                                             "volume", "ratio",  "out",        "format",  "threads"};

const std::map<std::string, std::string> kValueHelp = {
    {"seed", "master seed (default 42)"},
    {"trials", "trials per point (default 100000)"},
    {"gamma-grid", "number of equally spaced angles on [0, pi] (default 13)"},
    {"length", "original elastic band length L0 (default 1)"},
    {"breaks", "sequential breaks in the elastic trajectory (default 10000)"},
    {"volume", "solid volume for the creation table (default 1)"},
    {"ratio", "solid compaction ratio in [0, 1) for the creation table (default 0.05)"},
    {"out", "output file, or output directory for all; stdout when absent"},
    {"format", "csv or json (default csv; a .json --out implies json)"},
    {"threads", "worker threads, 0 = hardware concurrency (default 0)"},
};

class HelpRequested : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::uint64_t parse_u64(const std::string& key, const std::string& text) {
  std::uint64_t value = 0;
  const char* begin = text.data();
  const char* end = begin + text.size();
  auto [ptr, ec] = std::from_chars(begin, end, value);
  if (ec != std::errc{} || ptr != end || text.empty()) {
    throw ConfigError("--" + key + ": expected a non-negative integer, got '" + text + "'");
  }
  return value;
}

double parse_real(const std::string& key, const std::string& text) {
  errno = 0;
  char* end = nullptr;
  const double value = std::strtod(text.c_str(), &end);
  if (text.empty() || end != text.c_str() + text.size() || errno == ERANGE || !std::isfinite(value)) {
    throw ConfigError("--" + key + ": expected a real number, got '" + text + "'");
  }
  return value;
}

bool parse_bool(const std::string& key, const std::string& text) {
  if (text == "1" || text == "true" || text == "yes" || text == "on") return true;
  if (text == "0" || text == "false" || text == "no" || text == "off") return false;
  throw ConfigError(key + ": expected a boolean, got '" + text + "'");
}

std::vector<std::string> split_list(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

std::string format_real(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.9g", v);
  return buf;
}

std::string cell_text(const Cell& cell) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, std::string>) {
          return v;
        } else if constexpr (std::is_same_v<T, double>) {
          return format_real(v);
        } else {
          return std::to_string(v);
        }
      },
      cell);
}

Cell optional_real(const std::optional<double>& v) { return v ? Cell{*v} : Cell{std::string()}; }

// --- checks ---------------------------------------------------------------

class CheckLog {
 public:
  explicit CheckLog(std::ostream& err, bool enabled) : err_(err), enabled_(enabled) {}

  void expect(bool ok, const std::string& what) {
    if (!enabled_) return;
    all_ok_ = all_ok_ && ok;
    err_ << (ok ? "PASS " : "FAIL ") << what << '\n';
  }

  bool all_ok() const noexcept { return all_ok_; }

 private:
  std::ostream& err_;
  bool enabled_;
  bool all_ok_ = true;
};

std::vector<double> gamma_grid(std::uint64_t points) {
  std::vector<double> grid;
  for (std::uint64_t k = 0; k < points; ++k) {
    grid.push_back(k + 1 == points ? std::numbers::pi
                                   : std::numbers::pi * static_cast<double>(k) / static_cast<double>(points - 1));
  }
  return grid;
}

TrialOptions trial_options(const RunConfig& config) {
  TrialOptions options;
  options.threads = config.threads;
  return options;
}

ProcessFamily machine_family(const BreakageProfile& profile) {
  return [profile](double gamma) {
    ElasticApparatus apparatus;
    apparatus.profile = profile;
    return std::pair{quantum_machine_process(apparatus), ScenarioState{sphere_point_at(gamma)}};
  };
}

void append_sweep_rows(Table& table, const SweepResult& result, double epsilon) {
  for (const SweepPoint& pt : result.points) {
    const TrialReport& r = pt.report;
    table.rows.push_back({pt.parameter, epsilon, optional_real(r.analytic), r.p_hat, r.yes, r.trials, r.wilson.lo,
                          r.wilson.hi, r.seed});
  }
}

void append_trial_row(Table& table, const std::string& scenario, const TrialReport& r) {
  table.rows.push_back({scenario, r.process_id, r.state, optional_real(r.analytic), r.p_hat, r.yes, r.trials,
                        r.wilson.lo, r.wilson.hi, r.seed});
}

Table quantum_machine_table(const RunConfig& config, CheckLog& check) {
  Table table{Schema::kQuantumMachine, {}};
  const std::vector<double> grid = gamma_grid(config.gamma_grid);
  const SweepResult result = sweep(machine_family(UniformBreak{}), grid, config.trials, config.seed,
                                   trial_options(config));
  append_sweep_rows(table, result, 1.0);

  for (const SweepPoint& pt : result.points) {
    const TrialReport& r = pt.report;
    const double p = *r.analytic;
    const std::string at = "quantum-machine gamma=" + format_real(pt.parameter);
    if (p == 0.0 || p == 1.0) {
      check.expect(r.p_hat == p, at + ": degenerate point is exact");
    } else {
      const double tol = std::max(0.005, 4.0 * std::sqrt(p * (1.0 - p) / static_cast<double>(r.trials)));
      check.expect(std::abs(r.p_hat - p) <= tol, at + ": |p_hat - cos^2(gamma/2)| <= " + format_real(tol));
    }
  }
  return table;
}

Table epsilon_sweep_table(const RunConfig& config, CheckLog& check) {
  Table table{Schema::kQuantumMachine, {}};
  const std::vector<double> grid = gamma_grid(config.gamma_grid);
  for (std::size_t i = 0; i < config.epsilons.size(); ++i) {
    const double eps = config.epsilons[i];
    const SweepResult result = sweep(machine_family(SegmentBreak{eps}), grid, config.trials,
                                     derive_seed(config.seed, i), trial_options(config));
    append_sweep_rows(table, result, eps);

    for (const SweepPoint& pt : result.points) {
      const TrialReport& r = pt.report;
      const double c = std::abs(std::cos(pt.parameter));
      const std::string at = "epsilon-sweep eps=" + format_real(eps) + " gamma=" + format_real(pt.parameter);
      if (c > eps) {
        check.expect(r.zero_variance(), at + ": deterministic regime has zero variance");
      } else if (c < eps) {
        check.expect(std::abs(r.p_hat - *r.analytic) <= 0.01, at + ": within 0.01 of clamp((1 + cos/eps)/2)");
      }
      if (eps == 1.0) {
        check.expect(*r.analytic == quantum_machine_prob_cos(std::cos(pt.parameter), UniformBreak{}),
                     at + ": eps = 1 equals the uniform elastic");
      }
    }
  }
  return table;
}

Table wood_product_table(const RunConfig& config, CheckLog& check) {
  Table table{Schema::kTrials, {}};
  const TrialOptions options = trial_options(config);
  const ScenarioState wood = WoodState::dry_intact();

  const NdcReport ndc = ndc_theorem_demo(config.trials, config.seed, options);
  std::uint64_t index = 2;
  for (const ObservationProcess& p : {burnability_process(), non_burnability_process(), floatability_process()}) {
    append_trial_row(table, "wood-product",
                     run_trials(p, wood, config.trials, derive_seed(config.seed, index++), ResetPolicy::kFreshState,
                                options));
  }
  append_trial_row(table, "wood-product", ndc.certain);
  append_trial_row(table, "wood-product", ndc.undecided);

  check.expect(ndc.certain.yes == ndc.certain.trials, "wood-product: burnability*floatability always yes");
  check.expect(ndc.certain_meet_actual, "wood-product: meet(burnability, floatability) is actual");
  check.expect(ndc.undecided.wilson.contains(0.5),
               "wood-product: non-burnability*floatability frequency consistent with 1/2 (99% Wilson)");
  check.expect(!ndc.undecided_meet_actual, "wood-product: meet(non-burnability, floatability) is not actual");
  check.expect(ndc.components_deterministic && ndc.outcomes_follow_choice,
               "wood-product: every chosen component is deterministic");
  return table;
}

Table elastic_table(const RunConfig& config, CheckLog& check) {
  Table table{Schema::kTrials, {}};
  const TrialOptions options = trial_options(config);
  const double l0 = config.length;
  const ScenarioState unbroken = ElasticBandState::unbroken(l0);

  const TrialReport left = run_trials(left_handedness_process(), unbroken, config.trials,
                                      derive_seed(config.seed, 0), ResetPolicy::kFreshState, options);
  append_trial_row(table, "elastic", left);

  bool conserved = true;
  bool actuality_tracks_max = true;
  bool monotone = true;
  std::size_t previous_short = 0;
  const PropertyDef fragmentation = fragmentation_property();
  TrialOptions trajectory = options;
  trajectory.on_trial = [&](std::uint64_t, const Transition& t) {
    const auto& band = std::get<ElasticBandState>(t.post);
    double total = 0.0;
    double longest = 0.0;
    for (double f : band.fragments) {
      total += f;
      longest = std::max(longest, f);
    }
    conserved = conserved && std::abs(total - l0) <= 1e-9;
    actuality_tracks_max = actuality_tracks_max && (is_actual(fragmentation, t.post) == (longest < 0.5 * l0));
    const std::size_t short_count = count_shorter_than_half(band);
    monotone = monotone && short_count >= previous_short;
    previous_short = short_count;
  };
  const TrialReport broken = run_trials(left_handedness_process(), unbroken, config.breaks,
                                        derive_seed(config.seed, 1), ResetPolicy::kEvolvingState, trajectory);
  append_trial_row(table, "elastic", broken);

  const ScenarioState& final_state = *broken.final_state;
  const TrialReport frag = run_trials(fragmentation.process, final_state, config.trials,
                                      derive_seed(config.seed, 2), ResetPolicy::kFreshState, options);
  const TrialReport nonfrag = run_trials(non_fragmentation_process(), final_state, config.trials,
                                         derive_seed(config.seed, 3), ResetPolicy::kFreshState, options);
  // The final state has thousands of fragments; keep the cell short.
  TrialReport frag_row = frag;
  TrialReport nonfrag_row = nonfrag;
  const std::string summary = "elastic(" +
                              std::to_string(std::get<ElasticBandState>(final_state).fragments.size()) +
                              "-fragments|" + format_real(l0) + ")";
  frag_row.state = summary;
  nonfrag_row.state = summary;
  append_trial_row(table, "elastic", frag_row);
  append_trial_row(table, "elastic", nonfrag_row);

  check.expect(left.wilson.contains(0.5), "elastic: left-handedness frequency consistent with 1/2 (99% Wilson)");
  check.expect(conserved, "elastic: length conserved to 1e-9 over every break");
  check.expect(std::get<ElasticBandState>(final_state).fragments.size() == config.breaks + 1,
               "elastic: one new fragment per break");
  check.expect(actuality_tracks_max, "elastic: fragmentation actual exactly when the longest fragment < L0/2");
  check.expect(monotone, "elastic: number of sub-half fragments never decreases");
  check.expect(sampling_verdict(frag) != SamplingVerdict::kFailed,
               "elastic: fragmentation frequency within 5 standard errors");
  return table;
}

Table creation_table(const RunConfig& config, CheckLog& check) {
  Table table{Schema::kTrials, {}};
  const ObservationProcess press = incompressibility_process();
  const ScenarioState solid = SolidState{config.volume, config.ratio};
  const TrialReport first = run_trials(press, solid, 1, derive_seed(config.seed, 0), ResetPolicy::kFreshState);
  CounterStream stream(config.seed, 0);
  const ScenarioState pressed = apply(press, solid, stream).post;
  const TrialReport second = run_trials(press, pressed, 1, derive_seed(config.seed, 1), ResetPolicy::kFreshState);
  append_trial_row(table, "creation", first);
  append_trial_row(table, "creation", second);
  if (config.ratio > kIncompressibleThreshold) {
    check.expect(first.yes == 0 && second.yes == 1, "creation: first press fails and the second succeeds");
  } else {
    check.expect(first.yes == 1 && second.yes == 1, "creation: incompressible solid passes twice");
  }
  return table;
}

struct ExpectedRow {
  const char* property;
  Effect effect;
  Predictability predictability;
  Persistence persistence;
};

constexpr ExpectedRow kExpectedTaxonomy[] = {
    {"burnability", Effect::kInvasiveDestruction, Predictability::kDeterministic, Persistence::kIntrinsic},
    {"floatability", Effect::kInvasiveDiscovery, Predictability::kDeterministic, Persistence::kIntrinsic},
    {"incompressibility", Effect::kInvasiveCreation, Predictability::kDeterministic, Persistence::kIntrinsic},
    {"sawtooth-position", Effect::kInvasiveCreation, Predictability::kDeterministic, Persistence::kIntrinsic},
    {"quantum-machine", Effect::kInvasiveCreation, Predictability::kNowhereDeterministic, Persistence::kIntrinsic},
    {"left-handedness", Effect::kInvasiveCreation, Predictability::kNowhereDeterministic, Persistence::kEphemeral},
    {"fragmentation", Effect::kNonInvasiveDiscovery, Predictability::kIntermediary, Persistence::kEphemeral},
};

Table taxonomy_csv_table(const RunConfig& config, CheckLog& check) {
  Table table{Schema::kTaxonomy, {}};
  const std::vector<SuiteEntry> suite = default_suite();
  const std::vector<TaxonomyRow> rows = taxonomy_table(suite, config.threads);
  for (const TaxonomyRow& row : rows) {
    if (row.classification) {
      const ObservationClassification& c = *row.classification;
      table.rows.push_back({row.property, std::string(to_string(c.effect)), std::string(to_string(c.predictability)),
                            std::string(to_string(c.persistence)), row.witness_state()});
    } else {
      table.rows.push_back({row.property, std::string("not-decidable"), std::string("not-decidable"),
                            std::string("not-decidable"), std::string()});
    }
  }

  const bool sizes_match = rows.size() == std::size(kExpectedTaxonomy);
  check.expect(sizes_match, "classify: one row per registered property");
  if (sizes_match) {
    for (std::size_t i = 0; i < rows.size(); ++i) {
      const ExpectedRow& e = kExpectedTaxonomy[i];
      const bool ok = rows[i].property == e.property && rows[i].classification &&
                      *rows[i].classification ==
                          ObservationClassification{e.effect, e.predictability, e.persistence};
      check.expect(ok, std::string("classify: ") + e.property + " row matches the expected taxonomy");
    }
  }
  return table;
}

std::string extension_for(Format f) { return f == Format::kJson ? ".json" : ".csv"; }

}  // namespace

std::multimap<std::string, std::string> read_config_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("--config: cannot open '" + path.string() + "'");
  std::multimap<std::string, std::string> values;
  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) {
      throw ConfigError("--config: line " + std::to_string(line_no) + " of '" + path.string() +
                        "' is not key = value");
    }
    values.emplace(trim(std::string_view(line).substr(0, eq)), trim(std::string_view(line).substr(eq + 1)));
  }
  return values;
}

RunConfig parse_args(int argc, const char* const* argv) {
  CLI::App app{"Hidden-measurement toy models: simulate, sweep and classify observations", "obsim"};
  app.set_version_flag("--version", kVersion);

  std::string scenario;
  std::string config_path;
  std::map<std::string, std::string> scalar;
  std::vector<std::string> epsilon_flags;
  bool check = false;

  app.add_option("scenario", scenario, "quantum-machine | epsilon-sweep | wood-product | elastic | classify | all");
  app.add_option("--config", config_path, "flat key = value file; flags override its values");
  for (const std::string& key : kValueKeys) {
    if (key == "epsilon") {
      app.add_option("--epsilon", epsilon_flags, "breakable fraction of the elastic (repeatable)");
    } else {
      app.add_option("--" + key, scalar[key], kValueHelp.at(key));
    }
  }
  app.add_flag("--check", check, "assert the acceptance criteria for the scenario; exit 3 on failure");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested(app.help());
  } catch (const CLI::CallForVersion&) {
    throw HelpRequested(std::string(kVersion) + "\n");
  } catch (const CLI::ParseError& e) {
    throw ConfigError(e.what());
  }

  // Merge: config file first, then flags that were given on the command line.
  std::map<std::string, std::string> values;
  std::vector<std::string> epsilons;
  bool check_from_file = false;
  if (!config_path.empty()) {
    for (const auto& [key, value] : read_config_file(config_path)) {
      if (key == "epsilon") {
        for (std::string& e : split_list(value)) epsilons.push_back(std::move(e));
      } else if (key == "check") {
        check_from_file = parse_bool("check", value);
      } else if (key == "scenario") {
        values["scenario"] = value;
      } else if (std::find(kValueKeys.begin(), kValueKeys.end(), key) != kValueKeys.end()) {
        values[key] = value;
      } else {
        throw ConfigError("--config: unknown key '" + key + "'");
      }
    }
  }
  for (const std::string& key : kValueKeys) {
    if (key != "epsilon" && app.count("--" + key) > 0) values[key] = scalar[key];
  }
  if (app.count("--epsilon") > 0) {
    epsilons.clear();
    for (const std::string& e : epsilon_flags) {
      for (std::string& item : split_list(e)) epsilons.push_back(std::move(item));
    }
  }
  if (!scenario.empty()) values["scenario"] = scenario;

  RunConfig config;
  config.check = check || check_from_file;
  auto has = [&](const char* key) { return values.count(key) > 0; };

  if (!has("scenario")) throw ConfigError("missing scenario (one of quantum-machine, epsilon-sweep, ...)");
  config.scenario = values["scenario"];
  if (!kScenarios.count(config.scenario)) throw ConfigError("unknown scenario '" + config.scenario + "'");

  if (has("seed")) config.seed = parse_u64("seed", values["seed"]);
  if (has("trials")) config.trials = parse_u64("trials", values["trials"]);
  if (has("gamma-grid")) config.gamma_grid = parse_u64("gamma-grid", values["gamma-grid"]);
  if (has("length")) config.length = parse_real("length", values["length"]);
  if (has("breaks")) config.breaks = parse_u64("breaks", values["breaks"]);
  if (has("volume")) config.volume = parse_real("volume", values["volume"]);
  if (has("ratio")) config.ratio = parse_real("ratio", values["ratio"]);
  if (has("threads")) config.threads = static_cast<unsigned>(parse_u64("threads", values["threads"]));
  if (has("out")) config.out = values["out"];
  for (const std::string& e : epsilons) config.epsilons.push_back(parse_real("epsilon", e));

  if (has("format")) {
    const std::string& f = values["format"];
    if (f == "csv") {
      config.format = Format::kCsv;
    } else if (f == "json") {
      config.format = Format::kJson;
    } else {
      throw ConfigError("--format: expected csv or json, got '" + f + "'");
    }
  } else if (std::filesystem::path(config.out).extension() == ".json") {
    config.format = Format::kJson;
  }

  if (config.trials == 0) throw ConfigError("--trials: must be at least 1");
  if (config.gamma_grid < 2) throw ConfigError("--gamma-grid: need at least 2 points on [0, pi]");
  if (config.breaks == 0) throw ConfigError("--breaks: must be at least 1");
  if (!(config.length > 0.0)) throw ConfigError("--length: must be positive");
  if (!(config.volume > 0.0)) throw ConfigError("--volume: must be positive");
  if (!(config.ratio >= 0.0 && config.ratio < 1.0)) throw ConfigError("--ratio: must lie in [0, 1)");
  for (double e : config.epsilons) {
    if (!(e >= 0.0 && e <= 1.0)) throw ConfigError("--epsilon: must lie in [0, 1], got " + format_real(e));
  }
  if (config.scenario == "epsilon-sweep" && config.epsilons.empty()) {
    throw ConfigError("--epsilon: required for epsilon-sweep");
  }
  if (config.scenario == "all" && config.out.empty()) {
    throw ConfigError("--out: required for all (output directory)");
  }
  return config;
}

const std::vector<std::string>& schema_header(Schema schema) {
  static const std::vector<std::string> kQuantum = {"gamma_rad", "epsilon", "analytic_p", "empirical_p", "yes",
                                                    "trials",    "wilson_lo", "wilson_hi", "seed"};
  static const std::vector<std::string> kTrials = {"scenario", "process",  "state",     "analytic_p", "empirical_p",
                                                   "yes",      "trials",   "wilson_lo", "wilson_hi",  "seed"};
  static const std::vector<std::string> kTaxonomy = {"property", "effect", "predictability", "persistence",
                                                     "witness_state"};
  switch (schema) {
    case Schema::kQuantumMachine:
      return kQuantum;
    case Schema::kTrials:
      return kTrials;
    case Schema::kTaxonomy:
      return kTaxonomy;
  }
  return kTrials;
}

void emit_csv(const Table& table, std::ostream& os) {
  const auto& header = schema_header(table.schema);
  for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
  os << '\n';
  for (const auto& row : table.rows) {
    if (row.size() != header.size()) throw std::logic_error("row width does not match the schema");
    for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << cell_text(row[i]);
    os << '\n';
  }
}

void emit_json(const Table& table, const RunConfig& config, std::ostream& os) {
  nlohmann::ordered_json doc;
  doc["meta"] = {{"scenario", config.scenario}, {"seed", config.seed}, {"version", kVersion}};
  doc["rows"] = nlohmann::ordered_json::array();
  const auto& header = schema_header(table.schema);
  for (const auto& row : table.rows) {
    if (row.size() != header.size()) throw std::logic_error("row width does not match the schema");
    nlohmann::ordered_json obj = nlohmann::ordered_json::object();
    for (std::size_t i = 0; i < row.size(); ++i) {
      std::visit(
          [&](const auto& v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, std::string>) {
              // Missing optional values are empty cells in CSV and null here.
              obj[header[i]] = v.empty() && header[i] == "analytic_p" ? nlohmann::ordered_json() : nlohmann::ordered_json(v);
            } else {
              obj[header[i]] = v;
            }
          },
          row[i]);
    }
    doc["rows"].push_back(std::move(obj));
  }
  os << doc.dump(2) << '\n';
}

void write_table(const Table& table, const RunConfig& config, const std::filesystem::path& path, std::ostream& os) {
  auto emit = [&](std::ostream& target) {
    if (config.format == Format::kJson) {
      emit_json(table, config, target);
    } else {
      emit_csv(table, target);
    }
  };
  if (path.empty()) {
    emit(os);
    return;
  }
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw std::runtime_error("cannot open '" + path.string() + "' for writing");
  emit(file);
  file.flush();
  if (!file) throw std::runtime_error("error while writing '" + path.string() + "'");
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  CheckLog check(err, config.check);
  const std::string& s = config.scenario;

  if (s == "all") {
    const std::filesystem::path dir(config.out);
    std::filesystem::create_directories(dir);
    RunConfig sweep_config = config;
    if (sweep_config.epsilons.empty()) sweep_config.epsilons = {0.25, 0.5, 0.75, 1.0};
    const std::string ext = extension_for(config.format);
    write_table(quantum_machine_table(config, check), config, dir / ("quantum-machine" + ext), out);
    write_table(epsilon_sweep_table(sweep_config, check), config, dir / ("epsilon-sweep" + ext), out);
    write_table(wood_product_table(config, check), config, dir / ("wood-product" + ext), out);
    write_table(elastic_table(config, check), config, dir / ("elastic" + ext), out);
    write_table(creation_table(config, check), config, dir / ("creation" + ext), out);
    write_table(taxonomy_csv_table(config, check), config, dir / ("taxonomy" + ext), out);
  } else {
    Table table;
    if (s == "quantum-machine") {
      table = quantum_machine_table(config, check);
    } else if (s == "epsilon-sweep") {
      table = epsilon_sweep_table(config, check);
    } else if (s == "wood-product") {
      table = wood_product_table(config, check);
    } else if (s == "elastic") {
      table = elastic_table(config, check);
    } else {
      table = taxonomy_csv_table(config, check);
    }
    write_table(table, config, config.out, out);
  }
  return check.all_ok() ? kExitOk : kExitCheckFailed;
}

int main_entry(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  RunConfig config;
  try {
    config = parse_args(argc, argv);
  } catch (const HelpRequested& h) {
    out << h.what();
    return kExitOk;
  } catch (const ConfigError& e) {
    err << "obsim: " << e.what() << '\n';
    return kExitConfig;
  }
  try {
    return run(config, out, err);
  } catch (const std::exception& e) {
    err << "obsim: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace obsim::cli
