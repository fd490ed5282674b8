#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "json.hpp"

#include "adamon/monitor.hpp"
#include "adamon/optimizer.hpp"
#include "adamon/problem.hpp"

namespace adamon::harness {

// Fully determines a run: same spec (and code version) means byte-identical
// CSV output. Serialized as a single JSON document with these field names;
// CLI flags override file values.
struct ExperimentSpec {
  std::string problem = "quadratic_100";
  nlohmann::json problem_params = nlohmann::json::object();

  std::string variant = "sgd";
  std::string alpha_schedule = "constant";  // constant | inverse-sqrt | table
  double alpha = 0.01;
  std::vector<double> alpha_table;
  std::string beta1_schedule = "constant";  // constant | table | geometric
  double beta1 = 0.0;
  std::vector<double> beta1_table;
  double beta1_limit = 0.0;  // geometric decay target
  double beta1_rate = 0.9;   // geometric decay rate
  double beta2 = 0.0;
  double epsilon = 0.0;

  long iters = 1000;
  std::uint64_t seed = 1;
  std::vector<long> checkpoints;
  std::string output;  // path prefix; empty disables file output
  long record_every = 1;
  std::vector<double> x1;  // empty selects the problem default

  StepSchedule make_alpha() const;
  Beta1Schedule make_beta1() const;
  OptimizerConfig optimizer_config(std::size_t dim) const;
};

ExperimentSpec spec_from_json(const nlohmann::json& j);
nlohmann::json spec_to_json(const ExperimentSpec& spec);

std::unique_ptr<Problem> make_problem(const std::string& name,
                                      const nlohmann::json& params);
Vector default_x1(const Problem& problem);

struct CheckpointSample {
  long T = 0;
  double min_grad_sq = 0.0;
};

struct RunOutcome {
  ExperimentSpec spec;
  std::vector<MonitorRecord> records;  // one per recorded iteration
  ConvergenceReport report;
  Verdict verdict = Verdict::Suspect;
  bool certified = false;  // false when the run is too short to certify
  OptimizerState final_state;
  std::vector<CheckpointSample> checkpoints;
  std::string status = "completed";  // "completed" | "numeric_abort"
  long abort_iteration = -1;
  std::string abort_reason;
  std::string csv_path;
  std::string report_path;
};

// Executes the spec, observing every step through a monitor; writes
// `<output>.csv` and `<output>.report.json` when an output prefix is set.
// Numeric failures abort the run but still produce the partial outputs.
RunOutcome run(const ExperimentSpec& spec);

nlohmann::json report_to_json(const RunOutcome& outcome);

struct ScenarioOutcome {
  std::string name;
  std::vector<RunOutcome> runs;
  nlohmann::json summary;
  std::string summary_path;
};

// Preset experiment bundles: fig1, fig2, figA1, figA2, figA3, figA4. Member
// runs execute in parallel, one monitor per run; outputs land under out_dir.
ScenarioOutcome scenario(const std::string& name, const std::string& out_dir);

struct CheckVerdict {
  std::string name;
  bool holds = false;
  double lhs = 0.0;
  double rhs = 0.0;
  double tolerance = 0.0;
};

// Lemma suites: the z-sequence identity across every variant, problem and
// momentum schedule, plus randomized sweeps of the two sequence inequalities.
std::vector<CheckVerdict> check_lemmas(std::uint64_t seed);
// Gradient oracles: finite-difference agreement, Monte-Carlo unbiasedness,
// the declared gradient bound, and the Lipschitz spot check.
std::vector<CheckVerdict> check_gradients(std::uint64_t seed);
std::vector<CheckVerdict> check_suite(const std::string& suite, std::uint64_t seed);

nlohmann::json verdicts_to_json(const std::vector<CheckVerdict>& verdicts);
bool all_hold(const std::vector<CheckVerdict>& verdicts);

// shortest round-trip decimal representation (17 significant digits max)
std::string format_double(double v);

}  // namespace adamon::harness
