#pragma once

#include <cstdint>
#include <iosfwd>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "qap/circuit.hpp"
#include "qap/costs.hpp"
#include "qap/dataset.hpp"
#include "qap/gradient.hpp"
#include "qap/optimizer.hpp"
#include "qap/prune.hpp"

namespace qap {

enum class ExperimentKind { Barren, Classify, Vqe, GradCheck };
enum class AnsatzFamily { HardwareEfficient, IrisQnn, MnistQnn, VqeCustom };
enum class InitKind { UniformPi, NormalPi, Zeros };

struct ExperimentConfig {
  ExperimentKind experiment = ExperimentKind::Barren;
  AnsatzFamily ansatz = AnsatzFamily::HardwareEfficient;
  int n_qubits = 8;
  int n_layers = 2;
  OptimizerConfig optimizer;
  PruneConfig prune;
  int shots = 0;  // 0 = analytic expectations
  int steps = 200;
  int epochs = 30;   // mini-batch (mnist-style) classification
  int batch = 32;
  std::uint64_t seed = 42;
  InitKind init = InitKind::UniformPi;
  std::string init_state = "1100";  // vqe reference state
  std::string dataset_path;
  std::string hamiltonian_path;
  std::string out_path;
  double val_fraction = 0.3;
  bool feature_scale = false;
  bool log_prune_state = false;
  int gradcheck_trials = 60;
  bool keep_grad_history = false;
};

ExperimentConfig default_config(ExperimentKind kind);

// `key = value` lines, '#' comments. Unknown keys are rejected.
void apply_config_file(ExperimentConfig& config, const std::string& path);
void validate_config(const ExperimentConfig& config);

// One optimizer step's telemetry.
struct TrainRecord {
  long step = 0;
  double cost = 0.0;
  double grad_norm = 0.0;  // L2 over live slots
  int n_frozen = 0;
  double pruning_ratio = 0.0;
  double wall_ms = 0.0;
  std::optional<double> val_accuracy;
  bool terminal = false;  // set when training halted with every slot frozen
  std::optional<std::vector<double>> tau;
  std::optional<std::vector<double>> accum;
};

struct RunSummary {
  double final_cost = 0.0;
  std::optional<double> final_accuracy;  // classification
  std::optional<double> final_energy;    // vqe, exact expectation
  long total_steps = 0;
  double final_pruning_ratio = 0.0;
  std::uint64_t total_circuit_evals = 0;  // training evaluations only
  double wall_ms_total = 0.0;
};

class RecordSink {
 public:
  virtual ~RecordSink() = default;
  virtual void on_record(const TrainRecord&) {}
  virtual void on_event(const PruneEvent&) {}
  virtual void on_summary(const RunSummary&) {}
};

// Writes one JSON object per line (records, prune events, final summary).
class JsonlSink : public RecordSink {
 public:
  explicit JsonlSink(std::ostream& out) : out_(out) {}
  void on_record(const TrainRecord& record) override;
  void on_event(const PruneEvent& event) override;
  void on_summary(const RunSummary& summary) override;

 private:
  std::ostream& out_;
};

struct RunResult {
  std::vector<TrainRecord> records;
  std::vector<PruneEvent> events;
  RunSummary summary;
  std::vector<double> final_params;
  std::vector<std::vector<double>> grad_history;  // keep_grad_history only
};

// Circuit, cost and data for one configured run. Exposed so tests can drive
// the same pieces through a bare optimization loop.
struct ExperimentSetup {
  ParamCircuit circuit;
  std::unique_ptr<CostFn> cost;
  Dataset train;
  Dataset val;
  PredictTask task = PredictTask::SignOfExpectation;
  bool minibatch = false;
  std::vector<double> initial_params;
};

ExperimentSetup assemble_experiment(const ExperimentConfig& config);

std::vector<double> draw_init_params(InitKind kind, std::size_t n_params,
                                     std::uint64_t master_seed);

// Seed fed to the k-subset selection of the pruning event with counter kappa.
std::uint64_t prune_event_seed(std::uint64_t master_seed, long kappa);

// Per-step sample index lists for mini-batch training: a seeded shuffle per
// epoch, chopped into batches.
std::vector<std::vector<std::size_t>> batch_schedule(std::size_t n_samples,
                                                     int batch, int epochs,
                                                     std::uint64_t master_seed);

// Full training loop: evaluate cost and shift gradient (respecting the freeze
// mask), feed the pruning state machine, take the optimizer step, re-pin
// frozen slots, emit one record per step. Stops at the step budget or when
// every slot is frozen.
RunResult run_experiment(const ExperimentConfig& config,
                         RecordSink* sink = nullptr);

struct GradCheckTrial {
  std::string family;
  int n_qubits = 0;
  int n_layers = 0;
  double max_abs_err = 0.0;
};

struct GradCheckResult {
  std::vector<GradCheckTrial> trials;
  double max_abs_err = 0.0;
  bool pass = false;  // every trial under 1e-4
};

// Shift-rule gradients vs. the central-difference oracle (h = 1e-5) on
// randomized circuits covering every ansatz family and loss, analytic mode.
GradCheckResult run_gradcheck(int n_trials, std::uint64_t seed);

}  // namespace qap
