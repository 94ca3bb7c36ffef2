#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "qap/errors.hpp"
#include "qap/experiment.hpp"

namespace {

struct CommonFlags {
  std::string config_path;
  std::string out_path;
  std::uint64_t seed = 0;
  bool seed_set = false;
  bool no_prune = false;
  bool quiet = false;
};

void attach_common(CLI::App* cmd, CommonFlags& flags) {
  cmd->add_option("--config", flags.config_path, "key = value config file");
  cmd->add_option("--out", flags.out_path, "JSON-lines output path (default stdout)");
  cmd->add_option("--seed", flags.seed, "master seed")
      ->each([&flags](const std::string&) { flags.seed_set = true; });
  cmd->add_flag("--no-prune", flags.no_prune, "disable pruning for this run");
  cmd->add_flag("--quiet", flags.quiet, "suppress progress output");
}

qap::ExperimentConfig make_config(qap::ExperimentKind kind, const CommonFlags& flags) {
  qap::ExperimentConfig config = qap::default_config(kind);
  if (!flags.config_path.empty()) qap::apply_config_file(config, flags.config_path);
  config.experiment = kind;  // the subcommand wins over the file
  if (flags.seed_set) config.seed = flags.seed;
  if (!flags.out_path.empty()) config.out_path = flags.out_path;
  if (flags.no_prune) config.prune.enabled = false;
  return config;
}

class Progress : public qap::RecordSink {
 public:
  explicit Progress(bool quiet) : quiet_(quiet) {}
  void on_record(const qap::TrainRecord& r) override {
    if (quiet_ || (r.step % 10 != 0 && !r.terminal)) return;
    std::cerr << "step " << r.step << "  cost " << r.cost << "  frozen "
              << r.n_frozen << "\n";
  }
  void on_event(const qap::PruneEvent& e) override {
    if (quiet_) return;
    std::cerr << "prune event at step " << e.step << ": froze "
              << e.frozen_now.size() << " of " << e.saliency.size()
              << " salient slot(s)\n";
  }

 private:
  bool quiet_;
};

// Forwards to both the JSONL writer and the progress printer.
class TeeSink : public qap::RecordSink {
 public:
  TeeSink(qap::RecordSink& a, qap::RecordSink& b) : a_(a), b_(b) {}
  void on_record(const qap::TrainRecord& r) override { a_.on_record(r); b_.on_record(r); }
  void on_event(const qap::PruneEvent& e) override { a_.on_event(e); b_.on_event(e); }
  void on_summary(const qap::RunSummary& s) override { a_.on_summary(s); b_.on_summary(s); }

 private:
  qap::RecordSink& a_;
  qap::RecordSink& b_;
};

int run(qap::ExperimentKind kind, const CommonFlags& flags) {
  const qap::ExperimentConfig config = make_config(kind, flags);

  std::ofstream file;
  std::ostream* out = &std::cout;
  if (!config.out_path.empty()) {
    file.open(config.out_path);
    if (!file) throw qap::input_error("cannot open output file: " + config.out_path);
    out = &file;
  }

  if (kind == qap::ExperimentKind::GradCheck) {
    const qap::GradCheckResult result =
        qap::run_gradcheck(config.gradcheck_trials, config.seed);
    for (const qap::GradCheckTrial& t : result.trials)
      *out << nlohmann::json{{"v", 1},
                             {"type", "gradcheck"},
                             {"family", t.family},
                             {"qubits", t.n_qubits},
                             {"layers", t.n_layers},
                             {"max_abs_err", t.max_abs_err}}
                  .dump()
           << '\n';
    *out << nlohmann::json{{"v", 1},
                           {"type", "gradcheck_summary"},
                           {"trials", result.trials.size()},
                           {"max_abs_err", result.max_abs_err},
                           {"pass", result.pass}}
                .dump()
         << '\n';
    if (!flags.quiet)
      std::cerr << "gradcheck: max |shift - fd| = " << result.max_abs_err
                << (result.pass ? " (pass)" : " (FAIL)") << "\n";
    return result.pass ? 0 : 3;
  }

  qap::JsonlSink jsonl(*out);
  Progress progress(flags.quiet);
  TeeSink sink(jsonl, progress);
  const qap::RunResult result = qap::run_experiment(config, &sink);
  if (!flags.quiet) {
    std::cerr << "done: " << result.summary.total_steps << " steps, final cost "
              << result.summary.final_cost << ", pruning ratio "
              << result.summary.final_pruning_ratio << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variational-circuit trainer with adaptive parameter pruning"};
  app.require_subcommand(1);

  CommonFlags flags;
  auto* barren = app.add_subcommand("barren", "identity-learning trainability study");
  auto* classify = app.add_subcommand("classify", "dataset classification");
  auto* vqe = app.add_subcommand("vqe", "ground-state energy estimation");
  auto* gradcheck = app.add_subcommand("gradcheck", "shift rule vs finite differences");
  for (CLI::App* cmd : {barren, classify, vqe, gradcheck}) attach_common(cmd, flags);

  try {
    app.parse(argc, argv);
    qap::ExperimentKind kind = qap::ExperimentKind::Barren;
    if (classify->parsed()) kind = qap::ExperimentKind::Classify;
    else if (vqe->parsed()) kind = qap::ExperimentKind::Vqe;
    else if (gradcheck->parsed()) kind = qap::ExperimentKind::GradCheck;
    return run(kind, flags);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const qap::input_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const qap::capability_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const qap::numeric_error& e) {
    std::cerr << "numeric failure: " << e.what() << "\n";
    return 3;
  }
}
