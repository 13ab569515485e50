#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cler/data.h"
#include "cler/image.h"
#include "cler/mlp.h"
#include "cler/scenarios.h"
#include "cler/trainer.h"

namespace cler {

inline constexpr int kSchemaVersion = 1;

// Invalid or inconsistent experiment configuration (CLI exit code 2).
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DatasetConfig {
  enum class Kind { kMnistIdx, kCsv, kBlobs };
  Kind kind = Kind::kBlobs;
  // mnist_idx
  std::filesystem::path train_images, train_labels, test_images, test_labels;
  // csv
  std::filesystem::path train_csv, test_csv;
  // blobs
  BlobsOptions blobs;
};

struct ScenarioConfig {
  Scenario kind = Scenario::kClassIL;
  std::size_t n_tasks = 5;          // class_il, rotated_domain_il
  std::size_t train_per_task = 0;   // rotated_domain_il, 0 = all
  std::size_t test_per_task = 0;    // rotated_domain_il, 0 = all
  Mnist360Options mnist360;         // mnist360 (seed comes from the run)
};

enum class RunMode { kContinual, kJoint, kSgd };

std::string_view to_string(RunMode mode);

struct ExperimentConfig {
  std::string name = "experiment";
  DatasetConfig dataset;
  ScenarioConfig scenario;
  RunMode mode = RunMode::kContinual;
  std::vector<std::size_t> hidden = {100, 100};
  TrainConfig train;  // train.seed is replaced by each run's seed
  std::size_t ece_bins = 10;
  bool robustness = false;
  std::vector<CorruptionKind> corruption_kinds{kAllCorruptions.begin(), kAllCorruptions.end()};
  std::vector<int> severities = {1, 2, 3, 4, 5};
  std::uint64_t seed = 0;
  std::size_t n_seeds = 1;
  std::filesystem::path output_dir = "runs/experiment";
};

// Relative paths resolve against base_dir. Throws ConfigError.
ExperimentConfig parse_config(const nlohmann::json& j, const std::filesystem::path& base_dir);
ExperimentConfig load_config(const std::filesystem::path& path);
// Effective config with every default filled in.
nlohmann::json to_json(const ExperimentConfig& config);

DataSplit load_dataset(const DatasetConfig& config);
TaskStream build_stream(const ExperimentConfig& config, const DataSplit& data,
                        std::uint64_t seed);
MlpClassifier make_model(const ExperimentConfig& config, const TaskStream& stream,
                         std::uint64_t seed);

// Final-model metrics over a stream: per-task accuracy, ECE with bins,
// task probabilities (Class-IL) and, if enabled, corruption robustness.
nlohmann::json evaluate(const ExperimentConfig& config, const MlpClassifier& model,
                        const TaskStream& stream, std::uint64_t seed);
nlohmann::json robustness_json(const ExperimentConfig& config, const MlpClassifier& model,
                               const TaskStream& stream, std::uint64_t seed);

struct SeedRun {
  std::uint64_t seed = 0;
  TrainLog log;
  MlpClassifier model;
  nlohmann::json report;
  double seconds = 0.0;
};

SeedRun run_seed(const ExperimentConfig& config, const DataSplit& data, std::uint64_t seed);

// Runs every seed and writes the output directory. Returns the aggregate.
nlohmann::json run_experiment(const ExperimentConfig& config, std::ostream& progress);

// "92.20 ± 0.15"
std::string format_mean_std(double mean, double std);
// Mean and sample standard deviation (0 for a single value) per metric.
nlohmann::json aggregate_reports(const std::vector<nlohmann::json>& reports);

// Relative gains of run A over reference run B plus per-task accuracies.
nlohmann::json compare_runs(const std::filesystem::path& run_a, const std::filesystem::path& run_b);

std::string accuracy_matrix_csv(const TrainLog& log);
std::string reliability_csv(const nlohmann::json& reliability);
std::string losses_csv(const TrainLog& log);

}  // namespace cler
