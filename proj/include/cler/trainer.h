#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

#include "cler/mlp.h"
#include "cler/regularizers.h"
#include "cler/scenarios.h"

namespace cler {

struct TrainConfig {
  double alpha = 1.0;              // weight of the replayed cross-entropy
  RegularizerSpec regularizer;     // consistency loss and its weight beta
  std::size_t buffer_capacity = 500;  // 0 gives plain sequential SGD
  std::size_t batch_size = 32;     // stream and buffer minibatches alike
  std::size_t epochs_per_task = 1;
  double learning_rate = 0.05;
  std::uint64_t seed = 0;

  void validate() const;
};

struct StepLosses {
  double er = 0.0;     // stream CE + alpha * replay CE
  double cr = 0.0;     // consistency term before beta
  double total = 0.0;  // er + beta * cr
};

struct TrainLog {
  std::vector<StepLosses> steps;
  // accuracy[i][t]: percent on task t's test set after training task i.
  // A joint run has a single row.
  std::vector<std::vector<double>> accuracy;
  // Task t's test accuracy just before its first batch (continual only).
  std::vector<double> pre_task_accuracy;
  // Each task's test accuracy under the untrained model.
  std::vector<double> random_init_accuracy;

  const std::vector<double>& final_accuracy() const { return accuracy.back(); }
  double final_average_accuracy() const;
};

// Raised when a step produces a non-finite loss.
class NonFiniteLossError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Called after every optimizer step with (task index, step index).
using StepCallback = std::function<void(std::size_t, std::size_t)>;

// Experience replay with a consistency term on buffered logits. Task
// boundaries only schedule evaluation; sampling and losses never see them.
// Fully deterministic given config.seed and the model's initial weights.
TrainLog train_continual(const TaskStream& stream, MlpClassifier& model,
                         const TrainConfig& config, const StepCallback& on_step = {});

// Upper bound: one pass schedule over the shuffled union of all tasks with
// the same sample budget, no replay, evaluated once on every task.
TrainLog train_joint(const TaskStream& stream, MlpClassifier& model, const TrainConfig& config,
                     const StepCallback& on_step = {});

}  // namespace cler
