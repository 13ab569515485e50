#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "cler/data.h"
#include "cler/image.h"
#include "cler/mlp.h"
#include "cler/scenarios.h"

namespace cler {

// Worker count for read-only evaluation, from CLER_EVAL_THREADS (default 1).
std::size_t eval_threads();

struct Predictions {
  std::vector<int> predicted;       // argmax, ties to the lowest index
  std::vector<double> confidence;   // max softmax probability
  std::vector<int> labels;

  std::vector<bool> correct() const;
};

Predictions predict(const MlpClassifier& model, const Dataset& data);

// Percent of argmax hits. Throws on an empty set.
double top1_accuracy(const MlpClassifier& model, const Dataset& data);
// top1_accuracy on each set, spread over eval_threads() workers.
std::vector<double> top1_accuracies(const MlpClassifier& model,
                                    std::span<const Dataset* const> sets);

struct ReliabilityBin {
  std::size_t count = 0;
  double mean_confidence = 0.0;  // 0 for empty bins
  double accuracy = 0.0;         // fraction correct; 0 for empty bins
};

struct ReliabilityReport {
  std::size_t n_bins = 10;
  std::vector<ReliabilityBin> bins;
  double ece = 0.0;  // percent
};

// Bin m (1-based) holds confidences in ((m-1)/M, m/M]; a confidence of 0
// goes to bin 1.
std::size_t confidence_bin(double confidence, std::size_t n_bins);

ReliabilityReport reliability(std::span<const double> confidences,
                              const std::vector<bool>& correct, std::size_t n_bins = 10);
double ece(std::span<const double> confidences, const std::vector<bool>& correct,
           std::size_t n_bins = 10);

// Mean over tasks 2..T of pre_task_acc[t] - random_init_acc.
double forward_transfer(std::span<const double> pre_task_acc, double random_init_acc);

// Average softmax mass per task class block over every test sample of the
// stream, normalized to sum to 1. Class-IL streams only.
std::vector<double> task_probabilities(const MlpClassifier& model, const TaskStream& stream);

struct RobustnessCell {
  CorruptionKind kind;
  int severity;
  double accuracy;
};

struct RobustnessReport {
  double clean_accuracy = 0.0;
  std::vector<RobustnessCell> cells;
  double mra = 0.0;  // uniform mean over cells
};

RobustnessReport robust_accuracy(const MlpClassifier& model, const Dataset& test,
                                 std::span<const CorruptionKind> kinds,
                                 std::span<const int> severities, std::uint64_t seed);

// What relative_gains needs from one run.
struct GainInputs {
  double accuracy = 0.0;        // percent
  double ece = 0.0;             // percent
  double first_task_prob = 0.0;
  double last_task_prob = 0.0;
};

struct RelativeGains {
  double accuracy = 0.0;
  double recency = 0.0;
  double calibration = 0.0;
};

// Gains of `cr` over the reference `er`, in percent.
RelativeGains relative_gains(const GainInputs& cr, const GainInputs& er);

}  // namespace cler
