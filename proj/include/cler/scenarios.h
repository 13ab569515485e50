#pragma once

#include <cstddef>
#include <cstdint>
#include <numbers>
#include <string_view>
#include <vector>

#include "cler/data.h"

namespace cler {

enum class Scenario { kClassIL, kDomainIL, kMnist360 };

std::string_view to_string(Scenario scenario);

struct Task {
  Dataset train;
  Dataset test;
  std::vector<int> classes;  // classes present in this task, ascending
};

// Ordered tasks D_1..D_T. Task boundaries are only used to schedule
// evaluation; training never sees them.
struct TaskStream {
  std::vector<Task> tasks;
  Scenario scenario = Scenario::kClassIL;
  std::size_t n_classes = 0;
  bool boundaries_visible = false;
  // Sample order within a task is part of the protocol (no shuffling).
  bool ordered = false;

  std::size_t n_tasks() const { return tasks.size(); }
};

// Contiguous, ascending class blocks: task t holds classes
// [t * K/T, (t+1) * K/T). n_classes must be divisible by n_tasks.
TaskStream split_class_il(const DataSplit& data, std::size_t n_tasks);

struct DomainIlOptions {
  std::size_t n_tasks = 20;
  std::uint64_t seed = 0;
  // Per-task subsample sizes; 0 keeps the full split. Subsamples are
  // stratified so every task has the same per-class counts.
  std::size_t train_per_task = 0;
  std::size_t test_per_task = 0;
};

// Task t rotates every train and test image by one angle drawn uniformly
// from [0, pi). Requires square images.
TaskStream rotated_domain_il(const DataSplit& data, const DomainIlOptions& options);

struct Mnist360Options {
  std::size_t repetitions = 6;
  // Samples of each of the two digits per pair block.
  std::size_t train_per_class_per_block = 100;
  std::size_t test_per_class_per_block = 25;
  // Rotation swept linearly over the whole stream: [0, total_rotation).
  double total_rotation = 2.0 * std::numbers::pi;
  std::uint64_t seed = 0;
};

// Pair blocks ({0,1}, {1,2}, ..., {7,8}) repeated `repetitions` times; the
// rotation angle grows linearly with stream position. Each block's test set
// holds its two digits rotated uniformly within the block's angle window.
// Digit 9 is dropped; the model sees 9 classes.
TaskStream mnist360_stream(const DataSplit& data, const Mnist360Options& options);

// Angles used by rotated_domain_il for the given seed and task count.
std::vector<double> domain_il_angles(std::size_t n_tasks, std::uint64_t seed);

}  // namespace cler
