#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <span>
#include <vector>

#include "cler/tensor.h"

namespace cler {

// One labeled input; x holds a flattened image with values in [0, 1].
struct Example {
  std::vector<double> x;
  int y = 0;
};

struct Dataset {
  std::vector<Example> examples;
  std::size_t n_classes = 0;
  // Image geometry of x; zero when the features are not an image.
  std::size_t height = 0;
  std::size_t width = 0;

  std::size_t size() const { return examples.size(); }
  bool empty() const { return examples.empty(); }
  std::size_t dim() const { return examples.empty() ? height * width : examples.front().x.size(); }
  bool is_square_image() const { return height > 0 && height == width; }
};

struct DataSplit {
  Dataset train;
  Dataset test;
};

// IDX pair (images magic 0x00000803, labels magic 0x00000801, big-endian
// headers). Pixels are scaled by 1/255; n_classes is max label + 1.
Dataset load_idx(const std::filesystem::path& images, const std::filesystem::path& labels);

// CSV with a header row, an integer "label" column and numeric features in
// [0, 1]. A perfect-square feature count is treated as a square image.
Dataset load_csv(const std::filesystem::path& path);

struct BlobsOptions {
  std::size_t n_classes = 4;
  std::size_t dim = 16;
  std::size_t train_per_class = 100;
  std::size_t test_per_class = 50;
  double spread = 0.1;
  std::uint64_t seed = 0;
};

// Gaussian clusters around per-class centers in [0.2, 0.8]^dim, clipped to
// [0, 1]. Self-contained data for tests and smoke runs.
DataSplit make_blobs(const BlobsOptions& options);

// B x dim input matrix and the matching labels.
Tensor stack_inputs(std::span<const Example> examples);
std::vector<int> labels_of(std::span<const Example> examples);

}  // namespace cler
