#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <span>
#include <vector>

#include "cler/tensor.h"

namespace cler {

// Fully-connected classifier: ReLU on hidden layers, raw logits out.
// Copies are deep (each copy owns its parameters).
class MlpClassifier {
 public:
  // layer_sizes = (input_dim, hidden..., n_classes). Weights are drawn from
  // U(-1/sqrt(fan_in), 1/sqrt(fan_in)); biases start at zero.
  MlpClassifier(std::vector<std::size_t> layer_sizes, std::uint64_t seed);

  MlpClassifier(const MlpClassifier& other);
  MlpClassifier& operator=(const MlpClassifier& other);
  MlpClassifier(MlpClassifier&&) noexcept = default;
  MlpClassifier& operator=(MlpClassifier&&) noexcept = default;

  // batch: B x input_dim -> B x n_classes logits.
  Tensor forward(const Tensor& batch) const;

  const std::vector<std::size_t>& layer_sizes() const { return layer_sizes_; }
  std::size_t input_dim() const { return layer_sizes_.front(); }
  std::size_t n_classes() const { return layer_sizes_.back(); }
  std::size_t n_layers() const { return weights_.size(); }

  const Tensor& weight(std::size_t layer) const { return weights_.at(layer); }
  const Tensor& bias(std::size_t layer) const { return biases_.at(layer); }
  Tensor& weight(std::size_t layer) { return weights_.at(layer); }
  Tensor& bias(std::size_t layer) { return biases_.at(layer); }

  // Weight/bias pairs in layer order.
  std::vector<Tensor> parameters() const;
  void zero_grad();

  // Binary checkpoint: magic, version, layer sizes, then each layer's
  // weights and biases as raw little-endian float64, row-major.
  void save(std::ostream& out) const;
  static MlpClassifier load(std::istream& in);
  void save(const std::filesystem::path& path) const;
  static MlpClassifier load(const std::filesystem::path& path);

  friend bool operator==(const MlpClassifier& a, const MlpClassifier& b);

 private:
  MlpClassifier() = default;

  std::vector<std::size_t> layer_sizes_;
  std::vector<Tensor> weights_;  // fan_in x fan_out
  std::vector<Tensor> biases_;   // 1 x fan_out
};

// Mean over the batch of -log softmax(logits)[label].
Tensor cross_entropy(const Tensor& logits, std::span<const int> labels);

// Plain SGD: theta -= lr * grad, then clears gradients.
void sgd_step(MlpClassifier& model, double learning_rate);

}  // namespace cler
