#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace cler {

using Shape = std::vector<std::size_t>;

std::size_t numel(const Shape& shape);
std::string shape_to_string(const Shape& shape);

namespace detail {
struct TensorImpl;
}

// Dense row-major float64 tensor. Copies share storage (handle semantics);
// operations build a reverse-mode graph on the fly when any input requires
// a gradient and grad mode is enabled on the calling thread.
class Tensor {
 public:
  Tensor();
  Tensor(Shape shape, std::vector<double> data, bool requires_grad = false);

  static Tensor zeros(const Shape& shape, bool requires_grad = false);
  static Tensor full(const Shape& shape, double value, bool requires_grad = false);
  static Tensor scalar(double value, bool requires_grad = false);

  const Shape& shape() const;
  std::size_t rank() const { return shape().size(); }
  std::size_t numel() const;
  // Rows/cols of a rank-2 tensor; throws otherwise.
  std::size_t rows() const;
  std::size_t cols() const;

  std::span<const double> data() const;
  // Direct write access, intended for optimizer updates on leaf parameters.
  std::span<double> mutable_data();
  double item() const;
  double at(std::size_t row, std::size_t col) const;

  bool requires_grad() const;
  void set_requires_grad(bool value);
  bool is_leaf() const;

  bool has_grad() const;
  // Throws when no gradient has been accumulated.
  std::span<const double> grad() const;
  void zero_grad();
  void clear_grad();

  // Same values, cut from the graph.
  Tensor detach() const;
  // Deep copy of the values into a fresh leaf.
  Tensor clone(bool requires_grad = false) const;

  // Reverse-mode pass from a scalar. Leaf gradients accumulate across calls.
  void backward() const;

  bool defined() const { return static_cast<bool>(impl_); }
  const std::shared_ptr<detail::TensorImpl>& impl() const { return impl_; }
  explicit Tensor(std::shared_ptr<detail::TensorImpl> impl);

 private:
  std::shared_ptr<detail::TensorImpl> impl_;
};

namespace detail {

struct Node {
  std::vector<std::shared_ptr<TensorImpl>> inputs;
  // Receives the output tensor (with its gradient populated) and accumulates
  // into the inputs that require gradients.
  std::function<void(const TensorImpl& out)> backward;
};

struct TensorImpl {
  Shape shape;
  std::vector<double> data;
  std::optional<std::vector<double>> grad;
  bool requires_grad = false;
  std::shared_ptr<Node> node;

  std::vector<double>& grad_buffer();
};

}  // namespace detail

// Disables graph construction on the current thread while alive.
class NoGradGuard {
 public:
  NoGradGuard();
  ~NoGradGuard();
  NoGradGuard(const NoGradGuard&) = delete;
  NoGradGuard& operator=(const NoGradGuard&) = delete;

 private:
  bool previous_;
};

bool grad_enabled();

// Elementwise arithmetic with numpy-style broadcasting.
Tensor operator+(const Tensor& a, const Tensor& b);
Tensor operator-(const Tensor& a, const Tensor& b);
Tensor operator*(const Tensor& a, const Tensor& b);
Tensor operator/(const Tensor& a, const Tensor& b);
Tensor operator-(const Tensor& a);
Tensor operator+(const Tensor& a, double s);
Tensor operator+(double s, const Tensor& a);
Tensor operator-(const Tensor& a, double s);
Tensor operator-(double s, const Tensor& a);
Tensor operator*(const Tensor& a, double s);
Tensor operator*(double s, const Tensor& a);
Tensor operator/(const Tensor& a, double s);

Tensor relu(const Tensor& x);
Tensor exp(const Tensor& x);
Tensor log(const Tensor& x);
Tensor sqrt(const Tensor& x);
Tensor abs(const Tensor& x);
Tensor pow(const Tensor& x, double exponent);
// x * log(x) with the 0 * log 0 = 0 convention; requires x >= 0.
Tensor xlogx(const Tensor& x);

// Rank-2 operations.
Tensor matmul(const Tensor& a, const Tensor& b);
Tensor transpose(const Tensor& x);
Tensor concat_rows(const Tensor& top, const Tensor& bottom);

Tensor sum(const Tensor& x);
Tensor mean(const Tensor& x);
// Reductions along axis 0 or 1 of a rank-2 tensor, keeping the reduced axis.
Tensor sum(const Tensor& x, std::size_t axis);
Tensor mean(const Tensor& x, std::size_t axis);
// Maximum along an axis; ties route the gradient to the first index.
Tensor max(const Tensor& x, std::size_t axis);

// Row-wise on rank-2 input.
Tensor softmax(const Tensor& logits);
Tensor log_softmax(const Tensor& logits);
Tensor l2_normalize(const Tensor& v);
// Euclidean norm of each row as an (R x 1) column; zero rows get a zero
// subgradient.
Tensor row_norm(const Tensor& x);

}  // namespace cler
