#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <string_view>

#include "cler/tensor.h"

namespace cler {

// Consistency losses between current logits (B x C, differentiable) and the
// logits stored with buffered examples (B x C). The stored side is always
// treated as a constant: no gradient ever reaches it.

enum class RegularizerKind {
  kNone,
  kL1,
  kL2,
  kLinf,
  kMse,
  kKlDiv,
  kMutualInfo,
  kInfoNce,
  kByol,
  kDino,
  kBarlowTwins,
};

std::string_view to_string(RegularizerKind kind);
// Accepts the names produced by to_string, case-insensitively.
RegularizerKind parse_regularizer_kind(std::string_view name);

struct RegularizerSpec {
  RegularizerKind kind = RegularizerKind::kNone;
  double temperature = 1.0;     // InfoNCE, DINO
  double offdiag_weight = 1.0;  // Barlow Twins lambda
  double beta = 1.0;            // weight of the consistency term

  // Spec with the per-kind default temperature (0.5 InfoNCE, 1.0 otherwise).
  static RegularizerSpec with_defaults(RegularizerKind kind);
  // Throws std::invalid_argument unless temperature > 0, beta >= 0 and
  // offdiag_weight >= 0.
  void validate() const;
};

enum class Minkowski { kL1, kL2, kLinf };

// Batch mean of ||current_j - stored_j||_p.
Tensor lp_loss(const Tensor& current, const Tensor& stored, Minkowski p);
// Mean over all B*C elements of squared differences.
Tensor mse_loss(const Tensor& current, const Tensor& stored);
// Batch mean of KL(softmax(current) || softmax(stored)).
Tensor kl_div_loss(const Tensor& current, const Tensor& stored);

// Mutual information of two batches of class distributions. The joint is
// the batch average of per-sample outer products, symmetrized; marginals
// are its row and column sums; 0 log 0 = 0.
Tensor mutual_information(const Tensor& current_probs, const Tensor& stored_probs);
// -I(softmax(current), softmax(stored)).
Tensor mi_loss(const Tensor& current, const Tensor& stored);

// Symmetric NT-Xent over L2-normalized rows: each anchor's positive is its
// counterpart in the other view, every other row of both views is a
// negative. Requires B >= 2.
Tensor info_nce_loss(const Tensor& current, const Tensor& stored, double temperature);
// Batch mean of 2 - 2 cos(current_j, stored_j).
Tensor byol_loss(const Tensor& current, const Tensor& stored);
// Batch mean of H(softmax(n(stored)/tau), log_softmax(n(current)/tau)) with
// n() the row L2 normalization. No centering, no teacher momentum.
Tensor dino_loss(const Tensor& current, const Tensor& stored, double temperature);
// Columns standardized over the batch, C = A^T B / B,
// loss = sum_i (1 - C_ii)^2 + offdiag_weight * sum_{i != j} C_ij^2.
Tensor barlow_twins_loss(const Tensor& current, const Tensor& stored,
                         double offdiag_weight = 1.0);

using ConsistencyLoss = std::function<Tensor(const Tensor& current, const Tensor& stored)>;

// Loss for the spec's kind; kNone yields a constant zero (vanilla ER).
ConsistencyLoss make_regularizer(const RegularizerSpec& spec);

// Smallest minibatch the loss is defined on (in-batch negatives or batch
// statistics need two rows).
std::size_t min_batch_size(RegularizerKind kind);

}  // namespace cler
