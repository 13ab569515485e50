#pragma once

#include <functional>

#include "cler/tensor.h"

namespace cler {

// Compares reverse-mode gradients of a scalar-valued `fn` at `point` with
// central finite differences. Returns the largest
// |analytic - numeric| / max(1, |numeric|) over all coordinates.
double check_gradients(const std::function<Tensor(const Tensor&)>& fn, const Tensor& point,
                       double eps = 1e-4);

}  // namespace cler
