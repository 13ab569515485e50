#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <memory>
#include <random>
#include <span>
#include <vector>

namespace cler {

// One stored example: input, label and the logits the model produced when
// the example arrived. Payloads are shared and immutable, so copies are
// cheap and can never alter what the buffer holds.
struct BufferEntry {
  std::shared_ptr<const std::vector<double>> x;
  int y = 0;
  std::shared_ptr<const std::vector<double>> z;
};

// Fixed-capacity memory filled by reservoir sampling. Uses no task-boundary
// information: every stream example is resident with probability M/N after
// N >= M observations.
class ReservoirBuffer {
 public:
  ReservoirBuffer(std::size_t capacity, std::size_t input_dim, std::size_t logit_dim,
                  std::uint64_t seed);

  void observe(std::span<const double> x, int y, std::span<const double> z);

  // k entries drawn uniformly without replacement (all entries, shuffled,
  // when k >= size()). Throws on an empty buffer.
  std::vector<BufferEntry> sample_minibatch(std::size_t k);

  std::size_t capacity() const { return capacity_; }
  std::size_t size() const { return entries_.size(); }
  bool empty() const { return entries_.empty(); }
  std::uint64_t seen_count() const { return seen_; }
  std::size_t input_dim() const { return input_dim_; }
  std::size_t logit_dim() const { return logit_dim_; }
  const std::vector<BufferEntry>& entries() const { return entries_; }

  // Exact binary round trip of entries, seen count and generator state.
  void dump(std::ostream& out) const;
  static ReservoirBuffer restore(std::istream& in);

 private:
  std::size_t capacity_;
  std::size_t input_dim_;
  std::size_t logit_dim_;
  std::uint64_t seen_ = 0;
  std::vector<BufferEntry> entries_;
  std::mt19937_64 rng_;
};

}  // namespace cler
