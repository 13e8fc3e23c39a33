#pragma once

#include <cstddef>
#include <iterator>
#include <type_traits>
#include <vector>

namespace hyperlaplace {

// Streaming pairwise summation. Partial sums are kept in a binary-counter
// stack so the reduction tree depends only on the number of terms, which
// makes the result bitwise reproducible for a fixed input order.
template <typename T>
class PairwiseAccumulator {
 public:
  void add(T value) {
    std::size_t n = count_++;
    while (n & 1u) {
      value = stack_.back() + value;
      stack_.pop_back();
      n >>= 1u;
    }
    stack_.push_back(value);
  }

  T sum() const {
    T total{};
    bool first = true;
    for (auto it = stack_.rbegin(); it != stack_.rend(); ++it) {
      total = first ? *it : *it + total;
      first = false;
    }
    return total;
  }

  std::size_t count() const { return count_; }

 private:
  std::vector<T> stack_;
  std::size_t count_ = 0;
};

template <typename Range>
auto pairwise_sum(const Range& values) {
  PairwiseAccumulator<std::decay_t<decltype(*std::begin(values))>> acc;
  for (const auto& v : values) acc.add(v);
  return acc.sum();
}

}  // namespace hyperlaplace
