#pragma once

#include <complex>
#include <cstddef>
#include <span>

namespace rsfield {

/// Pairwise (tree) reduction with a fixed partitioning. Summation order is a
/// pure function of the element count, so results are bit-reproducible run to
/// run, and rounding error grows like log(n) instead of n.
template <typename T>
T pairwise_sum(std::span<const T> values) {
  const std::size_t n = values.size();
  if (n == 0) return T{};
  if (n <= 8) {
    T acc = values[0];
    for (std::size_t i = 1; i < n; ++i) acc += values[i];
    return acc;
  }
  const std::size_t half = n / 2;
  return pairwise_sum(values.subspan(0, half)) + pairwise_sum(values.subspan(half));
}

template <typename T>
T pairwise_sum(const std::vector<T>& values) {
  return pairwise_sum(std::span<const T>(values.data(), values.size()));
}

}  // namespace rsfield
