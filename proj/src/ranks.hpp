// Dense coordinate ranks shared by the oracle kernels.

#pragma once

#include <algorithm>
#include <cstddef>
#include <span>
#include <vector>

namespace octcover::detail {

struct AxisRanks {
  std::vector<double> values;     // sorted, unique
  std::vector<std::size_t> rank;  // per input element, index into values
};

template <class Get, class T>
AxisRanks dense_ranks(std::span<const T> items, Get get) {
  AxisRanks r;
  r.values.reserve(items.size());
  for (const auto &it : items)
    r.values.push_back(get(it));
  std::sort(r.values.begin(), r.values.end());
  r.values.erase(std::unique(r.values.begin(), r.values.end()), r.values.end());
  r.rank.reserve(items.size());
  for (const auto &it : items)
    r.rank.push_back(
        static_cast<std::size_t>(std::lower_bound(r.values.begin(), r.values.end(), get(it)) - r.values.begin()));
  return r;
}

/// Row-major (rows+1) x (cols+1) count grid with a zero border.
class CountGrid {
public:
  void reset(std::size_t rows, std::size_t cols) {
    cols_ = cols + 1;
    cells_.assign((rows + 1) * cols_, 0);
  }
  int &at(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }
  int at(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }

  /// In-place inclusive prefix sums over both axes.
  void prefix_sum(std::size_t rows, std::size_t cols) {
    for (std::size_t i = 1; i <= rows; ++i)
      for (std::size_t j = 1; j <= cols; ++j)
        at(i, j) += at(i - 1, j) + at(i, j - 1) - at(i - 1, j - 1);
  }

private:
  std::size_t cols_ = 0;
  std::vector<int> cells_;
};

} // namespace octcover::detail
