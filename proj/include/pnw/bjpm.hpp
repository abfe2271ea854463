#pragma once

#include <cstddef>
#include <vector>

#include "pnw/tables.hpp"
#include "pnw/word.hpp"

namespace pnw {

/// Constant-time binary jumbled pattern matching. Every window length k
/// admits a contiguous range of 1-counts, [min_ones[k], max_ones[k]], since
/// sliding a window changes its count by at most one.
class BjpmIndex {
 public:
  explicit BjpmIndex(WordView w);

  /// Does the indexed word have a factor with exactly `ones` 1s and `zeros` 0s?
  bool query(std::size_t ones, std::size_t zeros) const noexcept;

  std::size_t length() const noexcept { return max_ones_.size() - 1; }
  const MaxOnesTable& max_ones() const noexcept { return max_ones_; }
  const std::vector<int>& min_ones() const noexcept { return min_ones_; }

 private:
  MaxOnesTable max_ones_;
  std::vector<int> min_ones_;
};

inline bool bjpm_query(const BjpmIndex& idx, std::size_t ones, std::size_t zeros) noexcept {
  return idx.query(ones, zeros);
}

}  // namespace pnw
