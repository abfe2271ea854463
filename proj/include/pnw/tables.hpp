#pragma once

#include <cstddef>
#include <vector>

#include "pnw/word.hpp"

namespace pnw {

/// Prefix weights: entry i is the number of 1s among the first i symbols.
/// Holds n+1 entries; entry 0 is always 0.
struct WeightTable {
  std::vector<int> values;

  int operator[](std::size_t i) const noexcept { return values[i]; }
  std::size_t size() const noexcept { return values.size(); }
  friend bool operator==(const WeightTable&, const WeightTable&) = default;
};

/// Maximum-ones function: entry i is the largest number of 1s in any
/// length-i factor. Same shape as WeightTable.
struct MaxOnesTable {
  std::vector<int> values;

  int operator[](std::size_t i) const noexcept { return values[i]; }
  std::size_t size() const noexcept { return values.size(); }
  friend bool operator==(const MaxOnesTable&, const MaxOnesTable&) = default;
};

WeightTable prefix_weights(WordView w);

/// O(n^2): one sliding window pass per length.
MaxOnesTable max_ones(WordView w);

/// Prefix normal form, the first differences of max_ones(w).
BinaryWord pnf(WordView w);

}  // namespace pnw
