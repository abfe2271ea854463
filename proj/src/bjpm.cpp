#include "pnw/bjpm.hpp"

namespace pnw {

BjpmIndex::BjpmIndex(WordView w) : max_ones_(pnw::max_ones(w)) {
  BinaryWord complement(w.size(), 0);
  for (std::size_t i = 0; i < w.size(); ++i) complement.set(i, static_cast<Symbol>(1 - w[i]));
  const MaxOnesTable max_zeros = pnw::max_ones(complement);
  min_ones_.resize(w.size() + 1);
  for (std::size_t k = 0; k <= w.size(); ++k) min_ones_[k] = static_cast<int>(k) - max_zeros[k];
}

bool BjpmIndex::query(std::size_t ones, std::size_t zeros) const noexcept {
  const std::size_t k = ones + zeros;
  if (k > length()) return false;
  const int x = static_cast<int>(ones);
  return min_ones_[k] <= x && x <= max_ones_[k];
}

}  // namespace pnw
