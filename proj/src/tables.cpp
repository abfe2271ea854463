#include "pnw/tables.hpp"

#include <algorithm>

namespace pnw {

WeightTable prefix_weights(WordView w) {
  WeightTable p;
  p.values.resize(w.size() + 1);
  p.values[0] = 0;
  for (std::size_t i = 0; i < w.size(); ++i) p.values[i + 1] = p.values[i] + w[i];
  return p;
}

MaxOnesTable max_ones(WordView w) {
  const std::size_t n = w.size();
  MaxOnesTable f;
  f.values.assign(n + 1, 0);
  for (std::size_t len = 1; len <= n; ++len) {
    int window = 0;
    for (std::size_t k = 0; k < len; ++k) window += w[k];
    int best = window;
    for (std::size_t start = 1; start + len <= n; ++start) {
      window += w[start + len - 1] - w[start - 1];
      best = std::max(best, window);
    }
    f.values[len] = best;
  }
  return f;
}

BinaryWord pnf(WordView w) {
  const MaxOnesTable f = max_ones(w);
  BinaryWord out(w.size(), 0);
  for (std::size_t i = 1; i <= w.size(); ++i) {
    out.set(i - 1, static_cast<Symbol>(f[i] - f[i - 1]));
  }
  return out;
}

}  // namespace pnw
