#pragma once

// Gray code generation of prefix normal words.
//
// The oracle keeps f[k] = F(g 0^(s+t), k), the maximum-ones function of the
// fixed suffix g padded with zeros, for the current node 1^s 0^t g. Testing
// whether child j (move the last leading 1 to 1-based position s+j) is prefix
// normal then takes O(s+j): it is not iff the length-(s+j-1) window starting
// at the moved 1 holds >= s ones, or f[s+j-1] >= s.

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "pnw/bubble.hpp"
#include "pnw/membership.hpp"
#include "pnw/word.hpp"

namespace pnw {

/// Default counter policy; every hook is a no-op.
struct NoCounters {
  static constexpr bool enabled = false;
  void member_call() noexcept {}
  void symbol_reads(std::size_t) noexcept {}
  void swaps(std::size_t) noexcept {}
};

/// Instrumented policy used by benchmarks and cost-trend checks.
struct OpCounters {
  static constexpr bool enabled = true;
  std::uint64_t member_calls = 0;
  std::uint64_t reads = 0;
  std::uint64_t swap_count = 0;

  void member_call() noexcept { ++member_calls; }
  void symbol_reads(std::size_t k) noexcept { reads += k; }
  void swaps(std::size_t k) noexcept { swap_count += k; }
};

template <class Counters = NoCounters>
class PrefixNormalOracle {
 public:
  /// Saved f[1..length]; storage lives in a per-frame row of the oracle.
  struct Snapshot {
    int slot = 0;
    int length = 0;
  };

  explicit PrefixNormalOracle(int n)
      : n_(n),
        f_(static_cast<std::size_t>(n) + 2, 0),
        saved_((static_cast<std::size_t>(n) + 1) * (static_cast<std::size_t>(n) + 2), 0) {
    if (n < 0) throw std::invalid_argument("negative length");
  }

  void start(const WorkingWord&, int, int) { std::fill(f_.begin(), f_.end(), 0); }

  /// Is swap(w, s, s+j) prefix normal? 1-based positions; the current word
  /// must be 1^s 0^t g in L_PN with 1 <= j <= t.
  bool member(const WorkingWord& w, int s, int j) {
    counters_.member_call();
    int ones = 1;  // the 1 that the swap would move to position s+j
    const int first = s + j;  // 0-based index of 1-based position s+j+1
    const int last = 2 * (s + j - 1) - 1;
    for (int k = first; k <= last; ++k) ones += w[static_cast<std::size_t>(k)];
    if (last >= first) counters_.symbol_reads(static_cast<std::size_t>(last - first + 1));
    return !(ones >= s || f_[static_cast<std::size_t>(s + j - 1)] >= s);
  }

  /// Bubble upper bound of the current node.
  int bound(const WorkingWord& w, int s, int t) {
    int j = 1;
    while (j <= t && member(w, s, j)) ++j;
    return j - 1;
  }

  /// Folds the windows starting at 1-based position x (the moved 1) into f.
  void update_f(const WorkingWord& w, int x) {
    int ones = 0;
    for (int k = x; k <= 2 * x; ++k) {
      ones += w[static_cast<std::size_t>(k - 1)];
      int& slot = f_[static_cast<std::size_t>(k - x + 1)];
      slot = std::max(slot, ones);
    }
    counters_.symbol_reads(static_cast<std::size_t>(x + 1));
  }

  Snapshot descend(const WorkingWord& w, int s, int i) {
    const int x = s + i;
    // s strictly decreases along a path, so it names a free row.
    const Snapshot snap{s, x + 1};
    std::copy_n(f_.begin() + 1, snap.length, row(snap.slot));
    update_f(w, x);
    counters_.swaps(2);
    return snap;
  }

  void ascend(const WorkingWord&, int, int, const Snapshot& snap) {
    std::copy_n(row(snap.slot), snap.length, f_.begin() + 1);
  }

  /// f[0..n+1]; f[0] is always 0.
  std::span<const int> f() const noexcept { return f_; }
  int length() const noexcept { return n_; }
  const Counters& counters() const noexcept { return counters_; }
  Counters& counters() noexcept { return counters_; }

 private:
  std::vector<int>::iterator row(int slot) {
    return saved_.begin() + static_cast<std::ptrdiff_t>(slot) * (n_ + 2);
  }

  int n_;
  std::vector<int> f_;
  std::vector<int> saved_;
  Counters counters_;
};

/// All prefix normal words of one length, one weight class at a time.
template <class Counters = NoCounters>
class PrefixNormalGenerator {
 public:
  explicit PrefixNormalGenerator(int n, VisitOrder order = VisitOrder::kCoolLex)
      : n_(n), order_(order), oracle_(n) {
    if (n < 1) throw std::invalid_argument("length must be at least 1");
  }

  /// L_PN(n, d) in cool-lex order (or pre-order when configured).
  template <WordVisitor V>
  void generate_weight(int d, V&& visit) {
    if (d < 0 || d > n_) throw std::invalid_argument("need 0 <= d <= n");
    if (d == 0 || d == n_) {
      const BinaryWord w = BinaryWord::block(static_cast<std::size_t>(d), static_cast<std::size_t>(n_ - d));
      visit(w.view());
      return;
    }
    gen_bubble(oracle_, n_, d, visit, order_);
  }

  /// Weights 0..n ascending. Consecutive words differ by at most two swaps,
  /// or by one swap and one bit flip at a weight boundary.
  template <WordVisitor V>
  void generate_all(V&& visit) {
    for (int d = 0; d <= n_; ++d) generate_weight(d, visit);
  }

  /// Odd weights ascending, then even weights descending.
  template <WordVisitor V>
  void generate_all_cyclic(V&& visit) {
    for (int d = 1; d <= n_; d += 2) generate_weight(d, visit);
    for (int d = (n_ % 2 == 0) ? n_ : n_ - 1; d >= 0; d -= 2) generate_weight(d, visit);
  }

  int length() const noexcept { return n_; }
  const PrefixNormalOracle<Counters>& oracle() const noexcept { return oracle_; }
  const Counters& counters() const noexcept { return oracle_.counters(); }

 private:
  int n_;
  VisitOrder order_;
  PrefixNormalOracle<Counters> oracle_;
};

template <WordVisitor V>
void generate_all_pn(int n, V&& visit, VisitOrder order = VisitOrder::kCoolLex) {
  PrefixNormalGenerator<> gen(n, order);
  gen.generate_all(visit);
}

template <WordVisitor V>
void generate_all_pn_cyclic(int n, V&& visit, VisitOrder order = VisitOrder::kCoolLex) {
  PrefixNormalGenerator<> gen(n, order);
  gen.generate_all_cyclic(visit);
}

template <WordVisitor V>
void generate_pn_weight(int n, int d, V&& visit, VisitOrder order = VisitOrder::kCoolLex) {
  PrefixNormalGenerator<> gen(n, order);
  gen.generate_weight(d, visit);
}

/// Depth-first extension from the empty word: append 0, and also 1 unless
/// the word is extension critical. Leaves at depth n are L_PN(n) in
/// lexicographic order; this is not a Gray code.
template <WordVisitor V>
void simple_generate_pn(int n, V&& visit) {
  if (n < 1) throw std::invalid_argument("length must be at least 1");
  BinaryWord word;
  auto rec = [&](auto& self) -> void {
    if (static_cast<int>(word.size()) == n) {
      visit(word.view());
      return;
    }
    const bool critical = is_extension_critical(word);
    word.push_back(0);
    self(self);
    word.pop_back();
    if (!critical) {
      word.push_back(1);
      self(self);
      word.pop_back();
    }
  };
  rec(rec);
}

}  // namespace pnw
