#include "pnw/membership.hpp"

#include <cassert>
#include <stdexcept>

#include "pnw/tables.hpp"

namespace pnw {

CriticalPrefix critical_prefix(WordView w) {
  if (w.empty()) throw std::invalid_argument("critical prefix of the empty word is undefined");
  const std::size_t n = w.size();
  CriticalPrefix cp;
  while (cp.ones < n && w[cp.ones] == 1) ++cp.ones;
  while (cp.ones + cp.zeros < n && w[cp.ones + cp.zeros] == 0) ++cp.zeros;
  cp.length = cp.ones + cp.zeros;
  return cp;
}

void run_length_blocks(WordView w, RunLengthBlocks& out) {
  out.blocks.clear();
  std::size_t i = 0;
  const std::size_t n = w.size();
  while (i < n) {
    RunBlock b;
    while (i < n && w[i] == 1) ++b.ones, ++i;
    while (i < n && w[i] == 0) ++b.zeros, ++i;
    out.blocks.push_back(b);
  }
}

RunLengthBlocks run_length_blocks(WordView w) {
  RunLengthBlocks out;
  run_length_blocks(w, out);
  return out;
}

bool is_prefix_normal(WordView w) {
  const std::size_t n = w.size();
  std::vector<int> p(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) p[i + 1] = p[i] + w[i];
  // Factors starting at index `start`, compared with the prefix of equal length.
  for (std::size_t start = 1; start < n; ++start) {
    int ones = 0;
    for (std::size_t end = start; end < n; ++end) {
      ones += w[end];
      if (ones > p[end - start + 1]) return false;
    }
  }
  return true;
}

bool phase_one_rejects(const RunLengthBlocks& rl, RejectionRule rule) {
  if (rl.count() < 2) return false;
  const std::size_t s1 = rl[0].ones;
  const std::size_t cr = rl[0].ones + rl[0].zeros;
  for (std::size_t i = 1; i < rl.count(); ++i) {
    if (rl[i].ones > s1) return true;
    if (rule == RejectionRule::kCombined) {
      const RunBlock& prev = rl[i - 1];
      if (prev.ones + prev.zeros + rl[i].ones <= cr && prev.ones + rl[i].ones > s1) return true;
    }
  }
  return false;
}

TwoPhaseResult member_two_phase_detail(WordView w) {
  thread_local RunLengthBlocks scratch;
  run_length_blocks(w, scratch);
  if (phase_one_rejects(scratch, RejectionRule::kCombined)) return {false, DecidedBy::kPhaseOne};
  return {is_prefix_normal(w), DecidedBy::kPhaseTwo};
}

bool is_extension_critical(WordView w) {
  assert(is_prefix_normal(w));
  const std::size_t n = w.size();
  const WeightTable p = prefix_weights(w);
  // Suffixes of length 0..n-1; the whole word never violates.
  int suffix_ones = 0;
  for (std::size_t len = 0; len < n; ++len) {
    if (len > 0) suffix_ones += w[n - len];
    if (suffix_ones >= p[len + 1]) return true;
  }
  return false;
}

}  // namespace pnw
