#pragma once

#include <cstddef>
#include <vector>

#include "pnw/word.hpp"

namespace pnw {

/// Decomposition w = 1^s 0^t gamma, gamma empty or starting with 1.
/// For w = 1^n the convention is s = n, t = 0, length = n.
struct CriticalPrefix {
  std::size_t ones = 0;    // s
  std::size_t zeros = 0;   // t
  std::size_t length = 0;  // cr(w)

  /// Index of the first symbol of gamma.
  std::size_t suffix_begin() const noexcept { return ones + zeros; }
  friend bool operator==(const CriticalPrefix&, const CriticalPrefix&) = default;
};

/// Throws std::invalid_argument for the empty word.
CriticalPrefix critical_prefix(WordView w);

/// Maximal factors of the form 1^* 0^*. Only the first block may have no
/// leading 1s, only the last may have no trailing 0s.
struct RunBlock {
  std::size_t ones = 0;
  std::size_t zeros = 0;
  friend bool operator==(const RunBlock&, const RunBlock&) = default;
};

struct RunLengthBlocks {
  std::vector<RunBlock> blocks;

  std::size_t count() const noexcept { return blocks.size(); }
  const RunBlock& operator[](std::size_t i) const noexcept { return blocks[i]; }
  friend bool operator==(const RunLengthBlocks&, const RunLengthBlocks&) = default;
};

RunLengthBlocks run_length_blocks(WordView w);
/// Reuses `out`'s storage.
void run_length_blocks(WordView w, RunLengthBlocks& out);

/// Quadratic scan comparing every factor against the prefix of the same
/// length; stops at the first violation. The empty word is prefix normal.
bool is_prefix_normal(WordView w);

enum class RejectionRule {
  kLongestRun,  // reject if some later 1-run is longer than the leading one
  kCombined,    // kLongestRun plus the 1^i 0^j 1^k window test
};

/// Linear-time rejection on the block decomposition. Never rejects a prefix
/// normal word.
bool phase_one_rejects(const RunLengthBlocks& blocks, RejectionRule rule);

enum class DecidedBy { kPhaseOne, kPhaseTwo };

struct TwoPhaseResult {
  bool member = false;
  DecidedBy decided_by = DecidedBy::kPhaseOne;
};

TwoPhaseResult member_two_phase_detail(WordView w);

/// Same answer as is_prefix_normal; cheap rejections first, the quadratic
/// scan only for survivors.
inline bool member_two_phase(WordView w) { return member_two_phase_detail(w).member; }

/// True iff w·1 is not prefix normal. Linear time. Requires w to be prefix
/// normal (asserted in debug builds).
bool is_extension_critical(WordView w);

}  // namespace pnw
