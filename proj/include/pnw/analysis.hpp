#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pnw/bubble.hpp"
#include "pnw/membership.hpp"
#include "pnw/word.hpp"

namespace pnw {

// ---------------------------------------------------------------------------
// Gray code verification

/// p = positions going 1 -> 0, q = positions going 0 -> 1.
enum class Closeness {
  /// p = q <= 2 (at most two swaps), or q = p + 1 with p <= 1 (a swap and a
  /// flip raising the weight by one).
  kStrict,
  /// At most two operations, each a swap or a single bit flip:
  /// max(p, q) <= 2.
  kTwoOperations,
};

bool gray_close(int p, int q, Closeness closeness = Closeness::kStrict) noexcept;

struct GrayViolation {
  std::size_t index = 0;  // position of `word` in the listing
  BinaryWord word;
  BinaryWord next;
  int p = 0;
  int q = 0;
};

struct GrayReport {
  std::uint64_t pairs_checked = 0;
  std::uint64_t violation_count = 0;
  std::vector<GrayViolation> violations;  // first few only

  bool ok() const noexcept { return violation_count == 0; }
};

/// Streaming checker; feed words in listing order.
class GrayVerifier {
 public:
  explicit GrayVerifier(Closeness closeness = Closeness::kStrict, std::size_t keep = 16);

  void operator()(WordView w);
  /// With `cyclic`, also checks the pair (last, first).
  GrayReport finish(bool cyclic = false);

 private:
  void check(const BinaryWord& a, const BinaryWord& b, std::size_t index);

  Closeness closeness_;
  std::size_t keep_;
  std::size_t seen_ = 0;
  BinaryWord first_;
  BinaryWord previous_;
  GrayReport report_;
};

GrayReport verify_gray(const Listing& listing, bool cyclic = false,
                       Closeness closeness = Closeness::kStrict);

// ---------------------------------------------------------------------------
// Exhaustive statistics

struct ExhaustiveLimits {
  int cap = 20;      // largest n for 2^n scans
  int threads = 1;   // partitions of the scan
};

/// |L_PN(n)| by counting the Gray code. Weights are split over `threads`.
std::uint64_t count_pnw(int n, int threads = 1);

/// Sum of cr(w) over all 2^n words. Throws std::out_of_range above the cap.
std::uint64_t critical_prefix_sum(int n, const ExhaustiveLimits& limits = {});

enum class Population { kAllWords, kPrefixNormal, kRandomPnf, kAllPnf };

struct CrStats {
  int n = 0;
  Population population = Population::kAllWords;
  std::uint64_t sum = 0;
  std::uint64_t count = 0;
  std::string prng;  // set for sampled populations
  std::uint64_t seed = 0;

  double mean() const noexcept { return count == 0 ? 0.0 : static_cast<double>(sum) / static_cast<double>(count); }
};

/// Mean critical prefix length over L_PN(n), streamed during generation.
CrStats avg_cr_pn(int n);

/// Mean cr(PNF(w)) over `samples` uniform random words of length n.
/// Throws std::invalid_argument when samples == 0.
CrStats pnf_cr_sample(int n, std::uint64_t samples, std::uint64_t seed);

/// Mean cr(PNF(w)) over all 2^n words.
CrStats pnf_cr_exhaustive(int n, const ExhaustiveLimits& limits = {});

/// All v with PNF(v) = w, in decreasing lexicographic order. Throws
/// std::invalid_argument if w is not prefix normal, std::out_of_range above
/// the cap.
std::vector<BinaryWord> equivalence_class(WordView w, const ExhaustiveLimits& limits = {});

struct RatioReport {
  int n = 0;
  RejectionRule rule = RejectionRule::kCombined;
  std::uint64_t rejected = 0;   // X_n
  std::uint64_t survivors = 0;  // Y_n = 2^n - X_n

  double ratio() const noexcept;
  /// n * Y_n / 2^n to three decimals, exact arithmetic, ties to even.
  std::string ratio_text() const;
};

RatioReport rejection_ratio(int n, RejectionRule rule, const ExhaustiveLimits& limits = {});

/// Decimal rendering of num/den with `digits` decimals, ties to even.
std::string format_fixed_half_even(std::uint64_t num, std::uint64_t den, int digits);

// ---------------------------------------------------------------------------
// Cost instrumentation

struct GenerationCost {
  int n = 0;
  std::uint64_t words = 0;
  std::uint64_t member_calls = 0;
  std::uint64_t symbol_reads = 0;
  std::uint64_t swaps = 0;
  std::uint64_t cr_sum = 0;
  double seconds = 0.0;  // generation plus a cr scan per word; nothing is printed

  double reads_per_word() const noexcept { return words ? static_cast<double>(symbol_reads) / static_cast<double>(words) : 0.0; }
  double calls_per_word() const noexcept { return words ? static_cast<double>(member_calls) / static_cast<double>(words) : 0.0; }
  double mean_cr() const noexcept { return words ? static_cast<double>(cr_sum) / static_cast<double>(words) : 0.0; }
};

/// One instrumented run of the Gray code generator for length n.
GenerationCost measure_generation(int n);

/// n - log2(pnw(n)).
double pnw_deficit(int n, std::uint64_t pnw);

const char* to_string(Population p) noexcept;
const char* to_string(RejectionRule r) noexcept;

}  // namespace pnw
