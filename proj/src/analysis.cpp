#include "pnw/analysis.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <random>
#include <stdexcept>
#include <thread>

#include "pnw/pn_generator.hpp"
#include "pnw/tables.hpp"

namespace pnw {

// ---------------------------------------------------------------------------
// Gray code verification

bool gray_close(int p, int q, Closeness closeness) noexcept {
  switch (closeness) {
    case Closeness::kStrict:
      return (p == q && p <= 2) || (q == p + 1 && p <= 1);
    case Closeness::kTwoOperations:
      return std::max(p, q) <= 2;
  }
  return false;
}

GrayVerifier::GrayVerifier(Closeness closeness, std::size_t keep) : closeness_(closeness), keep_(keep) {}

void GrayVerifier::check(const BinaryWord& a, const BinaryWord& b, std::size_t index) {
  ++report_.pairs_checked;
  int p = 0;
  int q = 0;
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    p += (a[i] == 1 && b[i] == 0);
    q += (a[i] == 0 && b[i] == 1);
  }
  if (a.size() == b.size() && gray_close(p, q, closeness_)) return;
  ++report_.violation_count;
  if (report_.violations.size() < keep_) report_.violations.push_back({index, a, b, p, q});
}

void GrayVerifier::operator()(WordView w) {
  BinaryWord current(w);
  if (seen_ == 0) {
    first_ = current;
  } else {
    check(previous_, current, seen_ - 1);
  }
  previous_ = std::move(current);
  ++seen_;
}

GrayReport GrayVerifier::finish(bool cyclic) {
  if (cyclic && seen_ > 1) check(previous_, first_, seen_ - 1);
  return report_;
}

GrayReport verify_gray(const Listing& listing, bool cyclic, Closeness closeness) {
  GrayVerifier v(closeness);
  for (const auto& e : listing) v(e.word.view());
  return v.finish(cyclic);
}

// ---------------------------------------------------------------------------
// Exhaustive scans

namespace {

void require_within_cap(int n, const ExhaustiveLimits& limits) {
  if (n < 0) throw std::invalid_argument("negative length");
  if (n > limits.cap || n > 62) {
    throw std::out_of_range("n = " + std::to_string(n) + " exceeds the exhaustive cap of " +
                            std::to_string(std::min(limits.cap, 62)));
  }
}

/// Runs `per_word(view, acc)` over all words of length n, split into
/// contiguous mask ranges, one private accumulator per thread, summed at the end.
template <class Acc, class PerWord>
Acc scan_all_words(int n, int threads, PerWord per_word) {
  const std::uint64_t total = std::uint64_t{1} << n;
  const auto parts = static_cast<std::uint64_t>(std::clamp(threads, 1, 64));
  std::vector<Acc> partial(parts);
  auto work = [&](std::uint64_t part) {
    const std::uint64_t lo = total * part / parts;
    const std::uint64_t hi = total * (part + 1) / parts;
    std::array<Symbol, 64> buf{};
    const WordView view(buf.data(), static_cast<std::size_t>(n));
    Acc acc{};
    for (std::uint64_t m = lo; m < hi; ++m) {
      for (int i = 0; i < n; ++i) buf[static_cast<std::size_t>(i)] = static_cast<Symbol>((m >> (n - 1 - i)) & 1U);
      per_word(view, acc);
    }
    partial[part] = acc;
  };
  if (parts == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::uint64_t p = 0; p < parts; ++p) pool.emplace_back(work, p);
    for (auto& t : pool) t.join();
  }
  Acc sum{};
  for (const Acc& a : partial) sum += a;
  return sum;
}

}  // namespace

std::uint64_t count_pnw(int n, int threads) {
  if (n < 1) throw std::invalid_argument("length must be at least 1");
  const int parts = std::clamp(threads, 1, n + 1);
  std::vector<std::uint64_t> counts(static_cast<std::size_t>(parts), 0);
  // Each thread owns a generator and takes every parts-th weight.
  auto work = [&](int part) {
    PrefixNormalGenerator<> gen(n);
    std::uint64_t c = 0;
    for (int d = part; d <= n; d += parts) gen.generate_weight(d, [&](WordView) { ++c; });
    counts[static_cast<std::size_t>(part)] = c;
  };
  if (parts == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (int p = 0; p < parts; ++p) pool.emplace_back(work, p);
    for (auto& t : pool) t.join();
  }
  std::uint64_t total = 0;
  for (auto c : counts) total += c;
  return total;
}

std::uint64_t critical_prefix_sum(int n, const ExhaustiveLimits& limits) {
  require_within_cap(n, limits);
  if (n == 0) return 0;
  return scan_all_words<std::uint64_t>(n, limits.threads, [](WordView w, std::uint64_t& acc) {
    acc += critical_prefix(w).length;
  });
}

CrStats avg_cr_pn(int n) {
  CrStats stats;
  stats.n = n;
  stats.population = Population::kPrefixNormal;
  generate_all_pn(n, [&](WordView w) {
    stats.sum += critical_prefix(w).length;
    ++stats.count;
  });
  return stats;
}

CrStats pnf_cr_sample(int n, std::uint64_t samples, std::uint64_t seed) {
  if (n < 1) throw std::invalid_argument("length must be at least 1");
  if (samples == 0) throw std::invalid_argument("sample count must be positive");
  CrStats stats;
  stats.n = n;
  stats.population = Population::kRandomPnf;
  stats.prng = "mt19937_64";
  stats.seed = seed;
  std::mt19937_64 rng(seed);
  BinaryWord w(static_cast<std::size_t>(n), 0);
  for (std::uint64_t k = 0; k < samples; ++k) {
    std::uint64_t bits = 0;
    for (int i = 0; i < n; ++i) {
      if (i % 64 == 0) bits = rng();
      w.set(static_cast<std::size_t>(i), static_cast<Symbol>(bits & 1U));
      bits >>= 1;
    }
    stats.sum += critical_prefix(pnf(w)).length;
    ++stats.count;
  }
  return stats;
}

CrStats pnf_cr_exhaustive(int n, const ExhaustiveLimits& limits) {
  require_within_cap(n, limits);
  if (n < 1) throw std::invalid_argument("length must be at least 1");
  CrStats stats;
  stats.n = n;
  stats.population = Population::kAllPnf;
  stats.sum = scan_all_words<std::uint64_t>(n, limits.threads, [](WordView w, std::uint64_t& acc) {
    acc += critical_prefix(pnf(w)).length;
  });
  stats.count = std::uint64_t{1} << n;
  return stats;
}

std::vector<BinaryWord> equivalence_class(WordView w, const ExhaustiveLimits& limits) {
  const int n = static_cast<int>(w.size());
  require_within_cap(n, limits);
  if (!is_prefix_normal(w)) throw std::invalid_argument(to_string(w) + " is not prefix normal");
  const MaxOnesTable target = max_ones(w);
  std::vector<BinaryWord> out;
  const std::uint64_t total = std::uint64_t{1} << n;
  for (std::uint64_t m = total; m-- > 0;) {
    BinaryWord v = BinaryWord::from_mask(m, static_cast<std::size_t>(n));
    // Same maximum-ones function <=> same prefix normal form.
    if (max_ones(v) == target) out.push_back(std::move(v));
  }
  return out;
}

std::string format_fixed_half_even(std::uint64_t num, std::uint64_t den, int digits) {
  if (den == 0) throw std::invalid_argument("zero denominator");
  std::uint64_t scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // num * scale fits comfortably for the ranges used here (num < 2^40).
  const unsigned __int128 scaled = static_cast<unsigned __int128>(num) * scale;
  auto q = static_cast<std::uint64_t>(scaled / den);
  const auto r = static_cast<std::uint64_t>(scaled % den);
  const unsigned __int128 twice = static_cast<unsigned __int128>(r) * 2;
  if (twice > den || (twice == den && (q % 2 == 1))) ++q;
  std::string text = std::to_string(q / scale);
  if (digits > 0) {
    std::string frac = std::to_string(q % scale);
    text += '.' + std::string(static_cast<std::size_t>(digits) - frac.size(), '0') + frac;
  }
  return text;
}

double RatioReport::ratio() const noexcept {
  return static_cast<double>(n) * static_cast<double>(survivors) / std::ldexp(1.0, n);
}

std::string RatioReport::ratio_text() const {
  return format_fixed_half_even(static_cast<std::uint64_t>(n) * survivors, std::uint64_t{1} << n, 3);
}

RatioReport rejection_ratio(int n, RejectionRule rule, const ExhaustiveLimits& limits) {
  require_within_cap(n, limits);
  if (n < 1) throw std::invalid_argument("length must be at least 1");
  RatioReport report;
  report.n = n;
  report.rule = rule;
  report.rejected = scan_all_words<std::uint64_t>(n, limits.threads, [rule](WordView w, std::uint64_t& acc) {
    thread_local RunLengthBlocks blocks;
    run_length_blocks(w, blocks);
    acc += phase_one_rejects(blocks, rule);
  });
  report.survivors = (std::uint64_t{1} << n) - report.rejected;
  return report;
}

// ---------------------------------------------------------------------------
// Cost instrumentation

GenerationCost measure_generation(int n) {
  GenerationCost cost;
  cost.n = n;
  PrefixNormalGenerator<OpCounters> gen(n);
  std::uint64_t words = 0;
  std::uint64_t cr_sum = 0;
  const auto t0 = std::chrono::steady_clock::now();
  gen.generate_all([&](WordView w) {
    ++words;
    cr_sum += critical_prefix(w).length;
  });
  const auto t1 = std::chrono::steady_clock::now();
  cost.seconds = std::chrono::duration<double>(t1 - t0).count();
  cost.words = words;
  cost.cr_sum = cr_sum;
  cost.member_calls = gen.counters().member_calls;
  cost.symbol_reads = gen.counters().reads;
  cost.swaps = gen.counters().swap_count;
  return cost;
}

double pnw_deficit(int n, std::uint64_t pnw) {
  return static_cast<double>(n) - std::log2(static_cast<double>(pnw));
}

const char* to_string(Population p) noexcept {
  switch (p) {
    case Population::kAllWords: return "all-words";
    case Population::kPrefixNormal: return "prefix-normal";
    case Population::kRandomPnf: return "pnf-of-random";
    case Population::kAllPnf: return "pnf-of-all";
  }
  return "?";
}

const char* to_string(RejectionRule r) noexcept {
  switch (r) {
    case RejectionRule::kLongestRun: return "trivial";
    case RejectionRule::kCombined: return "combined";
  }
  return "?";
}

}  // namespace pnw
