#include "pnw/cli.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "pnw/analysis.hpp"
#include "pnw/membership.hpp"
#include "pnw/pn_generator.hpp"
#include "pnw/tables.hpp"

namespace pnw::cli {
namespace {

/// Invalid input that CLI11 itself cannot detect.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string subcommand;
  int n = 0;
  std::optional<int> weight;
  std::string order = "coolex";
  std::string algo;
  bool cyclic = false;
  bool from_stdin = false;
  std::string closeness = "strict";
  std::string out_path;
  std::string word;
  std::string stat;
  std::string mode = "combined";
  std::uint64_t seed = 1;
  std::uint64_t samples = 1000;
  int cap = 20;
  int threads = 1;
  std::optional<int> n_min;
  std::optional<int> n_max;
  bool csv = false;
};

void require_n(const Config& cfg) {
  if (cfg.n < 1) throw UsageError("--n must be at least 1");
}

BinaryWord parse_word(const std::string& text) {
  try {
    return BinaryWord::parse(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

ExhaustiveLimits limits_of(const Config& cfg) { return {cfg.cap, cfg.threads}; }

void require_cap(const Config& cfg, int n) {
  if (n > cfg.cap) {
    throw UsageError("n = " + std::to_string(n) + " exceeds the exhaustive cap " +
                     std::to_string(cfg.cap) + " (raise it with --cap)");
  }
}

class LineWriter {
 public:
  explicit LineWriter(std::ostream& out) : out_(out) { buf_.reserve(1 << 16); }
  ~LineWriter() { flush(); }
  void operator()(WordView w) {
    for (Symbol s : w) buf_.push_back(static_cast<char>('0' + s));
    buf_.push_back('\n');
    if (buf_.size() >= (1 << 16)) flush();
  }
  void flush() {
    out_.write(buf_.data(), static_cast<std::streamsize>(buf_.size()));
    buf_.clear();
  }

 private:
  std::ostream& out_;
  std::string buf_;
};

int cmd_generate(const Config& cfg, std::ostream& out) {
  require_n(cfg);
  if (cfg.weight && (*cfg.weight < 0 || *cfg.weight > cfg.n)) {
    throw UsageError("--weight must satisfy 0 <= d <= n");
  }
  if (cfg.weight && cfg.cyclic) throw UsageError("--cyclic lists all weights; drop --weight");
  const VisitOrder order = cfg.order == "visit-first" ? VisitOrder::kVisitFirst : VisitOrder::kCoolLex;
  LineWriter writer(out);
  if (cfg.algo == "simple") {
    if (cfg.cyclic) throw UsageError("--cyclic requires --algo bubble");
    simple_generate_pn(cfg.n, [&](WordView w) {
      if (!cfg.weight || static_cast<int>(weight(w)) == *cfg.weight) writer(w);
    });
    return kOk;
  }
  PrefixNormalGenerator<> gen(cfg.n, order);
  if (cfg.weight) {
    gen.generate_weight(*cfg.weight, writer);
  } else if (cfg.cyclic) {
    gen.generate_all_cyclic(writer);
  } else {
    gen.generate_all(writer);
  }
  return kOk;
}

int cmd_count(const Config& cfg, std::ostream& out) {
  require_n(cfg);
  out << count_pnw(cfg.n, cfg.threads) << '\n';
  return kOk;
}

int cmd_member(const Config& cfg, std::ostream& out) {
  const BinaryWord w = parse_word(cfg.word);
  const bool member = cfg.algo == "two-phase" ? member_two_phase(w) : is_prefix_normal(w);
  out << (member ? "true" : "false") << '\n';
  return kOk;
}

int cmd_pnf(const Config& cfg, std::ostream& out) {
  out << pnf(parse_word(cfg.word)).to_string() << '\n';
  return kOk;
}

int cmd_class(const Config& cfg, std::ostream& out) {
  const BinaryWord w = parse_word(cfg.word);
  require_cap(cfg, static_cast<int>(w.size()));
  if (!is_prefix_normal(w)) throw UsageError(w.to_string() + " is not prefix normal");
  for (const BinaryWord& v : equivalence_class(w, limits_of(cfg))) out << v.to_string() << '\n';
  return kOk;
}

int cmd_verify_gray(const Config& cfg, std::istream& in, std::ostream& out) {
  const Closeness closeness = cfg.closeness == "two-ops" ? Closeness::kTwoOperations : Closeness::kStrict;
  GrayVerifier verifier(closeness);
  std::uint64_t words = 0;
  if (cfg.from_stdin) {
    std::string line;
    while (std::getline(in, line)) {
      if (line.empty() || line == "\r") continue;
      verifier(parse_word(line));
      ++words;
    }
  } else {
    require_n(cfg);
    PrefixNormalGenerator<> gen(cfg.n);
    auto sink = [&](WordView w) {
      verifier(w);
      ++words;
    };
    if (cfg.cyclic) {
      gen.generate_all_cyclic(sink);
    } else {
      gen.generate_all(sink);
    }
  }
  const GrayReport report = verifier.finish(cfg.cyclic);
  out << "words=" << words << '\n'
      << "pairs=" << report.pairs_checked << '\n'
      << "closeness=" << cfg.closeness << '\n'
      << "violations=" << report.violation_count << '\n';
  for (const GrayViolation& v : report.violations) {
    out << "violation index=" << v.index << " word=" << v.word.to_string()
        << " next=" << v.next.to_string() << " p=" << v.p << " q=" << v.q << '\n';
  }
  return report.ok() ? kOk : kVerificationFailed;
}

std::pair<int, int> n_range(const Config& cfg) {
  require_n(cfg);
  const int lo = cfg.n_min.value_or(cfg.n);
  if (lo < 1 || lo > cfg.n) throw UsageError("--n-min must lie in [1, n]");
  return {lo, cfg.n};
}

int stats_cr(const Config& cfg, std::ostream& out) {
  const auto [lo, hi] = n_range(cfg);
  require_cap(cfg, hi);
  int status = kOk;
  for (int n = lo; n <= hi; ++n) {
    const std::uint64_t c = critical_prefix_sum(n, limits_of(cfg));
    const std::uint64_t closed = 3 * (std::uint64_t{1} << n) - static_cast<std::uint64_t>(n + 3);
    const CrStats pn = avg_cr_pn(n);
    out << "n=" << n << " population=all-words sum=" << c << " closed_form=" << closed
        << " match=" << (c == closed ? "true" : "false") << '\n';
    out << "n=" << n << " population=" << to_string(pn.population) << " sum=" << pn.sum
        << " count=" << pn.count << " mean=" << std::fixed << std::setprecision(6) << pn.mean()
        << std::defaultfloat << '\n';
    if (c != closed) status = kVerificationFailed;
  }
  return status;
}

int stats_ratio(const Config& cfg, std::ostream& out) {
  const auto [lo, hi] = n_range(cfg);
  require_cap(cfg, hi);
  const RejectionRule rule = cfg.mode == "trivial" ? RejectionRule::kLongestRun : RejectionRule::kCombined;
  if (cfg.csv) out << "n,X_n,Y_n,ratio\n";
  for (int n = lo; n <= hi; ++n) {
    const RatioReport r = rejection_ratio(n, rule, limits_of(cfg));
    if (cfg.csv) {
      out << n << ',' << r.rejected << ',' << r.survivors << ',' << r.ratio_text() << '\n';
    } else {
      out << "n=" << n << " mode=" << to_string(rule) << " X_n=" << r.rejected
          << " Y_n=" << r.survivors << " ratio=" << r.ratio_text() << '\n';
    }
  }
  return kOk;
}

int stats_deficit(const Config& cfg, std::ostream& out) {
  const auto [lo, hi] = n_range(cfg);
  for (int n = lo; n <= hi; ++n) {
    const std::uint64_t count = count_pnw(n, cfg.threads);
    out << "n=" << n << " pnw=" << count << " deficit=" << std::fixed << std::setprecision(6)
        << pnw_deficit(n, count) << std::defaultfloat << '\n';
  }
  return kOk;
}

int stats_pnf_cr(const Config& cfg, std::ostream& out) {
  require_n(cfg);
  const CrStats s = pnf_cr_sample(cfg.n, cfg.samples, cfg.seed);
  out << "n=" << s.n << " population=" << to_string(s.population) << " prng=" << s.prng
      << " seed=" << s.seed << " samples=" << s.count << " sum=" << s.sum << " mean=" << std::fixed
      << std::setprecision(6) << s.mean() << std::defaultfloat << '\n';
  return kOk;
}

int cmd_stats(const Config& cfg, std::ostream& out) {
  if (cfg.samples == 0) throw UsageError("--samples must be positive");
  if (cfg.stat == "cr") return stats_cr(cfg, out);
  if (cfg.stat == "ratio") return stats_ratio(cfg, out);
  if (cfg.stat == "deficit") return stats_deficit(cfg, out);
  return stats_pnf_cr(cfg, out);
}

int cmd_bench(const Config& cfg, std::ostream& out) {
  const int lo = cfg.n_min.value_or(1);
  const int hi = cfg.n_max.value_or(lo);
  if (lo < 1 || hi < lo) throw UsageError("need 1 <= --n-min <= --n-max");
  out << "# generation time excludes output\n";
  out << "n,words,seconds,member_calls_per_word,reads_per_word,swaps_per_word,mean_cr\n";
  for (int n = lo; n <= hi; ++n) {
    const GenerationCost c = measure_generation(n);
    out << n << ',' << c.words << ',' << std::fixed << std::setprecision(6) << c.seconds << ','
        << c.calls_per_word() << ',' << c.reads_per_word() << ','
        << static_cast<double>(c.swaps) / static_cast<double>(c.words) << ',' << c.mean_cr()
        << std::defaultfloat << '\n';
  }
  return kOk;
}

}  // namespace

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"Prefix normal words: Gray code generation, membership, statistics"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--out", cfg.out_path, "Write results to PATH instead of standard output");

  auto* gen = app.add_subcommand("generate", "List prefix normal words, one per line");
  gen->add_option("--n", cfg.n, "Word length")->required();
  gen->add_option("--weight", cfg.weight, "Restrict to one weight");
  gen->add_flag("--cyclic", cfg.cyclic, "Odd weights ascending, then even weights descending");
  gen->add_option("--order", cfg.order, "Visit order")->check(CLI::IsMember({"coolex", "visit-first"}));
  gen->add_option("--algo", cfg.algo, "Generator")->check(CLI::IsMember({"bubble", "simple"}))->default_str("bubble");

  auto* count = app.add_subcommand("count", "Number of prefix normal words of length n");
  count->add_option("--n", cfg.n, "Word length")->required();
  count->add_option("--threads", cfg.threads, "Worker threads")->check(CLI::Range(1, 64));

  auto* member = app.add_subcommand("member", "Is WORD prefix normal?");
  member->add_option("word", cfg.word, "Binary word")->required();
  member->add_option("--algo", cfg.algo, "Membership tester")
      ->check(CLI::IsMember({"quadratic", "two-phase"}))->default_str("quadratic");

  auto* pnf_cmd = app.add_subcommand("pnf", "Prefix normal form of WORD");
  pnf_cmd->add_option("word", cfg.word, "Binary word")->required();

  auto* cls = app.add_subcommand("class", "All words whose prefix normal form is WORD");
  cls->add_option("word", cfg.word, "Prefix normal word")->required();
  cls->add_option("--cap", cfg.cap, "Largest length for exhaustive scans");

  auto* verify = app.add_subcommand("verify-gray", "Check the Gray code closeness of a listing");
  verify->add_option("--n", cfg.n, "Word length (generated internally)");
  verify->add_flag("--cyclic", cfg.cyclic, "Cyclic listing; also check the wrap-around pair");
  verify->add_flag("--stdin", cfg.from_stdin, "Read the listing from standard input");
  verify->add_option("--closeness", cfg.closeness, "Closeness relation")
      ->check(CLI::IsMember({"strict", "two-ops"}));

  auto* stats = app.add_subcommand("stats", "Exhaustive and sampled statistics");
  stats->add_option("kind", cfg.stat, "cr | ratio | deficit | pnf-cr")
      ->required()->check(CLI::IsMember({"cr", "ratio", "deficit", "pnf-cr"}));
  stats->add_option("--n", cfg.n, "Word length (upper end of the range)")->required();
  stats->add_option("--n-min", cfg.n_min, "Lower end of the range");
  stats->add_option("--mode", cfg.mode, "Rejection rule")->check(CLI::IsMember({"trivial", "combined"}));
  stats->add_option("--seed", cfg.seed, "PRNG seed (mt19937_64)");
  stats->add_option("--samples", cfg.samples, "Sample count for pnf-cr");
  stats->add_option("--cap", cfg.cap, "Largest length for exhaustive scans");
  stats->add_option("--threads", cfg.threads, "Partitions for exhaustive scans")->check(CLI::Range(1, 64));
  stats->add_flag("--csv", cfg.csv, "Comma-separated table (ratio only)");

  auto* bench = app.add_subcommand("bench", "Instrumented generation cost per length");
  bench->add_option("--n-min", cfg.n_min, "Smallest length")->required();
  bench->add_option("--n-max", cfg.n_max, "Largest length")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  if (verify->parsed() && !cfg.from_stdin && cfg.n == 0) {
    err << "error: verify-gray needs --n or --stdin\n";
    return kUsage;
  }

  std::ofstream file;
  std::ostream* sink = &out;
  if (!cfg.out_path.empty()) {
    file.open(cfg.out_path);
    if (!file) {
      err << "error: cannot open " << cfg.out_path << '\n';
      return kUsage;
    }
    sink = &file;
  }

  try {
    if (gen->parsed()) return cmd_generate(cfg, *sink);
    if (count->parsed()) return cmd_count(cfg, *sink);
    if (member->parsed()) return cmd_member(cfg, *sink);
    if (pnf_cmd->parsed()) return cmd_pnf(cfg, *sink);
    if (cls->parsed()) return cmd_class(cfg, *sink);
    if (verify->parsed()) return cmd_verify_gray(cfg, in, *sink);
    if (stats->parsed()) return cmd_stats(cfg, *sink);
    if (bench->parsed()) return cmd_bench(cfg, *sink);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::out_of_range& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace pnw::cli
