#pragma once

// Cool-lex generation of fixed-weight bubble languages.
//
// Every word of length n and weight d is a node of the computation tree
// rooted at 1^d 0^(n-d); the i-th child of 1^s 0^t g is 1^(s-1) 0^i 1 0^(t-i) g.
// A (first-01) bubble language restricted to one weight is a subtree closed
// under parents and left siblings, so a node's members among its children
// are exactly children 1..j for some j, the bubble upper bound. An oracle
// supplies j; the walker does the rest.

#include <algorithm>
#include <concepts>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <unordered_set>
#include <utility>
#include <vector>

#include "pnw/membership.hpp"
#include "pnw/word.hpp"

namespace pnw {

enum class VisitOrder {
  kCoolLex,     // children before parent (post-order)
  kVisitFirst,  // parent before children (pre-order)
};

/// The single mutable word of a generation run, followed by n padding zeros
/// so oracles may read up to index 2n-1 without bounds checks.
class WorkingWord {
 public:
  WorkingWord(std::size_t n, std::size_t d) : n_(n), buf_(2 * n, 0) { reset(d); }
  explicit WorkingWord(WordView w) : n_(w.size()), buf_(2 * w.size(), 0) {
    std::copy(w.begin(), w.end(), buf_.begin());
  }

  void reset(std::size_t d) {
    if (d > n_) throw std::invalid_argument("weight exceeds length");
    std::fill(buf_.begin(), buf_.end(), Symbol{0});
    std::fill_n(buf_.begin(), d, Symbol{1});
  }

  std::size_t length() const noexcept { return n_; }
  Symbol operator[](std::size_t i) const noexcept { return buf_[i]; }
  WordView word() const noexcept { return WordView(buf_.data(), n_); }
  WordView padded() const noexcept { return buf_; }
  void swap(std::size_t i, std::size_t j) noexcept { std::swap(buf_[i], buf_[j]); }

 private:
  std::size_t n_;
  std::vector<Symbol> buf_;
};

template <class V>
concept WordVisitor = std::invocable<V&, WordView>;

/// bound(word, s, t) returns the bubble upper bound of the current node
/// 1^s 0^t g, with s, t >= 1. It must leave `word` unchanged.
template <class O>
concept BubbleOracle = requires(O& o, const WorkingWord& w, int s, int t) {
  { o.bound(w, s, t) } -> std::convertible_to<int>;
};

/// An oracle that keeps state along the current root-to-node path. descend is
/// called after the walker has moved into child i of node (s, ·); ascend with
/// the returned snapshot before it moves back.
template <class O>
concept IncrementalOracle = BubbleOracle<O> && requires(O& o, const WorkingWord& w, int s, int i) {
  typename O::Snapshot;
  { o.descend(w, s, i) } -> std::same_as<typename O::Snapshot>;
  o.ascend(w, s, i, std::declval<const typename O::Snapshot&>());
};

namespace detail {

template <class Oracle, class Visitor>
struct BubbleWalk {
  Oracle& oracle;
  Visitor& visit;
  WorkingWord& word;
  VisitOrder order;

  void run(int s, int t) {
    if (order == VisitOrder::kVisitFirst) visit(word.word());
    if (s > 0 && t > 0) {
      const int j = oracle.bound(std::as_const(word), s, t);
      for (int i = 1; i <= j; ++i) {
        // 1-based positions s and s+i.
        word.swap(s - 1, s + i - 1);
        if constexpr (IncrementalOracle<Oracle>) {
          const auto snapshot = oracle.descend(std::as_const(word), s, i);
          run(s - 1, i);
          oracle.ascend(std::as_const(word), s, i, snapshot);
        } else {
          run(s - 1, i);
        }
        word.swap(s - 1, s + i - 1);
      }
    }
    if (order == VisitOrder::kCoolLex) visit(word.word());
  }
};

}  // namespace detail

/// Visits every member of the language with length word.length() and weight
/// d, in cool-lex order by default. `word` must hold 1^d 0^(n-d) and is
/// restored to it on return. If the oracle has root_member(word) and it
/// returns false, nothing is visited; otherwise the root is assumed to be a
/// member. Visits are serialized: one call at a time, in listing order.
template <BubbleOracle Oracle, WordVisitor Visitor>
void gen_bubble(Oracle& oracle, WorkingWord& word, int d, Visitor&& visit,
                VisitOrder order = VisitOrder::kCoolLex) {
  const int n = static_cast<int>(word.length());
  if (d < 0 || d > n) throw std::invalid_argument("need 0 <= d <= n");
  if constexpr (requires { oracle.root_member(std::as_const(word)); }) {
    if (!oracle.root_member(std::as_const(word))) return;
  }
  if constexpr (requires { oracle.start(std::as_const(word), n, d); }) {
    oracle.start(std::as_const(word), n, d);
  }
  detail::BubbleWalk<Oracle, std::remove_reference_t<Visitor>> walk{oracle, visit, word, order};
  walk.run(d, n - d);
}

template <BubbleOracle Oracle, WordVisitor Visitor>
void gen_bubble(Oracle& oracle, int n, int d, Visitor&& visit,
                VisitOrder order = VisitOrder::kCoolLex) {
  if (n < 0 || d < 0 || d > n) throw std::invalid_argument("need 0 <= d <= n");
  WorkingWord word(static_cast<std::size_t>(n), static_cast<std::size_t>(d));
  gen_bubble(oracle, word, d, visit, order);
}

/// Accepts every child: the full computation tree.
struct FullTreeOracle {
  int bound(const WorkingWord&, int, int t) const noexcept { return t; }
};

/// Bubble upper bound by probing children left to right with a membership
/// predicate; at most j+1 predicate calls.
template <class Member>
class NaiveOracle {
 public:
  explicit NaiveOracle(Member member) : member_(std::move(member)) {}

  bool root_member(const WorkingWord& w) { return member_(w.word()); }

  int bound(const WorkingWord& w, int s, int t) {
    scratch_ = BinaryWord(w.word());
    int j = 0;
    while (j < t) {
      // Slide the moved 1 one step right: child j -> child j+1.
      scratch_.swap(static_cast<std::size_t>(s - 1 + j), static_cast<std::size_t>(s + j));
      ++calls_;
      if (!member_(scratch_.view())) break;
      ++j;
    }
    return j;
  }

  std::uint64_t member_calls() const noexcept { return calls_; }

 private:
  Member member_;
  BinaryWord scratch_;
  std::uint64_t calls_ = 0;
};

/// Bubble upper bound of a single node, which must belong to the language.
template <class Member>
int naive_oracle(Member&& member, WordView node) {
  const CriticalPrefix cp = critical_prefix(node);
  if (cp.ones == 0 || cp.zeros == 0) return 0;
  const WorkingWord w(node);
  NaiveOracle<std::remove_cvref_t<Member>> oracle(std::forward<Member>(member));
  return oracle.bound(w, static_cast<int>(cp.ones), static_cast<int>(cp.zeros));
}

/// Post-order recursive swap over all words of length n and weight d,
/// independent of the oracle machinery above.
template <WordVisitor Visitor>
void recursive_swap_all(int n, int d, Visitor&& visit) {
  if (n < 0 || d < 0 || d > n) throw std::invalid_argument("need 0 <= d <= n");
  BinaryWord word = BinaryWord::block(static_cast<std::size_t>(d), static_cast<std::size_t>(n - d));
  auto rec = [&](auto& self, int s, int t) -> void {
    if (s > 0 && t > 0) {
      for (int i = 1; i <= t; ++i) {
        word.swap(static_cast<std::size_t>(s - 1), static_cast<std::size_t>(s + i - 1));
        self(self, s - 1, i);
        word.swap(static_cast<std::size_t>(s - 1), static_cast<std::size_t>(s + i - 1));
      }
    }
    visit(word.view());
  };
  rec(rec, d, n - d);
}

struct ListingEntry {
  BinaryWord word;
  std::size_t weight = 0;
  std::size_t index = 0;
};

/// Materialized listing; usable directly as a visitor.
class Listing {
 public:
  void operator()(WordView w) { entries_.push_back({BinaryWord(w), pnw::weight(w), entries_.size()}); }

  std::size_t size() const noexcept { return entries_.size(); }
  bool empty() const noexcept { return entries_.empty(); }
  const ListingEntry& operator[](std::size_t i) const noexcept { return entries_[i]; }
  auto begin() const noexcept { return entries_.begin(); }
  auto end() const noexcept { return entries_.end(); }
  std::vector<std::string> strings() const;

 private:
  std::vector<ListingEntry> entries_;
};

using WordSet = std::unordered_set<BinaryWord>;

/// Every member's first 01 turned into 10 is again a member. All members must
/// have length n and weight d (std::invalid_argument otherwise).
bool is_first01_bubble(const WordSet& language, int n, int d);

/// Walks the computation tree for (n, d) and checks that every member's
/// parent and left sibling are members. Same preconditions as above.
bool check_tree_closure(const WordSet& language, int n, int d);

}  // namespace pnw
