#include "pnw/bubble.hpp"

#include <optional>
#include <stdexcept>

namespace pnw {

std::vector<std::string> Listing::strings() const {
  std::vector<std::string> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.word.to_string());
  return out;
}

namespace {

void require_fixed_weight(const WordSet& language, int n, int d) {
  for (const BinaryWord& w : language) {
    if (static_cast<int>(w.size()) != n || static_cast<int>(w.weight()) != d) {
      throw std::invalid_argument("word " + w.to_string() + " is not of length " +
                                  std::to_string(n) + " and weight " + std::to_string(d));
    }
  }
}

}  // namespace

bool is_first01_bubble(const WordSet& language, int n, int d) {
  require_fixed_weight(language, n, d);
  for (const BinaryWord& w : language) {
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (w[i] == 0 && w[i + 1] == 1) {
        BinaryWord image = w;
        image.swap(i, i + 1);
        if (!language.contains(image)) return false;
        break;
      }
    }
  }
  return true;
}

bool check_tree_closure(const WordSet& language, int n, int d) {
  require_fixed_weight(language, n, d);
  if (language.empty()) return true;
  // Explicit traversal: every node carries copies of its parent and its left
  // sibling, computed from the tree shape alone.
  bool closed = true;
  auto rec = [&](auto& self, const BinaryWord& node, int s, int t,
                 const std::optional<BinaryWord>& parent,
                 const std::optional<BinaryWord>& left) -> void {
    if (!closed) return;
    if (language.contains(node)) {
      if (parent && !language.contains(*parent)) closed = false;
      if (left && !language.contains(*left)) closed = false;
    }
    if (s == 0 || t == 0) return;
    std::optional<BinaryWord> previous;
    for (int i = 1; i <= t; ++i) {
      BinaryWord child = node;
      child.swap(static_cast<std::size_t>(s - 1), static_cast<std::size_t>(s + i - 1));
      self(self, child, s - 1, i, std::optional<BinaryWord>(node), previous);
      previous = std::move(child);
    }
  };
  rec(rec, BinaryWord::block(static_cast<std::size_t>(d), static_cast<std::size_t>(n - d)), d,
      n - d, std::nullopt, std::nullopt);
  return closed;
}

}  // namespace pnw
