#include "pnw/word.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace pnw {

BinaryWord::BinaryWord(std::size_t n, Symbol fill) : bits_(n, fill) {}

BinaryWord::BinaryWord(WordView view) : bits_(view.begin(), view.end()) {}

BinaryWord::BinaryWord(std::initializer_list<int> bits) {
  bits_.reserve(bits.size());
  for (int b : bits) {
    if (b != 0 && b != 1) throw std::invalid_argument("symbol must be 0 or 1");
    bits_.push_back(static_cast<Symbol>(b));
  }
}

BinaryWord BinaryWord::parse(std::string_view text) {
  if (!text.empty() && text.back() == '\n') text.remove_suffix(1);
  if (!text.empty() && text.back() == '\r') text.remove_suffix(1);
  BinaryWord w;
  w.bits_.reserve(text.size());
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("invalid symbol '" + std::string(1, c) +
                                  "' in word (expected '0' or '1')");
    }
    w.bits_.push_back(static_cast<Symbol>(c - '0'));
  }
  return w;
}

BinaryWord BinaryWord::block(std::size_t ones, std::size_t zeros) {
  BinaryWord w(ones + zeros, 0);
  std::fill_n(w.bits_.begin(), ones, Symbol{1});
  return w;
}

BinaryWord BinaryWord::from_mask(std::uint64_t mask, std::size_t n) {
  assert(n <= 64);
  BinaryWord w(n, 0);
  for (std::size_t i = 0; i < n; ++i) {
    w.bits_[i] = static_cast<Symbol>((mask >> (n - 1 - i)) & 1U);
  }
  return w;
}

std::size_t BinaryWord::weight() const noexcept { return pnw::weight(bits_); }

std::string BinaryWord::to_string() const { return pnw::to_string(bits_); }

std::uint64_t BinaryWord::to_mask() const noexcept {
  assert(bits_.size() <= 64);
  std::uint64_t m = 0;
  for (Symbol b : bits_) m = (m << 1) | b;
  return m;
}

std::string to_string(WordView w) {
  std::string s(w.size(), '0');
  for (std::size_t i = 0; i < w.size(); ++i) s[i] = static_cast<char>('0' + w[i]);
  return s;
}

std::size_t weight(WordView w) noexcept {
  return static_cast<std::size_t>(std::count(w.begin(), w.end(), Symbol{1}));
}

}  // namespace pnw

std::size_t std::hash<pnw::BinaryWord>::operator()(const pnw::BinaryWord& w) const noexcept {
  // FNV-1a over the symbols, with the length folded in.
  std::size_t h = 1469598103934665603ULL ^ w.size();
  for (std::size_t i = 0; i < w.size(); ++i) {
    h ^= w[i];
    h *= 1099511628211ULL;
  }
  return h;
}
