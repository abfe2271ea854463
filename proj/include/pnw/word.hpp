#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace pnw {

/// A single binary symbol, always 0 or 1.
using Symbol = std::uint8_t;

/// Read-only view of a word. Generators hand these to visitors; the view is
/// only valid for the duration of the visit call.
using WordView = std::span<const Symbol>;

/// Finite word over {0,1}. Positions are 0-based in code; the usual 1-based
/// notation w_1..w_n maps to indices 0..n-1.
class BinaryWord {
 public:
  BinaryWord() = default;
  explicit BinaryWord(std::size_t n, Symbol fill = 0);
  explicit BinaryWord(WordView view);
  BinaryWord(std::initializer_list<int> bits);

  /// Parses a string of '0'/'1'. A single trailing newline is accepted.
  /// Throws std::invalid_argument on any other character.
  static BinaryWord parse(std::string_view text);

  /// 1^ones 0^zeros
  static BinaryWord block(std::size_t ones, std::size_t zeros);

  /// Low `n` bits of `mask`, most significant first.
  static BinaryWord from_mask(std::uint64_t mask, std::size_t n);

  std::size_t size() const noexcept { return bits_.size(); }
  bool empty() const noexcept { return bits_.empty(); }
  Symbol operator[](std::size_t i) const noexcept { return bits_[i]; }
  void set(std::size_t i, Symbol s) noexcept { bits_[i] = s; }
  void swap(std::size_t i, std::size_t j) noexcept { std::swap(bits_[i], bits_[j]); }
  void push_back(Symbol s) { bits_.push_back(s); }
  void pop_back() { bits_.pop_back(); }

  std::size_t weight() const noexcept;
  WordView view() const noexcept { return bits_; }
  operator WordView() const noexcept { return bits_; }

  std::string to_string() const;
  /// Inverse of from_mask; requires size() <= 64.
  std::uint64_t to_mask() const noexcept;

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;
  friend auto operator<=>(const BinaryWord&, const BinaryWord&) = default;

 private:
  std::vector<Symbol> bits_;
};

std::string to_string(WordView w);
std::size_t weight(WordView w) noexcept;

}  // namespace pnw

template <>
struct std::hash<pnw::BinaryWord> {
  std::size_t operator()(const pnw::BinaryWord& w) const noexcept;
};
