#pragma once

// Published values the suite checks against.

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace pnw::reference {

/// Number of prefix normal words of length n = 1..12.
inline constexpr std::array<std::uint64_t, 12> kCounts = {2, 3, 5, 8, 14, 23, 41, 70, 125, 218, 395, 697};

/// Length-7 listing: weight 0..7, cool-lex within a weight.
inline const std::vector<std::string> kListing7 = {
    "0000000",
    "1000000",
    "1010000", "1001000", "1000100", "1000010", "1000001", "1100000",
    "1101000", "1010100", "1100100", "1010010", "1100010", "1010001", "1001001", "1100001", "1110000",
    "1101100", "1110100", "1101010", "1100110", "1110010", "1101001", "1010101", "1100101", "1100011",
    "1110001", "1111000",
    "1110110", "1111010", "1101101", "1110101", "1101011", "1110011", "1111001", "1111100",
    "1110111", "1111011", "1111101", "1111110",
    "1111111"};

struct ClassRow {
  std::string normal_form;
  std::vector<std::string> members;  // decreasing lexicographic order
};

/// Every prefix normal word of length 5 with the words mapping to it.
inline const std::vector<ClassRow> kClasses5 = {
    {"11111", {"11111"}},
    {"11110", {"11110", "01111"}},
    {"11101", {"11101", "10111"}},
    {"11100", {"11100", "01110", "00111"}},
    {"11011", {"11011"}},
    {"11010", {"11010", "10110", "01101", "01011"}},
    {"11001", {"11001", "10011"}},
    {"11000", {"11000", "01100", "00110", "00011"}},
    {"10101", {"10101"}},
    {"10100", {"10100", "01010", "00101"}},
    {"10010", {"10010", "01001"}},
    {"10001", {"10001"}},
    {"10000", {"10000", "01000", "00100", "00010", "00001"}},
    {"00000", {"00000"}},
};

struct RatioCell {
  int n;
  const char* trivial;
  const char* combined;
};

/// n * Y_n / 2^n for even n, to three decimals.
inline constexpr std::array<RatioCell, 8> kRatios = {{
    {10, "2.500", "2.168"},
    {12, "2.561", "2.142"},
    {14, "2.602", "2.121"},
    {16, "2.631", "2.106"},
    {18, "2.656", "2.093"},
    {20, "2.675", "2.083"},
    {22, "2.693", "2.075"},
    {24, "2.708", "2.067"},
}};

}  // namespace pnw::reference
