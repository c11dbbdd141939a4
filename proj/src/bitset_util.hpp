#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <span>

namespace homlab::detail {

using Word = std::uint64_t;

inline std::size_t popcount(std::span<const Word> s) {
  std::size_t c = 0;
  for (Word w : s) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

inline bool none(std::span<const Word> s) {
  for (Word w : s)
    if (w) return false;
  return true;
}

/// Calls f(index) for every set bit, ascending. Stops early if f returns false.
template <class F>
bool for_each_bit(std::span<const Word> s, F&& f) {
  for (std::size_t w = 0; w < s.size(); ++w) {
    Word bits = s[w];
    while (bits) {
      const int b = std::countr_zero(bits);
      bits &= bits - 1;
      if (!f(static_cast<std::uint32_t>(w * 64 + static_cast<std::size_t>(b)))) return false;
    }
  }
  return true;
}

inline void set_bit(std::span<Word> s, std::size_t i) { s[i >> 6] |= Word{1} << (i & 63); }
inline void clear_bit(std::span<Word> s, std::size_t i) { s[i >> 6] &= ~(Word{1} << (i & 63)); }

}  // namespace homlab::detail
