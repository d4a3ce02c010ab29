#pragma once

#include <bit>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace rposet {

/// Packed word over a two-letter alphabet. Bit j of `bits` holds the letter
/// at position j counted from the left; 0 is the first letter. Comparison is
/// lexicographic with a proper prefix ordered before its extensions.
template <char First, char Second>
struct Word {
  static constexpr std::uint32_t max_length = 64;

  std::uint32_t length = 0;
  std::uint64_t bits = 0;

  bool second_at(std::uint32_t j) const { return (bits >> j) & 1u; }
  char letter_at(std::uint32_t j) const { return second_at(j) ? Second : First; }

  std::string str() const {
    std::string s(length, First);
    for (std::uint32_t j = 0; j < length; ++j)
      if (second_at(j)) s[j] = Second;
    return s;
  }

  static Word parse(const std::string& s) {
    if (s.size() > max_length) throw std::length_error("word longer than 64 letters");
    Word w;
    w.length = static_cast<std::uint32_t>(s.size());
    for (std::uint32_t j = 0; j < w.length; ++j) {
      if (s[j] == Second) {
        w.bits |= std::uint64_t{1} << j;
      } else if (s[j] != First) {
        throw std::invalid_argument(std::string("foreign letter '") + s[j] + "' in word \"" + s + "\"");
      }
    }
    return w;
  }

  Word concat(const Word& o) const {
    if (length + o.length > max_length) throw std::length_error("word longer than 64 letters");
    return Word{length + o.length, bits | (o.bits << length)};
  }

  Word append(bool second) const {
    if (length + 1 > max_length) throw std::length_error("word longer than 64 letters");
    Word w{length + 1, bits};
    if (second) w.bits |= std::uint64_t{1} << length;
    return w;
  }

  bool operator==(const Word&) const = default;

  bool operator<(const Word& o) const {
    const std::uint32_t m = length < o.length ? length : o.length;
    for (std::uint32_t j = 0; j < m; ++j) {
      const bool a = second_at(j);
      const bool b = o.second_at(j);
      if (a != b) return b;
    }
    return length < o.length;
  }
};

using AbWord = Word<'a', 'b'>;
using CdWord = Word<'c', 'd'>;

inline std::uint32_t word_degree(const AbWord& w) { return w.length; }

/// c counts 1 toward the degree, d counts 2.
inline std::uint32_t word_degree(const CdWord& w) {
  return w.length + static_cast<std::uint32_t>(std::popcount(w.bits));
}

}  // namespace rposet
