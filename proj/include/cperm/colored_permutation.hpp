#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cperm {

inline constexpr int kMaxLetters = 16;
inline constexpr int kMaxColors = 32;

namespace detail {
struct Access;
}

/// An element (sigma, z) of the wreath product Z_r wr S_n in window notation.
///
/// Colors are attached to window positions: position i holds letter
/// sigma_i with color z_i. For r = 2 a color of 1 renders the letter
/// negative. Positions are 0-based in this API; statistic sets (descent
/// sets, Neg, hat positions) are reported 1-based.
class ColoredPermutation {
 public:
  struct Unchecked {};

  /// The empty permutation with one color.
  ColoredPermutation() = default;

  /// Validates that sigma is a bijection of {1..n} and colors lie in Z_r.
  ColoredPermutation(int r, std::span<const int> sigma, std::span<const int> colors);

  /// Trusted construction for enumeration hot paths; no validation.
  ColoredPermutation(Unchecked, int r, int n, const std::uint8_t* letters,
                     const std::uint8_t* colors) noexcept
      : r_(static_cast<std::uint8_t>(r)), n_(static_cast<std::uint8_t>(n)) {
    for (int i = 0; i < n; ++i) {
      letters_[i] = letters[i];
      colors_[i] = colors[i];
    }
  }

  static ColoredPermutation identity(int r, int n);

  int r() const noexcept { return r_; }
  int size() const noexcept { return n_; }
  int letter(int i) const noexcept { return letters_[i]; }
  int color(int i) const noexcept { return colors_[i]; }

  /// Signed value of position i; only meaningful for r <= 2.
  int signed_value(int i) const noexcept {
    return colors_[i] != 0 ? -static_cast<int>(letters_[i]) : letters_[i];
  }

  std::span<const std::uint8_t> letters() const noexcept { return {letters_.data(), n_}; }
  std::span<const std::uint8_t> colors() const noexcept { return {colors_.data(), n_}; }

  /// 0-based position of letter v (1..n).
  int position_of(int v) const noexcept {
    for (int i = 0; i < n_; ++i) {
      if (letters_[i] == v) return i;
    }
    return -1;
  }

  friend bool operator==(const ColoredPermutation& a, const ColoredPermutation& b) noexcept {
    return a.r_ == b.r_ && a.n_ == b.n_ && a.letters_ == b.letters_ && a.colors_ == b.colors_;
  }

  /// Lexicographic by (sigma, z), the enumeration order.
  friend std::strong_ordering operator<=>(const ColoredPermutation& a,
                                          const ColoredPermutation& b) noexcept {
    if (auto c = a.r_ <=> b.r_; c != 0) return c;
    if (auto c = a.n_ <=> b.n_; c != 0) return c;
    if (auto c = a.letters_ <=> b.letters_; c != 0) return c;
    return a.colors_ <=> b.colors_;
  }

 private:
  friend struct detail::Access;

  std::uint8_t r_ = 1;
  std::uint8_t n_ = 0;
  std::array<std::uint8_t, kMaxLetters> letters_{};
  std::array<std::uint8_t, kMaxLetters> colors_{};
};

namespace detail {
// Raw storage access for enumerators that mutate a permutation in place.
struct Access {
  static std::uint8_t* letters(ColoredPermutation& p) noexcept { return p.letters_.data(); }
  static std::uint8_t* colors(ColoredPermutation& p) noexcept { return p.colors_.data(); }
  static void reset(ColoredPermutation& p, int r, int n) noexcept {
    p.r_ = static_cast<std::uint8_t>(r);
    p.n_ = static_cast<std::uint8_t>(n);
    p.letters_.fill(0);
    p.colors_.fill(0);
  }
};
}  // namespace detail

enum class WindowStyle {
  kBrackets,  // "5 1[1] 3 4[2]"
  kSigned,    // "-2 3 -5", r = 2 only
};

/// Parses space-separated tokens "d", "d[c]", or "-d" (r = 2 only).
ColoredPermutation parse_window(std::string_view text, int r);

std::string format_window(const ColoredPermutation& p, WindowStyle style = WindowStyle::kBrackets);

/// Group law of Z_r wr S_n: (sigma, z)(tau, w) = (sigma o tau, i -> z_{tau(i)} + w_i).
ColoredPermutation compose(const ColoredPermutation& p, const ColoredPermutation& q);

ColoredPermutation inverse(const ColoredPermutation& p);

enum class GeneratorSet {
  kColored,  // s_0 adds one to the color of position 1; s_i swaps positions i, i+1
  kTypeD,    // s_0' = (bar1, 2) replaces s_0; r = 2 only
};

/// Right multiplication p * s_i, i in {0..n-1}.
ColoredPermutation apply_generator(const ColoredPermutation& p, int i,
                                   GeneratorSet set = GeneratorSet::kColored);

/// Same letters with every color set to zero.
ColoredPermutation absolute(const ColoredPermutation& p);

std::vector<int> sigma_of(const ColoredPermutation& p);
std::vector<int> colors_of(const ColoredPermutation& p);

}  // namespace cperm
