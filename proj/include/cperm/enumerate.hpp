#pragma once

#include <array>
#include <cstdint>
#include <limits>
#include <string>
#include <vector>

#include "cperm/colored_permutation.hpp"
#include "cperm/restriction.hpp"

namespace cperm {

enum class FamilyKind { kSym, kB, kD, kG, kRestrictedG, kTildeB };

/// Which set of colored permutations to walk.
struct FamilySpec {
  FamilyKind kind = FamilyKind::kSym;
  int r = 1;
  int n = 0;
  RestrictionTuple restriction;  // kRestrictedG, kTildeB
  int tilde_k = 0;               // kTildeB, 1-based

  static FamilySpec symmetric(int n);
  static FamilySpec hyperoctahedral(int n);
  static FamilySpec even_signed(int n);
  static FamilySpec colored(int r, int n);
  static FamilySpec restricted(const RestrictionTuple& s);
  static FamilySpec tilde(const TildeRestriction& s);

  /// Throws std::invalid_argument on inconsistent fields.
  void validate() const;
  std::string describe() const;
};

std::uint64_t factorial(int n);

/// Exact number of elements enumerate() yields.
std::uint64_t family_size(const FamilySpec& spec);

/// The enumeration splits on the lexicographic rank of sigma, in [0, n!).
inline std::uint64_t rank_space(const FamilySpec& spec) { return factorial(spec.n); }

/// Letters of the sigma with lexicographic rank `rank` among permutations of 1..n.
void unrank_sigma(int n, std::uint64_t rank, std::uint8_t* out);

namespace detail {

struct ColorLists {
  std::array<std::array<std::uint8_t, kMaxColors>, kMaxLetters> values{};
  std::array<int, kMaxLetters> counts{};
  bool empty = false;
};

ColorLists color_lists(const FamilySpec& spec);

}  // namespace detail

/// Visits every element whose sigma has rank in [begin, end), in
/// lexicographic (sigma, z) order: sigma outer, colors as an odometer with
/// the last position fastest.
template <class Visit>
void enumerate_range(const FamilySpec& spec, std::uint64_t begin, std::uint64_t end, Visit&& visit) {
  const int n = spec.n;
  const detail::ColorLists lists = detail::color_lists(spec);
  if (lists.empty || begin >= end) return;

  ColoredPermutation p;
  detail::Access::reset(p, spec.r, n);
  std::uint8_t* letters = detail::Access::letters(p);
  std::uint8_t* colors = detail::Access::colors(p);
  unrank_sigma(n, begin, letters);

  const bool even_neg = spec.kind == FamilyKind::kD;
  const int odometer_len = even_neg && n > 0 ? n - 1 : n;
  const int tilde_pos = spec.kind == FamilyKind::kTildeB ? spec.tilde_k - 1 : -1;
  std::array<int, kMaxLetters> idx{};

  for (std::uint64_t rank = begin; rank < end; ++rank) {
    if (tilde_pos < 0 || letters[tilde_pos] == n) {
      for (int i = 0; i < n; ++i) {
        idx[i] = 0;
        colors[i] = lists.values[i][0];
      }
      for (;;) {
        if (even_neg && n > 0) {
          int parity = 0;
          for (int i = 0; i < n - 1; ++i) parity ^= colors[i];
          colors[n - 1] = static_cast<std::uint8_t>(parity);
        }
        visit(static_cast<const ColoredPermutation&>(p));
        int i = odometer_len - 1;
        while (i >= 0) {
          if (++idx[i] < lists.counts[i]) {
            colors[i] = lists.values[i][idx[i]];
            break;
          }
          idx[i] = 0;
          colors[i] = lists.values[i][0];
          --i;
        }
        if (i < 0) break;
      }
    }
    // next sigma in lex order
    int j = n - 2;
    while (j >= 0 && letters[j] > letters[j + 1]) --j;
    if (j < 0) break;
    int l = n - 1;
    while (letters[l] < letters[j]) --l;
    std::swap(letters[j], letters[l]);
    for (int a = j + 1, b = n - 1; a < b; ++a, --b) std::swap(letters[a], letters[b]);
  }
}

template <class Visit>
void enumerate(const FamilySpec& spec, Visit&& visit) {
  spec.validate();
  enumerate_range(spec, 0, rank_space(spec), visit);
}

/// Materializes up to `limit` elements.
std::vector<ColoredPermutation> collect(const FamilySpec& spec,
                                        std::size_t limit = std::numeric_limits<std::size_t>::max());

}  // namespace cperm
