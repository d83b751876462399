#pragma once

#include <utility>
#include <vector>

#include "cperm/colored_permutation.hpp"
#include "cperm/cyclotomic.hpp"

namespace cperm {

enum class CharacterForm {
  kLength,     // (-1)^{a(len_G - col)} w^{b col}
  kClassical,  // (-1)^{a inv(|p|)} w^{b col}
};

struct CharacterLabel {
  int a = 0;  // 0 or 1
  int b = 0;  // 0..r-1
  CharacterForm form = CharacterForm::kLength;
};

/// sign * w^omega_exp, omega_exp in [0, r).
struct CharacterValue {
  int sign = 1;
  int omega_exp = 0;

  friend bool operator==(const CharacterValue&, const CharacterValue&) = default;
};

CharacterValue character_value(const CharacterLabel& label, const ColoredPermutation& p);

/// Validated; throws if a or b is out of range for p.r().
CyclotomicInt chi(const CharacterLabel& label, const ColoredPermutation& p);

CyclotomicInt to_cyclotomic(int r, const CharacterValue& v);

/// For every length-form label (a, b), the classical labels naming the same
/// function on G_{r,n}. Entries are indexed by a * r + b.
std::vector<std::vector<std::pair<int, int>>> label_correspondence(int r, int n);

}  // namespace cperm
