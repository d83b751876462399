#include "cperm/characters.hpp"

#include <stdexcept>

#include "cperm/enumerate.hpp"
#include "cperm/statistics.hpp"

namespace cperm {

CharacterValue character_value(const CharacterLabel& label, const ColoredPermutation& p) {
  const int r = p.r();
  const int c = fast::col(p);
  int parity = 0;
  if (label.a != 0) {
    parity = label.form == CharacterForm::kLength ? (fast::len_G(p) - c) & 1 : fast::inv_abs(p) & 1;
  }
  return {parity ? -1 : 1, static_cast<int>((static_cast<long long>(label.b) * c) % r)};
}

CyclotomicInt to_cyclotomic(int r, const CharacterValue& v) {
  CyclotomicInt w = omega_power(r, v.omega_exp);
  return v.sign < 0 ? -w : w;
}

CyclotomicInt chi(const CharacterLabel& label, const ColoredPermutation& p) {
  if (label.a != 0 && label.a != 1) throw std::invalid_argument("character parameter a must be 0 or 1");
  if (label.b < 0 || label.b >= p.r()) throw std::invalid_argument("character parameter b out of range");
  return to_cyclotomic(p.r(), character_value(label, p));
}

std::vector<std::vector<std::pair<int, int>>> label_correspondence(int r, int n) {
  const auto elems = collect(FamilySpec::colored(r, n));
  auto table = [&](CharacterForm form, int a, int b) {
    std::vector<CharacterValue> v;
    v.reserve(elems.size());
    for (const auto& p : elems) v.push_back(character_value({a, b, form}, p));
    return v;
  };
  std::vector<std::vector<std::pair<int, int>>> out(static_cast<std::size_t>(2 * r));
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < r; ++b) {
      const auto lhs = table(CharacterForm::kLength, a, b);
      for (int a2 = 0; a2 < 2; ++a2) {
        for (int b2 = 0; b2 < r; ++b2) {
          if (table(CharacterForm::kClassical, a2, b2) == lhs) {
            out[static_cast<std::size_t>(a * r + b)].emplace_back(a2, b2);
          }
        }
      }
    }
  }
  return out;
}

}  // namespace cperm
