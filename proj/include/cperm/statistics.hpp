#pragma once

#include <optional>
#include <vector>

#include "cperm/colored_permutation.hpp"

namespace cperm {

enum class OrderTag {
  kNatural,  // -n < ... < -1 < 1 < ... < n; r <= 2 only
  kOrderL,   // colored letters first, larger letter smaller, then larger color smaller
  kFlag,     // grouped by color r-1, ..., 1, then uncolored; letters ascending in a group
};

/// Value of the comparison key before position 0 in type B and D descent sets.
enum class DescentPrefix {
  kNone,
  kZero,         // pi_0 = 0
  kMinusSecond,  // pi_0 = -pi_2; needs n >= 2
};

struct DescentData {
  std::vector<int> set;  // 1-based, may contain 0 with a prefix
  int count = 0;
  int index_sum = 0;
};

struct FlagStats {
  std::vector<int> des_set;
  int des = 0;
  int maj = 0;
  int fdes = 0;
  int fmaj = 0;
  int col = 0;
  int neg = 0;
  std::vector<int> neg_set;
};

enum class LengthFamily { kG, kB, kD };

struct DStats {
  int ddes = 0;
  int dmaj = 0;
  int sgm = 0;
};

struct SignChange {
  std::vector<int> delta;
  int ch = 0;
};

/// Every statistic that makes sense for the element; optional fields are
/// absent where the defining family does not contain p.
struct StatBundle {
  int r = 1;
  int n = 0;
  std::optional<int> inv_natural;
  int inv_L = 0;
  int inv_abs = 0;
  std::optional<DescentData> plain;  // Des, des, maj; r = 1
  FlagStats flag;
  int len_G = 0;
  std::optional<int> len_B;
  std::optional<int> len_D;
  std::optional<DescentData> type_b;
  std::optional<DescentData> type_d;
  std::optional<DStats> d;
  std::optional<SignChange> sign;
};

int inversions(const ColoredPermutation& p, OrderTag ord);
DescentData descent_data(const ColoredPermutation& p, OrderTag ord, DescentPrefix prefix);
FlagStats flag_stats(const ColoredPermutation& p);
int length(const ColoredPermutation& p, LengthFamily family);
DStats d_stats(const ColoredPermutation& p);
SignChange sign_change(const ColoredPermutation& p);
StatBundle stat_bundle(const ColoredPermutation& p);

/// The same word with the last entry's color cleared.
ColoredPermutation with_last_uncolored(const ColoredPermutation& p);

// Inline scalar versions for enumeration loops. No validation.
namespace fast {

inline int flag_key(int r, int letter, int color) noexcept {
  return (color == 0 ? r : r - color) * 32 + letter;
}

inline int order_l_key(int r, int letter, int color) noexcept {
  return color == 0 ? 4096 + letter : -(letter * r + color);
}

inline int col(const ColoredPermutation& p) noexcept {
  int s = 0;
  for (int i = 0; i < p.size(); ++i) s += p.color(i);
  return s;
}

inline int neg(const ColoredPermutation& p) noexcept {
  int s = 0;
  for (int i = 0; i < p.size(); ++i) s += p.color(i) != 0;
  return s;
}

inline int inv_abs(const ColoredPermutation& p) noexcept {
  int s = 0;
  const int n = p.size();
  for (int i = 0; i < n; ++i) {
    const int a = p.letter(i);
    for (int j = i + 1; j < n; ++j) s += a > p.letter(j);
  }
  return s;
}

inline int inv_natural(const ColoredPermutation& p) noexcept {
  int s = 0;
  const int n = p.size();
  for (int i = 0; i < n; ++i) {
    const int a = p.signed_value(i);
    for (int j = i + 1; j < n; ++j) s += a > p.signed_value(j);
  }
  return s;
}

inline int inv_L(const ColoredPermutation& p) noexcept {
  int keys[kMaxLetters];
  const int n = p.size();
  for (int i = 0; i < n; ++i) keys[i] = order_l_key(p.r(), p.letter(i), p.color(i));
  int s = 0;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) s += keys[i] > keys[j];
  }
  return s;
}

/// Flag descents; `clear_last` evaluates the word with the last color zeroed.
inline void flag_des_maj(const ColoredPermutation& p, int& des, int& maj, bool clear_last = false) noexcept {
  des = 0;
  maj = 0;
  const int n = p.size();
  const int r = p.r();
  int prev = n > 0 ? flag_key(r, p.letter(0), (clear_last && n == 1) ? 0 : p.color(0)) : 0;
  for (int i = 1; i < n; ++i) {
    const int c = (clear_last && i == n - 1) ? 0 : p.color(i);
    const int cur = flag_key(r, p.letter(i), c);
    if (prev > cur) {
      ++des;
      maj += i;
    }
    prev = cur;
  }
}

inline int fdes(const ColoredPermutation& p) noexcept {
  int des;
  int maj;
  flag_des_maj(p, des, maj);
  return p.r() * des + (p.size() > 0 ? p.color(0) : 0);
}

inline int fmaj(const ColoredPermutation& p) noexcept {
  int des;
  int maj;
  flag_des_maj(p, des, maj);
  return p.r() * maj + col(p);
}

inline void fdes_fmaj(const ColoredPermutation& p, int& fd, int& fm) noexcept {
  int des;
  int maj;
  flag_des_maj(p, des, maj);
  fd = p.r() * des + (p.size() > 0 ? p.color(0) : 0);
  fm = p.r() * maj + col(p);
}

/// fdes and fmaj of the word with the last entry made positive.
inline void ddes_dmaj(const ColoredPermutation& p, int& dd, int& dm) noexcept {
  const int n = p.size();
  int des;
  int maj;
  flag_des_maj(p, des, maj, true);
  const int first = n == 0 ? 0 : (n == 1 ? 0 : p.color(0));
  dd = 2 * des + first;
  dm = 2 * maj + col(p) - (n > 0 ? p.color(n - 1) : 0);
}

inline int len_G(const ColoredPermutation& p) noexcept {
  int s = inv_L(p);
  for (int i = 0; i < p.size(); ++i) {
    if (p.color(i) > 0) s += p.letter(i) + p.color(i) - 1;
  }
  return s;
}

inline int len_B(const ColoredPermutation& p) noexcept {
  int s = inv_natural(p);
  for (int i = 0; i < p.size(); ++i) {
    if (p.color(i) != 0) s += p.letter(i);
  }
  return s;
}

inline int len_D(const ColoredPermutation& p) noexcept {
  int s = inv_natural(p);
  for (int i = 0; i < p.size(); ++i) {
    if (p.color(i) != 0) s += p.letter(i) - 1;
  }
  return s;
}

/// Type B descents with pi_0 = 0 under the natural order.
inline void des_maj_B(const ColoredPermutation& p, int& des, int& maj) noexcept {
  des = 0;
  maj = 0;
  int prev = 0;
  for (int i = 0; i < p.size(); ++i) {
    const int cur = p.signed_value(i);
    if (prev > cur) {
      ++des;
      maj += i;
    }
    prev = cur;
  }
}

/// Type D descents with pi_0 = -pi_2; n >= 2.
inline void des_maj_D(const ColoredPermutation& p, int& des, int& maj) noexcept {
  des = 0;
  maj = 0;
  int prev = -p.signed_value(1);
  for (int i = 0; i < p.size(); ++i) {
    const int cur = p.signed_value(i);
    if (prev > cur) {
      ++des;
      maj += i;
    }
    prev = cur;
  }
}

/// Plain descents (r = 1 view of the letters).
inline void des_maj(const ColoredPermutation& p, int& des, int& maj) noexcept {
  des = 0;
  maj = 0;
  for (int i = 1; i < p.size(); ++i) {
    if (p.letter(i - 1) > p.letter(i)) {
      ++des;
      maj += i;
    }
  }
}

inline int sgm(const ColoredPermutation& p) noexcept {
  const int pos = p.position_of(p.size());
  return pos >= 0 && p.color(pos) != 0 ? 1 : 0;
}

/// Total sign change.
inline int ch(const ColoredPermutation& p) noexcept {
  const int n = p.size();
  int s = 0;
  for (int i = 0; i + 1 < n; ++i) s += (p.color(i) != 0) != (p.color(i + 1) != 0);
  if (n > 0 && p.color(n - 1) != 0) ++s;
  return s;
}

}  // namespace fast

}  // namespace cperm
