#include "cperm/bijections.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <set>
#include <stdexcept>

#include "cperm/enumerate.hpp"
#include "cperm/statistics.hpp"

namespace cperm {

namespace {

using Bytes = std::array<std::uint8_t, kMaxLetters>;

bool odd_variant(HatVariant v) { return v == HatVariant::kBOdd || v == HatVariant::kDOdd; }
bool d_variant(HatVariant v) { return v == HatVariant::kDEven || v == HatVariant::kDOdd; }

void check_variant_group(HatVariant v, const ColoredPermutation& p) {
  const int n = p.size();
  if (v != HatVariant::kGEven && p.r() != 2) throw std::invalid_argument("variant needs signed permutations");
  if (odd_variant(v) != (n % 2 == 1)) throw std::invalid_argument("size parity does not match the variant");
  if (d_variant(v) && fast::neg(p) % 2 != 0) throw std::invalid_argument("element is not in D");
}

}  // namespace

InvolutionTag involution_of(HatVariant v) {
  switch (v) {
    case HatVariant::kGEven:
    case HatVariant::kBOdd: return InvolutionTag::kPhi;
    case HatVariant::kDEven: return InvolutionTag::kEta;
    case HatVariant::kDOdd: return InvolutionTag::kIota;
  }
  return InvolutionTag::kPhi;
}

HattedPermutation hat_forward(HatVariant v, const ColoredPermutation& p) {
  check_variant_group(v, p);
  if (involute(involution_of(v), p) != p) {
    throw std::invalid_argument("not a fixed point: " + format_window(p));
  }
  const int big = p.size();
  const int n = big / 2;
  const bool odd = odd_variant(v);
  const int m = odd ? n + 1 : n;
  const int max_pos = odd ? p.position_of(big) : -1;  // even, since blocks precede it
  const int k = odd ? max_pos / 2 : m;

  Bytes letters{};
  Bytes colors{};
  std::uint32_t hats = 0;
  for (int i = 0; i < m; ++i) {
    if (i == k) {
      letters[i] = static_cast<std::uint8_t>(n + 1);
      colors[i] = static_cast<std::uint8_t>(p.color(max_pos));
      continue;
    }
    const int start = i < k ? 2 * i : 2 * i - 1;
    const int first = p.letter(start);
    letters[i] = static_cast<std::uint8_t>((first + 1) / 2);
    if (first % 2 == 0) hats |= 1U << i;
    // the pair at the last two positions of an odd D fixed point may differ in sign;
    // its first entry is positive
    colors[i] = static_cast<std::uint8_t>(p.color(start));
  }
  if (d_variant(v)) {
    int parity = 0;
    for (int i = 0; i < m; ++i) parity ^= colors[i];
    if (colors[m - 1] != 0) throw std::logic_error("folded last entry is already negative");
    colors[m - 1] = static_cast<std::uint8_t>(parity);
  }
  return {ColoredPermutation(ColoredPermutation::Unchecked{}, p.r(), m, letters.data(), colors.data()), hats};
}

ColoredPermutation hat_backward(HatVariant v, const HattedPermutation& h) {
  const ColoredPermutation& q = h.base;
  const int m = q.size();
  const bool odd = odd_variant(v);
  if (v != HatVariant::kGEven && q.r() != 2) throw std::invalid_argument("variant needs signed permutations");
  if (m == 0 && odd) throw std::invalid_argument("odd variants need a nonempty base");
  if (m < 32 && (h.hats >> m) != 0) throw std::invalid_argument("hat outside the window");
  if (d_variant(v) && fast::neg(q) % 2 != 0) throw std::invalid_argument("base is not in D");
  const int n = odd ? m - 1 : m;
  const int big = odd ? 2 * n + 1 : 2 * n;
  if (big > kMaxLetters) throw std::invalid_argument("unfolded permutation too large");
  const int k = odd ? q.position_of(m) : m;
  if (odd && h.hatted(k)) throw std::invalid_argument("the largest letter cannot carry a hat");

  Bytes qc{};
  for (int i = 0; i < m; ++i) qc[i] = static_cast<std::uint8_t>(q.color(i));
  if (d_variant(v)) qc[m - 1] = 0;

  Bytes letters{};
  Bytes colors{};
  for (int i = 0; i < m; ++i) {
    if (i == k) {
      letters[2 * k] = static_cast<std::uint8_t>(big);
      colors[2 * k] = qc[i];
      continue;
    }
    const int start = i < k ? 2 * i : 2 * i - 1;
    const int j = q.letter(i);
    const bool hat = h.hatted(i);
    letters[start] = static_cast<std::uint8_t>(hat ? 2 * j : 2 * j - 1);
    letters[start + 1] = static_cast<std::uint8_t>(hat ? 2 * j - 1 : 2 * j);
    colors[start] = qc[i];
    colors[start + 1] = qc[i];
  }
  if (v == HatVariant::kDOdd && k < m - 1) {
    // last pair: first entry positive, second carries the parity
    int parity = 0;
    for (int i = 0; i < big - 1; ++i) parity ^= colors[i];
    colors[big - 1] = static_cast<std::uint8_t>(parity);
  }
  ColoredPermutation p(ColoredPermutation::Unchecked{}, q.r(), big, letters.data(), colors.data());
  if (d_variant(v) && fast::neg(p) % 2 != 0) throw std::invalid_argument("unfolded element is not in D");
  return p;
}

HatPartition hat_partition(const HattedPermutation& h) {
  HatPartition out;
  for (int i = 0; i < h.base.size(); ++i) {
    if (!h.hatted(i)) continue;
    out.positions.push_back(i + 1);
    out.letters.push_back(h.base.letter(i));
    if (h.base.color(i) == 0) {
      out.uncolored.push_back(i + 1);
      out.positive.push_back(i + 1);
    } else {
      out.colored.push_back(i + 1);
      out.negative.push_back(i + 1);
    }
  }
  std::sort(out.letters.begin(), out.letters.end());
  return out;
}

std::string format_hatted(const HattedPermutation& h, WindowStyle style) {
  const ColoredPermutation& p = h.base;
  if (style == WindowStyle::kSigned && p.r() != 2) throw std::invalid_argument("signed style requires r = 2");
  std::string out;
  for (int i = 0; i < p.size(); ++i) {
    if (i > 0) out += ' ';
    if (style == WindowStyle::kSigned) {
      out += std::to_string(p.signed_value(i));
      if (h.hatted(i)) out += '^';
    } else {
      out += std::to_string(p.letter(i));
      if (h.hatted(i)) out += '^';
      if (p.color(i) != 0) out += "[" + std::to_string(p.color(i)) + "]";
    }
  }
  return out;
}

int BarredPermutation::total() const noexcept {
  int s = 0;
  for (int b : bars) s += b;
  return s;
}

namespace {

// Flag descent indicator and sign change bit for spaces 1..n (index 0 unused).
void space_data(const ColoredPermutation& p, std::vector<int>& descent, std::vector<int>& delta) {
  const int n = p.size();
  descent.assign(static_cast<std::size_t>(n) + 1, 0);
  delta.assign(static_cast<std::size_t>(n) + 1, 0);
  for (int i = 1; i < n; ++i) {
    descent[i] = fast::flag_key(2, p.letter(i - 1), p.color(i - 1)) > fast::flag_key(2, p.letter(i), p.color(i));
    delta[i] = p.color(i - 1) != p.color(i);
  }
  if (n > 0) delta[n] = p.color(n - 1) != 0;
}

}  // namespace

bool is_flag_barred(const BarredPermutation& b) {
  const int n = b.base.size();
  if (b.base.r() != 2 || static_cast<int>(b.bars.size()) != n + 1) return false;
  std::vector<int> descent;
  std::vector<int> delta;
  space_data(b.base, descent, delta);
  if (b.bars[0] < 0) return false;
  for (int i = 1; i <= n; ++i) {
    const int c = b.bars[i];
    if (c < 0 || c % 2 != delta[i]) return false;
    if (descent[i] && delta[i] == 0 && c < 2) return false;
  }
  return true;
}

BarredPermutation min_barred(const ColoredPermutation& p) {
  if (p.r() != 2) throw std::invalid_argument("barred permutations need r = 2");
  const int n = p.size();
  std::vector<int> descent;
  std::vector<int> delta;
  space_data(p, descent, delta);
  BarredPermutation b{p, std::vector<int>(static_cast<std::size_t>(n) + 1, 0)};
  for (int i = 1; i <= n; ++i) b.bars[i] = delta[i] ? 1 : (descent[i] ? 2 : 0);
  return b;
}

std::string format_barred(const BarredPermutation& b) {
  std::string out;
  auto token = [&](const std::string& s) {
    if (!out.empty()) out += ' ';
    out += s;
  };
  for (int i = 0; i <= b.base.size(); ++i) {
    if (i > 0) token(std::to_string(b.base.signed_value(i - 1)));
    if (b.bars[i] > 0) token(std::string(static_cast<std::size_t>(b.bars[i]), '|'));
  }
  return out;
}

std::vector<BarredPermutation> barred_by_insertion(int n, int k, MaxSign sign) {
  if (n < 0 || k < 0 || n + 1 > kMaxLetters) throw std::invalid_argument("bad barred-permutation size");
  const int letters = n + 1;
  const int compartments = k + 1;
  std::vector<BarredPermutation> out;
  std::vector<int> where(static_cast<std::size_t>(letters), 0);  // compartment index counted from the right
  std::function<void(int)> assign = [&](int v) {
    if (v == letters) {
      if ((where[letters - 1] % 2 == 0) != (sign == MaxSign::kPlus)) return;
      Bytes ls{};
      Bytes cs{};
      std::vector<int> bars(static_cast<std::size_t>(letters) + 1, 0);
      int pos = 0;
      for (int c = compartments - 1; c >= 0; --c) {
        // letters in a compartment appear increasing by absolute value, sharing one sign
        for (int x = 1; x <= letters; ++x) {
          if (where[x - 1] != c) continue;
          ls[pos] = static_cast<std::uint8_t>(x);
          cs[pos] = static_cast<std::uint8_t>(c % 2);
          ++pos;
        }
        if (c > 0) ++bars[pos];
      }
      out.push_back({ColoredPermutation(ColoredPermutation::Unchecked{}, 2, letters, ls.data(), cs.data()), bars});
      return;
    }
    for (int c = 0; c < compartments; ++c) {
      where[v] = c;
      assign(v + 1);
    }
  };
  assign(0);
  return out;
}

std::uint64_t count_barred_by_definition(int n, int k, MaxSign sign) {
  const int letters = n + 1;
  std::uint64_t total = 0;
  enumerate(FamilySpec::hyperoctahedral(letters), [&](const ColoredPermutation& p) {
    if ((fast::sgm(p) == 0) != (sign == MaxSign::kPlus)) return;
    std::vector<int> descent;
    std::vector<int> delta;
    space_data(p, descent, delta);
    // count bar vectors (b_0..b_letters) summing to k under the rules
    std::vector<std::uint64_t> ways(static_cast<std::size_t>(k) + 1, 0);
    for (int c = 0; c <= k; ++c) ways[c] = 1;  // space 0 takes any count
    for (int i = 1; i <= letters; ++i) {
      const int lo = delta[i] ? 1 : (descent[i] ? 2 : 0);
      std::vector<std::uint64_t> next(ways.size(), 0);
      for (int used = 0; used <= k; ++used) {
        if (ways[used] == 0) continue;
        for (int c = lo; used + c <= k; c += 2) next[used + c] += ways[used];
      }
      ways = std::move(next);
    }
    total += ways[k];
  });
  return total;
}

std::uint64_t count_barred(int n, int k, MaxSign sign) {
  if (n < 1 || k < 0) throw std::invalid_argument("count_barred needs n >= 1 and k >= 0");
  return barred_by_insertion(n, k, sign).size();
}

}  // namespace cperm
