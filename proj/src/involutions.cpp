#include "cperm/involutions.hpp"

#include <algorithm>
#include <array>
#include <functional>
#include <stdexcept>

#include "cperm/statistics.hpp"

namespace cperm {

namespace {

using Letters = std::array<std::uint8_t, kMaxLetters>;

struct Word {
  int r;
  int n;
  Letters letters{};
  Letters colors{};

  explicit Word(const ColoredPermutation& p) : r(p.r()), n(p.size()) {
    for (int i = 0; i < n; ++i) {
      letters[i] = static_cast<std::uint8_t>(p.letter(i));
      colors[i] = static_cast<std::uint8_t>(p.color(i));
    }
  }
  ColoredPermutation build() const {
    return ColoredPermutation(ColoredPermutation::Unchecked{}, r, n, letters.data(), colors.data());
  }
};

int neg_count(const ColoredPermutation& p) { return fast::neg(p); }

// Positions of letters 2i-1 and 2i.
struct Pair {
  int a;  // position of the odd letter
  int b;  // position of the even letter
  int lo() const { return std::min(a, b); }
  bool adjacent() const { return a - b == 1 || b - a == 1; }
};

Pair pair_of(const ColoredPermutation& p, int i) {
  return {p.position_of(2 * i - 1), p.position_of(2 * i)};
}

ColoredPermutation swap_letters(const ColoredPermutation& p, const Pair& pr, bool flip) {
  Word w(p);
  std::swap(w.letters[pr.a], w.letters[pr.b]);
  if (flip) {
    w.colors[pr.a] ^= 1;
    w.colors[pr.b] ^= 1;
  }
  return w.build();
}

void require(bool ok, InvolutionTag tag, const char* what) {
  if (!ok) throw std::domain_error(to_string(tag) + ": " + what);
}

}  // namespace

std::string to_string(InvolutionTag tag) {
  switch (tag) {
    case InvolutionTag::kPhi: return "phi";
    case InvolutionTag::kEta: return "eta";
    case InvolutionTag::kIota: return "iota";
    case InvolutionTag::kPsiB: return "psi-b";
    case InvolutionTag::kPsiD: return "psi-d";
    case InvolutionTag::kTheta: return "theta";
  }
  return "?";
}

InvolutionTag parse_involution_tag(const std::string& name) {
  for (auto tag : {InvolutionTag::kPhi, InvolutionTag::kEta, InvolutionTag::kIota, InvolutionTag::kPsiB,
                   InvolutionTag::kPsiD, InvolutionTag::kTheta}) {
    if (to_string(tag) == name) return tag;
  }
  throw std::invalid_argument("unknown involution '" + name + "'");
}

bool in_domain(InvolutionTag tag, const ColoredPermutation& p) {
  const int n = p.size();
  switch (tag) {
    case InvolutionTag::kPhi: return true;
    case InvolutionTag::kEta: return p.r() == 2 && n % 2 == 0 && neg_count(p) % 2 == 0;
    case InvolutionTag::kIota: return p.r() == 2 && n % 2 == 1 && neg_count(p) % 2 == 0;
    case InvolutionTag::kPsiB: return p.r() == 2;
    case InvolutionTag::kPsiD: return p.r() == 2 && neg_count(p) % 2 == 0;
    case InvolutionTag::kTheta: return p.r() == 2;
  }
  return false;
}

ColoredPermutation involute(InvolutionTag tag, const ColoredPermutation& p) {
  const int n = p.size();
  switch (tag) {
    case InvolutionTag::kPhi: {
      for (int i = 1; 2 * i <= n; ++i) {
        const Pair pr = pair_of(p, i);
        if (!pr.adjacent() || p.color(pr.a) != p.color(pr.b)) return swap_letters(p, pr, false);
      }
      return p;
    }
    case InvolutionTag::kEta: {
      require(p.r() == 2, tag, "needs signed permutations");
      require(n % 2 == 0, tag, "needs even size");
      require(neg_count(p) % 2 == 0, tag, "needs an even number of negative entries");
      for (int i = 1; 2 * i <= n; ++i) {
        const Pair pr = pair_of(p, i);
        const bool last_two = pr.adjacent() && pr.lo() == n - 2;
        const bool opposite = p.color(pr.a) != p.color(pr.b);
        if (!pr.adjacent() || (opposite && !last_two) ||
            (last_two && p.color(pr.a) != 0 && p.color(pr.b) != 0)) {
          return swap_letters(p, pr, false);
        }
      }
      return p;
    }
    case InvolutionTag::kIota: {
      require(p.r() == 2, tag, "needs signed permutations");
      require(n % 2 == 1, tag, "needs odd size");
      require(neg_count(p) % 2 == 0, tag, "needs an even number of negative entries");
      for (int i = 1; 2 * i < n; ++i) {
        const Pair pr = pair_of(p, i);
        const bool last_two = pr.adjacent() && pr.lo() == n - 2;
        const bool opposite = p.color(pr.a) != p.color(pr.b);
        if (!pr.adjacent() || (opposite && !last_two) || (last_two && p.color(n - 2) != 0)) {
          return swap_letters(p, pr, false);
        }
      }
      return p;
    }
    case InvolutionTag::kPsiB:
    case InvolutionTag::kPsiD: {
      require(p.r() == 2, tag, "needs signed permutations");
      const bool d = tag == InvolutionTag::kPsiD;
      if (d) require(neg_count(p) % 2 == 0, tag, "needs an even number of negative entries");
      for (int i = 1; 2 * i <= n; ++i) {
        const Pair pr = pair_of(p, i);
        if (!pr.adjacent()) return swap_letters(p, pr, false);
        const bool home = pr.lo() == 2 * i - 2;
        const bool opposite = p.color(pr.a) != p.color(pr.b);
        if (opposite) {
          if (!(d && i == 1 && home)) return swap_letters(p, pr, false);
        } else if (!home) {
          return swap_letters(p, pr, true);
        }
      }
      return p;
    }
    case InvolutionTag::kTheta: {
      require(p.r() == 2, tag, "needs signed permutations");
      for (int k = 1; k <= n; ++k) {
        if (p.letter(k - 1) != k) {
          Word w(p);
          w.colors[p.position_of(k)] ^= 1;
          return w.build();
        }
      }
      return p;
    }
  }
  return p;
}

FamilySpec InvolutionDomain::family() const {
  switch (tag) {
    case InvolutionTag::kPhi:
      if (restriction) return FamilySpec::restricted(*restriction);
      return FamilySpec::colored(r, size);
    case InvolutionTag::kEta:
    case InvolutionTag::kIota:
    case InvolutionTag::kPsiD: return FamilySpec::even_signed(size);
    case InvolutionTag::kPsiB:
    case InvolutionTag::kTheta: return FamilySpec::hyperoctahedral(size);
  }
  return FamilySpec::symmetric(size);
}

void InvolutionDomain::validate() const {
  if (size < 0 || size > kMaxLetters) throw std::invalid_argument("domain size out of range");
  if (tag == InvolutionTag::kPhi) {
    if (restriction && (restriction->size() != size || restriction->r != r)) {
      throw std::invalid_argument("restriction does not match the domain");
    }
  } else {
    if (r != 2) throw std::invalid_argument(to_string(tag) + " acts on signed permutations only (r = 2)");
    if (restriction) throw std::invalid_argument(to_string(tag) + " takes no restriction");
  }
  if (tag == InvolutionTag::kEta && size % 2 != 0) throw std::invalid_argument("eta needs even size");
  if (tag == InvolutionTag::kIota && size % 2 != 1) throw std::invalid_argument("iota needs odd size");
  family().validate();
}

namespace {

// Places the units {1,2}, {3,4}, ... (and a trailing singleton N when N is odd)
// as adjacent blocks from left to right. `block_colors(pos)` lists the color
// pairs allowed for a block starting at `pos`; `single_colors(pos)` those of
// the singleton.
void arrange_blocks(int r, int n, const std::function<std::vector<std::pair<int, int>>(int)>& block_colors,
                    const std::function<std::vector<int>(int)>& single_colors,
                    std::vector<ColoredPermutation>& out) {
  const int blocks = n / 2;
  const bool single = n % 2 == 1;
  Letters letters{};
  Letters colors{};
  std::vector<bool> used(static_cast<std::size_t>(blocks + 1), false);
  std::function<void(int)> place = [&](int pos) {
    if (pos == n) {
      out.emplace_back(ColoredPermutation::Unchecked{}, r, n, letters.data(), colors.data());
      return;
    }
    for (int u = 0; u < blocks; ++u) {
      if (used[u] || pos + 1 >= n) continue;
      used[u] = true;
      for (auto [c1, c2] : block_colors(pos)) {
        for (int flip = 0; flip < 2; ++flip) {
          letters[pos] = static_cast<std::uint8_t>(2 * u + 1 + flip);
          letters[pos + 1] = static_cast<std::uint8_t>(2 * u + 2 - flip);
          colors[pos] = static_cast<std::uint8_t>(c1);
          colors[pos + 1] = static_cast<std::uint8_t>(c2);
          place(pos + 2);
        }
      }
      used[u] = false;
    }
    if (single && !used[blocks]) {
      used[blocks] = true;
      for (int c : single_colors(pos)) {
        letters[pos] = static_cast<std::uint8_t>(n);
        colors[pos] = static_cast<std::uint8_t>(c);
        place(pos + 1);
      }
      used[blocks] = false;
    }
  };
  place(0);
}

// Letters 2i-1, 2i at positions 2i-1, 2i; `pair_colors(i)` lists allowed
// color pairs for pair i (1-based), `last_colors` those of a trailing odd letter.
void home_pairs(int n, const std::function<std::vector<std::pair<int, int>>(int)>& pair_colors,
                std::vector<ColoredPermutation>& out) {
  Letters letters{};
  Letters colors{};
  std::function<void(int)> place = [&](int i) {
    if (2 * i > n) {
      if (n % 2 == 1) {
        letters[n - 1] = static_cast<std::uint8_t>(n);
        for (int c = 0; c < 2; ++c) {
          colors[n - 1] = static_cast<std::uint8_t>(c);
          out.emplace_back(ColoredPermutation::Unchecked{}, 2, n, letters.data(), colors.data());
        }
      } else {
        out.emplace_back(ColoredPermutation::Unchecked{}, 2, n, letters.data(), colors.data());
      }
      return;
    }
    for (int flip = 0; flip < 2; ++flip) {
      letters[2 * i - 2] = static_cast<std::uint8_t>(2 * i - 1 + flip);
      letters[2 * i - 1] = static_cast<std::uint8_t>(2 * i - flip);
      for (auto [c1, c2] : pair_colors(i)) {
        colors[2 * i - 2] = static_cast<std::uint8_t>(c1);
        colors[2 * i - 1] = static_cast<std::uint8_t>(c2);
        place(i + 1);
      }
    }
  };
  place(1);
}

const std::vector<std::pair<int, int>> kSameSign{{0, 0}, {1, 1}};
const std::vector<std::pair<int, int>> kAnySigns{{0, 0}, {0, 1}, {1, 0}, {1, 1}};

}  // namespace

std::vector<ColoredPermutation> fixed_points(const InvolutionDomain& domain) {
  domain.validate();
  const int n = domain.size;
  const int r = domain.r;
  std::vector<ColoredPermutation> out;
  switch (domain.tag) {
    case InvolutionTag::kPhi: {
      const RestrictionTuple h = domain.restriction ? *domain.restriction : RestrictionTuple::full(r, n);
      arrange_blocks(
          r, n,
          [&](int pos) {
            std::vector<std::pair<int, int>> v;
            for (int c = 0; c < r; ++c) {
              if (h.allows(pos, c) && h.allows(pos + 1, c)) v.emplace_back(c, c);
            }
            return v;
          },
          [&](int pos) {
            std::vector<int> v;
            for (int c = 0; c < r; ++c) {
              if (h.allows(pos, c)) v.push_back(c);
            }
            return v;
          },
          out);
      break;
    }
    case InvolutionTag::kEta:
      arrange_blocks(
          2, n,
          [&](int pos) { return pos == n - 2 ? std::vector<std::pair<int, int>>{{0, 0}} : kSameSign; },
          [](int) { return std::vector<int>{}; }, out);
      break;
    case InvolutionTag::kIota:
      arrange_blocks(
          2, n,
          [&](int pos) {
            return pos == n - 2 ? std::vector<std::pair<int, int>>{{0, 0}, {0, 1}} : kSameSign;
          },
          [](int) { return std::vector<int>{0, 1}; }, out);
      break;
    case InvolutionTag::kPsiB:
      home_pairs(n, [](int) { return kSameSign; }, out);
      break;
    case InvolutionTag::kPsiD:
      home_pairs(n, [](int i) { return i == 1 ? kAnySigns : kSameSign; }, out);
      break;
    case InvolutionTag::kTheta: {
      Letters letters{};
      Letters colors{};
      for (int i = 0; i < n; ++i) letters[i] = static_cast<std::uint8_t>(i + 1);
      for (std::uint32_t mask = 0; mask < (1U << n); ++mask) {
        for (int i = 0; i < n; ++i) colors[i] = static_cast<std::uint8_t>((mask >> i) & 1U);
        out.emplace_back(ColoredPermutation::Unchecked{}, 2, n, letters.data(), colors.data());
      }
      break;
    }
  }
  const bool even_only = domain.tag == InvolutionTag::kEta || domain.tag == InvolutionTag::kIota ||
                         domain.tag == InvolutionTag::kPsiD;
  if (even_only) {
    std::erase_if(out, [](const ColoredPermutation& p) { return fast::neg(p) % 2 != 0; });
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cperm
