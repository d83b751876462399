#include "cperm/enumerate.hpp"

#include <stdexcept>

namespace cperm {

FamilySpec FamilySpec::symmetric(int n) {
  FamilySpec s;
  s.kind = FamilyKind::kSym;
  s.r = 1;
  s.n = n;
  return s;
}

FamilySpec FamilySpec::hyperoctahedral(int n) {
  FamilySpec s;
  s.kind = FamilyKind::kB;
  s.r = 2;
  s.n = n;
  return s;
}

FamilySpec FamilySpec::even_signed(int n) {
  FamilySpec s;
  s.kind = FamilyKind::kD;
  s.r = 2;
  s.n = n;
  return s;
}

FamilySpec FamilySpec::colored(int r, int n) {
  FamilySpec s;
  s.kind = FamilyKind::kG;
  s.r = r;
  s.n = n;
  return s;
}

FamilySpec FamilySpec::restricted(const RestrictionTuple& res) {
  FamilySpec s;
  s.kind = FamilyKind::kRestrictedG;
  s.r = res.r;
  s.n = res.size();
  s.restriction = res;
  return s;
}

FamilySpec FamilySpec::tilde(const TildeRestriction& res) {
  FamilySpec s;
  s.kind = FamilyKind::kTildeB;
  s.r = res.base.r;
  s.n = res.base.size();
  s.restriction = res.base;
  s.tilde_k = res.k;
  return s;
}

void FamilySpec::validate() const {
  if (n < 0 || n > kMaxLetters) throw std::invalid_argument("family size outside 0.." + std::to_string(kMaxLetters));
  if (r < 1 || r > kMaxColors) throw std::invalid_argument("number of colors outside 1.." + std::to_string(kMaxColors));
  switch (kind) {
    case FamilyKind::kSym:
      if (r != 1) throw std::invalid_argument("Sym requires r = 1");
      break;
    case FamilyKind::kB:
    case FamilyKind::kD:
      if (r != 2) throw std::invalid_argument("B and D require r = 2");
      break;
    case FamilyKind::kG:
      break;
    case FamilyKind::kRestrictedG:
      if (restriction.r != r || restriction.size() != n) {
        throw std::invalid_argument("restriction does not match (r, n)");
      }
      break;
    case FamilyKind::kTildeB:
      if (r != 2) throw std::invalid_argument("Tilde-B requires r = 2");
      if (restriction.r != r || restriction.size() != n) {
        throw std::invalid_argument("restriction does not match (r, n)");
      }
      if (tilde_k < 1 || tilde_k > n) throw std::invalid_argument("tilde position outside 1..n");
      break;
  }
}

std::string FamilySpec::describe() const {
  switch (kind) {
    case FamilyKind::kSym: return "S_" + std::to_string(n);
    case FamilyKind::kB: return "B_" + std::to_string(n);
    case FamilyKind::kD: return "D_" + std::to_string(n);
    case FamilyKind::kG: return "G_{" + std::to_string(r) + "," + std::to_string(n) + "}";
    case FamilyKind::kRestrictedG:
      return "G_{" + std::to_string(r) + "," + std::to_string(n) + "}" + format_restriction(restriction);
    case FamilyKind::kTildeB:
      return "B_" + std::to_string(n) + format_restriction(TildeRestriction(restriction, tilde_k));
  }
  return "?";
}

std::uint64_t factorial(int n) {
  if (n < 0 || n > 20) throw std::invalid_argument("factorial argument outside 0..20");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t family_size(const FamilySpec& spec) {
  spec.validate();
  const int n = spec.n;
  const std::uint64_t nf = factorial(n);
  const auto popcount_product = [&] {
    std::uint64_t prod = 1;
    for (int i = 0; i < n; ++i) {
      prod *= static_cast<std::uint64_t>(__builtin_popcount(spec.restriction.entries[i]));
    }
    return prod;
  };
  switch (spec.kind) {
    case FamilyKind::kSym: return nf;
    case FamilyKind::kB: return nf << n;
    case FamilyKind::kD: return n == 0 ? 1 : nf << (n - 1);
    case FamilyKind::kG: {
      std::uint64_t p = nf;
      for (int i = 0; i < n; ++i) p *= static_cast<std::uint64_t>(spec.r);
      return p;
    }
    case FamilyKind::kRestrictedG: return nf * popcount_product();
    case FamilyKind::kTildeB: {
      return factorial(n - 1) * popcount_product();
    }
  }
  return 0;
}

void unrank_sigma(int n, std::uint64_t rank, std::uint8_t* out) {
  std::array<std::uint8_t, kMaxLetters> pool{};
  for (int i = 0; i < n; ++i) pool[i] = static_cast<std::uint8_t>(i + 1);
  int remaining = n;
  for (int i = 0; i < n; ++i) {
    const std::uint64_t block = factorial(n - 1 - i);
    const auto pick = static_cast<int>(rank / block);
    rank %= block;
    out[i] = pool[pick];
    for (int j = pick; j + 1 < remaining; ++j) pool[j] = pool[j + 1];
    --remaining;
  }
}

namespace detail {

ColorLists color_lists(const FamilySpec& spec) {
  spec.validate();
  ColorLists out;
  const bool restricted = spec.kind == FamilyKind::kRestrictedG || spec.kind == FamilyKind::kTildeB;
  for (int i = 0; i < spec.n; ++i) {
    int c = 0;
    for (int color = 0; color < spec.r; ++color) {
      if (!restricted || spec.restriction.allows(i, color)) {
        out.values[i][c++] = static_cast<std::uint8_t>(color);
      }
    }
    out.counts[i] = c;
    if (c == 0) out.empty = true;
  }
  return out;
}

}  // namespace detail

std::vector<ColoredPermutation> collect(const FamilySpec& spec, std::size_t limit) {
  std::vector<ColoredPermutation> out;
  if (limit == 0) return out;
  struct Stop {};
  try {
    enumerate(spec, [&](const ColoredPermutation& p) {
      out.push_back(p);
      if (out.size() >= limit) throw Stop{};
    });
  } catch (const Stop&) {
  }
  return out;
}

}  // namespace cperm
