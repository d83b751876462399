#include "cperm/restriction.hpp"

#include <stdexcept>

#include "cperm/colored_permutation.hpp"

namespace cperm {

RestrictionTuple::RestrictionTuple(int r_, std::vector<ColorMask> e) : r(r_), entries(std::move(e)) {
  if (r < 1 || r > kMaxColors) throw std::invalid_argument("restriction: bad number of colors");
  const ColorMask all = full_mask(r);
  for (ColorMask m : entries) {
    if ((m & ~all) != 0) throw std::invalid_argument("restriction entry names a color outside Z_r");
  }
}

RestrictionTuple RestrictionTuple::full(int r, int n) {
  return RestrictionTuple(r, std::vector<ColorMask>(static_cast<std::size_t>(n), full_mask(r)));
}

bool RestrictionTuple::has_empty() const noexcept {
  for (ColorMask m : entries) {
    if (m == 0) return true;
  }
  return false;
}

TildeRestriction::TildeRestriction(RestrictionTuple b, int k_) : base(std::move(b)), k(k_) {
  if (k < 1 || k > base.size()) throw std::invalid_argument("tilde position outside 1..n");
}

RestrictionTuple refine_restriction(const RestrictionTuple& h) {
  if (h.size() % 2 != 0) throw std::invalid_argument("refine_restriction: odd length");
  std::vector<ColorMask> s(h.entries.size() / 2);
  for (std::size_t i = 0; i < s.size(); ++i) s[i] = h.entries[2 * i] & h.entries[2 * i + 1];
  return RestrictionTuple(h.r, std::move(s));
}

// The largest letter sits at H-position 2k-1; pairs before it use (2i-1, 2i),
// pairs after it are shifted by one and use (2i-2, 2i-1).
std::vector<TildeRestriction> tilde_family(const RestrictionTuple& h) {
  if (h.size() % 2 != 1) throw std::invalid_argument("tilde_family: even length");
  if (h.r != 2) throw std::invalid_argument("tilde_family: requires r = 2");
  const int n = h.size() / 2;
  const auto H = [&](int i) { return h.entries[static_cast<std::size_t>(i - 1)]; };
  std::vector<TildeRestriction> out;
  for (int k = 1; k <= n + 1; ++k) {
    std::vector<ColorMask> s(static_cast<std::size_t>(n + 1));
    for (int i = 1; i <= n + 1; ++i) {
      if (i < k) {
        s[i - 1] = H(2 * i - 1) & H(2 * i);
      } else if (i == k) {
        s[i - 1] = H(2 * k - 1);
      } else {
        s[i - 1] = H(2 * i - 2) & H(2 * i - 1);
      }
    }
    out.emplace_back(RestrictionTuple(2, std::move(s)), k);
  }
  return out;
}

std::string format_entry(int r, ColorMask m) {
  if (r == 2) {
    switch (m) {
      case 0: return "∅";
      case 1: return "+";
      case 2: return "-";
      default: return "±";
    }
  }
  std::string out = "{";
  bool first = true;
  for (int c = 0; c < r; ++c) {
    if ((m >> c) & 1U) {
      if (!first) out += ',';
      out += std::to_string(c);
      first = false;
    }
  }
  return out + "}";
}

std::string format_restriction(const RestrictionTuple& s) {
  std::string out = "(";
  for (int i = 0; i < s.size(); ++i) {
    if (i > 0) out += ',';
    out += format_entry(s.r, s.entries[i]);
  }
  return out + ")";
}

std::string format_restriction(const TildeRestriction& s) {
  std::string out = "(";
  for (int i = 0; i < s.base.size(); ++i) {
    if (i > 0) out += ',';
    out += format_entry(s.base.r, s.base.entries[i]);
    if (i + 1 == s.k) out += "~";
  }
  return out + ")";
}

}  // namespace cperm
