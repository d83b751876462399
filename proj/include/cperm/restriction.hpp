#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace cperm {

/// Bit c set means color c is allowed.
using ColorMask = std::uint32_t;

inline ColorMask full_mask(int r) noexcept {
  return r >= 32 ? ~ColorMask{0} : ((ColorMask{1} << r) - 1);
}

/// Per-position color constraints (S_1, ..., S_n); entries may be empty.
struct RestrictionTuple {
  int r = 1;
  std::vector<ColorMask> entries;

  RestrictionTuple() = default;
  RestrictionTuple(int r_, std::vector<ColorMask> e);

  static RestrictionTuple full(int r, int n);

  int size() const noexcept { return static_cast<int>(entries.size()); }
  bool allows(int i, int color) const noexcept { return (entries[i] >> color) & 1U; }
  bool has_empty() const noexcept;

  friend bool operator==(const RestrictionTuple&, const RestrictionTuple&) = default;
};

/// A restriction with a marked position k (1-based) where the largest letter must sit.
struct TildeRestriction {
  RestrictionTuple base;
  int k = 1;

  TildeRestriction() = default;
  TildeRestriction(RestrictionTuple b, int k_);

  friend bool operator==(const TildeRestriction&, const TildeRestriction&) = default;
};

/// The unique S with S_i = H_{2i-1} & H_{2i}.
RestrictionTuple refine_restriction(const RestrictionTuple& h);

/// All S_k (k = 1..n+1) compatible with an odd-length signed restriction H.
std::vector<TildeRestriction> tilde_family(const RestrictionTuple& h);

/// "{0,2}" style rendering; for r = 2 the shorthand "+", "-", "±", "∅".
std::string format_entry(int r, ColorMask m);
std::string format_restriction(const RestrictionTuple& s);
std::string format_restriction(const TildeRestriction& s);

}  // namespace cperm
