#pragma once

#include <optional>
#include <string>
#include <vector>

#include "cperm/colored_permutation.hpp"
#include "cperm/enumerate.hpp"
#include "cperm/restriction.hpp"

namespace cperm {

enum class InvolutionTag {
  kPhi,   // pairs (2i-1, 2i) brought together; G_{r,2n}(H) and B_{2n+1}
  kEta,   // D_{2n}
  kIota,  // D_{2n+1}
  kPsiB,  // B_n
  kPsiD,  // D_n
  kTheta, // B_n, flips the sign of the first misplaced letter
};

std::string to_string(InvolutionTag tag);
InvolutionTag parse_involution_tag(const std::string& name);

/// Where an involution acts. `restriction` is only used by kPhi.
struct InvolutionDomain {
  InvolutionTag tag = InvolutionTag::kPhi;
  int r = 2;
  int size = 0;
  std::optional<RestrictionTuple> restriction;

  FamilySpec family() const;
  /// Throws std::invalid_argument if the tag cannot act on this domain.
  void validate() const;
};

/// Throws std::domain_error if p is outside the tag's domain.
ColoredPermutation involute(InvolutionTag tag, const ColoredPermutation& p);

/// True iff p lies in the tag's natural domain (ignores restrictions).
bool in_domain(InvolutionTag tag, const ColoredPermutation& p);

/// Fixed points built from their structural description, sorted.
std::vector<ColoredPermutation> fixed_points(const InvolutionDomain& domain);

}  // namespace cperm
