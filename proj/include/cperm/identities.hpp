#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cperm/poly.hpp"
#include "cperm/restriction.hpp"

namespace cperm {

struct IdentityParams {
  std::optional<int> r;
  std::optional<int> n;
  std::optional<int> b;
  std::optional<int> K;
  std::optional<RestrictionTuple> restriction;
};

enum class IdentityKind { kPlain, kRefined, kSeries, kCancellation };

struct IdentityInfo {
  std::string id;
  IdentityKind kind = IdentityKind::kPlain;
  std::string description;
  std::string lhs;
  std::string rhs;
  std::vector<std::string> required;
  std::vector<std::string> optional;
  /// Smallest legal parameters, used by smoke tests.
  IdentityParams smallest;
};

/// The catalog in a fixed order.
const std::vector<IdentityInfo>& list_identities();

/// Throws std::invalid_argument for an unknown id.
const IdentityInfo& identity_info(const std::string& id);

struct VerifyOptions {
  int jobs = 1;
  /// Id whose right-hand side gets one coefficient bumped; mutation testing only.
  std::string tamper;
};

struct IdentityReport {
  std::string id;
  IdentityParams params;
  bool equal = false;
  std::uint64_t elements = 0;
  double elapsed_ms = 0;
  Poly lhs;
  Poly rhs;
  std::vector<std::string> notes;
};

/// Throws std::invalid_argument when the params violate the id's schema.
IdentityReport verify(const std::string& id, const IdentityParams& params, const VerifyOptions& options = {});

/// verify() for a refined id with the restriction supplied separately.
IdentityReport verify_refined(const std::string& id, const RestrictionTuple& restriction, IdentityParams params,
                              const VerifyOptions& options = {});

/// verify() restricted to cancellation ids.
IdentityReport cancellation_check(const std::string& id, const IdentityParams& params,
                                  const VerifyOptions& options = {});

}  // namespace cperm
