#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cperm/colored_permutation.hpp"
#include "cperm/involutions.hpp"

namespace cperm {

/// A permutation with some positions marked by a hat.
struct HattedPermutation {
  ColoredPermutation base;
  std::uint32_t hats = 0;  // bit i marks position i (0-based)

  bool hatted(int i) const noexcept { return (hats >> i) & 1U; }
  friend bool operator==(const HattedPermutation&, const HattedPermutation&) = default;
};

enum class HatVariant {
  kGEven,  // fixed points of phi on G_{r,2n}(H) -> G_{r,n}(S)
  kBOdd,   // fixed points of phi on B_{2n+1} -> B_{n+1}
  kDEven,  // fixed points of eta on D_{2n} -> D_n
  kDOdd,   // fixed points of iota on D_{2n+1} -> D_{n+1}
};

InvolutionTag involution_of(HatVariant v);

/// Folds a fixed point; throws std::invalid_argument if p is not one.
HattedPermutation hat_forward(HatVariant v, const ColoredPermutation& p);

/// Unfolds; throws std::invalid_argument on a malformed image.
ColoredPermutation hat_backward(HatVariant v, const HattedPermutation& h);

/// All sets 1-based. P^N/P^C split hatted positions by zero/nonzero color;
/// for signed permutations these are also P^+/P^-.
struct HatPartition {
  std::vector<int> positions;
  std::vector<int> letters;  // sorted absolute values
  std::vector<int> uncolored;
  std::vector<int> colored;
  std::vector<int> positive;
  std::vector<int> negative;
};

HatPartition hat_partition(const HattedPermutation& h);

/// Window with "^" after hatted letters, e.g. "3[1] 1^[2] 4^ 2^[1]".
std::string format_hatted(const HattedPermutation& h, WindowStyle style = WindowStyle::kBrackets);

/// A signed permutation with bars in spaces 0..n (space i follows position i).
struct BarredPermutation {
  ColoredPermutation base;
  std::vector<int> bars;

  int total() const noexcept;
  friend bool operator==(const BarredPermutation&, const BarredPermutation&) = default;
};

/// Descent spaces with no sign change carry at least two bars, and each
/// space 1..n has the parity of its sign change bit.
bool is_flag_barred(const BarredPermutation& b);

/// The flag barred permutation on p with the fewest bars.
BarredPermutation min_barred(const ColoredPermutation& p);

/// "-2 -3 | 1 | -5 || -4 |"
std::string format_barred(const BarredPermutation& b);

enum class MaxSign { kPlus, kMinus };

/// Flag barred permutations with k bars on signed permutations of n+1
/// letters whose largest letter has the given sign. Built by distributing
/// letters into the k+1 compartments between bars.
std::vector<BarredPermutation> barred_by_insertion(int n, int k, MaxSign sign);

/// Same count from the definition: sum over base permutations of valid bar vectors.
std::uint64_t count_barred_by_definition(int n, int k, MaxSign sign);

std::uint64_t count_barred(int n, int k, MaxSign sign);

}  // namespace cperm
