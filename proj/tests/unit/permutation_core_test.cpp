#include <gtest/gtest.h>

#include <algorithm>
#include <random>
#include <set>

#include "cperm/colored_permutation.hpp"
#include "cperm/enumerate.hpp"
#include "cperm/parallel.hpp"
#include "cperm/restriction.hpp"

namespace cperm {
namespace {

std::vector<std::string> windows(const FamilySpec& spec, WindowStyle style = WindowStyle::kBrackets) {
  std::vector<std::string> out;
  for (const auto& p : collect(spec)) out.push_back(format_window(p, style));
  return out;
}

ColoredPermutation random_element(std::mt19937_64& rng, int r, int n) {
  std::vector<int> sigma(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) sigma[static_cast<std::size_t>(i)] = i + 1;
  std::shuffle(sigma.begin(), sigma.end(), rng);
  std::uniform_int_distribution<int> color(0, r - 1);
  std::vector<int> z(static_cast<std::size_t>(n));
  for (auto& v : z) v = color(rng);
  return ColoredPermutation(r, sigma, z);
}

TEST(Window, ParsesBracketColors) {
  const auto p = parse_window("5 1[1] 3 4[2] 2[1] 6[3]", 4);
  EXPECT_EQ(sigma_of(p), (std::vector<int>{5, 1, 3, 4, 2, 6}));
  EXPECT_EQ(colors_of(p), (std::vector<int>{0, 1, 0, 2, 1, 3}));
  EXPECT_EQ(format_window(p), "5 1[1] 3 4[2] 2[1] 6[3]");
}

TEST(Window, ParsesSignedTokens) {
  const auto p = parse_window("-2 3 -5 -1 -4", 2);
  EXPECT_EQ(sigma_of(p), (std::vector<int>{2, 3, 5, 1, 4}));
  EXPECT_EQ(colors_of(p), (std::vector<int>{1, 0, 1, 1, 1}));
  EXPECT_EQ(format_window(p, WindowStyle::kSigned), "-2 3 -5 -1 -4");
  EXPECT_EQ(format_window(p), "2[1] 3 5[1] 1[1] 4[1]");
}

TEST(Window, IdentityRoundTrip) {
  const auto p = parse_window("1 2 3", 1);
  EXPECT_EQ(p, ColoredPermutation::identity(1, 3));
  EXPECT_EQ(format_window(p), "1 2 3");
}

TEST(Window, RejectsMalformedInput) {
  EXPECT_THROW(parse_window("1 1", 1), std::invalid_argument);
  EXPECT_THROW(parse_window("1 3", 1), std::invalid_argument);
  EXPECT_THROW(parse_window("1[4] 2", 4), std::invalid_argument);
  EXPECT_THROW(parse_window("-1 2", 3), std::invalid_argument);
  EXPECT_THROW(parse_window("1[1 2", 2), std::invalid_argument);
  EXPECT_THROW(parse_window("x", 1), std::invalid_argument);
  EXPECT_THROW(format_window(parse_window("1[2]", 3), WindowStyle::kSigned), std::invalid_argument);
}

TEST(Enumerate, FamilySizes) {
  EXPECT_EQ(collect(FamilySpec::symmetric(3)).size(), 6u);
  EXPECT_EQ(collect(FamilySpec::hyperoctahedral(3)).size(), 48u);
  EXPECT_EQ(collect(FamilySpec::even_signed(3)).size(), 24u);
  EXPECT_EQ(collect(FamilySpec::colored(3, 3)).size(), 162u);
  for (int n = 0; n <= 5; ++n) {
    EXPECT_EQ(family_size(FamilySpec::hyperoctahedral(n)), collect(FamilySpec::hyperoctahedral(n)).size());
    EXPECT_EQ(family_size(FamilySpec::even_signed(n)), collect(FamilySpec::even_signed(n)).size());
  }
}

TEST(Enumerate, ElementsAreDistinctAndSorted) {
  const auto all = collect(FamilySpec::colored(3, 3));
  EXPECT_TRUE(std::is_sorted(all.begin(), all.end()));
  EXPECT_EQ(std::set<ColoredPermutation>(all.begin(), all.end()).size(), all.size());
}

TEST(Enumerate, RestrictedMatchesProductFilter) {
  const RestrictionTuple s(4, {0b0101, 0b1100});
  const auto got = windows(FamilySpec::restricted(s));
  EXPECT_EQ(got, (std::vector<std::string>{"1 2[2]", "1 2[3]", "1[2] 2[2]", "1[2] 2[3]", "2 1[2]", "2 1[3]",
                                           "2[2] 1[2]", "2[2] 1[3]"}));
  // independent oracle: filter the whole group
  std::vector<std::string> filtered;
  for (const auto& p : collect(FamilySpec::colored(4, 2))) {
    if (s.allows(0, p.color(0)) && s.allows(1, p.color(1))) filtered.push_back(format_window(p));
  }
  EXPECT_EQ(got, filtered);
}

TEST(Enumerate, EmptyEntryGivesEmptyFamily) {
  EXPECT_TRUE(collect(FamilySpec::restricted(RestrictionTuple(2, {0b11, 0}))).empty());
}

TEST(Enumerate, TildeFamilyPinsTheLargestLetter) {
  const TildeRestriction s(RestrictionTuple(2, {0b10, 0b01, 0b11}), 2);
  EXPECT_EQ(windows(FamilySpec::tilde(s), WindowStyle::kSigned),
            (std::vector<std::string>{"-1 3 2", "-1 3 -2", "-2 3 1", "-2 3 -1"}));
}

TEST(Enumerate, RangesPartitionTheRankSpace) {
  const FamilySpec spec = FamilySpec::even_signed(5);
  std::vector<ColoredPermutation> pieces;
  const std::uint64_t total = rank_space(spec);
  for (std::uint64_t b = 0; b < total; b += 7) {
    enumerate_range(spec, b, std::min(total, b + 7), [&](const ColoredPermutation& p) { pieces.push_back(p); });
  }
  EXPECT_EQ(pieces, collect(spec));
}

TEST(Enumerate, ParallelCountMatchesSerial) {
  const FamilySpec spec = FamilySpec::colored(3, 5);
  const auto count = map_reduce<std::uint64_t>(
      spec, 4, [] { return std::uint64_t{0}; }, [](std::uint64_t& acc, const ColoredPermutation&) { ++acc; },
      [](std::uint64_t& a, std::uint64_t&& b) { a += b; });
  EXPECT_EQ(count, family_size(spec));
}

TEST(Restriction, HalfLengthRefinement) {
  const RestrictionTuple h(4, {0b1111, 0b0101, 0b1100, 0b1101});
  EXPECT_EQ(refine_restriction(h), RestrictionTuple(4, {0b0101, 0b1100}));
  const RestrictionTuple h2(4, {0b1111, 0b0101, 0b1100, 0b1011});
  EXPECT_EQ(refine_restriction(h2), RestrictionTuple(4, {0b0101, 0b1000}));
  EXPECT_EQ(refine_restriction(RestrictionTuple::full(3, 6)), RestrictionTuple::full(3, 3));
}

TEST(Restriction, TildeFamilyOfExample) {
  const RestrictionTuple h(2, {0b11, 0b10, 0b01, 0b11, 0b11});
  const auto f = tilde_family(h);
  ASSERT_EQ(f.size(), 3u);
  EXPECT_EQ(format_restriction(f[0]), "(±~,∅,±)");
  EXPECT_EQ(format_restriction(f[1]), "(-,+~,±)");
  EXPECT_EQ(format_restriction(f[2]), "(-,+,±~)");
  EXPECT_TRUE(collect(FamilySpec::tilde(f[0])).empty());
}

TEST(Restriction, FullTildeFamilyPartitionsB) {
  for (int n = 0; n <= 3; ++n) {
    std::vector<ColoredPermutation> all;
    for (const auto& s : tilde_family(RestrictionTuple::full(2, 2 * n + 1))) {
      const auto part = collect(FamilySpec::tilde(s));
      all.insert(all.end(), part.begin(), part.end());
    }
    std::sort(all.begin(), all.end());
    EXPECT_EQ(all, collect(FamilySpec::hyperoctahedral(n + 1)));
  }
}

TEST(Restriction, EmptyOddEntryEmptiesItsTildeSet) {
  const RestrictionTuple h(2, {0b11, 0b11, 0, 0b11, 0b11});
  EXPECT_TRUE(collect(FamilySpec::tilde(tilde_family(h)[1])).empty());
}

TEST(Group, ComposeWithIdentityAndInverse) {
  for (int r = 1; r <= 3; ++r) {
    for (int n = 0; n <= 3; ++n) {
      const auto e = ColoredPermutation::identity(r, n);
      for (const auto& p : collect(FamilySpec::colored(r, n))) {
        EXPECT_EQ(compose(p, e), p);
        EXPECT_EQ(compose(e, p), p);
        EXPECT_EQ(compose(p, inverse(p)), e);
        EXPECT_EQ(compose(inverse(p), p), e);
      }
    }
  }
  const auto bar1 = parse_window("-1", 2);
  EXPECT_EQ(compose(bar1, bar1), ColoredPermutation::identity(2, 1));
}

TEST(Group, AssociativeOnSeededTriples) {
  std::mt19937_64 rng(20240611);
  for (int trial = 0; trial < 2000; ++trial) {
    const int r = 1 + static_cast<int>(rng() % 5);
    const int n = 1 + static_cast<int>(rng() % 7);
    const auto a = random_element(rng, r, n);
    const auto b = random_element(rng, r, n);
    const auto c = random_element(rng, r, n);
    ASSERT_EQ(compose(compose(a, b), c), compose(a, compose(b, c)));
  }
}

TEST(Group, Generators) {
  EXPECT_EQ(format_window(apply_generator(ColoredPermutation::identity(1, 3), 1)), "2 1 3");
  EXPECT_EQ(format_window(apply_generator(ColoredPermutation::identity(2, 1), 0)), "1[1]");
  EXPECT_EQ(format_window(apply_generator(ColoredPermutation::identity(2, 2), 0, GeneratorSet::kTypeD),
                          WindowStyle::kSigned),
            "-2 -1");
  // right multiplication by a generator agrees with composing the generator element
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 300; ++trial) {
    const int r = 1 + static_cast<int>(rng() % 4);
    const int n = 1 + static_cast<int>(rng() % 6);
    const auto p = random_element(rng, r, n);
    const int i = static_cast<int>(rng() % static_cast<unsigned>(n));
    const auto s = apply_generator(ColoredPermutation::identity(r, n), i);
    EXPECT_EQ(apply_generator(p, i), compose(p, s));
  }
}

TEST(Group, Absolute) {
  EXPECT_EQ(format_window(absolute(parse_window("-2 3 -5 -1 -4", 2))), "2 3 5 1 4");
  EXPECT_EQ(format_window(absolute(parse_window("5 1[1] 3 4[2] 2[1] 6[3]", 4))), "5 1 3 4 2 6");
}

}  // namespace
}  // namespace cperm
