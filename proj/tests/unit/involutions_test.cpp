#include <gtest/gtest.h>

#include <algorithm>

#include "cperm/bijections.hpp"
#include "cperm/enumerate.hpp"
#include "cperm/involutions.hpp"
#include "cperm/statistics.hpp"

namespace cperm {
namespace {

std::string apply(InvolutionTag tag, const char* window, int r = 2) {
  const auto p = parse_window(window, r);
  return format_window(involute(tag, p), r == 2 ? WindowStyle::kSigned : WindowStyle::kBrackets);
}

std::vector<std::string> fixed(InvolutionTag tag, int size) {
  std::vector<std::string> out;
  for (const auto& p : fixed_points({tag, 2, size, std::nullopt})) out.push_back(format_window(p, WindowStyle::kSigned));
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<std::string> sorted(std::vector<std::string> v) {
  std::sort(v.begin(), v.end());
  return v;
}

TEST(Phi, Examples) {
  EXPECT_EQ(apply(InvolutionTag::kPhi, "5 1[1] 3 4[2] 2[1] 6[3]", 4), "5 2[1] 3 4[2] 1[1] 6[3]");
  EXPECT_EQ(apply(InvolutionTag::kPhi, "5 2[1] 1[1] 6[3] 4 3[2]", 4), "5 2[1] 1[1] 6[3] 3 4[2]");
  EXPECT_EQ(apply(InvolutionTag::kPhi, "5 6 2[3] 1[3] 4[1] 3[1]", 4), "5 6 2[3] 1[3] 4[1] 3[1]");
}

TEST(Eta, Examples) {
  EXPECT_EQ(apply(InvolutionTag::kEta, "2 1 -5 6 3 -4"), "2 1 -6 5 3 -4");
  EXPECT_EQ(apply(InvolutionTag::kEta, "2 1 -3 -4 -5 -6"), "2 1 -3 -4 -6 -5");
  // The third textbook input has three negative entries, so it lies outside
  // D_6; the swap rule itself would give 2 1 -4 -5 6 -3.
  EXPECT_THROW(apply(InvolutionTag::kEta, "2 1 -3 -5 6 -4"), std::domain_error);
  EXPECT_EQ(apply(InvolutionTag::kEta, "2 1 -3 -5 6 4"), "2 1 -4 -5 6 3");
}

TEST(Iota, Examples) {
  EXPECT_EQ(apply(InvolutionTag::kIota, "5 8 -7 -1 -2 9 6 3 -4"), "6 8 -7 -1 -2 9 5 3 -4");
  EXPECT_EQ(apply(InvolutionTag::kIota, "5 8 -7 -1 -2 9 6 -3 4"), "5 8 -7 -1 -2 9 6 -4 3");
}

TEST(PsiB, Examples) {
  EXPECT_EQ(apply(InvolutionTag::kPsiB, "-2 1 3 -5 6 4"), "-1 2 3 -5 6 4");
  EXPECT_EQ(apply(InvolutionTag::kPsiB, "-1 -2 5 -3 6 -4"), "-1 -2 5 -4 6 -3");
  EXPECT_EQ(apply(InvolutionTag::kPsiB, "-2 -1 6 3 4 5"), "-2 -1 6 -4 -3 5");
}

TEST(Theta, Examples) {
  EXPECT_EQ(apply(InvolutionTag::kTheta, "-1 2 5 -4 -3"), "-1 2 5 -4 3");
  EXPECT_EQ(apply(InvolutionTag::kTheta, "-1 2 -3 4 5"), "-1 2 -3 4 5");
}

TEST(FixedPoints, PrintedSets) {
  EXPECT_EQ(fixed(InvolutionTag::kIota, 3),
            sorted({"1 2 3", "2 1 3", "3 1 2", "3 2 1", "-1 -2 3", "-2 -1 3", "-3 1 -2", "-3 2 -1"}));
  EXPECT_EQ(fixed(InvolutionTag::kPsiD, 3),
            sorted({"1 2 3", "-1 -2 3", "2 1 3", "-2 -1 3", "1 -2 -3", "-1 2 -3", "2 -1 -3", "-2 1 -3"}));
  EXPECT_EQ(fixed(InvolutionTag::kPsiB, 2), sorted({"1 2", "-1 -2", "2 1", "-2 -1"}));
}

TEST(FixedPoints, StructuralEqualsFilter) {
  for (auto tag : {InvolutionTag::kEta, InvolutionTag::kIota, InvolutionTag::kPsiB, InvolutionTag::kPsiD,
                   InvolutionTag::kTheta, InvolutionTag::kPhi}) {
    for (int size = 1; size <= 5; ++size) {
      const InvolutionDomain d{tag, 2, size, std::nullopt};
      try {
        d.validate();
      } catch (const std::invalid_argument&) {
        continue;
      }
      std::vector<ColoredPermutation> filtered;
      enumerate(d.family(), [&](const ColoredPermutation& p) {
        if (involute(tag, p) == p) filtered.push_back(p);
      });
      std::sort(filtered.begin(), filtered.end());
      EXPECT_EQ(fixed_points(d), filtered) << to_string(tag) << " size " << size;
    }
  }
}

TEST(Involutions, DomainErrors) {
  EXPECT_THROW(involute(InvolutionTag::kEta, parse_window("-1 2", 2)), std::domain_error);
  EXPECT_THROW(involute(InvolutionTag::kEta, parse_window("1 2 3", 2)), std::domain_error);
  EXPECT_THROW(involute(InvolutionTag::kTheta, parse_window("1[2] 2", 3)), std::domain_error);
  EXPECT_EQ(parse_involution_tag("psi-d"), InvolutionTag::kPsiD);
  EXPECT_THROW(parse_involution_tag("sigma"), std::invalid_argument);
}

TEST(Hats, GEvenExample) {
  const auto p = parse_window("5[1] 6[1] 2[2] 1[2] 8 7 4[1] 3[1]", 3);
  const auto h = hat_forward(HatVariant::kGEven, p);
  EXPECT_EQ(format_window(h.base), "3[1] 1[2] 4 2[1]");
  EXPECT_EQ(h.hats, 0b1110u);
  EXPECT_EQ(format_hatted(h), "3[1] 1^[2] 4^ 2^[1]");
  const auto f = flag_stats(h.base);
  EXPECT_EQ(length(h.base, LengthFamily::kG), 9);
  EXPECT_EQ(f.des_set, (std::vector<int>{1, 3}));
  EXPECT_EQ(f.fdes, 7);
  EXPECT_EQ(f.fmaj, 16);
  EXPECT_EQ(f.col, 4);
  EXPECT_EQ(hat_backward(HatVariant::kGEven, h), p);
  const auto part = hat_partition(h);
  EXPECT_EQ(part.positions, (std::vector<int>{2, 3, 4}));
  EXPECT_EQ(part.uncolored, (std::vector<int>{3}));
  EXPECT_EQ(part.colored, (std::vector<int>{2, 4}));
}

TEST(Hats, BOddExample) {
  const auto p = parse_window("-5 -6 -2 -1 8 7 9 -4 -3", 2);
  const auto h = hat_forward(HatVariant::kBOdd, p);
  EXPECT_EQ(format_window(h.base, WindowStyle::kSigned), "-3 -1 4 5 -2");
  EXPECT_EQ(h.hats, 0b10110u);
  EXPECT_EQ(inversions(absolute(h.base), OrderTag::kNatural), 4);
  EXPECT_EQ(flag_stats(h.base).des_set, (std::vector<int>{1, 4}));
  EXPECT_EQ(flag_stats(h.base).fdes, 5);
  const auto part = hat_partition(h);
  EXPECT_EQ(part.positions, (std::vector<int>{2, 3, 5}));
  EXPECT_EQ(part.letters, (std::vector<int>{1, 2, 4}));
  EXPECT_EQ(part.positive, (std::vector<int>{3}));
  EXPECT_EQ(part.negative, (std::vector<int>{2, 5}));
  EXPECT_EQ(hat_backward(HatVariant::kBOdd, h), p);
}

TEST(Hats, DExamples) {
  const auto even = parse_window("2 1 -5 -6 8 7 4 3", 2);
  const auto he = hat_forward(HatVariant::kDEven, even);
  EXPECT_EQ(format_window(he.base, WindowStyle::kSigned), "1 -3 4 -2");
  EXPECT_EQ(he.hats, 0b1101u);
  EXPECT_EQ(hat_backward(HatVariant::kDEven, he), even);

  const auto odd = parse_window("2 1 -5 -6 8 7 4 3 9", 2);
  const auto ho = hat_forward(HatVariant::kDOdd, odd);
  EXPECT_EQ(format_window(ho.base, WindowStyle::kSigned), "1 -3 4 2 -5");
  EXPECT_EQ(ho.hats, 0b1101u);
  EXPECT_EQ(hat_backward(HatVariant::kDOdd, ho), odd);
}

TEST(Hats, IdentityWithoutHatsDoubles) {
  const HattedPermutation h{ColoredPermutation::identity(3, 3), 0};
  EXPECT_EQ(hat_backward(HatVariant::kGEven, h), ColoredPermutation::identity(3, 6));
  EXPECT_TRUE(hat_partition(h).positions.empty());
}

TEST(Hats, RejectsNonFixedPoints) {
  EXPECT_THROW(hat_forward(HatVariant::kGEven, parse_window("5 1[1] 3 4[2] 2[1] 6[3]", 4)), std::invalid_argument);
  const auto base = parse_window("1 2", 2);
  EXPECT_THROW(hat_backward(HatVariant::kBOdd, HattedPermutation{base, 0b10}), std::invalid_argument);
}

TEST(Hats, RoundTripsEverySmallFixedPoint) {
  for (int r = 1; r <= 3; ++r) {
    for (const auto& p : fixed_points({InvolutionTag::kPhi, r, 6, std::nullopt})) {
      ASSERT_EQ(hat_backward(HatVariant::kGEven, hat_forward(HatVariant::kGEven, p)), p);
    }
  }
  for (const auto& p : fixed_points({InvolutionTag::kPhi, 2, 7, std::nullopt})) {
    ASSERT_EQ(hat_backward(HatVariant::kBOdd, hat_forward(HatVariant::kBOdd, p)), p);
  }
  for (const auto& p : fixed_points({InvolutionTag::kEta, 2, 6, std::nullopt})) {
    ASSERT_EQ(hat_backward(HatVariant::kDEven, hat_forward(HatVariant::kDEven, p)), p);
  }
  for (const auto& p : fixed_points({InvolutionTag::kIota, 2, 7, std::nullopt})) {
    ASSERT_EQ(hat_backward(HatVariant::kDOdd, hat_forward(HatVariant::kDOdd, p)), p);
  }
}

TEST(Barred, MinimalExample) {
  const auto b = min_barred(parse_window("-2 -3 1 -5 -4", 2));
  EXPECT_EQ(b.bars, (std::vector<int>{0, 0, 1, 1, 2, 1}));
  EXPECT_EQ(b.total(), 5);
  EXPECT_EQ(b.total(), flag_stats(b.base).fdes);
  EXPECT_EQ(format_barred(b), "-2 -3 | 1 | -5 || -4 |");
  EXPECT_EQ(min_barred(ColoredPermutation::identity(2, 4)).total(), 0);
  EXPECT_EQ(min_barred(parse_window("-1", 2)).bars, (std::vector<int>{0, 1}));
}

TEST(Barred, CountsMatchClosedForms) {
  EXPECT_EQ(count_barred(1, 0, MaxSign::kPlus), 1u);
  EXPECT_EQ(count_barred(1, 1, MaxSign::kPlus), 2u);
  EXPECT_EQ(count_barred(1, 1, MaxSign::kMinus), 2u);
  EXPECT_EQ(count_barred(2, 2, MaxSign::kPlus), 18u);
  for (int n = 1; n <= 3; ++n) {
    for (int k = 0; k <= 6; ++k) {
      std::uint64_t pw = 1;
      for (int i = 0; i < n; ++i) pw *= static_cast<std::uint64_t>(k + 1);
      EXPECT_EQ(count_barred(n, k, MaxSign::kPlus), pw * static_cast<std::uint64_t>((k + 2) / 2));
      EXPECT_EQ(count_barred(n, k, MaxSign::kMinus), pw * static_cast<std::uint64_t>((k + 1) / 2));
      EXPECT_EQ(count_barred_by_definition(n, k, MaxSign::kPlus), count_barred(n, k, MaxSign::kPlus));
      EXPECT_EQ(count_barred_by_definition(n, k, MaxSign::kMinus), count_barred(n, k, MaxSign::kMinus));
    }
  }
}

}  // namespace
}  // namespace cperm
