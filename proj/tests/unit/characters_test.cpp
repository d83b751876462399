#include <gtest/gtest.h>

#include "cperm/characters.hpp"
#include "cperm/enumerate.hpp"
#include "cperm/statistics.hpp"

namespace cperm {
namespace {

TEST(Characters, HattedExampleValue) {
  // l = 9, col = 4 in G_{3,4}
  const auto p = parse_window("3[1] 1[2] 4 2[1]", 3);
  ASSERT_EQ(length(p, LengthFamily::kG), 9);
  for (int a = 0; a < 2; ++a) {
    for (int b = 0; b < 3; ++b) {
      const CharacterValue v = character_value({a, b, CharacterForm::kLength}, p);
      EXPECT_EQ(v.sign, a == 1 ? -1 : 1);
      EXPECT_EQ(v.omega_exp, (4 * b) % 3);
      EXPECT_EQ(chi({a, b, CharacterForm::kLength}, p), to_cyclotomic(3, v));
    }
  }
}

TEST(Characters, IdentityIsOne) {
  for (int r = 1; r <= 5; ++r) {
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < r; ++b) {
        for (auto form : {CharacterForm::kLength, CharacterForm::kClassical}) {
          EXPECT_EQ(chi({a, b, form}, ColoredPermutation::identity(r, 4)), CyclotomicInt(r, 1L));
        }
      }
    }
  }
}

TEST(Characters, RejectsBadLabels) {
  const auto p = ColoredPermutation::identity(3, 2);
  EXPECT_THROW(chi({2, 0, CharacterForm::kLength}, p), std::invalid_argument);
  EXPECT_THROW(chi({0, 3, CharacterForm::kLength}, p), std::invalid_argument);
}

TEST(Characters, SignedPermutationTable) {
  for (int n = 1; n <= 4; ++n) {
    for (const auto& p : collect(FamilySpec::hyperoctahedral(n))) {
      const auto c01 = character_value({0, 1, CharacterForm::kLength}, p);
      const auto c11 = character_value({1, 1, CharacterForm::kLength}, p);
      EXPECT_EQ(c01.sign * (c01.omega_exp == 0 ? 1 : -1), fast::neg(p) % 2 == 1 ? -1 : 1);
      EXPECT_EQ(c11.sign * (c11.omega_exp == 0 ? 1 : -1), fast::len_B(p) % 2 == 1 ? -1 : 1);
    }
  }
}

TEST(Characters, MultiplicativeOnSmallGroups) {
  for (int r = 1; r <= 3; ++r) {
    const auto elems = collect(FamilySpec::colored(r, 3));
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < r; ++b) {
        for (auto form : {CharacterForm::kLength, CharacterForm::kClassical}) {
          for (const auto& p : elems) {
            for (const auto& q : elems) {
              ASSERT_EQ(chi({a, b, form}, compose(p, q)), chi({a, b, form}, p) * chi({a, b, form}, q));
            }
          }
        }
      }
    }
  }
}

TEST(Characters, LabelCorrespondenceIsOnto) {
  for (int r = 1; r <= 4; ++r) {
    const auto corr = label_correspondence(r, 3);
    ASSERT_EQ(corr.size(), static_cast<std::size_t>(2 * r));
    for (const auto& m : corr) EXPECT_EQ(m.size(), 1u);
    // the b-part is preserved: both forms carry w^{b col}
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < r; ++b) EXPECT_EQ(corr[static_cast<std::size_t>(a * r + b)][0].second, b);
    }
  }
}

}  // namespace
}  // namespace cperm
