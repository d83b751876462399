#include <gtest/gtest.h>

#include <set>

#include "cperm/identities.hpp"
#include "cperm/json_io.hpp"

namespace cperm {
namespace {

IdentityParams with(std::optional<int> r, std::optional<int> n, std::optional<int> b = std::nullopt) {
  IdentityParams p;
  p.r = r;
  p.n = n;
  p.b = b;
  return p;
}

RestrictionTuple signs(std::vector<ColorMask> e) { return RestrictionTuple(2, std::move(e)); }

constexpr ColorMask kPlus = 1;
constexpr ColorMask kMinus = 2;
constexpr ColorMask kBoth = 3;

TEST(Catalog, ListingIsLargeAndUnique) {
  const auto& all = list_identities();
  EXPECT_GE(all.size(), 24u);
  std::set<std::string> ids;
  for (const auto& i : all) ids.insert(i.id);
  EXPECT_EQ(ids.size(), all.size());
  EXPECT_EQ(identity_info("macmahon").required, (std::vector<std::string>{"n"}));
  EXPECT_THROW(identity_info("no-such-id"), std::invalid_argument);
}

TEST(Catalog, EveryIdVerifiesAtSmallestParams) {
  for (const auto& info : list_identities()) {
    const auto rep = verify(info.id, info.smallest);
    EXPECT_TRUE(rep.equal) << info.id << ": " << rep.lhs.to_string() << " vs " << rep.rhs.to_string();
    EXPECT_EQ(rep.id, info.id);
  }
}

TEST(Verify, SmallWorkedCases) {
  const auto a = verify("A-even", with(std::nullopt, 1));
  EXPECT_TRUE(a.equal);
  EXPECT_EQ(a.lhs.to_string(), "1 - t");
  EXPECT_EQ(a.elements, 2u);

  const auto bgf = verify("B-GF-length", with(std::nullopt, 2));
  EXPECT_TRUE(bgf.equal);
  EXPECT_EQ(bgf.lhs.to_string(), "1 - t - t*q + t^2*q");
  EXPECT_EQ(bgf.elements, 8u);

  const auto dgf = verify("D-GF", with(std::nullopt, 2));
  EXPECT_TRUE(dgf.equal);
  EXPECT_EQ(dgf.lhs.to_string(), "1 - t - t*q + t^2*q");
  EXPECT_EQ(dgf.elements, 4u);

  const auto g = verify("G-main-even", with(3, 1, 1));
  EXPECT_TRUE(g.equal);
  EXPECT_EQ(g.elements, 18u);
}

TEST(Verify, GeneratingFunctionsOverSeveralSizes) {
  for (int n = 1; n <= 6; ++n) {
    for (const char* id : {"B-GF-length", "B-GF-neg", "B-GF-absinv", "D-GF"}) {
      EXPECT_TRUE(verify(id, with(std::nullopt, n)).equal) << id << " n=" << n;
    }
  }
  EXPECT_EQ(verify("D-GF", with(std::nullopt, 1)).lhs.to_string(), "1");
}

TEST(Verify, DistinctVariableTypeD) {
  const auto rep = verify("D-EM-even-refined", with(std::nullopt, 2));
  EXPECT_TRUE(rep.equal);
  EXPECT_EQ(rep.elements, 192u);
}

TEST(Verify, CancellationLemmas) {
  EXPECT_TRUE(cancellation_check("cancel-B-absinv", with(std::nullopt, 2)).equal);
  EXPECT_TRUE(cancellation_check("cancel-phi", with(2, 2, 1)).equal);
  EXPECT_TRUE(cancellation_check("cancel-theta-length", with(std::nullopt, 3)).equal);
  EXPECT_THROW(cancellation_check("A-even", with(std::nullopt, 1)), std::invalid_argument);
}

TEST(Refined, OddSignedRestriction) {
  const auto h = signs({kBoth, kMinus, kPlus, kBoth, kBoth});
  EXPECT_TRUE(verify_refined("B-odd-absinv-refined", h, with(std::nullopt, 2)).equal);
}

TEST(Refined, FullRestrictionCollapsesToPlain) {
  const auto refined = verify_refined("G-main-even-refined", RestrictionTuple::full(3, 4), with(3, 2, 2));
  const auto plain = verify("G-main-even", with(3, 2, 2));
  ASSERT_TRUE(refined.equal);
  EXPECT_EQ(refined.lhs.merge_slots(2, 4, "x"), plain.lhs);
  EXPECT_EQ(refined.rhs.merge_slots(2, 4, "x"), plain.rhs);
}

TEST(Refined, EmptyEntryGivesZeroSides) {
  const auto rep = verify_refined("G-main-even-refined", RestrictionTuple(2, {3, 0, 3, 3}), with(2, 2, 0));
  EXPECT_TRUE(rep.equal);
  EXPECT_TRUE(rep.lhs.is_zero());
}

TEST(Schema, ViolationsThrow) {
  EXPECT_THROW(verify("A-even", {}), std::invalid_argument);
  EXPECT_THROW(verify("G-main-even", with(3, 1, 3)), std::invalid_argument);
  EXPECT_THROW(verify("G-main-even", with(3, 1)), std::invalid_argument);
  EXPECT_THROW(verify("lin-posi2", with(std::nullopt, 2)), std::invalid_argument);
  EXPECT_THROW(verify("no-such-id", with(std::nullopt, 1)), std::invalid_argument);
  EXPECT_THROW(verify_refined("B-odd-absinv-refined", signs({kBoth, kBoth}), with(std::nullopt, 2)), std::invalid_argument);
}

TEST(Tamper, OnlyTheNamedIdBreaks) {
  const VerifyOptions tamper{1, "B-GF-length"};
  EXPECT_FALSE(verify("B-GF-length", with(std::nullopt, 3), tamper).equal);
  EXPECT_TRUE(verify("B-GF-absinv", with(std::nullopt, 3), tamper).equal);
  EXPECT_TRUE(verify("D-odd-length", with(std::nullopt, 1), tamper).equal);
}

TEST(Determinism, JsonIndependentOfJobs) {
  for (const auto& [id, p] : std::vector<std::pair<std::string, IdentityParams>>{
           {"G-main-odd", with(3, 2, 1)}, {"D-odd-length", with(std::nullopt, 2)}, {"B-EM-absinv", with(std::nullopt, 3)}}) {
    const auto one = dump(to_json(verify(id, p, {1, {}}), false));
    EXPECT_EQ(one, dump(to_json(verify(id, p, {1, {}}), false)));
    EXPECT_EQ(one, dump(to_json(verify(id, p, {4, {}}), false))) << id;
  }
}

// At t = 1 both sides of the signed Euler-Mahonian identity reduce to the
// signed Mahonian count, which is independent of the descent variable.
TEST(Coherence, EulerMahonianAtTEqualsOne) {
  for (int n = 1; n <= 3; ++n) {
    const auto rep = verify("A-EM", with(std::nullopt, n));
    ASSERT_TRUE(rep.equal);
    const Poly at_one = rep.lhs.specialize(0, 1);
    EXPECT_EQ(at_one, rep.rhs.specialize(0, 1));
  }
}

TEST(Series, TruncatedIdsAgree) {
  for (const char* id : {"lin-posi2", "lin-nega2", "lin-nepo", "brenti-series"}) {
    for (int n = 1; n <= 4; ++n) {
      IdentityParams p = with(std::nullopt, n);
      p.K = 7;
      EXPECT_TRUE(verify(id, p).equal) << id << " n=" << n;
    }
  }
}

}  // namespace
}  // namespace cperm
