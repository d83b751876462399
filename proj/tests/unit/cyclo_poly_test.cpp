#include <gtest/gtest.h>

#include <random>

#include "cperm/cyclotomic.hpp"
#include "cperm/enumerate.hpp"
#include "cperm/poly.hpp"
#include "cperm/series.hpp"
#include "cperm/statistics.hpp"

namespace cperm {
namespace {

using Coeffs = std::vector<std::int64_t>;

CyclotomicInt w(int r, long long e) { return omega_power(r, e); }
CyclotomicInt k(int r, long v) { return CyclotomicInt(r, v); }

TEST(Cyclotomic, MinimalPolynomials) {
  EXPECT_EQ(cyclotomic_polynomial(1), (Coeffs{-1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(2), (Coeffs{1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(4), (Coeffs{1, 0, 1}));
  EXPECT_EQ(cyclotomic_polynomial(6), (Coeffs{1, -1, 1}));
  EXPECT_EQ(cyclotomic_polynomial(12), (Coeffs{1, 0, -1, 0, 1}));
  for (int r = 1; r <= 32; ++r) {
    EXPECT_EQ(static_cast<int>(cyclotomic_polynomial(r).size()) - 1, euler_phi(r));
  }
}

TEST(Cyclotomic, PowersOfOmega) {
  EXPECT_EQ(w(2, 1), k(2, -1));
  EXPECT_EQ(w(4, 2), k(4, -1));
  EXPECT_EQ(w(3, 3), k(3, 1));
  EXPECT_EQ(w(5, -1), w(5, 4));
  for (int r = 1; r <= 12; ++r) {
    CyclotomicInt sum(r);
    for (int e = 0; e < r; ++e) sum += w(r, e);
    // the r-th roots of unity sum to zero unless r = 1
    EXPECT_EQ(sum, r == 1 ? k(1, 1) : CyclotomicInt(r)) << "r=" << r;
  }
}

TEST(Cyclotomic, Arithmetic) {
  EXPECT_EQ((k(4, 1) + w(4, 1)) * (k(4, 1) - w(4, 1)), k(4, 2));
  const auto a = k(5, 3) + w(5, 2) * k(5, -7);
  EXPECT_TRUE((a + (-a)).is_zero());
  EXPECT_EQ(w(3, 1) + w(3, 2), k(3, -1));
  EXPECT_THROW(k(3, 1) + k(4, 1), std::invalid_argument);
}

TEST(Cyclotomic, GroupRingReduction) {
  const std::int64_t counts[4] = {2, 0, 1, 0};  // 2 + w^2 at r = 4 is 1
  EXPECT_EQ(CyclotomicInt::from_group_ring(4, counts), k(4, 1));
}

TEST(Cyclotomic, RingAxiomsOnSeededValues) {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<int> coef(-5, 5);
  for (int trial = 0; trial < 500; ++trial) {
    const int r = 1 + static_cast<int>(rng() % 12);
    auto any = [&] {
      CyclotomicInt x(r);
      for (int e = 0; e < r; ++e) x += w(r, e) * k(r, coef(rng));
      return x;
    };
    const auto a = any();
    const auto b = any();
    const auto c = any();
    ASSERT_EQ(a * (b + c), a * b + a * c);
    ASSERT_EQ((a * b) * c, a * (b * c));
    ASSERT_EQ(a * b, b * a);
  }
}

Poly tq(std::initializer_list<std::pair<Poly::Exponents, long>> terms) {
  Poly p(1, {"t", "q"});
  for (const auto& [e, c] : terms) p.add_term(e, k(1, c));
  return p;
}

TEST(Poly, ProductsAndZero) {
  Poly t(1, {"t"});
  t.add_term({0}, k(1, 1));
  Poly minus = t;
  Poly plus = t;
  minus.add_term({1}, k(1, -1));
  plus.add_term({1}, k(1, 1));
  Poly expect(1, {"t"});
  expect.add_term({0}, k(1, 1));
  expect.add_term({2}, k(1, -1));
  EXPECT_EQ(minus * plus, expect);
  EXPECT_TRUE((minus * Poly(1, {"t"})).is_zero());
  EXPECT_EQ(tq({{{0, 0}, 1}, {{1, 1}, -1}}) * tq({{{0, 0}, 1}, {{1, 0}, -1}}),
            tq({{{0, 0}, 1}, {{1, 0}, -1}, {{1, 1}, -1}, {{2, 1}, 1}}));
}

TEST(Poly, ProductOneMinus) {
  EXPECT_EQ(product_one_minus(1, 2, {2}), tq({{{0, 0}, 1}, {{2, 2}, -1}}));
  EXPECT_EQ(product_one_minus(1, 2, {0, 0}), tq({{{0, 0}, 1}, {{2, 0}, -2}, {{4, 0}, 1}}));
  // expanded over subsets A of {0,1,2}: (-t)^|A| q^{sum A}
  Poly expect(1, {"t", "q"});
  for (unsigned a = 0; a < 8; ++a) {
    const std::uint32_t size = static_cast<std::uint32_t>(__builtin_popcount(a));
    std::uint32_t sum = 0;
    for (std::uint32_t i = 0; i < 3; ++i) sum += ((a >> i) & 1U) * i;
    expect.add_term({size, sum}, k(1, size % 2 == 1 ? -1 : 1));
  }
  EXPECT_EQ(product_one_minus(1, 1, {0, 1, 2}), expect);
}

TEST(Poly, SignedMahonianProduct) {
  Poly one(1, {"q"});
  one.add_term({0}, k(1, 1));
  EXPECT_EQ(gessel_simion_rhs(1), one);
  Poly two = one;
  two.add_term({1}, k(1, -1));
  EXPECT_EQ(gessel_simion_rhs(2), two);
  // brute force over S_4
  Poly brute(1, {"q"});
  for (const auto& p : collect(FamilySpec::symmetric(4))) {
    const auto d = descent_data(p, OrderTag::kNatural, DescentPrefix::kNone);
    brute.add_term({static_cast<std::uint32_t>(d.index_sum)},
                   k(1, inversions(p, OrderTag::kNatural) % 2 == 1 ? -1 : 1));
  }
  EXPECT_EQ(gessel_simion_rhs(4), brute);
}

TEST(Poly, SpecializeAndMerge) {
  const Poly p = tq({{{2, 1}, 3}, {{1, 1}, -1}, {{0, 4}, 2}});
  Poly at_one(1, {"q"});
  at_one.add_term({1}, k(1, 2));
  at_one.add_term({4}, k(1, 2));
  EXPECT_EQ(p.specialize(0, 1), at_one);
  Poly merged(1, {"z"});
  merged.add_term({3}, k(1, 3));
  merged.add_term({2}, k(1, -1));
  merged.add_term({4}, k(1, 2));
  EXPECT_EQ(p.merge_slots(0, 2, "z"), merged);
}

TEST(Accumulator, BoundsAreEnforced) {
  MonomialAccumulator acc(3, {"t"}, {2});
  const std::uint32_t ok[1] = {2};
  const std::uint32_t bad[1] = {3};
  acc.add(ok, 1, 5);
  EXPECT_THROW(acc.add(bad, 0, 1), std::logic_error);
  Poly expect(3, {"t"});
  expect.add_term({2}, w(3, 1) * k(3, 5));
  EXPECT_EQ(acc.to_poly(), expect);
}

TEST(Series, Examples) {
  const auto posi = TruncatedSeries::posi2(1, 3);
  EXPECT_EQ(posi, TruncatedSeries(3, {1, 2, 6, 8}));
  EXPECT_EQ(TruncatedSeries(3, {1}) / TruncatedSeries::one_minus(1, 0, 3), TruncatedSeries(3, {1, 1, 1, 1}));
  EXPECT_EQ(TruncatedSeries::nepo(1, 4), TruncatedSeries(4, {1, 0, 3, 0, 5}));
}

TEST(Series, ClosedFormsFromTheirDefinitions) {
  for (int n = 0; n <= 4; ++n) {
    std::vector<mpz_class> posi;
    std::vector<mpz_class> nega;
    std::vector<mpz_class> brenti;
    for (int j = 0; j <= 10; ++j) {
      mpz_class pw;
      mpz_ui_pow_ui(pw.get_mpz_t(), static_cast<unsigned long>(j + 1), static_cast<unsigned long>(n));
      posi.push_back(pw * ((j + 2) / 2));
      nega.push_back(pw * ((j + 1) / 2));
      mpz_class odd;
      mpz_ui_pow_ui(odd.get_mpz_t(), static_cast<unsigned long>(2 * j + 1), static_cast<unsigned long>(n));
      brenti.push_back(odd);
    }
    EXPECT_EQ(TruncatedSeries::posi2(n, 10), TruncatedSeries(10, posi));
    EXPECT_EQ(TruncatedSeries::nega2(n, 10), TruncatedSeries(10, nega));
    EXPECT_EQ(TruncatedSeries::brenti(n, 10), TruncatedSeries(10, brenti));
  }
}

TEST(Series, DivisionInvertsMultiplication) {
  const TruncatedSeries a(6, {3, -1, 4, 1, -5, 9, 2});
  const TruncatedSeries d = TruncatedSeries::one_minus(2, 1, 6) * TruncatedSeries::one_minus(1, 0, 6);
  EXPECT_EQ((a * d) / d, a);
  EXPECT_THROW(a / TruncatedSeries(6, {2, 1}), std::domain_error);
}

}  // namespace
}  // namespace cperm
