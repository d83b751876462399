#include "cperm/series.hpp"

#include <stdexcept>

namespace cperm {

namespace {

mpz_class power(long base, int e) {
  mpz_class out;
  mpz_ui_pow_ui(out.get_mpz_t(), static_cast<unsigned long>(base), static_cast<unsigned long>(e));
  return out;
}

void check_cap(int cap) {
  if (cap < 0) throw std::invalid_argument("series cap must be nonnegative");
}

}  // namespace

TruncatedSeries::TruncatedSeries(int cap) {
  check_cap(cap);
  c_.assign(static_cast<std::size_t>(cap) + 1, mpz_class(0));
}

TruncatedSeries::TruncatedSeries(int cap, std::vector<mpz_class> coeffs) : TruncatedSeries(cap) {
  for (std::size_t k = 0; k < c_.size() && k < coeffs.size(); ++k) c_[k] = std::move(coeffs[k]);
}

TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.cap() != b.cap()) throw std::invalid_argument("series caps differ");
  TruncatedSeries out(a.cap());
  const std::size_t len = out.c_.size();
  for (std::size_t i = 0; i < len; ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; i + j < len; ++j) out.c_[i + j] += a.c_[i] * b.c_[j];
  }
  return out;
}

TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b) {
  if (a.cap() != b.cap()) throw std::invalid_argument("series caps differ");
  const mpz_class& lead = b.c_[0];
  if (lead != 1 && lead != -1) throw std::domain_error("divisor is not a unit at t = 0");
  TruncatedSeries out(a.cap());
  for (std::size_t k = 0; k < out.c_.size(); ++k) {
    mpz_class v = a.c_[k];
    for (std::size_t j = 1; j <= k; ++j) v -= b.c_[j] * out.c_[k - j];
    out.c_[k] = v * lead;  // lead is its own inverse
  }
  return out;
}

TruncatedSeries TruncatedSeries::posi2(int n, int cap) {
  TruncatedSeries s(cap);
  for (int k = 0; k <= cap; ++k) s.c_[k] = power(k + 1, n) * ((k + 2) / 2);
  return s;
}

TruncatedSeries TruncatedSeries::nega2(int n, int cap) {
  TruncatedSeries s(cap);
  for (int k = 0; k <= cap; ++k) s.c_[k] = power(k + 1, n) * ((k + 1) / 2);
  return s;
}

TruncatedSeries TruncatedSeries::nepo(int n, int cap) {
  TruncatedSeries s(cap);
  for (int k = 0; 2 * k <= cap; ++k) s.c_[2 * k] = power(2 * k + 1, n);
  return s;
}

TruncatedSeries TruncatedSeries::brenti(int n, int cap) {
  TruncatedSeries s(cap);
  for (int k = 0; k <= cap; ++k) s.c_[k] = power(2 * k + 1, n);
  return s;
}

TruncatedSeries TruncatedSeries::one_minus(int a, int b, int cap) {
  if (a < 0 || b < 0) throw std::invalid_argument("negative exponent");
  TruncatedSeries out(cap);
  out.c_[0] = 1;
  TruncatedSeries f1(cap);
  f1.c_[0] = 1;
  if (cap >= 1) f1.c_[1] = -1;
  TruncatedSeries f2(cap);
  f2.c_[0] = 1;
  if (cap >= 2) f2.c_[2] = -1;
  for (int i = 0; i < a; ++i) out = out * f1;
  for (int i = 0; i < b; ++i) out = out * f2;
  return out;
}

}  // namespace cperm
