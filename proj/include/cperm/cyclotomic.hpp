#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <vector>

namespace cperm {

/// Coefficients of the r-th cyclotomic polynomial, constant term first.
const std::vector<std::int64_t>& cyclotomic_polynomial(int r);

int euler_phi(int r);

/// An element of Z[w], w a primitive r-th root of unity, stored as its
/// residue modulo the r-th cyclotomic polynomial (degree < phi(r)).
/// Equality is coefficient equality.
class CyclotomicInt {
 public:
  CyclotomicInt() : CyclotomicInt(1) {}
  explicit CyclotomicInt(int r);
  CyclotomicInt(int r, long value);
  CyclotomicInt(int r, const mpz_class& value);

  /// Reduces an arbitrary polynomial in w.
  static CyclotomicInt from_poly(int r, std::vector<mpz_class> coeffs);

  /// sum_e counts[e] * w^e for e in [0, r).
  static CyclotomicInt from_group_ring(int r, const std::int64_t* counts);

  int order() const noexcept { return r_; }
  const std::vector<mpz_class>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept;

  CyclotomicInt& operator+=(const CyclotomicInt& o);
  CyclotomicInt& operator-=(const CyclotomicInt& o);
  CyclotomicInt& operator*=(const CyclotomicInt& o);

  friend CyclotomicInt operator+(CyclotomicInt a, const CyclotomicInt& b) { return a += b; }
  friend CyclotomicInt operator-(CyclotomicInt a, const CyclotomicInt& b) { return a -= b; }
  friend CyclotomicInt operator*(CyclotomicInt a, const CyclotomicInt& b) { return a *= b; }
  CyclotomicInt operator-() const;

  friend bool operator==(const CyclotomicInt& a, const CyclotomicInt& b) noexcept {
    return a.r_ == b.r_ && a.c_ == b.c_;
  }

  /// "3", "1 - 2w", "w^2 + 1"; highest power first.
  std::string to_string() const;

 private:
  void check_same(const CyclotomicInt& o) const;

  int r_;
  std::vector<mpz_class> c_;
};

/// Canonical residue of w^(e mod r).
CyclotomicInt omega_power(int r, long long e);

/// Canonical residue of w^e for e in [0, r) as small integers.
const std::vector<std::vector<std::int64_t>>& omega_table(int r);

}  // namespace cperm
