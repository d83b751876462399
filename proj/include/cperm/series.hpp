#pragma once

#include <gmpxx.h>

#include <vector>

namespace cperm {

/// Power series in t truncated after t^K.
class TruncatedSeries {
 public:
  explicit TruncatedSeries(int cap);
  TruncatedSeries(int cap, std::vector<mpz_class> coeffs);  // extra terms dropped, missing ones zero

  int cap() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<mpz_class>& coeffs() const noexcept { return c_; }
  const mpz_class& operator[](int k) const { return c_.at(static_cast<std::size_t>(k)); }

  friend TruncatedSeries operator*(const TruncatedSeries& a, const TruncatedSeries& b);
  /// Requires b's constant term to be +1 or -1.
  friend TruncatedSeries operator/(const TruncatedSeries& a, const TruncatedSeries& b);
  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) { return a.c_ == b.c_; }

  /// sum_k (k+1)^n ceil((k+1)/2) t^k
  static TruncatedSeries posi2(int n, int cap);
  /// sum_k (k+1)^n floor((k+1)/2) t^k
  static TruncatedSeries nega2(int n, int cap);
  /// sum_k (2k+1)^n t^{2k}
  static TruncatedSeries nepo(int n, int cap);
  /// sum_k (2k+1)^n t^k
  static TruncatedSeries brenti(int n, int cap);
  /// (1-t)^a (1-t^2)^b
  static TruncatedSeries one_minus(int a, int b, int cap);

 private:
  std::vector<mpz_class> c_;
};

}  // namespace cperm
