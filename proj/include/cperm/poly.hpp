#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <unordered_map>
#include <vector>

#include "cperm/cyclotomic.hpp"

namespace cperm {

/// Sparse polynomial in named variables with coefficients in Z[w].
/// Terms with zero coefficient are never stored.
class Poly {
 public:
  using Exponents = std::vector<std::uint32_t>;

  Poly() : Poly(1, {}) {}
  Poly(int r, std::vector<std::string> vars);

  static Poly constant(int r, std::vector<std::string> vars, const CyclotomicInt& c);
  static Poly one(int r, std::vector<std::string> vars);

  int order() const noexcept { return r_; }
  int arity() const noexcept { return static_cast<int>(vars_.size()); }
  const std::vector<std::string>& vars() const noexcept { return vars_; }
  const std::map<Exponents, CyclotomicInt>& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  void add_term(const Exponents& e, const CyclotomicInt& c);

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  Poly scaled(const CyclotomicInt& c) const;

  /// Same terms over a longer variable list whose prefix is vars().
  Poly extended(const std::vector<std::string>& vars) const;

  /// Substitutes an integer for one variable and drops its slot.
  Poly specialize(int slot, long value) const;

  /// Replaces slots [first, first + count) by one variable holding their sum.
  Poly merge_slots(int first, int count, const std::string& name) const;

  friend bool operator==(const Poly& a, const Poly& b) noexcept {
    return a.r_ == b.r_ && a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  /// Human-readable form, lowest exponents first: "1 - t - t*q + t^2*q".
  std::string to_string() const;

 private:
  void check_compatible(const Poly& o) const;

  int r_;
  std::vector<std::string> vars_;
  std::map<Exponents, CyclotomicInt> terms_;
};

/// "t", "q", then "x1".."xm".
std::vector<std::string> tqx_vars(int m);

/// prod_j (1 - t^t_exp q^q_exps[j]) over variables (t, q).
Poly product_one_minus(int r, int t_exp, const std::vector<std::uint32_t>& q_exps);

/// [1]_q [2]_{-q} [3]_q ... [n]_{(-1)^{n-1} q}, variable q.
Poly gessel_simion_rhs(int n);

/// [1]_q [2]_q ... [n]_q, variable q.
Poly q_factorial(int n);

/// Exact counts per (monomial, power of w) for enumeration loops.
///
/// Exponents are packed into a mixed-radix key using declared upper bounds,
/// so an add is a handful of multiplies and one increment. Small shapes use
/// a dense table, larger ones a hash map.
class MonomialAccumulator {
 public:
  MonomialAccumulator(int r, std::vector<std::string> vars, std::vector<std::uint32_t> max_exp);

  /// weight * w^omega_exp * prod vars^exps; exps has arity() entries.
  void add(const std::uint32_t* exps, int omega_exp, std::int64_t weight) {
    std::uint64_t key = 0;
    for (std::size_t s = 0; s < stride_.size(); ++s) {
      if (exps[s] > max_[s]) out_of_bounds(s, exps[s]);
      key += exps[s] * stride_[s];
    }
    const std::uint64_t cell = key * static_cast<std::uint64_t>(r_) + static_cast<std::uint64_t>(omega_exp);
    if (dense_) {
      table_[cell] += weight;
    } else {
      sparse_[cell] += weight;
    }
  }

  int arity() const noexcept { return static_cast<int>(stride_.size()); }
  void merge(MonomialAccumulator&& other);
  Poly to_poly() const;

 private:
  [[noreturn]] void out_of_bounds(std::size_t slot, std::uint32_t value) const;

  int r_;
  std::vector<std::string> vars_;
  std::vector<std::uint32_t> max_;
  std::vector<std::uint64_t> stride_;
  bool dense_ = true;
  std::vector<std::int64_t> table_;
  std::unordered_map<std::uint64_t, std::int64_t> sparse_;
};

}  // namespace cperm
