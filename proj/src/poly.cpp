#include "cperm/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace cperm {

Poly::Poly(int r, std::vector<std::string> vars) : r_(r), vars_(std::move(vars)) {
  (void)euler_phi(r);  // validates r
}

Poly Poly::constant(int r, std::vector<std::string> vars, const CyclotomicInt& c) {
  Poly p(r, std::move(vars));
  p.add_term(Exponents(p.vars_.size(), 0), c);
  return p;
}

Poly Poly::one(int r, std::vector<std::string> vars) {
  return constant(r, std::move(vars), CyclotomicInt(r, 1L));
}

void Poly::add_term(const Exponents& e, const CyclotomicInt& c) {
  if (e.size() != vars_.size()) throw std::invalid_argument("exponent vector has wrong arity");
  if (c.order() != r_) throw std::invalid_argument("coefficient order mismatch");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void Poly::check_compatible(const Poly& o) const {
  if (r_ != o.r_) throw std::invalid_argument("polynomial coefficient orders differ");
  if (vars_ != o.vars_) throw std::invalid_argument("polynomial variable lists differ");
}

Poly& Poly::operator+=(const Poly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  check_compatible(o);
  for (const auto& [e, c] : o.terms_) add_term(e, -c);
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  a.check_compatible(b);
  Poly out(a.r_, a.vars_);
  Poly::Exponents e(a.vars_.size());
  for (const auto& [ea, ca] : a.terms_) {
    for (const auto& [eb, cb] : b.terms_) {
      for (std::size_t s = 0; s < e.size(); ++s) e[s] = ea[s] + eb[s];
      out.add_term(e, ca * cb);
    }
  }
  return out;
}

Poly Poly::scaled(const CyclotomicInt& c) const {
  Poly out(r_, vars_);
  for (const auto& [e, v] : terms_) out.add_term(e, v * c);
  return out;
}

Poly Poly::extended(const std::vector<std::string>& vars) const {
  if (vars.size() < vars_.size() || !std::equal(vars_.begin(), vars_.end(), vars.begin())) {
    throw std::invalid_argument("extended variable list must start with the current one");
  }
  Poly out(r_, vars);
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f.resize(vars.size(), 0);
    out.terms_.emplace(std::move(f), c);
  }
  return out;
}

Poly Poly::specialize(int slot, long value) const {
  if (slot < 0 || slot >= arity()) throw std::invalid_argument("no such variable slot");
  std::vector<std::string> vars = vars_;
  vars.erase(vars.begin() + slot);
  Poly out(r_, std::move(vars));
  for (const auto& [e, c] : terms_) {
    Exponents f = e;
    f.erase(f.begin() + slot);
    mpz_class factor;
    mpz_pow_ui(factor.get_mpz_t(), mpz_class(value).get_mpz_t(), e[static_cast<std::size_t>(slot)]);
    out.add_term(f, c * CyclotomicInt(r_, factor));
  }
  return out;
}

Poly Poly::merge_slots(int first, int count, const std::string& name) const {
  if (first < 0 || count < 1 || first + count > arity()) {
    throw std::invalid_argument("slot range out of bounds");
  }
  std::vector<std::string> vars(vars_.begin(), vars_.begin() + first);
  vars.push_back(name);
  vars.insert(vars.end(), vars_.begin() + first + count, vars_.end());
  Poly out(r_, std::move(vars));
  for (const auto& [e, c] : terms_) {
    Exponents f(e.begin(), e.begin() + first);
    std::uint32_t sum = 0;
    for (int s = first; s < first + count; ++s) sum += e[static_cast<std::size_t>(s)];
    f.push_back(sum);
    f.insert(f.end(), e.begin() + first + count, e.end());
    out.add_term(f, c);
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (std::size_t s = 0; s < e.size(); ++s) {
      if (e[s] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[s];
      if (e[s] > 1) mono += "^" + std::to_string(e[s]);
    }
    std::string coef = c.to_string();
    const bool simple = c.coeffs().size() == 1 || std::count_if(c.coeffs().begin(), c.coeffs().end(),
                                                                 [](const mpz_class& v) { return v != 0; }) == 1;
    bool negative = false;
    if (simple && coef.front() == '-') {
      negative = true;
      coef.erase(0, 1);
    }
    if (!simple) coef = "(" + coef + ")";
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (mono.empty()) {
      out += coef;
    } else {
      if (coef != "1") out += coef + "*";
      out += mono;
    }
  }
  return out;
}

std::vector<std::string> tqx_vars(int m) {
  std::vector<std::string> v{"t", "q"};
  for (int i = 1; i <= m; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

Poly product_one_minus(int r, int t_exp, const std::vector<std::uint32_t>& q_exps) {
  const std::vector<std::string> vars{"t", "q"};
  Poly out = Poly::one(r, vars);
  for (std::uint32_t qe : q_exps) {
    Poly f = Poly::one(r, vars);
    f.add_term({static_cast<std::uint32_t>(t_exp), qe}, CyclotomicInt(r, -1L));
    out = out * f;
  }
  return out;
}

namespace {

// 1 + s q + s^2 q^2 + ... + s^{i-1} q^{i-1}
Poly q_integer(int i, int s) {
  Poly p(1, {"q"});
  long sign = 1;
  for (int k = 0; k < i; ++k) {
    p.add_term({static_cast<std::uint32_t>(k)}, CyclotomicInt(1, sign));
    sign *= s;
  }
  return p;
}

}  // namespace

Poly gessel_simion_rhs(int n) {
  if (n < 1) throw std::invalid_argument("gessel_simion_rhs needs n >= 1");
  Poly out = Poly::one(1, {"q"});
  for (int i = 1; i <= n; ++i) out = out * q_integer(i, i % 2 == 1 ? 1 : -1);
  return out;
}

Poly q_factorial(int n) {
  if (n < 0) throw std::invalid_argument("q_factorial needs n >= 0");
  Poly out = Poly::one(1, {"q"});
  for (int i = 1; i <= n; ++i) out = out * q_integer(i, 1);
  return out;
}

MonomialAccumulator::MonomialAccumulator(int r, std::vector<std::string> vars,
                                         std::vector<std::uint32_t> max_exp)
    : r_(r), vars_(std::move(vars)), max_(std::move(max_exp)) {
  (void)euler_phi(r);
  if (vars_.size() != max_.size()) throw std::invalid_argument("bounds and variables differ in length");
  stride_.resize(max_.size());
  std::uint64_t cells = 1;
  constexpr std::uint64_t kDenseLimit = std::uint64_t{1} << 21;
  constexpr std::uint64_t kKeyLimit = std::uint64_t{1} << 58;
  for (std::size_t s = max_.size(); s-- > 0;) {
    stride_[s] = cells;
    cells *= static_cast<std::uint64_t>(max_[s]) + 1;
    if (cells > kKeyLimit) throw std::invalid_argument("monomial key space too large");
  }
  dense_ = cells * static_cast<std::uint64_t>(r_) <= kDenseLimit;
  if (dense_) table_.assign(cells * static_cast<std::uint64_t>(r_), 0);
}

void MonomialAccumulator::out_of_bounds(std::size_t slot, std::uint32_t value) const {
  throw std::logic_error("exponent " + std::to_string(value) + " of " + vars_[slot] +
                         " exceeds the declared bound " + std::to_string(max_[slot]));
}

void MonomialAccumulator::merge(MonomialAccumulator&& other) {
  if (other.r_ != r_ || other.max_ != max_) throw std::invalid_argument("accumulator shapes differ");
  if (dense_) {
    for (std::size_t i = 0; i < table_.size(); ++i) table_[i] += other.table_[i];
  } else {
    for (const auto& [k, v] : other.sparse_) sparse_[k] += v;
  }
}

Poly MonomialAccumulator::to_poly() const {
  Poly out(r_, vars_);
  const auto r = static_cast<std::uint64_t>(r_);
  auto emit = [&](std::uint64_t key, const std::int64_t* counts) {
    Poly::Exponents e(max_.size());
    for (std::size_t s = 0; s < max_.size(); ++s) {
      e[s] = static_cast<std::uint32_t>(key / stride_[s]);
      key %= stride_[s];
    }
    out.add_term(e, CyclotomicInt::from_group_ring(r_, counts));
  };
  if (dense_) {
    const std::uint64_t keys = table_.size() / r;
    for (std::uint64_t k = 0; k < keys; ++k) {
      const std::int64_t* row = table_.data() + k * r;
      bool any = false;
      for (std::uint64_t e = 0; e < r; ++e) any = any || row[e] != 0;
      if (any) emit(k, row);
    }
  } else {
    std::map<std::uint64_t, std::vector<std::int64_t>> rows;
    for (const auto& [cell, v] : sparse_) {
      if (v == 0) continue;
      auto& row = rows[cell / r];
      row.resize(r, 0);
      row[cell % r] += v;
    }
    for (const auto& [k, row] : rows) emit(k, row.data());
  }
  return out;
}

}  // namespace cperm
