#include "cperm/cyclotomic.hpp"

#include <array>
#include <stdexcept>

#include "cperm/colored_permutation.hpp"

namespace cperm {

namespace {

using IntPoly = std::vector<std::int64_t>;

void check_order(int r) {
  if (r < 1 || r > kMaxColors) {
    throw std::invalid_argument("root-of-unity order outside 1.." + std::to_string(kMaxColors));
  }
}

// Exact quotient a / b for monic b.
IntPoly divide_exact(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  IntPoly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const std::int64_t lead = a[i];
    q[i - db] = lead;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= lead * b[j];
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (a[i] != 0) throw std::logic_error("cyclotomic division left a remainder");
  }
  return q;
}

struct Tables {
  std::array<IntPoly, kMaxColors + 1> phi;
  std::array<std::vector<IntPoly>, kMaxColors + 1> omega;

  Tables() {
    for (int r = 1; r <= kMaxColors; ++r) {
      IntPoly p(static_cast<std::size_t>(r) + 1, 0);
      p[0] = -1;
      p[r] = 1;
      for (int d = 1; d < r; ++d) {
        if (r % d == 0) p = divide_exact(p, phi[d]);
      }
      phi[r] = p;
    }
    for (int r = 1; r <= kMaxColors; ++r) {
      const IntPoly& m = phi[r];
      const std::size_t deg = m.size() - 1;
      std::vector<IntPoly> table;
      IntPoly cur(deg, 0);
      cur[0] = 1;
      if (deg == 0) cur.clear();
      for (int e = 0; e < r; ++e) {
        IntPoly canon(deg, 0);
        for (std::size_t i = 0; i < deg; ++i) canon[i] = cur[i];
        table.push_back(canon);
        // multiply by x and reduce the x^deg term
        IntPoly next(deg, 0);
        std::int64_t top = deg > 0 ? cur[deg - 1] : 0;
        for (std::size_t i = deg; i-- > 1;) next[i] = cur[i - 1];
        for (std::size_t i = 0; i < deg; ++i) next[i] -= top * m[i];
        cur = next;
      }
      // r = 1: w = 1, residues are constants
      if (deg == 0) {
        for (auto& t : table) t.clear();
      }
      omega[r] = std::move(table);
    }
  }
};

const Tables& tables() {
  static const Tables t;
  return t;
}

}  // namespace

const std::vector<std::int64_t>& cyclotomic_polynomial(int r) {
  check_order(r);
  return tables().phi[r];
}

int euler_phi(int r) {
  check_order(r);
  return static_cast<int>(tables().phi[r].size()) - 1;
}

const std::vector<std::vector<std::int64_t>>& omega_table(int r) {
  check_order(r);
  return tables().omega[r];
}

CyclotomicInt::CyclotomicInt(int r) : r_(r) {
  check_order(r);
  c_.assign(static_cast<std::size_t>(euler_phi(r)), mpz_class(0));
}

CyclotomicInt::CyclotomicInt(int r, long value) : CyclotomicInt(r) {
  c_[0] = value;
}

CyclotomicInt::CyclotomicInt(int r, const mpz_class& value) : CyclotomicInt(r) {
  c_[0] = value;
}

CyclotomicInt CyclotomicInt::from_poly(int r, std::vector<mpz_class> coeffs) {
  CyclotomicInt out(r);
  const IntPoly& m = cyclotomic_polynomial(r);
  const std::size_t deg = m.size() - 1;
  for (std::size_t i = coeffs.size(); i-- > deg;) {
    const mpz_class lead = coeffs[i];
    if (lead == 0) continue;
    for (std::size_t j = 0; j <= deg; ++j) coeffs[i - deg + j] -= lead * m[j];
  }
  for (std::size_t i = 0; i < deg && i < coeffs.size(); ++i) out.c_[i] = coeffs[i];
  return out;
}

CyclotomicInt CyclotomicInt::from_group_ring(int r, const std::int64_t* counts) {
  CyclotomicInt out(r);
  const auto& table = omega_table(r);
  const std::size_t deg = out.c_.size();
  std::vector<std::int64_t> acc(deg, 0);
  // |counts| <= 2^40 in practice; table entries are tiny, so int64 is exact here
  for (int e = 0; e < r; ++e) {
    if (counts[e] == 0) continue;
    for (std::size_t i = 0; i < deg; ++i) acc[i] += counts[e] * table[e][i];
  }
  for (std::size_t i = 0; i < deg; ++i) out.c_[i] = static_cast<long>(acc[i]);
  return out;
}

bool CyclotomicInt::is_zero() const noexcept {
  for (const auto& c : c_) {
    if (c != 0) return false;
  }
  return true;
}

void CyclotomicInt::check_same(const CyclotomicInt& o) const {
  if (r_ != o.r_) throw std::invalid_argument("cyclotomic order mismatch");
}

CyclotomicInt& CyclotomicInt::operator+=(const CyclotomicInt& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] += o.c_[i];
  return *this;
}

CyclotomicInt& CyclotomicInt::operator-=(const CyclotomicInt& o) {
  check_same(o);
  for (std::size_t i = 0; i < c_.size(); ++i) c_[i] -= o.c_[i];
  return *this;
}

CyclotomicInt& CyclotomicInt::operator*=(const CyclotomicInt& o) {
  check_same(o);
  if (c_.size() == 1) {
    c_[0] *= o.c_[0];
    return *this;
  }
  std::vector<mpz_class> prod(2 * c_.size() - 1, mpz_class(0));
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) prod[i + j] += c_[i] * o.c_[j];
  }
  *this = from_poly(r_, std::move(prod));
  return *this;
}

CyclotomicInt CyclotomicInt::operator-() const {
  CyclotomicInt out = *this;
  for (auto& c : out.c_) c = -c;
  return out;
}

std::string CyclotomicInt::to_string() const {
  std::string out;
  for (std::size_t i = c_.size(); i-- > 0;) {
    const mpz_class& c = c_[i];
    if (c == 0) continue;
    const bool negative = c < 0;
    const mpz_class mag = negative ? mpz_class(-c) : c;
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0 || mag != 1) out += mag.get_str();
    if (i > 0) out += i == 1 ? "w" : "w^" + std::to_string(i);
  }
  return out.empty() ? "0" : out;
}

CyclotomicInt omega_power(int r, long long e) {
  check_order(r);
  long long m = e % r;
  if (m < 0) m += r;
  const auto& row = omega_table(r)[static_cast<std::size_t>(m)];
  CyclotomicInt out(r);
  if (row.empty()) return CyclotomicInt(r, 1L);
  std::vector<mpz_class> c(row.size());
  for (std::size_t i = 0; i < row.size(); ++i) c[i] = static_cast<long>(row[i]);
  return CyclotomicInt::from_poly(r, std::move(c));
}

}  // namespace cperm
