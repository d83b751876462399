#include "cperm/identities.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <stdexcept>

#include "cperm/characters.hpp"
#include "cperm/enumerate.hpp"
#include "cperm/involutions.hpp"
#include "cperm/parallel.hpp"
#include "cperm/series.hpp"
#include "cperm/statistics.hpp"

namespace cperm {

namespace {

using Vars = std::vector<std::string>;
using Bounds = std::vector<std::uint32_t>;

constexpr int kMaxSlots = 2 + kMaxLetters;

struct Shape {
  int r;
  Vars vars;
  Bounds max;
};

struct Partial {
  MonomialAccumulator acc;
  std::uint64_t count = 0;
};

// term(p, e, omega) fills exponents and the power of w, and returns the sign
// of p's contribution (0 to leave p out).
template <class Term>
Poly sum_family(const FamilySpec& spec, const Shape& shape, int jobs, Term term,
                std::uint64_t* count = nullptr) {
  Partial total = map_reduce<Partial>(
      spec, jobs, [&] { return Partial{MonomialAccumulator(shape.r, shape.vars, shape.max), 0}; },
      [&](Partial& part, const ColoredPermutation& p) {
        std::uint32_t e[kMaxSlots] = {};
        int omega = 0;
        const int sign = term(p, e, omega);
        if (sign != 0) part.acc.add(e, omega, sign);
        ++part.count;
      },
      [](Partial& a, Partial&& b) {
        a.acc.merge(std::move(b.acc));
        a.count += b.count;
      });
  if (count != nullptr) *count = total.count;
  return total.acc.to_poly();
}

template <class Term>
Poly sum_list(const std::vector<ColoredPermutation>& elems, const Shape& shape, Term term) {
  MonomialAccumulator acc(shape.r, shape.vars, shape.max);
  for (const auto& p : elems) {
    std::uint32_t e[kMaxSlots] = {};
    int omega = 0;
    const int sign = term(p, e, omega);
    if (sign != 0) acc.add(e, omega, sign);
  }
  return acc.to_poly();
}

std::uint32_t u(int v) { return static_cast<std::uint32_t>(std::max(v, 0)); }
std::uint32_t fdes_bound(int r, int n) { return u(r * n - 1); }
std::uint32_t fmaj_bound(int r, int n) { return u(r * n * (n - 1) / 2 + (r - 1) * n); }
std::uint32_t tri(int n) { return u(n * (n - 1) / 2); }
std::uint32_t dmaj_bound(int n) { return u(n * n); }

int parity_sign(int v) { return (v & 1) != 0 ? -1 : 1; }

const Vars kT{"t"};
const Vars kQ{"q"};
const Vars kTQ{"t", "q"};
const Vars kTQX{"t", "q", "x"};

// prod_j (1 - t^t_exp q^q_exps[j]) rewritten over `vars`, which is {t}, {q},
// or starts with {t, q}.
Poly product_over(int r, int t_exp, const std::vector<std::uint32_t>& q_exps, const Vars& vars) {
  Poly p = product_one_minus(r, t_exp, q_exps);
  if (vars == kT) return p.specialize(1, 1);
  if (vars == kQ) return p.specialize(0, 1);
  return p.extended(vars);
}

std::vector<std::uint32_t> odd_q_exps(int n, int scale) {
  std::vector<std::uint32_t> v;
  for (int i = 1; i <= n; ++i) v.push_back(static_cast<std::uint32_t>(scale * (2 * i - 1)));
  return v;
}

std::vector<std::uint32_t> zeros(int n) { return std::vector<std::uint32_t>(static_cast<std::size_t>(n), 0); }

std::vector<std::uint32_t> range_exps(int from, int to) {
  std::vector<std::uint32_t> v;
  for (int i = from; i <= to; ++i) v.push_back(static_cast<std::uint32_t>(i));
  return v;
}

struct Computation {
  Poly lhs;
  Poly rhs;
  std::uint64_t elements = 0;
  std::vector<std::string> notes;
};

struct Context {
  const IdentityParams& params;
  int jobs;

  int r() const { return *params.r; }
  int n() const { return *params.n; }
  int b() const { return *params.b; }
  int K() const { return *params.K; }
};

using ComputeFn = std::function<Computation(const Context&)>;

RestrictionTuple restriction_or_full(const Context& c, int r, int size) {
  if (!c.params.restriction) return RestrictionTuple::full(r, size);
  const RestrictionTuple& h = *c.params.restriction;
  if (h.r != r) throw std::invalid_argument("restriction has r = " + std::to_string(h.r) + ", expected " + std::to_string(r));
  if (h.size() != size) {
    throw std::invalid_argument("restriction has length " + std::to_string(h.size()) + ", expected " +
                                std::to_string(size));
  }
  return h;
}

FamilySpec b_family(const RestrictionTuple& h) { return FamilySpec::restricted(h); }

// ---- type A -------------------------------------------------------------

Computation a_eulerian(const Context& c, int big, int small) {
  Computation out;
  out.lhs = sum_family(FamilySpec::symmetric(big), {1, kT, {u(big - 1)}}, c.jobs,
                       [](const ColoredPermutation& p, std::uint32_t* e, int&) {
                         int d;
                         int m;
                         fast::des_maj(p, d, m);
                         e[0] = u(d);
                         return parity_sign(fast::inv_abs(p));
                       },
                       &out.elements);
  Poly sum = sum_family(FamilySpec::symmetric(small), {1, kT, {u(small - 1)}}, c.jobs,
                        [](const ColoredPermutation& p, std::uint32_t* e, int&) {
                          int d;
                          int m;
                          fast::des_maj(p, d, m);
                          e[0] = u(d);
                          return 1;
                        });
  out.rhs = product_over(1, 1, zeros(c.n()), kT) * sum;
  return out;
}

Computation a_em(const Context& c) {
  const int n = c.n();
  Computation out;
  out.lhs = sum_family(FamilySpec::symmetric(2 * n), {1, kTQ, {u(2 * n - 1), tri(2 * n)}}, c.jobs,
                       [](const ColoredPermutation& p, std::uint32_t* e, int&) {
                         int d;
                         int m;
                         fast::des_maj(p, d, m);
                         e[0] = u(d);
                         e[1] = u(m);
                         return parity_sign(fast::inv_abs(p));
                       },
                       &out.elements);
  Poly sum = sum_family(FamilySpec::symmetric(n), {1, kTQ, {u(n - 1), 2 * tri(n)}}, c.jobs,
                        [](const ColoredPermutation& p, std::uint32_t* e, int&) {
                          int d;
                          int m;
                          fast::des_maj(p, d, m);
                          e[0] = u(d);
                          e[1] = u(2 * m);
                          return 1;
                        });
  const Poly single = product_over(1, 1, odd_q_exps(n, 1), kTQ);
  out.rhs = single * sum;
  Poly powered = Poly::one(1, kTQ);
  for (int i = 0; i < n; ++i) powered = powered * single;
  const bool powered_equal = powered * sum == out.lhs;
  out.notes.push_back("product taken with single powers (1 - t q^(2i-1)), i = 1..n");
  out.notes.push_back(std::string("the variant with every factor raised to the n-th power ") +
                      (powered_equal ? "also matches" : "does not match") + " the left side");
  return out;
}

Computation gessel_simion(const Context& c) {
  const int n = c.n();
  Computation out;
  out.lhs = sum_family(FamilySpec::symmetric(n), {1, kQ, {tri(n)}}, c.jobs,
                       [](const ColoredPermutation& p, std::uint32_t* e, int&) {
                         int d;
                         int m;
                         fast::des_maj(p, d, m);
                         e[0] = u(m);
                         return parity_sign(fast::inv_abs(p));
                       },
                       &out.elements);
  out.rhs = gessel_simion_rhs(n);
  return out;
}

Computation macmahon(const Context& c, bool by_inv) {
  const int n = c.n();
  Computation out;
  out.lhs = sum_family(FamilySpec::symmetric(n), {1, kQ, {tri(n)}}, c.jobs,
                       [by_inv](const ColoredPermutation& p, std::uint32_t* e, int&) {
                         int d;
                         int m;
                         fast::des_maj(p, d, m);
                         e[0] = u(by_inv ? fast::inv_abs(p) : m);
                         return 1;
                       },
                       &out.elements);
  out.rhs = q_factorial(n);
  return out;
}

// ---- G(r,1,n) -----------------------------------------------------------

Computation g_main_even(const Context& c, bool refined) {
  const int r = c.r();
  const int n = c.n();
  const int b = c.b();
  const int big = 2 * n;
  const RestrictionTuple h = restriction_or_full(c, r, big);
  const RestrictionTuple s = refine_restriction(h);
  const Vars vars = refined ? tqx_vars(big) : kTQX;
  Bounds lb{fdes_bound(r, big), fmaj_bound(r, big)};
  Bounds rb{fdes_bound(r, n), 2 * fmaj_bound(r, n)};
  if (refined) {
    lb.resize(vars.size(), u(r - 1));
    rb.resize(vars.size(), u(r - 1));
  } else {
    lb.push_back(u((r - 1) * big));
    rb.push_back(u(2 * (r - 1) * n));
  }
  const CharacterLabel label{1, b, CharacterForm::kLength};
  Computation out;
  out.lhs = sum_family(FamilySpec::restricted(h), {r, vars, lb}, c.jobs,
                       [&, refined](const ColoredPermutation& p, std::uint32_t* e, int& omega) {
                         int fd;
                         int fm;
                         fast::fdes_fmaj(p, fd, fm);
                         e[0] = u(fd);
                         e[1] = u(fm);
                         if (refined) {
                           for (int i = 0; i < p.size(); ++i) e[2 + i] = u(p.color(i));
                         } else {
                           e[2] = u(fast::col(p));
                         }
                         const CharacterValue v = character_value(label, p);
                         omega = v.omega_exp;
                         return v.sign;
                       },
                       &out.elements);
  Poly sum = sum_family(FamilySpec::restricted(s), {r, vars, rb}, c.jobs,
                        [r, b, refined](const ColoredPermutation& p, std::uint32_t* e, int& omega) {
                          int fd;
                          int fm;
                          fast::fdes_fmaj(p, fd, fm);
                          e[0] = u(fd);
                          e[1] = u(2 * fm);
                          if (refined) {
                            for (int i = 0; i < p.size(); ++i) {
                              e[2 + 2 * i] = u(p.color(i));
                              e[3 + 2 * i] = u(p.color(i));
                            }
                          } else {
                            e[2] = u(2 * fast::col(p));
                          }
                          omega = static_cast<int>((2LL * b * fm) % r);
                          return 1;
                        });
  out.rhs = product_over(r, r, odd_q_exps(n, r), vars) * sum;
  if (refined) out.notes.push_back("S = " + format_restriction(s));
  return out;
}

Computation g_main_odd(const Context& c, bool refined) {
  const int r = c.r();
  const int n = c.n();
  const int b = c.b();
  const RestrictionTuple s = restriction_or_full(c, r, n);
  const Vars vars = refined ? tqx_vars(n) : kTQX;
  Bounds bounds{fdes_bound(r, n), fmaj_bound(r, n)};
  if (refined) {
    bounds.resize(vars.size(), u(r - 1));
  } else {
    bounds.push_back(u((r - 1) * n));
  }
  auto fill = [refined](const ColoredPermutation& p, std::uint32_t* e, int& fm) {
    int fd;
    fast::fdes_fmaj(p, fd, fm);
    e[0] = u(fd);
    e[1] = u(fm);
    if (refined) {
      for (int i = 0; i < p.size(); ++i) e[2 + i] = u(p.color(i));
    } else {
      e[2] = u(fast::col(p));
    }
  };
  const CharacterLabel label{0, b, CharacterForm::kLength};
  Computation out;
  out.lhs = sum_family(FamilySpec::restricted(s), {r, vars, bounds}, c.jobs,
                       [&](const ColoredPermutation& p, std::uint32_t* e, int& omega) {
                         int fm;
                         fill(p, e, fm);
                         const CharacterValue v = character_value(label, p);
                         omega = v.omega_exp;
                         return v.sign;
                       },
                       &out.elements);
  out.rhs = sum_family(FamilySpec::restricted(s), {r, vars, bounds}, c.jobs,
                       [&](const ColoredPermutation& p, std::uint32_t* e, int& omega) {
                         int fm;
                         fill(p, e, fm);
                         omega = static_cast<int>((static_cast<long long>(b) * fm) % r);
                         return 1;
                       });
  return out;
}

// ---- type B -------------------------------------------------------------

enum class BSign { kLength, kAbsInv, kNeg };

int b_sign(BSign s, const ColoredPermutation& p) {
  switch (s) {
    case BSign::kLength: return parity_sign(fast::len_B(p));
    case BSign::kAbsInv: return parity_sign(fast::inv_abs(p));
    case BSign::kNeg: return parity_sign(fast::neg(p));
  }
  return 1;
}

Computation b_em(const Context& c, BSign sign, bool refined) {
  const int n = c.n();
  const int big = 2 * n;
  const RestrictionTuple h = restriction_or_full(c, 2, big);
  const RestrictionTuple s = refine_restriction(h);
  const Vars vars = refined ? tqx_vars(big) : kTQX;
  Bounds lb{fdes_bound(2, big), fmaj_bound(2, big)};
  Bounds rb{fdes_bound(2, n), 2 * fmaj_bound(2, n)};
  if (refined) {
    lb.resize(vars.size(), 1);
    rb.resize(vars.size(), 1);
  } else {
    lb.push_back(u(big));
    rb.push_back(u(big));
  }
  Computation out;
  out.lhs = sum_family(b_family(h), {1, vars, lb}, c.jobs,
                       [sign, refined](const ColoredPermutation& p, std::uint32_t* e, int&) {
                         int fd;
                         int fm;
                         fast::fdes_fmaj(p, fd, fm);
                         e[0] = u(fd);
                         e[1] = u(fm);
                         if (refined) {
                           for (int i = 0; i < p.size(); ++i) e[2 + i] = u(p.color(i));
                         } else {
                           e[2] = u(fast::neg(p));
                         }
                         return b_sign(sign, p);
                       },
                       &out.elements);
  Poly sum = sum_family(b_family(s), {1, vars, rb}, c.jobs,
                        [refined](const ColoredPermutation& p, std::uint32_t* e, int&) {
                          int fd;
                          int fm;
                          fast::fdes_fmaj(p, fd, fm);
                          e[0] = u(fd);
                          e[1] = u(2 * fm);
                          if (refined) {
                            for (int i = 0; i < p.size(); ++i) {
                              e[2 + 2 * i] = u(p.color(i));
                              e[3 + 2 * i] = u(p.color(i));
                            }
                          } else {
                            e[2] = u(2 * fast::neg(p));
                          }
                          return 1;
                        });
  out.rhs = product_over(1, 2, odd_q_exps(n, 2), vars) * sum;
  if (refined) out.notes.push_back("S = " + format_restriction(s));
  return out;
}

Computation b_neg_flip(const Context& c, bool refined) {
  const int n = c.n();
  const RestrictionTuple s = restriction_or_full(c, 2, n);
  const Vars vars = refined ? tqx_vars(n) : kTQX;
  Bounds bounds{fdes_bound(2, n), fmaj_bound(2, n)};
  if (refined) {
    bounds.resize(vars.size(), 1);
  } else {
    bounds.push_back(u(n));
  }
  auto fill = [refined](const ColoredPermutation& p, std::uint32_t* e, int& fm) {
    int fd;
    fast::fdes_fmaj(p, fd, fm);
    e[0] = u(fd);
    e[1] = u(fm);
    if (refined) {
      for (int i = 0; i < p.size(); ++i) e[2 + i] = u(p.color(i));
    } else {
      e[2] = u(fast::neg(p));
    }
  };
  Computation out;
  out.lhs = sum_family(b_family(s), {1, vars, bounds}, c.jobs,
                       [&](const ColoredPermutation& p, std::uint32_t* e, int&) {
                         int fm;
                         fill(p, e, fm);
                         return parity_sign(fast::neg(p));
                       },
                       &out.elements);
  out.rhs = sum_family(b_family(s), {1, vars, bounds}, c.jobs,
                       [&](const ColoredPermutation& p, std::uint32_t* e, int&) {
                         int fm;
                         fill(p, e, fm);
                         return parity_sign(fm);
                       });
  return out;
}

Computation b_signed_mahonian(const Context& c) {
  const int n = c.n();
  Computation out;
  out.lhs = sum_family(FamilySpec::hyperoctahedral(2 * n), {1, kQ, {fmaj_bound(2, 2 * n)}}, c.jobs,
                       [](const ColoredPermutation& p, std::uint32_t* e, int&) {
                         e[0] = u(fast::fmaj(p));
                         return parity_sign(fast::len_B(p));
                       },
                       &out.elements);
  Poly sum = sum_family(FamilySpec::hyperoctahedral(n), {1, kQ, {2 * fmaj_bound(2, n)}}, c.jobs,
                        [](const ColoredPermutation& p, std::uint32_t* e, int&) {
                          e[0] = u(2 * fast::fmaj(p));
                          return 1;
                        });
  out.rhs = product_over(1, 0, odd_q_exps(n, 2), kQ) * sum;
  return out;
}

auto fdes_term(BSign sign) {
  return [sign](const ColoredPermutation& p, std::uint32_t* e, int&) {
    e[0] = u(fast::fdes(p));
    return b_sign(sign, p);
  };
}

const auto kPlainFdes = [](const ColoredPermutation& p, std::uint32_t* e, int&) {
  e[0] = u(fast::fdes(p));
  return 1;
};

Computation b_odd_absinv(const Context& c, bool refined) {
  const int n = c.n();
  const int big = 2 * n + 1;
  const RestrictionTuple h = restriction_or_full(c, 2, big);
  Computation out;
  out.lhs = sum_family(b_family(h), {1, kT, {fdes_bound(2, big)}}, c.jobs, fdes_term(BSign::kAbsInv), &out.elements);
  Poly sum(1, kT);
  if (refined) {
    for (const TildeRestriction& sk : tilde_family(h)) {
      std::uint64_t count = 0;
      sum += sum_family(FamilySpec::tilde(sk), {1, kT, {fdes_bound(2, n + 1)}}, c.jobs, kPlainFdes, &count);
      out.notes.push_back(format_restriction(sk) + ": " + std::to_string(count) + " elements");
    }
  } else {
    sum = sum_family(FamilySpec::hyperoctahedral(n + 1), {1, kT, {fdes_bound(2, n + 1)}}, c.jobs, kPlainFdes);
  }
  out.rhs = product_over(1, 2, zeros(n), kT) * sum;
  return out;
}

auto twice_des_b(const ColoredPermutation& p, std::uint32_t* e, int&) {
  int d;
  int m;
  fast::des_maj_B(p, d, m);
  e[0] = u(2 * d);
  return 1;
}

Computation b_odd_length(const Context& c) {
  const int n = c.n();
  const int big = 2 * n + 1;
  Computation out;
  out.lhs = sum_family(FamilySpec::hyperoctahedral(big), {1, kT, {fdes_bound(2, big)}}, c.jobs,
                       fdes_term(BSign::kLength), &out.elements);
  Poly sum = sum_family(FamilySpec::hyperoctahedral(n), {1, kT, {u(2 * n)}}, c.jobs, twice_des_b);
  out.rhs = product_over(1, 2, zeros(n), kT) * product_over(1, 1, zeros(1), kT) * sum;
  return out;
}

Computation lemma_lin(const Context& c) {
  const int n = c.n();
  Computation out;
  out.lhs = sum_family(FamilySpec::hyperoctahedral(n + 1), {1, kT, {fdes_bound(2, n + 1)}}, c.jobs,
                       [](const ColoredPermutation& p, std::uint32_t* e, int&) {
                         e[0] = u(fast::fdes(p));
                         return parity_sign(fast::sgm(p));
                       },
                       &out.elements);
  Poly sum = sum_family(FamilySpec::hyperoctahedral(n), {1, kT, {u(2 * n)}}, c.jobs, twice_des_b);
  out.rhs = product_over(1, 1, zeros(1), kT) * sum;
  return out;
}

// ch + 2 #{flag descents without a sign change}, computed without fdes.
int sign_change_weight(const ColoredPermutation& p) {
  int w = fast::ch(p);
  for (int i = 1; i < p.size(); ++i) {
    const bool same = p.color(i - 1) == p.color(i);
    if (same && fast::flag_key(2, p.letter(i - 1), p.color(i - 1)) > fast::flag_key(2, p.letter(i), p.color(i))) {
      w += 2;
    }
  }
  return w;
}

Computation eq_ch(const Context& c) {
  const int n = c.n();
  Computation out;
  out.lhs = sum_family(FamilySpec::hyperoctahedral(n), {1, kT, {fdes_bound(2, n)}}, c.jobs, kPlainFdes, &out.elements);
  out.rhs = sum_family(FamilySpec::hyperoctahedral(n), {1, kT, {u(3 * n)}}, c.jobs,
                       [](const ColoredPermutation& p, std::uint32_t* e, int&) {
                         e[0] = u(sign_change_weight(p));
                         return 1;
                       });
  std::uint64_t mismatches = 0;
  enumerate(FamilySpec::hyperoctahedral(n), [&](const ColoredPermutation& p) {
    mismatches += fast::fdes(p) != sign_change_weight(p);
  });
  out.notes.push_back("pointwise mismatches: " + std::to_string(mismatches));
  return out;
}

// ---- series -------------------------------------------------------------

Poly series_poly(const TruncatedSeries& s) {
  Poly p(1, kT);
  for (int k = 0; k <= s.cap(); ++k) p.add_term({static_cast<std::uint32_t>(k)}, CyclotomicInt(1, s[k]));
  return p;
}

TruncatedSeries poly_series(const Poly& p, int cap) {
  std::vector<mpz_class> c(static_cast<std::size_t>(cap) + 1, mpz_class(0));
  for (const auto& [e, v] : p.terms()) {
    if (e[0] <= static_cast<std::uint32_t>(cap)) c[e[0]] = v.coeffs()[0];
  }
  return TruncatedSeries(cap, std::move(c));
}

enum class SeriesKind { kPosi2, kNega2, kNepo, kBrenti };

Computation series(const Context& c, SeriesKind kind) {
  const int n = c.n();
  const int cap = c.K();
  Computation out;
  Poly numerator;
  TruncatedSeries denominator(cap);
  TruncatedSeries closed(cap);
  if (kind == SeriesKind::kBrenti) {
    numerator = sum_family(FamilySpec::hyperoctahedral(n), {1, kT, {u(n)}}, c.jobs,
                           [](const ColoredPermutation& p, std::uint32_t* e, int&) {
                             int d;
                             int m;
                             fast::des_maj_B(p, d, m);
                             e[0] = u(d);
                             return 1;
                           },
                           &out.elements);
    denominator = TruncatedSeries::one_minus(n + 1, 0, cap);
    closed = TruncatedSeries::brenti(n, cap);
  } else {
    numerator = sum_family(FamilySpec::hyperoctahedral(n + 1), {1, kT, {fdes_bound(2, n + 1)}}, c.jobs,
                           [kind](const ColoredPermutation& p, std::uint32_t* e, int&) {
                             e[0] = u(fast::fdes(p));
                             const int s = fast::sgm(p);
                             if (kind == SeriesKind::kPosi2) return s == 0 ? 1 : 0;
                             if (kind == SeriesKind::kNega2) return s == 1 ? 1 : 0;
                             return parity_sign(s);
                           },
                           &out.elements);
    denominator = TruncatedSeries::one_minus(1, n + 1, cap);
    closed = kind == SeriesKind::kPosi2   ? TruncatedSeries::posi2(n, cap)
             : kind == SeriesKind::kNega2 ? TruncatedSeries::nega2(n, cap)
                                          : TruncatedSeries::nepo(n, cap);
  }
  out.lhs = series_poly(poly_series(numerator, cap) / denominator);
  out.rhs = series_poly(closed);
  out.notes.push_back("truncated after t^" + std::to_string(cap));
  return out;
}

// ---- type D -------------------------------------------------------------

Computation d_em_even(const Context& c, bool refined) {
  const int n = c.n();
  const int big = 2 * n;
  const Vars vars = refined ? tqx_vars(big) : kTQX;
  Bounds lb{u(2 * big - 1), dmaj_bound(big)};
  Bounds rb{u(2 * n - 1), 2 * dmaj_bound(n)};
  if (refined) {
    lb.resize(vars.size(), 1);
    rb.resize(vars.size(), 1);
  } else {
    lb.push_back(u(big));
    rb.push_back(u(big));
  }
  Computation out;
  out.lhs = sum_family(FamilySpec::even_signed(big), {1, vars, lb}, c.jobs,
                       [refined](const ColoredPermutation& p, std::uint32_t* e, int&) {
                         int dd;
                         int dm;
                         fast::ddes_dmaj(p, dd, dm);
                         e[0] = u(dd);
                         e[1] = u(dm);
                         if (refined) {
                           for (int i = 0; i < p.size(); ++i) e[2 + i] = u(p.color(i));
                         } else {
                           e[2] = u(fast::neg(p));
                         }
                         return parity_sign(fast::len_D(p));
                       },
                       &out.elements);
  Poly sum = sum_family(FamilySpec::even_signed(n), {1, vars, rb}, c.jobs,
                        [refined](const ColoredPermutation& p, std::uint32_t* e, int&) {
                          int dd;
                          int dm;
                          fast::ddes_dmaj(p, dd, dm);
                          e[0] = u(dd);
                          e[1] = u(2 * dm);
                          const int m = p.size();
                          int neg = 0;
                          for (int i = 0; i + 1 < m; ++i) {
                            if (p.color(i) == 0) continue;
                            ++neg;
                            if (refined) {
                              e[2 + 2 * i] = 1;
                              e[3 + 2 * i] = 1;
                            }
                          }
                          if (!refined) e[2] = u(2 * neg);
                          return 1;
                        });
  out.rhs = product_over(1, 2, odd_q_exps(n, 2), vars) * sum;
  return out;
}

auto ddes_term(bool signed_by_length) {
  return [signed_by_length](const ColoredPermutation& p, std::uint32_t* e, int&) {
    int dd;
    int dm;
    fast::ddes_dmaj(p, dd, dm);
    e[0] = u(dd);
    return signed_by_length ? parity_sign(fast::len_D(p)) : 1;
  };
}

Computation d_odd_length(const Context& c) {
  const int n = c.n();
  const int big = 2 * n + 1;
  Computation out;
  out.lhs = sum_family(FamilySpec::even_signed(big), {1, kT, {u(2 * big)}}, c.jobs, ddes_term(true), &out.elements);
  Poly sum = sum_family(FamilySpec::even_signed(n + 1), {1, kT, {u(2 * n + 2)}}, c.jobs, ddes_term(false));
  out.rhs = product_over(1, 2, zeros(n), kT) * sum;
  return out;
}

// ---- generating functions with type B/D descents -------------------------

enum class GfSign { kLengthB, kNeg, kAbsInv, kLengthD };

int gf_sign(GfSign s, const ColoredPermutation& p) {
  switch (s) {
    case GfSign::kLengthB: return parity_sign(fast::len_B(p));
    case GfSign::kNeg: return parity_sign(fast::neg(p));
    case GfSign::kAbsInv: return parity_sign(fast::inv_abs(p));
    case GfSign::kLengthD: return parity_sign(fast::len_D(p));
  }
  return 1;
}

// t^{des} q^{maj} with type B descents, or type D descents when `type_d`.
auto bd_term(GfSign sign, bool type_d) {
  return [sign, type_d](const ColoredPermutation& p, std::uint32_t* e, int&) {
    int d = 0;
    int m = 0;
    if (!type_d) {
      fast::des_maj_B(p, d, m);
    } else if (p.size() >= 2) {
      fast::des_maj_D(p, d, m);
    }
    e[0] = u(d);
    e[1] = u(m);
    return gf_sign(sign, p);
  };
}

Shape bd_shape(int n) { return {1, kTQ, {u(n), tri(n + 1)}}; }

// (1 + (-1)^(n-1) t q^(n-1)) prod_{i=0..n-2} (1 - t q^i)
Poly alternating_head_product(int n) {
  Poly head = Poly::one(1, kTQ);
  head.add_term({1, u(n - 1)}, CyclotomicInt(1, n % 2 == 1 ? 1L : -1L));
  return head * product_over(1, 1, range_exps(0, n - 2), kTQ);
}

Computation b_gf(const Context& c, GfSign sign) {
  const int n = c.n();
  Computation out;
  out.lhs = sum_family(FamilySpec::hyperoctahedral(n), bd_shape(n), c.jobs, bd_term(sign, false), &out.elements);
  if (sign == GfSign::kAbsInv) {
    out.rhs = alternating_head_product(n);
  } else {
    out.rhs = product_over(1, 1, range_exps(0, n - 1), kTQ);
  }
  return out;
}

Computation d_gf(const Context& c) {
  const int n = c.n();
  Computation out;
  out.lhs = sum_family(FamilySpec::even_signed(n), bd_shape(n), c.jobs, bd_term(GfSign::kLengthD, true), &out.elements);
  if (n == 1) {
    out.rhs = Poly::one(1, kTQ);
    out.notes.push_back("n = 1: the sum over D_1 = {1} is 1 by convention");
  } else {
    out.rhs = alternating_head_product(n);
  }
  return out;
}

// ---- cancellation lemmas --------------------------------------------------

template <class Term>
Computation cancellation(const Context& c, const InvolutionDomain& domain, const Shape& shape, Term term) {
  Computation out;
  out.lhs = sum_family(domain.family(), shape, c.jobs, term, &out.elements);
  const auto fixed = fixed_points(domain);
  out.rhs = sum_list(fixed, shape, term);
  out.notes.push_back(std::to_string(fixed.size()) + " fixed points of " + to_string(domain.tag));
  return out;
}

Computation cancel_phi(const Context& c) {
  const int r = c.r();
  const int n = c.n();
  const int big = 2 * n;
  InvolutionDomain d{InvolutionTag::kPhi, r, big, restriction_or_full(c, r, big)};
  Bounds bounds{fdes_bound(r, big), fmaj_bound(r, big)};
  bounds.resize(static_cast<std::size_t>(2 + big), u(r - 1));
  const CharacterLabel label{1, c.b(), CharacterForm::kLength};
  return cancellation(c, d, {r, tqx_vars(big), bounds},
                      [label](const ColoredPermutation& p, std::uint32_t* e, int& omega) {
                        int fd;
                        int fm;
                        fast::fdes_fmaj(p, fd, fm);
                        e[0] = u(fd);
                        e[1] = u(fm);
                        for (int i = 0; i < p.size(); ++i) e[2 + i] = u(p.color(i));
                        const CharacterValue v = character_value(label, p);
                        omega = v.omega_exp;
                        return v.sign;
                      });
}

Computation cancel_b_odd(const Context& c, BSign sign, bool with_restriction) {
  const int big = 2 * c.n() + 1;
  InvolutionDomain d{InvolutionTag::kPhi, 2, big, std::nullopt};
  if (with_restriction) d.restriction = restriction_or_full(c, 2, big);
  return cancellation(c, d, {1, kT, {fdes_bound(2, big)}}, fdes_term(sign));
}

Computation cancel_d_even(const Context& c) {
  const int big = 2 * c.n();
  InvolutionDomain d{InvolutionTag::kEta, 2, big, std::nullopt};
  Bounds bounds{u(2 * big - 1), dmaj_bound(big)};
  bounds.resize(static_cast<std::size_t>(2 + big), 1);
  return cancellation(c, d, {1, tqx_vars(big), bounds}, [](const ColoredPermutation& p, std::uint32_t* e, int&) {
    int dd;
    int dm;
    fast::ddes_dmaj(p, dd, dm);
    e[0] = u(dd);
    e[1] = u(dm);
    for (int i = 0; i < p.size(); ++i) e[2 + i] = u(p.color(i));
    return parity_sign(fast::len_D(p));
  });
}

Computation cancel_d_odd(const Context& c) {
  const int big = 2 * c.n() + 1;
  InvolutionDomain d{InvolutionTag::kIota, 2, big, std::nullopt};
  return cancellation(c, d, {1, kT, {u(2 * big)}}, ddes_term(true));
}

Computation cancel_bd(const Context& c, InvolutionTag tag, GfSign sign) {
  const int n = c.n();
  InvolutionDomain d{tag, 2, n, std::nullopt};
  return cancellation(c, d, bd_shape(n), bd_term(sign, tag == InvolutionTag::kPsiD));
}

// ---- catalog --------------------------------------------------------------

struct Entry {
  IdentityInfo info;
  int min_n;
  ComputeFn fn;
};

IdentityParams smallest(std::optional<int> r, int n, std::optional<int> b = std::nullopt,
                        std::optional<int> K = std::nullopt) {
  IdentityParams p;
  p.r = r;
  p.n = n;
  p.b = b;
  p.K = K;
  return p;
}

std::vector<Entry> build_catalog() {
  using K = IdentityKind;
  const std::vector<std::string> n_only{"n"};
  const std::vector<std::string> rnb{"r", "n", "b"};
  const std::vector<std::string> nk{"n", "K"};
  const std::vector<std::string> res{"restriction"};
  std::vector<Entry> v;
  auto add = [&](std::string id, K kind, std::string desc, std::string lhs, std::string rhs,
                 std::vector<std::string> req, std::vector<std::string> opt, IdentityParams small, int min_n,
                 ComputeFn fn) {
    v.push_back({IdentityInfo{std::move(id), kind, std::move(desc), std::move(lhs), std::move(rhs), std::move(req),
                              std::move(opt), std::move(small)},
                 min_n, std::move(fn)});
  };

  add("A-even", K::kPlain, "signed Eulerian identity on S_2n", "sum_{S_2n} (-1)^inv t^des",
      "(1-t)^n sum_{S_n} t^des", n_only, {}, smallest({}, 1), 0,
      [](const Context& c) { return a_eulerian(c, 2 * c.n(), c.n()); });
  add("A-odd", K::kPlain, "signed Eulerian identity on S_2n+1", "sum_{S_2n+1} (-1)^inv t^des",
      "(1-t)^n sum_{S_n+1} t^des", n_only, {}, smallest({}, 1), 0,
      [](const Context& c) { return a_eulerian(c, 2 * c.n() + 1, c.n() + 1); });
  add("A-EM", K::kPlain, "signed Euler-Mahonian identity on S_2n", "sum_{S_2n} (-1)^inv t^des q^maj",
      "prod_{i=1..n} (1 - t q^(2i-1)) sum_{S_n} t^des q^(2 maj)", n_only, {}, smallest({}, 1), 0, a_em);
  add("gessel-simion", K::kPlain, "signed Mahonian product formula", "sum_{S_n} (-1)^inv q^maj",
      "[1]_q [2]_{-q} [3]_q ... [n]_{(-1)^(n-1) q}", n_only, {}, smallest({}, 1), 1, gessel_simion);
  add("macmahon", K::kPlain, "major index is Mahonian", "sum_{S_n} q^maj", "[n]_q!", n_only, {}, smallest({}, 1), 0,
      [](const Context& c) { return macmahon(c, false); });
  add("macmahon-inv", K::kPlain, "inversion number is Mahonian", "sum_{S_n} q^inv", "[n]_q!", n_only, {},
      smallest({}, 1), 0, [](const Context& c) { return macmahon(c, true); });

  add("G-main-even", K::kPlain, "folding of the character chi_{1,b} over G_{r,2n}",
      "sum_{G_{r,2n}} chi_{1,b} t^fdes q^fmaj x^col",
      "prod_{i=1..n} (1 - t^r q^(r(2i-1))) sum_{G_{r,n}} t^fdes (w^b q)^(2 fmaj) x^(2 col)", rnb, {},
      smallest(1, 1, 0), 0, [](const Context& c) { return g_main_even(c, false); });
  add("G-main-even-refined", K::kRefined, "folding over G_{r,2n}(H) with per-position variables",
      "sum_{G_{r,2n}(H)} chi_{1,b} t^fdes q^fmaj prod x_i^z_i",
      "prod_{i=1..n} (1 - t^r q^(r(2i-1))) sum_{G_{r,n}(S)} t^fdes (w^b q)^(2 fmaj) prod (x_{2i-1} x_{2i})^z_i, S < H",
      rnb, res, smallest(1, 1, 0), 0, [](const Context& c) { return g_main_even(c, true); });
  add("G-main-odd", K::kPlain, "character chi_{0,b} moved onto fmaj", "sum_{G_{r,n}} chi_{0,b} t^fdes q^fmaj x^col",
      "sum_{G_{r,n}} t^fdes (w^b q)^fmaj x^col", rnb, {}, smallest(1, 1, 0), 0,
      [](const Context& c) { return g_main_odd(c, false); });
  add("G-main-odd-refined", K::kRefined, "restricted version with per-position variables",
      "sum_{G_{r,n}(S)} chi_{0,b} t^fdes q^fmaj prod x_i^z_i", "sum_{G_{r,n}(S)} t^fdes (w^b q)^fmaj prod x_i^z_i",
      rnb, res, smallest(1, 1, 0), 0, [](const Context& c) { return g_main_odd(c, true); });

  const std::string b_rhs = "prod_{i=1..n} (1 - t^2 q^(4i-2)) sum_{B_n} t^fdes q^(2 fmaj) x^(2 neg)";
  const std::string b_rhs_refined =
      "prod_{i=1..n} (1 - t^2 q^(4i-2)) sum_{B_n(S)} t^fdes q^(2 fmaj) prod_{Neg} x_{2i-1} x_{2i}, S < H";
  add("B-EM-length", K::kPlain, "type B folding signed by length", "sum_{B_2n} (-1)^len_B t^fdes q^fmaj x^neg", b_rhs,
      n_only, {}, smallest({}, 1), 0, [](const Context& c) { return b_em(c, BSign::kLength, false); });
  add("B-EM-length-refined", K::kRefined, "restricted type B folding signed by length",
      "sum_{B_2n(H)} (-1)^len_B t^fdes q^fmaj prod_{Neg} x_i", b_rhs_refined, n_only, res, smallest({}, 1), 0,
      [](const Context& c) { return b_em(c, BSign::kLength, true); });
  add("B-EM-absinv", K::kPlain, "type B folding signed by inversions of |p|",
      "sum_{B_2n} (-1)^inv|p| t^fdes q^fmaj x^neg", b_rhs, n_only, {}, smallest({}, 1), 0,
      [](const Context& c) { return b_em(c, BSign::kAbsInv, false); });
  add("B-EM-absinv-refined", K::kRefined, "restricted type B folding signed by inversions of |p|",
      "sum_{B_2n(H)} (-1)^inv|p| t^fdes q^fmaj prod_{Neg} x_i", b_rhs_refined, n_only, res, smallest({}, 1), 0,
      [](const Context& c) { return b_em(c, BSign::kAbsInv, true); });
  add("B-neg-flip", K::kPlain, "sign by neg moved onto fmaj", "sum_{B_n} (-1)^neg t^fdes q^fmaj x^neg",
      "sum_{B_n} t^fdes (-q)^fmaj x^neg", n_only, {}, smallest({}, 1), 0,
      [](const Context& c) { return b_neg_flip(c, false); });
  add("B-neg-flip-refined", K::kRefined, "restricted version with per-position variables",
      "sum_{B_n(S)} (-1)^neg t^fdes q^fmaj prod_{Neg} x_i", "sum_{B_n(S)} t^fdes (-q)^fmaj prod_{Neg} x_i", n_only, res,
      smallest({}, 1), 0, [](const Context& c) { return b_neg_flip(c, true); });
  add("B-signedM", K::kPlain, "signed Mahonian identity on B_2n", "sum_{B_2n} (-1)^len_B q^fmaj",
      "prod_{i=1..n} (1 - q^(4i-2)) sum_{B_n} q^(2 fmaj)", n_only, {}, smallest({}, 1), 0, b_signed_mahonian);
  add("B-odd-absinv", K::kPlain, "odd folding signed by inversions of |p|", "sum_{B_2n+1} (-1)^inv|p| t^fdes",
      "(1-t^2)^n sum_{B_n+1} t^fdes", n_only, {}, smallest({}, 1), 0,
      [](const Context& c) { return b_odd_absinv(c, false); });
  add("B-odd-absinv-refined", K::kRefined, "restricted odd folding over the tilde family of H",
      "sum_{B_2n+1(H)} (-1)^inv|p| t^fdes", "(1-t^2)^n sum_{S_k in F(H)} sum_{B_n+1(S_k)} t^fdes", n_only, res,
      smallest({}, 1), 0, [](const Context& c) { return b_odd_absinv(c, true); });
  add("B-odd-length", K::kPlain, "odd folding signed by length", "sum_{B_2n+1} (-1)^len_B t^fdes",
      "(1-t^2)^n (1-t) sum_{B_n} t^(2 des_B)", n_only, {}, smallest({}, 1), 0, b_odd_length);
  add("lemma-lin", K::kPlain, "sign of the largest letter against type B descents", "sum_{B_n+1} (-1)^sgm t^fdes",
      "(1-t) sum_{B_n} t^(2 des_B)", n_only, {}, smallest({}, 1), 0, lemma_lin);
  add("eq-ch", K::kPlain, "fdes through sign changes", "sum_{B_n} t^fdes",
      "sum_{B_n} t^(ch + 2 #{i in Des_F : no sign change at i})", n_only, {}, smallest({}, 1), 0, eq_ch);
  add("lin-posi2", K::kSeries, "barred permutations with a positive largest letter",
      "sum_{B_n+1, sgm=0} t^fdes / ((1-t)(1-t^2)^(n+1))", "sum_k (k+1)^n ceil((k+1)/2) t^k", nk, {},
      smallest({}, 1, {}, 4), 0, [](const Context& c) { return series(c, SeriesKind::kPosi2); });
  add("lin-nega2", K::kSeries, "barred permutations with a negative largest letter",
      "sum_{B_n+1, sgm=1} t^fdes / ((1-t)(1-t^2)^(n+1))", "sum_k (k+1)^n floor((k+1)/2) t^k", nk, {},
      smallest({}, 1, {}, 4), 0, [](const Context& c) { return series(c, SeriesKind::kNega2); });
  add("lin-nepo", K::kSeries, "difference of the two barred series",
      "sum_{B_n+1} (-1)^sgm t^fdes / ((1-t)(1-t^2)^(n+1))", "sum_k (2k+1)^n t^(2k)", nk, {}, smallest({}, 1, {}, 4), 0,
      [](const Context& c) { return series(c, SeriesKind::kNepo); });
  add("brenti-series", K::kSeries, "type B Eulerian series", "sum_{B_n} t^des_B / (1-t)^(n+1)",
      "sum_k (2k+1)^n t^k", nk, {}, smallest({}, 1, {}, 4), 0,
      [](const Context& c) { return series(c, SeriesKind::kBrenti); });

  add("D-EM-even", K::kPlain, "type D folding signed by length", "sum_{D_2n} (-1)^len_D t^ddes q^dmaj x^neg",
      "prod_{i=1..n} (1 - t^2 q^(4i-2)) sum_{D_n} t^ddes q^(2 dmaj) x^(2 |Neg - {n}|)", n_only, {}, smallest({}, 1), 1,
      [](const Context& c) { return d_em_even(c, false); });
  add("D-EM-even-refined", K::kRefined, "type D folding with distinct variables",
      "sum_{D_2n} (-1)^len_D t^ddes q^dmaj prod_{Neg} x_i",
      "prod_{i=1..n} (1 - t^2 q^(4i-2)) sum_{D_n} t^ddes q^(2 dmaj) prod_{Neg - {n}} x_{2i-1} x_{2i}", n_only, {},
      smallest({}, 1), 1, [](const Context& c) { return d_em_even(c, true); });
  add("D-odd-length", K::kPlain, "odd type D folding signed by length", "sum_{D_2n+1} (-1)^len_D t^ddes",
      "(1-t^2)^n sum_{D_n+1} t^ddes", n_only, {}, smallest({}, 1), 0, d_odd_length);

  add("B-GF-length", K::kPlain, "type B descents signed by length", "sum_{B_n} (-1)^len_B t^des_B q^maj_B",
      "prod_{i=0..n-1} (1 - t q^i)", n_only, {}, smallest({}, 1), 1,
      [](const Context& c) { return b_gf(c, GfSign::kLengthB); });
  add("B-GF-neg", K::kPlain, "type B descents signed by neg", "sum_{B_n} (-1)^neg t^des_B q^maj_B",
      "prod_{i=0..n-1} (1 - t q^i)", n_only, {}, smallest({}, 1), 1,
      [](const Context& c) { return b_gf(c, GfSign::kNeg); });
  add("B-GF-absinv", K::kPlain, "type B descents signed by inversions of |p|",
      "sum_{B_n} (-1)^inv|p| t^des_B q^maj_B", "(1 + (-1)^(n-1) t q^(n-1)) prod_{i=0..n-2} (1 - t q^i)", n_only, {},
      smallest({}, 1), 1, [](const Context& c) { return b_gf(c, GfSign::kAbsInv); });
  add("D-GF", K::kPlain, "type D descents signed by length", "sum_{D_n} (-1)^len_D t^des_D q^maj_D",
      "(1 + (-1)^(n-1) t q^(n-1)) prod_{i=0..n-2} (1 - t q^i) for n >= 2; 1 for n = 1", n_only, {}, smallest({}, 1), 1, d_gf);

  const std::string over_fixed = "the same sum over the fixed points";
  add("cancel-phi", K::kCancellation, "phi cancels on G_{r,2n}(H)",
      "sum_{G_{r,2n}(H)} chi_{1,b} t^fdes q^fmaj prod x_i^z_i", over_fixed, rnb, res, smallest(1, 1, 0), 0, cancel_phi);
  add("cancel-B-absinv", K::kCancellation, "phi cancels (-1)^inv|p| on B_2n+1(H)",
      "sum_{B_2n+1(H)} (-1)^inv|p| t^fdes", over_fixed, n_only, res, smallest({}, 1), 0,
      [](const Context& c) { return cancel_b_odd(c, BSign::kAbsInv, true); });
  add("cancel-B-length", K::kCancellation, "phi cancels (-1)^len_B on B_2n+1", "sum_{B_2n+1} (-1)^len_B t^fdes",
      over_fixed, n_only, {}, smallest({}, 1), 0,
      [](const Context& c) { return cancel_b_odd(c, BSign::kLength, false); });
  add("cancel-D-even", K::kCancellation, "eta cancels on D_2n", "sum_{D_2n} (-1)^len_D t^ddes q^dmaj prod_{Neg} x_i",
      over_fixed, n_only, {}, smallest({}, 1), 1, cancel_d_even);
  add("cancel-D-odd", K::kCancellation, "iota cancels on D_2n+1", "sum_{D_2n+1} (-1)^len_D t^ddes", over_fixed,
      n_only, {}, smallest({}, 1), 0, cancel_d_odd);
  add("cancel-theta-neg", K::kCancellation, "theta cancels (-1)^neg on B_n", "sum_{B_n} (-1)^neg t^des_B q^maj_B",
      over_fixed, n_only, {}, smallest({}, 1), 0,
      [](const Context& c) { return cancel_bd(c, InvolutionTag::kTheta, GfSign::kNeg); });
  add("cancel-theta-length", K::kCancellation, "theta cancels (-1)^len_B on B_n",
      "sum_{B_n} (-1)^len_B t^des_B q^maj_B", over_fixed, n_only, {}, smallest({}, 1), 0,
      [](const Context& c) { return cancel_bd(c, InvolutionTag::kTheta, GfSign::kLengthB); });
  add("cancel-psi-B", K::kCancellation, "psi cancels (-1)^inv|p| on B_n", "sum_{B_n} (-1)^inv|p| t^des_B q^maj_B",
      over_fixed, n_only, {}, smallest({}, 1), 0,
      [](const Context& c) { return cancel_bd(c, InvolutionTag::kPsiB, GfSign::kAbsInv); });
  add("cancel-psi-D", K::kCancellation, "psi cancels (-1)^len_D on D_n", "sum_{D_n} (-1)^len_D t^des_D q^maj_D",
      over_fixed, n_only, {}, smallest({}, 2), 2,
      [](const Context& c) { return cancel_bd(c, InvolutionTag::kPsiD, GfSign::kLengthD); });
  return v;
}

const std::vector<Entry>& catalog() {
  static const std::vector<Entry> entries = build_catalog();
  return entries;
}

const Entry& entry(const std::string& id) {
  for (const auto& e : catalog()) {
    if (e.info.id == id) return e;
  }
  throw std::invalid_argument("unknown identity '" + id + "'");
}

bool listed(const std::vector<std::string>& v, const std::string& name) {
  return std::find(v.begin(), v.end(), name) != v.end();
}

void check_schema(const Entry& e, const IdentityParams& p) {
  const auto& info = e.info;
  auto check = [&](const std::string& name, bool present) {
    const bool known = listed(info.required, name) || listed(info.optional, name);
    if (present && !known) throw std::invalid_argument(info.id + " does not take parameter '" + name + "'");
    if (!present && listed(info.required, name)) {
      throw std::invalid_argument(info.id + " requires parameter '" + name + "'");
    }
  };
  check("r", p.r.has_value());
  check("n", p.n.has_value());
  check("b", p.b.has_value());
  check("K", p.K.has_value());
  check("restriction", p.restriction.has_value());
  if (p.r && (*p.r < 1 || *p.r > kMaxColors)) throw std::invalid_argument("r must lie in 1.." + std::to_string(kMaxColors));
  if (p.n && (*p.n < e.min_n || *p.n > kMaxLetters)) {
    throw std::invalid_argument(info.id + " needs n in " + std::to_string(e.min_n) + ".." + std::to_string(kMaxLetters));
  }
  if (p.b && (*p.b < 0 || *p.b >= *p.r)) throw std::invalid_argument("b must lie in 0..r-1");
  if (p.K && (*p.K < 0 || *p.K > 4096)) throw std::invalid_argument("K must lie in 0..4096");
}

}  // namespace

const std::vector<IdentityInfo>& list_identities() {
  static const std::vector<IdentityInfo> infos = [] {
    std::vector<IdentityInfo> v;
    for (const auto& e : catalog()) v.push_back(e.info);
    return v;
  }();
  return infos;
}

const IdentityInfo& identity_info(const std::string& id) { return entry(id).info; }

IdentityReport verify(const std::string& id, const IdentityParams& params, const VerifyOptions& options) {
  const Entry& e = entry(id);
  check_schema(e, params);
  const auto start = std::chrono::steady_clock::now();
  Computation comp = e.fn(Context{params, std::max(1, options.jobs)});
  if (options.tamper == id) {
    comp.rhs.add_term(Poly::Exponents(static_cast<std::size_t>(comp.rhs.arity()), 0),
                      CyclotomicInt(comp.rhs.order(), 1L));
  }
  const auto stop = std::chrono::steady_clock::now();
  IdentityReport report;
  report.id = id;
  report.params = params;
  report.equal = comp.lhs == comp.rhs;
  report.elements = comp.elements;
  report.elapsed_ms = std::chrono::duration<double, std::milli>(stop - start).count();
  report.lhs = std::move(comp.lhs);
  report.rhs = std::move(comp.rhs);
  report.notes = std::move(comp.notes);
  return report;
}

IdentityReport verify_refined(const std::string& id, const RestrictionTuple& restriction, IdentityParams params,
                              const VerifyOptions& options) {
  const Entry& e = entry(id);
  if (!listed(e.info.optional, "restriction") && !listed(e.info.required, "restriction")) {
    throw std::invalid_argument(id + " takes no restriction");
  }
  params.restriction = restriction;
  return verify(id, params, options);
}

IdentityReport cancellation_check(const std::string& id, const IdentityParams& params, const VerifyOptions& options) {
  if (entry(id).info.kind != IdentityKind::kCancellation) {
    throw std::invalid_argument(id + " is not a cancellation lemma");
  }
  return verify(id, params, options);
}

}  // namespace cperm
