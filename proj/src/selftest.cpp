#include "cperm/selftest.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <deque>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>

#include "cperm/bijections.hpp"
#include "cperm/characters.hpp"
#include "cperm/enumerate.hpp"
#include "cperm/identities.hpp"
#include "cperm/involutions.hpp"
#include "cperm/json_io.hpp"
#include "cperm/series.hpp"
#include "cperm/statistics.hpp"

namespace cperm {

namespace {

constexpr std::uint64_t kSeed = 0x9e3779b97f4a7c15ULL;
constexpr std::size_t kMaxFailureLines = 200;

int parity(int v) { return v & 1; }

IdentityParams params(std::optional<int> r, std::optional<int> n, std::optional<int> b = std::nullopt,
                      std::optional<int> K = std::nullopt) {
  IdentityParams p;
  p.r = r;
  p.n = n;
  p.b = b;
  p.K = K;
  return p;
}

IdentityParams with_restriction(IdentityParams p, const RestrictionTuple& h) {
  p.restriction = h;
  return p;
}

std::string label(const std::string& id, const IdentityParams& p) { return id + " " + to_json(p).dump(); }

// Entries are nonempty except for an occasional empty one, which must zero both sides.
RestrictionTuple random_restriction(std::mt19937_64& rng, int r, int len) {
  std::uniform_int_distribution<ColorMask> mask(1, full_mask(r));
  std::uniform_int_distribution<int> coin(0, 15);
  std::vector<ColorMask> e(static_cast<std::size_t>(len));
  for (auto& m : e) m = coin(rng) == 0 ? 0 : mask(rng);
  return RestrictionTuple(r, std::move(e));
}

class Criterion {
 public:
  Criterion(int number, std::string title, const SelftestOptions& opt) : opt_(opt) {
    res_.number = number;
    res_.title = std::move(title);
  }

  bool full() const { return opt_.level == SelftestLevel::kFull; }
  int pick(int quick, int full_size) const { return full() ? full_size : quick; }

  void expect(bool ok, const std::string& what) {
    ++res_.checks;
    if (!ok) fail(what);
  }

  void fail(const std::string& what) {
    res_.pass = false;
    if (res_.failures.size() < kMaxFailureLines) res_.failures.push_back(what);
  }

  std::optional<IdentityReport> identity(const std::string& id, const IdentityParams& p) {
    ++res_.checks;
    try {
      IdentityReport rep = verify(id, p, VerifyOptions{opt_.jobs, opt_.tamper});
      if (!rep.equal) fail(label(id, p) + ": sides differ");
      return rep;
    } catch (const std::exception& e) {
      fail(label(id, p) + ": " + e.what());
      return std::nullopt;
    }
  }

  const SelftestOptions& options() const { return opt_; }
  CriterionResult& result() { return res_; }

 private:
  const SelftestOptions& opt_;
  CriterionResult res_;
};

// ---- identity criteria ----------------------------------------------------

void c01_macmahon(Criterion& c) {
  for (int n = 1; n <= 7; ++n) {
    c.identity("macmahon", params({}, n));
    c.identity("macmahon-inv", params({}, n));
  }
}

void c02_signed_eulerian(Criterion& c) {
  for (int n = 1; n <= c.pick(4, 5); ++n) c.identity("A-even", params({}, n));
  for (int n = 1; n <= c.pick(3, 4); ++n) c.identity("A-odd", params({}, n));
}

void c03_signed_euler_mahonian(Criterion& c) {
  for (int n = 1; n <= c.pick(3, 4); ++n) c.identity("A-EM", params({}, n));
}

void c04_gessel_simion(Criterion& c) {
  for (int n = 1; n <= 8; ++n) c.identity("gessel-simion", params({}, n));
  // t = 1 in the Euler-Mahonian identity on S_2n gives the signed Mahonian one
  for (int n = 1; n <= 3; ++n) {
    const auto em = c.identity("A-EM", params({}, n));
    const auto gs = c.identity("gessel-simion", params({}, 2 * n));
    if (!em || !gs) continue;
    c.expect(em->lhs.specialize(0, 1) == gs->lhs, "A-EM lhs at t=1 vs gessel-simion lhs, 2n=" + std::to_string(2 * n));
    c.expect(em->rhs.specialize(0, 1) == gs->rhs, "A-EM rhs at t=1 vs gessel-simion rhs, 2n=" + std::to_string(2 * n));
  }
}

void c05_main_even(Criterion& c) {
  const std::vector<std::pair<int, int>> limits = c.full()
                                                      ? std::vector<std::pair<int, int>>{{1, 4}, {2, 4}, {3, 3}, {4, 3}}
                                                      : std::vector<std::pair<int, int>>{{1, 4}, {2, 3}, {3, 2}, {4, 2}};
  for (const auto& [r, max_n] : limits) {
    for (int n = 1; n <= max_n; ++n) {
      for (int b = 0; b < r; ++b) c.identity("G-main-even", params(r, n, b));
    }
  }
}

// Refined report with the full restriction, all x_i collapsed, against the plain report.
void check_collapse(Criterion& c, const std::string& refined_id, const std::string& plain_id, IdentityParams p,
                    int r, int len) {
  const auto plain = c.identity(plain_id, p);
  const auto refined = c.identity(refined_id, with_restriction(p, RestrictionTuple::full(r, len)));
  if (!plain || !refined) return;
  const std::string where = refined_id + " collapsed vs " + label(plain_id, p);
  c.expect(refined->lhs.merge_slots(2, len, "x") == plain->lhs, where + " (lhs)");
  c.expect(refined->rhs.merge_slots(2, len, "x") == plain->rhs, where + " (rhs)");
}

void c06_main_even_refined(Criterion& c) {
  std::mt19937_64 rng(kSeed ^ 6);
  const std::vector<std::pair<int, int>> shapes{{2, 2}, {3, 2}, {4, 2}, {2, 3}};
  for (const auto& [r, n] : shapes) {
    for (int trial = 0; trial < 25; ++trial) {
      const RestrictionTuple h = random_restriction(rng, r, 2 * n);
      c.identity("G-main-even-refined", with_restriction(params(r, n, trial % r), h));
    }
    check_collapse(c, "G-main-even-refined", "G-main-even", params(r, n, r - 1), r, 2 * n);
  }
}

void c07_main_odd(Criterion& c) {
  std::mt19937_64 rng(kSeed ^ 7);
  for (int r = 1; r <= 6; ++r) {
    for (int n = 1; n <= 4; ++n) {
      for (int b = 0; b < r; ++b) {
        c.identity("G-main-odd", params(r, n, b));
        for (int trial = 0; trial < 2; ++trial) {
          c.identity("G-main-odd-refined", with_restriction(params(r, n, b), random_restriction(rng, r, n)));
        }
      }
      check_collapse(c, "G-main-odd-refined", "G-main-odd", params(r, n, r / 2), r, n);
    }
  }
}

void c08_type_b_folding(Criterion& c) {
  for (int n = 1; n <= c.pick(3, 4); ++n) {
    c.identity("B-EM-length", params({}, n));
    c.identity("B-EM-absinv", params({}, n));
    c.identity("B-signedM", params({}, n));
  }
  for (int n = 1; n <= 6; ++n) c.identity("B-neg-flip", params({}, n));

  std::mt19937_64 rng(kSeed ^ 8);
  for (int n : {2, 3}) {
    for (int trial = 0; trial < 25; ++trial) {
      c.identity("B-EM-length-refined", with_restriction(params({}, n), random_restriction(rng, 2, 2 * n)));
      c.identity("B-EM-absinv-refined", with_restriction(params({}, n), random_restriction(rng, 2, 2 * n)));
      c.identity("B-neg-flip-refined", with_restriction(params({}, 2 * n), random_restriction(rng, 2, 2 * n)));
    }
  }
  check_collapse(c, "B-EM-length-refined", "B-EM-length", params({}, 2), 2, 4);
  check_collapse(c, "B-EM-absinv-refined", "B-EM-absinv", params({}, 2), 2, 4);
  check_collapse(c, "B-neg-flip-refined", "B-neg-flip", params({}, 4), 2, 4);
}

void c09_b_odd_absinv(Criterion& c) {
  for (int n = 1; n <= c.pick(3, 4); ++n) c.identity("B-odd-absinv", params({}, n));
  std::mt19937_64 rng(kSeed ^ 9);
  for (int n : {1, 2}) {
    for (int trial = 0; trial < 25; ++trial) {
      c.identity("B-odd-absinv-refined", with_restriction(params({}, n), random_restriction(rng, 2, 2 * n + 1)));
    }
  }
}

void c10_b_odd_length(Criterion& c) {
  for (int n = 1; n <= c.pick(3, 4); ++n) c.identity("B-odd-length", params({}, n));
}

void c11_barred(Criterion& c) {
  for (int n = 1; n <= 6; ++n) {
    c.identity("lemma-lin", params({}, n));
    // fdes through sign changes, pointwise
    std::uint64_t mismatches = 0;
    enumerate(FamilySpec::hyperoctahedral(n), [&](const ColoredPermutation& p) {
      const FlagStats f = flag_stats(p);
      const SignChange s = sign_change(p);
      int w = s.ch;
      for (int i : f.des_set) {
        if (s.delta[static_cast<std::size_t>(i - 1)] == 0) w += 2;
      }
      mismatches += w != f.fdes;
    });
    c.expect(mismatches == 0, "fdes vs sign changes on B_" + std::to_string(n) + ": " +
                                  std::to_string(mismatches) + " mismatches");
    c.identity("eq-ch", params({}, n));
  }
  for (const char* id : {"lin-posi2", "lin-nega2", "lin-nepo", "brenti-series"}) {
    for (int n = 1; n <= 5; ++n) c.identity(id, params({}, n, {}, 8));
  }
  for (int n = 1; n <= 3; ++n) {
    for (int k = 0; k <= 6; ++k) {
      for (MaxSign sign : {MaxSign::kPlus, MaxSign::kMinus}) {
        std::uint64_t closed = 1;
        for (int i = 0; i < n; ++i) closed *= static_cast<std::uint64_t>(k + 1);
        closed *= sign == MaxSign::kPlus ? static_cast<std::uint64_t>((k + 2) / 2) : static_cast<std::uint64_t>((k + 1) / 2);
        const auto built = barred_by_insertion(n, k, sign);
        const std::string where = "barred n=" + std::to_string(n) + " k=" + std::to_string(k) +
                                  (sign == MaxSign::kPlus ? " plus" : " minus");
        c.expect(built.size() == closed, where + ": insertion count vs closed form");
        c.expect(count_barred_by_definition(n, k, sign) == closed, where + ": definition count vs closed form");
        std::set<std::string> distinct;
        bool valid = true;
        for (const auto& b : built) {
          valid = valid && is_flag_barred(b) && b.total() == k;
          distinct.insert(format_barred(b));
        }
        c.expect(valid && distinct.size() == built.size(), where + ": insertion output invalid or repeated");
      }
    }
  }
  for (int n = 1; n <= 6; ++n) {
    std::uint64_t bad = 0;
    enumerate(FamilySpec::hyperoctahedral(n), [&](const ColoredPermutation& p) {
      const BarredPermutation b = min_barred(p);
      bad += !is_flag_barred(b) || b.total() != fast::fdes(p);
    });
    c.expect(bad == 0, "min_barred total vs fdes on B_" + std::to_string(n));
  }
}

void c12_d_folding(Criterion& c) {
  for (int n = 1; n <= c.pick(3, 4); ++n) {
    c.identity("D-EM-even", params({}, n));
    c.identity("D-EM-even-refined", params({}, n));
  }
}

void c13_d_odd(Criterion& c) {
  for (int n = 1; n <= c.pick(3, 4); ++n) c.identity("D-odd-length", params({}, n));
}

void c14_generating_functions(Criterion& c) {
  for (int n = 1; n <= c.pick(7, 8); ++n) {
    c.identity("B-GF-length", params({}, n));
    c.identity("B-GF-neg", params({}, n));
    c.identity("B-GF-absinv", params({}, n));
  }
  for (int n = 1; n <= 7; ++n) {
    const auto rep = c.identity("D-GF", params({}, n));
    if (rep && n == 1) c.expect(rep->lhs == Poly::one(1, {"t", "q"}), "D-GF n=1 is not 1");
  }
}

// ---- involutions ----------------------------------------------------------

template <class Law>
void check_involution(Criterion& c, const InvolutionDomain& d, Law law) {
  const FamilySpec spec = d.family();
  const std::string where = to_string(d.tag) + " on " + spec.describe() +
                            (d.restriction ? " H=" + format_restriction(*d.restriction) : "");
  std::vector<ColoredPermutation> filtered;
  std::uint64_t not_involutive = 0;
  std::uint64_t escaped = 0;
  std::uint64_t broken = 0;
  enumerate(spec, [&](const ColoredPermutation& p) {
    const ColoredPermutation q = involute(d.tag, p);
    not_involutive += !(involute(d.tag, q) == p);
    bool inside = in_domain(d.tag, q);
    if (d.restriction) {
      for (int i = 0; i < q.size(); ++i) inside = inside && d.restriction->allows(i, q.color(i));
    }
    escaped += !inside;
    if (q == p) {
      filtered.push_back(p);
    } else {
      broken += !law(p, q);
    }
  });
  c.expect(not_involutive == 0, where + ": not self-inverse");
  c.expect(escaped == 0, where + ": image leaves the domain");
  c.expect(broken == 0, where + ": sign or statistic law fails on " + std::to_string(broken) + " elements");
  std::sort(filtered.begin(), filtered.end());
  c.expect(fixed_points(d) == filtered, where + ": structural fixed points differ from the filter");
}

void c15_involutions(Criterion& c) {
  auto flips = [](int a, int b) { return parity(a) != parity(b); };

  auto phi_g = [](const ColoredPermutation& p, const ColoredPermutation& q) {
    if (!std::equal(p.colors().begin(), p.colors().end(), q.colors().begin())) return false;
    if (flag_stats(p).des_set != flag_stats(q).des_set) return false;
    for (int b = 0; b < p.r(); ++b) {
      const CharacterValue x = character_value({1, b, CharacterForm::kLength}, p);
      const CharacterValue y = character_value({1, b, CharacterForm::kLength}, q);
      if (y.sign != -x.sign || y.omega_exp != x.omega_exp) return false;
    }
    return true;
  };
  auto phi_b = [&](const ColoredPermutation& p, const ColoredPermutation& q) {
    return flips(fast::inv_abs(p), fast::inv_abs(q)) && flips(fast::len_B(p), fast::len_B(q)) &&
           fast::fdes(p) == fast::fdes(q);
  };
  auto eta_iota = [&](const ColoredPermutation& p, const ColoredPermutation& q) {
    int pd, pm, qd, qm;
    fast::ddes_dmaj(p, pd, pm);
    fast::ddes_dmaj(q, qd, qm);
    return flips(fast::len_D(p), fast::len_D(q)) && pd == qd && pm == qm &&
           flag_stats(p).neg_set == flag_stats(q).neg_set;
  };
  auto des_b = [](const ColoredPermutation& p) {
    return descent_data(p, OrderTag::kNatural, DescentPrefix::kZero).set;
  };
  auto psi_b = [&](const ColoredPermutation& p, const ColoredPermutation& q) {
    return flips(fast::inv_abs(p), fast::inv_abs(q)) && des_b(p) == des_b(q);
  };
  auto psi_d = [&](const ColoredPermutation& p, const ColoredPermutation& q) {
    return flips(fast::len_D(p), fast::len_D(q)) &&
           descent_data(p, OrderTag::kNatural, DescentPrefix::kMinusSecond).set ==
               descent_data(q, OrderTag::kNatural, DescentPrefix::kMinusSecond).set;
  };
  auto theta = [&](const ColoredPermutation& p, const ColoredPermutation& q) {
    return flips(fast::neg(p), fast::neg(q)) && flips(fast::len_B(p), fast::len_B(q)) && des_b(p) == des_b(q);
  };

  std::mt19937_64 rng(kSeed ^ 15);
  for (int r = 1; r <= 3; ++r) {
    for (int size : {2, 4}) {
      check_involution(c, {InvolutionTag::kPhi, r, size, std::nullopt}, phi_g);
      for (int trial = 0; trial < 3; ++trial) {
        check_involution(c, {InvolutionTag::kPhi, r, size, random_restriction(rng, r, size)}, phi_g);
      }
    }
  }
  for (int size : {3, 5, 7}) {
    check_involution(c, {InvolutionTag::kPhi, 2, size, std::nullopt}, phi_b);
    check_involution(c, {InvolutionTag::kIota, 2, size, std::nullopt}, eta_iota);
  }
  for (int size : {2, 4, 6}) check_involution(c, {InvolutionTag::kEta, 2, size, std::nullopt}, eta_iota);
  for (int n = 1; n <= 6; ++n) {
    check_involution(c, {InvolutionTag::kPsiB, 2, n, std::nullopt}, psi_b);
    check_involution(c, {InvolutionTag::kTheta, 2, n, std::nullopt}, theta);
    if (n >= 2) check_involution(c, {InvolutionTag::kPsiD, 2, n, std::nullopt}, psi_d);
  }

  for (int r = 1; r <= 3; ++r) {
    for (int n = 1; n <= 2; ++n) {
      for (int b = 0; b < r; ++b) c.identity("cancel-phi", params(r, n, b));
      for (int trial = 0; trial < 3; ++trial) {
        c.identity("cancel-phi", with_restriction(params(r, n, trial % r), random_restriction(rng, r, 2 * n)));
      }
    }
  }
  for (int n = 1; n <= 3; ++n) {
    c.identity("cancel-B-absinv", params({}, n));
    c.identity("cancel-B-length", params({}, n));
    c.identity("cancel-D-even", params({}, n));
    c.identity("cancel-D-odd", params({}, n));
  }
  for (int n = 1; n <= 2; ++n) {
    for (int trial = 0; trial < 3; ++trial) {
      c.identity("cancel-B-absinv", with_restriction(params({}, n), random_restriction(rng, 2, 2 * n + 1)));
    }
  }
  for (int n = 1; n <= 6; ++n) {
    c.identity("cancel-theta-neg", params({}, n));
    c.identity("cancel-theta-length", params({}, n));
    c.identity("cancel-psi-B", params({}, n));
    if (n >= 2) c.identity("cancel-psi-D", params({}, n));
  }
}

// ---- hat bijections -------------------------------------------------------

struct HatCase {
  HatVariant variant;
  int r;
  int n;
};

std::string variant_name(HatVariant v) {
  switch (v) {
    case HatVariant::kGEven: return "G-even";
    case HatVariant::kBOdd: return "B-odd";
    case HatVariant::kDEven: return "D-even";
    case HatVariant::kDOdd: return "D-odd";
  }
  return "?";
}

FamilySpec base_family(const HatCase& hc) {
  switch (hc.variant) {
    case HatVariant::kGEven: return FamilySpec::colored(hc.r, hc.n);
    case HatVariant::kBOdd: return FamilySpec::hyperoctahedral(hc.n + 1);
    case HatVariant::kDEven: return FamilySpec::even_signed(hc.n);
    case HatVariant::kDOdd: return FamilySpec::even_signed(hc.n + 1);
  }
  return {};
}

InvolutionDomain fold_domain(const HatCase& hc) {
  const bool odd = hc.variant == HatVariant::kBOdd || hc.variant == HatVariant::kDOdd;
  return {involution_of(hc.variant), hc.r, odd ? 2 * hc.n + 1 : 2 * hc.n, std::nullopt};
}

int sum_of(const std::vector<int>& v, int scale, int offset) {
  int s = 0;
  for (int i : v) s += scale * i + offset;
  return s;
}

// Transfer laws between a fixed point p and its image h.
bool transfer_laws(HatVariant v, const ColoredPermutation& p, const HattedPermutation& h) {
  const ColoredPermutation& q = h.base;
  const HatPartition part = hat_partition(h);
  const int hats = static_cast<int>(part.positions.size());
  switch (v) {
    case HatVariant::kGEven: {
      const int r = p.r();
      for (int i = 0; i < q.size(); ++i) {
        if (p.color(2 * i) != q.color(i) || p.color(2 * i + 1) != q.color(i)) return false;
      }
      const FlagStats fp = flag_stats(p);
      const FlagStats fq = flag_stats(q);
      std::vector<int> des;
      for (int i : fq.des_set) des.push_back(2 * i);
      for (int i : part.positions) des.push_back(2 * i - 1);
      std::sort(des.begin(), des.end());
      if (fp.des_set != des) return false;
      if (fp.col != 2 * fq.col) return false;
      if (fp.fdes != fq.fdes + r * hats) return false;
      if (fp.fmaj != 2 * fq.fmaj + r * sum_of(part.positions, 2, -1)) return false;
      for (int b = 0; b < r; ++b) {
        const CharacterValue x = character_value({1, b, CharacterForm::kLength}, p);
        const int expected_sign = parity(hats) ? -1 : 1;
        if (x.sign != expected_sign || x.omega_exp != (2 * b * fq.col) % r) return false;
      }
      return true;
    }
    case HatVariant::kBOdd: {
      const int letters = static_cast<int>(part.letters.size());
      return parity(fast::inv_abs(p)) == parity(letters) && fast::fdes(p) == fast::fdes(q) + 2 * letters &&
             parity(fast::len_B(p)) == parity(hats + fast::sgm(q)) && fast::fdes(p) == fast::fdes(q) + 2 * hats;
    }
    case HatVariant::kDEven: {
      int pd, pm, qd, qm;
      fast::ddes_dmaj(p, pd, pm);
      fast::ddes_dmaj(q, qd, qm);
      std::vector<int> neg;
      for (int i : flag_stats(q).neg_set) {
        if (i == q.size()) continue;
        neg.push_back(2 * i - 1);
        neg.push_back(2 * i);
      }
      return parity(fast::len_D(p)) == parity(hats) && pd == qd + 2 * hats &&
             pm == 2 * qm + sum_of(part.positions, 4, -2) && flag_stats(p).neg_set == neg;
    }
    case HatVariant::kDOdd: {
      int pd, pm, qd, qm;
      fast::ddes_dmaj(p, pd, pm);
      fast::ddes_dmaj(q, qd, qm);
      return parity(fast::len_D(p)) == parity(hats) && pd == qd + 2 * static_cast<int>(part.letters.size());
    }
  }
  return false;
}

void check_hat(Criterion& c, const HatCase& hc) {
  const std::string where = variant_name(hc.variant) + " r=" + std::to_string(hc.r) + " n=" + std::to_string(hc.n);
  const InvolutionDomain domain = fold_domain(hc);
  const auto fixed = fixed_points(domain);
  std::uint64_t bad_round = 0;
  std::uint64_t bad_law = 0;
  for (const auto& p : fixed) {
    try {
      const HattedPermutation h = hat_forward(hc.variant, p);
      bad_round += !(hat_backward(hc.variant, h) == p);
      bad_law += !transfer_laws(hc.variant, p, h);
    } catch (const std::exception&) {
      ++bad_round;
    }
  }
  c.expect(bad_round == 0, where + ": forward-then-backward roundtrip");
  c.expect(bad_law == 0, where + ": transfer laws fail on " + std::to_string(bad_law) + " fixed points");

  // every hatted image folds back
  const bool odd = hc.variant == HatVariant::kBOdd || hc.variant == HatVariant::kDOdd;
  std::uint64_t images = 0;
  std::uint64_t bad_back = 0;
  enumerate(base_family(hc), [&](const ColoredPermutation& q) {
    const int m = q.size();
    const int max_pos = odd ? q.position_of(m) : -1;
    for (std::uint32_t hats = 0; hats < (1U << m); ++hats) {
      if (max_pos >= 0 && ((hats >> max_pos) & 1U)) continue;
      ++images;
      try {
        const HattedPermutation h{q, hats};
        const ColoredPermutation p = hat_backward(hc.variant, h);
        bad_back += !(involute(domain.tag, p) == p) || !(hat_forward(hc.variant, p) == h);
      } catch (const std::exception&) {
        ++bad_back;
      }
    }
  });
  c.expect(bad_back == 0, where + ": backward-then-forward roundtrip");
  c.expect(images == fixed.size(), where + ": " + std::to_string(fixed.size()) + " fixed points but " +
                                       std::to_string(images) + " hatted images");
}

void c16_hats(Criterion& c) {
  for (int r = 1; r <= 3; ++r) {
    for (int n = 1; n <= 3; ++n) check_hat(c, {HatVariant::kGEven, r, n});
  }
  for (int n = 1; n <= 3; ++n) {
    check_hat(c, {HatVariant::kBOdd, 2, n});
    check_hat(c, {HatVariant::kDEven, 2, n});
    check_hat(c, {HatVariant::kDOdd, 2, n});
  }
}

// ---- characters -----------------------------------------------------------

bool multiplicative(const CharacterLabel& l, const ColoredPermutation& p, const ColoredPermutation& q) {
  const CharacterValue x = character_value(l, p);
  const CharacterValue y = character_value(l, q);
  const CharacterValue z = character_value(l, compose(p, q));
  return z.sign == x.sign * y.sign && z.omega_exp == (x.omega_exp + y.omega_exp) % p.r();
}

std::vector<CharacterLabel> all_labels(int r) {
  std::vector<CharacterLabel> out;
  for (CharacterForm form : {CharacterForm::kLength, CharacterForm::kClassical}) {
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < r; ++b) out.push_back({a, b, form});
    }
  }
  return out;
}

ColoredPermutation random_element(std::mt19937_64& rng, int r, int n) {
  std::vector<int> sigma(static_cast<std::size_t>(n));
  std::iota(sigma.begin(), sigma.end(), 1);
  std::shuffle(sigma.begin(), sigma.end(), rng);
  std::uniform_int_distribution<int> color(0, r - 1);
  std::vector<int> z(static_cast<std::size_t>(n));
  for (auto& v : z) v = color(rng);
  return ColoredPermutation(r, sigma, z);
}

void c17_characters(Criterion& c) {
  for (int r = 1; r <= 3; ++r) {
    for (int n = 1; n <= 3; ++n) {
      const auto elems = collect(FamilySpec::colored(r, n));
      for (const auto& l : all_labels(r)) {
        std::uint64_t bad = 0;
        for (const auto& p : elems) {
          for (const auto& q : elems) bad += !multiplicative(l, p, q);
        }
        c.expect(bad == 0, "character (" + std::to_string(l.a) + "," + std::to_string(l.b) +
                               (l.form == CharacterForm::kLength ? ", length" : ", classical") +
                               ") not multiplicative on G_{" + std::to_string(r) + "," + std::to_string(n) + "}");
      }
    }
  }

  std::mt19937_64 rng(kSeed ^ 17);
  std::uniform_int_distribution<int> pick_r(1, 6);
  std::uniform_int_distribution<int> pick_n(1, 5);
  std::uniform_int_distribution<int> pick_a(0, 1);
  std::uniform_int_distribution<int> pick_form(0, 1);
  std::uint64_t bad_random = 0;
  for (int trial = 0; trial < 10000; ++trial) {
    const int r = pick_r(rng);
    const int n = pick_n(rng);
    const int a = pick_a(rng);
    const int b = std::uniform_int_distribution<int>(0, r - 1)(rng);
    const CharacterForm form = pick_form(rng) == 0 ? CharacterForm::kLength : CharacterForm::kClassical;
    const ColoredPermutation p = random_element(rng, r, n);
    const ColoredPermutation q = random_element(rng, r, n);
    bad_random += !multiplicative({a, b, form}, p, q);
  }
  c.expect(bad_random == 0, std::to_string(bad_random) + " of 10000 random pairs break multiplicativity");

  // r = 2: the four length-form characters against the classical sign characters
  for (int n = 1; n <= 4; ++n) {
    const auto elems = collect(FamilySpec::hyperoctahedral(n));
    std::set<std::vector<int>> length_form;
    std::set<std::vector<int>> classical;
    std::vector<int> neg_sign;
    std::vector<int> len_sign;
    std::vector<int> abs_sign;
    std::vector<int> trivial(elems.size(), 1);
    for (const auto& p : elems) {
      neg_sign.push_back(parity(fast::neg(p)) ? -1 : 1);
      len_sign.push_back(parity(fast::len_B(p)) ? -1 : 1);
      abs_sign.push_back(parity(fast::inv_abs(p)) ? -1 : 1);
    }
    for (int a = 0; a < 2; ++a) {
      for (int b = 0; b < 2; ++b) {
        std::vector<int> table;
        for (const auto& p : elems) {
          const CharacterValue v = character_value({a, b, CharacterForm::kLength}, p);
          table.push_back(v.sign * (v.omega_exp == 0 ? 1 : -1));
        }
        if (a == 0 && b == 1) c.expect(table == neg_sign, "chi_{0,1} vs (-1)^neg on B_" + std::to_string(n));
        if (a == 1 && b == 1) c.expect(table == len_sign, "chi_{1,1} vs (-1)^len_B on B_" + std::to_string(n));
        length_form.insert(table);
      }
    }
    classical = {trivial, neg_sign, abs_sign, len_sign};
    c.expect(length_form == classical, "character sets differ on B_" + std::to_string(n));
  }

  for (int r = 1; r <= 4; ++r) {
    for (int n = 1; n <= 3; ++n) {
      const auto corr = label_correspondence(r, n);
      std::set<std::pair<int, int>> hit;
      bool every_length_label = true;
      for (const auto& matches : corr) {
        every_length_label = every_length_label && !matches.empty();
        hit.insert(matches.begin(), matches.end());
      }
      c.expect(every_length_label && hit.size() == static_cast<std::size_t>(2 * r),
               "length and classical labels disagree on G_{" + std::to_string(r) + "," + std::to_string(n) + "}");
    }
  }
}

// ---- length by breadth-first search ---------------------------------------

void check_bfs(Criterion& c, const FamilySpec& spec, GeneratorSet gens, LengthFamily family) {
  const ColoredPermutation e = ColoredPermutation::identity(spec.r, spec.n);
  std::map<ColoredPermutation, int> dist{{e, 0}};
  std::deque<ColoredPermutation> queue{e};
  const int first = gens == GeneratorSet::kTypeD && spec.n < 2 ? 1 : 0;
  while (!queue.empty()) {
    const ColoredPermutation p = queue.front();
    queue.pop_front();
    for (int i = first; i < spec.n; ++i) {
      const ColoredPermutation q = apply_generator(p, i, gens);
      if (dist.emplace(q, dist[p] + 1).second) queue.push_back(q);
    }
  }
  std::uint64_t bad = 0;
  std::uint64_t seen = 0;
  enumerate(spec, [&](const ColoredPermutation& p) {
    ++seen;
    const auto it = dist.find(p);
    bad += it == dist.end() || it->second != length(p, family);
  });
  c.expect(bad == 0 && seen == dist.size(), "length vs word length on " + spec.describe());
}

void c18_bfs(Criterion& c) {
  for (int n = 1; n <= 4; ++n) {
    check_bfs(c, FamilySpec::hyperoctahedral(n), GeneratorSet::kColored, LengthFamily::kB);
    check_bfs(c, FamilySpec::even_signed(n), GeneratorSet::kTypeD, LengthFamily::kD);
  }
  for (int r = 1; r <= 3; ++r) {
    for (int n = 1; n <= 3; ++n) check_bfs(c, FamilySpec::colored(r, n), GeneratorSet::kColored, LengthFamily::kG);
  }
}

// ---- determinism ----------------------------------------------------------

void c19_determinism(Criterion& c) {
  std::vector<std::pair<std::string, IdentityParams>> runs;
  for (const auto& info : list_identities()) runs.emplace_back(info.id, info.smallest);
  runs.emplace_back("G-main-even", params(3, 2, 1));
  runs.emplace_back("G-main-odd-refined", with_restriction(params(4, 3, 3), RestrictionTuple(4, {0b1011, 0b0110, 0b1111})));
  runs.emplace_back("B-odd-absinv-refined",
                    with_restriction(params({}, 2), RestrictionTuple(2, {0b11, 0b10, 0b01, 0b11, 0b11})));
  runs.emplace_back("D-EM-even-refined", params({}, 2));
  runs.emplace_back("B-GF-absinv", params({}, 5));
  runs.emplace_back("lin-nepo", params({}, 3, {}, 8));

  const std::string& tamper = c.options().tamper;
  for (const auto& [id, p] : runs) {
    try {
      const IdentityReport a = verify(id, p, VerifyOptions{1, tamper});
      const IdentityReport b = verify(id, p, VerifyOptions{1, tamper});
      const IdentityReport d = verify(id, p, VerifyOptions{4, tamper});
      const std::string ja = dump(to_json(a, false));
      c.expect(a.equal, label(id, p) + ": sides differ");
      c.expect(ja == dump(to_json(b, false)), label(id, p) + ": repeated run differs");
      c.expect(ja == dump(to_json(d, false)), label(id, p) + ": jobs=4 differs from jobs=1");
    } catch (const std::exception& e) {
      c.fail(label(id, p) + ": " + e.what());
    }
  }

  std::mt19937_64 rng(kSeed ^ 19);
  for (int trial = 0; trial < 20; ++trial) {
    const int r = 1 + trial % 4;
    const ColoredPermutation p = random_element(rng, r, 1 + trial % 7);
    c.expect(dump(to_json(stat_bundle(p))) == dump(to_json(stat_bundle(p))),
             "stat bundle JSON unstable for " + format_window(p));
  }
  const InvolutionDomain d{InvolutionTag::kIota, 2, 5, std::nullopt};
  c.expect(fixed_points(d) == fixed_points(d), "fixed point listing unstable");
}

using Body = void (*)(Criterion&);

struct Plan {
  int number;
  const char* title;
  Body body;
};

const std::vector<Plan>& plans() {
  static const std::vector<Plan> v{
      {1, "major index and inversions are Mahonian on S_n", c01_macmahon},
      {2, "signed Eulerian folding on S_2n and S_2n+1", c02_signed_eulerian},
      {3, "signed Euler-Mahonian folding on S_2n", c03_signed_euler_mahonian},
      {4, "signed Mahonian product and its t=1 coherence", c04_gessel_simion},
      {5, "even folding over G_{r,2n}, every b", c05_main_even},
      {6, "even folding with per-position variables, seeded H", c06_main_even_refined},
      {7, "character moved onto fmaj over G_{r,n}, plain and restricted", c07_main_odd},
      {8, "type B folding by length, |p| inversions and neg", c08_type_b_folding},
      {9, "odd type B folding signed by |p| inversions", c09_b_odd_absinv},
      {10, "odd type B folding signed by length", c10_b_odd_length},
      {11, "largest-letter sign, sign changes, barred series", c11_barred},
      {12, "type D folding, plain and with distinct variables", c12_d_folding},
      {13, "odd type D folding", c13_d_odd},
      {14, "signed descent generating functions in B_n and D_n", c14_generating_functions},
      {15, "involution laws, fixed points, cancellation", c15_involutions},
      {16, "hat bijection roundtrips and transfer laws", c16_hats},
      {17, "one-dimensional characters", c17_characters},
      {18, "length functions against breadth-first word length", c18_bfs},
      {19, "deterministic JSON across runs and worker counts", c19_determinism},
  };
  return v;
}

}  // namespace

bool SelftestReport::all_pass() const {
  return std::all_of(criteria.begin(), criteria.end(), [](const CriterionResult& r) { return r.pass; });
}

SelftestReport run_selftest(const SelftestOptions& options) {
  SelftestReport report;
  for (const Plan& plan : plans()) {
    if (!options.only.empty() &&
        std::find(options.only.begin(), options.only.end(), plan.number) == options.only.end()) {
      continue;
    }
    Criterion c(plan.number, plan.title, options);
    const auto start = std::chrono::steady_clock::now();
    try {
      plan.body(c);
    } catch (const std::exception& e) {
      c.fail(std::string("aborted: ") + e.what());
    }
    c.result().seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (options.on_result) options.on_result(c.result());
    report.criteria.push_back(std::move(c.result()));
  }
  return report;
}

std::string format_result(const CriterionResult& r, bool with_timing) {
  char head[32];
  std::snprintf(head, sizeof head, "%s %02d ", r.pass ? "PASS" : "FAIL", r.number);
  std::string out = head + r.title + " (" + std::to_string(r.checks) + " checks";
  if (with_timing) {
    char t[32];
    std::snprintf(t, sizeof t, ", %.2f s", r.seconds);
    out += t;
  }
  return out + ")";
}

}  // namespace cperm
