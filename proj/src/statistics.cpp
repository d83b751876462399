#include "cperm/statistics.hpp"

#include <stdexcept>

namespace cperm {

namespace {

int key(OrderTag ord, const ColoredPermutation& p, int i) {
  switch (ord) {
    case OrderTag::kNatural: return p.signed_value(i);
    case OrderTag::kOrderL: return fast::order_l_key(p.r(), p.letter(i), p.color(i));
    case OrderTag::kFlag: return fast::flag_key(p.r(), p.letter(i), p.color(i));
  }
  return 0;
}

void require_natural(const ColoredPermutation& p, OrderTag ord) {
  if (ord == OrderTag::kNatural && p.r() > 2) {
    throw std::invalid_argument("the natural order is defined for r <= 2 only");
  }
}

void require_signed(const ColoredPermutation& p, const char* what) {
  if (p.r() != 2) throw std::invalid_argument(std::string(what) + " requires r = 2");
}

}  // namespace

int inversions(const ColoredPermutation& p, OrderTag ord) {
  require_natural(p, ord);
  int s = 0;
  for (int i = 0; i < p.size(); ++i) {
    for (int j = i + 1; j < p.size(); ++j) s += key(ord, p, i) > key(ord, p, j);
  }
  return s;
}

DescentData descent_data(const ColoredPermutation& p, OrderTag ord, DescentPrefix prefix) {
  require_natural(p, ord);
  if (prefix != DescentPrefix::kNone && ord != OrderTag::kNatural) {
    throw std::invalid_argument("descent prefixes apply to the natural order only");
  }
  const int n = p.size();
  DescentData d;
  auto mark = [&](int i) {
    d.set.push_back(i);
    ++d.count;
    d.index_sum += i;
  };
  if (prefix == DescentPrefix::kZero && n > 0 && 0 > p.signed_value(0)) mark(0);
  if (prefix == DescentPrefix::kMinusSecond) {
    if (n < 2) throw std::invalid_argument("pi_0 = -pi_2 needs n >= 2");
    if (-p.signed_value(1) > p.signed_value(0)) mark(0);
  }
  for (int i = 1; i < n; ++i) {
    if (key(ord, p, i - 1) > key(ord, p, i)) mark(i);
  }
  return d;
}

FlagStats flag_stats(const ColoredPermutation& p) {
  FlagStats f;
  const DescentData d = descent_data(p, OrderTag::kFlag, DescentPrefix::kNone);
  f.des_set = d.set;
  f.des = d.count;
  f.maj = d.index_sum;
  f.col = fast::col(p);
  f.fdes = p.r() * f.des + (p.size() > 0 ? p.color(0) : 0);
  f.fmaj = p.r() * f.maj + f.col;
  for (int i = 0; i < p.size(); ++i) {
    if (p.color(i) != 0) {
      ++f.neg;
      f.neg_set.push_back(i + 1);
    }
  }
  return f;
}

int length(const ColoredPermutation& p, LengthFamily family) {
  switch (family) {
    case LengthFamily::kG:
      return fast::len_G(p);
    case LengthFamily::kB:
      require_signed(p, "type B length");
      return fast::len_B(p);
    case LengthFamily::kD:
      require_signed(p, "type D length");
      if (fast::neg(p) % 2 != 0) throw std::invalid_argument("type D length needs an even number of negatives");
      return fast::len_D(p);
  }
  return 0;
}

ColoredPermutation with_last_uncolored(const ColoredPermutation& p) {
  ColoredPermutation q = p;
  if (q.size() > 0) detail::Access::colors(q)[q.size() - 1] = 0;
  return q;
}

DStats d_stats(const ColoredPermutation& p) {
  require_signed(p, "ddes/dmaj");
  const FlagStats f = flag_stats(with_last_uncolored(p));
  return DStats{f.fdes, f.fmaj, fast::sgm(p)};
}

SignChange sign_change(const ColoredPermutation& p) {
  require_signed(p, "sign change");
  SignChange s;
  const int n = p.size();
  for (int i = 0; i < n; ++i) {
    const int bit = i + 1 < n ? ((p.color(i) != 0) != (p.color(i + 1) != 0)) : (p.color(i) != 0);
    s.delta.push_back(bit);
    s.ch += bit;
  }
  return s;
}

StatBundle stat_bundle(const ColoredPermutation& p) {
  StatBundle b;
  b.r = p.r();
  b.n = p.size();
  b.inv_L = inversions(p, OrderTag::kOrderL);
  b.inv_abs = fast::inv_abs(p);
  b.flag = flag_stats(p);
  b.len_G = length(p, LengthFamily::kG);
  if (p.r() == 1) b.plain = descent_data(p, OrderTag::kNatural, DescentPrefix::kNone);
  if (p.r() <= 2) b.inv_natural = inversions(p, OrderTag::kNatural);
  if (p.r() == 2) {
    b.len_B = length(p, LengthFamily::kB);
    if (b.flag.neg % 2 == 0) b.len_D = length(p, LengthFamily::kD);
    b.type_b = descent_data(p, OrderTag::kNatural, DescentPrefix::kZero);
    if (p.size() >= 2) b.type_d = descent_data(p, OrderTag::kNatural, DescentPrefix::kMinusSecond);
    b.d = d_stats(p);
    b.sign = sign_change(p);
  }
  return b;
}

}  // namespace cperm
