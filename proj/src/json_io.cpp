#include "cperm/json_io.hpp"

#include <limits>
#include <stdexcept>

namespace cperm {

namespace {

Json number(const mpz_class& v) {
  if (mpz_fits_slong_p(v.get_mpz_t()) != 0) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

Json int_list(const std::vector<int>& v) {
  Json a = Json::array();
  for (int x : v) a.push_back(x);
  return a;
}

Json descent_json(const DescentData& d) {
  return Json{{"set", int_list(d.set)}, {"des", d.count}, {"maj", d.index_sum}};
}

ColorMask entry_from_json(const Json& e, int r) {
  if (e.is_string()) {
    if (r != 2) throw std::invalid_argument("sign shorthand in a restriction requires r = 2");
    const std::string s = e.get<std::string>();
    if (s == "+") return 1;
    if (s == "-" || s == "−") return 2;
    if (s == "±" || s == "+-" || s == "+/-") return 3;
    if (s == "∅" || s.empty()) return 0;
    throw std::invalid_argument("unknown restriction shorthand '" + s + "'");
  }
  if (!e.is_array()) throw std::invalid_argument("restriction entries must be arrays or sign strings");
  ColorMask m = 0;
  for (const auto& c : e) {
    if (!c.is_number_integer()) throw std::invalid_argument("restriction colors must be integers");
    const int v = c.get<int>();
    if (v < 0 || v >= r) throw std::invalid_argument("restriction color " + std::to_string(v) + " outside Z_r");
    m |= ColorMask{1} << v;
  }
  return m;
}

}  // namespace

Json to_json(const CyclotomicInt& c) {
  Json a = Json::array();
  for (const auto& v : c.coeffs()) a.push_back(number(v));
  return a;
}

Json to_json(const Poly& p) {
  Json terms = Json::array();
  for (const auto& [e, c] : p.terms()) {
    Json exp = Json::array();
    for (auto x : e) exp.push_back(x);
    terms.push_back(Json{{"exp", exp}, {"coef", to_json(c)}});
  }
  Json vars = Json::array();
  for (const auto& v : p.vars()) vars.push_back(v);
  return Json{{"r", p.order()}, {"vars", vars}, {"terms", terms}};
}

Json to_json(const TruncatedSeries& s) {
  Json a = Json::array();
  for (const auto& v : s.coeffs()) a.push_back(number(v));
  return a;
}

Json to_json(const RestrictionTuple& s) {
  Json a = Json::array();
  for (ColorMask m : s.entries) {
    Json e = Json::array();
    for (int c = 0; c < s.r; ++c) {
      if ((m >> c) & 1U) e.push_back(c);
    }
    a.push_back(e);
  }
  return a;
}

Json to_json(const IdentityParams& p) {
  Json j = Json::object();
  if (p.r) j["r"] = *p.r;
  if (p.n) j["n"] = *p.n;
  if (p.b) j["b"] = *p.b;
  if (p.K) j["K"] = *p.K;
  if (p.restriction) j["restriction"] = to_json(*p.restriction);
  return j;
}

Json to_json(const IdentityReport& report, bool with_timing) {
  Json j;
  j["id"] = report.id;
  j["params"] = to_json(report.params);
  j["equal"] = report.equal;
  j["elements"] = report.elements;
  if (with_timing) j["elapsed_ms"] = report.elapsed_ms;
  j["lhs"] = to_json(report.lhs);
  j["rhs"] = to_json(report.rhs);
  Json notes = Json::array();
  for (const auto& n : report.notes) notes.push_back(n);
  j["notes"] = notes;
  return j;
}

Json to_json(const StatBundle& s) {
  Json j;
  j["r"] = s.r;
  j["n"] = s.n;
  if (s.inv_natural) j["inv_natural"] = *s.inv_natural;
  j["inv_L"] = s.inv_L;
  j["inv_abs"] = s.inv_abs;
  if (s.plain) {
    j["Des"] = int_list(s.plain->set);
    j["des"] = s.plain->count;
    j["maj"] = s.plain->index_sum;
  }
  j["Des_F"] = int_list(s.flag.des_set);
  j["des_F"] = s.flag.des;
  j["maj_F"] = s.flag.maj;
  j["fdes"] = s.flag.fdes;
  j["fmaj"] = s.flag.fmaj;
  j["col"] = s.flag.col;
  j["neg"] = s.flag.neg;
  j["Neg"] = int_list(s.flag.neg_set);
  j["len_G"] = s.len_G;
  if (s.len_B) j["len_B"] = *s.len_B;
  if (s.len_D) j["len_D"] = *s.len_D;
  if (s.type_b) j["type_B"] = descent_json(*s.type_b);
  if (s.type_d) j["type_D"] = descent_json(*s.type_d);
  if (s.d) {
    j["ddes"] = s.d->ddes;
    j["dmaj"] = s.d->dmaj;
    j["sgm"] = s.d->sgm;
  }
  if (s.sign) {
    std::string bits;
    for (int b : s.sign->delta) bits += static_cast<char>('0' + b);
    j["delta"] = bits;
    j["ch"] = s.sign->ch;
  }
  return j;
}

RestrictionTuple restriction_from_json(const Json& j, int r) {
  const Json* entries = &j;
  if (j.is_object()) {
    if (!j.contains("entries")) throw std::invalid_argument("restriction object needs \"entries\"");
    if (j.contains("r")) r = j.at("r").get<int>();
    entries = &j.at("entries");
  }
  if (!entries->is_array()) throw std::invalid_argument("restriction must be a JSON array");
  std::vector<ColorMask> masks;
  for (const auto& e : *entries) masks.push_back(entry_from_json(e, r));
  return RestrictionTuple(r, std::move(masks));
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace cperm
