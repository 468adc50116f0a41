#include "lgbridge/serialize.hpp"

#include <stdexcept>
#include <string>

namespace lgbridge {

namespace {

using nlohmann::json;

json integer_field(const std::string& digits) {
  try {
    std::size_t used = 0;
    const long long v = std::stoll(digits, &used);
    if (used == digits.size()) return v;
  } catch (const std::out_of_range&) {
  }
  return digits;
}

std::string integer_text(const json& v, const char* field) {
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    const std::size_t start = (!s.empty() && s[0] == '-') ? 1 : 0;
    if (s.size() == start || s.find_first_not_of("0123456789", start) != std::string::npos)
      throw std::invalid_argument(std::string("polynomial term: bad ") + field);
    return s;
  }
  throw std::invalid_argument(std::string("polynomial term: missing or non-integer ") + field);
}

json term(const Rational& c, int h0, int h1, int y) {
  return {{"numerator", integer_field(c.numerator_str())},
          {"denominator", integer_field(c.denominator_str())},
          {"half_exp_t0", h0},
          {"half_exp_t1", h1},
          {"y_degree", y}};
}

void append(json& out, const LaurentHalf2& p, int y) {
  for (const auto& [e, c] : p.terms()) out.push_back(term(c, e[0], e[1], y));
}

int int_field(const json& t, const char* field) {
  if (!t.contains(field) || !t.at(field).is_number_integer())
    throw std::invalid_argument(std::string("polynomial term: missing or non-integer ") + field);
  return t.at(field).get<int>();
}

}  // namespace

json to_json(const LaurentHalf& p) {
  json out = json::array();
  for (const auto& [e, c] : p.terms()) out.push_back(term(c, e[0], 0, 0));
  return out;
}

json to_json(const LaurentHalf2& p) {
  json out = json::array();
  append(out, p, 0);
  return out;
}

json to_json(const ExtScalar& p) {
  json out = json::array();
  append(out, p.base(), 0);
  append(out, p.ycoef(), 1);
  return out;
}

ExtScalar ext_scalar_from_json(const json& terms) {
  if (!terms.is_array()) throw std::invalid_argument("polynomial must be a JSON array of terms");
  LaurentHalf2 base, ycoef;
  for (const auto& t : terms) {
    if (!t.is_object()) throw std::invalid_argument("polynomial term must be an object");
    const mpq_class q(mpz_class(integer_text(t.value("numerator", json()), "numerator")),
                      mpz_class(integer_text(t.value("denominator", json()), "denominator")));
    if (q.get_den() == 0) throw std::invalid_argument("polynomial term: zero denominator");
    mpq_class canonical = q;
    canonical.canonicalize();
    const int y = int_field(t, "y_degree");
    if (y != 0 && y != 1) throw std::invalid_argument("polynomial term: y_degree must be 0 or 1");
    const auto mono = t2_pow(int_field(t, "half_exp_t0"), int_field(t, "half_exp_t1"), Rational(canonical));
    (y == 0 ? base : ycoef) += mono;
  }
  return {base, ycoef};
}

LaurentHalf laurent_from_json(const json& terms) {
  const ExtScalar x = ext_scalar_from_json(terms);
  if (!x.ycoef().is_zero()) throw std::invalid_argument("polynomial has a Y part");
  LaurentHalf out;
  for (const auto& [e, c] : x.base().terms()) {
    if (e[1] != 0) throw std::invalid_argument("polynomial depends on t1");
    out += t_pow(e[0], c);
  }
  return out;
}

json to_json(const Unit& u) { return {{"sign", u.sign}, {"half_shift", u.shift}}; }

json to_json(const BraidWord& b) {
  json word = json::array();
  for (const auto& l : b.letters()) word.push_back(l.sign * l.index);
  return {{"strands", b.strands()}, {"word", word}};
}

}  // namespace lgbridge
