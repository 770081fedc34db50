#include "conckit/laurent.hpp"

#include "conckit/error.hpp"

namespace conckit {

LaurentPoly::LaurentPoly(Integer constant) { add_term(0, constant); }

LaurentPoly::LaurentPoly(std::initializer_list<std::pair<Exponent, long long>> terms) {
  for (const auto& [e, c] : terms) add_term(e, Integer(c));
}

LaurentPoly::LaurentPoly(const Terms& terms) {
  for (const auto& [e, c] : terms) add_term(e, c);
}

LaurentPoly LaurentPoly::monomial(Integer coeff, Exponent exp) {
  LaurentPoly p;
  p.add_term(exp, coeff);
  return p;
}

void LaurentPoly::add_term(Exponent e, const Integer& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

Integer LaurentPoly::coefficient(Exponent e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? Integer(0) : it->second;
}

LaurentPoly::Exponent LaurentPoly::min_exponent() const {
  return terms_.empty() ? 0 : terms_.begin()->first;
}

LaurentPoly::Exponent LaurentPoly::max_exponent() const {
  return terms_.empty() ? 0 : terms_.rbegin()->first;
}

Rational LaurentPoly::eval(const Integer& x) const { return eval(Rational(x)); }

Rational LaurentPoly::eval(const Rational& x) const {
  if (x == 0) throw Error("ZeroEvaluation", "Laurent polynomial evaluated at t = 0");
  Rational sum = 0;
  for (const auto& [e, c] : terms_) {
    const Rational base = e < 0 ? Rational(1) / x : x;
    const unsigned power = static_cast<unsigned>(e < 0 ? -e : e);
    sum += Rational(c * boost::multiprecision::pow(boost::multiprecision::numerator(base), power),
                    boost::multiprecision::pow(boost::multiprecision::denominator(base), power));
  }
  return sum;
}

LaurentPoly LaurentPoly::invert_variable() const {
  LaurentPoly q;
  for (const auto& [e, c] : terms_) q.terms_.emplace(-e, c);
  return q;
}

LaurentPoly LaurentPoly::shifted(Exponent k) const {
  LaurentPoly q;
  for (const auto& [e, c] : terms_) q.terms_.emplace(e + k, c);
  return q;
}

LaurentPoly LaurentPoly::negated() const {
  LaurentPoly q;
  for (const auto& [e, c] : terms_) q.terms_.emplace(e, -c);
  return q;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    const bool negative = c < 0;
    const Integer mag = negative ? Integer(-c) : c;
    if (first) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    if (e == 0) {
      out += mag.str();
      continue;
    }
    if (mag != 1) out += mag.str() + "*";
    out += "t";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out;
}

LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r = a;
  for (const auto& [e, c] : b.terms_) r.add_term(e, c);
  return r;
}

LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) { return a + b.negated(); }

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
  LaurentPoly r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea + eb, ca * cb);
  return r;
}

LaurentPoly poly_add(const LaurentPoly& a, const LaurentPoly& b) { return a + b; }
LaurentPoly poly_mul(const LaurentPoly& a, const LaurentPoly& b) { return a * b; }

Rational poly_eval_int(const LaurentPoly& p, const Integer& x) { return p.eval(x); }

LaurentPoly normalize_alexander(const LaurentPoly& p) {
  if (p.is_zero()) throw Error("NotSymmetrizable", "the zero polynomial has no symmetric unit multiple");
  // A symmetric multiple must have min exponent = -max exponent, which fixes
  // the shift uniquely.
  const auto span = p.max_exponent() - p.min_exponent();
  if (span % 2 != 0)
    throw Error("NotSymmetrizable", p.to_string() + " has odd degree span");
  LaurentPoly q = p.shifted(-(p.min_exponent() + span / 2));
  if (q != q.invert_variable()) {
    // Antisymmetric inputs (q(t^-1) = -q(t)) are not unit multiples of a
    // symmetric polynomial either.
    throw Error("NotSymmetrizable", p.to_string() + " is not symmetric up to units");
  }
  Integer at_one = 0;
  for (const auto& [e, c] : q.terms()) at_one += c;
  // q(1) = 0 leaves the sign free; pick a positive top coefficient then.
  if (at_one < 0 || (at_one == 0 && q.terms().rbegin()->second < 0)) q = q.negated();
  return q;
}

bool equal_up_to_units(const LaurentPoly& a, const LaurentPoly& b) {
  return normalize_alexander(a) == normalize_alexander(b);
}

}  // namespace conckit
