#include "conckit/surgery.hpp"

#include "conckit/error.hpp"

#include <numeric>
#include <set>

namespace conckit {

SurgeryDiagram::SurgeryDiagram(std::vector<SurgeryComponent> components) : components_(std::move(components)) {
  std::set<std::string> names;
  for (const auto& c : components_)
    if (!names.insert(c.name).second) throw Error("InvalidDiagram", "duplicate component '" + c.name + "'");
  for (auto& c : components_) {
    for (const auto& [other, lk] : c.links) {
      if (other == c.name) throw Error("InvalidDiagram", "component '" + c.name + "' links itself");
      if (!names.count(other))
        throw Error("InvalidDiagram", "component '" + c.name + "' links unknown '" + other + "'");
    }
  }
  for (auto& c : components_) {
    for (auto& d : components_) {
      if (&c == &d) continue;
      auto cd = c.links.find(d.name);
      auto dc = d.links.find(c.name);
      if (cd != c.links.end() && dc != d.links.end()) {
        if (cd->second != dc->second)
          throw Error("InvalidDiagram", "asymmetric linking between '" + c.name + "' and '" + d.name + "'");
      } else if (cd != c.links.end()) {
        d.links[c.name] = cd->second;
      }
    }
  }
  for (auto& c : components_) std::erase_if(c.links, [](const auto& kv) { return kv.second == 0; });
}

const SurgeryComponent& SurgeryDiagram::component(const std::string& name) const {
  for (const auto& c : components_)
    if (c.name == name) return c;
  throw Error("UnknownComponent", "no component named '" + name + "'");
}

long long SurgeryDiagram::linking(const std::string& a, const std::string& b) const {
  const auto& links = component(a).links;
  component(b);
  auto it = links.find(b);
  return it == links.end() ? 0 : it->second;
}

SurgeryDiagram SurgeryDiagram::without_infinite() const {
  std::vector<SurgeryComponent> kept;
  std::set<std::string> dropped;
  for (const auto& c : components_)
    if (!c.coefficient) dropped.insert(c.name);
  for (auto c : components_) {
    if (!c.coefficient) continue;
    std::erase_if(c.links, [&](const auto& kv) { return dropped.count(kv.first) > 0; });
    kept.push_back(std::move(c));
  }
  return SurgeryDiagram(std::move(kept));
}

IntMatrix linking_matrix(const SurgeryDiagram& diagram) {
  const SurgeryDiagram d = diagram.without_infinite();
  const auto& cs = d.components();
  IntMatrix m(cs.size(), cs.size());
  for (std::size_t i = 0; i < cs.size(); ++i) {
    const Rational& r = *cs[i].coefficient;
    if (boost::multiprecision::denominator(r) != 1)
      throw Error("NonIntegralCoefficient", "component '" + cs[i].name + "' has coefficient " + to_string(r));
    m(i, i) = boost::multiprecision::numerator(r);
    for (std::size_t j = 0; j < cs.size(); ++j)
      if (j != i) m(i, j) = d.linking(cs[i].name, cs[j].name);
  }
  return m;
}

std::vector<Integer> cf_expand(const Integer& p, const Integer& q) {
  if (q == 0) throw Error("InvalidFraction", "zero denominator");
  if (q < 0) throw Error("InvalidFraction", "denominator must be positive");
  if (boost::multiprecision::gcd(p, q) != 1)
    throw Error("InvalidFraction", p.str() + "/" + q.str() + " is not in lowest terms");
  std::vector<Integer> out;
  // Track x = num/den with den > 0. Negative values take floors, positive
  // values ceilings, so each tail stays of one sign and exceeds 1 in size.
  Integer num = p;
  Integer den = q;
  const bool negative = p < 0;
  while (true) {
    const Integer a = negative ? floor_div(num, den) : ceil_div(num, den);
    out.push_back(a);
    const Integer rem = num - a * den;  // x - a = rem/den
    if (rem == 0) break;
    // next = -1/(x - a) = -den/rem
    num = -den;
    den = rem;
    if (den < 0) {
      num = -num;
      den = -den;
    }
  }
  return out;
}

Rational cf_evaluate(std::span<const Integer> coeffs) {
  if (coeffs.empty()) throw Error("InvalidFraction", "empty continued fraction");
  Rational value(coeffs.back());
  for (std::size_t i = coeffs.size() - 1; i-- > 0;) {
    if (value == 0) throw Error("DivisionByZero", "continued fraction tail evaluates to zero");
    value = Rational(coeffs[i]) - Rational(1) / value;
  }
  return value;
}

SurgeryDiagram chain_attach(const SurgeryDiagram& d, const std::string& name) {
  const SurgeryComponent& target = d.component(name);
  if (!target.coefficient) throw Error("InfiniteCoefficient", "component '" + name + "' is infinity-framed");
  if (!target.links.empty())
    throw Error("NonzeroLinking", "component '" + name + "' links '" + target.links.begin()->first + "'");
  const Rational& r = *target.coefficient;
  if (r == 0) throw Error("InvalidFraction", "component '" + name + "' is 0-framed; nothing to expand");
  const auto expansion =
      cf_expand(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
  const long long chain_link = r < 0 ? -1 : 1;

  std::vector<SurgeryComponent> out;
  for (const auto& c : d.components()) {
    if (c.name != name) {
      out.push_back(c);
      continue;
    }
    for (std::size_t i = 0; i < expansion.size(); ++i) {
      SurgeryComponent link;
      link.name = name + "." + std::to_string(i + 1);
      link.coefficient = Rational(expansion[i]);
      link.writhe = 0;
      if (i > 0) link.links[name + "." + std::to_string(i)] = chain_link;
      if (i + 1 < expansion.size()) link.links[name + "." + std::to_string(i + 2)] = chain_link;
      out.push_back(std::move(link));
    }
  }
  return SurgeryDiagram(std::move(out));
}

Rational BlackboardFraming::coefficient() const {
  if (b == 0) throw Error("InvalidFraming", "blackboard coefficient b must be nonzero");
  return Rational(m + b * writhe, b);
}

BlackboardFraming BlackboardFraming::from_coefficient(const Rational& r, long long writhe) {
  const Integer p = boost::multiprecision::numerator(r);
  const Integer q = boost::multiprecision::denominator(r);
  return BlackboardFraming{p - q * writhe, q, writhe};
}

std::vector<BlackboardFraming> lift_framing(const BlackboardFraming& f, long long branch_linking,
                                            long long lift_writhe) {
  return lift_framing_cyclic(f, 2, branch_linking, lift_writhe);
}

std::vector<BlackboardFraming> lift_framing_cyclic(const BlackboardFraming& f, long long degree,
                                                   long long branch_linking, long long lift_writhe) {
  if (degree < 2) throw Error("InvalidCover", "cover degree must be at least 2");
  if (f.b == 0) throw Error("InvalidFraming", "blackboard coefficient b must be nonzero");
  const long long components = std::gcd(degree, branch_linking < 0 ? -branch_linking : branch_linking);
  const long long sheets = degree / components;  // covering degree of each lift
  if (f.b % sheets != 0)
    throw Error("OddHalving", "b = " + f.b.str() + " is not divisible by the covering degree " +
                                  std::to_string(sheets));
  return std::vector<BlackboardFraming>(static_cast<std::size_t>(components),
                                        BlackboardFraming{f.m, f.b / sheets, lift_writhe});
}

}  // namespace conckit
