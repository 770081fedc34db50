#include "conckit/serialize.hpp"

#include "conckit/error.hpp"

#include <limits>

namespace conckit {

namespace {

[[noreturn]] void schema_error(const std::string& what) { throw Error("SchemaError", what); }

Json vector_to_json(const IntVector& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(integer_to_json(x));
  return out;
}

CobordismKind kind_from_string(const std::string& s) {
  if (s == "negdef") return CobordismKind::NegativeDefinite;
  if (s == "posdef") return CobordismKind::PositiveDefinite;
  if (s == "rational-homology-cobordism") return CobordismKind::RationalHomologyCobordism;
  schema_error("unknown certificate kind '" + s + "'");
}

Relation relation_from_string(const std::string& s) {
  if (s == ">=") return Relation::AtLeast;
  if (s == "<=") return Relation::AtMost;
  if (s == "=") return Relation::Equal;
  schema_error("unknown relation '" + s + "'");
}

}  // namespace

Json integer_to_json(const Integer& z) {
  if (z >= std::numeric_limits<std::int64_t>::min() && z <= std::numeric_limits<std::int64_t>::max())
    return Json(static_cast<std::int64_t>(z));
  return Json(z.str());
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) {
    const Rational r = parse_rational(j.get<std::string>());
    if (boost::multiprecision::denominator(r) != 1) schema_error("expected an integer, got " + j.dump());
    return boost::multiprecision::numerator(r);
  }
  schema_error("expected an integer, got " + j.dump());
}

Json to_json(const LaurentPoly& p) {
  Json out = Json::object();
  for (const auto& [e, c] : p.terms()) out[std::to_string(e)] = integer_to_json(c);
  return out;
}

LaurentPoly laurent_from_json(const Json& j) {
  if (!j.is_object()) schema_error("Laurent polynomial must be an object");
  LaurentPoly::Terms terms;
  for (const auto& [key, value] : j.items()) {
    std::size_t used = 0;
    long long e = 0;
    try {
      e = std::stoll(key, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != key.size() || key.empty()) schema_error("bad exponent key '" + key + "'");
    terms[e] += integer_from_json(value);
  }
  return LaurentPoly(terms);
}

Json to_json(const IntMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(integer_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

IntMatrix matrix_from_json(const Json& j) {
  if (!j.is_array()) schema_error("matrix must be an array of rows");
  const std::size_t n = j.size();
  const std::size_t cols = n == 0 ? 0 : j.at(0).size();
  IntMatrix m(n, cols);
  for (std::size_t i = 0; i < n; ++i) {
    if (!j[i].is_array() || j[i].size() != cols) schema_error("matrix rows must be arrays of equal length");
    for (std::size_t c = 0; c < cols; ++c) m(i, c) = integer_from_json(j[i][c]);
  }
  return m;
}

Json to_json(const PatternExpr& e) {
  switch (e.kind()) {
    case PatternKind::Gen:
      return {{"kind", "gen"}, {"name", e.name()}};
    case PatternKind::ConnSum:
      return {{"kind", "sum"}, {"knot", e.name()}, {"mirrored", e.mirrored()}};
    case PatternKind::Twist:
      return {{"kind", "twist"}, {"n", e.twists()}, {"child", to_json(e.child())}};
    case PatternKind::Bar:
      return {{"kind", "bar"}, {"child", to_json(e.child())}};
    case PatternKind::Dual:
      return {{"kind", "dual"}, {"child", to_json(e.child())}};
    case PatternKind::Compose:
      return {{"kind", "compose"}, {"left", to_json(e.left())}, {"right", to_json(e.right())}};
  }
  return {};
}

PatternExpr pattern_from_json(const Json& j) {
  try {
    const std::string kind = j.at("kind").get<std::string>();
    if (kind == "gen") return PatternExpr::gen(j.at("name").get<std::string>());
    if (kind == "sum") return PatternExpr::sum(j.at("knot").get<std::string>(), j.value("mirrored", false));
    if (kind == "twist") return PatternExpr::twist(j.at("n").get<std::int64_t>(), pattern_from_json(j.at("child")));
    if (kind == "bar") return PatternExpr::bar(pattern_from_json(j.at("child")));
    if (kind == "dual") return PatternExpr::dual(pattern_from_json(j.at("child")));
    if (kind == "compose") return PatternExpr::compose(pattern_from_json(j.at("left")), pattern_from_json(j.at("right")));
    schema_error("unknown pattern kind '" + kind + "'");
  } catch (const nlohmann::json::exception& e) {
    schema_error(std::string("pattern JSON: ") + e.what());
  }
}

Json to_json(const SurgeryDiagram& d) {
  Json comps = Json::array();
  for (const auto& c : d.components()) {
    Json links = Json::object();
    for (const auto& [other, lk] : c.links) links[other] = lk;
    comps.push_back({{"name", c.name},
                     {"coeff", c.coefficient ? to_string(*c.coefficient) : std::string("inf")},
                     {"writhe", c.writhe},
                     {"links", links}});
  }
  return {{"components", comps}};
}

SurgeryDiagram diagram_from_json(const Json& j) {
  try {
    std::vector<SurgeryComponent> comps;
    for (const auto& c : j.at("components")) {
      SurgeryComponent sc;
      sc.name = c.at("name").get<std::string>();
      const Json& coeff = c.at("coeff");
      if (coeff.is_string() && coeff.get<std::string>() == "inf")
        sc.coefficient.reset();
      else if (coeff.is_string())
        sc.coefficient = parse_rational(coeff.get<std::string>());
      else
        sc.coefficient = Rational(coeff.get<std::int64_t>());
      sc.writhe = c.value("writhe", 0LL);
      if (c.contains("links"))
        for (const auto& [other, lk] : c.at("links").items()) sc.links[other] = lk.get<long long>();
      comps.push_back(std::move(sc));
    }
    return SurgeryDiagram(std::move(comps));
  } catch (const nlohmann::json::exception& e) {
    schema_error(std::string("diagram JSON: ") + e.what());
  }
}

Json to_json(const BlackboardFraming& f) {
  return {{"m", integer_to_json(f.m)},
          {"b", integer_to_json(f.b)},
          {"writhe", f.writhe},
          {"coeff", to_string(f.coefficient())}};
}

Json to_json(const BoundCertificate& c) {
  return {{"kind", to_string(c.kind)},
          {"dY0", to_string(c.d_y0)},
          {"rank", c.rank},
          {"charSquare", integer_to_json(c.char_square)},
          {"bound", to_string(c.bound)},
          {"relation", to_string(c.relation)},
          {"witness", vector_to_json(c.witness)},
          {"form", to_json(c.form)},
          {"method", c.method}};
}

BoundCertificate certificate_from_json(const Json& j) {
  try {
    BoundCertificate c;
    c.kind = kind_from_string(j.at("kind").get<std::string>());
    c.d_y0 = parse_rational(j.at("dY0").get<std::string>());
    c.rank = j.at("rank").get<std::size_t>();
    c.char_square = integer_from_json(j.at("charSquare"));
    c.bound = parse_rational(j.at("bound").get<std::string>());
    c.relation = relation_from_string(j.at("relation").get<std::string>());
    for (const auto& x : j.at("witness")) c.witness.push_back(integer_from_json(x));
    c.form = matrix_from_json(j.at("form"));
    c.method = j.value("method", std::string());
    return c;
  } catch (const nlohmann::json::exception& e) {
    schema_error(std::string("certificate JSON: ") + e.what());
  }
}

Json to_json(const MonotonicityStep& s) {
  return {{"from", s.from},
          {"to", s.to},
          {"coverDiagram", to_json(s.cover_diagram)},
          {"integralDiagram", to_json(s.integral_diagram)},
          {"certificate", to_json(s.certificate)},
          {"assumptions", s.assumptions}};
}

Json to_json(const AlternatingSurgeryCertificate& c) {
  return {{"kind", "alternating-one-surgery"},
          {"knot", c.knot},
          {"braid", c.braid.to_string()},
          {"strands", c.braid.strands()},
          {"signature", c.signature},
          {"d", to_string(c.d)}};
}

Json to_json(const HomologyBallCertificate& c) {
  return {{"kind", "homology-ball"}, {"presentation", to_json(c.presentation)}, {"valid", c.valid()}};
}

Json to_json(const SharedInvariantReport& r) {
  return {{"n", r.n},
          {"partner", r.partner},
          {"partnerEqual", r.partner_equal},
          {"compared", r.compared},
          {"collisions", r.collisions},
          {"note", r.note}};
}

Json to_json(const ObstructionReport& r) {
  Json chain = Json::array();
  for (const auto& link : r.chain) {
    Json evidence = std::visit(
        [](const auto& ev) -> Json {
          using T = std::decay_t<decltype(ev)>;
          if constexpr (std::is_same_v<T, StrictComparison>)
            return {{"kind", "strict"}, {"lower", to_string(ev.lower)}, {"upper", to_string(ev.upper)}};
          else
            return to_json(ev);
        },
        link.evidence);
    chain.push_back({{"from", link.from}, {"to", link.to}, {"relation", link.relation}, {"certificate", evidence}});
  }
  return {{"k", r.k},
          {"pair", {{"K", r.knot}, {"K'", r.knot_prime}}},
          {"dualIdentity", {{"statement", r.dual_identity}, {"holds", r.dual_identity_holds}}},
          {"dChain", chain},
          {"bounds", {{"upperPrime", to_string(r.upper_bound_prime)}, {"lower", to_string(r.lower_bound)}}},
          {"verdict", r.verdict},
          {"assumptions", r.assumptions}};
}

}  // namespace conckit
