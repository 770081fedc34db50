#include "conckit/cli.hpp"

#include "conckit/braid.hpp"
#include "conckit/error.hpp"
#include "conckit/lattice.hpp"
#include "conckit/obstruction.hpp"
#include "conckit/pattern.hpp"
#include "conckit/serialize.hpp"
#include "conckit/surgery.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <optional>
#include <sstream>

namespace conckit::cli {

namespace {

struct Options {
  bool json = false;

  std::string braid;
  std::optional<int> strands;
  std::optional<std::int64_t> family_n;

  std::string expr;
  bool dual = false;
  bool inverse = false;
  bool normalize = false;

  std::string frac;

  std::string matrix_path;
  std::string check = "definiteness";

  std::string coeff;
  long long writhe = 0;
  long long branch_lk = 1;
  long long lift_writhe = 0;
  long long degree = 2;

  std::int64_t k = 1;
  std::string direction = "up";
  std::string base_d = "0";
};

void emit(std::ostream& out, const Json& j) { out << j.dump(2) << '\n'; }

std::string list_to_string(const std::vector<Integer>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + to_string(v[i]);
  return s + "]";
}

BraidWord braid_arg(const Options& o) { return BraidWord::parse(o.braid, o.strands); }

int cmd_alexander(const Options& o, std::ostream& out) {
  LaurentPoly p;
  if (o.family_n)
    p = family_alexander(*o.family_n);
  else
    p = alexander_from_seifert(seifert_matrix(braid_arg(o)));
  if (o.json) {
    Json j = {{"alexander", to_json(p)}, {"text", p.to_string()}};
    if (o.family_n)
      j["family_n"] = *o.family_n;
    else
      j["braid"] = braid_arg(o).to_string();
    emit(out, j);
  } else {
    out << p.to_string() << '\n';
  }
  return 0;
}

int cmd_signature(const Options& o, std::ostream& out) {
  const BraidWord b = braid_arg(o);
  const long long s = signature(seifert_matrix(b));
  if (o.json)
    emit(out, {{"braid", b.to_string()}, {"signature", s}});
  else
    out << s << '\n';
  return 0;
}

int cmd_det(const Options& o, std::ostream& out) {
  Integer d;
  if (o.family_n)
    d = family_determinant(*o.family_n);
  else
    d = determinant(seifert_matrix(braid_arg(o)));
  if (o.json) {
    Json j = {{"determinant", integer_to_json(d)}};
    if (o.family_n)
      j["family_n"] = *o.family_n;
    else
      j["braid"] = braid_arg(o).to_string();
    emit(out, j);
  } else {
    out << to_string(d) << '\n';
  }
  return 0;
}

int cmd_pattern(const Options& o, std::ostream& out) {
  const PatternExpr e = parse_pattern(o.expr);
  std::string op = "normalize";
  PatternExpr result = e;
  if (o.dual) {
    op = "dual";
    result = dual(e);
  } else if (o.inverse) {
    op = "inverse";
    result = concordance_inverse(e);
  } else {
    result = normalize(e);
  }
  if (o.json)
    emit(out, {{"operation", op},
               {"input", to_json(e)},
               {"result", to_json(result)},
               {"text", result.to_string()},
               {"winding", winding_number(result)}});
  else
    out << result.to_string() << '\n';
  return 0;
}

int cmd_cf(const Options& o, std::ostream& out) {
  const Rational r = parse_rational(o.frac);
  const auto cf = cf_expand(boost::multiprecision::numerator(r), boost::multiprecision::denominator(r));
  if (o.json) {
    Json coeffs = Json::array();
    for (const auto& a : cf) coeffs.push_back(integer_to_json(a));
    emit(out, {{"frac", to_string(r)}, {"coefficients", coeffs}});
  } else {
    out << list_to_string(cf) << '\n';
  }
  return 0;
}

IntMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("IOError", "cannot open " + path);
  Json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw Error("SchemaError", path + ": " + e.what());
  }
  if (j.is_object() && j.contains("matrix")) return matrix_from_json(j.at("matrix"));
  return matrix_from_json(j);
}

int cmd_lattice(const Options& o, std::ostream& out) {
  const IntForm f(read_matrix_file(o.matrix_path));
  if (o.check == "definiteness") {
    const std::string d = to_string(definiteness(f));
    if (o.json)
      emit(out, {{"check", o.check}, {"rank", f.rank()}, {"definiteness", d}});
    else
      out << d << '\n';
  } else if (o.check == "char-max") {
    const Definiteness d = definiteness(f);
    const bool positive = d == Definiteness::PositiveDefinite;
    const CharSearch s = positive ? min_char_square(f) : max_char_square(f);
    if (o.json) {
      Json w = Json::array();
      for (const auto& x : s.witness) w.push_back(integer_to_json(x));
      emit(out, {{"check", o.check},
                 {"extremum", positive ? "min" : "max"},
                 {"square", integer_to_json(s.square)},
                 {"witness", w},
                 {"method", s.method}});
    } else {
      out << (positive ? "min " : "max ") << to_string(s.square) << " witness " << list_to_string(s.witness)
          << '\n';
    }
  } else if (o.check == "standardize") {
    const auto basis = diagonalize_to_standard(f);
    if (o.json) {
      Json j = {{"check", o.check}, {"standard", basis.has_value()}};
      if (basis) {
        j["sign"] = basis->sign;
        j["basis"] = to_json(basis->basis);
      }
      emit(out, j);
    } else if (basis) {
      out << (basis->sign < 0 ? "-I" : "I") << " basis " << to_string(basis->basis) << '\n';
    } else {
      out << "not standard\n";
    }
  }
  return 0;
}

int cmd_lift(const Options& o, std::ostream& out) {
  const auto f = BlackboardFraming::from_coefficient(parse_rational(o.coeff), o.writhe);
  const auto lifts = lift_framing_cyclic(f, o.degree, o.branch_lk, o.lift_writhe);
  if (o.json) {
    Json arr = Json::array();
    for (const auto& l : lifts) arr.push_back(to_json(l));
    emit(out, {{"input", to_json(f)}, {"degree", o.degree}, {"branchLinking", o.branch_lk}, {"lifts", arr}});
  } else {
    for (const auto& l : lifts)
      out << to_string(l.coefficient()) << " (m = " << to_string(l.m) << ", b = " << to_string(l.b)
          << ", writhe = " << l.writhe << ")\n";
  }
  return 0;
}

int cmd_monotone(const Options& o, std::ostream& out) {
  const Direction dir = o.direction == "up" ? Direction::Up : Direction::Down;
  const auto steps = monotonicity_certificate(o.k, dir, parse_rational(o.base_d));
  if (o.json) {
    Json arr = Json::array();
    for (const auto& s : steps) arr.push_back(to_json(s));
    emit(out, {{"k", o.k}, {"direction", o.direction}, {"steps", arr}});
    return 0;
  }
  for (const auto& s : steps) {
    const auto& c = s.certificate;
    const bool up = c.relation == Relation::AtLeast;
    out << s.from << " -> " << s.to << ": " << to_string(c.kind) << " form of rank " << c.rank << '\n';
    out << "  form " << to_string(c.form) << '\n';
    out << "  char square " << to_string(c.char_square) << " witness " << list_to_string(c.witness) << '\n';
    out << "  d(" << (up ? s.to : s.from) << ") " << to_string(c.relation) << " " << to_string(c.bound) << '\n';
  }
  return 0;
}

int cmd_obstruct(const Options& o, std::ostream& out) {
  const ObstructionReport r = obstruct_pair(o.k);
  if (o.json) {
    emit(out, to_json(r));
    return 0;
  }
  out << "K  = " << r.knot << '\n';
  out << "K' = " << r.knot_prime << '\n';
  out << "dual identity: " << r.dual_identity << (r.dual_identity_holds ? "" : " (FAILED)") << '\n';
  out << r.chain_text() << '\n';
  out << "verdict: " << r.verdict << '\n';
  out << "assumptions:\n";
  for (const auto& a : r.assumptions) out << "  - " << a << '\n';
  return 0;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Exact knot-concordance obstruction toolkit", "conckit"};
  app.require_subcommand(1, 1);
  app.add_flag("--json", o.json, "Emit JSON instead of text");

  auto* alexander = app.add_subcommand("alexander", "Normalized Alexander polynomial");
  auto* alex_src = alexander->add_option_group("source");
  alex_src->add_option("--braid", o.braid, "Braid word, e.g. \"1 1 1\"");
  alex_src->add_option("--family-n", o.family_n, "Twist parameter n of twist(n, J)(U)");
  alex_src->require_option(1);
  alexander->add_option("--strands", o.strands, "Strand count (default: smallest admissible)");

  auto* sig = app.add_subcommand("signature", "Knot signature from a braid closure");
  sig->add_option("--braid", o.braid, "Braid word")->required();
  sig->add_option("--strands", o.strands, "Strand count");

  auto* det = app.add_subcommand("det", "Knot determinant");
  auto* det_src = det->add_option_group("source");
  det_src->add_option("--braid", o.braid, "Braid word");
  det_src->add_option("--family-n", o.family_n, "Twist parameter n of twist(n, J)(U)");
  det_src->require_option(1);
  det->add_option("--strands", o.strands, "Strand count");

  auto* pattern = app.add_subcommand("pattern", "Pattern calculus");
  pattern->add_option("--expr", o.expr, "Pattern expression")->required();
  auto* pat_op = pattern->add_option_group("operation");
  pat_op->add_flag("--dual", o.dual, "Dual pattern");
  pat_op->add_flag("--inverse", o.inverse, "Concordance inverse bar(P*)");
  pat_op->add_flag("--normalize", o.normalize, "Normal form (default)");
  pat_op->require_option(0, 1);

  auto* cf = app.add_subcommand("cf", "Continued fraction expansion");
  cf->add_option("--frac", o.frac, "Fraction p/q")->required();

  auto* lattice = app.add_subcommand("lattice", "Integer lattice checks");
  lattice->add_option("--matrix", o.matrix_path, "JSON file with the Gram matrix as row arrays")
      ->required()
      ->check(CLI::ExistingFile);
  lattice->add_option("--check", o.check, "definiteness | char-max | standardize")
      ->check(CLI::IsMember({"definiteness", "char-max", "standardize"}));

  auto* lift = app.add_subcommand("lift", "Lift a framed curve to a cyclic branched cover");
  lift->add_option("--coeff", o.coeff, "Surgery coefficient p/q")->required();
  lift->add_option("--writhe", o.writhe, "Writhe of the curve downstairs")->required();
  lift->add_option("--branch-lk", o.branch_lk, "Linking number with the branch knot")->required();
  lift->add_option("--lift-writhe", o.lift_writhe, "Writhe of each lifted curve")->required();
  lift->add_option("--degree", o.degree, "Degree of the cover")->capture_default_str();

  auto* monotone = app.add_subcommand("monotone", "Monotonicity certificate for the twisted family");
  monotone->add_option("--k", o.k, "Number of twists")->required()->check(CLI::PositiveNumber);
  monotone->add_option("--direction", o.direction, "up | down")->check(CLI::IsMember({"up", "down"}));
  monotone->add_option("--base-d", o.base_d, "d(Y_0) as p/q")->capture_default_str();

  auto* obstruct = app.add_subcommand("obstruct", "Obstruct concordance of K_k and K'_k");
  obstruct->add_option("--k", o.k, "Pair index k")->required()->check(CLI::PositiveNumber);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n\n"
        << app.get_formatter()->make_help(&app, "conckit", CLI::AppFormatMode::All);
    return 2;
  }

  try {
    if (*alexander) return cmd_alexander(o, out);
    if (*sig) return cmd_signature(o, out);
    if (*det) return cmd_det(o, out);
    if (*pattern) return cmd_pattern(o, out);
    if (*cf) return cmd_cf(o, out);
    if (*lattice) return cmd_lattice(o, out);
    if (*lift) return cmd_lift(o, out);
    if (*monotone) return cmd_monotone(o, out);
    if (*obstruct) return cmd_obstruct(o, out);
  } catch (const Error& e) {
    err << e.what() << '\n';
    return 1;
  }
  return 2;
}

}  // namespace conckit::cli
