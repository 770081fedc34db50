#include "conckit/pattern.hpp"

#include "conckit/error.hpp"

#include <cctype>
#include <stdexcept>

namespace conckit {

struct PatternExpr::Node {
  PatternKind kind;
  std::string name;
  bool mirrored = false;
  std::int64_t twists = 0;
  std::vector<PatternExpr> children;
  std::size_t size = 1;
};

PatternExpr PatternExpr::gen(std::string name) {
  return PatternExpr(std::make_shared<const Node>(Node{PatternKind::Gen, std::move(name), false, 0, {}, 1}));
}

PatternExpr PatternExpr::sum(std::string knot, bool mirrored) {
  return PatternExpr(
      std::make_shared<const Node>(Node{PatternKind::ConnSum, std::move(knot), mirrored, 0, {}, 1}));
}

PatternExpr PatternExpr::twist(std::int64_t n, PatternExpr child) {
  const std::size_t s = child.size() + 1;
  return PatternExpr(std::make_shared<const Node>(Node{PatternKind::Twist, {}, false, n, {std::move(child)}, s}));
}

PatternExpr PatternExpr::bar(PatternExpr child) {
  const std::size_t s = child.size() + 1;
  return PatternExpr(std::make_shared<const Node>(Node{PatternKind::Bar, {}, false, 0, {std::move(child)}, s}));
}

PatternExpr PatternExpr::dual(PatternExpr child) {
  const std::size_t s = child.size() + 1;
  return PatternExpr(std::make_shared<const Node>(Node{PatternKind::Dual, {}, false, 0, {std::move(child)}, s}));
}

PatternExpr PatternExpr::compose(PatternExpr left, PatternExpr right) {
  const std::size_t s = left.size() + right.size() + 1;
  return PatternExpr(std::make_shared<const Node>(
      Node{PatternKind::Compose, {}, false, 0, {std::move(left), std::move(right)}, s}));
}

PatternKind PatternExpr::kind() const { return node_->kind; }
const std::string& PatternExpr::name() const { return node_->name; }
bool PatternExpr::mirrored() const { return node_->mirrored; }
std::int64_t PatternExpr::twists() const { return node_->twists; }
const PatternExpr& PatternExpr::child() const { return node_->children.at(0); }
const PatternExpr& PatternExpr::left() const { return node_->children.at(0); }
const PatternExpr& PatternExpr::right() const { return node_->children.at(1); }
std::size_t PatternExpr::size() const { return node_->size; }

std::string PatternExpr::to_string() const {
  switch (kind()) {
    case PatternKind::Gen:
      return name();
    case PatternKind::ConnSum:
      return mirrored() ? "sum(" + name() + ", mirror)" : "sum(" + name() + ")";
    case PatternKind::Twist:
      return "twist(" + std::to_string(twists()) + ", " + child().to_string() + ")";
    case PatternKind::Bar:
      return "bar(" + child().to_string() + ")";
    case PatternKind::Dual:
      return "dual(" + child().to_string() + ")";
    case PatternKind::Compose:
      return "compose(" + left().to_string() + ", " + right().to_string() + ")";
  }
  return {};
}

bool operator==(const PatternExpr& a, const PatternExpr& b) {
  if (a.node_ == b.node_) return true;
  const auto& x = *a.node_;
  const auto& y = *b.node_;
  return x.kind == y.kind && x.name == y.name && x.mirrored == y.mirrored && x.twists == y.twists &&
         x.children == y.children;
}

// ---------------------------------------------------------------- registry

const PatternRegistry& PatternRegistry::standard() {
  static const PatternRegistry reg = [] {
    PatternRegistry r;
    r.declare("J", PatternExpr::twist(-4, PatternExpr::gen("J")));
    return r;
  }();
  return reg;
}

void PatternRegistry::declare(const std::string& name, const PatternExpr& dual_expr) {
  PatternRegistry trial = *this;
  trial.duals_.insert_or_assign(name, dual_expr);
  if (dual_expr.kind() == PatternKind::Gen && dual_expr.name() != name)
    trial.duals_.insert_or_assign(dual_expr.name(), PatternExpr::gen(name));
  const PatternExpr g = PatternExpr::gen(name);
  PatternExpr twice = g;
  try {
    twice = normalize(PatternExpr::dual(normalize(dual_expr, trial)), trial);
  } catch (const Error& e) {
    throw Error("InconsistentDual", "declared dual of " + name + " is not dualizable: " + e.what());
  }
  if (!(twice == g))
    throw Error("InconsistentDual", "dual of declared dual of " + name + " is " + twice.to_string());
  for (const auto& [other, other_dual] : trial.duals_) {
    if (other_dual.kind() != PatternKind::Gen) continue;
    const auto back = trial.duals_.find(other_dual.name());
    if (back != trial.duals_.end() && !(back->second == PatternExpr::gen(other)))
      throw Error("InconsistentDual", other + " and " + other_dual.name() + " are not declared dual to each other");
  }
  *this = std::move(trial);
}

std::optional<PatternExpr> PatternRegistry::declared_dual(const std::string& name) const {
  auto it = duals_.find(name);
  if (it == duals_.end()) return std::nullopt;
  return it->second;
}

// ------------------------------------------------------------------ parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view text) : text_(text) {}

  PatternExpr parse() {
    PatternExpr e = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return e;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw Error("ParseError", what + " at position " + std::to_string(pos_));
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  static bool name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '\'' || c == '.';
  }

  void expect(char c) {
    skip_space();
    if (pos_ >= text_.size() || text_[pos_] != c) fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::string name() {
    skip_space();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && name_char(text_[pos_])) ++pos_;
    if (pos_ == start) fail("expected a name");
    return std::string(text_.substr(start, pos_ - start));
  }

  std::int64_t integer() {
    skip_space();
    const std::size_t start = pos_;
    if (pos_ < text_.size() && (text_[pos_] == '-' || text_[pos_] == '+')) ++pos_;
    const std::size_t digits = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == digits) {
      pos_ = start;
      fail("expected an integer");
    }
    try {
      return std::stoll(std::string(text_.substr(start, pos_ - start)));
    } catch (const std::out_of_range&) {
      pos_ = start;
      fail("integer out of range");
    }
  }

  bool next_is_paren() {
    std::size_t p = pos_;
    while (p < text_.size() && std::isspace(static_cast<unsigned char>(text_[p]))) ++p;
    return p < text_.size() && text_[p] == '(';
  }

  PatternExpr expr() {
    const std::size_t start = (skip_space(), pos_);
    const std::string word = name();
    if (!next_is_paren()) return PatternExpr::gen(word);
    expect('(');
    PatternExpr result = PatternExpr::gen(word);
    if (word == "sum") {
      const std::string knot = name();
      bool mirrored = false;
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == ',') {
        expect(',');
        const std::size_t flag_at = (skip_space(), pos_);
        if (name() != "mirror") {
          pos_ = flag_at;
          fail("expected 'mirror'");
        }
        mirrored = true;
      }
      result = PatternExpr::sum(knot, mirrored);
    } else if (word == "twist") {
      const std::int64_t n = integer();
      expect(',');
      result = PatternExpr::twist(n, expr());
    } else if (word == "bar") {
      result = PatternExpr::bar(expr());
    } else if (word == "dual") {
      result = PatternExpr::dual(expr());
    } else if (word == "compose") {
      PatternExpr l = expr();
      expect(',');
      result = PatternExpr::compose(std::move(l), expr());
    } else {
      pos_ = start;
      fail("unknown operator '" + word + "'");
    }
    expect(')');
    return result;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

// --------------------------------------------------------------- rewriting

PatternExpr make_twist(std::int64_t n, const PatternExpr& p) {
  if (p.kind() == PatternKind::Twist) return make_twist(n + p.twists(), p.child());
  if (n == 0) return p;
  return PatternExpr::twist(n, p);
}

PatternExpr make_compose(const PatternExpr& a, const PatternExpr& b) {
  if (a.kind() == PatternKind::Compose) return make_compose(a.left(), make_compose(a.right(), b));
  return PatternExpr::compose(a, b);
}

// Arguments of push_bar / push_dual are already in normal form.
PatternExpr push_bar(const PatternExpr& p) {
  switch (p.kind()) {
    case PatternKind::Gen:
      return PatternExpr::bar(p);
    case PatternKind::Bar:
      return p.child();
    case PatternKind::ConnSum:
      return PatternExpr::sum(p.name(), !p.mirrored());
    case PatternKind::Twist:
      return make_twist(-p.twists(), push_bar(p.child()));
    case PatternKind::Compose:
      return make_compose(push_bar(p.left()), push_bar(p.right()));
    case PatternKind::Dual:
      break;
  }
  throw std::logic_error("push_bar on a non-normal expression");
}

PatternExpr normal(const PatternExpr& e, const PatternRegistry& reg);

PatternExpr push_dual(const PatternExpr& p, const PatternRegistry& reg) {
  switch (p.kind()) {
    case PatternKind::Gen: {
      auto d = reg.declared_dual(p.name());
      if (!d) throw Error("NoDeclaredDual", "generator '" + p.name() + "' has no declared dual");
      return normal(*d, reg);
    }
    case PatternKind::Bar:
      return push_bar(push_dual(p.child(), reg));
    case PatternKind::ConnSum:
      return p;
    case PatternKind::Twist:
      return make_twist(-p.twists(), push_dual(p.child(), reg));
    case PatternKind::Compose:
      return make_compose(push_dual(p.right(), reg), push_dual(p.left(), reg));
    case PatternKind::Dual:
      break;
  }
  throw std::logic_error("push_dual on a non-normal expression");
}

PatternExpr normal(const PatternExpr& e, const PatternRegistry& reg) {
  switch (e.kind()) {
    case PatternKind::Gen:
    case PatternKind::ConnSum:
      return e;
    case PatternKind::Twist:
      return make_twist(e.twists(), normal(e.child(), reg));
    case PatternKind::Bar:
      return push_bar(normal(e.child(), reg));
    case PatternKind::Dual:
      return push_dual(normal(e.child(), reg), reg);
    case PatternKind::Compose:
      return make_compose(normal(e.left(), reg), normal(e.right(), reg));
  }
  throw std::logic_error("unreachable");
}

// One rule applied at the root, if any matches.
std::optional<PatternExpr> root_step(const PatternExpr& e, const PatternRegistry& reg) {
  using K = PatternKind;
  switch (e.kind()) {
    case K::Dual: {
      const PatternExpr& c = e.child();
      switch (c.kind()) {
        case K::Twist:
          return PatternExpr::twist(-c.twists(), PatternExpr::dual(c.child()));
        case K::Compose:
          return PatternExpr::compose(PatternExpr::dual(c.right()), PatternExpr::dual(c.left()));
        case K::ConnSum:
          return c;
        case K::Bar:
          return PatternExpr::bar(PatternExpr::dual(c.child()));
        case K::Dual:
          return c.child();
        case K::Gen:
          return reg.declared_dual(c.name());
      }
      break;
    }
    case K::Bar: {
      const PatternExpr& c = e.child();
      switch (c.kind()) {
        case K::Compose:
          return PatternExpr::compose(PatternExpr::bar(c.left()), PatternExpr::bar(c.right()));
        case K::Twist:
          return PatternExpr::twist(-c.twists(), PatternExpr::bar(c.child()));
        case K::Bar:
          return c.child();
        case K::ConnSum:
          return PatternExpr::sum(c.name(), !c.mirrored());
        case K::Gen:
        case K::Dual:
          return std::nullopt;
      }
      break;
    }
    case K::Twist:
      if (e.twists() == 0) return e.child();
      if (e.child().kind() == K::Twist)
        return PatternExpr::twist(e.twists() + e.child().twists(), e.child().child());
      return std::nullopt;
    case K::Compose:
      if (e.left().kind() == K::Compose)
        return PatternExpr::compose(e.left().left(), PatternExpr::compose(e.left().right(), e.right()));
      return std::nullopt;
    case K::Gen:
    case K::ConnSum:
      return std::nullopt;
  }
  return std::nullopt;
}

void collect_redexes(const PatternExpr& e, const PatternRegistry& reg, RewritePath& here,
                     std::vector<RewritePath>& out) {
  if (root_step(e, reg)) out.push_back(here);
  switch (e.kind()) {
    case PatternKind::Gen:
    case PatternKind::ConnSum:
      return;
    case PatternKind::Twist:
    case PatternKind::Bar:
    case PatternKind::Dual:
      here.push_back(0);
      collect_redexes(e.child(), reg, here, out);
      here.pop_back();
      return;
    case PatternKind::Compose:
      here.push_back(0);
      collect_redexes(e.left(), reg, here, out);
      here.back() = 1;
      collect_redexes(e.right(), reg, here, out);
      here.pop_back();
      return;
  }
}

PatternExpr rebuild_with(const PatternExpr& e, int index, PatternExpr replacement) {
  switch (e.kind()) {
    case PatternKind::Twist:
      return PatternExpr::twist(e.twists(), std::move(replacement));
    case PatternKind::Bar:
      return PatternExpr::bar(std::move(replacement));
    case PatternKind::Dual:
      return PatternExpr::dual(std::move(replacement));
    case PatternKind::Compose:
      return index == 0 ? PatternExpr::compose(std::move(replacement), e.right())
                        : PatternExpr::compose(e.left(), std::move(replacement));
    case PatternKind::Gen:
    case PatternKind::ConnSum:
      break;
  }
  throw Error("InvalidPath", "rewrite path descends into a leaf");
}

PatternExpr rewrite_rec(const PatternExpr& e, const RewritePath& path, std::size_t depth,
                        const PatternRegistry& reg) {
  if (depth == path.size()) {
    auto r = root_step(e, reg);
    if (!r) throw Error("InvalidPath", "no rule applies at the given position");
    return *r;
  }
  const int idx = path[depth];
  const bool leaf = e.kind() == PatternKind::Gen || e.kind() == PatternKind::ConnSum;
  if (leaf || idx < 0 || idx > 1 || (idx == 1 && e.kind() != PatternKind::Compose))
    throw Error("InvalidPath", "path leaves the expression");
  const PatternExpr& sub = (e.kind() == PatternKind::Compose && idx == 1) ? e.right() : e.child();
  return rebuild_with(e, idx, rewrite_rec(sub, path, depth + 1, reg));
}

bool contains_dual(const PatternExpr& e) {
  switch (e.kind()) {
    case PatternKind::Dual:
      return true;
    case PatternKind::Gen:
    case PatternKind::ConnSum:
      return false;
    case PatternKind::Twist:
    case PatternKind::Bar:
      return contains_dual(e.child());
    case PatternKind::Compose:
      return contains_dual(e.left()) || contains_dual(e.right());
  }
  return false;
}

}  // namespace

PatternExpr parse_pattern(std::string_view text) { return Parser(text).parse(); }

PatternExpr normalize(const PatternExpr& e, const PatternRegistry& reg) { return normal(e, reg); }

PatternExpr dual(const PatternExpr& e, const PatternRegistry& reg) {
  return normal(PatternExpr::dual(e), reg);
}

PatternExpr bar(const PatternExpr& e, const PatternRegistry& reg) { return normal(PatternExpr::bar(e), reg); }

PatternExpr concordance_inverse(const PatternExpr& e, const PatternRegistry& reg) {
  return normal(PatternExpr::bar(PatternExpr::dual(e)), reg);
}

std::int64_t winding_number(const PatternExpr& e) {
  switch (e.kind()) {
    case PatternKind::Gen:
    case PatternKind::ConnSum:
      return 1;
    case PatternKind::Twist:
    case PatternKind::Bar:
    case PatternKind::Dual:
      return winding_number(e.child());
    case PatternKind::Compose:
      return winding_number(e.left()) * winding_number(e.right());
  }
  return 1;
}

std::vector<RewritePath> redexes(const PatternExpr& e, const PatternRegistry& reg) {
  std::vector<RewritePath> out;
  RewritePath here;
  collect_redexes(e, reg, here, out);
  if (out.empty() && contains_dual(e))
    throw Error("NoDeclaredDual", "dual of a generator without declared dual in " + e.to_string());
  return out;
}

PatternExpr rewrite_at(const PatternExpr& e, const RewritePath& path, const PatternRegistry& reg) {
  return rewrite_rec(e, path, 0, reg);
}

std::pair<Integer, Integer> rewrite_measure(const PatternExpr& e) {
  // weight: leaves 1, Twist a+1, Compose a+b+2, Bar 2a+1, Dual 3a+1.
  // left-nesting: sum over Compose nodes of the size of the left operand.
  switch (e.kind()) {
    case PatternKind::Gen:
    case PatternKind::ConnSum:
      return {1, 0};
    case PatternKind::Twist: {
      auto [w, l] = rewrite_measure(e.child());
      return {w + 1, l};
    }
    case PatternKind::Bar: {
      auto [w, l] = rewrite_measure(e.child());
      return {2 * w + 1, l};
    }
    case PatternKind::Dual: {
      auto [w, l] = rewrite_measure(e.child());
      return {3 * w + 1, l};
    }
    case PatternKind::Compose: {
      auto [wl, ll] = rewrite_measure(e.left());
      auto [wr, lr] = rewrite_measure(e.right());
      return {wl + wr + 2, ll + lr + static_cast<long long>(e.left().size())};
    }
  }
  return {0, 0};
}

}  // namespace conckit
