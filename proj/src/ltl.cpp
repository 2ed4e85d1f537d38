#include "structltl/ltl.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <unordered_map>

namespace structltl {

ApTable ApTable::from_names(std::vector<std::string> names) {
  ApTable t;
  t.names = std::move(names);
  for (size_t i = 0; i < t.names.size(); ++i) {
    for (size_t j = i + 1; j < t.names.size(); ++j) {
      if (t.names[i] == t.names[j]) {
        throw std::invalid_argument("duplicate proposition name: " + t.names[i]);
      }
    }
  }
  if (t.names.size() > 30) throw std::invalid_argument("too many propositions (max 30)");
  return t;
}

int ApTable::index_of(std::string_view name) const {
  for (size_t i = 0; i < names.size(); ++i) {
    if (names[i] == name) return static_cast<int>(i);
  }
  return -1;
}

std::string assignment_to_string(Assignment a, const ApTable& ap) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < ap.size(); ++i) {
    if (!assignment_has(a, i)) continue;
    if (!first) out += ",";
    out += ap.names[static_cast<size_t>(i)];
    first = false;
  }
  out += "}";
  return out;
}

LtlFormula::Ptr LtlFormula::make_true() {
  static const Ptr t(new LtlFormula(LtlOp::True, -1, nullptr, nullptr));
  return t;
}

LtlFormula::Ptr LtlFormula::make_false() { return make_not(make_true()); }

LtlFormula::Ptr LtlFormula::make_prop(int index) {
  return Ptr(new LtlFormula(LtlOp::Prop, index, nullptr, nullptr));
}

LtlFormula::Ptr LtlFormula::make_not(Ptr f) {
  return Ptr(new LtlFormula(LtlOp::Not, -1, std::move(f), nullptr));
}

LtlFormula::Ptr LtlFormula::make_and(Ptr a, Ptr b) {
  return Ptr(new LtlFormula(LtlOp::And, -1, std::move(a), std::move(b)));
}

LtlFormula::Ptr LtlFormula::make_or(Ptr a, Ptr b) {
  return Ptr(new LtlFormula(LtlOp::Or, -1, std::move(a), std::move(b)));
}

LtlFormula::Ptr LtlFormula::make_implies(Ptr a, Ptr b) {
  return Ptr(new LtlFormula(LtlOp::Implies, -1, std::move(a), std::move(b)));
}

LtlFormula::Ptr LtlFormula::make_next(Ptr f) {
  return Ptr(new LtlFormula(LtlOp::Next, -1, std::move(f), nullptr));
}

LtlFormula::Ptr LtlFormula::make_until(Ptr a, Ptr b) {
  return Ptr(new LtlFormula(LtlOp::Until, -1, std::move(a), std::move(b)));
}

LtlFormula::Ptr LtlFormula::make_eventually(Ptr f) {
  return Ptr(new LtlFormula(LtlOp::Eventually, -1, std::move(f), nullptr));
}

LtlFormula::Ptr LtlFormula::make_always(Ptr f) {
  return Ptr(new LtlFormula(LtlOp::Always, -1, std::move(f), nullptr));
}

bool structurally_equal(const LtlFormula::Ptr& a, const LtlFormula::Ptr& b) {
  if (a.get() == b.get()) return true;
  if (!a || !b) return false;
  if (a->op != b->op || a->prop != b->prop) return false;
  return structurally_equal(a->lhs, b->lhs) && structurally_equal(a->rhs, b->rhs);
}

bool is_true(const LtlFormula::Ptr& f) { return f && f->op == LtlOp::True; }

bool is_false(const LtlFormula::Ptr& f) {
  return f && f->op == LtlOp::Not && is_true(f->lhs);
}

LtlFormula::Ptr expand(const LtlFormula::Ptr& f) {
  using F = LtlFormula;
  switch (f->op) {
    case LtlOp::True:
    case LtlOp::Prop:
      return f;
    case LtlOp::Not:
      return F::make_not(expand(f->lhs));
    case LtlOp::And:
      return F::make_and(expand(f->lhs), expand(f->rhs));
    case LtlOp::Or:  // a | b == !(!a & !b)
      return F::make_not(F::make_and(F::make_not(expand(f->lhs)), F::make_not(expand(f->rhs))));
    case LtlOp::Implies:  // a -> b == !(a & !b)
      return F::make_not(F::make_and(expand(f->lhs), F::make_not(expand(f->rhs))));
    case LtlOp::Next:
      return F::make_next(expand(f->lhs));
    case LtlOp::Until:
      return F::make_until(expand(f->lhs), expand(f->rhs));
    case LtlOp::Eventually:  // F a == true U a
      return F::make_until(F::make_true(), expand(f->lhs));
    case LtlOp::Always:  // G a == !(true U !a)
      return F::make_not(F::make_until(F::make_true(), F::make_not(expand(f->lhs))));
  }
  throw std::logic_error("unreachable");
}

namespace {

// Collects operands of a same-op chain (And or Or) left to right.
void flatten(const LtlFormula::Ptr& f, LtlOp op, std::vector<LtlFormula::Ptr>& out) {
  if (f->op == op) {
    flatten(f->lhs, op, out);
    flatten(f->rhs, op, out);
  } else {
    out.push_back(f);
  }
}

LtlFormula::Ptr rebuild(LtlOp op, const std::vector<LtlFormula::Ptr>& parts) {
  LtlFormula::Ptr acc = parts.back();
  for (size_t i = parts.size() - 1; i-- > 0;) {
    acc = op == LtlOp::And ? LtlFormula::make_and(parts[i], acc)
                           : LtlFormula::make_or(parts[i], acc);
  }
  return acc;
}

}  // namespace

LtlFormula::Ptr simplify(const LtlFormula::Ptr& f) {
  using F = LtlFormula;
  switch (f->op) {
    case LtlOp::True:
    case LtlOp::Prop:
      return f;
    case LtlOp::Not: {
      auto a = simplify(f->lhs);
      if (is_false(a)) return F::make_true();
      if (a->op == LtlOp::Not && !is_true(a->lhs)) return a->lhs;  // keep !true canonical
      return F::make_not(a);
    }
    case LtlOp::And:
    case LtlOp::Or: {
      const bool is_and = f->op == LtlOp::And;
      std::vector<F::Ptr> raw;
      flatten(f, f->op, raw);
      std::vector<F::Ptr> kept;
      for (const auto& part : raw) {
        auto p = simplify(part);
        if (is_and ? is_false(p) : is_true(p)) {
          return is_and ? F::make_false() : F::make_true();
        }
        if (is_and ? is_true(p) : is_false(p)) continue;  // neutral element
        bool dup = false;
        for (const auto& k : kept) {
          if (structurally_equal(k, p)) {
            dup = true;
            break;
          }
        }
        if (!dup) kept.push_back(p);
      }
      if (kept.empty()) return is_and ? F::make_true() : F::make_false();
      if (kept.size() == 1) return kept[0];
      return rebuild(f->op, kept);
    }
    case LtlOp::Implies: {
      auto a = simplify(f->lhs);
      auto b = simplify(f->rhs);
      if (is_false(a) || is_true(b)) return F::make_true();
      if (is_true(a)) return b;
      if (is_false(b)) return simplify(F::make_not(a));
      return F::make_implies(a, b);
    }
    case LtlOp::Next: {
      auto a = simplify(f->lhs);
      if (is_true(a)) return F::make_true();
      if (is_false(a)) return F::make_false();
      return F::make_next(a);
    }
    case LtlOp::Until: {
      auto a = simplify(f->lhs);
      auto b = simplify(f->rhs);
      if (is_true(b)) return F::make_true();
      if (is_false(b)) return F::make_false();  // nothing to reach
      if (is_false(a)) return b;                // must hold immediately
      return F::make_until(a, b);
    }
    case LtlOp::Eventually: {
      auto a = simplify(f->lhs);
      if (is_true(a)) return F::make_true();
      if (is_false(a)) return F::make_false();
      return F::make_eventually(a);
    }
    case LtlOp::Always: {
      auto a = simplify(f->lhs);
      if (is_true(a)) return F::make_true();
      if (is_false(a)) return F::make_false();
      return F::make_always(a);
    }
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Printing

namespace {

// Precedence levels, higher binds tighter.
int prec_of(LtlOp op) {
  switch (op) {
    case LtlOp::Implies:
      return 1;
    case LtlOp::Or:
      return 2;
    case LtlOp::And:
      return 3;
    case LtlOp::Until:
      return 4;
    case LtlOp::Not:
    case LtlOp::Next:
    case LtlOp::Eventually:
    case LtlOp::Always:
      return 5;
    case LtlOp::True:
    case LtlOp::Prop:
      return 6;
  }
  return 6;
}

void print_rec(const LtlFormula::Ptr& f, const ApTable& ap, int parent_prec, bool right_of_same,
               std::string& out) {
  const int p = prec_of(f->op);
  // Parenthesize when binding looser than the context requires. Until is
  // right-associative, so a right child at equal precedence needs no parens.
  const bool parens = p < parent_prec || (p == parent_prec && !right_of_same);
  if (is_false(f)) {
    out += "false";
    return;
  }
  if (parens) out += "(";
  switch (f->op) {
    case LtlOp::True:
      out += "true";
      break;
    case LtlOp::Prop:
      out += ap.name_of(f->prop);
      break;
    case LtlOp::Not:
      out += "!";
      print_rec(f->lhs, ap, p + 1, false, out);
      break;
    case LtlOp::Next:
      out += "X ";
      print_rec(f->lhs, ap, p, true, out);
      break;
    case LtlOp::Eventually:
      out += "F ";
      print_rec(f->lhs, ap, p, true, out);
      break;
    case LtlOp::Always:
      out += "G ";
      print_rec(f->lhs, ap, p, true, out);
      break;
    case LtlOp::And:
      print_rec(f->lhs, ap, p, false, out);
      out += " & ";
      print_rec(f->rhs, ap, p, true, out);
      break;
    case LtlOp::Or:
      print_rec(f->lhs, ap, p, false, out);
      out += " | ";
      print_rec(f->rhs, ap, p, true, out);
      break;
    case LtlOp::Implies:
      print_rec(f->lhs, ap, p + 1, false, out);
      out += " -> ";
      print_rec(f->rhs, ap, p, true, out);
      break;
    case LtlOp::Until:
      print_rec(f->lhs, ap, p + 1, false, out);
      out += " U ";
      print_rec(f->rhs, ap, p, true, out);
      break;
  }
  if (parens) out += ")";
}

}  // namespace

std::string print_ltl(const LtlFormula::Ptr& f, const ApTable& ap) {
  std::string out;
  print_rec(f, ap, 0, true, out);
  return out;
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

struct Token {
  enum class Kind { Ident, True, False, Not, And, Or, Implies, Next, Until, Fin, Glob, LParen, RParen, End };
  Kind kind;
  std::string text;
  size_t pos;
};

class Lexer {
 public:
  Lexer(std::string_view text) : text_(text) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

 private:
  void advance() {
    while (i_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[i_]))) ++i_;
    tok_.pos = i_;
    if (i_ >= text_.size()) {
      tok_.kind = Token::Kind::End;
      return;
    }
    const char c = text_[i_];
    if (c == '(') {
      tok_ = {Token::Kind::LParen, "(", i_++};
      return;
    }
    if (c == ')') {
      tok_ = {Token::Kind::RParen, ")", i_++};
      return;
    }
    if (c == '!') {
      tok_ = {Token::Kind::Not, "!", i_++};
      return;
    }
    if (c == '&') {
      tok_ = {Token::Kind::And, "&", i_++};
      return;
    }
    if (c == '|') {
      tok_ = {Token::Kind::Or, "|", i_++};
      return;
    }
    if (c == '-') {
      if (i_ + 1 < text_.size() && text_[i_ + 1] == '>') {
        tok_ = {Token::Kind::Implies, "->", i_};
        i_ += 2;
        return;
      }
      throw LtlParseError("expected '->'", i_);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = i_;
      while (i_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[i_])) || text_[i_] == '_')) {
        ++i_;
      }
      std::string word(text_.substr(start, i_ - start));
      Token::Kind k = Token::Kind::Ident;
      if (word == "true") k = Token::Kind::True;
      else if (word == "false") k = Token::Kind::False;
      else if (word == "X") k = Token::Kind::Next;
      else if (word == "U") k = Token::Kind::Until;
      else if (word == "F") k = Token::Kind::Fin;
      else if (word == "G") k = Token::Kind::Glob;
      tok_ = {k, std::move(word), start};
      return;
    }
    throw LtlParseError(std::string("unexpected character '") + c + "'", i_);
  }

  std::string_view text_;
  size_t i_ = 0;
  Token tok_;
};

class Parser {
 public:
  Parser(std::string_view text, const ApTable& ap) : lex_(text), ap_(ap) {}

  LtlFormula::Ptr parse() {
    auto f = parse_implies();
    if (lex_.peek().kind != Token::Kind::End) {
      throw LtlParseError("trailing input", lex_.peek().pos);
    }
    return f;
  }

 private:
  using F = LtlFormula;

  F::Ptr parse_implies() {
    auto lhs = parse_or();
    if (lex_.peek().kind == Token::Kind::Implies) {
      lex_.take();
      return F::make_implies(lhs, parse_implies());
    }
    return lhs;
  }

  F::Ptr parse_or() {
    auto lhs = parse_and();
    while (lex_.peek().kind == Token::Kind::Or) {
      lex_.take();
      lhs = F::make_or(lhs, parse_and());
    }
    return lhs;
  }

  F::Ptr parse_and() {
    auto lhs = parse_until();
    while (lex_.peek().kind == Token::Kind::And) {
      lex_.take();
      lhs = F::make_and(lhs, parse_until());
    }
    return lhs;
  }

  F::Ptr parse_until() {
    auto lhs = parse_unary();
    if (lex_.peek().kind == Token::Kind::Until) {
      lex_.take();
      return F::make_until(lhs, parse_until());
    }
    return lhs;
  }

  F::Ptr parse_unary() {
    const Token& t = lex_.peek();
    switch (t.kind) {
      case Token::Kind::Not:
        lex_.take();
        return F::make_not(parse_unary());
      case Token::Kind::Next:
        lex_.take();
        return F::make_next(parse_unary());
      case Token::Kind::Fin:
        lex_.take();
        return F::make_eventually(parse_unary());
      case Token::Kind::Glob:
        lex_.take();
        return F::make_always(parse_unary());
      default:
        return parse_atom();
    }
  }

  F::Ptr parse_atom() {
    Token t = lex_.take();
    switch (t.kind) {
      case Token::Kind::True:
        return F::make_true();
      case Token::Kind::False:
        return F::make_false();
      case Token::Kind::Ident: {
        int idx = ap_.index_of(t.text);
        if (idx < 0) throw LtlParseError("unknown proposition '" + t.text + "'", t.pos);
        return F::make_prop(idx);
      }
      case Token::Kind::LParen: {
        auto inner = parse_implies();
        Token close = lex_.take();
        if (close.kind != Token::Kind::RParen) throw LtlParseError("expected ')'", close.pos);
        return inner;
      }
      default:
        throw LtlParseError("expected formula", t.pos);
    }
  }

  Lexer lex_;
  const ApTable& ap_;
};

}  // namespace

LtlFormula::Ptr parse_ltl(std::string_view text, const ApTable& ap) {
  return Parser(text, ap).parse();
}

// ---------------------------------------------------------------------------
// Lasso evaluation

namespace {

// Memoized evaluator over canonical positions [0, P+L). For Until/F/G a
// lookahead window of one full loop period past max(i, P) is exact: any
// shorter witness can be rotated back by one period. Nested temporal
// operators each add at most one period, so the total work stays within
// 2*L*(#temporal subformulae) unrollings.
class TraceEval {
 public:
  explicit TraceEval(const LassoTrace& t) : trace_(t), P_(t.prefix.size()), L_(t.loop.size()) {}

  bool eval(const LtlFormula::Ptr& f, size_t i) {
    i = canonical(i);
    auto& memo = memo_[f.get()];
    if (memo.empty()) memo.assign(P_ + L_, -1);
    if (memo[i] >= 0) return memo[i] != 0;
    bool v = compute(f, i);
    memo[i] = v ? 1 : 0;
    return v;
  }

 private:
  size_t canonical(size_t i) const { return i < P_ ? i : P_ + (i - P_) % L_; }
  size_t window_end(size_t i) const { return std::max(i, P_) + L_; }

  bool compute(const LtlFormula::Ptr& f, size_t i) {
    switch (f->op) {
      case LtlOp::True:
        return true;
      case LtlOp::Prop:
        return assignment_has(trace_.at(i), f->prop);
      case LtlOp::Not:
        return !eval(f->lhs, i);
      case LtlOp::And:
        return eval(f->lhs, i) && eval(f->rhs, i);
      case LtlOp::Or:
        return eval(f->lhs, i) || eval(f->rhs, i);
      case LtlOp::Implies:
        return !eval(f->lhs, i) || eval(f->rhs, i);
      case LtlOp::Next:
        return eval(f->lhs, i + 1);
      case LtlOp::Until: {
        for (size_t j = i; j < window_end(i); ++j) {
          if (eval(f->rhs, j)) return true;
          if (!eval(f->lhs, j)) return false;
        }
        return false;
      }
      case LtlOp::Eventually: {
        for (size_t j = i; j < window_end(i); ++j) {
          if (eval(f->lhs, j)) return true;
        }
        return false;
      }
      case LtlOp::Always: {
        for (size_t j = i; j < window_end(i); ++j) {
          if (!eval(f->lhs, j)) return false;
        }
        return true;
      }
    }
    throw std::logic_error("unreachable");
  }

  const LassoTrace& trace_;
  size_t P_, L_;
  std::unordered_map<const LtlFormula*, std::vector<signed char>> memo_;
};

}  // namespace

bool eval_trace(const LtlFormula::Ptr& f, const LassoTrace& trace) {
  if (trace.loop.empty()) throw std::invalid_argument("lasso loop must be non-empty");
  TraceEval ev(trace);
  return ev.eval(f, 0);
}

// ---------------------------------------------------------------------------
// Progression

namespace {

LtlFormula::Ptr progress_raw(const LtlFormula::Ptr& f, Assignment alpha) {
  using F = LtlFormula;
  switch (f->op) {
    case LtlOp::True:
      return F::make_true();
    case LtlOp::Prop:
      return assignment_has(alpha, f->prop) ? F::make_true() : F::make_false();
    case LtlOp::Not:
      return F::make_not(progress_raw(f->lhs, alpha));
    case LtlOp::And:
      return F::make_and(progress_raw(f->lhs, alpha), progress_raw(f->rhs, alpha));
    case LtlOp::Or:
      return F::make_or(progress_raw(f->lhs, alpha), progress_raw(f->rhs, alpha));
    case LtlOp::Implies:
      return F::make_implies(progress_raw(f->lhs, alpha), progress_raw(f->rhs, alpha));
    case LtlOp::Next:
      return f->lhs;
    case LtlOp::Until:
      return F::make_or(progress_raw(f->rhs, alpha),
                        F::make_and(progress_raw(f->lhs, alpha), f));
    case LtlOp::Eventually:
      return F::make_or(progress_raw(f->lhs, alpha), f);
    case LtlOp::Always:
      return F::make_and(progress_raw(f->lhs, alpha), f);
  }
  throw std::logic_error("unreachable");
}

}  // namespace

LtlFormula::Ptr progress(const LtlFormula::Ptr& f, Assignment alpha) {
  return simplify(progress_raw(f, alpha));
}

// ---------------------------------------------------------------------------
// Random formulae over the supported fragment

namespace {

using F = LtlFormula;

int rand_int(std::mt19937_64& rng, int n) { return static_cast<int>(rng() % static_cast<uint64_t>(n)); }

F::Ptr random_literal(const ApTable& ap, std::mt19937_64& rng) {
  auto p = F::make_prop(rand_int(rng, ap.size()));
  return rand_int(rng, 2) == 0 ? p : F::make_not(p);
}

// Propositional formula: literal or a 2-literal connective.
F::Ptr random_prop_formula(const ApTable& ap, std::mt19937_64& rng, int depth) {
  if (depth <= 1 || rand_int(rng, 2) == 0) return random_literal(ap, rng);
  auto a = random_prop_formula(ap, rng, depth - 1);
  auto b = random_prop_formula(ap, rng, depth - 1);
  return rand_int(rng, 2) == 0 ? F::make_and(a, b) : F::make_or(a, b);
}

F::Ptr random_cosafe(const ApTable& ap, std::mt19937_64& rng, int depth) {
  if (depth <= 1) return random_literal(ap, rng);
  switch (rand_int(rng, 6)) {
    case 0:
      return F::make_and(random_cosafe(ap, rng, depth - 1), random_cosafe(ap, rng, depth - 1));
    case 1:
      return F::make_or(random_cosafe(ap, rng, depth - 1), random_cosafe(ap, rng, depth - 1));
    case 2:
      return F::make_next(random_cosafe(ap, rng, depth - 1));
    case 3:
    case 4:
      return F::make_eventually(random_cosafe(ap, rng, depth - 1));
    default:
      return F::make_until(random_cosafe(ap, rng, depth - 1), random_cosafe(ap, rng, depth - 1));
  }
}

F::Ptr random_safety(const ApTable& ap, std::mt19937_64& rng, int depth) {
  if (depth <= 1) return random_literal(ap, rng);
  switch (rand_int(rng, 5)) {
    case 0:
      return F::make_and(random_safety(ap, rng, depth - 1), random_safety(ap, rng, depth - 1));
    case 1:
      return F::make_or(random_safety(ap, rng, depth - 1), random_safety(ap, rng, depth - 1));
    case 2:
      return F::make_next(random_safety(ap, rng, depth - 1));
    default:
      return F::make_always(random_safety(ap, rng, depth - 1));
  }
}

F::Ptr random_fg(const ApTable& ap, std::mt19937_64& rng, int depth) {
  return F::make_eventually(F::make_always(random_prop_formula(ap, rng, depth)));
}

F::Ptr random_gf(const ApTable& ap, std::mt19937_64& rng, int depth) {
  int n = depth >= 3 ? 1 + rand_int(rng, 2) : 1;
  auto acc = F::make_always(F::make_eventually(random_prop_formula(ap, rng, std::max(1, depth - 1))));
  for (int i = 1; i < n; ++i) {
    acc = F::make_and(
        acc, F::make_always(F::make_eventually(random_prop_formula(ap, rng, std::max(1, depth - 1)))));
  }
  return acc;
}

// Suffix for chains: G beta, a GF conjunction, or both.
F::Ptr random_suffix(const ApTable& ap, std::mt19937_64& rng, int depth) {
  switch (rand_int(rng, 3)) {
    case 0:
      return F::make_always(random_prop_formula(ap, rng, depth));
    case 1:
      return random_gf(ap, rng, depth);
    default:
      return F::make_and(F::make_always(random_prop_formula(ap, rng, std::max(1, depth - 1))),
                         random_gf(ap, rng, std::max(1, depth - 1)));
  }
}

// Reach-then-suffix: F(S), F(gamma & S), c U S, or c U (gamma & S).
F::Ptr random_chain(const ApTable& ap, std::mt19937_64& rng, int depth) {
  auto suffix = random_suffix(ap, rng, std::max(1, depth - 1));
  F::Ptr goal = suffix;
  if (rand_int(rng, 2) == 0) {
    goal = F::make_and(random_prop_formula(ap, rng, std::max(1, depth - 1)), suffix);
  }
  if (rand_int(rng, 2) == 0) return F::make_eventually(goal);
  return F::make_until(random_prop_formula(ap, rng, std::max(1, depth - 1)), goal);
}

F::Ptr random_branch(const ApTable& ap, std::mt19937_64& rng, int depth) {
  switch (rand_int(rng, 4)) {
    case 0:
      return random_cosafe(ap, rng, depth);
    case 1:
      return random_safety(ap, rng, depth);
    case 2:
      return random_gf(ap, rng, depth);
    default:
      return random_chain(ap, rng, depth);
  }
}

}  // namespace

LtlFormula::Ptr random_formula(FragmentSpec fragment, int depth, const ApTable& ap,
                               std::mt19937_64& rng) {
  if (depth < 1) throw std::invalid_argument("depth must be >= 1");
  switch (fragment.kind) {
    case FragmentSpec::Kind::CoSafe:
      return random_cosafe(ap, rng, depth);
    case FragmentSpec::Kind::Safety:
      return random_safety(ap, rng, depth);
    case FragmentSpec::Kind::FgCore:
      return random_fg(ap, rng, depth);
    case FragmentSpec::Kind::GfCore:
      return random_gf(ap, rng, depth);
    case FragmentSpec::Kind::BooleanCombination: {
      int n = 1 + rand_int(rng, 2);
      auto acc = random_branch(ap, rng, depth);
      for (int i = 1; i < n; ++i) acc = F::make_or(acc, random_branch(ap, rng, depth));
      return acc;
    }
  }
  throw std::logic_error("unreachable");
}

// ---------------------------------------------------------------------------
// Fragment membership

namespace {

bool is_literal(const F::Ptr& f) {
  return f->op == LtlOp::Prop || (f->op == LtlOp::Not && f->lhs->op == LtlOp::Prop);
}

bool is_propositional(const F::Ptr& f) {
  if (is_true(f) || is_false(f) || is_literal(f)) return true;
  if (f->op == LtlOp::And || f->op == LtlOp::Or) {
    return is_propositional(f->lhs) && is_propositional(f->rhs);
  }
  return false;
}

bool is_cosafe(const F::Ptr& f) {
  if (is_true(f) || is_false(f) || is_literal(f)) return true;
  switch (f->op) {
    case LtlOp::And:
    case LtlOp::Or:
    case LtlOp::Until:
      return is_cosafe(f->lhs) && is_cosafe(f->rhs);
    case LtlOp::Next:
    case LtlOp::Eventually:
      return is_cosafe(f->lhs);
    default:
      return false;
  }
}

bool is_safety(const F::Ptr& f) {
  if (is_true(f) || is_false(f) || is_literal(f)) return true;
  switch (f->op) {
    case LtlOp::And:
    case LtlOp::Or:
      return is_safety(f->lhs) && is_safety(f->rhs);
    case LtlOp::Next:
    case LtlOp::Always:
      return is_safety(f->lhs);
    default:
      return false;
  }
}

bool is_gf_conj(const F::Ptr& f) {
  if (f->op == LtlOp::And) return is_gf_conj(f->lhs) && is_gf_conj(f->rhs);
  return f->op == LtlOp::Always && f->lhs->op == LtlOp::Eventually &&
         is_propositional(f->lhs->lhs);
}

bool is_suffix(const F::Ptr& f) {
  if (f->op == LtlOp::Always && is_propositional(f->lhs)) return true;
  if (is_gf_conj(f)) return true;
  if (f->op == LtlOp::And) {
    // any conjunction of G(prop) and GF(prop) parts
    return (is_suffix(f->lhs) || (f->lhs->op == LtlOp::Always && is_propositional(f->lhs->lhs))) &&
           (is_suffix(f->rhs) || (f->rhs->op == LtlOp::Always && is_propositional(f->rhs->lhs)));
  }
  return false;
}

bool is_chain(const F::Ptr& f) {
  if (is_suffix(f)) return true;
  F::Ptr goal;
  if (f->op == LtlOp::Eventually) {
    goal = f->lhs;
  } else if (f->op == LtlOp::Until && is_propositional(f->lhs)) {
    goal = f->rhs;
  } else {
    return false;
  }
  if (is_suffix(goal)) return true;
  if (goal->op == LtlOp::And) {
    // gamma & S with gamma propositional; allow either operand order
    if (is_propositional(goal->lhs) && is_suffix(goal->rhs)) return true;
    if (is_propositional(goal->rhs) && is_suffix(goal->lhs)) return true;
  }
  return false;
}

bool is_branch(const F::Ptr& f) {
  return is_cosafe(f) || is_safety(f) || is_gf_conj(f) || is_chain(f);
}

bool is_combination(const F::Ptr& f) {
  if (f->op == LtlOp::Or && !is_cosafe(f) && !is_safety(f)) {
    return is_combination(f->lhs) && is_combination(f->rhs);
  }
  return is_branch(f);
}

}  // namespace

bool in_fragment(const LtlFormula::Ptr& f, FragmentSpec fragment) {
  switch (fragment.kind) {
    case FragmentSpec::Kind::CoSafe:
      return is_cosafe(f);
    case FragmentSpec::Kind::Safety:
      return is_safety(f);
    case FragmentSpec::Kind::FgCore:
      return f->op == LtlOp::Eventually && f->lhs->op == LtlOp::Always &&
             is_propositional(f->lhs->lhs);
    case FragmentSpec::Kind::GfCore:
      return is_gf_conj(f);
    case FragmentSpec::Kind::BooleanCombination:
      return is_combination(f);
  }
  return false;
}

}  // namespace structltl
