/* Copyright 2026 The Parakeet Authors. All Rights Reserved.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/


#include "parakeet/parser.h"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

#include "parakeet/term.h"

namespace parakeet {

namespace {

// ---------------------------------------------------------------------------
// Lexing

enum class Tok {
  kIdent, kLParen, kRParen, kComma, kDot, kColon, kBang, kQuestion, kLambda,
  kNot, kAnd, kOr, kImp, kIff, kEq, kNeq, kEnd
};

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t column;
  bool glued = false;  // no whitespace before this token
};

bool ident_start(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_' || c == '$';
}
bool ident_char(char c) { return ident_start(c) || c == '\''; }

std::vector<Token> lex(std::string_view text) {
  std::vector<Token> out;
  std::size_t line = 1;
  std::size_t col = 1;
  std::size_t i = 0;
  bool space = true;
  auto advance = [&](std::size_t n) {
    for (std::size_t k = 0; k < n; ++k, ++i) {
      if (text[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < text.size()) {
    char c = text[i];
    if (c == '#' || c == '%') {
      while (i < text.size() && text[i] != '\n') advance(1);
      space = true;
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      space = true;
      continue;
    }
    Token tok{Tok::kEnd, "", line, col, !space};
    space = false;
    auto sym = [&](Tok k, std::size_t n) {
      tok.kind = k;
      tok.text = std::string(text.substr(i, n));
      advance(n);
    };
    std::string_view rest = text.substr(i);
    if (ident_start(c)) {
      std::size_t n = 0;
      while (n < rest.size() && ident_char(rest[n])) ++n;
      sym(Tok::kIdent, n);
    } else if (rest.starts_with("<->")) {
      sym(Tok::kIff, 3);
    } else if (rest.starts_with("->")) {
      sym(Tok::kImp, 2);
    } else if (rest.starts_with("!=")) {
      sym(Tok::kNeq, 2);
    } else {
      switch (c) {
        case '(': sym(Tok::kLParen, 1); break;
        case ')': sym(Tok::kRParen, 1); break;
        case ',': sym(Tok::kComma, 1); break;
        case '.': sym(Tok::kDot, 1); break;
        case ':': sym(Tok::kColon, 1); break;
        case '!': sym(Tok::kBang, 1); break;
        case '?': sym(Tok::kQuestion, 1); break;
        case '\\': sym(Tok::kLambda, 1); break;
        case '~': sym(Tok::kNot, 1); break;
        case '&': sym(Tok::kAnd, 1); break;
        case '|': sym(Tok::kOr, 1); break;
        case '=': sym(Tok::kEq, 1); break;
        default:
          throw ParseError(line, col, std::string("unexpected character '") + c + "'");
      }
    }
    out.push_back(std::move(tok));
  }
  out.push_back(Token{Tok::kEnd, "", line, col, false});
  return out;
}

bool is_keyword(const std::string& s) {
  return s == "fact" || s == "goal" || s == "option" || s == "const";
}

// ---------------------------------------------------------------------------
// Untyped expression trees; resolved into formulas and terms afterwards.

struct Expr {
  enum Kind {
    kIdent, kApp, kCall, kLam, kForall, kExists, kNot, kAnd, kOr, kImp, kIff,
    kEq, kNeq
  };
  Kind kind;
  std::string name;  // identifier or bound variable
  std::vector<Expr> kids;
  std::size_t line;
  std::size_t column;
};

class ExprParser {
 public:
  explicit ExprParser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  const Token& peek(std::size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  bool at(Tok k) const { return peek().kind == k; }
  bool at_keyword() const { return at(Tok::kIdent) && is_keyword(peek().text); }
  Token next() {
    Token t = peek();
    if (pos_ < toks_.size() - 1) ++pos_;
    return t;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(peek().line, peek().column, what);
  }
  Token expect(Tok k, const char* what) {
    if (!at(k)) {
      fail(std::string("expected ") + what +
           (at(Tok::kEnd) ? " at end of input" : ", found '" + peek().text + "'"));
    }
    return next();
  }
  std::string ident(const char* what) {
    if (!at(Tok::kIdent) || at_keyword()) {
      fail(std::string("expected ") + what);
    }
    return next().text;
  }

  Expr expr() {
    if (at(Tok::kBang) || at(Tok::kQuestion) || at(Tok::kLambda)) return binder();
    return iff();
  }

 private:
  Expr make(Expr::Kind k, const Token& at_tok, std::vector<Expr> kids,
            std::string name = "") {
    return Expr{k, std::move(name), std::move(kids), at_tok.line, at_tok.column};
  }

  Expr binder() {
    Token t = next();
    Expr::Kind k = t.kind == Tok::kBang       ? Expr::kForall
                   : t.kind == Tok::kQuestion ? Expr::kExists
                                              : Expr::kLam;
    std::vector<std::string> vars;
    vars.push_back(ident("bound variable"));
    while (at(Tok::kIdent) && !at_keyword()) vars.push_back(next().text);
    expect(Tok::kDot, "'.'");
    Expr body = expr();
    for (auto it = vars.rbegin(); it != vars.rend(); ++it) {
      body = make(k, t, {std::move(body)}, *it);
    }
    return body;
  }

  Expr iff() {
    Expr l = imp();
    while (at(Tok::kIff)) {
      Token t = next();
      Expr r = imp();
      l = make(Expr::kIff, t, {std::move(l), std::move(r)});
    }
    return l;
  }

  Expr imp() {
    Expr l = disj();
    if (at(Tok::kImp)) {
      Token t = next();
      Expr r = at(Tok::kBang) || at(Tok::kQuestion) || at(Tok::kLambda) ? binder()
                                                                          : imp();
      return make(Expr::kImp, t, {std::move(l), std::move(r)});
    }
    return l;
  }

  Expr disj() {
    Expr l = conj();
    while (at(Tok::kOr)) {
      Token t = next();
      Expr r = conj();
      l = make(Expr::kOr, t, {std::move(l), std::move(r)});
    }
    return l;
  }

  Expr conj() {
    Expr l = unary();
    while (at(Tok::kAnd)) {
      Token t = next();
      Expr r = unary();
      l = make(Expr::kAnd, t, {std::move(l), std::move(r)});
    }
    return l;
  }

  Expr unary() {
    if (at(Tok::kNot)) {
      Token t = next();
      return make(Expr::kNot, t, {unary()});
    }
    return equation();
  }

  Expr equation() {
    Expr l = application();
    if (at(Tok::kEq) || at(Tok::kNeq)) {
      Token t = next();
      Expr r = application();
      return make(t.kind == Tok::kEq ? Expr::kEq : Expr::kNeq, t,
                  {std::move(l), std::move(r)});
    }
    return l;
  }

  bool starts_argument() const {
    return (at(Tok::kIdent) && !at_keyword()) || at(Tok::kLParen) ||
           at(Tok::kLambda);
  }

  Expr application() {
    Token first = peek();
    Expr head = atom();
    if (!starts_argument()) return head;
    std::vector<Expr> kids{std::move(head)};
    while (starts_argument()) kids.push_back(atom());
    return make(Expr::kApp, first, std::move(kids));
  }

  Expr atom() {
    if (at(Tok::kBang) || at(Tok::kQuestion) || at(Tok::kLambda)) return binder();
    if (at(Tok::kLParen)) {
      next();
      Expr e = expr();
      expect(Tok::kRParen, "')'");
      return e;
    }
    if (!at(Tok::kIdent) || at_keyword()) {
      fail(at(Tok::kEnd) ? "unexpected end of input"
                         : "unexpected '" + peek().text + "'");
    }
    Token t = next();
    if (at(Tok::kLParen) && peek().glued) {
      next();
      std::vector<Expr> args;
      args.push_back(expr());
      while (at(Tok::kComma)) {
        next();
        args.push_back(expr());
      }
      expect(Tok::kRParen, "')'");
      return make(Expr::kCall, t, std::move(args), t.text);
    }
    return make(Expr::kIdent, t, {}, t.text);
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// ---------------------------------------------------------------------------
// Resolution of identifiers

struct Scope {
  const std::set<std::string>& constants;
  bool tptp = false;
  std::vector<std::string> bound;
  std::vector<std::string> free;  // collected free variables

  bool is_bound(const std::string& n) const {
    return std::find(bound.begin(), bound.end(), n) != bound.end();
  }
  bool is_constant(const std::string& n) const {
    if (tptp) return !(std::isupper(static_cast<unsigned char>(n[0])) || n[0] == '_');
    return constants.contains(n);
  }
};

bool implicit_constant(const std::string& n) {
  return std::isupper(static_cast<unsigned char>(n[0])) ||
         std::isdigit(static_cast<unsigned char>(n[0])) ||
         n == symbols::kUndefined;
}

SurfaceTerm to_term(const Expr& e, Scope& scope);

SurfaceTerm identifier(const std::string& n, Scope& scope) {
  if (scope.is_bound(n)) return SurfaceTerm::var(n);
  if (scope.is_constant(n)) return SurfaceTerm::constant(n);
  if (std::find(scope.free.begin(), scope.free.end(), n) == scope.free.end()) {
    scope.free.push_back(n);
  }
  return SurfaceTerm::var(n);
}

SurfaceTerm to_term(const Expr& e, Scope& scope) {
  switch (e.kind) {
    case Expr::kIdent:
      if (e.name == "True" || e.name == "False" || e.name == "$true" ||
          e.name == "$false") {
        throw ParseError(e.line, e.column, "'" + e.name + "' used as a term");
      }
      return identifier(e.name, scope);
    case Expr::kCall: {
      std::vector<SurfaceTerm> args;
      for (const Expr& k : e.kids) args.push_back(to_term(k, scope));
      SurfaceTerm head = scope.is_bound(e.name) ? SurfaceTerm::var(e.name)
                                                : SurfaceTerm::constant(e.name);
      return SurfaceTerm::apply(head, args);
    }
    case Expr::kApp: {
      SurfaceTerm t = to_term(e.kids[0], scope);
      for (std::size_t i = 1; i < e.kids.size(); ++i) {
        t = SurfaceTerm::app(t, to_term(e.kids[i], scope));
      }
      return t;
    }
    case Expr::kLam: {
      scope.bound.push_back(e.name);
      SurfaceTerm body = to_term(e.kids[0], scope);
      scope.bound.pop_back();
      return SurfaceTerm::lam(e.name, body);
    }
    default:
      throw ParseError(e.line, e.column, "formula used where a term is expected");
  }
}

Formula to_formula(const Expr& e, Scope& scope) {
  switch (e.kind) {
    case Expr::kIdent:
      if (e.name == "True" || e.name == "$true") return Formula::truth();
      if (e.name == "False" || e.name == "$false") return Formula::falsity();
      return Formula::atom(to_term(e, scope));
    case Expr::kCall:
    case Expr::kApp:
      return Formula::atom(to_term(e, scope));
    case Expr::kLam:
      throw ParseError(e.line, e.column, "lambda term used as a formula");
    case Expr::kForall:
    case Expr::kExists: {
      scope.bound.push_back(e.name);
      Formula body = to_formula(e.kids[0], scope);
      scope.bound.pop_back();
      return Formula::quant(
          e.kind == Expr::kForall ? Formula::Kind::kForall : Formula::Kind::kExists,
          e.name, body);
    }
    case Expr::kNot:
      return Formula::negation(to_formula(e.kids[0], scope));
    case Expr::kAnd:
    case Expr::kOr: {
      std::vector<Formula> parts;
      // Flatten left-nested chains.
      std::vector<const Expr*> stack{&e};
      std::vector<const Expr*> leaves;
      while (!stack.empty()) {
        const Expr* cur = stack.back();
        stack.pop_back();
        if (cur->kind == e.kind) {
          stack.push_back(&cur->kids[1]);
          stack.push_back(&cur->kids[0]);
        } else {
          leaves.push_back(cur);
        }
      }
      for (const Expr* l : leaves) parts.push_back(to_formula(*l, scope));
      return e.kind == Expr::kAnd ? Formula::conj(std::move(parts))
                                  : Formula::disj(std::move(parts));
    }
    case Expr::kImp:
    case Expr::kIff: {
      Formula a = to_formula(e.kids[0], scope);
      Formula b = to_formula(e.kids[1], scope);
      return Formula::binary(
          e.kind == Expr::kImp ? Formula::Kind::kImp : Formula::Kind::kIff, a, b);
    }
    case Expr::kEq:
    case Expr::kNeq: {
      SurfaceTerm l = to_term(e.kids[0], scope);
      SurfaceTerm r = to_term(e.kids[1], scope);
      Formula eq = Formula::eq(l, r);
      return e.kind == Expr::kEq ? eq : Formula::negation(eq);
    }
  }
  return Formula::truth();
}

// Identifiers occurring free (not under a binder of the same name).
void free_identifiers(const Expr& e, std::vector<std::string>& bound,
                      std::set<std::string>& out) {
  if (e.kind == Expr::kIdent) {
    if (std::find(bound.begin(), bound.end(), e.name) == bound.end()) {
      out.insert(e.name);
    }
    return;
  }
  if (e.kind == Expr::kCall) out.insert(e.name);
  bool binds = e.kind == Expr::kLam || e.kind == Expr::kForall ||
               e.kind == Expr::kExists;
  if (binds) bound.push_back(e.name);
  for (const Expr& k : e.kids) free_identifiers(k, bound, out);
  if (binds) bound.pop_back();
}

struct CallUse {
  std::size_t arity;
  std::size_t line;
  std::size_t column;
};

void record_calls(const Expr& e, std::map<std::string, CallUse>& uses) {
  if (e.kind == Expr::kCall) {
    auto [it, fresh] = uses.emplace(e.name, CallUse{e.kids.size(), e.line, e.column});
    if (!fresh && it->second.arity != e.kids.size()) {
      throw ParseError(e.line, e.column,
                       "arity clash: '" + e.name + "' applied to " +
                           std::to_string(e.kids.size()) + " argument(s) here but " +
                           std::to_string(it->second.arity) + " at line " +
                           std::to_string(it->second.line));
    }
  }
  for (const Expr& k : e.kids) record_calls(k, uses);
}

struct RawStatement {
  enum Kind { kFact, kGoal } kind;
  std::string name;
  Expr body;
  std::size_t line;
  std::size_t column;
};

bool parse_bool(const Token& t) {
  if (t.text == "true" || t.text == "on" || t.text == "1") return true;
  if (t.text == "false" || t.text == "off" || t.text == "0") return false;
  throw ParseError(t.line, t.column, "expected true or false, found '" + t.text + "'");
}

Problem parse_native(std::vector<Token> toks) {
  ExprParser p(std::move(toks));
  Problem problem;
  std::vector<RawStatement> stmts;
  std::set<std::string> declared;
  std::set<std::string> names;
  while (!p.at(Tok::kEnd)) {
    if (!p.at_keyword()) p.fail("expected 'fact', 'goal', 'option' or 'const'");
    Token kw = p.next();
    if (kw.text == "option") {
      Token key = p.expect(Tok::kIdent, "option name");
      p.expect(Tok::kEq, "'='");
      Token value = p.expect(Tok::kIdent, "option value");
      if (key.text == "lambda_mode" || key.text == "lambda") {
        if (value.text == "lifting") {
          problem.options.lambda_mode = LambdaMode::kLifting;
        } else if (value.text == "combinators") {
          problem.options.lambda_mode = LambdaMode::kCombinators;
        } else {
          throw ParseError(value.line, value.column,
                           "lambda_mode must be lifting or combinators");
        }
      } else if (key.text == "ext") {
        problem.options.ext = parse_bool(value);
      } else if (key.text == "undefined") {
        problem.options.undefined = parse_bool(value);
      } else {
        throw ParseError(key.line, key.column, "unknown option '" + key.text + "'");
      }
    } else if (kw.text == "const") {
      if (!p.at(Tok::kIdent) || p.at_keyword()) p.fail("expected constant names");
      while (p.at(Tok::kIdent) && !p.at_keyword()) declared.insert(p.next().text);
    } else if (kw.text == "fact") {
      Token name = p.expect(Tok::kIdent, "fact name");
      if (is_keyword(name.text)) {
        throw ParseError(name.line, name.column, "expected fact name");
      }
      if (!names.insert(name.text).second) {
        throw ParseError(name.line, name.column,
                         "duplicate fact name '" + name.text + "'");
      }
      p.expect(Tok::kColon, "':'");
      stmts.push_back({RawStatement::kFact, name.text, p.expr(), name.line, name.column});
    } else {
      if (problem.has_goal) {
        throw ParseError(kw.line, kw.column, "more than one goal");
      }
      p.expect(Tok::kColon, "':'");
      stmts.push_back({RawStatement::kGoal, "goal", p.expr(), kw.line, kw.column});
      problem.has_goal = true;
    }
  }

  std::map<std::string, CallUse> calls;
  for (const RawStatement& s : stmts) record_calls(s.body, calls);
  std::set<std::string> constants = declared;
  constants.insert(std::string(symbols::kUndefined));
  for (const auto& [name, use] : calls) {
    constants.insert(name);
    problem.style.paren_symbols.emplace(name, use.arity);
  }
  for (const RawStatement& s : stmts) {
    std::vector<std::string> bound;
    std::set<std::string> ids;
    free_identifiers(s.body, bound, ids);
    for (const std::string& id : ids) {
      if (s.kind == RawStatement::kGoal || implicit_constant(id)) constants.insert(id);
    }
  }
  for (const RawStatement& s : stmts) {
    Scope scope{constants, false, {}, {}};
    Formula f = to_formula(s.body, scope);
    if (s.kind == RawStatement::kGoal) {
      problem.goal = f;
    } else {
      problem.facts.push_back({s.name, f, scope.free, s.line});
    }
  }
  problem.constants = std::move(constants);
  return problem;
}

Problem parse_tptp(std::vector<Token> toks) {
  ExprParser p(std::move(toks));
  Problem problem;
  std::vector<Formula> negated;
  std::set<std::string> names;
  std::set<std::string> no_constants;
  std::map<std::string, CallUse> calls;
  while (!p.at(Tok::kEnd)) {
    Token kw = p.expect(Tok::kIdent, "'cnf'");
    if (kw.text != "cnf") {
      throw ParseError(kw.line, kw.column, "only cnf(...) statements are supported");
    }
    p.expect(Tok::kLParen, "'('");
    Token name = p.expect(Tok::kIdent, "clause name");
    p.expect(Tok::kComma, "','");
    Token role = p.expect(Tok::kIdent, "clause role");
    p.expect(Tok::kComma, "','");
    Expr body = p.expr();
    p.expect(Tok::kRParen, "')'");
    p.expect(Tok::kDot, "'.'");
    record_calls(body, calls);
    Scope scope{no_constants, true, {}, {}};
    Formula f = to_formula(body, scope);
    if (role.text == "negated_conjecture") {
      for (auto it = scope.free.rbegin(); it != scope.free.rend(); ++it) {
        f = Formula::quant(Formula::Kind::kForall, *it, f);
      }
      negated.push_back(f);
      continue;
    }
    if (!names.insert(name.text).second) {
      throw ParseError(name.line, name.column,
                       "duplicate clause name '" + name.text + "'");
    }
    problem.facts.push_back({name.text, f, scope.free, name.line});
  }
  for (const auto& [n, use] : calls) {
    problem.constants.insert(n);
    problem.style.paren_symbols.emplace(n, use.arity);
  }
  if (!negated.empty()) {
    problem.goal = Formula::negation(Formula::conj(std::move(negated)));
    problem.has_goal = true;
  }
  return problem;
}

}  // namespace

Problem parse_problem(std::string_view text) {
  std::vector<Token> toks = lex(text);
  if (toks.size() > 2 && toks[0].kind == Tok::kIdent && toks[0].text == "cnf" &&
      toks[1].kind == Tok::kLParen) {
    return parse_tptp(std::move(toks));
  }
  return parse_native(std::move(toks));
}

Problem parse_problem_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(0, 0, "cannot open " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_problem(buf.str());
}

namespace {

template <typename Result, typename Convert>
Result parse_single(std::string_view text, const std::set<std::string>& constants,
                    Convert convert) {
  ExprParser p(lex(text));
  Expr e = p.expr();
  if (!p.at(Tok::kEnd)) p.fail("trailing input");
  std::map<std::string, CallUse> calls;
  record_calls(e, calls);
  std::set<std::string> all = constants;
  for (const auto& [n, use] : calls) all.insert(n);
  std::vector<std::string> bound;
  std::set<std::string> ids;
  free_identifiers(e, bound, ids);
  for (const std::string& id : ids) {
    if (implicit_constant(id)) all.insert(id);
  }
  Scope scope{all, false, {}, {}};
  return convert(e, scope);
}

}  // namespace

SurfaceTerm parse_surface_term(std::string_view text,
                               const std::set<std::string>& constants) {
  return parse_single<SurfaceTerm>(text, constants, to_term);
}

Formula parse_formula(std::string_view text, const std::set<std::string>& constants) {
  return parse_single<Formula>(text, constants, to_formula);
}

}  // namespace parakeet
