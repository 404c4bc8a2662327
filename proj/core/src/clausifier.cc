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


#include "parakeet/clausifier.h"

#include <algorithm>
#include <limits>

#include "parakeet/term.h"

namespace parakeet {

namespace {

using Kind = Formula::Kind;

struct SurfaceLiteral {
  bool positive;
  Formula atom;  // kAtom or kEq
};
using SurfaceClause = std::vector<SurfaceLiteral>;

struct PendingFact {
  std::string name;
  SourceKind kind = SourceKind::kFact;
  std::set<std::string> free_vars;
  std::vector<SurfaceClause> clauses;
  std::vector<SkolemInfo> skolems;
  std::vector<std::string> definitional;
};

constexpr std::size_t kDistributionLimit = 64;

std::string numbered(std::string_view prefix, std::size_t n) {
  return std::string(prefix) + std::to_string(n);
}

SurfaceTerm comb(const char* name) {
  return SurfaceTerm::constant(std::string(symbols::kCombinatorPrefix) + name);
}

bool is_literal(const Formula& f) {
  Kind k = f.kind();
  if (k == Kind::kNot) k = f.body().kind();
  return k == Kind::kAtom || k == Kind::kEq;
}

// Removes True/False from an NNF matrix.
Formula simplify(const Formula& f) {
  if (f.kind() != Kind::kAnd && f.kind() != Kind::kOr) return f;
  bool is_and = f.kind() == Kind::kAnd;
  std::vector<Formula> kept;
  for (const Formula& c : f.children()) {
    Formula s = simplify(c);
    if (s.kind() == (is_and ? Kind::kFalse : Kind::kTrue)) return s;
    if (s.kind() == (is_and ? Kind::kTrue : Kind::kFalse)) continue;
    if (s.kind() == f.kind()) {
      kept.insert(kept.end(), s.children().begin(), s.children().end());
    } else {
      kept.push_back(s);
    }
  }
  return is_and ? Formula::conj(std::move(kept)) : Formula::disj(std::move(kept));
}

std::size_t clause_estimate(const Formula& f) {
  constexpr std::size_t kCap = 1 << 20;
  switch (f.kind()) {
    case Kind::kTrue:
      return 0;
    case Kind::kAnd: {
      std::size_t n = 0;
      for (const Formula& c : f.children()) n = std::min(kCap, n + clause_estimate(c));
      return n;
    }
    case Kind::kOr: {
      std::size_t n = 1;
      for (const Formula& c : f.children()) {
        n = std::min(kCap, n * std::max<std::size_t>(1, clause_estimate(c)));
      }
      return n;
    }
    default:
      return 1;
  }
}

SurfaceLiteral to_literal(const Formula& f) {
  if (f.kind() == Kind::kNot) return {false, f.body()};
  return {true, f};
}

std::vector<SurfaceClause> distribute(const Formula& f) {
  switch (f.kind()) {
    case Kind::kTrue:
      return {};
    case Kind::kFalse:
      return {SurfaceClause{}};
    case Kind::kAnd: {
      std::vector<SurfaceClause> out;
      for (const Formula& c : f.children()) {
        auto part = distribute(c);
        out.insert(out.end(), part.begin(), part.end());
      }
      return out;
    }
    case Kind::kOr: {
      std::vector<SurfaceClause> acc{SurfaceClause{}};
      for (const Formula& c : f.children()) {
        std::vector<SurfaceClause> part = distribute(c);
        std::vector<SurfaceClause> next;
        for (const SurfaceClause& a : acc) {
          for (const SurfaceClause& b : part) {
            SurfaceClause m = a;
            m.insert(m.end(), b.begin(), b.end());
            next.push_back(std::move(m));
          }
        }
        acc = std::move(next);
      }
      return acc;
    }
    default:
      return {SurfaceClause{to_literal(f)}};
  }
}

std::vector<std::string> formula_vars(const Formula& f) { return free_vars(f); }

class Encoder {
 public:
  explicit Encoder(LambdaMode mode) : mode_(mode) {}

  PendingFact clausify(const std::string& name, SourceKind kind,
                       const Formula& formula,
                       const std::vector<std::string>& free_vars);
  SurfaceTerm eliminate_lambdas(const SurfaceTerm& t);

  // Lambda definitions in creation order.
  const std::vector<std::pair<std::string, SurfaceTerm>>& lambda_defs() const {
    return lambda_defs_;
  }
  std::set<std::string> skolems() const { return skolems_; }

 private:
  Formula nnf(const Formula& f, bool positive);
  Formula rename_bound(const Formula& f, std::set<std::string>& used);
  Formula skolemize(const Formula& f, std::vector<std::string>& universals,
                    PendingFact& out);
  Formula map_matrix_terms(const Formula& f);
  std::vector<SurfaceClause> definitional(const Formula& f, PendingFact& out);

  SurfaceTerm lift(const SurfaceTerm& t);
  SurfaceTerm bracket(const SurfaceTerm& t);
  SurfaceTerm abstract(const std::string& x, const SurfaceTerm& t);
  void use_combinator(const char* name);

  LambdaMode mode_;
  std::size_t skolem_counter_ = 0;
  std::size_t def_counter_ = 0;
  std::map<std::string, std::string> lift_cache_;
  std::vector<std::pair<std::string, SurfaceTerm>> lambda_defs_;
  std::set<std::string> skolems_;
};

Formula Encoder::nnf(const Formula& f, bool positive) {
  switch (f.kind()) {
    case Kind::kTrue:
      return positive ? f : Formula::falsity();
    case Kind::kFalse:
      return positive ? f : Formula::truth();
    case Kind::kAtom:
    case Kind::kEq:
      return positive ? f : Formula::negation(f);
    case Kind::kNot:
      return nnf(f.body(), !positive);
    case Kind::kAnd:
    case Kind::kOr: {
      std::vector<Formula> cs;
      for (const Formula& c : f.children()) cs.push_back(nnf(c, positive));
      bool conj = (f.kind() == Kind::kAnd) == positive;
      return conj ? Formula::conj(std::move(cs)) : Formula::disj(std::move(cs));
    }
    case Kind::kImp: {
      if (positive) return Formula::disj({nnf(f.child(0), false), nnf(f.child(1), true)});
      return Formula::conj({nnf(f.child(0), true), nnf(f.child(1), false)});
    }
    case Kind::kIff: {
      const Formula& a = f.child(0);
      const Formula& b = f.child(1);
      if (positive) {
        return Formula::conj({Formula::disj({nnf(a, false), nnf(b, true)}),
                              Formula::disj({nnf(a, true), nnf(b, false)})});
      }
      return Formula::disj({Formula::conj({nnf(a, true), nnf(b, false)}),
                            Formula::conj({nnf(a, false), nnf(b, true)})});
    }
    case Kind::kForall:
    case Kind::kExists: {
      bool universal = (f.kind() == Kind::kForall) == positive;
      return Formula::quant(universal ? Kind::kForall : Kind::kExists, f.var(),
                            nnf(f.body(), positive));
    }
  }
  return f;
}

Formula Encoder::rename_bound(const Formula& f, std::set<std::string>& used) {
  switch (f.kind()) {
    case Kind::kForall:
    case Kind::kExists: {
      std::string name = f.var();
      for (std::size_t k = 1; used.contains(name); ++k) {
        name = f.var() + "%" + std::to_string(k);
      }
      used.insert(name);
      Formula body = f.body();
      if (name != f.var()) body = substitute(body, {{f.var(), SurfaceTerm::var(name)}});
      return Formula::quant(f.kind(), name, rename_bound(body, used));
    }
    case Kind::kNot:
      return Formula::negation(rename_bound(f.body(), used));
    case Kind::kAnd:
    case Kind::kOr: {
      std::vector<Formula> cs;
      for (const Formula& c : f.children()) cs.push_back(rename_bound(c, used));
      return f.kind() == Kind::kAnd ? Formula::conj(std::move(cs))
                                    : Formula::disj(std::move(cs));
    }
    default:
      return f;
  }
}

Formula Encoder::skolemize(const Formula& f, std::vector<std::string>& universals,
                           PendingFact& out) {
  switch (f.kind()) {
    case Kind::kForall: {
      universals.push_back(f.var());
      Formula r = skolemize(f.body(), universals, out);
      universals.pop_back();
      return r;
    }
    case Kind::kExists: {
      std::string symbol = numbered(symbols::kSkolemPrefix, ++skolem_counter_);
      std::vector<SurfaceTerm> args;
      for (const std::string& u : universals) args.push_back(SurfaceTerm::var(u));
      SurfaceTerm witness = SurfaceTerm::apply(SurfaceTerm::constant(symbol), args);
      out.skolems.push_back({symbol, universals});
      skolems_.insert(symbol);
      return skolemize(substitute(f.body(), {{f.var(), witness}}), universals, out);
    }
    case Kind::kAnd:
    case Kind::kOr: {
      std::vector<Formula> cs;
      for (const Formula& c : f.children()) cs.push_back(skolemize(c, universals, out));
      return f.kind() == Kind::kAnd ? Formula::conj(std::move(cs))
                                    : Formula::disj(std::move(cs));
    }
    default:
      return f;
  }
}

Formula Encoder::map_matrix_terms(const Formula& f) {
  switch (f.kind()) {
    case Kind::kAtom:
      return Formula::atom(eliminate_lambdas(f.term()));
    case Kind::kEq:
      return Formula::eq(eliminate_lambdas(f.lhs()), eliminate_lambdas(f.rhs()));
    case Kind::kNot:
      return Formula::negation(map_matrix_terms(f.body()));
    case Kind::kAnd:
    case Kind::kOr: {
      std::vector<Formula> cs;
      for (const Formula& c : f.children()) cs.push_back(map_matrix_terms(c));
      return f.kind() == Kind::kAnd ? Formula::conj(std::move(cs))
                                    : Formula::disj(std::move(cs));
    }
    default:
      return f;
  }
}

std::vector<SurfaceClause> Encoder::definitional(const Formula& f, PendingFact& out) {
  switch (f.kind()) {
    case Kind::kAnd: {
      std::vector<SurfaceClause> all;
      for (const Formula& c : f.children()) {
        auto part = definitional(c, out);
        all.insert(all.end(), part.begin(), part.end());
      }
      return all;
    }
    case Kind::kOr: {
      std::vector<SurfaceClause> all;
      SurfaceClause main;
      for (const Formula& c : f.children()) {
        if (is_literal(c)) {
          main.push_back(to_literal(c));
          continue;
        }
        std::string symbol = numbered(symbols::kDefinitionalPrefix, ++def_counter_);
        out.definitional.push_back(symbol);
        skolems_.insert(symbol);
        std::vector<SurfaceTerm> args;
        for (const std::string& v : formula_vars(c)) args.push_back(SurfaceTerm::var(v));
        Formula d = Formula::atom(SurfaceTerm::apply(SurfaceTerm::constant(symbol), args));
        main.push_back({true, d});
        for (SurfaceClause cl : definitional(c, out)) {
          cl.insert(cl.begin(), SurfaceLiteral{false, d});
          all.push_back(std::move(cl));
        }
      }
      all.insert(all.begin(), std::move(main));
      return all;
    }
    default:
      return distribute(f);
  }
}

PendingFact Encoder::clausify(const std::string& name, SourceKind kind,
                              const Formula& formula,
                              const std::vector<std::string>& free_vars) {
  PendingFact out;
  out.name = name;
  out.kind = kind;
  out.free_vars.insert(free_vars.begin(), free_vars.end());
  std::set<std::string> used(free_vars.begin(), free_vars.end());
  Formula f = rename_bound(nnf(formula, true), used);
  std::vector<std::string> universals = free_vars;
  f = skolemize(f, universals, out);
  f = simplify(map_matrix_terms(f));
  out.clauses = clause_estimate(f) <= kDistributionLimit ? distribute(f)
                                                         : definitional(f, out);
  return out;
}

SurfaceTerm Encoder::eliminate_lambdas(const SurfaceTerm& t) {
  return mode_ == LambdaMode::kLifting ? lift(t) : bracket(t);
}

SurfaceTerm Encoder::lift(const SurfaceTerm& t) {
  switch (t.kind()) {
    case SurfaceTerm::Kind::kVar:
    case SurfaceTerm::Kind::kConst:
      return t;
    case SurfaceTerm::Kind::kApp:
      return SurfaceTerm::app(lift(t.fun()), lift(t.arg()));
    case SurfaceTerm::Kind::kLam:
      break;
  }
  std::vector<std::string> params;
  SurfaceTerm body = t;
  while (body.is_lam()) {
    params.push_back(body.name());
    body = body.body();
  }
  SurfaceTerm lifted = lift(body);
  for (auto it = params.rbegin(); it != params.rend(); ++it) {
    lifted = SurfaceTerm::lam(*it, lifted);
  }
  std::vector<std::string> captured = free_vars(lifted);
  SurfaceTerm closed = lifted;
  for (auto it = captured.rbegin(); it != captured.rend(); ++it) {
    closed = SurfaceTerm::lam(*it, closed);
  }
  std::string key = alpha_key(closed);
  auto [it, fresh] = lift_cache_.emplace(key, "");
  if (fresh) {
    it->second = numbered(symbols::kLiftedPrefix, lift_cache_.size());
    lambda_defs_.emplace_back(it->second, canonical_binders(closed));
  }
  std::vector<SurfaceTerm> args;
  for (const std::string& v : captured) args.push_back(SurfaceTerm::var(v));
  return SurfaceTerm::apply(SurfaceTerm::constant(it->second), args);
}

void Encoder::use_combinator(const char* name) {
  std::string symbol = std::string(symbols::kCombinatorPrefix) + name;
  for (const auto& [s, def] : lambda_defs_) {
    if (s == symbol) return;
  }
  lambda_defs_.emplace_back(symbol, combinator_definitions().at(symbol));
}

SurfaceTerm Encoder::bracket(const SurfaceTerm& t) {
  switch (t.kind()) {
    case SurfaceTerm::Kind::kVar:
    case SurfaceTerm::Kind::kConst:
      return t;
    case SurfaceTerm::Kind::kApp:
      return SurfaceTerm::app(bracket(t.fun()), bracket(t.arg()));
    case SurfaceTerm::Kind::kLam:
      return abstract(t.name(), bracket(t.body()));
  }
  return t;
}

SurfaceTerm Encoder::abstract(const std::string& x, const SurfaceTerm& t) {
  if (!occurs_free(x, t)) {
    use_combinator("K");
    return SurfaceTerm::app(comb("K"), t);
  }
  if (t.is_var()) {
    use_combinator("I");
    return comb("I");
  }
  const SurfaceTerm& f = t.fun();
  const SurfaceTerm& a = t.arg();
  bool in_f = occurs_free(x, f);
  if (!in_f && a.is_var() && a.name() == x) return f;
  if (!in_f) {
    use_combinator("B");
    return SurfaceTerm::apply(comb("B"), {f, abstract(x, a)});
  }
  if (!occurs_free(x, a)) {
    use_combinator("C");
    return SurfaceTerm::apply(comb("C"), {abstract(x, f), a});
  }
  use_combinator("S");
  return SurfaceTerm::apply(comb("S"), {abstract(x, f), abstract(x, a)});
}

// ---------------------------------------------------------------------------
// First-order encoding

class FirstOrder {
 public:
  void scan_atom(const Formula& atom) {
    if (atom.kind() == Kind::kEq) {
      scan_term(atom.lhs());
      scan_term(atom.rhs());
      return;
    }
    Spine s = spine(atom.term());
    if (s.head.is_const()) {
      predicate_uses_[s.head.name()].insert(s.args.size());
    } else {
      scan_term(atom.term());
    }
    for (const SurfaceTerm& a : s.args) scan_term(a);
  }

  void finish() {
    for (const auto& [name, counts] : predicate_uses_) {
      bool direct = counts.size() == 1 && !term_arity_.contains(name) &&
                    !symbols::is_lifted(name) && !symbols::is_combinator(name);
      if (direct) {
        predicates_.insert(name);
        continue;
      }
      for (std::size_t n : counts) note_term_use(name, n);
    }
    for (auto& [name, arity] : term_arity_) {
      if (symbols::is_lifted(name) || symbols::is_combinator(name)) arity = 0;
    }
  }

  Term term(const SurfaceTerm& t) const {
    Spine s = spine(t);
    Term out;
    std::size_t used = 0;
    if (s.head.is_var()) {
      out = Term::var(s.head.name());
    } else {
      std::size_t m = term_arity_.at(s.head.name());
      std::vector<Term> args;
      for (; used < m; ++used) args.push_back(term(s.args[used]));
      out = Term::app(s.head.name(), std::move(args));
    }
    for (; used < s.args.size(); ++used) {
      out = Term::app(std::string(symbols::kApp), {out, term(s.args[used])});
    }
    return out;
  }

  Literal literal(const SurfaceLiteral& l) const {
    if (l.atom.kind() == Kind::kEq) {
      return Literal::eq(term(l.atom.lhs()), term(l.atom.rhs()), l.positive);
    }
    Spine s = spine(l.atom.term());
    if (s.head.is_const() && predicates_.contains(s.head.name())) {
      std::vector<Term> args;
      for (const SurfaceTerm& a : s.args) args.push_back(term(a));
      return {l.positive, Term::app(s.head.name(), std::move(args))};
    }
    return {l.positive, Term::app(std::string(symbols::kBool), {term(l.atom.term())})};
  }

  Clause clause(const SurfaceClause& c) const {
    std::vector<Literal> lits;
    for (const SurfaceLiteral& l : c) lits.push_back(literal(l));
    return Clause(std::move(lits));
  }

  void scan_term(const SurfaceTerm& t) {
    Spine s = spine(t);
    if (s.head.is_const()) note_term_use(s.head.name(), s.args.size());
    for (const SurfaceTerm& a : s.args) scan_term(a);
  }

 private:
  void note_term_use(const std::string& name, std::size_t n) {
    auto [it, fresh] = term_arity_.emplace(name, n);
    if (!fresh) it->second = std::min(it->second, n);
  }

  std::map<std::string, std::set<std::size_t>> predicate_uses_;
  std::map<std::string, std::size_t> term_arity_;
  std::set<std::string> predicates_;
};

SurfaceClause definition_clause(const std::string& symbol, const SurfaceTerm& def) {
  std::vector<SurfaceTerm> params;
  SurfaceTerm body = def;
  while (body.is_lam()) {
    params.push_back(SurfaceTerm::var(body.name()));
    body = body.body();
  }
  SurfaceTerm lhs = SurfaceTerm::apply(SurfaceTerm::constant(symbol), params);
  return {SurfaceLiteral{true, Formula::eq(lhs, body)}};
}

void collect_constants(const SurfaceTerm& t, std::set<std::string>& out) {
  if (t.is_const()) out.insert(t.name());
  if (t.is_app()) {
    collect_constants(t.fun(), out);
    collect_constants(t.arg(), out);
  } else if (t.is_lam()) {
    collect_constants(t.body(), out);
  }
}

ClausifiedFact finish_fact(const PendingFact& p, const FirstOrder& fo) {
  ClausifiedFact out;
  out.name = p.name;
  out.kind = p.kind;
  out.skolems = p.skolems;
  out.definitional = p.definitional;
  for (const SurfaceClause& sc : p.clauses) {
    Clause c = fo.clause(sc);
    if (c.is_tautology()) continue;
    std::map<std::string, std::string> var_map;
    for (const std::string& v : c.variables()) {
      if (p.free_vars.contains(v)) var_map.emplace(v, v);
    }
    out.clauses.push_back(std::move(c));
    out.var_maps.push_back(std::move(var_map));
  }
  return out;
}

void scan_clauses(const std::vector<SurfaceClause>& clauses, FirstOrder& fo) {
  for (const SurfaceClause& c : clauses) {
    for (const SurfaceLiteral& l : c) fo.scan_atom(l.atom);
  }
}

}  // namespace

const std::map<std::string, SurfaceTerm>& combinator_definitions() {
  static const std::map<std::string, SurfaceTerm> defs = [] {
    using S = SurfaceTerm;
    S a = S::var("a"), b = S::var("b"), c = S::var("c");
    auto lam = [](std::initializer_list<const char*> xs, S body) {
      std::vector<const char*> v(xs);
      for (auto it = v.rbegin(); it != v.rend(); ++it) body = S::lam(*it, body);
      return body;
    };
    std::string p(symbols::kCombinatorPrefix);
    return std::map<std::string, SurfaceTerm>{
        {p + "I", lam({"a"}, a)},
        {p + "K", lam({"a", "b"}, a)},
        {p + "S", lam({"a", "b", "c"}, S::apply(a, {c, S::app(b, c)}))},
        {p + "B", lam({"a", "b", "c"}, S::app(a, S::app(b, c)))},
        {p + "C", lam({"a", "b", "c"}, S::apply(a, {c, b}))},
    };
  }();
  return defs;
}

std::vector<InputClause> EncodedProblem::inputs() const {
  std::vector<InputClause> out;
  for (const ClausifiedFact& f : facts) {
    for (const Clause& c : f.clauses) out.push_back({c, SourceKind::kFact, f.name});
  }
  out.insert(out.end(), definitions.begin(), definitions.end());
  for (const Clause& c : goal.clauses) out.push_back({c, SourceKind::kGoal, "goal"});
  return out;
}

EncodedProblem encode_problem(const Problem& problem, LambdaMode mode) {
  Encoder enc(mode);
  std::vector<PendingFact> pending;
  for (const FactDecl& f : problem.facts) {
    pending.push_back(enc.clausify(f.name, SourceKind::kFact, f.formula, f.free_vars));
  }
  PendingFact goal = enc.clausify("goal", SourceKind::kGoal,
                                  Formula::negation(problem.goal), {});

  std::vector<std::pair<std::string, SurfaceClause>> defs;
  for (const auto& [symbol, def] : enc.lambda_defs()) {
    defs.emplace_back(symbol, definition_clause(symbol, def));
  }

  FirstOrder fo;
  for (const PendingFact& p : pending) scan_clauses(p.clauses, fo);
  scan_clauses(goal.clauses, fo);
  for (const auto& [symbol, c] : defs) scan_clauses({c}, fo);
  fo.finish();

  EncodedProblem out;
  for (const PendingFact& p : pending) out.facts.push_back(finish_fact(p, fo));
  out.goal = finish_fact(goal, fo);
  for (const auto& [symbol, c] : defs) {
    out.definitions.push_back({fo.clause(c), SourceKind::kDefinition, symbol});
  }

  for (const ClausifiedFact& f : out.facts) {
    for (std::size_t i = 0; i < f.clauses.size(); ++i) {
      out.table.emplace(f.clauses[i], ClauseOrigin{SourceKind::kFact, f.name, f.var_maps[i]});
    }
  }
  for (const InputClause& d : out.definitions) {
    out.table.emplace(d.clause, ClauseOrigin{SourceKind::kDefinition, d.name, {}});
  }
  for (const Clause& c : out.goal.clauses) {
    out.table.emplace(c, ClauseOrigin{SourceKind::kGoal, "goal", {}});
  }
  out.table.emplace(ext_clause(), ClauseOrigin{SourceKind::kExt, "ext", {}});

  for (const auto& [symbol, def] : enc.lambda_defs()) out.info.lambda_defs.emplace(symbol, def);
  out.info.skolems = enc.skolems();
  std::set<std::string> constants = problem.constants;
  for (const FactDecl& f : problem.facts) {
    std::set<std::string> names;
    collect_names(f.formula, names);
  }
  auto add_formula_constants = [&](const Formula& f) {
    std::vector<const Formula*> stack{&f};
    while (!stack.empty()) {
      const Formula* g = stack.back();
      stack.pop_back();
      if (g->kind() == Kind::kAtom) collect_constants(g->term(), constants);
      if (g->kind() == Kind::kEq) {
        collect_constants(g->lhs(), constants);
        collect_constants(g->rhs(), constants);
      }
      for (const Formula& c : g->children()) stack.push_back(&c);
    }
  };
  for (const FactDecl& f : problem.facts) add_formula_constants(f.formula);
  add_formula_constants(problem.goal);
  out.info.constants = std::move(constants);
  return out;
}

ClausifiedFact clausify(const FactDecl& fact, LambdaMode mode) {
  Encoder enc(mode);
  PendingFact p = enc.clausify(fact.name, SourceKind::kFact, fact.formula, fact.free_vars);
  FirstOrder fo;
  scan_clauses(p.clauses, fo);
  for (const auto& [symbol, def] : enc.lambda_defs()) {
    scan_clauses({definition_clause(symbol, def)}, fo);
  }
  fo.finish();
  return finish_fact(p, fo);
}

namespace {

LambdaEncoding encode_lambda(const SurfaceTerm& t, LambdaMode mode) {
  Encoder enc(mode);
  SurfaceTerm eliminated = enc.eliminate_lambdas(t);
  std::vector<SurfaceClause> defs;
  for (const auto& [symbol, def] : enc.lambda_defs()) {
    defs.push_back(definition_clause(symbol, def));
  }
  FirstOrder fo;
  fo.scan_term(eliminated);
  scan_clauses(defs, fo);
  fo.finish();
  LambdaEncoding out{fo.term(eliminated), {}};
  for (const SurfaceClause& c : defs) out.definitions.push_back(fo.clause(c));
  return out;
}

}  // namespace

LambdaEncoding lambda_lift(const SurfaceTerm& t) {
  return encode_lambda(t, LambdaMode::kLifting);
}

LambdaEncoding combinator_encode(const SurfaceTerm& t) {
  return encode_lambda(t, LambdaMode::kCombinators);
}

}  // namespace parakeet
