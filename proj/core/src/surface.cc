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


#include "parakeet/surface.h"

#include <algorithm>
#include <functional>

#include "parakeet/term.h"

namespace parakeet {

// ---------------------------------------------------------------------------
// Terms

SurfaceTerm::SurfaceTerm() : SurfaceTerm(constant("?")) {}

SurfaceTerm SurfaceTerm::var(std::string name) {
  return SurfaceTerm(std::make_shared<const Node>(
      Node{Kind::kVar, std::move(name), {}, 1}));
}

SurfaceTerm SurfaceTerm::constant(std::string name) {
  return SurfaceTerm(std::make_shared<const Node>(
      Node{Kind::kConst, std::move(name), {}, 1}));
}

SurfaceTerm SurfaceTerm::app(SurfaceTerm fun, SurfaceTerm arg) {
  std::size_t size = 1 + fun.size() + arg.size();
  return SurfaceTerm(std::make_shared<const Node>(
      Node{Kind::kApp, "", {std::move(fun), std::move(arg)}, size}));
}

SurfaceTerm SurfaceTerm::lam(std::string bound, SurfaceTerm body) {
  std::size_t size = 1 + body.size();
  return SurfaceTerm(std::make_shared<const Node>(
      Node{Kind::kLam, std::move(bound), {std::move(body)}, size}));
}

SurfaceTerm SurfaceTerm::apply(SurfaceTerm head,
                               const std::vector<SurfaceTerm>& args) {
  for (const SurfaceTerm& a : args) head = app(std::move(head), a);
  return head;
}

bool operator==(const SurfaceTerm& a, const SurfaceTerm& b) {
  if (a.node_ == b.node_) return true;
  if (a.kind() != b.kind() || a.size() != b.size() || a.name() != b.name()) {
    return false;
  }
  return a.node_->children == b.node_->children;
}

Spine spine(const SurfaceTerm& t) {
  Spine s{t, {}};
  while (s.head.is_app()) {
    s.args.push_back(s.head.arg());
    s.head = s.head.fun();
  }
  std::reverse(s.args.begin(), s.args.end());
  return s;
}

namespace {

void free_vars_rec(const SurfaceTerm& t, std::vector<std::string>& bound,
                   std::vector<std::string>& out) {
  switch (t.kind()) {
    case SurfaceTerm::Kind::kVar:
      if (std::find(bound.begin(), bound.end(), t.name()) == bound.end() &&
          std::find(out.begin(), out.end(), t.name()) == out.end()) {
        out.push_back(t.name());
      }
      return;
    case SurfaceTerm::Kind::kConst:
      return;
    case SurfaceTerm::Kind::kApp:
      free_vars_rec(t.fun(), bound, out);
      free_vars_rec(t.arg(), bound, out);
      return;
    case SurfaceTerm::Kind::kLam:
      bound.push_back(t.name());
      free_vars_rec(t.body(), bound, out);
      bound.pop_back();
      return;
  }
}

std::string fresh_name(const std::string& base, const std::set<std::string>& avoid) {
  std::string name = base + "'";
  while (avoid.contains(name)) name += "'";
  return name;
}

}  // namespace

void collect_free_vars(const SurfaceTerm& t, std::vector<std::string>& out) {
  std::vector<std::string> bound;
  free_vars_rec(t, bound, out);
}

std::vector<std::string> free_vars(const SurfaceTerm& t) {
  std::vector<std::string> out;
  collect_free_vars(t, out);
  return out;
}

bool occurs_free(const std::string& name, const SurfaceTerm& t) {
  switch (t.kind()) {
    case SurfaceTerm::Kind::kVar:
      return t.name() == name;
    case SurfaceTerm::Kind::kConst:
      return false;
    case SurfaceTerm::Kind::kApp:
      return occurs_free(name, t.fun()) || occurs_free(name, t.arg());
    case SurfaceTerm::Kind::kLam:
      return t.name() != name && occurs_free(name, t.body());
  }
  return false;
}

void collect_names(const SurfaceTerm& t, std::set<std::string>& out) {
  if (!t.is_app()) out.insert(t.name());
  if (t.is_app()) {
    collect_names(t.fun(), out);
    collect_names(t.arg(), out);
  } else if (t.is_lam()) {
    collect_names(t.body(), out);
  }
}

SurfaceTerm substitute(const SurfaceTerm& t, const SurfaceSubst& s) {
  if (s.empty()) return t;
  switch (t.kind()) {
    case SurfaceTerm::Kind::kVar: {
      auto it = s.find(t.name());
      return it == s.end() ? t : it->second;
    }
    case SurfaceTerm::Kind::kConst:
      return t;
    case SurfaceTerm::Kind::kApp:
      return SurfaceTerm::app(substitute(t.fun(), s), substitute(t.arg(), s));
    case SurfaceTerm::Kind::kLam: {
      SurfaceSubst inner;
      std::vector<std::string> body_free = free_vars(t.body());
      bool capture = false;
      for (const auto& [v, image] : s) {
        if (v == t.name()) continue;
        if (std::find(body_free.begin(), body_free.end(), v) == body_free.end()) {
          continue;
        }
        inner.emplace(v, image);
        if (occurs_free(t.name(), image)) capture = true;
      }
      if (inner.empty()) return t;
      std::string bound = t.name();
      if (capture) {
        std::set<std::string> avoid(body_free.begin(), body_free.end());
        for (const auto& [v, image] : inner) {
          for (const std::string& n : free_vars(image)) avoid.insert(n);
        }
        bound = fresh_name(t.name(), avoid);
        inner.emplace(t.name(), SurfaceTerm::var(bound));
      }
      return SurfaceTerm::lam(bound, substitute(t.body(), inner));
    }
  }
  return t;
}

namespace {

void alpha_key_rec(const SurfaceTerm& t, std::vector<std::string>& bound,
                   std::string& out) {
  switch (t.kind()) {
    case SurfaceTerm::Kind::kVar: {
      auto it = std::find(bound.rbegin(), bound.rend(), t.name());
      if (it != bound.rend()) {
        out += '#';
        out += std::to_string(it - bound.rbegin());
      } else {
        out += "v:";
        out += t.name();
      }
      out += ' ';
      return;
    }
    case SurfaceTerm::Kind::kConst:
      out += "c:";
      out += t.name();
      out += ' ';
      return;
    case SurfaceTerm::Kind::kApp:
      out += '(';
      alpha_key_rec(t.fun(), bound, out);
      alpha_key_rec(t.arg(), bound, out);
      out += ')';
      return;
    case SurfaceTerm::Kind::kLam:
      out += "\\";
      bound.push_back(t.name());
      alpha_key_rec(t.body(), bound, out);
      bound.pop_back();
      return;
  }
}

}  // namespace

std::string alpha_key(const SurfaceTerm& t) {
  std::string out;
  std::vector<std::string> bound;
  alpha_key_rec(t, bound, out);
  return out;
}

bool alpha_equal(const SurfaceTerm& a, const SurfaceTerm& b) {
  return alpha_key(a) == alpha_key(b);
}

bool has_redex(const SurfaceTerm& t) {
  switch (t.kind()) {
    case SurfaceTerm::Kind::kVar:
    case SurfaceTerm::Kind::kConst:
      return false;
    case SurfaceTerm::Kind::kApp:
      return t.fun().is_lam() || has_redex(t.fun()) || has_redex(t.arg());
    case SurfaceTerm::Kind::kLam: {
      const SurfaceTerm& b = t.body();
      if (b.is_app() && b.arg().is_var() && b.arg().name() == t.name() &&
          !occurs_free(t.name(), b.fun())) {
        return true;
      }
      return has_redex(b);
    }
  }
  return false;
}

namespace {

class Normalizer {
 public:
  explicit Normalizer(std::size_t budget) : budget_(budget) {}

  SurfaceTerm run(const SurfaceTerm& t) {
    switch (t.kind()) {
      case SurfaceTerm::Kind::kVar:
      case SurfaceTerm::Kind::kConst:
        return t;
      case SurfaceTerm::Kind::kLam: {
        SurfaceTerm body = run(t.body());
        if (body.is_app() && body.arg().is_var() && body.arg().name() == t.name() &&
            !occurs_free(t.name(), body.fun())) {
          spend();
          return body.fun();
        }
        return SurfaceTerm::lam(t.name(), std::move(body));
      }
      case SurfaceTerm::Kind::kApp: {
        SurfaceTerm fun = run(t.fun());
        if (fun.is_lam()) {
          spend();
          return run(substitute(fun.body(), {{fun.name(), t.arg()}}));
        }
        return SurfaceTerm::app(std::move(fun), run(t.arg()));
      }
    }
    return t;
  }

 private:
  void spend() {
    if (used_++ >= budget_) {
      throw NormalizationError("beta-eta normalization exceeded " +
                               std::to_string(budget_) + " steps");
    }
  }

  std::size_t budget_;
  std::size_t used_ = 0;
};

std::string binder_name(std::size_t i) {
  std::string s(1, static_cast<char>('a' + i % 26));
  if (i >= 26) s += std::to_string(i / 26);
  return s;
}

SurfaceTerm canonical_rec(const SurfaceTerm& t,
                          std::vector<std::pair<std::string, std::string>>& env) {
  switch (t.kind()) {
    case SurfaceTerm::Kind::kVar:
      for (auto it = env.rbegin(); it != env.rend(); ++it) {
        if (it->first == t.name()) return SurfaceTerm::var(it->second);
      }
      return t;
    case SurfaceTerm::Kind::kConst:
      return t;
    case SurfaceTerm::Kind::kApp:
      return SurfaceTerm::app(canonical_rec(t.fun(), env),
                              canonical_rec(t.arg(), env));
    case SurfaceTerm::Kind::kLam: {
      std::set<std::string> avoid;
      for (const auto& [from, to] : env) avoid.insert(to);
      for (const std::string& v : free_vars(t)) {
        bool rebound = std::any_of(env.begin(), env.end(),
                                   [&](const auto& p) { return p.first == v; });
        if (!rebound) avoid.insert(v);
      }
      std::set<std::string> names;
      collect_names(t.body(), names);
      for (const std::string& n : names) {
        if (n != t.name()) avoid.insert(n);
      }
      std::size_t i = 0;
      while (avoid.contains(binder_name(i))) ++i;
      std::string name = binder_name(i);
      env.emplace_back(t.name(), name);
      SurfaceTerm body = canonical_rec(t.body(), env);
      env.pop_back();
      return SurfaceTerm::lam(name, std::move(body));
    }
  }
  return t;
}

}  // namespace

SurfaceTerm beta_eta_normalize(const SurfaceTerm& t, std::size_t budget) {
  Normalizer n(budget);
  return n.run(t);
}

SurfaceTerm canonical_binders(const SurfaceTerm& t) {
  std::vector<std::pair<std::string, std::string>> env;
  return canonical_rec(t, env);
}

namespace {

std::string render(const SurfaceTerm& t, const PrintStyle& style, int context);

// context: 0 = top level, 1 = function position, 2 = argument position.
std::string render_app(const SurfaceTerm& t, const PrintStyle& style, int context) {
  Spine s = spine(t);
  if (s.head.is_const()) {
    auto it = style.paren_symbols.find(s.head.name());
    if (it != style.paren_symbols.end() && it->second == s.args.size()) {
      std::string out = s.head.name() + "(";
      for (std::size_t i = 0; i < s.args.size(); ++i) {
        if (i) out += ", ";
        out += render(s.args[i], style, 0);
      }
      return out + ")";
    }
  }
  std::string out = render(s.head, style, 1);
  for (const SurfaceTerm& a : s.args) out += " " + render(a, style, 2);
  return context == 2 ? "(" + out + ")" : out;
}

std::string render(const SurfaceTerm& t, const PrintStyle& style, int context) {
  switch (t.kind()) {
    case SurfaceTerm::Kind::kVar:
      return symbols::is_wildcard(t.name()) ? "_" : t.name();
    case SurfaceTerm::Kind::kConst:
      return t.name();
    case SurfaceTerm::Kind::kApp:
      return render_app(t, style, context);
    case SurfaceTerm::Kind::kLam: {
      std::string out = "\\" + t.name();
      SurfaceTerm body = t.body();
      while (body.is_lam()) {
        out += " " + body.name();
        body = body.body();
      }
      out += ". " + render(body, style, 0);
      return context == 0 ? out : "(" + out + ")";
    }
  }
  return "";
}

}  // namespace

std::string to_string(const SurfaceTerm& t, const PrintStyle& style) {
  return render(t, style, 0);
}

// ---------------------------------------------------------------------------
// Formulas

Formula::Formula() : Formula(truth()) {}

Formula Formula::truth() {
  return Formula(std::make_shared<const Node>(Node{Kind::kTrue, {}, {}, ""}));
}

Formula Formula::falsity() {
  return Formula(std::make_shared<const Node>(Node{Kind::kFalse, {}, {}, ""}));
}

Formula Formula::atom(SurfaceTerm t) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::kAtom, {std::move(t)}, {}, ""}));
}

Formula Formula::eq(SurfaceTerm lhs, SurfaceTerm rhs) {
  return Formula(std::make_shared<const Node>(
      Node{Kind::kEq, {std::move(lhs), std::move(rhs)}, {}, ""}));
}

Formula Formula::negation(Formula f) {
  return Formula(
      std::make_shared<const Node>(Node{Kind::kNot, {}, {std::move(f)}, ""}));
}

Formula Formula::binary(Kind kind, Formula a, Formula b) {
  return Formula(std::make_shared<const Node>(
      Node{kind, {}, {std::move(a), std::move(b)}, ""}));
}

Formula Formula::conj(std::vector<Formula> fs) {
  if (fs.empty()) return truth();
  if (fs.size() == 1) return fs[0];
  return Formula(
      std::make_shared<const Node>(Node{Kind::kAnd, {}, std::move(fs), ""}));
}

Formula Formula::disj(std::vector<Formula> fs) {
  if (fs.empty()) return falsity();
  if (fs.size() == 1) return fs[0];
  return Formula(
      std::make_shared<const Node>(Node{Kind::kOr, {}, std::move(fs), ""}));
}

Formula Formula::quant(Kind kind, std::string var, Formula body) {
  return Formula(std::make_shared<const Node>(
      Node{kind, {}, {std::move(body)}, std::move(var)}));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  return a.kind() == b.kind() && a.var() == b.var() &&
         a.node_->terms == b.node_->terms && a.children() == b.children();
}

namespace {

void formula_free_vars(const Formula& f, std::vector<std::string>& bound,
                       std::vector<std::string>& out) {
  auto add_term = [&](const SurfaceTerm& t) {
    for (const std::string& v : free_vars(t)) {
      if (std::find(bound.begin(), bound.end(), v) == bound.end() &&
          std::find(out.begin(), out.end(), v) == out.end()) {
        out.push_back(v);
      }
    }
  };
  switch (f.kind()) {
    case Formula::Kind::kTrue:
    case Formula::Kind::kFalse:
      return;
    case Formula::Kind::kAtom:
      add_term(f.term());
      return;
    case Formula::Kind::kEq:
      add_term(f.lhs());
      add_term(f.rhs());
      return;
    case Formula::Kind::kForall:
    case Formula::Kind::kExists:
      bound.push_back(f.var());
      formula_free_vars(f.body(), bound, out);
      bound.pop_back();
      return;
    default:
      for (const Formula& c : f.children()) formula_free_vars(c, bound, out);
  }
}

template <typename Fn>
Formula map_terms(const Formula& f, const Fn& fn) {
  switch (f.kind()) {
    case Formula::Kind::kTrue:
    case Formula::Kind::kFalse:
      return f;
    case Formula::Kind::kAtom:
      return Formula::atom(fn(f.term()));
    case Formula::Kind::kEq:
      return Formula::eq(fn(f.lhs()), fn(f.rhs()));
    case Formula::Kind::kNot:
      return Formula::negation(map_terms(f.body(), fn));
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr: {
      std::vector<Formula> cs;
      for (const Formula& c : f.children()) cs.push_back(map_terms(c, fn));
      return f.kind() == Formula::Kind::kAnd ? Formula::conj(std::move(cs))
                                             : Formula::disj(std::move(cs));
    }
    case Formula::Kind::kImp:
    case Formula::Kind::kIff:
      return Formula::binary(f.kind(), map_terms(f.child(0), fn),
                             map_terms(f.child(1), fn));
    case Formula::Kind::kForall:
    case Formula::Kind::kExists:
      return Formula::quant(f.kind(), f.var(), map_terms(f.body(), fn));
  }
  return f;
}

}  // namespace

std::vector<std::string> free_vars(const Formula& f) {
  std::vector<std::string> bound;
  std::vector<std::string> out;
  formula_free_vars(f, bound, out);
  return out;
}

void collect_names(const Formula& f, std::set<std::string>& out) {
  map_terms(f, [&](const SurfaceTerm& t) {
    collect_names(t, out);
    return t;
  });
  std::function<void(const Formula&)> binders = [&](const Formula& g) {
    if (g.kind() == Formula::Kind::kForall || g.kind() == Formula::Kind::kExists) {
      out.insert(g.var());
    }
    for (const Formula& c : g.children()) binders(c);
  };
  binders(f);
}

Formula substitute(const Formula& f, const SurfaceSubst& s) {
  if (s.empty()) return f;
  switch (f.kind()) {
    case Formula::Kind::kForall:
    case Formula::Kind::kExists: {
      SurfaceSubst inner;
      std::vector<std::string> body_free = free_vars(f.body());
      bool capture = false;
      for (const auto& [v, image] : s) {
        if (v == f.var()) continue;
        if (std::find(body_free.begin(), body_free.end(), v) == body_free.end()) {
          continue;
        }
        inner.emplace(v, image);
        if (occurs_free(f.var(), image)) capture = true;
      }
      std::string bound = f.var();
      if (capture) {
        std::set<std::string> avoid(body_free.begin(), body_free.end());
        for (const auto& [v, image] : inner) {
          for (const std::string& n : free_vars(image)) avoid.insert(n);
        }
        bound = fresh_name(f.var(), avoid);
        inner.emplace(f.var(), SurfaceTerm::var(bound));
      }
      return Formula::quant(f.kind(), bound, substitute(f.body(), inner));
    }
    case Formula::Kind::kAtom:
    case Formula::Kind::kEq:
    case Formula::Kind::kTrue:
    case Formula::Kind::kFalse:
      return map_terms(f, [&](const SurfaceTerm& t) { return substitute(t, s); });
    case Formula::Kind::kNot:
      return Formula::negation(substitute(f.body(), s));
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr: {
      std::vector<Formula> cs;
      for (const Formula& c : f.children()) cs.push_back(substitute(c, s));
      return f.kind() == Formula::Kind::kAnd ? Formula::conj(std::move(cs))
                                             : Formula::disj(std::move(cs));
    }
    case Formula::Kind::kImp:
    case Formula::Kind::kIff:
      return Formula::binary(f.kind(), substitute(f.child(0), s),
                             substitute(f.child(1), s));
  }
  return f;
}

Formula normalize_terms(const Formula& f, std::size_t budget) {
  return map_terms(f, [&](const SurfaceTerm& t) {
    return beta_eta_normalize(t, budget);
  });
}

namespace {

int precedence(Formula::Kind k) {
  switch (k) {
    case Formula::Kind::kIff:
      return 1;
    case Formula::Kind::kImp:
      return 2;
    case Formula::Kind::kOr:
      return 3;
    case Formula::Kind::kAnd:
      return 4;
    case Formula::Kind::kNot:
      return 5;
    case Formula::Kind::kForall:
    case Formula::Kind::kExists:
      return 0;
    default:
      return 6;
  }
}

std::string render_formula(const Formula& f, const PrintStyle& style, int outer) {
  std::string out;
  int prec = precedence(f.kind());
  switch (f.kind()) {
    case Formula::Kind::kTrue:
      return "True";
    case Formula::Kind::kFalse:
      return "False";
    case Formula::Kind::kAtom:
      return to_string(f.term(), style);
    case Formula::Kind::kEq:
      return to_string(f.lhs(), style) + " = " + to_string(f.rhs(), style);
    case Formula::Kind::kNot:
      out = "~" + render_formula(f.body(), style, prec);
      break;
    case Formula::Kind::kAnd:
    case Formula::Kind::kOr: {
      const char* op = f.kind() == Formula::Kind::kAnd ? " & " : " | ";
      for (std::size_t i = 0; i < f.children().size(); ++i) {
        if (i) out += op;
        out += render_formula(f.child(i), style, prec + 1);
      }
      break;
    }
    case Formula::Kind::kImp:
      out = render_formula(f.child(0), style, prec + 1) + " -> " +
            render_formula(f.child(1), style, prec);
      break;
    case Formula::Kind::kIff:
      out = render_formula(f.child(0), style, prec + 1) + " <-> " +
            render_formula(f.child(1), style, prec + 1);
      break;
    case Formula::Kind::kForall:
    case Formula::Kind::kExists:
      out = std::string(f.kind() == Formula::Kind::kForall ? "!" : "?") + f.var() +
            ". " + render_formula(f.body(), style, 0);
      return outer > 0 ? "(" + out + ")" : out;
  }
  return prec < outer ? "(" + out + ")" : out;
}

}  // namespace

std::string to_string(const Formula& f, const PrintStyle& style) {
  return render_formula(f, style, 0);
}

}  // namespace parakeet
