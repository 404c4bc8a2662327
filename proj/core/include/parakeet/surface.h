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


// The surface language: untyped lambda terms and first-order formulas over
// them. Terms are immutable and cheap to copy. Operator== is structural
// (bound names matter); use alpha_equal to compare up to renaming.

#ifndef PARAKEET_SURFACE_H_
#define PARAKEET_SURFACE_H_

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace parakeet {

class SurfaceTerm {
 public:
  enum class Kind : std::uint8_t { kVar, kConst, kApp, kLam };

  SurfaceTerm();
  static SurfaceTerm var(std::string name);
  static SurfaceTerm constant(std::string name);
  static SurfaceTerm app(SurfaceTerm fun, SurfaceTerm arg);
  static SurfaceTerm lam(std::string bound, SurfaceTerm body);
  // head a1 ... an
  static SurfaceTerm apply(SurfaceTerm head, const std::vector<SurfaceTerm>& args);

  Kind kind() const { return node_->kind; }
  bool is_var() const { return kind() == Kind::kVar; }
  bool is_const() const { return kind() == Kind::kConst; }
  bool is_app() const { return kind() == Kind::kApp; }
  bool is_lam() const { return kind() == Kind::kLam; }
  // Variable, constant or bound-variable name.
  const std::string& name() const { return node_->name; }
  const SurfaceTerm& fun() const { return node_->children[0]; }
  const SurfaceTerm& arg() const { return node_->children[1]; }
  const SurfaceTerm& body() const { return node_->children[0]; }
  std::size_t size() const { return node_->size; }

  friend bool operator==(const SurfaceTerm& a, const SurfaceTerm& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<SurfaceTerm> children;
    std::size_t size;
  };
  explicit SurfaceTerm(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

// Head and arguments of an application spine; a non-application is its own
// head with no arguments.
struct Spine {
  SurfaceTerm head;
  std::vector<SurfaceTerm> args;
};
Spine spine(const SurfaceTerm& t);

std::vector<std::string> free_vars(const SurfaceTerm& t);
void collect_free_vars(const SurfaceTerm& t, std::vector<std::string>& out);
bool occurs_free(const std::string& name, const SurfaceTerm& t);
// Every variable name, free or bound, and every constant name.
void collect_names(const SurfaceTerm& t, std::set<std::string>& out);

using SurfaceSubst = std::map<std::string, SurfaceTerm>;
// Capture-avoiding simultaneous substitution for free variables.
SurfaceTerm substitute(const SurfaceTerm& t, const SurfaceSubst& s);

// Nameless rendering; equal keys <=> alpha-equal terms.
std::string alpha_key(const SurfaceTerm& t);
bool alpha_equal(const SurfaceTerm& a, const SurfaceTerm& b);

class NormalizationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

bool has_redex(const SurfaceTerm& t);
// Beta then eta to a fixpoint. Bound variables of contracted redexes are
// renamed when needed to avoid capture. Throws NormalizationError after
// `budget` contractions.
SurfaceTerm beta_eta_normalize(const SurfaceTerm& t, std::size_t budget = 10000);

// Rename bound variables to the first unused names in a, b, c, ...,
// skipping names free in the term and names of enclosing binders.
SurfaceTerm canonical_binders(const SurfaceTerm& t);

struct PrintStyle {
  // Symbols written f(a, b) in the problem, with their argument counts;
  // they print the same way when applied to exactly that many arguments.
  std::map<std::string, std::size_t> paren_symbols;
};
// "Suc(x)", "Suc (g _)", "\c. g (Suc c)". Wildcards print as "_".
std::string to_string(const SurfaceTerm& t, const PrintStyle& style = {});

class Formula {
 public:
  enum class Kind : std::uint8_t {
    kTrue, kFalse, kAtom, kEq, kNot, kAnd, kOr, kImp, kIff, kForall, kExists
  };

  Formula();
  static Formula truth();
  static Formula falsity();
  static Formula atom(SurfaceTerm t);
  static Formula eq(SurfaceTerm lhs, SurfaceTerm rhs);
  static Formula negation(Formula f);
  static Formula binary(Kind kind, Formula a, Formula b);
  static Formula conj(std::vector<Formula> fs);
  static Formula disj(std::vector<Formula> fs);
  static Formula quant(Kind kind, std::string var, Formula body);

  Kind kind() const { return node_->kind; }
  const SurfaceTerm& term() const { return node_->terms[0]; }
  const SurfaceTerm& lhs() const { return node_->terms[0]; }
  const SurfaceTerm& rhs() const { return node_->terms[1]; }
  const std::vector<Formula>& children() const { return node_->children; }
  const Formula& child(std::size_t i) const { return node_->children[i]; }
  const std::string& var() const { return node_->var; }
  const Formula& body() const { return node_->children[0]; }

  friend bool operator==(const Formula& a, const Formula& b);

 private:
  struct Node {
    Kind kind;
    std::vector<SurfaceTerm> terms;
    std::vector<Formula> children;
    std::string var;
  };
  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

std::vector<std::string> free_vars(const Formula& f);
void collect_names(const Formula& f, std::set<std::string>& out);
Formula substitute(const Formula& f, const SurfaceSubst& s);
// Applies beta_eta_normalize to every term.
Formula normalize_terms(const Formula& f, std::size_t budget = 10000);
std::string to_string(const Formula& f, const PrintStyle& style = {});

}  // namespace parakeet

#endif  // PARAKEET_SURFACE_H_
