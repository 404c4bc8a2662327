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

// Fine-grained proof objects. Every proof node records the clause it
// proves, one of six inference rules, and its premises:
//
//   Axiom                   C
//   Assume(A)               A | ~A
//   Subst(s)     C      ->  C s
//   Refl(t)                 t = t
//   Equality(L, p, t)       s != t | ~L | L[t]_p     where s = L|_p
//   Resolve(A)   C | A, ~A | D  ->  C | D
//
// Clauses are sets, so Subst may merge literals. Proof nodes are immutable
// and may be shared between several parents.

#ifndef PARAKEET_PROOF_H_
#define PARAKEET_PROOF_H_

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <unordered_map>
#include <variant>
#include <vector>

#include "parakeet/clause.h"
#include "parakeet/substitution.h"
#include "parakeet/term.h"

namespace parakeet {

namespace rules {
struct Axiom {
  friend bool operator==(const Axiom&, const Axiom&) = default;
};
struct Assume {
  Term atom;
  friend bool operator==(const Assume&, const Assume&) = default;
};
struct Subst {
  Substitution sub;
  friend bool operator==(const Subst&, const Subst&) = default;
};
struct Refl {
  Term term;
  friend bool operator==(const Refl&, const Refl&) = default;
};
struct Equality {
  Literal literal;
  Path path;
  Term replacement;
  friend bool operator==(const Equality&, const Equality&) = default;
};
struct Resolve {
  Term atom;
  friend bool operator==(const Resolve&, const Resolve&) = default;
};
}  // namespace rules

using Rule = std::variant<rules::Axiom, rules::Assume, rules::Subst,
                          rules::Refl, rules::Equality, rules::Resolve>;

std::string_view rule_name(const Rule& rule);
std::size_t rule_arity(const Rule& rule);

class ProofNode;
using ProofRef = std::shared_ptr<const ProofNode>;

class ProofNode {
 public:
  ProofNode(Clause clause, Rule rule, std::vector<ProofRef> premises)
      : clause_(std::move(clause)),
        rule_(std::move(rule)),
        premises_(std::move(premises)) {}

  const Clause& clause() const { return clause_; }
  const Rule& rule() const { return rule_; }
  const std::vector<ProofRef>& premises() const { return premises_; }

  template <typename R>
  bool is() const {
    return std::holds_alternative<R>(rule_);
  }
  template <typename R>
  const R& as() const {
    return std::get<R>(rule_);
  }

 private:
  Clause clause_;
  Rule rule_;
  std::vector<ProofRef> premises_;
};

enum class DeriveFailure {
  kArity,            // wrong number of premises
  kPivotAbsent,      // Resolve atom not present with opposite signs
  kInvalidPath,      // Equality path does not address a subterm
  kAxiomNeedsClause  // Axiom nodes are created with make_axiom
};

class DeriveError : public std::runtime_error {
 public:
  DeriveError(DeriveFailure failure, const std::string& what)
      : std::runtime_error(what), failure_(failure) {}
  DeriveFailure failure() const { return failure_; }

 private:
  DeriveFailure failure_;
};

// The clause that `rule` derives from premise clauses. Throws DeriveError.
// For Resolve(A), the first premise must contain +A and the second -A, or
// (if that fails) the other way round.
Clause derived_clause(const Rule& rule, std::span<const Clause> premises);

ProofRef make_axiom(Clause clause);
// Builds a checked node; throws DeriveError.
ProofRef derive(const Rule& rule, std::vector<ProofRef> premises);

enum class SourceKind { kFact, kGoal, kDefinition, kExt };

std::string_view source_kind_name(SourceKind kind);

// Where an axiom clause came from. Instantiated axioms produced by the
// proof transformation also remember the substitution that was applied to
// the original clause.
struct AxiomSource {
  SourceKind kind = SourceKind::kFact;
  std::string name;
  std::optional<Clause> original;
  Substitution instantiation;

  friend bool operator==(const AxiomSource&, const AxiomSource&) = default;
};

// Maps axiom clauses to their source. A clause registered twice keeps its
// first source.
class AxiomRegistry {
 public:
  void add(const Clause& clause, AxiomSource source);
  const AxiomSource* find(const Clause& clause) const;
  std::size_t size() const { return entries_.size(); }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

 private:
  std::map<Clause, AxiomSource> entries_;
};

struct Proof {
  ProofRef root;
  AxiomRegistry registry;
};

struct Violation {
  std::size_t step = 0;  // listing number of the offending node
  std::string rule;
  std::string reason;
};

struct CheckReport {
  std::vector<Violation> violations;
  bool ok() const { return violations.empty(); }
};

// Re-derives every node independently, checks axiom leaves against the
// registry and requires the root to be the empty clause.
CheckReport check_proof(const Proof& proof);

// Number of nodes of the proof viewed as a tree: a node shared by several
// parents is counted once per parent path. Saturates at UINT64_MAX.
std::uint64_t count_steps(const ProofRef& root);
inline std::uint64_t count_steps(const Proof& proof) {
  return count_steps(proof.root);
}

// Distinct nodes in listing order: premises before conclusions, premises
// left to right, each node once.
std::vector<const ProofNode*> listing_order(const ProofRef& root);

// Counts distinct nodes whose rule is R.
template <typename R>
std::size_t count_rule(const ProofRef& root) {
  std::size_t n = 0;
  for (const ProofNode* node : listing_order(root)) n += node->is<R>();
  return n;
}

// Axiom leaves in left-to-right tree order (with repetitions).
std::vector<const ProofNode*> axiom_leaves(const ProofRef& root);

}  // namespace parakeet

#endif  // PARAKEET_PROOF_H_
