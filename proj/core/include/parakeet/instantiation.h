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


// Recovering the substitutions a proof applies to its axioms, and
// rewriting the proof so that it starts from the instantiated axioms and
// needs no Subst steps.

#ifndef PARAKEET_INSTANTIATION_H_
#define PARAKEET_INSTANTIATION_H_

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "parakeet/proof.h"

namespace parakeet {

struct AxiomUse {
  Clause clause;
  Substitution sub;
  // Empty name and kind kFact when the proof carries no registry entry.
  AxiomSource source;

  friend bool operator==(const AxiomUse&, const AxiomUse&) = default;
};

// infer(Axiom C, acc)   = [(C, acc)]
// infer(Subst s over t) = infer(t, acc o s)
// infer(Resolve t1 t2)  = infer(t1, acc) ++ infer(t2, acc)
// and [] for the remaining leaves.
std::vector<AxiomUse> infer(const ProofRef& node, const Substitution& acc,
                            const AxiomRegistry* registry = nullptr);
inline std::vector<AxiomUse> infer(const Proof& proof) {
  return infer(proof.root, Substitution{}, &proof.registry);
}

struct AnnotatedNode {
  const ProofNode* source = nullptr;
  Substitution acc;
  std::vector<AnnotatedNode> premises;

  const Clause& clause() const { return source->clause(); }
  const Rule& rule() const { return source->rule(); }
};

AnnotatedNode annotate(const ProofRef& node, const Substitution& acc);

// (clause, acc) at the Axiom leaves of an annotated tree, left to right.
std::vector<std::pair<Clause, Substitution>> annotated_axioms(
    const AnnotatedNode& root);

class TransformError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Builds a Subst-free proof from the instantiated axiom clauses. Each new
// Axiom is registered with its original clause and the (restricted)
// substitution. Throws TransformError on proofs that fail check_proof.
Proof transform(const Proof& proof);

// How an axiom clause relates to the problem: its source, and for every
// clause variable that stands for a free variable of the source fact, the
// name of that fact variable.
struct ClauseOrigin {
  SourceKind kind = SourceKind::kFact;
  std::string fact;
  std::map<std::string, std::string> var_map;
};
using FactTable = std::map<Clause, ClauseOrigin>;

// Substitution keyed by fact free-variable names; images are still
// first-order terms over clause variables.
struct RawInstantiation {
  std::string fact;
  Substitution bindings;
  // Fact free variables that occur in the used clause, bound or not.
  std::vector<std::string> domain;

  friend bool operator==(const RawInstantiation&, const RawInstantiation&) =
      default;
};

class UnknownAxiomError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Drops goal, definition and ext uses and keeps, for fact uses, only the
// bindings of clause variables that map to fact free variables.
std::vector<RawInstantiation> filter_fact_uses(const std::vector<AxiomUse>& uses,
                                               const FactTable& table);

}  // namespace parakeet

#endif  // PARAKEET_INSTANTIATION_H_
