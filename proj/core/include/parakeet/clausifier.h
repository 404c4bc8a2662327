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


// From surface formulas to first-order clauses.
//
// Each fact goes through negation normal form, unique renaming of bound
// variables, outside-in Skolemization (a Skolem function takes the fact's
// free variables and the enclosing universal variables as arguments),
// lambda elimination and CNF. Fact free variables keep their names as
// clause variables.
//
// The first-order encoding is chosen for the whole problem at once: every
// constant gets the smallest number of arguments it is ever applied to as
// its first-order arity, extra arguments go through the binary symbol
// app, and so does application of a variable. A constant is used as a
// predicate directly when it heads atoms with one fixed argument count and
// never occurs inside a term; other atoms are wrapped as bool%(t).

#ifndef PARAKEET_CLAUSIFIER_H_
#define PARAKEET_CLAUSIFIER_H_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "parakeet/clause.h"
#include "parakeet/instantiation.h"
#include "parakeet/parser.h"
#include "parakeet/prover.h"
#include "parakeet/surface.h"

namespace parakeet {

struct SkolemInfo {
  std::string symbol;
  // Universal variables (fact free variables first) the Skolem term takes.
  std::vector<std::string> deps;
};

struct ClausifiedFact {
  std::string name;
  SourceKind kind = SourceKind::kFact;
  std::vector<Clause> clauses;
  // Per clause: clause variable -> fact free variable.
  std::vector<std::map<std::string, std::string>> var_maps;
  std::vector<SkolemInfo> skolems;
  // Tseitin predicates introduced for this fact.
  std::vector<std::string> definitional;
};

// What the decoder needs to know about the encoding.
struct DecodeInfo {
  // Supercombinators and combinators, as closed lambda terms.
  std::map<std::string, SurfaceTerm> lambda_defs;
  std::set<std::string> skolems;
  std::set<std::string> constants;
};

struct EncodedProblem {
  std::vector<ClausifiedFact> facts;
  ClausifiedFact goal;
  // Defining equations of the supercombinators or combinators in use.
  std::vector<InputClause> definitions;
  FactTable table;
  DecodeInfo info;

  // Facts, then definitions, then the negated goal.
  std::vector<InputClause> inputs() const;
};

EncodedProblem encode_problem(const Problem& problem, LambdaMode mode);

// Clausifies a single fact on its own.
ClausifiedFact clausify(const FactDecl& fact, LambdaMode mode);

struct LambdaEncoding {
  Term term;
  // Defining equations, fully curried through app.
  std::vector<Clause> definitions;
};
LambdaEncoding lambda_lift(const SurfaceTerm& t);
LambdaEncoding combinator_encode(const SurfaceTerm& t);

// Closed lambda definitions of the five combinators, keyed by symbol.
const std::map<std::string, SurfaceTerm>& combinator_definitions();

}  // namespace parakeet

#endif  // PARAKEET_CLAUSIFIER_H_
