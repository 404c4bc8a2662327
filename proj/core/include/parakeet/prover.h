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

// Given-clause saturation with ordered resolution and ordered
// paramodulation. Each search inference is replayed as a short derivation
// in the six-rule calculus, so a refutation comes with a checkable proof.
//
// Before a binary inference both premises are renamed apart. The Subst
// node placed above premise C carries mgu o rename, restricted to the
// variables of C, so its payload is phrased in C's own variable names.

#ifndef PARAKEET_PROVER_H_
#define PARAKEET_PROVER_H_

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "parakeet/clause.h"
#include "parakeet/proof.h"

namespace parakeet {

struct ProverLimits {
  std::uint64_t max_generated_clauses = 100000;
  double max_seconds = 10.0;
  bool use_ext = false;
  // Nonzero seeds permute tie-breaking among clauses of equal weight.
  std::uint64_t seed = 0;
};

struct SearchStats {
  std::uint64_t generated = 0;
  std::uint64_t kept = 0;
  double elapsed = 0.0;  // seconds
};

struct Refutation {
  Proof proof;
  SearchStats stats;
};
struct Saturated {
  SearchStats stats;
};
struct ResourceOut {
  SearchStats stats;
};
using ProverOutcome = std::variant<Refutation, Saturated, ResourceOut>;

const SearchStats& stats_of(const ProverOutcome& outcome);
std::string_view outcome_name(const ProverOutcome& outcome);

struct InputClause {
  Clause clause;
  SourceKind kind = SourceKind::kFact;
  std::string name;
};

class ArityError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Throws ArityError when a symbol is used with two arities.
void check_arities(const std::vector<InputClause>& inputs);

ProverOutcome prove(std::vector<InputClause> inputs, const ProverLimits& limits);
ProverOutcome prove(const std::vector<std::pair<std::string, Clause>>& axioms,
                    const std::vector<Clause>& goal_clauses,
                    const ProverLimits& limits);

// The extensionality clause
//   app(f, sk%ext(f,g)) != app(g, sk%ext(f,g)) | f = g
Clause ext_clause();
std::vector<InputClause> inject_ext(std::vector<InputClause> inputs);
std::vector<std::pair<std::string, Clause>> inject_ext(
    std::vector<std::pair<std::string, Clause>> axioms);

}  // namespace parakeet

#endif  // PARAKEET_PROVER_H_
