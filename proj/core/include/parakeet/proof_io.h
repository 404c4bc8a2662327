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

// Proof serialization.
//
// The listing format numbers the distinct nodes premises-first:
//
//   % symbols: 0/0 1/0 Suc/1 less/2 x/0
//   (1) Axiom [goal]: ~less(1,Suc(Suc(x)))
//   (3) Subst from (2) using {m -> 0, n -> y}: ~less(0,y) | less(Suc(0),Suc(y))
//   (5) Equality on less(Suc(0),Suc(y)) at [0] with 1: Suc(0) != 1 | ...
//   (6) Resolve from (4) and (5) on Suc(0) = 1: ~less(Suc(0),Suc(y)) | ...
//
// The header names every function and predicate symbol, so any other
// identifier is a variable. The machine format has one "node" line per
// step, marks variables with '?', and needs no header. Both formats parse
// back into an identical proof; the last node is the root.

#ifndef PARAKEET_PROOF_IO_H_
#define PARAKEET_PROOF_IO_H_

#include <stdexcept>
#include <string>
#include <string_view>

#include "parakeet/proof.h"

namespace parakeet {

class ProofParseError : public std::runtime_error {
 public:
  ProofParseError(std::size_t line, const std::string& what)
      : std::runtime_error("line " + std::to_string(line) + ": " + what),
        line_(line) {}
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

std::string format_listing(const Proof& proof);
std::string format_machine(const Proof& proof);

// Accepts either format. Throws ProofParseError.
Proof parse_proof(std::string_view text);

// Parses a single clause in the marked ('?'-variable) syntax; handy for
// tests and fixtures.
Clause parse_marked_clause(std::string_view text);
Term parse_marked_term(std::string_view text);

}  // namespace parakeet

#endif  // PARAKEET_PROOF_IO_H_
