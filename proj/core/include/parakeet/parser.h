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


// Problem files.
//
//   option lambda_mode = lifting      # or combinators
//   option ext = true
//   option undefined = false
//   const a b c                       # declare constants explicitly
//   fact F1 : less(m, n) -> less(Suc(m), Suc(n))
//   goal : less(1, Suc(Suc(x)))
//
// Formulas use !x. ?x. \x. ~ & | -> <-> = != and application by
// juxtaposition; f(a, b) is sugar for f a b when '(' follows f directly.
// An identifier is a constant if it is declared with const, starts with
// an upper-case letter or digit, is applied with an argument list, or
// occurs free in the goal. Any other unbound identifier in a fact is a
// free variable of that fact.
//
// Files whose first statement is cnf(...) are read as TPTP CNF instead:
// upper-case identifiers are variables, axiom clauses become facts and
// negated_conjecture clauses together form the negated goal.

#ifndef PARAKEET_PARSER_H_
#define PARAKEET_PARSER_H_

#include <cstddef>
#include <filesystem>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "parakeet/surface.h"

namespace parakeet {

enum class LambdaMode { kLifting, kCombinators };

struct ProblemOptions {
  LambdaMode lambda_mode = LambdaMode::kLifting;
  std::optional<bool> ext;
  bool undefined = true;
};

struct FactDecl {
  std::string name;
  Formula formula;
  // Free variables in order of first occurrence.
  std::vector<std::string> free_vars;
  std::size_t line = 0;
};

struct Problem {
  ProblemOptions options;
  std::vector<FactDecl> facts;
  Formula goal = Formula::falsity();
  bool has_goal = false;
  std::set<std::string> constants;
  PrintStyle style;
};

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& what)
      : std::runtime_error(std::to_string(line) + ":" + std::to_string(column) +
                           ": " + what),
        line_(line),
        column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

Problem parse_problem(std::string_view text);
Problem parse_problem_file(const std::filesystem::path& path);

// Parses a single term or formula using the given constants; unknown
// identifiers become variables. Intended for tests and tools.
SurfaceTerm parse_surface_term(std::string_view text,
                               const std::set<std::string>& constants);
Formula parse_formula(std::string_view text, const std::set<std::string>& constants);

}  // namespace parakeet

#endif  // PARAKEET_PARSER_H_
