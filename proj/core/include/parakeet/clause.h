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

#ifndef PARAKEET_CLAUSE_H_
#define PARAKEET_CLAUSE_H_

#include <compare>
#include <initializer_list>
#include <ostream>
#include <string>
#include <vector>

#include "parakeet/substitution.h"
#include "parakeet/term.h"

namespace parakeet {

struct Literal {
  bool positive = true;
  Term atom;

  static Literal pos(Term atom) { return {true, std::move(atom)}; }
  static Literal neg(Term atom) { return {false, std::move(atom)}; }
  static Literal eq(Term lhs, Term rhs, bool positive = true) {
    return {positive,
            Term::app(std::string(symbols::kEquality),
                      {std::move(lhs), std::move(rhs)})};
  }

  bool is_equality() const {
    return atom.name() == symbols::kEquality && atom.arity() == 2;
  }
  Literal complement() const { return {!positive, atom}; }
  Literal apply(const Substitution& s) const { return {positive, s.apply(atom)}; }

  friend bool operator==(const Literal&, const Literal&) = default;
  // Atom first, then negative before positive.
  friend std::strong_ordering operator<=>(const Literal& a, const Literal& b) {
    if (auto c = a.atom <=> b.atom; c != 0) return c;
    return a.positive <=> b.positive;
  }
};

// "~less(0,y)", "Suc(0) = 1", "Suc(0) != 1".
std::string to_string(const Literal& l);
std::string to_marked_string(const Literal& l);

// A clause is a set of literals, kept sorted and free of duplicates. The
// empty clause is False.
class Clause {
 public:
  Clause() = default;
  Clause(std::initializer_list<Literal> literals);
  explicit Clause(std::vector<Literal> literals);

  const std::vector<Literal>& literals() const { return literals_; }
  std::size_t size() const { return literals_.size(); }
  bool empty() const { return literals_.empty(); }
  auto begin() const { return literals_.begin(); }
  auto end() const { return literals_.end(); }

  bool contains(const Literal& l) const;
  Clause without(const Literal& l) const;
  Clause with(const Literal& l) const;
  Clause apply(const Substitution& s) const;
  // Set union.
  friend Clause merge(const Clause& a, const Clause& b);
  // Every literal of `this` occurs in `other`.
  bool subset_of(const Clause& other) const;

  // Contains complementary literals or a positive t = t.
  bool is_tautology() const;
  std::vector<std::string> variables() const;
  std::size_t weight() const;

  friend bool operator==(const Clause&, const Clause&) = default;
  friend std::strong_ordering operator<=>(const Clause& a, const Clause& b) {
    return a.literals_ <=> b.literals_;
  }

 private:
  std::vector<Literal> literals_;
};

// Sorts and deduplicates in place; idempotent.
void normalize_literals(std::vector<Literal>& literals);

// "~less(m,n) | less(Suc(m),Suc(n))"; the empty clause prints as "False".
std::string to_string(const Clause& c);
std::string to_marked_string(const Clause& c);
std::ostream& operator<<(std::ostream& os, const Clause& c);

// theta-subsumption: some s with s(general) a subset of specific, where
// general has no more literals than specific.
bool subsumes(const Clause& general, const Clause& specific);

}  // namespace parakeet

#endif  // PARAKEET_CLAUSE_H_
