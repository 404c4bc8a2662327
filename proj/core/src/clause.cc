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

#include "parakeet/clause.h"

#include <algorithm>

namespace parakeet {

namespace {

std::string render(const Literal& l, bool marked) {
  auto term = [marked](const Term& t) {
    return marked ? to_marked_string(t) : to_string(t);
  };
  if (l.is_equality()) {
    return term(l.atom.arg(0)) + (l.positive ? " = " : " != ") +
           term(l.atom.arg(1));
  }
  return (l.positive ? "" : "~") + term(l.atom);
}

std::string render(const Clause& c, bool marked) {
  if (c.empty()) return "False";
  std::string out;
  for (const Literal& l : c) {
    if (!out.empty()) out += " | ";
    out += render(l, marked);
  }
  return out;
}

}  // namespace

std::string to_string(const Literal& l) { return render(l, false); }
std::string to_marked_string(const Literal& l) { return render(l, true); }

void normalize_literals(std::vector<Literal>& literals) {
  std::sort(literals.begin(), literals.end());
  literals.erase(std::unique(literals.begin(), literals.end()), literals.end());
}

Clause::Clause(std::initializer_list<Literal> literals)
    : literals_(literals) {
  normalize_literals(literals_);
}

Clause::Clause(std::vector<Literal> literals) : literals_(std::move(literals)) {
  normalize_literals(literals_);
}

bool Clause::contains(const Literal& l) const {
  return std::binary_search(literals_.begin(), literals_.end(), l);
}

Clause Clause::without(const Literal& l) const {
  Clause out;
  out.literals_.reserve(literals_.size());
  for (const Literal& m : literals_) {
    if (m != l) out.literals_.push_back(m);
  }
  return out;
}

Clause Clause::with(const Literal& l) const {
  Clause out = *this;
  auto it = std::lower_bound(out.literals_.begin(), out.literals_.end(), l);
  if (it == out.literals_.end() || *it != l) out.literals_.insert(it, l);
  return out;
}

Clause Clause::apply(const Substitution& s) const {
  if (s.empty()) return *this;
  std::vector<Literal> out;
  out.reserve(literals_.size());
  for (const Literal& l : literals_) out.push_back(l.apply(s));
  return Clause(std::move(out));
}

Clause merge(const Clause& a, const Clause& b) {
  Clause out;
  out.literals_.reserve(a.size() + b.size());
  std::set_union(a.literals_.begin(), a.literals_.end(), b.literals_.begin(),
                 b.literals_.end(), std::back_inserter(out.literals_));
  return out;
}

bool Clause::subset_of(const Clause& other) const {
  return std::includes(other.literals_.begin(), other.literals_.end(),
                       literals_.begin(), literals_.end());
}

bool Clause::is_tautology() const {
  for (std::size_t i = 0; i < literals_.size(); ++i) {
    const Literal& l = literals_[i];
    if (l.positive && l.is_equality() && l.atom.arg(0) == l.atom.arg(1)) {
      return true;
    }
    // Complementary literals are adjacent in the sort order.
    if (i + 1 < literals_.size() && literals_[i + 1].atom == l.atom) {
      return true;
    }
  }
  return false;
}

std::vector<std::string> Clause::variables() const {
  std::vector<std::string> out;
  for (const Literal& l : literals_) collect_variables(l.atom, out);
  return out;
}

std::size_t Clause::weight() const {
  std::size_t w = 0;
  for (const Literal& l : literals_) w += l.atom.size();
  return w;
}

std::string to_string(const Clause& c) { return render(c, false); }
std::string to_marked_string(const Clause& c) { return render(c, true); }

std::ostream& operator<<(std::ostream& os, const Clause& c) {
  return os << to_string(c);
}

namespace {

bool subsumes_from(const std::vector<Literal>& general, std::size_t index,
                   const Clause& specific, const Matcher& matcher) {
  if (index == general.size()) return true;
  const Literal& g = general[index];
  for (const Literal& s : specific) {
    if (s.positive != g.positive) continue;
    if (s.atom.name() != g.atom.name() || s.atom.arity() != g.atom.arity()) {
      continue;
    }
    Matcher next = matcher;
    if (next.match(g.atom, s.atom) &&
        subsumes_from(general, index + 1, specific, next)) {
      return true;
    }
  }
  return false;
}

}  // namespace

bool subsumes(const Clause& general, const Clause& specific) {
  // A clause must not subsume its own factors.
  if (general.size() > specific.size()) return false;
  // Try the most constrained literals first: larger atoms fail faster.
  std::vector<Literal> order = general.literals();
  std::stable_sort(order.begin(), order.end(),
                   [](const Literal& a, const Literal& b) {
                     return a.atom.size() > b.atom.size();
                   });
  return subsumes_from(order, 0, specific, Matcher{});
}

}  // namespace parakeet
