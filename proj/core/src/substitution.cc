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

#include "parakeet/substitution.h"

#include <vector>

namespace parakeet {

Substitution::Substitution(
    std::initializer_list<std::pair<const std::string, Term>> init) {
  for (const auto& [var, image] : init) bind(var, image);
}

void Substitution::bind(std::string var, Term image) {
  if (image.is_var() && image.name() == var) {
    bindings_.erase(var);
    return;
  }
  bindings_.insert_or_assign(std::move(var), std::move(image));
}

void Substitution::erase(std::string_view var) {
  if (auto it = bindings_.find(var); it != bindings_.end()) bindings_.erase(it);
}

const Term* Substitution::find(std::string_view var) const {
  auto it = bindings_.find(var);
  return it == bindings_.end() ? nullptr : &it->second;
}

Term Substitution::apply(const Term& t) const {
  if (bindings_.empty() || t.ground()) return t;
  if (t.is_var()) {
    const Term* image = find(t.name());
    return image ? *image : t;
  }
  std::vector<Term> args;
  args.reserve(t.arity());
  bool changed = false;
  for (const Term& a : t.args()) {
    args.push_back(apply(a));
    changed = changed || !args.back().same_node(a);
  }
  if (!changed) return t;
  return Term::app(t.name(), std::move(args));
}

Substitution compose(const Substitution& s1, const Substitution& s2) {
  Substitution out;
  for (const auto& [var, image] : s2) out.bind(var, s1.apply(image));
  for (const auto& [var, image] : s1) {
    if (!s2.contains(var)) out.bind(var, image);
  }
  return out;
}

namespace {

std::string render(const Substitution& s, bool marked) {
  std::string out = "{";
  bool first = true;
  for (const auto& [var, image] : s) {
    if (!first) out += ", ";
    first = false;
    out += var;
    out += " -> ";
    out += marked ? to_marked_string(image) : to_string(image);
  }
  out += '}';
  return out;
}

// Resolves a variable through the (triangular) bindings built so far.
Term walk(const Term& t, const Substitution& s) {
  Term cur = t;
  while (cur.is_var()) {
    const Term* image = s.find(cur.name());
    if (!image) break;
    cur = *image;
  }
  return cur;
}

bool occurs_walked(std::string_view var, const Term& t, const Substitution& s) {
  Term w = walk(t, s);
  if (w.is_var()) return w.name() == var;
  if (w.ground()) return false;
  for (const Term& a : w.args()) {
    if (occurs_walked(var, a, s)) return true;
  }
  return false;
}

bool unify_triangular(const Term& a, const Term& b, Substitution& s) {
  Term x = walk(a, s);
  Term y = walk(b, s);
  if (x == y) return true;
  if (x.is_var()) {
    if (occurs_walked(x.name(), y, s)) return false;
    s.bind(x.name(), y);
    return true;
  }
  if (y.is_var()) {
    if (occurs_walked(y.name(), x, s)) return false;
    s.bind(y.name(), x);
    return true;
  }
  if (x.name() != y.name() || x.arity() != y.arity()) return false;
  for (std::size_t i = 0; i < x.arity(); ++i) {
    if (!unify_triangular(x.arg(i), y.arg(i), s)) return false;
  }
  return true;
}

// Turns a triangular substitution into an idempotent one.
Substitution solve(const Substitution& triangular) {
  Substitution out;
  for (const auto& [var, image] : triangular) {
    Term resolved = image;
    // Each pass resolves one more layer; the occurs check guarantees
    // termination within |dom| passes.
    for (std::size_t i = 0; i <= triangular.size(); ++i) {
      Term next = triangular.apply(resolved);
      if (next == resolved) break;
      resolved = next;
    }
    out.bind(var, resolved);
  }
  return out;
}

}  // namespace

std::string to_string(const Substitution& s) { return render(s, false); }
std::string to_marked_string(const Substitution& s) { return render(s, true); }

bool unify_into(const Term& a, const Term& b, Substitution& s) {
  Substitution triangular = s;
  if (!unify_triangular(a, b, triangular)) return false;
  s = solve(triangular);
  return true;
}

std::optional<Substitution> mgu(const Term& a, const Term& b) {
  Substitution s;
  if (!unify_into(a, b, s)) return std::nullopt;
  return s;
}

bool Matcher::match(const Term& pattern, const Term& target) {
  if (pattern.is_var()) {
    auto [it, inserted] = bound_.try_emplace(pattern.name(), target);
    return inserted || it->second == target;
  }
  if (target.is_var() || pattern.name() != target.name() ||
      pattern.arity() != target.arity()) {
    return false;
  }
  for (std::size_t i = 0; i < pattern.arity(); ++i) {
    if (!match(pattern.arg(i), target.arg(i))) return false;
  }
  return true;
}

Substitution Matcher::result() const {
  Substitution out;
  for (const auto& [var, image] : bound_) out.bind(var, image);
  return out;
}

std::optional<Substitution> match(const Term& pattern, const Term& target) {
  Matcher m;
  if (!m.match(pattern, target)) return std::nullopt;
  return m.result();
}

}  // namespace parakeet
