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

#include "parakeet/term.h"

#include <algorithm>
#include <functional>
#include <sstream>

namespace parakeet {

namespace symbols {
bool is_skolem(std::string_view name) { return name.starts_with(kSkolemPrefix); }
bool is_lifted(std::string_view name) { return name.starts_with(kLiftedPrefix); }
bool is_combinator(std::string_view name) {
  return name.starts_with(kCombinatorPrefix);
}
bool is_wildcard(std::string_view name) {
  return name.starts_with(kWildcardPrefix);
}
}  // namespace symbols

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Term::Term() : Term(Term::constant("?")) {}

Term Term::var(std::string name) {
  std::size_t h = mix(0x51ed27, std::hash<std::string>{}(name));
  return Term(std::make_shared<const Node>(
      Node{Kind::kVar, std::move(name), {}, h, 1, false}));
}

Term Term::app(std::string symbol, std::vector<Term> args) {
  std::size_t h = mix(0xa11ce, std::hash<std::string>{}(symbol));
  std::size_t size = 1;
  bool ground = true;
  for (const Term& a : args) {
    h = mix(h, a.hash());
    size += a.size();
    ground = ground && a.ground();
  }
  h = mix(h, args.size());
  return Term(std::make_shared<const Node>(
      Node{Kind::kApp, std::move(symbol), std::move(args), h, size, ground}));
}

bool operator==(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.kind() != b.kind() || a.arity() != b.arity() ||
      a.name() != b.name()) {
    return false;
  }
  return std::equal(a.args().begin(), a.args().end(), b.args().begin());
}

std::strong_ordering operator<=>(const Term& a, const Term& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (a.kind() != b.kind()) {
    return a.is_var() ? std::strong_ordering::less
                      : std::strong_ordering::greater;
  }
  if (auto c = a.name() <=> b.name(); c != 0) return c;
  if (auto c = a.arity() <=> b.arity(); c != 0) return c;
  for (std::size_t i = 0; i < a.arity(); ++i) {
    if (auto c = a.arg(i) <=> b.arg(i); c != 0) return c;
  }
  return std::strong_ordering::equal;
}

bool occurs(std::string_view var, const Term& t) {
  if (t.is_var()) return t.name() == var;
  if (t.ground()) return false;
  for (const Term& a : t.args()) {
    if (occurs(var, a)) return true;
  }
  return false;
}

void collect_variables(const Term& t, std::vector<std::string>& out) {
  if (t.is_var()) {
    if (std::find(out.begin(), out.end(), t.name()) == out.end()) {
      out.push_back(t.name());
    }
    return;
  }
  if (t.ground()) return;
  for (const Term& a : t.args()) collect_variables(a, out);
}

std::vector<std::string> variables(const Term& t) {
  std::vector<std::string> out;
  collect_variables(t, out);
  return out;
}

const Term* subterm_at(const Term& t, std::span<const std::size_t> path) {
  const Term* cur = &t;
  for (std::size_t index : path) {
    if (cur->is_var() || index >= cur->arity()) return nullptr;
    cur = &cur->arg(index);
  }
  return cur;
}

Term replace_at(const Term& t, std::span<const std::size_t> path,
                const Term& replacement) {
  if (path.empty()) return replacement;
  std::vector<Term> args(t.args().begin(), t.args().end());
  args[path.front()] = replace_at(args[path.front()], path.subspan(1),
                                  replacement);
  return Term::app(t.name(), std::move(args));
}

namespace {

void render(const Term& t, bool mark_vars, std::string& out) {
  if (t.is_var()) {
    if (mark_vars) out += '?';
    out += t.name();
    return;
  }
  out += t.name();
  if (t.arity() == 0) return;
  out += '(';
  for (std::size_t i = 0; i < t.arity(); ++i) {
    if (i > 0) out += ',';
    render(t.arg(i), mark_vars, out);
  }
  out += ')';
}

}  // namespace

std::string to_string(const Term& t) {
  std::string out;
  render(t, false, out);
  return out;
}

std::string to_marked_string(const Term& t) {
  std::string out;
  render(t, true, out);
  return out;
}

std::ostream& operator<<(std::ostream& os, const Term& t) {
  return os << to_string(t);
}

}  // namespace parakeet
