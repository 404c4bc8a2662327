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

// Untyped first-order terms. A term is either a variable or a function
// symbol applied to a (possibly empty) list of arguments. Terms are
// immutable and share structure, so copying is cheap.

#ifndef PARAKEET_TERM_H_
#define PARAKEET_TERM_H_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace parakeet {

// Reserved symbols shared by the encoder, prover and decoder.
namespace symbols {
inline constexpr std::string_view kEquality = "=";
inline constexpr std::string_view kApp = "app";
inline constexpr std::string_view kUndefined = "undefined";
inline constexpr std::string_view kBool = "bool%";
inline constexpr std::string_view kSkolemPrefix = "sk%";
inline constexpr std::string_view kLiftedPrefix = "ll%";
inline constexpr std::string_view kCombinatorPrefix = "comb%";
inline constexpr std::string_view kWildcardPrefix = "_w%";
inline constexpr std::string_view kDefinitionalPrefix = "def%";
inline constexpr std::string_view kExtSkolem = "sk%ext";

bool is_skolem(std::string_view name);
bool is_lifted(std::string_view name);
bool is_combinator(std::string_view name);
bool is_wildcard(std::string_view name);
}  // namespace symbols

class Term {
 public:
  enum class Kind : std::uint8_t { kVar, kApp };

  // Default-constructed terms are the constant "?" and only exist so that
  // containers can hold terms; never rely on them.
  Term();

  static Term var(std::string name);
  static Term app(std::string symbol, std::vector<Term> args = {});
  static Term constant(std::string symbol) { return app(std::move(symbol)); }

  Kind kind() const { return node_->kind; }
  bool is_var() const { return node_->kind == Kind::kVar; }
  bool is_app() const { return node_->kind == Kind::kApp; }
  bool is_constant() const { return is_app() && node_->args.empty(); }

  // Variable name or function symbol.
  const std::string& name() const { return node_->name; }
  std::span<const Term> args() const { return node_->args; }
  std::size_t arity() const { return node_->args.size(); }
  const Term& arg(std::size_t i) const { return node_->args[i]; }

  std::size_t hash() const { return node_->hash; }
  // Number of symbol and variable occurrences.
  std::size_t size() const { return node_->size; }
  bool ground() const { return node_->ground; }

  bool same_node(const Term& other) const { return node_ == other.node_; }

  friend bool operator==(const Term& a, const Term& b);
  // Total order: variables before applications; variables by name;
  // applications by symbol name, then arity, then arguments left to right.
  friend std::strong_ordering operator<=>(const Term& a, const Term& b);

 private:
  struct Node {
    Kind kind;
    std::string name;
    std::vector<Term> args;
    std::size_t hash;
    std::size_t size;
    bool ground;
  };
  explicit Term(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct TermHash {
  std::size_t operator()(const Term& t) const { return t.hash(); }
};

// Position of a subterm: successive argument indices from the root.
using Path = std::vector<std::size_t>;

bool occurs(std::string_view var, const Term& t);

// Variables of t in order of first occurrence (left to right, depth first).
std::vector<std::string> variables(const Term& t);
void collect_variables(const Term& t, std::vector<std::string>& out);

// Subterm at the given path, or nullptr when the path does not exist.
const Term* subterm_at(const Term& t, std::span<const std::size_t> path);
// Copy of t with the subterm at path replaced. The path must be valid.
Term replace_at(const Term& t, std::span<const std::size_t> path,
                const Term& replacement);

// Calls visit(subterm, path) for every non-variable subterm, preorder.
template <typename Visitor>
void for_each_app_position(const Term& t, Visitor&& visit, Path& path) {
  if (t.is_var()) return;
  visit(t, static_cast<const Path&>(path));
  for (std::size_t i = 0; i < t.arity(); ++i) {
    path.push_back(i);
    for_each_app_position(t.arg(i), visit, path);
    path.pop_back();
  }
}

// f(a,b) style rendering with no spaces, the format used in proof listings.
std::string to_string(const Term& t);
// Same, but every variable is prefixed with '?'.
std::string to_marked_string(const Term& t);
std::ostream& operator<<(std::ostream& os, const Term& t);

}  // namespace parakeet

template <>
struct std::hash<parakeet::Term> {
  std::size_t operator()(const parakeet::Term& t) const { return t.hash(); }
};

#endif  // PARAKEET_TERM_H_
