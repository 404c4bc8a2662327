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

#ifndef PARAKEET_SUBSTITUTION_H_
#define PARAKEET_SUBSTITUTION_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "parakeet/term.h"

namespace parakeet {

// A finite map from variable names to terms. Identity bindings x -> x are
// never stored. Application is simultaneous: the images are not rewritten
// by other bindings of the same substitution.
class Substitution {
 public:
  using Map = std::map<std::string, Term, std::less<>>;

  Substitution() = default;
  Substitution(std::initializer_list<std::pair<const std::string, Term>> init);

  // Adds or overwrites a binding; binding x to Var(x) removes x instead.
  void bind(std::string var, Term image);
  void erase(std::string_view var);

  const Term* find(std::string_view var) const;
  bool contains(std::string_view var) const { return find(var) != nullptr; }

  bool empty() const { return bindings_.empty(); }
  std::size_t size() const { return bindings_.size(); }
  Map::const_iterator begin() const { return bindings_.begin(); }
  Map::const_iterator end() const { return bindings_.end(); }
  const Map& bindings() const { return bindings_; }

  Term apply(const Term& t) const;

  // Keeps only the bindings whose variable is in `vars`.
  template <typename Range>
  Substitution restrict_to(const Range& vars) const {
    Substitution out;
    for (const auto& v : vars) {
      if (const Term* image = find(v)) out.bindings_.emplace(v, *image);
    }
    return out;
  }

  friend bool operator==(const Substitution&, const Substitution&) = default;

 private:
  Map bindings_;
};

// compose(s1, s2) applies s2 first and then s1:
// apply(compose(s1, s2), t) == s1.apply(s2.apply(t)).
Substitution compose(const Substitution& s1, const Substitution& s2);

// "{m -> 0, n -> y}", bindings in name order.
std::string to_string(const Substitution& s);
std::string to_marked_string(const Substitution& s);

// Most general unifier with occurs check, or nullopt.
std::optional<Substitution> mgu(const Term& a, const Term& b);
// Extends an existing unifier; `s` must be idempotent. Returns false (and
// leaves `s` unspecified) when no unifier exists.
bool unify_into(const Term& a, const Term& b, Substitution& s);

// Matching: finds s with s.apply(pattern) == target and dom(s) within
// vars(pattern). Variables of the target are treated as constants.
std::optional<Substitution> match(const Term& pattern, const Term& target);

// Incremental matcher for matching several pattern/target pairs under one
// substitution. Unlike Substitution it remembers x -> x commitments.
class Matcher {
 public:
  bool match(const Term& pattern, const Term& target);
  Substitution result() const;

 private:
  std::map<std::string, Term, std::less<>> bound_;
};

}  // namespace parakeet

#endif  // PARAKEET_SUBSTITUTION_H_
