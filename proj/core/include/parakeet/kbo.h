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

// Knuth-Bendix order with every symbol and variable weighing 1. Symbol
// precedence is the order in which symbols were registered: later symbols
// are greater. Unregistered symbols rank above registered ones, ordered by
// name.

#ifndef PARAKEET_KBO_H_
#define PARAKEET_KBO_H_

#include <string>
#include <unordered_map>

#include "parakeet/clause.h"
#include "parakeet/term.h"

namespace parakeet {

enum class Order { kLess, kEqual, kGreater, kIncomparable };

class Kbo {
 public:
  void register_symbol(const std::string& symbol);
  void register_symbols(const Term& t);
  void register_symbols(const Clause& c);

  Order compare(const Term& s, const Term& t) const;
  bool greater(const Term& s, const Term& t) const {
    return compare(s, t) == Order::kGreater;
  }

  // Literal order: an atom P(...) is treated as the equation P(...) = T with
  // T minimal; positive literals are the multiset {s, t}, negative ones
  // {s, s, t, t}; multisets are compared by the multiset extension.
  Order compare(const Literal& a, const Literal& b) const;

  // True unless some other literal of the clause is strictly greater.
  bool maximal(const Clause& c, std::size_t index) const;

 private:
  Order compare_precedence(const std::string& f, const std::string& g) const;

  std::unordered_map<std::string, std::size_t> precedence_;
};

}  // namespace parakeet

#endif  // PARAKEET_KBO_H_
