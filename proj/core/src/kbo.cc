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

#include "parakeet/kbo.h"

#include <map>
#include <optional>
#include <vector>

namespace parakeet {

namespace {

// Occurrence balance of variables: counts[x] = #(x, s) - #(x, t).
void count_vars(const Term& t, int sign, std::map<std::string, int>& counts) {
  if (t.is_var()) {
    counts[t.name()] += sign;
    return;
  }
  if (t.ground()) return;
  for (const Term& a : t.args()) count_vars(a, sign, counts);
}

// The minimal element T of the literal order; represented as an empty
// optional.
using Side = std::optional<Term>;

}  // namespace

void Kbo::register_symbol(const std::string& symbol) {
  precedence_.try_emplace(symbol, precedence_.size());
}

void Kbo::register_symbols(const Term& t) {
  if (t.is_var()) return;
  register_symbol(t.name());
  for (const Term& a : t.args()) register_symbols(a);
}

void Kbo::register_symbols(const Clause& c) {
  for (const Literal& l : c) register_symbols(l.atom);
}

Order Kbo::compare_precedence(const std::string& f,
                              const std::string& g) const {
  if (f == g) return Order::kEqual;
  auto fi = precedence_.find(f);
  auto gi = precedence_.find(g);
  bool fk = fi != precedence_.end();
  bool gk = gi != precedence_.end();
  if (fk && gk) return fi->second < gi->second ? Order::kLess : Order::kGreater;
  if (fk != gk) return fk ? Order::kLess : Order::kGreater;
  return f < g ? Order::kLess : Order::kGreater;
}

Order Kbo::compare(const Term& s, const Term& t) const {
  if (s == t) return Order::kEqual;
  if (s.is_var()) {
    return occurs(s.name(), t) ? Order::kLess : Order::kIncomparable;
  }
  if (t.is_var()) {
    return occurs(t.name(), s) ? Order::kGreater : Order::kIncomparable;
  }
  std::map<std::string, int> balance;
  count_vars(s, 1, balance);
  count_vars(t, -1, balance);
  bool s_covers = true;  // #(x, s) >= #(x, t) for all x
  bool t_covers = true;
  for (const auto& [var, diff] : balance) {
    if (diff < 0) s_covers = false;
    if (diff > 0) t_covers = false;
  }
  std::size_t ws = s.size();
  std::size_t wt = t.size();
  if (ws > wt) return s_covers ? Order::kGreater : Order::kIncomparable;
  if (ws < wt) return t_covers ? Order::kLess : Order::kIncomparable;
  Order lex = Order::kEqual;
  Order prec = compare_precedence(s.name(), t.name());
  if (prec != Order::kEqual) {
    lex = prec;
  } else if (s.arity() != t.arity()) {
    lex = s.arity() > t.arity() ? Order::kGreater : Order::kLess;
  } else {
    for (std::size_t i = 0; i < s.arity(); ++i) {
      Order c = compare(s.arg(i), t.arg(i));
      if (c == Order::kEqual) continue;
      lex = c;
      break;
    }
  }
  if (lex == Order::kGreater) {
    return s_covers ? Order::kGreater : Order::kIncomparable;
  }
  if (lex == Order::kLess) return t_covers ? Order::kLess : Order::kIncomparable;
  return lex;
}

namespace {

std::vector<Side> literal_multiset(const Literal& l) {
  Side lhs;
  Side rhs;
  if (l.is_equality()) {
    lhs = l.atom.arg(0);
    rhs = l.atom.arg(1);
  } else {
    lhs = l.atom;
  }
  if (l.positive) return {lhs, rhs};
  return {lhs, lhs, rhs, rhs};
}

}  // namespace

Order Kbo::compare(const Literal& a, const Literal& b) const {
  if (a == b) return Order::kEqual;
  auto cmp = [this](const Side& x, const Side& y) {
    if (!x && !y) return Order::kEqual;
    if (!x) return Order::kLess;
    if (!y) return Order::kGreater;
    return compare(*x, *y);
  };
  std::vector<Side> ma = literal_multiset(a);
  std::vector<Side> mb = literal_multiset(b);
  // Cancel common elements.
  std::vector<bool> used_b(mb.size(), false);
  std::vector<Side> ra;
  for (const Side& x : ma) {
    bool cancelled = false;
    for (std::size_t j = 0; j < mb.size(); ++j) {
      if (!used_b[j] && cmp(x, mb[j]) == Order::kEqual) {
        used_b[j] = true;
        cancelled = true;
        break;
      }
    }
    if (!cancelled) ra.push_back(x);
  }
  std::vector<Side> rb;
  for (std::size_t j = 0; j < mb.size(); ++j) {
    if (!used_b[j]) rb.push_back(mb[j]);
  }
  if (ra.empty() && rb.empty()) return Order::kEqual;
  auto dominates = [&](const std::vector<Side>& big,
                       const std::vector<Side>& small) {
    for (const Side& y : small) {
      bool found = false;
      for (const Side& x : big) {
        if (cmp(x, y) == Order::kGreater) {
          found = true;
          break;
        }
      }
      if (!found) return false;
    }
    return !big.empty();
  };
  if (dominates(ra, rb)) return Order::kGreater;
  if (dominates(rb, ra)) return Order::kLess;
  return Order::kIncomparable;
}

bool Kbo::maximal(const Clause& c, std::size_t index) const {
  const Literal& l = c.literals()[index];
  for (std::size_t j = 0; j < c.size(); ++j) {
    if (j != index && compare(l, c.literals()[j]) == Order::kLess) return false;
  }
  return true;
}

}  // namespace parakeet
