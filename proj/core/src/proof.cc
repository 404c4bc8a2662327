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

#include "parakeet/proof.h"

#include <limits>
#include <unordered_set>

namespace parakeet {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

void require_arity(const Rule& rule, std::size_t got) {
  std::size_t want = rule_arity(rule);
  if (got != want) {
    throw DeriveError(DeriveFailure::kArity,
                      std::string(rule_name(rule)) + " expects " +
                          std::to_string(want) + " premise(s), got " +
                          std::to_string(got));
  }
}

}  // namespace

std::string_view rule_name(const Rule& rule) {
  return std::visit(overloaded{
                        [](const rules::Axiom&) { return "Axiom"; },
                        [](const rules::Assume&) { return "Assume"; },
                        [](const rules::Subst&) { return "Subst"; },
                        [](const rules::Refl&) { return "Refl"; },
                        [](const rules::Equality&) { return "Equality"; },
                        [](const rules::Resolve&) { return "Resolve"; },
                    },
                    rule);
}

std::size_t rule_arity(const Rule& rule) {
  if (std::holds_alternative<rules::Subst>(rule)) return 1;
  if (std::holds_alternative<rules::Resolve>(rule)) return 2;
  return 0;
}

Clause derived_clause(const Rule& rule, std::span<const Clause> premises) {
  require_arity(rule, premises.size());
  return std::visit(
      overloaded{
          [](const rules::Axiom&) -> Clause {
            throw DeriveError(DeriveFailure::kAxiomNeedsClause,
                              "Axiom nodes carry their clause; use make_axiom");
          },
          [](const rules::Assume& r) -> Clause {
            return Clause{Literal::pos(r.atom), Literal::neg(r.atom)};
          },
          [&](const rules::Subst& r) -> Clause {
            return premises[0].apply(r.sub);
          },
          [](const rules::Refl& r) -> Clause {
            return Clause{Literal::eq(r.term, r.term)};
          },
          [](const rules::Equality& r) -> Clause {
            const Term* from = r.path.empty()
                                   ? nullptr
                                   : subterm_at(r.literal.atom, r.path);
            if (from == nullptr) {
              throw DeriveError(DeriveFailure::kInvalidPath,
                                "path does not address a subterm of " +
                                    to_string(r.literal));
            }
            Literal rewritten{r.literal.positive,
                              replace_at(r.literal.atom, r.path,
                                         r.replacement)};
            return Clause{Literal::eq(*from, r.replacement, false),
                          r.literal.complement(), std::move(rewritten)};
          },
          [&](const rules::Resolve& r) -> Clause {
            Literal pos = Literal::pos(r.atom);
            Literal neg = Literal::neg(r.atom);
            const Clause& a = premises[0];
            const Clause& b = premises[1];
            if (a.contains(pos) && b.contains(neg)) {
              return merge(a.without(pos), b.without(neg));
            }
            if (a.contains(neg) && b.contains(pos)) {
              return merge(a.without(neg), b.without(pos));
            }
            throw DeriveError(DeriveFailure::kPivotAbsent,
                              "resolved atom " + to_string(r.atom) +
                                  " does not occur with opposite signs");
          },
      },
      rule);
}

ProofRef make_axiom(Clause clause) {
  return std::make_shared<const ProofNode>(std::move(clause), rules::Axiom{},
                                           std::vector<ProofRef>{});
}

ProofRef derive(const Rule& rule, std::vector<ProofRef> premises) {
  std::vector<Clause> clauses;
  clauses.reserve(premises.size());
  for (const ProofRef& p : premises) clauses.push_back(p->clause());
  Clause c = derived_clause(rule, clauses);
  return std::make_shared<const ProofNode>(std::move(c), rule,
                                           std::move(premises));
}

std::string_view source_kind_name(SourceKind kind) {
  switch (kind) {
    case SourceKind::kFact:
      return "fact";
    case SourceKind::kGoal:
      return "goal";
    case SourceKind::kDefinition:
      return "def";
    case SourceKind::kExt:
      return "ext";
  }
  return "?";
}

void AxiomRegistry::add(const Clause& clause, AxiomSource source) {
  entries_.try_emplace(clause, std::move(source));
}

const AxiomSource* AxiomRegistry::find(const Clause& clause) const {
  auto it = entries_.find(clause);
  return it == entries_.end() ? nullptr : &it->second;
}

std::vector<const ProofNode*> listing_order(const ProofRef& root) {
  std::vector<const ProofNode*> out;
  if (!root) return out;
  std::unordered_set<const ProofNode*> seen;
  // Iterative post-order; proofs from long searches can be deep.
  struct Frame {
    const ProofNode* node;
    std::size_t next;
  };
  std::vector<Frame> stack{{root.get(), 0}};
  seen.insert(root.get());
  while (!stack.empty()) {
    Frame& top = stack.back();
    if (top.next < top.node->premises().size()) {
      const ProofNode* child = top.node->premises()[top.next++].get();
      if (seen.insert(child).second) stack.push_back({child, 0});
      continue;
    }
    out.push_back(top.node);
    stack.pop_back();
  }
  return out;
}

std::uint64_t count_steps(const ProofRef& root) {
  constexpr std::uint64_t kMax = std::numeric_limits<std::uint64_t>::max();
  std::unordered_map<const ProofNode*, std::uint64_t> counts;
  for (const ProofNode* node : listing_order(root)) {
    std::uint64_t n = 1;
    for (const ProofRef& p : node->premises()) {
      std::uint64_t c = counts.at(p.get());
      n = (kMax - n < c) ? kMax : n + c;
    }
    counts[node] = n;
  }
  return root ? counts.at(root.get()) : 0;
}

std::vector<const ProofNode*> axiom_leaves(const ProofRef& root) {
  std::vector<const ProofNode*> out;
  std::vector<const ProofNode*> stack;
  if (root) stack.push_back(root.get());
  while (!stack.empty()) {
    const ProofNode* node = stack.back();
    stack.pop_back();
    if (node->is<rules::Axiom>()) out.push_back(node);
    const auto& ps = node->premises();
    for (auto it = ps.rbegin(); it != ps.rend(); ++it) stack.push_back(it->get());
  }
  return out;
}

CheckReport check_proof(const Proof& proof) {
  CheckReport report;
  if (!proof.root) {
    report.violations.push_back({0, "", "proof has no root"});
    return report;
  }
  std::vector<const ProofNode*> order = listing_order(proof.root);
  std::unordered_map<const ProofNode*, std::size_t> number;
  for (std::size_t i = 0; i < order.size(); ++i) number[order[i]] = i + 1;

  for (const ProofNode* node : order) {
    std::size_t step = number[node];
    std::string name(rule_name(node->rule()));
    if (node->is<rules::Axiom>()) {
      if (!node->premises().empty()) {
        report.violations.push_back({step, name, "Axiom node has premises"});
      }
      if (proof.registry.find(node->clause()) == nullptr) {
        report.violations.push_back(
            {step, name,
             "clause " + to_string(node->clause()) + " is not a registered axiom"});
      }
      continue;
    }
    std::vector<Clause> premises;
    for (const ProofRef& p : node->premises()) premises.push_back(p->clause());
    try {
      Clause expected = derived_clause(node->rule(), premises);
      if (expected != node->clause()) {
        report.violations.push_back(
            {step, name,
             "recorded clause " + to_string(node->clause()) +
                 " differs from derived clause " + to_string(expected)});
      }
    } catch (const DeriveError& e) {
      report.violations.push_back({step, name, e.what()});
    }
  }
  if (!proof.root->clause().empty()) {
    report.violations.push_back({number[proof.root.get()],
                                 std::string(rule_name(proof.root->rule())),
                                 "root is not the empty clause"});
  }
  return report;
}

}  // namespace parakeet
