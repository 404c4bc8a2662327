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


#include "parakeet/instantiation.h"

#include <unordered_map>

namespace parakeet {

namespace {

void infer_into(const ProofNode& node, const Substitution& acc,
                const AxiomRegistry* registry, std::vector<AxiomUse>& out) {
  if (node.is<rules::Axiom>()) {
    AxiomUse use{node.clause(), acc, {}};
    if (registry != nullptr) {
      if (const AxiomSource* src = registry->find(node.clause())) use.source = *src;
    }
    out.push_back(std::move(use));
  } else if (node.is<rules::Subst>()) {
    infer_into(*node.premises()[0], compose(acc, node.as<rules::Subst>().sub),
               registry, out);
  } else if (node.is<rules::Resolve>()) {
    infer_into(*node.premises()[0], acc, registry, out);
    infer_into(*node.premises()[1], acc, registry, out);
  }
}

void collect_annotated(const AnnotatedNode& n,
                       std::vector<std::pair<Clause, Substitution>>& out) {
  if (n.source->is<rules::Axiom>()) out.emplace_back(n.clause(), n.acc);
  for (const AnnotatedNode& p : n.premises) collect_annotated(p, out);
}

class Transformer {
 public:
  explicit Transformer(const AxiomRegistry& registry) : registry_(registry) {}

  ProofRef run(const ProofRef& node, const Substitution& acc);
  AxiomRegistry take_registry() { return std::move(out_registry_); }

 private:
  ProofRef build(const ProofRef& node, const Substitution& acc);

  const AxiomRegistry& registry_;
  AxiomRegistry out_registry_;
  std::unordered_map<const ProofNode*, std::map<std::string, ProofRef>> memo_;
};

ProofRef Transformer::run(const ProofRef& node, const Substitution& acc) {
  std::string key = to_marked_string(acc);
  auto& slot = memo_[node.get()];
  if (auto it = slot.find(key); it != slot.end()) return it->second;
  ProofRef result = build(node, acc);
  memo_[node.get()].emplace(std::move(key), result);
  return result;
}

ProofRef Transformer::build(const ProofRef& node, const Substitution& acc) {
  const Rule& rule = node->rule();
  if (node->is<rules::Axiom>()) {
    Substitution inst = acc.restrict_to(node->clause().variables());
    Clause c = node->clause().apply(inst);
    AxiomSource src;
    if (const AxiomSource* orig = registry_.find(node->clause())) src = *orig;
    src.original = node->clause();
    src.instantiation = inst;
    out_registry_.add(c, std::move(src));
    return make_axiom(std::move(c));
  }
  if (auto* r = std::get_if<rules::Assume>(&rule)) {
    return derive(rules::Assume{acc.apply(r->atom)}, {});
  }
  if (auto* r = std::get_if<rules::Refl>(&rule)) {
    return derive(rules::Refl{acc.apply(r->term)}, {});
  }
  if (auto* r = std::get_if<rules::Equality>(&rule)) {
    return derive(
        rules::Equality{r->literal.apply(acc), r->path, acc.apply(r->replacement)},
        {});
  }
  if (auto* r = std::get_if<rules::Subst>(&rule)) {
    return run(node->premises()[0], compose(acc, r->sub));
  }
  const Term& pivot = node->as<rules::Resolve>().atom;
  const Clause& c0 = node->premises()[0]->clause();
  const Clause& c1 = node->premises()[1]->clause();
  bool forward = c0.contains(Literal::pos(pivot)) && c1.contains(Literal::neg(pivot));
  Term inst = acc.apply(pivot);
  Literal want0{forward, inst};
  Literal want1{!forward, inst};
  ProofRef left = run(node->premises()[0], acc);
  if (!left->clause().contains(want0)) return left;
  ProofRef right = run(node->premises()[1], acc);
  if (!right->clause().contains(want1)) return right;
  return derive(rules::Resolve{inst}, {left, right});
}

}  // namespace

std::vector<AxiomUse> infer(const ProofRef& node, const Substitution& acc,
                            const AxiomRegistry* registry) {
  std::vector<AxiomUse> out;
  if (node) infer_into(*node, acc, registry, out);
  return out;
}

AnnotatedNode annotate(const ProofRef& node, const Substitution& acc) {
  AnnotatedNode out{node.get(), acc, {}};
  if (node->is<rules::Subst>()) {
    out.premises.push_back(
        annotate(node->premises()[0], compose(acc, node->as<rules::Subst>().sub)));
  } else {
    for (const ProofRef& p : node->premises()) out.premises.push_back(annotate(p, acc));
  }
  return out;
}

std::vector<std::pair<Clause, Substitution>> annotated_axioms(
    const AnnotatedNode& root) {
  std::vector<std::pair<Clause, Substitution>> out;
  collect_annotated(root, out);
  return out;
}

Proof transform(const Proof& proof) {
  CheckReport report = check_proof(proof);
  if (!report.ok()) {
    const Violation& v = report.violations.front();
    throw TransformError("input proof fails checking at step " +
                         std::to_string(v.step) + " (" + v.rule + "): " + v.reason);
  }
  Transformer t(proof.registry);
  Proof out;
  out.root = t.run(proof.root, Substitution{});
  out.registry = t.take_registry();
  return out;
}

std::vector<RawInstantiation> filter_fact_uses(const std::vector<AxiomUse>& uses,
                                               const FactTable& table) {
  std::vector<RawInstantiation> out;
  for (const AxiomUse& use : uses) {
    auto it = table.find(use.clause);
    if (it == table.end()) {
      throw UnknownAxiomError("axiom clause " + to_string(use.clause) +
                              " is not in the fact table");
    }
    const ClauseOrigin& origin = it->second;
    if (origin.kind != SourceKind::kFact) continue;
    RawInstantiation inst{origin.fact, {}, {}};
    for (const std::string& v : use.clause.variables()) {
      auto fv = origin.var_map.find(v);
      if (fv == origin.var_map.end()) continue;
      inst.domain.push_back(fv->second);
      const Term* image = use.sub.find(v);
      if (image != nullptr) inst.bindings.bind(fv->second, *image);
    }
    out.push_back(std::move(inst));
  }
  return out;
}

}  // namespace parakeet
