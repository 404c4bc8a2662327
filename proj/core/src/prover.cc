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


#include "parakeet/prover.h"

#include <chrono>
#include <deque>
#include <map>
#include <optional>
#include <set>
#include <unordered_set>

#include "parakeet/kbo.h"

namespace parakeet {

namespace {

using Clock = std::chrono::steady_clock;

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

std::string base_name(const std::string& var) {
  return var.substr(0, var.find('%'));
}

void record_arities(const Term& t, std::map<std::string, std::size_t>& seen) {
  if (t.is_var()) return;
  auto [it, fresh] = seen.emplace(t.name(), t.arity());
  if (!fresh && it->second != t.arity()) {
    throw ArityError("symbol '" + t.name() + "' is used with arities " +
                     std::to_string(it->second) + " and " +
                     std::to_string(t.arity()));
  }
  for (const Term& a : t.args()) record_arities(a, seen);
}

// A canonical-enough key for detecting variants of kept clauses.
std::string variant_key(const Clause& c) {
  Substitution canon;
  std::size_t n = 0;
  for (const std::string& v : c.variables()) {
    canon.bind(v, Term::var("_" + std::to_string(n++)));
  }
  return to_string(c.apply(canon));
}

struct Entry {
  ProofRef node;
  std::vector<bool> eligible;
};

class Search {
 public:
  explicit Search(const ProverLimits& limits) : limits_(limits) {}

  ProverOutcome run(const std::vector<InputClause>& inputs);

 private:
  using Key = std::pair<std::pair<std::size_t, std::uint64_t>, std::size_t>;

  const Clause& clause(std::size_t id) const { return entries_[id].node->clause(); }
  bool stopped() const { return refutation_ || out_of_resources_; }
  double elapsed() const {
    return std::chrono::duration<double>(Clock::now() - start_).count();
  }

  void add(ProofRef node, bool inferred);
  void emit(ProofRef node);
  bool subsumed_by_active(const Clause& c) const;
  std::optional<std::size_t> select();

  Substitution rename(const Clause& c);
  ProofRef instantiate(const ProofRef& node, const Substitution& mgu,
                       const Substitution& renaming);

  void resolve(std::size_t a, std::size_t b);
  void paramodulate(std::size_t from, std::size_t into);
  void factor(std::size_t id);
  void equality_resolve(std::size_t id);
  void equality_factor(std::size_t id);

  const ProverLimits& limits_;
  Clock::time_point start_ = Clock::now();
  Kbo kbo_;
  std::vector<Entry> entries_;
  std::set<Key> by_weight_;
  std::set<std::size_t> by_age_;
  std::vector<std::size_t> active_;
  std::unordered_set<std::string> seen_;
  std::uint64_t rename_counter_ = 0;
  std::uint64_t picks_ = 0;
  SearchStats stats_;
  std::optional<ProofRef> refutation_;
  bool out_of_resources_ = false;
};

Substitution Search::rename(const Clause& c) {
  Substitution r;
  for (const std::string& v : c.variables()) {
    r.bind(v, Term::var(base_name(v) + "%" + std::to_string(++rename_counter_)));
  }
  return r;
}

ProofRef Search::instantiate(const ProofRef& node, const Substitution& mgu,
                             const Substitution& renaming) {
  Substitution payload =
      compose(mgu, renaming).restrict_to(node->clause().variables());
  if (payload.empty()) return node;
  return derive(rules::Subst{std::move(payload)}, {node});
}

bool Search::subsumed_by_active(const Clause& c) const {
  for (std::size_t id : active_) {
    if (subsumes(clause(id), c)) return true;
  }
  return false;
}

void Search::add(ProofRef node, bool inferred) {
  const Clause& c = node->clause();
  if (c.empty()) {
    refutation_ = std::move(node);
    return;
  }
  if (c.is_tautology()) return;
  if (!seen_.insert(variant_key(c)).second) return;
  if (subsumed_by_active(c)) return;
  Entry e{node, std::vector<bool>(c.size())};
  for (std::size_t i = 0; i < c.size(); ++i) e.eligible[i] = kbo_.maximal(c, i);
  std::size_t id = entries_.size();
  std::uint64_t tie = limits_.seed == 0 ? id : mix(limits_.seed ^ mix(id));
  entries_.push_back(std::move(e));
  by_weight_.insert({{c.weight(), tie}, id});
  by_age_.insert(id);
  if (inferred) ++stats_.kept;
}

void Search::emit(ProofRef node) {
  if (stopped()) return;
  ++stats_.generated;
  add(std::move(node), true);
  if (refutation_) return;
  if (stats_.generated >= limits_.max_generated_clauses ||
      elapsed() > limits_.max_seconds) {
    out_of_resources_ = true;
  }
}

std::optional<std::size_t> Search::select() {
  while (!by_age_.empty()) {
    std::size_t id;
    if (++picks_ % 6 == 0) {
      id = *by_age_.begin();
      by_age_.erase(by_age_.begin());
      std::uint64_t tie = limits_.seed == 0 ? id : mix(limits_.seed ^ mix(id));
      by_weight_.erase({{clause(id).weight(), tie}, id});
    } else {
      id = by_weight_.begin()->second;
      by_weight_.erase(by_weight_.begin());
      by_age_.erase(id);
    }
    if (!subsumed_by_active(clause(id))) return id;
  }
  return std::nullopt;
}

void Search::resolve(std::size_t a, std::size_t b) {
  const Clause& ca = clause(a);
  const Clause& cb = clause(b);
  std::optional<std::pair<Substitution, Substitution>> renamings;
  for (std::size_t i = 0; i < ca.size() && !stopped(); ++i) {
    if (!entries_[a].eligible[i]) continue;
    const Literal& li = ca.literals()[i];
    for (std::size_t j = 0; j < cb.size() && !stopped(); ++j) {
      const Literal& lj = cb.literals()[j];
      if (!entries_[b].eligible[j] || li.positive == lj.positive ||
          li.atom.name() != lj.atom.name() || li.atom.arity() != lj.atom.arity()) {
        continue;
      }
      if (!renamings) renamings.emplace(rename(ca), rename(cb));
      const auto& [ra, rb] = *renamings;
      Term ai = ra.apply(li.atom);
      auto sigma = mgu(ai, rb.apply(lj.atom));
      if (!sigma) continue;
      ProofRef pa = instantiate(entries_[a].node, *sigma, ra);
      ProofRef pb = instantiate(entries_[b].node, *sigma, rb);
      Term pivot = sigma->apply(ai);
      if (li.positive) std::swap(pa, pb);
      emit(derive(rules::Resolve{pivot}, {pa, pb}));
    }
  }
}

void Search::paramodulate(std::size_t from, std::size_t into) {
  const Clause& ce = clause(from);
  const Clause& ct = clause(into);
  std::optional<std::pair<Substitution, Substitution>> renamings;
  for (std::size_t i = 0; i < ce.size() && !stopped(); ++i) {
    const Literal& eq = ce.literals()[i];
    if (!entries_[from].eligible[i] || !eq.positive || !eq.is_equality()) continue;
    for (std::size_t j = 0; j < ct.size() && !stopped(); ++j) {
      if (!entries_[into].eligible[j]) continue;
      if (!renamings) renamings.emplace(rename(ce), rename(ct));
      const auto& [re, rt] = *renamings;
      Term l = re.apply(eq.atom.arg(0));
      Term r = re.apply(eq.atom.arg(1));
      Literal target = ct.literals()[j].apply(rt);
      for (bool reversed : {false, true}) {
        const Term& lhs = reversed ? r : l;
        const Term& rhs = reversed ? l : r;
        if (lhs.is_var()) continue;
        std::vector<Path> positions;
        Path scratch;
        for_each_app_position(
            target.atom,
            [&](const Term& sub, const Path& p) {
              if (!p.empty() && sub.name() == lhs.name() &&
                  sub.arity() == lhs.arity()) {
                positions.push_back(p);
              }
            },
            scratch);
        for (const Path& p : positions) {
          if (stopped()) return;
          auto sigma = mgu(lhs, *subterm_at(target.atom, p));
          if (!sigma) continue;
          Term from_s = sigma->apply(lhs);
          Term to_s = sigma->apply(rhs);
          Order o = kbo_.compare(from_s, to_s);
          if (o == Order::kLess || o == Order::kEqual) continue;
          // When the target literal coincides with a literal of the
          // instantiated equation clause the chain collapses; skip it.
          try {
            ProofRef pe = instantiate(entries_[from].node, *sigma, re);
            ProofRef pt = instantiate(entries_[into].node, *sigma, rt);
            if (reversed) {
              // Turn the instantiated equation to_s = from_s around.
              ProofRef refl = derive(rules::Refl{to_s}, {});
              ProofRef sym = derive(
                  rules::Equality{Literal::eq(to_s, to_s), {0}, from_s}, {});
              ProofRef flip = derive(rules::Resolve{Literal::eq(to_s, to_s).atom},
                                     {refl, sym});
              pe = derive(rules::Resolve{Literal::eq(to_s, from_s).atom},
                          {pe, flip});
            }
            Literal lit = target.apply(*sigma);
            ProofRef rewrite = derive(rules::Equality{lit, p, to_s}, {});
            ProofRef r1 = derive(rules::Resolve{Literal::eq(from_s, to_s).atom},
                                 {pe, rewrite});
            emit(derive(rules::Resolve{lit.atom}, {pt, r1}));
          } catch (const DeriveError&) {
            continue;
          }
        }
      }
    }
  }
}

void Search::factor(std::size_t id) {
  const Clause& c = clause(id);
  for (std::size_t i = 0; i < c.size() && !stopped(); ++i) {
    const Literal& li = c.literals()[i];
    if (!li.positive) continue;
    for (std::size_t j = i + 1; j < c.size() && !stopped(); ++j) {
      const Literal& lj = c.literals()[j];
      if (!lj.positive || !(entries_[id].eligible[i] || entries_[id].eligible[j])) {
        continue;
      }
      auto sigma = mgu(li.atom, lj.atom);
      if (!sigma) continue;
      emit(instantiate(entries_[id].node, *sigma, Substitution{}));
    }
  }
}

void Search::equality_resolve(std::size_t id) {
  const Clause& c = clause(id);
  for (std::size_t i = 0; i < c.size() && !stopped(); ++i) {
    const Literal& l = c.literals()[i];
    if (l.positive || !l.is_equality() || !entries_[id].eligible[i]) continue;
    auto sigma = mgu(l.atom.arg(0), l.atom.arg(1));
    if (!sigma) continue;
    ProofRef inst = instantiate(entries_[id].node, *sigma, Substitution{});
    Term s = sigma->apply(l.atom.arg(0));
    ProofRef refl = derive(rules::Refl{s}, {});
    emit(derive(rules::Resolve{Literal::eq(s, s).atom}, {inst, refl}));
  }
}

void Search::equality_factor(std::size_t id) {
  const Clause& c = clause(id);
  for (std::size_t i = 0; i < c.size() && !stopped(); ++i) {
    const Literal& li = c.literals()[i];
    if (!li.positive || !li.is_equality() || !entries_[id].eligible[i]) continue;
    for (std::size_t j = 0; j < c.size() && !stopped(); ++j) {
      const Literal& lj = c.literals()[j];
      if (j == i || !lj.positive || !lj.is_equality()) continue;
      for (std::size_t side = 0; side < 2; ++side) {
        for (std::size_t other = 0; other < 2; ++other) {
          auto sigma = mgu(li.atom.arg(side), lj.atom.arg(other));
          if (!sigma) continue;
          Term s = sigma->apply(li.atom.arg(side));
          Term t = sigma->apply(li.atom.arg(1 - side));
          Term t2 = sigma->apply(lj.atom.arg(1 - other));
          if (t == t2 || kbo_.compare(s, t) == Order::kLess) continue;
          ProofRef inst = instantiate(entries_[id].node, *sigma, Substitution{});
          Literal lit = li.apply(*sigma);
          ProofRef eq = derive(rules::Equality{lit, {1 - side}, t2}, {});
          emit(derive(rules::Resolve{lit.atom}, {inst, eq}));
        }
      }
    }
  }
}

ProverOutcome Search::run(const std::vector<InputClause>& inputs) {
  for (const InputClause& in : inputs) kbo_.register_symbols(in.clause);
  for (const InputClause& in : inputs) {
    add(make_axiom(in.clause), false);
    if (refutation_) break;
  }
  while (!stopped()) {
    if (elapsed() > limits_.max_seconds) {
      out_of_resources_ = true;
      break;
    }
    std::optional<std::size_t> given = select();
    if (!given) break;
    active_.push_back(*given);
    for (std::size_t k = 0; k < active_.size() && !stopped(); ++k) {
      std::size_t other = active_[k];
      resolve(*given, other);
      paramodulate(*given, other);
      if (other != *given) paramodulate(other, *given);
    }
    factor(*given);
    equality_resolve(*given);
    equality_factor(*given);
  }
  stats_.elapsed = elapsed();
  if (refutation_) {
    Proof proof;
    proof.root = *refutation_;
    for (const InputClause& in : inputs) {
      proof.registry.add(in.clause, AxiomSource{in.kind, in.name, std::nullopt, {}});
    }
    return Refutation{std::move(proof), stats_};
  }
  if (out_of_resources_) return ResourceOut{stats_};
  return Saturated{stats_};
}

}  // namespace

const SearchStats& stats_of(const ProverOutcome& outcome) {
  return std::visit([](const auto& o) -> const SearchStats& { return o.stats; },
                    outcome);
}

std::string_view outcome_name(const ProverOutcome& outcome) {
  if (std::holds_alternative<Refutation>(outcome)) return "refutation";
  if (std::holds_alternative<Saturated>(outcome)) return "saturated";
  return "resource-out";
}

void check_arities(const std::vector<InputClause>& inputs) {
  std::map<std::string, std::size_t> seen;
  for (const InputClause& in : inputs) {
    for (const Literal& l : in.clause) record_arities(l.atom, seen);
  }
}

ProverOutcome prove(std::vector<InputClause> inputs, const ProverLimits& limits) {
  if (limits.use_ext) inputs = inject_ext(std::move(inputs));
  check_arities(inputs);
  Search search(limits);
  return search.run(inputs);
}

ProverOutcome prove(const std::vector<std::pair<std::string, Clause>>& axioms,
                    const std::vector<Clause>& goal_clauses,
                    const ProverLimits& limits) {
  std::vector<InputClause> inputs;
  for (const auto& [name, c] : axioms) {
    SourceKind kind = name == "ext" ? SourceKind::kExt : SourceKind::kFact;
    inputs.push_back({c, kind, name});
  }
  for (const Clause& c : goal_clauses) inputs.push_back({c, SourceKind::kGoal, "goal"});
  return prove(std::move(inputs), limits);
}

Clause ext_clause() {
  Term f = Term::var("f");
  Term g = Term::var("g");
  Term sk = Term::app(std::string(symbols::kExtSkolem), {f, g});
  Term app_f = Term::app(std::string(symbols::kApp), {f, sk});
  Term app_g = Term::app(std::string(symbols::kApp), {g, sk});
  return Clause{Literal::eq(app_f, app_g, false), Literal::eq(f, g)};
}

std::vector<InputClause> inject_ext(std::vector<InputClause> inputs) {
  for (const InputClause& in : inputs) {
    if (in.kind == SourceKind::kExt) return inputs;
  }
  inputs.push_back({ext_clause(), SourceKind::kExt, "ext"});
  return inputs;
}

std::vector<std::pair<std::string, Clause>> inject_ext(
    std::vector<std::pair<std::string, Clause>> axioms) {
  axioms.emplace_back("ext", ext_clause());
  return axioms;
}

}  // namespace parakeet
