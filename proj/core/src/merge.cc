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


#include "parakeet/merge.h"

namespace parakeet {

namespace {

using Binders = std::vector<std::pair<std::string, std::string>>;

// Innermost binder index of `name` on one side, or -1.
long binder_index(const Binders& binders, const std::string& name, bool left) {
  for (long i = static_cast<long>(binders.size()) - 1; i >= 0; --i) {
    if ((left ? binders[i].first : binders[i].second) == name) return i;
  }
  return -1;
}

bool equal_rec(const SurfaceTerm& a, const SurfaceTerm& b, Binders& binders,
               std::map<std::string, std::string>& fwd,
               std::map<std::string, std::string>& bwd) {
  if (a.kind() != b.kind()) return false;
  switch (a.kind()) {
    case SurfaceTerm::Kind::kConst:
      return a.name() == b.name();
    case SurfaceTerm::Kind::kApp:
      return equal_rec(a.fun(), b.fun(), binders, fwd, bwd) &&
             equal_rec(a.arg(), b.arg(), binders, fwd, bwd);
    case SurfaceTerm::Kind::kLam: {
      binders.emplace_back(a.name(), b.name());
      bool ok = equal_rec(a.body(), b.body(), binders, fwd, bwd);
      binders.pop_back();
      return ok;
    }
    case SurfaceTerm::Kind::kVar:
      break;
  }
  long ia = binder_index(binders, a.name(), true);
  long ib = binder_index(binders, b.name(), false);
  if (ia >= 0 || ib >= 0) return ia == ib;
  bool wa = symbols::is_wildcard(a.name());
  bool wb = symbols::is_wildcard(b.name());
  if (!wa || !wb) return a.name() == b.name();
  auto f = fwd.find(b.name());
  auto r = bwd.find(a.name());
  if (f == fwd.end() && r == bwd.end()) {
    fwd.emplace(b.name(), a.name());
    bwd.emplace(a.name(), b.name());
    return true;
  }
  return f != fwd.end() && f->second == a.name();
}

}  // namespace

bool equal_up_to_wildcards(const SurfaceTerm& a, const SurfaceTerm& b,
                           std::map<std::string, std::string>& renaming) {
  std::map<std::string, std::string> fwd = renaming;
  std::map<std::string, std::string> bwd;
  for (const auto& [from, to] : fwd) bwd.emplace(to, from);
  Binders binders;
  if (!equal_rec(a, b, binders, fwd, bwd)) return false;
  renaming = std::move(fwd);
  return true;
}

std::optional<Instantiation> merge(const Instantiation& a, const Instantiation& b) {
  if (a.fact != b.fact) return std::nullopt;
  std::map<std::string, std::string> renaming;
  for (const auto& [v, t] : b.bindings) {
    const SurfaceTerm* mine = a.find(v);
    if (mine != nullptr && !equal_up_to_wildcards(*mine, t, renaming)) {
      return std::nullopt;
    }
  }
  SurfaceSubst rename;
  for (const auto& [from, to] : renaming) rename.emplace(from, SurfaceTerm::var(to));
  Instantiation out = a;
  for (const auto& [v, t] : b.bindings) {
    if (a.find(v) == nullptr) {
      out.bindings.emplace_back(v, rename.empty() ? t : substitute(t, rename));
    }
  }
  return out;
}

std::vector<Instantiation> merge_all(const std::vector<Instantiation>& insts) {
  std::vector<Instantiation> groups;
  for (const Instantiation& inst : insts) {
    bool merged = false;
    for (Instantiation& g : groups) {
      if (auto m = merge(g, inst)) {
        g = std::move(*m);
        merged = true;
        break;
      }
    }
    if (!merged) groups.push_back(inst);
  }
  return groups;
}

}  // namespace parakeet
