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


#include "parakeet/decoder.h"

#include <algorithm>

namespace parakeet {

namespace {

bool known_symbol(const std::string& name, const DecodeInfo& info) {
  return info.constants.contains(name) || info.lambda_defs.contains(name) ||
         info.skolems.contains(name) || symbols::is_skolem(name) ||
         name == symbols::kUndefined;
}

SurfaceTerm replace_defined(const SurfaceTerm& t, const DecodeInfo& info) {
  switch (t.kind()) {
    case SurfaceTerm::Kind::kConst: {
      auto it = info.lambda_defs.find(t.name());
      return it == info.lambda_defs.end() ? t : replace_defined(it->second, info);
    }
    case SurfaceTerm::Kind::kApp:
      return SurfaceTerm::app(replace_defined(t.fun(), info),
                              replace_defined(t.arg(), info));
    case SurfaceTerm::Kind::kLam:
      return SurfaceTerm::lam(t.name(), replace_defined(t.body(), info));
    case SurfaceTerm::Kind::kVar:
      break;
  }
  return t;
}

bool skolem_headed(const SurfaceTerm& t, const DecodeInfo& info) {
  Spine s = spine(t);
  return s.head.is_const() &&
         (symbols::is_skolem(s.head.name()) || info.skolems.contains(s.head.name()));
}

SurfaceTerm replace_leftovers(const SurfaceTerm& t, DecodeContext& ctx,
                              std::map<std::string, SurfaceTerm>& seen) {
  SurfaceSubst sub;
  for (const std::string& v : free_vars(t)) {
    if (symbols::is_wildcard(v)) continue;
    auto [it, fresh] = seen.emplace(v, SurfaceTerm::constant(std::string(symbols::kUndefined)));
    if (fresh && !ctx.undefined) it->second = ctx.fresh_wildcard();
    sub.emplace(v, it->second);
  }
  return sub.empty() ? t : substitute(t, sub);
}

}  // namespace

SurfaceTerm DecodeContext::fresh_wildcard() {
  return SurfaceTerm::var(std::string(symbols::kWildcardPrefix) +
                          std::to_string(++wildcard_counter));
}

const SurfaceTerm* Instantiation::find(const std::string& var) const {
  for (const auto& [v, t] : bindings) {
    if (v == var) return &t;
  }
  return nullptr;
}

SurfaceSubst Instantiation::as_subst() const {
  return SurfaceSubst(bindings.begin(), bindings.end());
}

SurfaceTerm decode_term(const Term& t, const DecodeContext& ctx) {
  if (t.is_var()) return SurfaceTerm::var(t.name());
  if (t.name() == symbols::kApp && t.arity() == 2) {
    return SurfaceTerm::app(decode_term(t.arg(0), ctx), decode_term(t.arg(1), ctx));
  }
  if (t.name() == symbols::kBool && t.arity() == 1) return decode_term(t.arg(0), ctx);
  if (ctx.info != nullptr && !known_symbol(t.name(), *ctx.info)) {
    throw DecodeError("unknown symbol '" + t.name() + "'");
  }
  std::vector<SurfaceTerm> args;
  for (const Term& a : t.args()) args.push_back(decode_term(a, ctx));
  return SurfaceTerm::apply(SurfaceTerm::constant(t.name()), args);
}

SurfaceTerm expand_combinators(const SurfaceTerm& t, const DecodeContext& ctx) {
  SurfaceTerm expanded = ctx.info ? replace_defined(t, *ctx.info) : t;
  try {
    return canonical_binders(beta_eta_normalize(expanded));
  } catch (const NormalizationError& e) {
    throw DecodeError(e.what());
  }
}

SurfaceTerm eliminate_skolems(const SurfaceTerm& t, DecodeContext& ctx,
                              std::map<std::string, SurfaceTerm>& shared) {
  static const DecodeInfo kNoInfo;
  const DecodeInfo& info = ctx.info ? *ctx.info : kNoInfo;
  if (skolem_headed(t, info)) {
    auto [it, fresh] = shared.emplace(alpha_key(t), SurfaceTerm::var(""));
    if (fresh) it->second = ctx.fresh_wildcard();
    return it->second;
  }
  switch (t.kind()) {
    case SurfaceTerm::Kind::kApp:
      return SurfaceTerm::app(eliminate_skolems(t.fun(), ctx, shared),
                              eliminate_skolems(t.arg(), ctx, shared));
    case SurfaceTerm::Kind::kLam:
      return SurfaceTerm::lam(t.name(), eliminate_skolems(t.body(), ctx, shared));
    default:
      return t;
  }
}

SurfaceTerm eliminate_skolems(const SurfaceTerm& t, DecodeContext& ctx) {
  std::map<std::string, SurfaceTerm> shared;
  return eliminate_skolems(t, ctx, shared);
}

Instantiation finalize(const std::string& fact,
                       const std::vector<std::pair<std::string, SurfaceTerm>>& bindings,
                       const std::vector<std::string>& domain,
                       const std::vector<std::string>& order, DecodeContext& ctx) {
  Instantiation out{fact, {}};
  std::map<std::string, SurfaceTerm> leftovers;
  for (const auto& [v, t] : bindings) {
    out.bindings.emplace_back(v, replace_leftovers(t, ctx, leftovers));
  }
  for (const std::string& v : domain) {
    if (out.find(v) != nullptr) continue;
    out.bindings.emplace_back(
        v, ctx.undefined ? SurfaceTerm::constant(std::string(symbols::kUndefined))
                         : ctx.fresh_wildcard());
  }
  auto rank = [&](const std::string& v) {
    auto it = std::find(order.begin(), order.end(), v);
    return std::make_pair(it - order.begin(), v);
  };
  std::stable_sort(out.bindings.begin(), out.bindings.end(),
                   [&](const auto& a, const auto& b) { return rank(a.first) < rank(b.first); });
  return out;
}

DecodedInstantiation decode_instantiation(const RawInstantiation& raw,
                                          const std::vector<std::string>& order,
                                          DecodeContext& ctx) {
  DecodedInstantiation out;
  std::map<std::string, SurfaceTerm> shared;
  std::vector<std::pair<std::string, SurfaceTerm>> decoded;
  for (const auto& [v, image] : raw.bindings) {
    try {
      SurfaceTerm t = expand_combinators(decode_term(image, ctx), ctx);
      decoded.emplace_back(v, eliminate_skolems(t, ctx, shared));
    } catch (const DecodeError& e) {
      out.errors.push_back(raw.fact + "." + v + ": " + e.what());
      decoded.emplace_back(v, ctx.fresh_wildcard());
    }
  }
  out.inst = finalize(raw.fact, decoded, raw.domain, order, ctx);
  return out;
}

std::string to_string(const Instantiation& inst, const PrintStyle& style) {
  std::string out = inst.fact + " with {";
  for (std::size_t i = 0; i < inst.bindings.size(); ++i) {
    if (i > 0) out += ", ";
    out += inst.bindings[i].first + " -> " + to_string(inst.bindings[i].second, style);
  }
  return out + "}";
}

}  // namespace parakeet
