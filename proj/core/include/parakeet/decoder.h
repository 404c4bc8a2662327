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


// Turning first-order substitution images back into surface terms:
// app-spines become application, combinators and supercombinators are
// replaced by their lambda definitions and beta-eta-normalized, Skolem
// terms are erased to wildcards, and leftover variables are finalized.

#ifndef PARAKEET_DECODER_H_
#define PARAKEET_DECODER_H_

#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "parakeet/clausifier.h"
#include "parakeet/instantiation.h"
#include "parakeet/surface.h"
#include "parakeet/term.h"

namespace parakeet {

class DecodeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct DecodeContext {
  const DecodeInfo* info = nullptr;
  bool undefined = true;
  std::size_t wildcard_counter = 0;

  SurfaceTerm fresh_wildcard();
};

// A user-facing instantiation. Bindings are kept in the order of the
// fact's free variables.
struct Instantiation {
  std::string fact;
  std::vector<std::pair<std::string, SurfaceTerm>> bindings;

  const SurfaceTerm* find(const std::string& var) const;
  bool empty() const { return bindings.empty(); }
  SurfaceSubst as_subst() const;
};

// Throws DecodeError on symbols the context does not know.
SurfaceTerm decode_term(const Term& t, const DecodeContext& ctx);

SurfaceTerm expand_combinators(const SurfaceTerm& t, const DecodeContext& ctx);

// Identical Skolem terms map to the same wildcard through `shared`, which
// is keyed by alpha_key of the erased term.
SurfaceTerm eliminate_skolems(const SurfaceTerm& t, DecodeContext& ctx,
                              std::map<std::string, SurfaceTerm>& shared);
SurfaceTerm eliminate_skolems(const SurfaceTerm& t, DecodeContext& ctx);

// Binds leftover non-wildcard variables and every unbound variable of
// `domain` to undefined, or to wildcards when ctx.undefined is false.
// `order` fixes the binding order; unknown names go last.
Instantiation finalize(const std::string& fact,
                       const std::vector<std::pair<std::string, SurfaceTerm>>& bindings,
                       const std::vector<std::string>& domain,
                       const std::vector<std::string>& order, DecodeContext& ctx);

struct DecodedInstantiation {
  Instantiation inst;
  // One message per binding that failed to decode; such a binding becomes
  // a wildcard.
  std::vector<std::string> errors;
};

// decode_term, expand_combinators, eliminate_skolems and finalize.
DecodedInstantiation decode_instantiation(const RawInstantiation& raw,
                                          const std::vector<std::string>& order,
                                          DecodeContext& ctx);

// F1 with {m -> 0, n -> Suc(x)}
std::string to_string(const Instantiation& inst, const PrintStyle& style = {});

}  // namespace parakeet

#endif  // PARAKEET_DECODER_H_
