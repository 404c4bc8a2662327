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


// Merging decoded instantiations of the same fact. Two instantiations
// merge when every variable they both bind has alpha-equal images, with
// wildcards compared up to a consistent renaming.

#ifndef PARAKEET_MERGE_H_
#define PARAKEET_MERGE_H_

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "parakeet/decoder.h"

namespace parakeet {

// Wildcard renaming (from b's wildcards to a's) under which a and b are
// alpha-equal, extending `renaming`; nullopt if there is none.
bool equal_up_to_wildcards(const SurfaceTerm& a, const SurfaceTerm& b,
                           std::map<std::string, std::string>& renaming);

// The union of a and b, or nullopt if they disagree on a shared variable.
std::optional<Instantiation> merge(const Instantiation& a, const Instantiation& b);

// Greedy first-fit in input order.
std::vector<Instantiation> merge_all(const std::vector<Instantiation>& insts);

}  // namespace parakeet

#endif  // PARAKEET_MERGE_H_
