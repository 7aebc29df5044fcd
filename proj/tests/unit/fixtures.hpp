// Copyright 2026 The Hierarchon Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#pragma once

#include <map>
#include <tuple>

#include "hierarchon/hierarchy.hpp"

namespace hierarchon::testing {

/// Enumerated level k of (d, n), built once per process.
inline const LevelCatalog& catalog(unsigned d, unsigned n, unsigned k) {
    static std::map<std::tuple<unsigned, unsigned, unsigned>, LevelCatalog> cache;
    const auto key = std::make_tuple(d, n, k);
    if (auto it = cache.find(key); it != cache.end()) return it->second;
    const LevelCatalog* lower = k > 1 ? &catalog(d, n, k - 1) : nullptr;
    return cache.emplace(key, enumerate_level(d, n, k, lower)).first->second;
}

}  // namespace hierarchon::testing
