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

#include <filesystem>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "hierarchon/hierarchy.hpp"

namespace hierarchon {

inline constexpr int kCatalogVersion = 1;

/// FNV-1a over the serialised gate list; identical catalogs give identical hashes.
uint64_t content_hash(const LevelCatalog& c);

/// Writes {version, d, n, k, conductor, count, library_version, gates, content_hash} as JSON.
void write_catalog(const LevelCatalog& c, std::ostream& os);
/// Streaming parse; throws std::runtime_error on malformed input or a content-hash mismatch.
LevelCatalog read_catalog(std::istream& is);

/// One file per level: <root>/d{d}_n{n}/level_{k}.json.
class CatalogStore {
   public:
    explicit CatalogStore(std::filesystem::path root) : root_(std::move(root)) {}

    const std::filesystem::path& root() const { return root_; }
    std::filesystem::path path_for(unsigned d, unsigned n, unsigned k) const;
    bool has(unsigned d, unsigned n, unsigned k) const;
    std::optional<LevelCatalog> load(unsigned d, unsigned n, unsigned k) const;
    /// Atomic replace via a temporary file.
    void save(const LevelCatalog& c) const;

   private:
    std::filesystem::path root_;
};

/// Explicit directory, else $HIERARCHON_CACHE, else "cache".
std::filesystem::path resolve_cache_dir(const std::optional<std::string>& explicit_dir);

struct BuiltLevel {
    LevelCatalog catalog;
    bool from_cache = false;
    LevelStats stats;
};

/// Levels 1..max_level, loading cached levels and enumerating (and caching) the rest.
/// `store` may be null to disable caching. `on_level` runs after each level is ready.
std::vector<BuiltLevel> build_up_to(unsigned d, unsigned n, unsigned max_level, const CatalogStore* store,
                                    const EnumerateOptions& opts,
                                    const std::function<void(const BuiltLevel&)>& on_level = {});

}  // namespace hierarchon
