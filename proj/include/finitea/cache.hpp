#pragma once

// Append-only JSON-lines cache of per-prime residues, and the prime searches
// that feed it. One record per (tag, params, prime).

#include "finitea/modular.hpp"

#include <json.hpp>

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace finitea {

struct ResidueCacheRecord {
    std::string tag;  // "e_A", "gamma_W", "gamma_M"
    std::map<std::string, std::string> params;
    u64 prime = 0;
    std::optional<u64> residue;  // nullopt: undefined at this prime
    friend bool operator==(const ResidueCacheRecord&, const ResidueCacheRecord&) = default;
};

nlohmann::json to_json(const ResidueCacheRecord& r);
ResidueCacheRecord cache_record_from_json(const nlohmann::json& j);
/// Compact single-line form, keys sorted.
std::string to_line(const ResidueCacheRecord& r);

/// Recomputes a record's residue from scratch. Throws std::invalid_argument
/// for an unknown tag or missing parameter.
std::optional<u64> compute_residue(const std::string& tag, const std::map<std::string, std::string>& params, u64 p);

/// $FINITEA_CACHE_DIR, else $HOME/.cache/finitea, else ./.finitea-cache.
std::filesystem::path default_cache_dir();

class ResidueCache {
public:
    explicit ResidueCache(std::filesystem::path dir);

    const std::filesystem::path& file() const { return file_; }
    const std::vector<ResidueCacheRecord>& records() const { return records_; }
    /// Lines that failed to parse on load.
    std::size_t malformed_lines() const { return malformed_; }

    const ResidueCacheRecord* find(const std::string& tag, const std::map<std::string, std::string>& params,
                                   u64 prime) const;
    /// Writes records not already present; returns how many were new.
    std::size_t append(const std::vector<ResidueCacheRecord>& records);

private:
    static std::string key(const std::string& tag, const std::map<std::string, std::string>& params, u64 prime);

    std::filesystem::path file_;
    std::vector<ResidueCacheRecord> records_;
    std::unordered_map<std::string, std::size_t> index_;
    std::size_t malformed_ = 0;
};

enum class SearchTarget { eA_zero, wilson };

struct SearchResult {
    std::vector<u64> hits;
    std::size_t from_cache = 0;
    std::size_t computed = 0;
};

/// Primes p in [lo, hi] where the p-component of e_A (resp. the Wilson
/// quotient) is 0. `cache` may be null.
SearchResult search_primes(SearchTarget target, u64 lo, u64 hi, ResidueCache* cache, unsigned threads = 1);

struct CacheCheck {
    std::size_t sampled = 0;
    std::vector<ResidueCacheRecord> mismatches;
};

/// Recomputes a seeded random sample of cached records.
CacheCheck verify_cache_sample(const ResidueCache& cache, std::size_t sample, u64 seed);

}  // namespace finitea
