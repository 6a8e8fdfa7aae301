#include "finitea/cache.hpp"

#include "finitea/dobinski.hpp"
#include "finitea/finite_euler.hpp"
#include "finitea/parallel.hpp"
#include "finitea/prime_ctx.hpp"
#include "finitea/primes.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <random>
#include <stdexcept>

namespace finitea {

nlohmann::json to_json(const ResidueCacheRecord& r) {
    nlohmann::json j = {{"tag", r.tag}, {"params", r.params}, {"prime", r.prime}};
    j["residue"] = r.residue ? nlohmann::json(*r.residue) : nlohmann::json(nullptr);
    return j;
}

ResidueCacheRecord cache_record_from_json(const nlohmann::json& j) {
    ResidueCacheRecord r;
    r.tag = j.at("tag").get<std::string>();
    r.params = j.at("params").get<std::map<std::string, std::string>>();
    r.prime = j.at("prime").get<u64>();
    if (!j.at("residue").is_null()) r.residue = j.at("residue").get<u64>();
    return r;
}

std::string to_line(const ResidueCacheRecord& r) { return to_json(r).dump(); }

std::optional<u64> compute_residue(const std::string& tag, const std::map<std::string, std::string>& params, u64 p) {
    if (tag == "gamma_W") return wilson_quotient(p);
    if (tag == "e_A") {
        auto d = dobinski_residues(1, 0, 1, PrimeCtx(p));
        return d ? std::optional<u64>((*d)[0]) : std::nullopt;
    }
    if (tag == "gamma_M") {
        auto it = params.find("x");
        if (it == params.end()) throw std::invalid_argument("gamma_M needs parameter x");
        auto x = parse_rational(it->second);
        if (!x) throw std::invalid_argument("gamma_M: malformed x");
        return gamma_M_component(*x, PrimeCtx(p));
    }
    throw std::invalid_argument("unknown cache tag: " + tag);
}

std::filesystem::path default_cache_dir() {
    if (const char* dir = std::getenv("FINITEA_CACHE_DIR"); dir && *dir) return dir;
    if (const char* home = std::getenv("HOME"); home && *home) return std::filesystem::path(home) / ".cache" / "finitea";
    return ".finitea-cache";
}

ResidueCache::ResidueCache(std::filesystem::path dir) : file_(dir / "residues.jsonl") {
    std::ifstream in(file_);
    std::string line;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        try {
            auto rec = cache_record_from_json(nlohmann::json::parse(line));
            const std::string k = key(rec.tag, rec.params, rec.prime);
            if (index_.count(k)) continue;
            index_.emplace(k, records_.size());
            records_.push_back(std::move(rec));
        } catch (const nlohmann::json::exception&) {
            ++malformed_;
        }
    }
}

std::string ResidueCache::key(const std::string& tag, const std::map<std::string, std::string>& params, u64 prime) {
    return tag + '\x1f' + nlohmann::json(params).dump() + '\x1f' + std::to_string(prime);
}

const ResidueCacheRecord* ResidueCache::find(const std::string& tag, const std::map<std::string, std::string>& params,
                                             u64 prime) const {
    auto it = index_.find(key(tag, params, prime));
    return it == index_.end() ? nullptr : &records_[it->second];
}

std::size_t ResidueCache::append(const std::vector<ResidueCacheRecord>& records) {
    const std::size_t before = records_.size();
    for (const auto& r : records) {
        const std::string k = key(r.tag, r.params, r.prime);
        if (index_.count(k)) continue;
        index_.emplace(k, records_.size());
        records_.push_back(r);
    }
    if (records_.size() == before) return 0;
    std::filesystem::create_directories(file_.parent_path());
    std::ofstream out(file_, std::ios::app);
    if (!out) throw std::runtime_error("cannot open cache file " + file_.string());
    for (std::size_t i = before; i < records_.size(); ++i) out << to_line(records_[i]) << '\n';
    return records_.size() - before;
}

SearchResult search_primes(SearchTarget target, u64 lo, u64 hi, ResidueCache* cache, unsigned threads) {
    const std::string tag = target == SearchTarget::wilson ? "gamma_W" : "e_A";
    const std::map<std::string, std::string> params;
    const auto primes = sieve_primes(lo, hi);

    SearchResult out;
    std::vector<std::optional<u64>> residues(primes.size());
    std::vector<u64> todo;
    for (std::size_t i = 0; i < primes.size(); ++i) {
        if (const auto* hit = cache ? cache->find(tag, params, primes[i]) : nullptr) {
            residues[i] = hit->residue;
            ++out.from_cache;
        } else {
            todo.push_back(primes[i]);
        }
    }
    const auto fresh = parallel_map_primes(todo, threads, [&](u64 p) { return compute_residue(tag, params, p); });
    out.computed = todo.size();

    std::vector<ResidueCacheRecord> new_records;
    for (std::size_t i = 0, j = 0; i < primes.size(); ++i) {
        if (j < todo.size() && todo[j] == primes[i]) {
            residues[i] = fresh[j];
            new_records.push_back({tag, params, primes[i], fresh[j]});
            ++j;
        }
        if (residues[i] && *residues[i] == 0) out.hits.push_back(primes[i]);
    }
    if (cache) cache->append(new_records);
    return out;
}

CacheCheck verify_cache_sample(const ResidueCache& cache, std::size_t sample, u64 seed) {
    std::vector<const ResidueCacheRecord*> chosen;
    std::vector<const ResidueCacheRecord*> all;
    for (const auto& r : cache.records()) all.push_back(&r);
    std::sample(all.begin(), all.end(), std::back_inserter(chosen), sample, std::mt19937_64(seed));

    CacheCheck out;
    out.sampled = chosen.size();
    for (const auto* r : chosen)
        if (compute_residue(r->tag, r->params, r->prime) != r->residue) out.mismatches.push_back(*r);
    return out;
}

}  // namespace finitea
