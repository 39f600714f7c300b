#pragma once

#include "tutteforge/bipoly.hpp"
#include "tutteforge/multigraph.hpp"

#include <atomic>
#include <cstdint>
#include <mutex>
#include <string>
#include <unordered_map>

namespace tutteforge {

enum class EdgePickPolicy { max_degree_sum, first_id };

struct EngineConfig {
    bool memo_enabled = true;
    int memo_canonical_max_vertices = 10;
    EdgePickPolicy edge_pick_policy = EdgePickPolicy::max_degree_sum;
    int parallel_tasks = 1;
};

// Shared memo keyed by canonical code. Get-or-insert is atomic; concurrent
// duplicate computation of a key is permitted and idempotent.
class MemoCache {
public:
    bool lookup(const std::string& key, BiPoly& out);
    void insert(const std::string& key, const BiPoly& value);
    std::uint64_t hits() const { return hits_.load(); }
    std::uint64_t misses() const { return misses_.load(); }
    std::size_t size() const;

private:
    mutable std::mutex mu_;
    std::unordered_map<std::string, BiPoly> map_;
    std::atomic<std::uint64_t> hits_{0}, misses_{0};
};

struct EngineStats {
    std::atomic<std::uint64_t> nodes{0};
    std::atomic<std::uint64_t> loop_strips{0};
    std::atomic<std::uint64_t> factor_splits{0};  // component/block factorizations
    std::atomic<std::uint64_t> bridge_factors{0};
    std::atomic<std::uint64_t> parallel_bundles{0};
    std::atomic<std::uint64_t> plain_splits{0};
    std::atomic<std::uint64_t> memo_hits{0};
    std::atomic<std::uint64_t> memo_misses{0};

    std::string report() const;  // key=value lines
};

// Brute-force subset expansion of the rank generating form; exact, bounded by
// edge_limit (LimitError above it).
BiPoly tutte_subset_expansion(const Multigraph& g, int edge_limit = 20);

// Deletion-contraction engine with loop stripping, component/block
// factorization, bridge factors, parallel-bundle reduction, and canonical-code
// memoization below a vertex threshold.
BiPoly tutte_dc(const Multigraph& g, const EngineConfig& cfg, MemoCache& cache,
                EngineStats* stats = nullptr);

// Convenience wrapper: default config, private cache.
BiPoly tutte(const Multigraph& g);

bool t_equivalent(const Multigraph& g, const Multigraph& h);

// Independent brute force over edge subsets of size |V|-1; used to
// cross-check T(1,1). PreconditionError on disconnected input.
Int spanning_tree_count(const Multigraph& g);

}  // namespace tutteforge
