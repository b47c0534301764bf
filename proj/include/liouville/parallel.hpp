#pragma once

#include <cstddef>
#include <functional>
#include <thread>
#include <vector>

namespace liouville {

// Deterministic shard-parallel map/reduce: items are split into contiguous
// index ranges, each shard produces a partial result, and partials are merged
// in shard order. The result is independent of the number of workers.
template <typename Partial, typename PerShard, typename Merge>
Partial parallel_shards(std::size_t n_items, PerShard per_shard, Merge merge,
                        Partial init = Partial{}) {
    unsigned hw = std::thread::hardware_concurrency();
    std::size_t n_shards = hw == 0 ? 4 : hw;
    if (n_shards > n_items) n_shards = n_items == 0 ? 1 : n_items;
    std::vector<Partial> partials(n_shards);
    std::vector<std::thread> workers;
    workers.reserve(n_shards);
    for (std::size_t s = 0; s < n_shards; ++s) {
        std::size_t lo = n_items * s / n_shards;
        std::size_t hi = n_items * (s + 1) / n_shards;
        workers.emplace_back([&, s, lo, hi] { partials[s] = per_shard(s, lo, hi); });
    }
    for (auto& w : workers) w.join();
    Partial acc = std::move(init);
    for (auto& p : partials) acc = merge(std::move(acc), std::move(p));
    return acc;
}

} // namespace liouville
