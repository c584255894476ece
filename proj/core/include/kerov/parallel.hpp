#pragma once

/// Deterministic fork-join reduction: the index range is split into
/// contiguous shards, each shard reduced on its own thread, and the shard
/// results combined in shard order, so the outcome does not depend on the
/// parallelism degree.

#include <cstdint>
#include <thread>
#include <vector>

namespace kerov {

template <class T, class ShardFn, class Combine>
T parallel_reduce(std::uint64_t begin, std::uint64_t end, unsigned threads, T init,
                  ShardFn shard_fn, Combine combine) {
  if (threads == 0) threads = 1;
  const std::uint64_t total = end > begin ? end - begin : 0;
  if (threads == 1 || total <= 1) {
    if (total > 0) init = combine(std::move(init), shard_fn(begin, end));
    return init;
  }
  const std::uint64_t shards = std::min<std::uint64_t>(threads, total);
  std::vector<T> results(static_cast<std::size_t>(shards), init);
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(shards));
  for (std::uint64_t s = 0; s < shards; ++s) {
    std::uint64_t lo = begin + total * s / shards;
    std::uint64_t hi = begin + total * (s + 1) / shards;
    pool.emplace_back([&, lo, hi, s] { results[static_cast<std::size_t>(s)] = shard_fn(lo, hi); });
  }
  for (auto& t : pool) t.join();
  for (auto& r : results) init = combine(std::move(init), std::move(r));
  return init;
}

}  // namespace kerov
