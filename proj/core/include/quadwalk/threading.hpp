#pragma once

#include <cstdint>
#include <functional>

namespace quadwalk {

// Global worker cap for parallel region scans. Thread count never changes
// results: work is partitioned into fixed chunks and merged in chunk order.
void set_max_threads(unsigned n);
unsigned max_threads();

// Runs fn(chunk_index) for chunk_index in [0, chunks) on up to max_threads()
// workers. Rethrows the first worker exception.
void parallel_chunks(std::uint64_t chunks, const std::function<void(std::uint64_t)>& fn);

}  // namespace quadwalk
