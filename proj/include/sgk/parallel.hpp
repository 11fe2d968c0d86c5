#pragma once

#include <cstddef>
#include <functional>

namespace sgk {

/// Worker count for kernels: SGK_THREADS when set to a positive integer, otherwise the
/// hardware concurrency. Read on every call so tests can vary it.
std::size_t thread_count();

namespace detail {

/// Number of chunks to split n items into; 1 unless `parallel` and several workers exist.
std::size_t chunk_count_for(std::size_t n, bool parallel);

/// Splits [0, n) into `chunks` contiguous ranges and runs body(chunk, begin, end) for each,
/// one thread per chunk. Chunks are numbered in index order so callers can stitch per-chunk
/// results deterministically.
void parallel_chunks(std::size_t n, std::size_t chunks,
                     const std::function<void(std::size_t, std::size_t, std::size_t)>& body);

}  // namespace detail
}  // namespace sgk
