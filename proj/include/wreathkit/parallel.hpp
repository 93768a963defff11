#pragma once

#include <cstddef>
#include <functional>

namespace wreathkit {

  //! Worker cap: WREATHKIT_THREADS when set to a positive integer,
  //! otherwise the hardware concurrency (at least 1).
  std::size_t thread_count();

  //! Splits [0, n) into contiguous chunks, one per worker, and calls
  //! fn(chunk, begin, end) for each.  Chunk k always covers the k-th slice,
  //! so callers that store per-chunk results and merge them in chunk order
  //! get output identical to a sequential run.
  std::size_t parallel_chunks(
      std::size_t                                                   n,
      std::function<void(std::size_t, std::size_t, std::size_t)> const& fn);

}  // namespace wreathkit
