#include "wreathkit/parallel.hpp"

#include <cstdlib>
#include <exception>
#include <string>
#include <thread>
#include <vector>

namespace wreathkit {

  std::size_t thread_count() {
    if (char const* env = std::getenv("WREATHKIT_THREADS")) {
      try {
        long const v = std::stol(env);
        if (v > 0) {
          return static_cast<std::size_t>(v);
        }
      } catch (std::exception const&) {
        // fall through to the default
      }
    }
    auto const hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
  }

  std::size_t parallel_chunks(
      std::size_t                                                   n,
      std::function<void(std::size_t, std::size_t, std::size_t)> const& fn) {
    std::size_t const workers = std::max<std::size_t>(
        1, std::min(thread_count(), n));
    std::size_t const step = (n + workers - 1) / std::max<std::size_t>(workers, 1);
    if (workers == 1) {
      fn(0, 0, n);
      return 1;
    }
    std::vector<std::thread>        pool;
    std::vector<std::exception_ptr> errors(workers);
    for (std::size_t k = 0; k < workers; ++k) {
      std::size_t const b = std::min(n, k * step);
      std::size_t const e = std::min(n, b + step);
      pool.emplace_back([&, k, b, e] {
        try {
          fn(k, b, e);
        } catch (...) {
          errors[k] = std::current_exception();
        }
      });
    }
    for (auto& t : pool) {
      t.join();
    }
    for (auto& err : errors) {
      if (err) {
        std::rethrow_exception(err);
      }
    }
    return workers;
  }

}  // namespace wreathkit
