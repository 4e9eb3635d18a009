#include "pgreedy/parallel.hpp"

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace pgreedy {

namespace {
// Below this many indices per worker the thread start-up dominates.
constexpr std::size_t kMinChunk = 512;
}  // namespace

unsigned Workers::resolved() const noexcept {
  if (count_ != 0) return count_;
  return std::max(1u, std::thread::hardware_concurrency());
}

void parallel_for(const Workers& workers, std::size_t n,
                  const std::function<void(std::size_t, std::size_t)>& body) {
  if (n == 0) return;
  const std::size_t max_chunks = std::max<std::size_t>(1, n / kMinChunk);
  const std::size_t chunks = std::min<std::size_t>(workers.resolved(), max_chunks);
  if (chunks <= 1) {
    body(0, n);
    return;
  }

  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(chunks);
  threads.reserve(chunks - 1);
  const std::size_t step = (n + chunks - 1) / chunks;
  for (std::size_t c = 1; c < chunks; ++c) {
    const std::size_t begin = std::min(n, c * step);
    const std::size_t end = std::min(n, begin + step);
    threads.emplace_back([&, c, begin, end] {
      try {
        body(begin, end);
      } catch (...) {
        errors[c] = std::current_exception();
      }
    });
  }
  try {
    body(0, std::min(n, step));
  } catch (...) {
    errors[0] = std::current_exception();
  }
  for (auto& t : threads) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace pgreedy
