#pragma once

#include <cstddef>
#include <functional>

namespace pgreedy {

// Number of worker threads for data-parallel loops. 0 means "use
// std::thread::hardware_concurrency()".
class Workers {
 public:
  Workers() = default;
  explicit Workers(unsigned count) : count_(count) {}

  [[nodiscard]] unsigned resolved() const noexcept;

  static Workers single() { return Workers(1); }

 private:
  unsigned count_ = 0;
};

// Runs body(begin, end) over a fixed contiguous partition of [0, n).
// Partition boundaries depend only on n and the worker count, so any
// per-index computation gives identical results for any worker count.
void parallel_for(const Workers& workers, std::size_t n,
                  const std::function<void(std::size_t, std::size_t)>& body);

}  // namespace pgreedy
