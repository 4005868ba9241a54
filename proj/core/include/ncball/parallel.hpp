#pragma once

#include <cstddef>
#include <functional>
#include <vector>

namespace ncball {

/// Worker cap for parameter sweeps: NCBALL_THREADS if set and positive,
/// otherwise the hardware concurrency (at least 1).
std::size_t sweep_threads();

/// Runs task(i) for i in [0, count) on up to sweep_threads() workers.
/// Exceptions from tasks are rethrown (the first by index) after all
/// workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& task);

/// Evaluates fn over [0, count) concurrently; results are returned in index
/// order so reports assembled from them are deterministic.
template <class T, class Fn>
std::vector<T> parallel_map(std::size_t count, Fn&& fn) {
  std::vector<T> out(count);
  parallel_for(count, [&](std::size_t i) { out[i] = fn(i); });
  return out;
}

}  // namespace ncball
