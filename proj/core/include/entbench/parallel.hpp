#pragma once

#include <cstddef>
#include <functional>

namespace entb {

// Runs fn(i) for i in [0, n) on up to `jobs` threads. Work is split into
// fixed contiguous blocks, so any data written by index is identical for
// every jobs value. jobs == 0 means hardware concurrency.
void parallel_for(std::size_t n, std::size_t jobs, const std::function<void(std::size_t)>& fn);

std::size_t default_jobs();

}  // namespace entb
