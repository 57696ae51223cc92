// parallel.hpp — static-partition parallel loop; GREENCUT_THREADS caps the
// worker count. Deterministic: each index writes its own slot.
#pragma once

#include <cstddef>
#include <functional>

namespace greencut {

int thread_cap();
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace greencut
