#pragma once

#include <cstddef>

namespace coarse {

/// Worker count for internal parallel loops: COARSE_LAB_THREADS when set to a
/// positive integer, otherwise the hardware concurrency. Results never depend on it.
std::size_t thread_count();

}  // namespace coarse
