#include "coarse/parallel.hpp"

#include <cstdlib>
#include <thread>

namespace coarse {

std::size_t thread_count() {
  if (const char* env = std::getenv("COARSE_LAB_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && v > 0) return static_cast<std::size_t>(v);
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

}  // namespace coarse
