#include "thagq/parallel.hpp"

#include <cstdlib>
#include <string>

namespace thagq {

unsigned thread_count() {
  if (const char* env = std::getenv("THAGQ_THREADS")) {
    try {
      long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (const std::exception&) {
    }
  }
  unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace thagq
