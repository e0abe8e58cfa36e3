#include "localelab/parallel.hpp"

#include <cstdlib>
#include <string>

namespace localelab {

unsigned thread_count() {
  if (const char* env = std::getenv("LOCALELAB_THREADS")) {
    try {
      const long value = std::stol(env);
      if (value > 0) return static_cast<unsigned>(value);
    } catch (const std::exception&) {
    }
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace localelab
