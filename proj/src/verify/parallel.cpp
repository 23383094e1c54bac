#include "tauberkit/parallel.hpp"

#include <cstdlib>
#include <string>

namespace tauberkit {

std::size_t worker_count() {
  std::size_t n = std::max(1u, std::thread::hardware_concurrency());
  if (const char* env = std::getenv("TAUBERKIT_THREADS")) {
    try {
      const long cap = std::stol(env);
      if (cap >= 1) n = std::min<std::size_t>(n, static_cast<std::size_t>(cap));
    } catch (...) {
      // Unparsable values leave the default in place.
    }
  }
  return n;
}

}  // namespace tauberkit
