#include "negcurv/parallel.hpp"

#include <cstdlib>
#include <string>

namespace negcurv {

unsigned worker_count() {
  if (const char* env = std::getenv("NEGCURV_THREADS")) {
    try {
      const long v = std::stol(env);
      if (v > 0) return static_cast<unsigned>(v);
    } catch (...) {
    }
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

}  // namespace negcurv
