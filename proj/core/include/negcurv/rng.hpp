#pragma once

#include <cstdint>

namespace negcurv {

/// Counter-based generator: the stream for (seed, index) depends on nothing
/// else, so the i-th sample of a run is the same whatever the sample count or
/// worker count. Mixing is SplitMix64; normals use Box-Muller so the sample
/// sets do not depend on the standard library's distributions.
class CounterRng {
 public:
  CounterRng(std::uint64_t seed, std::uint64_t index);

  std::uint64_t next_u64();
  /// Uniform on [0, 1).
  double uniform();
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal();

 private:
  std::uint64_t state_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

std::uint64_t splitmix64(std::uint64_t x);

}  // namespace negcurv
