#include "typoster/rng.hpp"

#include <limits>

namespace typoster {

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (hi <= lo) {
    return lo;
  }
  const std::uint64_t range = static_cast<std::uint64_t>(hi - lo) + 1;
  if (range == 0) {
    return static_cast<std::int64_t>(engine_());
  }
  const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
  const std::uint64_t limit = max - (max % range + 1) % range;
  std::uint64_t draw = engine_();
  while (draw > limit) {
    draw = engine_();
  }
  return lo + static_cast<std::int64_t>(draw % range);
}

}  // namespace typoster
