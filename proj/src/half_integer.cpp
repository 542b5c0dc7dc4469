#include "tspwalk/half_integer.hpp"

#include "tspwalk/error.hpp"

namespace tspwalk {

HalfInteger HalfInteger::from_quarters(long long quarters) {
  if (quarters % 2 != 0) {
    fail(ErrorKind::kBadInput, "value " + std::to_string(quarters) + "/4 is not half-integral");
  }
  return HalfInteger(static_cast<int>(quarters / 2));
}

std::string HalfInteger::to_string() const {
  if (is_integer()) return std::to_string(twice_ / 2);
  return std::to_string(twice_) + "/2";
}

}  // namespace tspwalk
