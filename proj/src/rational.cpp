#include "convertbw/rational.hpp"

namespace convertbw {

std::int64_t to_int64(const BigInt& v) {
  if (!v.fits_slong_p()) {
    throw Error("integer too large for serialization: " + v.get_str());
  }
  return static_cast<std::int64_t>(v.get_si());
}

}  // namespace convertbw
