#include "hypercop/half_int.hpp"

#include <charconv>

#include "hypercop/error.hpp"

namespace hypercop {

std::string HalfInt::to_string() const {
  std::string out = std::to_string(twice_ / 2);
  if (twice_ % 2 != 0) out += ".5";
  return out;
}

HalfInt parse_half_int(const std::string& text) {
  std::string_view body = text;
  bool half = false;
  if (body.size() >= 2 && body.substr(body.size() - 2) == ".5") {
    half = true;
    body.remove_suffix(2);
  } else if (body.size() >= 2 && body.substr(body.size() - 2) == ".0") {
    body.remove_suffix(2);
  }
  std::int64_t value = 0;
  auto [ptr, ec] = std::from_chars(body.data(), body.data() + body.size(), value);
  if (body.empty() || ec != std::errc{} || ptr != body.data() + body.size() || value < 0) {
    throw Error("not a nonnegative half-integer: '" + text + "'");
  }
  return HalfInt::from_twice(2 * value + (half ? 1 : 0));
}

}  // namespace hypercop
