#include "rlbwt/parallel.hpp"

#include <charconv>
#include <cstdlib>
#include <string_view>

namespace rlbwt {

std::size_t resolve_threads(std::size_t fallback) {
  if (const char* env = std::getenv("RLBWT_ORDER_THREADS")) {
    std::string_view s(env);
    std::size_t value = 0;
    const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), value);
    if (ec == std::errc{} && ptr == s.data() + s.size() && value > 0) return value;
  }
  if (fallback > 0) return fallback;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

}  // namespace rlbwt
