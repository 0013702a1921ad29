#include "rlbwt/stats.hpp"

#include <algorithm>
#include <cmath>

#include "rlbwt/error.hpp"

namespace rlbwt {

Summary summarize(std::span<const double> values) {
  if (values.empty()) throw Error(ErrorKind::kEmptyGroup, "cannot summarize an empty group");
  Summary s;
  const auto [lo, hi] = std::minmax_element(values.begin(), values.end());
  s.min = *lo;
  s.max = *hi;
  double sum = 0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  double sq = 0;
  for (double v : values) sq += (v - s.mean) * (v - s.mean);
  s.std = std::sqrt(sq / static_cast<double>(values.size()));
  // Rounding can put the mean a hair outside [min, max] for constant input.
  s.mean = std::clamp(s.mean, s.min, s.max);
  return s;
}

}  // namespace rlbwt
