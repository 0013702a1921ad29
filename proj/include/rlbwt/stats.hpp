#pragma once

#include <span>

namespace rlbwt {

/// Population statistics (std divides by N).
struct Summary {
  double min = 0;
  double max = 0;
  double mean = 0;
  double std = 0;
};

/// Throws kEmptyGroup on empty input.
Summary summarize(std::span<const double> values);

}  // namespace rlbwt
