#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "rlbwt/neighborhood.hpp"
#include "rlbwt/stats.hpp"
#include "rlbwt/text.hpp"

namespace rlbwt {

/// Evaluation cap used when none is given.
inline constexpr std::size_t kDefaultBudget = 10'000'000;

enum class Termination { kLocalMinimum, kBudget };

const char* to_string(Termination t) noexcept;
/// Throws kParse.
Termination parse_termination(std::string_view s);

struct TracePoint {
  std::size_t step = 0;
  std::size_t fitness = 0;

  friend bool operator==(const TracePoint&, const TracePoint&) = default;
};

struct SearchResult {
  Ordering best_ordering;
  std::size_t initial_fitness = 0;
  std::size_t best_fitness = 0;
  /// Every fitness evaluation, the initial one included.
  std::size_t steps = 0;
  /// Evaluation index of the last accepted improvement (1 if none).
  std::size_t hitting_step = 1;
  /// One point per accepted improvement; fitness strictly decreases.
  std::vector<TracePoint> trace;
  Termination terminated = Termination::kLocalMinimum;

  friend bool operator==(const SearchResult&, const SearchResult&) = default;
};

/// First-improvement local search. Each accepted move restarts the scan at the
/// head of the first operator's list; the second operator of a combined spec
/// is only scanned once the first is exhausted. Random order reshuffles every
/// list after each improvement, drawing from an RNG seeded with `seed`.
SearchResult first_improvement_search(const Text& text, const Ordering& init,
                                      const NeighborhoodSpec& spec,
                                      std::size_t budget = kDefaultBudget, std::uint64_t seed = 0);

struct SampleStats {
  std::size_t samples = 0;
  std::vector<std::size_t> fitness;
  std::vector<double> percent;
  Summary percent_summary;
  /// Strict running-minimum updates; the first sample counts.
  std::size_t improvements = 0;
  Ordering best_ordering;
  std::size_t best_fitness = 0;
};

/// Sample k is the Fisher-Yates shuffle seeded with mix_seed(seed, k), so the
/// result does not depend on `threads`.
SampleStats random_sampling(const Text& text, std::size_t samples, std::uint64_t seed,
                            std::size_t threads = 1);

/// Sum over i = 0..samples of 1/(i+1).
double harmonic_bound(std::size_t samples);

struct ExhaustiveEntry {
  Ordering ordering;
  std::size_t fitness = 0;
  double percent = 0;
};

struct ExhaustiveStats {
  /// All σ! orderings in lexicographic order of the permutation.
  std::vector<ExhaustiveEntry> results;
  Summary percent_summary;
  std::size_t best_index = 0;
  std::size_t worst_index = 0;

  const ExhaustiveEntry& best() const { return results[best_index]; }
  const ExhaustiveEntry& worst() const { return results[worst_index]; }
};

inline constexpr std::size_t kDefaultSigmaCap = 8;

/// Throws kAlphabetTooLarge when σ exceeds `sigma_cap`.
ExhaustiveStats exhaustive_search(const Text& text, std::size_t sigma_cap = kDefaultSigmaCap);

}  // namespace rlbwt
