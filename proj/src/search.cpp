#include "rlbwt/search.hpp"

#include <algorithm>
#include <memory>

#include "rlbwt/error.hpp"
#include "rlbwt/init.hpp"
#include "rlbwt/parallel.hpp"
#include "rlbwt/random.hpp"
#include "rlbwt/rle.hpp"

namespace rlbwt {

const char* to_string(Termination t) noexcept {
  return t == Termination::kLocalMinimum ? "local_minimum" : "budget";
}

Termination parse_termination(std::string_view s) {
  if (s == "local_minimum") return Termination::kLocalMinimum;
  if (s == "budget") return Termination::kBudget;
  throw Error(ErrorKind::kParse, "unknown termination '" + std::string(s) + "'");
}

SearchResult first_improvement_search(const Text& text, const Ordering& init,
                                      const NeighborhoodSpec& spec, std::size_t budget,
                                      std::uint64_t seed) {
  if (budget == 0) throw Error(ErrorKind::kInvalidArgument, "budget must be at least 1");
  FitnessEvaluator evaluate(text);
  Rng rng(seed);

  std::vector<Byte> current(init.perm().begin(), init.perm().end());
  std::vector<Byte> candidate(current.size());

  SearchResult result;
  result.initial_fitness = result.best_fitness = evaluate(current);
  result.steps = 1;

  std::vector<std::vector<Move>> lists;
  for (MoveKind kind : spec.phases()) {
    lists.push_back(lex_moves(kind, current.size()));
    order_moves(lists.back(), spec.order, rng);
  }

  for (;;) {
    bool improved = false;
    for (const auto& moves : lists) {
      for (const Move& move : moves) {
        if (result.steps >= budget) {
          result.terminated = Termination::kBudget;
          result.best_ordering = Ordering(std::move(current));
          return result;
        }
        candidate = current;
        apply_move(std::span<Byte>(candidate), move);
        const std::size_t f = evaluate(candidate);
        ++result.steps;
        if (f < result.best_fitness) {
          current.swap(candidate);
          result.best_fitness = f;
          result.hitting_step = result.steps;
          result.trace.push_back({result.steps, f});
          improved = true;
          break;
        }
      }
      if (improved) break;
    }
    if (!improved) break;
    if (spec.order == NeighborOrder::kRandom) {
      for (auto& moves : lists) fisher_yates(std::span<Move>(moves), rng);
    }
  }
  result.terminated = Termination::kLocalMinimum;
  result.best_ordering = Ordering(std::move(current));
  return result;
}

SampleStats random_sampling(const Text& text, std::size_t samples, std::uint64_t seed,
                            std::size_t threads) {
  if (samples == 0) throw Error(ErrorKind::kInvalidArgument, "need at least one sample");
  const Alphabet alphabet = scan_alphabet(text);
  threads = std::max<std::size_t>(1, std::min(threads, samples));

  std::vector<std::unique_ptr<FitnessEvaluator>> evaluators;
  for (std::size_t w = 0; w < threads; ++w) evaluators.push_back(std::make_unique<FitnessEvaluator>(text));

  SampleStats stats;
  stats.samples = samples;
  stats.fitness.resize(samples);
  parallel_for(samples, threads, [&](std::size_t k, std::size_t worker) {
    stats.fitness[k] = (*evaluators[worker])(random_ordering(alphabet, mix_seed(seed, k)));
  });

  stats.percent.reserve(samples);
  std::size_t best_index = 0;
  for (std::size_t k = 0; k < samples; ++k) {
    stats.percent.push_back(evaluators.front()->percent(stats.fitness[k]));
    if (k == 0 || stats.fitness[k] < stats.fitness[best_index]) {
      best_index = k;
      ++stats.improvements;
    }
  }
  stats.percent_summary = summarize(stats.percent);
  stats.best_fitness = stats.fitness[best_index];
  stats.best_ordering = random_ordering(alphabet, mix_seed(seed, best_index));
  return stats;
}

double harmonic_bound(std::size_t samples) {
  double sum = 0;
  // Smallest terms first for accuracy.
  for (std::size_t i = samples + 1; i > 0; --i) sum += 1.0 / static_cast<double>(i);
  return sum;
}

ExhaustiveStats exhaustive_search(const Text& text, std::size_t sigma_cap) {
  const Alphabet alphabet = scan_alphabet(text);
  if (alphabet.size() > sigma_cap) {
    throw Error(ErrorKind::kAlphabetTooLarge, "alphabet size " + std::to_string(alphabet.size()) +
                                                  " exceeds cap " + std::to_string(sigma_cap));
  }
  FitnessEvaluator evaluate(text);
  ExhaustiveStats stats;
  std::vector<Byte> perm(alphabet.symbols().begin(), alphabet.symbols().end());
  do {
    const std::size_t f = evaluate(perm);
    stats.results.push_back({Ordering(perm), f, evaluate.percent(f)});
  } while (std::next_permutation(perm.begin(), perm.end()));

  std::vector<double> percents;
  percents.reserve(stats.results.size());
  for (std::size_t i = 0; i < stats.results.size(); ++i) {
    percents.push_back(stats.results[i].percent);
    if (stats.results[i].fitness < stats.results[stats.best_index].fitness) stats.best_index = i;
    if (stats.results[i].fitness > stats.results[stats.worst_index].fitness) stats.worst_index = i;
  }
  stats.percent_summary = summarize(percents);
  return stats;
}

}  // namespace rlbwt
