#include <cmath>
#include <random>

#include "doctest.h"
#include "oracle.hpp"
#include "rlbwt/error.hpp"
#include "rlbwt/init.hpp"
#include "rlbwt/rle.hpp"
#include "rlbwt/search.hpp"
#include "rlbwt/transform.hpp"

using namespace rlbwt;

namespace {

Text txt(std::string_view s) { return Text(to_bytes(s), '$'); }
Ordering ascii(const Text& t) { return init_ordering(InitMethod{InitKind::kAscii}, t); }

/// Global optimum by the rotation-matrix oracle.
std::size_t brute_force_min(const Text& t) {
  const Alphabet a = scan_alphabet(t);
  std::size_t best = SIZE_MAX;
  for (const auto& perm : oracle::all_permutations({a.symbols().begin(), a.symbols().end()})) {
    best = std::min(best, oracle::rle_bytes(last_column(bwm_naive(t, Ordering(perm), true))));
  }
  return best;
}

bool is_local_minimum(const Text& t, const Ordering& o, const NeighborhoodSpec& spec) {
  const std::size_t f = fitness(t, o);
  for (const Move& m : enumerate_moves(spec, o.size())) {
    if (fitness(t, apply_move(o, m)) < f) return false;
  }
  return true;
}

Text random_text(std::mt19937& rng, std::size_t len, int sigma) {
  Bytes data(len);
  // Markov-ish text so orderings matter.
  Byte prev = 'a';
  for (auto& b : data) {
    b = rng() % 3 == 0 ? static_cast<Byte>('a' + rng() % sigma) : prev;
    prev = static_cast<Byte>('a' + (prev - 'a' + 1) % sigma);
  }
  return Text(data, '$');
}

void check_result_invariants(const SearchResult& r, std::size_t budget) {
  CHECK(r.steps <= budget);
  CHECK(r.best_fitness <= r.initial_fitness);
  std::size_t prev = r.initial_fitness;
  std::size_t prev_step = 1;
  for (const auto& p : r.trace) {
    CHECK(p.fitness < prev);
    CHECK(p.step > prev_step);
    prev = p.fitness;
    prev_step = p.step;
  }
  CHECK(r.hitting_step == (r.trace.empty() ? 1 : r.trace.back().step));
  if (!r.trace.empty()) CHECK(r.trace.back().fitness == r.best_fitness);
}

}  // namespace

TEST_CASE("search on cacatcg reaches a local minimum no better than the global one") {
  const Text t = txt("cacatcg");
  const std::size_t global = brute_force_min(t);
  CHECK(global == 10);
  const NeighborhoodSpec spec{Operators::kSwap, NeighborOrder::kLex};
  const SearchResult r = first_improvement_search(t, ascii(t), spec);
  CHECK(r.initial_fitness == 14);
  CHECK(r.best_fitness >= global);
  CHECK(r.best_fitness < 14);
  CHECK(r.terminated == Termination::kLocalMinimum);
  CHECK(fitness(t, r.best_ordering) == r.best_fitness);
  CHECK(is_local_minimum(t, r.best_ordering, spec));
  check_result_invariants(r, kDefaultBudget);
}

TEST_CASE("budget of one returns the initial ordering") {
  const Text t = txt("cacatcg");
  const SearchResult r = first_improvement_search(t, ascii(t), {}, 1);
  CHECK(r.best_ordering == ascii(t));
  CHECK(r.steps == 1);
  CHECK(r.terminated == Termination::kBudget);
  CHECK(r.trace.empty());
  CHECK_THROWS_AS(first_improvement_search(t, ascii(t), {}, 0), Error);
}

TEST_CASE("single-symbol alphabet is already a local minimum") {
  const Text t = txt("aaaa");
  for (const auto& spec : all_neighborhood_specs()) {
    const SearchResult r = first_improvement_search(t, ascii(t), spec);
    CHECK(r.terminated == Termination::kLocalMinimum);
    CHECK(r.steps == 1);
    CHECK(r.best_ordering == ascii(t));
  }
}

TEST_CASE("unlimited search ends in a provable local minimum for every spec") {
  std::mt19937 rng(21);
  for (int trial = 0; trial < 8; ++trial) {
    const Text t = random_text(rng, 60 + rng() % 60, 3 + static_cast<int>(rng() % 4));
    for (const auto& spec : all_neighborhood_specs()) {
      const Ordering start = init_ordering(InitMethod{InitKind::kRandom, static_cast<std::uint64_t>(trial)}, t);
      const SearchResult r = first_improvement_search(t, start, spec, kDefaultBudget, trial);
      CHECK(r.terminated == Termination::kLocalMinimum);
      CHECK(is_local_minimum(t, r.best_ordering, spec));
      check_result_invariants(r, kDefaultBudget);
    }
  }
}

TEST_CASE("budget caps evaluations") {
  std::mt19937 rng(2);
  const Text t = random_text(rng, 400, 8);
  for (std::size_t budget : {2u, 5u, 17u, 40u}) {
    const SearchResult r = first_improvement_search(t, ascii(t), {Operators::kInsert, NeighborOrder::kLex}, budget);
    check_result_invariants(r, budget);
    if (r.terminated == Termination::kBudget) CHECK(r.steps == budget);
  }
}

TEST_CASE("combined lex spec follows the single-operator path first") {
  std::mt19937 rng(31);
  for (int trial = 0; trial < 5; ++trial) {
    const Text t = random_text(rng, 120, 5);
    const Ordering start = init_ordering(InitMethod{InitKind::kRandom, static_cast<std::uint64_t>(trial)}, t);
    const auto s = first_improvement_search(t, start, {Operators::kSwap, NeighborOrder::kLex});
    const auto sti = first_improvement_search(t, start, {Operators::kSwapThenInsert, NeighborOrder::kLex});
    REQUIRE(sti.trace.size() >= s.trace.size());
    for (std::size_t i = 0; i < s.trace.size(); ++i) CHECK(sti.trace[i] == s.trace[i]);
    CHECK(sti.best_fitness <= s.best_fitness);
  }
}

TEST_CASE("two-symbol alphabets ignore neighbor order") {
  const Text t = txt("abbabaabbbab");
  const Ordering start(to_bytes("ba"));
  const auto ref = first_improvement_search(t, start, {Operators::kSwap, NeighborOrder::kLex});
  for (const auto& spec : all_neighborhood_specs()) {
    if (spec.operators != Operators::kSwap) continue;
    const auto r = first_improvement_search(t, start, spec, kDefaultBudget, 77);
    CHECK(r.best_ordering == ref.best_ordering);
    CHECK(r.best_fitness == ref.best_fitness);
  }
}

TEST_CASE("search is deterministic") {
  std::mt19937 rng(13);
  const Text t = random_text(rng, 300, 7);
  const NeighborhoodSpec spec{Operators::kInsertThenSwap, NeighborOrder::kRandom};
  CHECK(first_improvement_search(t, ascii(t), spec, 500, 5) == first_improvement_search(t, ascii(t), spec, 500, 5));
}

TEST_CASE("harmonic bound") {
  CHECK(harmonic_bound(1) == doctest::Approx(1.5));
  long double forward = 0;
  for (std::size_t i = 0; i <= 240000; ++i) forward += 1.0L / static_cast<long double>(i + 1);
  CHECK(harmonic_bound(240000) == doctest::Approx(static_cast<double>(forward)).epsilon(1e-12));
  CHECK(harmonic_bound(240000) == doctest::Approx(12.9656).epsilon(1e-5));
  CHECK(std::abs(harmonic_bound(240000) - 12.38) / 12.38 < 0.05);
  CHECK(harmonic_bound(10000) == doctest::Approx(9.7876).epsilon(1e-4));
  for (std::size_t t = 1; t < 200; ++t) CHECK(harmonic_bound(t + 1) > harmonic_bound(t));
}

TEST_CASE("random sampling basics") {
  std::mt19937 rng(17);
  const Text t = random_text(rng, 500, 9);
  const SampleStats one = random_sampling(t, 1, 4);
  CHECK(one.improvements == 1);
  CHECK(one.percent_summary.min == one.percent_summary.max);
  CHECK(one.percent_summary.mean == one.percent_summary.min);
  CHECK(one.percent_summary.std == 0.0);

  const SampleStats s = random_sampling(t, 300, 4);
  const SampleStats p = random_sampling(t, 300, 4, 3);
  CHECK(s.fitness == p.fitness);
  CHECK(s.improvements == p.improvements);
  CHECK(s.improvements <= s.samples);
  CHECK(s.percent_summary.min <= s.percent_summary.mean);
  CHECK(s.percent_summary.mean <= s.percent_summary.max);
  CHECK(fitness(t, s.best_ordering) == s.best_fitness);
  CHECK(s.best_fitness == *std::min_element(s.fitness.begin(), s.fitness.end()));
  for (std::size_t k = 0; k < s.samples; ++k) {
    CHECK(s.percent[k] == doctest::Approx(percent_change(static_cast<double>(s.fitness[k]), 500.0)));
  }
  CHECK_THROWS_AS(random_sampling(t, 0, 1), Error);
}

TEST_CASE("sampling improvements stay under the harmonic bound") {
  std::mt19937 rng(19);
  const Text t = random_text(rng, 150, 12);
  double total = 0;
  constexpr int kRuns = 30;
  for (int run = 0; run < kRuns; ++run) total += static_cast<double>(random_sampling(t, 10000, 1000 + run).improvements);
  CHECK(total / kRuns <= harmonic_bound(10000));
}

TEST_CASE("exhaustive search") {
  const Text t = txt("cacatcg");
  const ExhaustiveStats s = exhaustive_search(t);
  CHECK(s.results.size() == 24);
  CHECK(s.best().fitness == brute_force_min(t));
  CHECK(s.best().fitness <= 12);
  CHECK(s.worst().fitness == 14);
  CHECK(s.percent_summary.min == doctest::Approx(s.best().percent));
  CHECK(s.percent_summary.max == doctest::Approx(s.worst().percent));

  const ExhaustiveStats single = exhaustive_search(txt("aaaa"));
  CHECK(single.results.size() == 1);
  CHECK(single.percent_summary.min == single.percent_summary.max);

  try {
    exhaustive_search(txt("abcdefghi"));
    FAIL("expected AlphabetTooLarge");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kAlphabetTooLarge);
  }
  CHECK(exhaustive_search(txt("abcdefghi"), 9).results.size() == 362880);
}
