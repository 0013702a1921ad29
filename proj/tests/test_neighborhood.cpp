#include <random>

#include "doctest.h"
#include "rlbwt/error.hpp"
#include "rlbwt/neighborhood.hpp"

using namespace rlbwt;

namespace {

std::string perm_str(const Ordering& o) { return to_string(o.perm()); }
const Ordering kAbcd(to_bytes("abcd"));

Move swap(int i, int j) { return {MoveKind::kSwap, i, j}; }
Move insert(int i, int j) { return {MoveKind::kInsert, i, j}; }

Ordering random_ordering_of(std::size_t sigma, std::mt19937& rng) {
  std::vector<Byte> perm(sigma);
  for (std::size_t i = 0; i < sigma; ++i) perm[i] = static_cast<Byte>(i);
  std::shuffle(perm.begin(), perm.end(), rng);
  return Ordering(perm);
}

}  // namespace

TEST_CASE("apply_move examples") {
  CHECK(perm_str(apply_move(kAbcd, swap(0, 2))) == "cbad");
  CHECK(perm_str(apply_move(kAbcd, insert(0, 2))) == "bcad");
  CHECK(perm_str(apply_move(kAbcd, insert(3, 0))) == "dabc");
}

TEST_CASE("apply_move rejects bad indices") {
  for (const Move& m : {swap(0, 4), swap(2, 1), swap(1, 1), insert(2, 2), insert(-1, 0), insert(0, 4)}) {
    try {
      apply_move(kAbcd, m);
      FAIL("expected IndexOutOfRange");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kIndexOutOfRange);
    }
  }
}

TEST_CASE("lex enumeration") {
  using V = std::vector<Move>;
  CHECK(enumerate_moves({Operators::kSwap, NeighborOrder::kLex}, 3) == V{swap(0, 1), swap(0, 2), swap(1, 2)});
  CHECK(enumerate_moves({Operators::kSwap, NeighborOrder::kRevLex}, 3) == V{swap(1, 2), swap(0, 2), swap(0, 1)});
  CHECK(enumerate_moves({Operators::kInsert, NeighborOrder::kLex}, 3) ==
        V{insert(0, 1), insert(0, 2), insert(1, 0), insert(1, 2), insert(2, 0), insert(2, 1)});
  CHECK(enumerate_moves({Operators::kSwap, NeighborOrder::kLex}, 5).size() == 10);
  CHECK(enumerate_moves({Operators::kInsert, NeighborOrder::kLex}, 5).size() == 20);
}

TEST_CASE("neighborhood sizes for sigma 2..64") {
  for (std::size_t s = 2; s <= 64; ++s) {
    const std::size_t swaps = s * (s - 1) / 2;
    const std::size_t inserts = s * (s - 1);
    for (NeighborOrder order : {NeighborOrder::kLex, NeighborOrder::kRevLex, NeighborOrder::kRandom}) {
      CHECK(enumerate_moves({Operators::kSwap, order}, s, 1).size() == swaps);
      CHECK(enumerate_moves({Operators::kInsert, order}, s, 1).size() == inserts);
      CHECK(enumerate_moves({Operators::kSwapThenInsert, order}, s, 1).size() == swaps + inserts);
      CHECK(enumerate_moves({Operators::kInsertThenSwap, order}, s, 1).size() == swaps + inserts);
    }
  }
}

TEST_CASE("combined and random orders") {
  const auto sti = enumerate_moves({Operators::kSwapThenInsert, NeighborOrder::kRevLex}, 4);
  CHECK(sti.front() == swap(2, 3));
  CHECK(sti[6] == insert(3, 2));
  CHECK(sti.back() == insert(0, 1));
  const auto its = enumerate_moves({Operators::kInsertThenSwap, NeighborOrder::kLex}, 4);
  CHECK(its.front() == insert(0, 1));
  CHECK(its[12] == swap(0, 1));

  const NeighborhoodSpec random{Operators::kSwapThenInsert, NeighborOrder::kRandom};
  const auto r1 = enumerate_moves(random, 12, 42);
  CHECK(r1 == enumerate_moves(random, 12, 42));
  CHECK(r1 != enumerate_moves(random, 12, 43));
  // Each operator's block is a permutation of its lex list.
  std::vector<Move> swaps(r1.begin(), r1.begin() + 66);
  std::vector<Move> lex = lex_moves(MoveKind::kSwap, 12);
  auto key = [](const Move& m) { return std::make_pair(m.i, m.j); };
  std::sort(swaps.begin(), swaps.end(), [&](auto& a, auto& b) { return key(a) < key(b); });
  CHECK(swaps == lex);
}

TEST_CASE("move algebra") {
  std::mt19937 rng(6);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t sigma = 2 + rng() % 30;
    const Ordering o = random_ordering_of(sigma, rng);
    const int i = static_cast<int>(rng() % sigma);
    int j = static_cast<int>(rng() % sigma);
    if (j == i) j = (i + 1) % static_cast<int>(sigma);

    const Ordering ins = apply_move(o, insert(i, j));
    CHECK(ins.sorted_symbols() == o.sorted_symbols());
    CHECK(apply_move(ins, insert(j, i)) == o);
    CHECK(ins.perm()[j] == o.perm()[i]);

    const Move s = swap(std::min(i, j), std::max(i, j));
    const Ordering sw = apply_move(o, s);
    CHECK(sw.sorted_symbols() == o.sorted_symbols());
    CHECK(apply_move(sw, s) == o);

    if (sigma > 1) {
      const int k = static_cast<int>(rng() % (sigma - 1));
      CHECK(apply_move(o, insert(k, k + 1)) == apply_move(o, swap(k, k + 1)));
      CHECK(apply_move(o, insert(k + 1, k)) == apply_move(o, swap(k, k + 1)));
    }
  }
}

TEST_CASE("spec names") {
  CHECK(all_neighborhood_specs().size() == 12);
  for (const auto& s : all_neighborhood_specs()) CHECK(NeighborhoodSpec::parse(s.name()) == s);
  CHECK(NeighborhoodSpec::parse("insert-then-swap:revlex") ==
        NeighborhoodSpec{Operators::kInsertThenSwap, NeighborOrder::kRevLex});
  CHECK_THROWS_AS(NeighborhoodSpec::parse("swap:sideways"), Error);
  CHECK_THROWS_AS(NeighborhoodSpec::parse("shuffle:lex"), Error);
}
