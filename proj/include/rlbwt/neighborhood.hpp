#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "rlbwt/random.hpp"
#include "rlbwt/text.hpp"

namespace rlbwt {

enum class MoveKind { kSwap, kInsert };

/// Swap exchanges positions i < j. Insert takes the symbol at i out and puts it
/// back so it lands at index j (i != j).
struct Move {
  MoveKind kind = MoveKind::kSwap;
  int i = 0;
  int j = 0;

  friend bool operator==(const Move&, const Move&) = default;
};

enum class Operators { kSwap, kInsert, kSwapThenInsert, kInsertThenSwap };
enum class NeighborOrder { kLex, kRevLex, kRandom };

struct NeighborhoodSpec {
  Operators operators = Operators::kSwap;
  NeighborOrder order = NeighborOrder::kLex;

  /// "<operators>:<order>", e.g. "swap:lex", "insert-then-swap:random".
  static NeighborhoodSpec parse(std::string_view text);
  std::string name() const;

  /// Operator sequence scanned in order, one or two entries.
  std::vector<MoveKind> phases() const;

  friend bool operator==(const NeighborhoodSpec&, const NeighborhoodSpec&) = default;
};

/// All 12 operator/order combinations.
std::vector<NeighborhoodSpec> all_neighborhood_specs();

/// Throws kIndexOutOfRange when the move does not fit `perm`.
void apply_move(std::span<Byte> perm, const Move& move);
Ordering apply_move(const Ordering& ordering, const Move& move);

/// Lexicographic list for one operator: (0,1), (0,2), ..., (σ−2,σ−1) for Swap
/// and i-major, j-minor with j != i for Insert.
std::vector<Move> lex_moves(MoveKind kind, std::size_t sigma);

/// Orders a lex list in place; kRandom draws from `rng`.
void order_moves(std::vector<Move>& moves, NeighborOrder order, Rng& rng);

/// Concatenated move lists of the spec's operators, each ordered per the
/// spec. Random order is a Fisher-Yates shuffle seeded with `seed`.
std::vector<Move> enumerate_moves(const NeighborhoodSpec& spec, std::size_t sigma,
                                  std::uint64_t seed = 0);

}  // namespace rlbwt
