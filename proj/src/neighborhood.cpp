#include "rlbwt/neighborhood.hpp"

#include <algorithm>
#include <array>

#include "rlbwt/error.hpp"

namespace rlbwt {
namespace {

constexpr std::array<std::pair<std::string_view, Operators>, 4> kOperatorNames{{
    {"swap", Operators::kSwap},
    {"insert", Operators::kInsert},
    {"swap-then-insert", Operators::kSwapThenInsert},
    {"insert-then-swap", Operators::kInsertThenSwap},
}};

constexpr std::array<std::pair<std::string_view, NeighborOrder>, 3> kOrderNames{{
    {"lex", NeighborOrder::kLex},
    {"revlex", NeighborOrder::kRevLex},
    {"random", NeighborOrder::kRandom},
}};

}  // namespace

NeighborhoodSpec NeighborhoodSpec::parse(std::string_view text) {
  const auto colon = text.find(':');
  const std::string_view ops = text.substr(0, colon);
  const std::string_view order = colon == std::string_view::npos ? "lex" : text.substr(colon + 1);
  NeighborhoodSpec spec;
  const auto op = std::find_if(kOperatorNames.begin(), kOperatorNames.end(),
                               [&](const auto& p) { return p.first == ops; });
  const auto ord = std::find_if(kOrderNames.begin(), kOrderNames.end(),
                                [&](const auto& p) { return p.first == order; });
  if (op == kOperatorNames.end() || ord == kOrderNames.end()) {
    throw Error(ErrorKind::kParse, "unknown neighborhood '" + std::string(text) + "'");
  }
  spec.operators = op->second;
  spec.order = ord->second;
  return spec;
}

std::string NeighborhoodSpec::name() const {
  std::string out;
  for (const auto& [n, v] : kOperatorNames) {
    if (v == operators) out = n;
  }
  for (const auto& [n, v] : kOrderNames) {
    if (v == order) out += ":" + std::string(n);
  }
  return out;
}

std::vector<MoveKind> NeighborhoodSpec::phases() const {
  switch (operators) {
    case Operators::kSwap: return {MoveKind::kSwap};
    case Operators::kInsert: return {MoveKind::kInsert};
    case Operators::kSwapThenInsert: return {MoveKind::kSwap, MoveKind::kInsert};
    case Operators::kInsertThenSwap: return {MoveKind::kInsert, MoveKind::kSwap};
  }
  return {};
}

std::vector<NeighborhoodSpec> all_neighborhood_specs() {
  std::vector<NeighborhoodSpec> out;
  for (const auto& op : kOperatorNames) {
    for (const auto& ord : kOrderNames) out.push_back({op.second, ord.second});
  }
  return out;
}

void apply_move(std::span<Byte> perm, const Move& move) {
  const auto n = static_cast<int>(perm.size());
  const bool in_range = move.i >= 0 && move.j >= 0 && move.i < n && move.j < n;
  const bool well_formed = move.kind == MoveKind::kSwap ? move.i < move.j : move.i != move.j;
  if (!in_range || !well_formed) {
    throw Error(ErrorKind::kIndexOutOfRange,
                "move (" + std::to_string(move.i) + "," + std::to_string(move.j) +
                    ") invalid for sigma " + std::to_string(n));
  }
  if (move.kind == MoveKind::kSwap) {
    std::swap(perm[move.i], perm[move.j]);
  } else if (move.i < move.j) {
    std::rotate(perm.begin() + move.i, perm.begin() + move.i + 1, perm.begin() + move.j + 1);
  } else {
    std::rotate(perm.begin() + move.j, perm.begin() + move.i, perm.begin() + move.i + 1);
  }
}

Ordering apply_move(const Ordering& ordering, const Move& move) {
  std::vector<Byte> perm(ordering.perm().begin(), ordering.perm().end());
  apply_move(std::span<Byte>(perm), move);
  return Ordering(std::move(perm));
}

std::vector<Move> lex_moves(MoveKind kind, std::size_t sigma) {
  std::vector<Move> moves;
  const auto n = static_cast<int>(sigma);
  for (int i = 0; i < n; ++i) {
    for (int j = kind == MoveKind::kSwap ? i + 1 : 0; j < n; ++j) {
      if (j != i) moves.push_back({kind, i, j});
    }
  }
  return moves;
}

void order_moves(std::vector<Move>& moves, NeighborOrder order, Rng& rng) {
  switch (order) {
    case NeighborOrder::kLex: break;
    case NeighborOrder::kRevLex: std::reverse(moves.begin(), moves.end()); break;
    case NeighborOrder::kRandom: fisher_yates(std::span<Move>(moves), rng); break;
  }
}

std::vector<Move> enumerate_moves(const NeighborhoodSpec& spec, std::size_t sigma, std::uint64_t seed) {
  Rng rng(seed);
  std::vector<Move> out;
  for (MoveKind kind : spec.phases()) {
    std::vector<Move> moves = lex_moves(kind, sigma);
    order_moves(moves, spec.order, rng);
    out.insert(out.end(), moves.begin(), moves.end());
  }
  return out;
}

}  // namespace rlbwt
