#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rlbwt/text.hpp"

namespace rlbwt {

inline constexpr std::size_t kMaxRunLength = 255;

struct RlePair {
  Byte symbol = 0;
  std::uint8_t length = 0;  // 1..255

  friend bool operator==(const RlePair&, const RlePair&) = default;
};

using RleEncoding = std::vector<RlePair>;

/// Maximal runs, each split into ceil(len / 255) pairs.
RleEncoding rle_encode(std::span<const Byte> data);

/// Throws kMalformedRle on a zero length.
Bytes rle_decode(std::span<const RlePair> encoding);

/// Size in bytes of the two-byte-per-pair layout.
inline std::size_t encoded_size(std::span<const RlePair> encoding) { return 2 * encoding.size(); }

/// Flat layout: symbol, length, symbol, length, ... No header.
Bytes serialize(std::span<const RlePair> encoding);
/// Throws kMalformedRle on odd input length or zero run lengths.
RleEncoding deserialize(std::span<const Byte> data);

/// Byte size of RLE(BWT(text, ordering)).
std::size_t fitness(const Text& text, const Ordering& ordering);

/// Signed percentage change of `compressed` relative to `uncompressed`.
/// Throws kDivisionByZero when `uncompressed` is zero.
double percent_change(double compressed, double uncompressed);

/// Repeated fitness evaluations on one text without re-validating the text or
/// reallocating the transform buffers. Holds a reference to `text`.
class FitnessEvaluator {
 public:
  explicit FitnessEvaluator(const Text& text);

  /// `perm` must be a permutation of the text alphabet (kOrderingMismatch).
  std::size_t operator()(std::span<const Byte> perm);
  std::size_t operator()(const Ordering& ordering) { return (*this)(ordering.perm()); }

  /// Percentage change of `fitness_bytes` against the text size.
  double percent(std::size_t fitness_bytes) const;

  const Text& text() const noexcept { return text_; }
  std::size_t alphabet_size() const noexcept { return alphabet_.size(); }

 private:
  const Text& text_;
  Alphabet alphabet_;
  std::vector<std::int32_t> ranks_;
  std::vector<std::int32_t> sa_;
};

}  // namespace rlbwt
