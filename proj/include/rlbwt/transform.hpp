#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "rlbwt/text.hpp"

namespace rlbwt {

using SuffixArray = std::vector<std::int32_t>;

/// Rotation matrices are only built for short strings.
inline constexpr std::size_t kNaiveLengthCap = 64;

/// SA-IS over the remapped text. The trailing sentinel 0 must be unique.
SuffixArray suffix_array(const RemappedText& text);

/// Same as above for a raw integer sequence over [0, alphabet_size) that ends
/// in a unique 0. Writes into `sa`, which must have the same length.
void suffix_array(std::span<const std::int32_t> text, std::span<std::int32_t> sa,
                  std::int32_t alphabet_size);

/// Last column of the sorted rotation matrix of text + end marker, length n+1.
Bytes bwt(const Text& text, const Ordering& ordering);

/// Last column of the sorted rotations of the text without an end marker.
/// Throws kTooLong past `cap`.
Bytes bwt_star(const Text& text, const Ordering& ordering, std::size_t cap = kNaiveLengthCap);

/// Inverts a sentinel-mode BWT by LF mapping. The end marker is the single
/// byte of `transformed` that the ordering does not contain.
Text inverse_bwt(std::span<const Byte> transformed, const Ordering& ordering);

/// Maximal blocks of equal adjacent bytes.
std::size_t count_runs(std::span<const Byte> data);

/// All rotations, stably sorted under the ordering with the end marker least.
/// Test oracle; throws kTooLong past `cap`.
std::vector<Bytes> bwm_naive(const Text& text, const Ordering& ordering, bool with_sentinel,
                             std::size_t cap = kNaiveLengthCap);

Bytes last_column(const std::vector<Bytes>& matrix);
Bytes first_column(const std::vector<Bytes>& matrix);

}  // namespace rlbwt
