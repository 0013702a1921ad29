#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "rlbwt/text.hpp"

namespace rlbwt {

enum class InitKind {
  kRandom,
  kAscii,
  kFirstAppearance,
  kLeastFrequent,
  kMostFrequent,
  kChapinTate,
  kInverseChapinTate,
  kVowels,
  kFromFile,
};

struct InitMethod {
  InitKind kind = InitKind::kAscii;
  std::uint64_t seed = 0;           // kRandom only
  std::filesystem::path path;       // kFromFile only

  /// Accepts the CLI names (random, ascii, first-appearance, least-frequent,
  /// most-frequent, chapin-tate, inv-chapin-tate, vowels, file) with optional
  /// suffixes "random:<seed>" and "file:<path>". Throws kParse.
  static InitMethod parse(std::string_view spec);

  /// CLI name without parameters.
  std::string name() const;

  friend bool operator==(const InitMethod&, const InitMethod&) = default;
};

using ByteTemplate = std::array<Byte, 256>;

ByteTemplate ascii_template();
/// ASCII with '!'/'@' exchanged, "+,-." as "+-,.", and each letter block
/// reordered as AEIOU followed by BCDGFHRLSMNPQJKTWVXYZ.
ByteTemplate chapin_tate_template();
ByteTemplate inverse_chapin_tate_template();
/// aeiouAEIOU first, the rest in byte order.
ByteTemplate vowels_template();

/// Keeps only the alphabet's symbols, preserving template order.
Ordering restrict_template(const ByteTemplate& tmpl, const Alphabet& alphabet);

/// Group inverse of the rank permutation relative to ascending byte order.
Ordering inverse_permutation(const Ordering& ordering);
ByteTemplate inverse_permutation(const ByteTemplate& tmpl);

/// ASCII ordering of the text's alphabet, Fisher-Yates shuffled with `seed`.
Ordering random_ordering(const Alphabet& alphabet, std::uint64_t seed);

Ordering init_ordering(const InitMethod& method, const Text& text);

/// Element i is random_ordering(alphabet, master_seed + i).
std::vector<Ordering> fixed_random_starts(std::size_t count, std::uint64_t master_seed,
                                          const Text& text);

/// One decimal byte value per line in rank order; '#' starts a comment.
Ordering load_ordering_file(const std::filesystem::path& path);
Ordering parse_ordering(std::string_view contents);
std::string format_ordering_file(const Ordering& ordering);

}  // namespace rlbwt
