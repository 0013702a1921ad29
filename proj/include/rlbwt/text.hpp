#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

namespace rlbwt {

using Byte = std::uint8_t;
using Bytes = std::vector<Byte>;

Bytes to_bytes(std::string_view s);
std::string to_string(std::span<const Byte> bytes);

/// Input bytes plus an end marker that does not occur in them.
class Text {
 public:
  /// Throws kInvalidArgument if `bytes` is empty or contains `end_marker`.
  Text(Bytes bytes, Byte end_marker);

  /// Picks the smallest byte value absent from `bytes`; throws kAlphabetFull
  /// when all 256 values occur.
  static Text with_auto_marker(Bytes bytes);

  std::span<const Byte> bytes() const noexcept { return bytes_; }
  Byte end_marker() const noexcept { return end_marker_; }
  std::size_t size() const noexcept { return bytes_.size(); }

  friend bool operator==(const Text&, const Text&) = default;

 private:
  Bytes bytes_;
  Byte end_marker_;
};

/// Distinct byte values of a text, ascending.
class Alphabet {
 public:
  explicit Alphabet(std::vector<Byte> symbols);

  std::span<const Byte> symbols() const noexcept { return symbols_; }
  std::size_t size() const noexcept { return symbols_.size(); }
  bool contains(Byte b) const noexcept;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<Byte> symbols_;
};

/// A precedence order over a set of byte values. perm()[i] has rank i. The end
/// marker is never a member; it is implicitly least.
class Ordering {
 public:
  Ordering() = default;
  /// Throws kInvalidArgument on duplicate symbols.
  explicit Ordering(std::vector<Byte> perm);

  std::span<const Byte> perm() const noexcept { return perm_; }
  std::size_t size() const noexcept { return perm_.size(); }
  bool contains(Byte b) const noexcept { return rank_[b] >= 0; }
  /// -1 when `b` is not a member.
  int rank_of(Byte b) const noexcept { return rank_[b]; }

  /// Members ascending by byte value.
  std::vector<Byte> sorted_symbols() const;

  friend bool operator==(const Ordering& a, const Ordering& b) { return a.perm_ == b.perm_; }

 private:
  std::vector<Byte> perm_;
  std::array<std::int16_t, 256> rank_ = filled_rank();

  static std::array<std::int16_t, 256> filled_rank();
};

/// Ranks under an ordering: position i < n holds 1 + rank, position n holds
/// the sentinel 0.
struct RemappedText {
  std::vector<std::int32_t> ranks;
  std::int32_t sigma = 0;
};

struct EndMarkerPolicy {
  std::optional<Byte> fixed;  // nullopt selects the smallest absent byte

  static EndMarkerPolicy automatic() { return {}; }
  static EndMarkerPolicy fixed_byte(Byte b) { return {b}; }
};

Text load_text(const std::filesystem::path& path, EndMarkerPolicy policy);
Bytes read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::span<const Byte> data);

Alphabet scan_alphabet(const Text& text);

/// Throws kOrderingMismatch unless the ordering covers exactly the alphabet.
void check_ordering(const Text& text, const Ordering& ordering);

RemappedText apply_ordering(const Text& text, const Ordering& ordering);

}  // namespace rlbwt
