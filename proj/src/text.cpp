#include "rlbwt/text.hpp"

#include <algorithm>
#include <fstream>
#include <iterator>
#include <string>

#include "rlbwt/error.hpp"

namespace rlbwt {

Bytes to_bytes(std::string_view s) { return Bytes(s.begin(), s.end()); }

std::string to_string(std::span<const Byte> bytes) { return std::string(bytes.begin(), bytes.end()); }

Text::Text(Bytes bytes, Byte end_marker) : bytes_(std::move(bytes)), end_marker_(end_marker) {
  if (bytes_.empty()) throw Error(ErrorKind::kInvalidArgument, "text must not be empty");
  if (std::find(bytes_.begin(), bytes_.end(), end_marker_) != bytes_.end()) {
    throw Error(ErrorKind::kInvalidArgument,
                "end marker " + std::to_string(end_marker_) + " occurs in the text");
  }
}

Text Text::with_auto_marker(Bytes bytes) {
  std::array<bool, 256> seen{};
  for (Byte b : bytes) seen[b] = true;
  for (int v = 0; v < 256; ++v) {
    if (!seen[v]) return Text(std::move(bytes), static_cast<Byte>(v));
  }
  throw Error(ErrorKind::kAlphabetFull, "all 256 byte values occur; no end marker available");
}

Alphabet::Alphabet(std::vector<Byte> symbols) : symbols_(std::move(symbols)) {
  if (!std::is_sorted(symbols_.begin(), symbols_.end()) ||
      std::adjacent_find(symbols_.begin(), symbols_.end()) != symbols_.end()) {
    throw Error(ErrorKind::kInvalidArgument, "alphabet symbols must be unique and ascending");
  }
}

bool Alphabet::contains(Byte b) const noexcept {
  return std::binary_search(symbols_.begin(), symbols_.end(), b);
}

std::array<std::int16_t, 256> Ordering::filled_rank() {
  std::array<std::int16_t, 256> r;
  r.fill(-1);
  return r;
}

Ordering::Ordering(std::vector<Byte> perm) : perm_(std::move(perm)) {
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    auto& slot = rank_[perm_[i]];
    if (slot >= 0) {
      throw Error(ErrorKind::kInvalidArgument,
                  "duplicate symbol " + std::to_string(perm_[i]) + " in ordering");
    }
    slot = static_cast<std::int16_t>(i);
  }
}

std::vector<Byte> Ordering::sorted_symbols() const {
  std::vector<Byte> out(perm_);
  std::sort(out.begin(), out.end());
  return out;
}

Bytes read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::kIo, "cannot open " + path.string());
  Bytes data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw Error(ErrorKind::kIo, "read failed for " + path.string());
  return data;
}

void write_file(const std::filesystem::path& path, std::span<const Byte> data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorKind::kIo, "cannot open " + path.string() + " for writing");
  out.write(reinterpret_cast<const char*>(data.data()), static_cast<std::streamsize>(data.size()));
  if (!out) throw Error(ErrorKind::kIo, "write failed for " + path.string());
}

Text load_text(const std::filesystem::path& path, EndMarkerPolicy policy) {
  Bytes data = read_file(path);
  if (data.empty()) throw Error(ErrorKind::kInvalidArgument, path.string() + " is empty");
  if (policy.fixed) {
    if (std::find(data.begin(), data.end(), *policy.fixed) != data.end()) {
      throw Error(ErrorKind::kInvalidArgument,
                  "end marker " + std::to_string(*policy.fixed) + " occurs in " + path.string());
    }
    return Text(std::move(data), *policy.fixed);
  }
  try {
    return Text::with_auto_marker(std::move(data));
  } catch (const Error& e) {
    throw Error(e.kind(), path.string() + ": all 256 byte values occur; no end marker available");
  }
}

Alphabet scan_alphabet(const Text& text) {
  std::array<bool, 256> seen{};
  for (Byte b : text.bytes()) seen[b] = true;
  std::vector<Byte> symbols;
  for (int v = 0; v < 256; ++v) {
    if (seen[v]) symbols.push_back(static_cast<Byte>(v));
  }
  return Alphabet(std::move(symbols));
}

void check_ordering(const Text& text, const Ordering& ordering) {
  Alphabet alphabet = scan_alphabet(text);
  if (ordering.size() != alphabet.size() ||
      !std::all_of(alphabet.symbols().begin(), alphabet.symbols().end(),
                   [&](Byte b) { return ordering.contains(b); })) {
    throw Error(ErrorKind::kOrderingMismatch, "ordering of size " + std::to_string(ordering.size()) +
                                                  " does not cover the text alphabet of size " +
                                                  std::to_string(alphabet.size()));
  }
}

RemappedText apply_ordering(const Text& text, const Ordering& ordering) {
  check_ordering(text, ordering);
  RemappedText out;
  out.sigma = static_cast<std::int32_t>(ordering.size());
  out.ranks.reserve(text.size() + 1);
  for (Byte b : text.bytes()) out.ranks.push_back(1 + ordering.rank_of(b));
  out.ranks.push_back(0);
  return out;
}

}  // namespace rlbwt
