#include "rlbwt/rle.hpp"

#include <array>
#include <string>

#include "rlbwt/error.hpp"
#include "rlbwt/transform.hpp"

namespace rlbwt {
namespace {

std::size_t pairs_for_run(std::size_t len) { return (len + kMaxRunLength - 1) / kMaxRunLength; }

}  // namespace

RleEncoding rle_encode(std::span<const Byte> data) {
  RleEncoding out;
  std::size_t i = 0;
  while (i < data.size()) {
    std::size_t j = i + 1;
    while (j < data.size() && data[j] == data[i]) ++j;
    for (std::size_t left = j - i; left > 0;) {
      const std::size_t chunk = std::min(left, kMaxRunLength);
      out.push_back({data[i], static_cast<std::uint8_t>(chunk)});
      left -= chunk;
    }
    i = j;
  }
  return out;
}

Bytes rle_decode(std::span<const RlePair> encoding) {
  Bytes out;
  for (const auto& p : encoding) {
    if (p.length == 0) throw Error(ErrorKind::kMalformedRle, "zero run length");
    out.insert(out.end(), p.length, p.symbol);
  }
  return out;
}

Bytes serialize(std::span<const RlePair> encoding) {
  Bytes out;
  out.reserve(2 * encoding.size());
  for (const auto& p : encoding) {
    out.push_back(p.symbol);
    out.push_back(p.length);
  }
  return out;
}

RleEncoding deserialize(std::span<const Byte> data) {
  if (data.size() % 2 != 0) {
    throw Error(ErrorKind::kMalformedRle, "odd encoded length " + std::to_string(data.size()));
  }
  RleEncoding out;
  out.reserve(data.size() / 2);
  for (std::size_t i = 0; i < data.size(); i += 2) {
    if (data[i + 1] == 0) {
      throw Error(ErrorKind::kMalformedRle, "zero run length at pair " + std::to_string(i / 2));
    }
    out.push_back({data[i], data[i + 1]});
  }
  return out;
}

std::size_t fitness(const Text& text, const Ordering& ordering) {
  return encoded_size(rle_encode(bwt(text, ordering)));
}

double percent_change(double compressed, double uncompressed) {
  if (uncompressed == 0.0) throw Error(ErrorKind::kDivisionByZero, "uncompressed size is zero");
  return (compressed - uncompressed) / uncompressed * 100.0;
}

FitnessEvaluator::FitnessEvaluator(const Text& text)
    : text_(text), alphabet_(scan_alphabet(text)), ranks_(text.size() + 1), sa_(text.size() + 1) {}

std::size_t FitnessEvaluator::operator()(std::span<const Byte> perm) {
  std::array<std::int32_t, 256> rank{};
  rank.fill(-1);
  for (std::size_t i = 0; i < perm.size(); ++i) rank[perm[i]] = static_cast<std::int32_t>(i) + 1;
  bool covers = perm.size() == alphabet_.size();
  for (Byte b : alphabet_.symbols()) covers = covers && rank[b] > 0;
  if (!covers) throw Error(ErrorKind::kOrderingMismatch, "ordering does not cover the text alphabet");

  const auto bytes = text_.bytes();
  for (std::size_t i = 0; i < bytes.size(); ++i) ranks_[i] = rank[bytes[i]];
  ranks_.back() = 0;
  suffix_array(ranks_, sa_, static_cast<std::int32_t>(perm.size()) + 1);

  // Runs are counted in rank space; the remapping is a bijection.
  std::size_t pairs = 0;
  std::size_t run = 0;
  std::int32_t prev = -1;
  for (const std::int32_t pos : sa_) {
    const std::int32_t c = pos == 0 ? 0 : ranks_[pos - 1];
    if (c == prev) {
      ++run;
    } else {
      pairs += pairs_for_run(run);
      prev = c;
      run = 1;
    }
  }
  pairs += pairs_for_run(run);
  return 2 * pairs;
}

double FitnessEvaluator::percent(std::size_t fitness_bytes) const {
  return percent_change(static_cast<double>(fitness_bytes), static_cast<double>(text_.size()));
}

}  // namespace rlbwt
