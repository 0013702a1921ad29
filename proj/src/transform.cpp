#include "rlbwt/transform.hpp"

#include <algorithm>
#include <string>

#include "rlbwt/error.hpp"

namespace rlbwt {
namespace {

using Index = std::int32_t;

void bucket_bounds(std::span<const Index> s, std::vector<Index>& bkt, bool ends) {
  std::fill(bkt.begin(), bkt.end(), 0);
  for (Index c : s) ++bkt[c];
  Index sum = 0;
  for (auto& b : bkt) {
    sum += b;
    b = ends ? sum : sum - b;
  }
}

bool is_lms(const std::vector<bool>& stype, Index i) { return i > 0 && stype[i] && !stype[i - 1]; }

void induce(std::span<const Index> s, std::span<Index> sa, const std::vector<bool>& stype,
            std::vector<Index>& bkt) {
  const auto n = static_cast<Index>(s.size());
  bucket_bounds(s, bkt, false);
  for (Index i = 0; i < n; ++i) {
    const Index j = sa[i] - 1;
    if (sa[i] > 0 && !stype[j]) sa[bkt[s[j]]++] = j;
  }
  bucket_bounds(s, bkt, true);
  for (Index i = n - 1; i >= 0; --i) {
    const Index j = sa[i] - 1;
    if (sa[i] > 0 && stype[j]) sa[--bkt[s[j]]] = j;
  }
}

void sais(std::span<const Index> s, std::span<Index> sa, Index k) {
  const auto n = static_cast<Index>(s.size());
  if (n == 1) {
    sa[0] = 0;
    return;
  }

  std::vector<bool> stype(n);
  stype[n - 1] = true;
  for (Index i = n - 2; i >= 0; --i) {
    stype[i] = s[i] < s[i + 1] || (s[i] == s[i + 1] && stype[i + 1]);
  }

  std::vector<Index> bkt(k);
  bucket_bounds(s, bkt, true);
  std::fill(sa.begin(), sa.end(), -1);
  for (Index i = 1; i < n; ++i) {
    if (is_lms(stype, i)) sa[--bkt[s[i]]] = i;
  }
  induce(s, sa, stype, bkt);

  // Sorted LMS positions to the front, then name LMS substrings.
  Index lms_count = 0;
  for (Index i = 0; i < n; ++i) {
    if (is_lms(stype, sa[i])) sa[lms_count++] = sa[i];
  }
  std::fill(sa.begin() + lms_count, sa.end(), -1);
  Index names = 0;
  Index prev = -1;
  for (Index i = 0; i < lms_count; ++i) {
    const Index pos = sa[i];
    bool differs = false;
    for (Index d = 0;; ++d) {
      if (prev == -1 || s[pos + d] != s[prev + d] || stype[pos + d] != stype[prev + d]) {
        differs = true;
        break;
      }
      if (d > 0 && (is_lms(stype, pos + d) || is_lms(stype, prev + d))) break;
    }
    if (differs) {
      ++names;
      prev = pos;
    }
    sa[lms_count + pos / 2] = names - 1;
  }
  for (Index i = n - 1, j = n - 1; i >= lms_count; --i) {
    if (sa[i] >= 0) sa[j--] = sa[i];
  }

  // Reduced problem lives in the tail; its suffix array is built in the head.
  std::span<Index> reduced = sa.subspan(n - lms_count);
  std::span<Index> reduced_sa = sa.first(lms_count);
  if (names < lms_count) {
    sais(reduced, reduced_sa, names);
  } else {
    for (Index i = 0; i < lms_count; ++i) reduced_sa[reduced[i]] = i;
  }

  for (Index i = 1, j = 0; i < n; ++i) {
    if (is_lms(stype, i)) reduced[j++] = i;
  }
  for (Index i = 0; i < lms_count; ++i) reduced_sa[i] = reduced[reduced_sa[i]];
  std::fill(sa.begin() + lms_count, sa.end(), -1);
  bucket_bounds(s, bkt, true);
  for (Index i = lms_count - 1; i >= 0; --i) {
    const Index j = sa[i];
    sa[i] = -1;
    sa[--bkt[s[j]]] = j;
  }
  induce(s, sa, stype, bkt);
}

int symbol_rank(const Ordering& ordering, Byte b, Byte marker) {
  return b == marker ? 0 : 1 + ordering.rank_of(b);
}

void check_naive_length(std::size_t n, std::size_t cap) {
  if (n > cap) {
    throw Error(ErrorKind::kTooLong,
                "length " + std::to_string(n) + " exceeds naive cap " + std::to_string(cap));
  }
}

}  // namespace

void suffix_array(std::span<const std::int32_t> text, std::span<std::int32_t> sa,
                  std::int32_t alphabet_size) {
  sais(text, sa, alphabet_size);
}

SuffixArray suffix_array(const RemappedText& text) {
  SuffixArray sa(text.ranks.size());
  suffix_array(text.ranks, sa, text.sigma + 1);
  return sa;
}

Bytes bwt(const Text& text, const Ordering& ordering) {
  const RemappedText remapped = apply_ordering(text, ordering);
  const SuffixArray sa = suffix_array(remapped);
  const auto bytes = text.bytes();
  Bytes out(sa.size());
  for (std::size_t i = 0; i < sa.size(); ++i) {
    out[i] = sa[i] == 0 ? text.end_marker() : bytes[sa[i] - 1];
  }
  return out;
}

std::vector<Bytes> bwm_naive(const Text& text, const Ordering& ordering, bool with_sentinel,
                             std::size_t cap) {
  check_ordering(text, ordering);
  check_naive_length(text.size(), cap);
  Bytes s(text.bytes().begin(), text.bytes().end());
  if (with_sentinel) s.push_back(text.end_marker());
  const Byte marker = text.end_marker();
  const std::size_t n = s.size();

  std::vector<Bytes> rows;
  rows.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    Bytes row(n);
    for (std::size_t k = 0; k < n; ++k) row[k] = s[(i + k) % n];
    rows.push_back(std::move(row));
  }
  std::stable_sort(rows.begin(), rows.end(), [&](const Bytes& a, const Bytes& b) {
    return std::lexicographical_compare(
        a.begin(), a.end(), b.begin(), b.end(), [&](Byte x, Byte y) {
          return symbol_rank(ordering, x, marker) < symbol_rank(ordering, y, marker);
        });
  });
  return rows;
}

Bytes last_column(const std::vector<Bytes>& matrix) {
  Bytes out;
  out.reserve(matrix.size());
  for (const auto& row : matrix) out.push_back(row.back());
  return out;
}

Bytes first_column(const std::vector<Bytes>& matrix) {
  Bytes out;
  out.reserve(matrix.size());
  for (const auto& row : matrix) out.push_back(row.front());
  return out;
}

Bytes bwt_star(const Text& text, const Ordering& ordering, std::size_t cap) {
  return last_column(bwm_naive(text, ordering, false, cap));
}

Text inverse_bwt(std::span<const Byte> transformed, const Ordering& ordering) {
  std::size_t marker_count = 0;
  Byte marker = 0;
  for (Byte b : transformed) {
    if (!ordering.contains(b)) {
      if (marker_count > 0 && b != marker) {
        throw Error(ErrorKind::kOrderingMismatch,
                    "byte " + std::to_string(b) + " is neither in the ordering nor the end marker");
      }
      marker = b;
      ++marker_count;
    }
  }
  if (marker_count != 1) {
    throw Error(ErrorKind::kMalformedBwt,
                "expected exactly one end marker, found " + std::to_string(marker_count));
  }

  const std::size_t len = transformed.size();
  const std::size_t sigma = ordering.size() + 1;
  std::vector<std::size_t> first_row(sigma + 1, 0);
  std::vector<std::size_t> occ_before(len);
  std::vector<std::size_t> seen(sigma, 0);
  for (std::size_t i = 0; i < len; ++i) {
    const auto r = static_cast<std::size_t>(symbol_rank(ordering, transformed[i], marker));
    occ_before[i] = seen[r]++;
  }
  for (std::size_t r = 0; r < sigma; ++r) first_row[r + 1] = first_row[r] + seen[r];

  // Row 0 is the rotation starting with the end marker; its last byte is the
  // final text byte. Walk LF backwards.
  Bytes out(len - 1);
  std::size_t row = 0;
  for (std::size_t k = len - 1; k-- > 0;) {
    const Byte b = transformed[row];
    if (b == marker) throw Error(ErrorKind::kMalformedBwt, "LF walk reached the end marker early");
    out[k] = b;
    const auto r = static_cast<std::size_t>(symbol_rank(ordering, b, marker));
    row = first_row[r] + occ_before[row];
  }
  if (transformed[row] != marker) {
    throw Error(ErrorKind::kMalformedBwt, "LF walk did not return to the end marker");
  }
  return Text(std::move(out), marker);
}

std::size_t count_runs(std::span<const Byte> data) {
  if (data.empty()) return 0;
  std::size_t runs = 1;
  for (std::size_t i = 1; i < data.size(); ++i) runs += data[i] != data[i - 1];
  return runs;
}

}  // namespace rlbwt
