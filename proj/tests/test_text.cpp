#include <filesystem>
#include <random>

#include "doctest.h"
#include "rlbwt/error.hpp"
#include "rlbwt/text.hpp"

using namespace rlbwt;

namespace {

std::filesystem::path temp_file(const std::string& name, const Bytes& data) {
  auto path = std::filesystem::temp_directory_path() / ("rlbwt_text_" + name);
  write_file(path, data);
  return path;
}

Ordering ord(std::string_view s) { return Ordering(to_bytes(s)); }

}  // namespace

TEST_CASE("load_text with a fixed marker") {
  const auto path = temp_file("cacatcg", to_bytes("cacatcg"));
  const Text t = load_text(path, EndMarkerPolicy::fixed_byte('$'));
  CHECK(to_string(t.bytes()) == "cacatcg");
  CHECK(t.end_marker() == '$');
}

TEST_CASE("load_text auto marker picks the smallest absent byte") {
  const Text t = load_text(temp_file("aa", to_bytes("aa")), EndMarkerPolicy::automatic());
  CHECK(t.end_marker() == 0);

  Bytes data{0, 1, 3};
  CHECK(load_text(temp_file("013", data), EndMarkerPolicy::automatic()).end_marker() == 2);
}

TEST_CASE("load_text errors") {
  Bytes all(256);
  for (int i = 0; i < 256; ++i) all[i] = static_cast<Byte>(i);
  try {
    load_text(temp_file("all256", all), EndMarkerPolicy::automatic());
    FAIL("expected AlphabetFull");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kAlphabetFull);
  }

  try {
    load_text("/nonexistent/rlbwt/file", EndMarkerPolicy::automatic());
    FAIL("expected IoError");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::kIo);
  }

  CHECK_THROWS_AS(load_text(temp_file("dollar", to_bytes("a$b")), EndMarkerPolicy::fixed_byte('$')), Error);
  CHECK_THROWS_AS(Text(Bytes{}, '$'), Error);
}

TEST_CASE("scan_alphabet") {
  CHECK(scan_alphabet(Text(to_bytes("cacatcg"), '$')) == Alphabet(to_bytes("acgt")));
  CHECK(scan_alphabet(Text(to_bytes("aaaa"), '$')).size() == 1);
}

TEST_CASE("apply_ordering substitutes ranks") {
  const Text t(to_bytes("cacatcg"), '$');
  CHECK(apply_ordering(t, ord("acgt")).ranks == std::vector<std::int32_t>{2, 1, 2, 1, 4, 2, 3, 0});
  CHECK(apply_ordering(t, ord("agct")).ranks == std::vector<std::int32_t>{3, 1, 3, 1, 4, 3, 2, 0});
  CHECK(apply_ordering(Text(to_bytes("a"), '$'), ord("a")).ranks == std::vector<std::int32_t>{1, 0});
}

TEST_CASE("apply_ordering rejects mismatched orderings") {
  const Text t(to_bytes("cacatcg"), '$');
  for (auto bad : {"acg", "acgtx", "acgx"}) {
    try {
      apply_ordering(t, ord(bad));
      FAIL("expected OrderingMismatch");
    } catch (const Error& e) {
      CHECK(e.kind() == ErrorKind::kOrderingMismatch);
    }
  }
  CHECK_THROWS_AS(Ordering(to_bytes("aba")), Error);
}

TEST_CASE("apply_ordering is monotone and preserves the byte multiset") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    Bytes data(1 + rng() % 40);
    for (auto& b : data) b = static_cast<Byte>('a' + rng() % 6);
    const Text t(data, 0);
    const Alphabet alpha = scan_alphabet(t);
    std::vector<Byte> perm(alpha.symbols().begin(), alpha.symbols().end());
    std::shuffle(perm.begin(), perm.end(), rng);
    const Ordering o(perm);
    const RemappedText r = apply_ordering(t, o);

    REQUIRE(r.ranks.size() == data.size() + 1);
    CHECK(r.ranks.back() == 0);
    CHECK(std::count(r.ranks.begin(), r.ranks.end(), 0) == 1);
    for (std::size_t i = 0; i < data.size(); ++i) {
      CHECK(r.ranks[i] >= 1);
      CHECK(r.ranks[i] <= r.sigma);
      // Mapping back through perm recovers the byte.
      CHECK(o.perm()[r.ranks[i] - 1] == data[i]);
      for (std::size_t j = 0; j < data.size(); ++j) {
        CHECK((o.rank_of(data[i]) < o.rank_of(data[j])) == (r.ranks[i] < r.ranks[j]));
      }
    }
  }
}
