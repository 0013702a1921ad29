#include "rlbwt/init.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>

#include "rlbwt/error.hpp"
#include "rlbwt/random.hpp"

namespace rlbwt {
namespace {

constexpr std::string_view kVowelsLower = "aeiou";
constexpr std::string_view kConsonants = "BCDGFHRLSMNPQJKTWVXYZ";

struct NamedKind {
  std::string_view name;
  InitKind kind;
};

constexpr std::array<NamedKind, 9> kKinds{{
    {"random", InitKind::kRandom},
    {"ascii", InitKind::kAscii},
    {"first-appearance", InitKind::kFirstAppearance},
    {"least-frequent", InitKind::kLeastFrequent},
    {"most-frequent", InitKind::kMostFrequent},
    {"chapin-tate", InitKind::kChapinTate},
    {"inv-chapin-tate", InitKind::kInverseChapinTate},
    {"vowels", InitKind::kVowels},
    {"file", InitKind::kFromFile},
}};

std::array<std::size_t, 256> counts_of(const Text& text) {
  std::array<std::size_t, 256> counts{};
  for (Byte b : text.bytes()) ++counts[b];
  return counts;
}

Ordering by_frequency(const Text& text, bool least_first) {
  const auto counts = counts_of(text);
  const Alphabet alphabet = scan_alphabet(text);
  std::vector<Byte> perm(alphabet.symbols().begin(), alphabet.symbols().end());
  // Ties keep ascending byte order in both directions.
  std::stable_sort(perm.begin(), perm.end(), [&](Byte a, Byte b) {
    return least_first ? counts[a] < counts[b] : counts[a] > counts[b];
  });
  return Ordering(std::move(perm));
}

Ordering first_appearance(const Text& text) {
  std::array<bool, 256> seen{};
  std::vector<Byte> perm;
  for (Byte b : text.bytes()) {
    if (!seen[b]) {
      seen[b] = true;
      perm.push_back(b);
    }
  }
  return Ordering(std::move(perm));
}

void reorder_letter_block(ByteTemplate& t, char first) {
  const Byte base = static_cast<Byte>(first);
  const int delta = first - 'A';
  std::size_t pos = base;
  for (char v : kVowelsLower) t[pos++] = static_cast<Byte>(v - 'a' + 'A' + delta);
  for (char c : kConsonants) t[pos++] = static_cast<Byte>(c + delta);
}

}  // namespace

InitMethod InitMethod::parse(std::string_view spec) {
  const auto colon = spec.find(':');
  const std::string_view head = spec.substr(0, colon);
  const std::string_view arg = colon == std::string_view::npos ? std::string_view{} : spec.substr(colon + 1);
  const auto it = std::find_if(kKinds.begin(), kKinds.end(), [&](const NamedKind& k) { return k.name == head; });
  if (it == kKinds.end()) throw Error(ErrorKind::kParse, "unknown init method '" + std::string(spec) + "'");

  InitMethod m;
  m.kind = it->kind;
  if (m.kind == InitKind::kRandom && !arg.empty()) {
    const auto [ptr, ec] = std::from_chars(arg.data(), arg.data() + arg.size(), m.seed);
    if (ec != std::errc{} || ptr != arg.data() + arg.size()) {
      throw Error(ErrorKind::kParse, "bad random seed '" + std::string(arg) + "'");
    }
  } else if (m.kind == InitKind::kFromFile) {
    if (arg.empty()) throw Error(ErrorKind::kParse, "file init needs a path: file:<path>");
    m.path = std::string(arg);
  } else if (!arg.empty()) {
    throw Error(ErrorKind::kParse, "init method '" + std::string(head) + "' takes no argument");
  }
  return m;
}

std::string InitMethod::name() const {
  for (const auto& k : kKinds) {
    if (k.kind == kind) return std::string(k.name);
  }
  return "unknown";
}

ByteTemplate ascii_template() {
  ByteTemplate t;
  std::iota(t.begin(), t.end(), Byte{0});
  return t;
}

ByteTemplate chapin_tate_template() {
  ByteTemplate t = ascii_template();
  std::swap(t['!'], t['@']);
  std::swap(t[','], t['-']);
  reorder_letter_block(t, 'A');
  reorder_letter_block(t, 'a');
  return t;
}

ByteTemplate inverse_permutation(const ByteTemplate& tmpl) {
  ByteTemplate inv;
  for (std::size_t i = 0; i < tmpl.size(); ++i) inv[tmpl[i]] = static_cast<Byte>(i);
  return inv;
}

ByteTemplate inverse_chapin_tate_template() { return inverse_permutation(chapin_tate_template()); }

ByteTemplate vowels_template() {
  ByteTemplate t;
  std::array<bool, 256> placed{};
  std::size_t pos = 0;
  for (std::string_view group : {std::string_view("aeiou"), std::string_view("AEIOU")}) {
    for (char c : group) {
      t[pos++] = static_cast<Byte>(c);
      placed[static_cast<Byte>(c)] = true;
    }
  }
  for (int v = 0; v < 256; ++v) {
    if (!placed[v]) t[pos++] = static_cast<Byte>(v);
  }
  return t;
}

Ordering restrict_template(const ByteTemplate& tmpl, const Alphabet& alphabet) {
  std::vector<Byte> perm;
  perm.reserve(alphabet.size());
  for (Byte b : tmpl) {
    if (alphabet.contains(b)) perm.push_back(b);
  }
  return Ordering(std::move(perm));
}

Ordering inverse_permutation(const Ordering& ordering) {
  const std::vector<Byte> sorted = ordering.sorted_symbols();
  std::vector<Byte> perm(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    perm[i] = sorted[static_cast<std::size_t>(ordering.rank_of(sorted[i]))];
  }
  return Ordering(std::move(perm));
}

Ordering random_ordering(const Alphabet& alphabet, std::uint64_t seed) {
  std::vector<Byte> perm(alphabet.symbols().begin(), alphabet.symbols().end());
  Rng rng(seed);
  fisher_yates(std::span<Byte>(perm), rng);
  return Ordering(std::move(perm));
}

Ordering init_ordering(const InitMethod& method, const Text& text) {
  const Alphabet alphabet = scan_alphabet(text);
  switch (method.kind) {
    case InitKind::kRandom: return random_ordering(alphabet, method.seed);
    case InitKind::kAscii: return restrict_template(ascii_template(), alphabet);
    case InitKind::kFirstAppearance: return first_appearance(text);
    case InitKind::kLeastFrequent: return by_frequency(text, true);
    case InitKind::kMostFrequent: return by_frequency(text, false);
    case InitKind::kChapinTate: return restrict_template(chapin_tate_template(), alphabet);
    case InitKind::kInverseChapinTate:
      return restrict_template(inverse_chapin_tate_template(), alphabet);
    case InitKind::kVowels: return restrict_template(vowels_template(), alphabet);
    case InitKind::kFromFile: {
      Ordering o = load_ordering_file(method.path);
      check_ordering(text, o);
      return o;
    }
  }
  throw Error(ErrorKind::kInvalidArgument, "unhandled init kind");
}

std::vector<Ordering> fixed_random_starts(std::size_t count, std::uint64_t master_seed,
                                          const Text& text) {
  const Alphabet alphabet = scan_alphabet(text);
  std::vector<Ordering> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_ordering(alphabet, master_seed + i));
  return out;
}

Ordering parse_ordering(std::string_view contents) {
  std::vector<Byte> perm;
  std::size_t line_no = 0;
  std::size_t start = 0;
  while (start <= contents.size()) {
    std::size_t end = contents.find('\n', start);
    if (end == std::string_view::npos) end = contents.size();
    ++line_no;
    std::string_view line = contents.substr(start, end - start);
    start = end + 1;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.front()))) line.remove_prefix(1);
    while (!line.empty() && std::isspace(static_cast<unsigned char>(line.back()))) line.remove_suffix(1);
    if (line.empty()) continue;
    unsigned value = 0;
    const auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), value);
    if (ec != std::errc{} || ptr != line.data() + line.size() || value > 255) {
      throw Error(ErrorKind::kParse, "line " + std::to_string(line_no) + ": expected a byte value 0-255, got '" +
                                         std::string(line) + "'");
    }
    perm.push_back(static_cast<Byte>(value));
  }
  try {
    return Ordering(std::move(perm));
  } catch (const Error& e) {
    throw Error(ErrorKind::kParse, e.what());
  }
}

Ordering load_ordering_file(const std::filesystem::path& path) {
  const Bytes data = read_file(path);
  return parse_ordering(std::string_view(reinterpret_cast<const char*>(data.data()), data.size()));
}

std::string format_ordering_file(const Ordering& ordering) {
  std::ostringstream out;
  for (Byte b : ordering.perm()) out << static_cast<unsigned>(b) << '\n';
  return out.str();
}

}  // namespace rlbwt
