#include "lgbridge/braid.hpp"

#include <cctype>
#include <charconv>
#include <cstdlib>
#include <random>
#include <sstream>

namespace lgbridge {

BraidWord::BraidWord(int strands) : strands_(strands) {
  if (strands < 1) throw BraidError("braid needs at least one strand");
}

BraidWord::BraidWord(int strands, std::vector<Letter> letters)
    : strands_(strands), letters_(std::move(letters)) {
  if (strands < 1) throw BraidError("braid needs at least one strand");
  for (const Letter& l : letters_) {
    if (l.index < 1 || l.index > strands - 1)
      throw BraidError("generator index " + std::to_string(l.index) + " out of range for " +
                       std::to_string(strands) + " strands");
    if (l.sign != 1 && l.sign != -1) throw BraidError("letter sign must be +1 or -1");
  }
}

std::string BraidWord::to_text() const {
  std::ostringstream out;
  for (std::size_t k = 0; k < letters_.size(); ++k) {
    if (k) out << ' ';
    out << letters_[k].sign * letters_[k].index;
  }
  return out.str();
}

BraidWord parse_braid(std::string_view text, int strands) {
  std::vector<Letter> letters;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == text.size()) break;
    std::size_t end = pos;
    while (end < text.size() && !std::isspace(static_cast<unsigned char>(text[end]))) ++end;
    const std::string_view token = text.substr(pos, end - pos);
    int value = 0;
    const char* first = token.data();
    if (!token.empty() && token.front() == '+') ++first;
    auto [ptr, ec] = std::from_chars(first, token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size() || first == ptr)
      throw BraidError("malformed braid token '" + std::string(token) + "'");
    if (value == 0) throw BraidError("braid letter 0 is not a generator");
    letters.push_back({std::abs(value), value > 0 ? 1 : -1});
    pos = end;
  }
  return BraidWord(strands, std::move(letters));
}

BraidWord hat(const BraidWord& b) {
  std::vector<Letter> out;
  out.reserve(b.length());
  for (const Letter& l : b.letters()) out.push_back({b.strands() - l.index, l.sign});
  return BraidWord(b.strands(), std::move(out));
}

BraidWord inverse(const BraidWord& b) {
  std::vector<Letter> out(b.letters().rbegin(), b.letters().rend());
  for (Letter& l : out) l.sign = -l.sign;
  return BraidWord(b.strands(), std::move(out));
}

BraidWord concat(const BraidWord& a, const BraidWord& b) {
  if (a.strands() != b.strands()) throw BraidError("concatenating braids of different strand counts");
  std::vector<Letter> out = a.letters();
  out.insert(out.end(), b.letters().begin(), b.letters().end());
  return BraidWord(a.strands(), std::move(out));
}

BraidWord conjugate(const BraidWord& b, const BraidWord& g) {
  return concat(concat(g, b), inverse(g));
}

BraidWord stabilize(const BraidWord& b, int sign) {
  std::vector<Letter> out = b.letters();
  out.push_back({b.strands(), sign >= 0 ? 1 : -1});
  return BraidWord(b.strands() + 1, std::move(out));
}

BraidWord random_word(std::uint64_t seed, int strands, std::size_t length) {
  if (strands < 1) throw BraidError("braid needs at least one strand");
  if (strands == 1) return BraidWord(1);
  // mt19937_64 output is fixed by the standard; the reduction below avoids
  // implementation-defined distributions so words are portable per seed.
  std::mt19937_64 rng(seed);
  const std::uint64_t choices = 2 * static_cast<std::uint64_t>(strands - 1);
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % choices;
  std::vector<Letter> out;
  out.reserve(length);
  for (std::size_t k = 0; k < length; ++k) {
    std::uint64_t r = rng();
    while (r >= limit) r = rng();
    r %= choices;
    out.push_back({static_cast<int>(r / 2) + 1, (r % 2 == 0) ? 1 : -1});
  }
  return BraidWord(strands, std::move(out));
}

}  // namespace lgbridge
