// Braid words over the Artin generators and the moves used to check link
// invariance.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace lgbridge {

/// sigma_index^sign, index in 1..n-1.
struct Letter {
  int index = 1;
  int sign = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

class BraidError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

class BraidWord {
 public:
  /// Identity braid on the given number of strands.
  explicit BraidWord(int strands);
  /// Throws BraidError if any letter lies outside 1..strands-1.
  BraidWord(int strands, std::vector<Letter> letters);

  int strands() const { return strands_; }
  const std::vector<Letter>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Signed-integer text form, e.g. "1 -2 1 -2".
  std::string to_text() const;

  friend bool operator==(const BraidWord&, const BraidWord&) = default;

 private:
  int strands_;
  std::vector<Letter> letters_;
};

/// Parses whitespace-separated nonzero integers; k means sigma_|k|^{sign k}.
BraidWord parse_braid(std::string_view text, int strands);

/// sigma_i^e -> sigma_{n-i}^e letterwise (the braid seen from the other side).
BraidWord hat(const BraidWord& b);

/// Reversed word with flipped signs.
BraidWord inverse(const BraidWord& b);

/// g b g^{-1}; g must live in the same braid group.
BraidWord conjugate(const BraidWord& b, const BraidWord& g);

/// b in B_{n+1} followed by sigma_n^{sign}.
BraidWord stabilize(const BraidWord& b, int sign);

/// Concatenation in the same braid group.
BraidWord concat(const BraidWord& a, const BraidWord& b);

/// Deterministic pseudorandom word, letters uniform over the 2(n-1) signed
/// generators. Strand count 1 always yields the empty word.
BraidWord random_word(std::uint64_t seed, int strands, std::size_t length);

}  // namespace lgbridge
