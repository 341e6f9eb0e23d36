#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace dualart {

/// Freely reduced word in the Artin generators of Br_k.
///
/// Letters are signed 1-based: +i is sigma_i, -i is sigma_i^-1.
/// A braid acts on the left, so the last letter is applied first.
class BraidWord {
 public:
  explicit BraidWord(std::size_t strands = 1, std::vector<int> letters = {});

  static BraidWord sigma(std::size_t strands, std::size_t i, int exponent = 1);

  std::size_t strands() const { return strands_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }

  /// Same braid on more strands, indices shifted by offset.
  BraidWord embedded(std::size_t offset, std::size_t strands) const;

  std::string to_string() const;  // "[1,-2]"

  friend BraidWord operator*(const BraidWord& a, const BraidWord& b);
  friend BraidWord inverse(const BraidWord& a);
  friend bool operator==(const BraidWord&, const BraidWord&) = default;
  friend auto operator<=>(const BraidWord&, const BraidWord&) = default;

 private:
  std::size_t strands_;
  std::vector<int> letters_;
};

/// b^e for e of either sign.
BraidWord power(const BraidWord& b, int e);

/// "[1,-2]" or "1,-2"; throws ParseError.
std::vector<int> parse_signed_list(const std::string& text);

/// All freely reduced braid words of length <= max_len, ordered by
/// length and then lexicographically on the letter sequence
/// (sigma_1, sigma_1^-1, sigma_2, ...).
std::vector<BraidWord> reduced_braid_words(std::size_t strands, std::size_t max_len);

/// Letter alphabet in the enumeration order above.
std::vector<int> braid_alphabet(std::size_t strands);

}  // namespace dualart
