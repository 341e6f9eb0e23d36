#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "dualart/braid.hpp"

namespace dualart {

/// Freely reduced word in f_1, ..., f_n (signed 1-based letters).
class FreeWord {
 public:
  explicit FreeWord(std::size_t rank = 0, std::vector<int> letters = {});

  static FreeWord generator(std::size_t rank, std::size_t i, int exponent = 1);

  std::size_t rank() const { return rank_; }
  const std::vector<int>& letters() const { return letters_; }
  std::size_t length() const { return letters_.size(); }
  bool is_identity() const { return letters_.empty(); }

  /// Every letter has index in [lo, hi] (1-based, inclusive).
  bool supported_on(std::size_t lo, std::size_t hi) const;

  std::string to_string() const;  // "f1*f2^-1", "1" for the identity

  friend FreeWord operator*(const FreeWord& a, const FreeWord& b);
  friend FreeWord inverse(const FreeWord& a);
  friend bool operator==(const FreeWord&, const FreeWord&);

 private:
  std::size_t rank_;
  std::vector<int> letters_;
};

inline bool operator==(const FreeWord& a, const FreeWord& b) {
  return a.rank_ == b.rank_ && a.letters_ == b.letters_;
}

std::string canonical_key(const FreeWord& w);

/// (f_1, ..., f_n)
std::vector<FreeWord> free_basis(std::size_t rank);

/// Endomorphism given by the images of f_1..f_n.
FreeWord substitute(const std::vector<FreeWord>& images, const FreeWord& w);

/// Images of f_1..f_n under the star action of the braid.
std::vector<FreeWord> star_images(const BraidWord& braid);

/// beta * w under the star action. Throws StrandMismatch.
FreeWord star_apply(const BraidWord& braid, const FreeWord& w);

}  // namespace dualart
