#include "dualart/free_group.hpp"

#include <cstdlib>

#include "dualart/error.hpp"

namespace dualart {

FreeWord::FreeWord(std::size_t rank, std::vector<int> letters) : rank_(rank) {
  letters_.reserve(letters.size());
  for (int l : letters) {
    if (l == 0 || static_cast<std::size_t>(std::abs(l)) > rank)
      throw IndexOutOfRange("free letter " + std::to_string(l) + " in rank " +
                            std::to_string(rank));
    if (!letters_.empty() && letters_.back() == -l) letters_.pop_back();
    else letters_.push_back(l);
  }
}

FreeWord FreeWord::generator(std::size_t rank, std::size_t i, int exponent) {
  std::vector<int> l(static_cast<std::size_t>(std::abs(exponent)),
                     exponent < 0 ? -static_cast<int>(i) : static_cast<int>(i));
  return FreeWord(rank, std::move(l));
}

bool FreeWord::supported_on(std::size_t lo, std::size_t hi) const {
  for (int l : letters_) {
    const auto a = static_cast<std::size_t>(std::abs(l));
    if (a < lo || a > hi) return false;
  }
  return true;
}

std::string FreeWord::to_string() const {
  if (letters_.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += '*';
    s += 'f' + std::to_string(std::abs(letters_[i]));
    if (letters_[i] < 0) s += "^-1";
  }
  return s;
}

FreeWord operator*(const FreeWord& a, const FreeWord& b) {
  if (a.rank_ != b.rank_)
    throw RankMismatch(std::to_string(a.rank_) + " vs " + std::to_string(b.rank_));
  FreeWord out(a.rank_);
  // cancel at the seam only; both inputs are already reduced
  std::size_t ia = a.letters_.size(), ib = 0;
  while (ia > 0 && ib < b.letters_.size() && a.letters_[ia - 1] == -b.letters_[ib]) {
    --ia;
    ++ib;
  }
  out.letters_.reserve(ia + b.letters_.size() - ib);
  out.letters_.assign(a.letters_.begin(), a.letters_.begin() + ia);
  out.letters_.insert(out.letters_.end(), b.letters_.begin() + ib, b.letters_.end());
  return out;
}

FreeWord inverse(const FreeWord& a) {
  FreeWord out(a.rank_);
  out.letters_.assign(a.letters_.rbegin(), a.letters_.rend());
  for (int& x : out.letters_) x = -x;
  return out;
}

std::string canonical_key(const FreeWord& w) {
  std::string s;
  for (int l : w.letters()) {
    s += std::to_string(l);
    s += ',';
  }
  return s;
}

std::vector<FreeWord> free_basis(std::size_t rank) {
  std::vector<FreeWord> out;
  for (std::size_t i = 1; i <= rank; ++i) out.push_back(FreeWord::generator(rank, i));
  return out;
}

FreeWord substitute(const std::vector<FreeWord>& images, const FreeWord& w) {
  if (images.size() != w.rank()) throw RankMismatch("substitution rank");
  std::vector<FreeWord> inv;
  inv.reserve(images.size());
  for (const auto& x : images) inv.push_back(inverse(x));
  FreeWord out(images.empty() ? 0 : images.front().rank());
  for (int l : w.letters())
    out = out * (l > 0 ? images[l - 1] : inv[-l - 1]);
  return out;
}

namespace {

// images of f_j under a single letter, written out directly for both signs
FreeWord letter_image(int letter, std::size_t n, std::size_t j) {
  const std::size_t i = static_cast<std::size_t>(std::abs(letter));
  const FreeWord fi = FreeWord::generator(n, i), fi1 = FreeWord::generator(n, i + 1);
  if (j != i && j != i + 1) return FreeWord::generator(n, j);
  if (letter > 0) {
    if (j == i) return fi1;
    return inverse(fi1) * fi * fi1;
  }
  if (j == i) return fi * fi1 * inverse(fi);
  return fi;
}

}  // namespace

std::vector<FreeWord> star_images(const BraidWord& braid) {
  const std::size_t n = braid.strands();
  std::vector<FreeWord> images = free_basis(n);
  // M_k(f_j) = M_{k-1}(iota(b_k)(f_j)), left to right
  for (int letter : braid.letters()) {
    std::vector<FreeWord> next;
    next.reserve(n);
    for (std::size_t j = 1; j <= n; ++j) next.push_back(substitute(images, letter_image(letter, n, j)));
    images = std::move(next);
  }
  return images;
}

FreeWord star_apply(const BraidWord& braid, const FreeWord& w) {
  if (braid.strands() != w.rank())
    throw StrandMismatch("braid on " + std::to_string(braid.strands()) + " strands, word of rank " +
                         std::to_string(w.rank()));
  return substitute(star_images(braid), w);
}

}  // namespace dualart
