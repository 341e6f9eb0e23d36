#include "dualart/braid.hpp"

#include <cstdlib>
#include <sstream>

#include "dualart/error.hpp"

namespace dualart {

BraidWord::BraidWord(std::size_t strands, std::vector<int> letters) : strands_(strands) {
  if (strands == 0) throw StrandMismatch("braid on 0 strands");
  for (int l : letters) {
    const auto a = static_cast<std::size_t>(std::abs(l));
    if (l == 0 || a >= strands)
      throw IndexOutOfRange("braid letter " + std::to_string(l) + " on " +
                            std::to_string(strands) + " strands");
    if (!letters_.empty() && letters_.back() == -l) letters_.pop_back();
    else letters_.push_back(l);
  }
}

BraidWord BraidWord::sigma(std::size_t strands, std::size_t i, int exponent) {
  return power(BraidWord(strands, {static_cast<int>(i)}), exponent);
}

BraidWord BraidWord::embedded(std::size_t offset, std::size_t strands) const {
  if (offset + strands_ > strands) throw StrandMismatch("embedding does not fit");
  std::vector<int> out;
  out.reserve(letters_.size());
  const int o = static_cast<int>(offset);
  for (int l : letters_) out.push_back(l > 0 ? l + o : l - o);
  return BraidWord(strands, std::move(out));
}

std::string BraidWord::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) s += ',';
    s += std::to_string(letters_[i]);
  }
  return s + "]";
}

BraidWord operator*(const BraidWord& a, const BraidWord& b) {
  if (a.strands_ != b.strands_)
    throw StrandMismatch(std::to_string(a.strands_) + " vs " + std::to_string(b.strands_));
  std::vector<int> l = a.letters_;
  l.insert(l.end(), b.letters_.begin(), b.letters_.end());
  return BraidWord(a.strands_, std::move(l));
}

BraidWord inverse(const BraidWord& a) {
  std::vector<int> l(a.letters_.rbegin(), a.letters_.rend());
  for (int& x : l) x = -x;
  return BraidWord(a.strands_, std::move(l));
}

BraidWord power(const BraidWord& b, int e) {
  BraidWord base = e < 0 ? inverse(b) : b;
  BraidWord out(b.strands());
  for (int k = 0; k < std::abs(e); ++k) out = out * base;
  return out;
}

std::vector<int> parse_signed_list(const std::string& text) {
  std::vector<int> out;
  std::string cleaned;
  for (char c : text) {
    if (c == '[' || c == ']' || c == ',') cleaned += ' ';
    else cleaned += c;
  }
  std::istringstream in(cleaned);
  std::string tok;
  while (in >> tok) {
    std::size_t pos = 0;
    int v = 0;
    try {
      v = std::stoi(tok, &pos);
    } catch (const std::exception&) {
      throw ParseError("bad integer '" + tok + "'");
    }
    if (pos != tok.size() || v == 0) throw ParseError("bad letter '" + tok + "'");
    out.push_back(v);
  }
  return out;
}

std::vector<int> braid_alphabet(std::size_t strands) {
  std::vector<int> a;
  for (int i = 1; i < static_cast<int>(strands); ++i) {
    a.push_back(i);
    a.push_back(-i);
  }
  return a;
}

std::vector<BraidWord> reduced_braid_words(std::size_t strands, std::size_t max_len) {
  const auto alphabet = braid_alphabet(strands);
  std::vector<std::vector<int>> layer{{}};
  std::vector<BraidWord> out{BraidWord(strands)};
  for (std::size_t len = 1; len <= max_len && !alphabet.empty(); ++len) {
    std::vector<std::vector<int>> next;
    for (const auto& w : layer)
      for (int l : alphabet) {
        if (!w.empty() && w.back() == -l) continue;
        auto v = w;
        v.push_back(l);
        next.push_back(std::move(v));
      }
    for (const auto& w : next) out.emplace_back(strands, w);
    layer = std::move(next);
  }
  return out;
}

}  // namespace dualart
