#pragma once

#include <random>
#include <string>
#include <vector>

#include "dualart/braid.hpp"
#include "dualart/coxeter.hpp"

namespace testing_support {

inline dualart::SystemPtr sys(const std::string& text) {
  return dualart::CoxeterSystem::create(dualart::parse_system(text));
}

inline dualart::SystemPtr a1() { return sys(R"({"matrix": [[1]]})"); }
inline dualart::SystemPtr a2() { return sys(R"({"matrix": [[1,3],[3,1]]})"); }
inline dualart::SystemPtr b2() { return sys(R"({"matrix": [[1,4],[4,1]]})"); }
inline dualart::SystemPtr i2(unsigned m) {
  return sys("{\"matrix\": [[1," + std::to_string(m) + "],[" + std::to_string(m) + ",1]]}");
}
inline dualart::SystemPtr inf_dihedral() { return sys(R"({"matrix": [[1,"inf"],["inf",1]]})"); }
inline dualart::SystemPtr a3() { return sys(R"({"matrix": [[1,3,2],[3,1,3],[2,3,1]]})"); }

/// Uniform random freely reduced braid word of the given length.
inline dualart::BraidWord random_braid(std::mt19937_64& rng, std::size_t strands, std::size_t len) {
  if (strands < 2) return dualart::BraidWord(strands);
  const auto alphabet = dualart::braid_alphabet(strands);
  std::uniform_int_distribution<std::size_t> pick(0, alphabet.size() - 1);
  std::vector<int> l;
  while (l.size() < len) {
    int x = alphabet[pick(rng)];
    if (!l.empty() && l.back() == -x) continue;
    l.push_back(x);
  }
  return dualart::BraidWord(strands, l);
}

inline std::vector<std::size_t> random_word(std::mt19937_64& rng, std::size_t rank, std::size_t len) {
  std::uniform_int_distribution<std::size_t> pick(0, rank - 1);
  std::vector<std::size_t> w(len);
  for (auto& x : w) x = pick(rng);
  return w;
}

}  // namespace testing_support
