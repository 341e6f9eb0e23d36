#include "dualart/noncrossing.hpp"

#include <cstdlib>
#include <deque>
#include <unordered_set>

#include "dualart/error.hpp"
#include "dualart/hurwitz.hpp"

namespace dualart {

Assignment standard_assignment(const CoxeterSystem& system) {
  Assignment a;
  for (auto o : system.matrix().order()) a.emplace_back(o);
  return a;
}

Assignment left_assignment(const CoxeterSystem& system, std::size_t k) {
  Assignment a = standard_assignment(system);
  for (std::size_t i = k; i < a.size(); ++i) a[i].reset();
  return a;
}

Assignment right_assignment(const CoxeterSystem& system, std::size_t k) {
  Assignment a = standard_assignment(system);
  for (std::size_t i = 0; i < k && i < a.size(); ++i) a[i].reset();
  return a;
}

GroupElement pi_project(const FreeWord& w, const CoxeterSystem& system, const Assignment& a) {
  if (a.size() != w.rank())
    throw RankMismatch("word of rank " + std::to_string(w.rank()) + ", assignment of size " +
                       std::to_string(a.size()));
  GroupElement g = system.identity();
  for (int l : w.letters())
    if (const auto& s = a[static_cast<std::size_t>(std::abs(l)) - 1]) g = g.times_generator(*s);
  return g;
}

GroupElement pi_project(const FreeWord& w, const CoxeterSystem& system) {
  if (system.rank() != w.rank())
    throw RankMismatch("word of rank " + std::to_string(w.rank()) + ", system of rank " +
                       std::to_string(system.rank()));
  return pi_project(w, system, standard_assignment(system));
}

NCCertificate nc_prefix(const BraidWord& braid, std::size_t k) {
  const std::size_t n = braid.strands();
  if (k > n) throw IndexOutOfRange("prefix length " + std::to_string(k));
  const auto t = hurwitz_apply(braid, free_basis(n));
  FreeWord e(n);
  for (std::size_t i = 0; i < k; ++i) e = e * t[i];
  return {e, braid, k};
}

std::optional<NCCertificate> lift_search(const IntervalPoset& p, const GroupElement& a,
                                         std::size_t cap) {
  const std::size_t k = p.height(p.index_of(a));
  const auto& o = p.orbit();
  for (std::size_t v = 0; v < o.size() && v < cap; ++v) {
    GroupElement acc = p.system()->identity();
    for (std::size_t i = 0; i < k; ++i) acc = acc * o.nodes[v][i];
    if (acc == a) return nc_prefix(o.tree_word(v), k);
  }
  return std::nullopt;
}

Syllables syllable_factorization(const FreeWord& w, std::size_t split) {
  if (split > w.rank()) throw IndexOutOfRange("split " + std::to_string(split));
  Syllables s{split, {}, true};
  std::vector<int> run;
  bool run_left = true;
  for (int l : w.letters()) {
    const bool left = static_cast<std::size_t>(std::abs(l)) <= split;
    if (!run.empty() && left != run_left) {
      s.syllables.emplace_back(w.rank(), std::move(run));
      run.clear();
    }
    if (run.empty()) {
      run_left = left;
      if (s.syllables.empty()) s.starts_left = left;
    }
    run.push_back(l);
  }
  if (!run.empty()) s.syllables.emplace_back(w.rank(), std::move(run));
  return s;
}

Goodness is_good(const FreeWord& w, std::size_t split, const CoxeterSystem& left,
                 const CoxeterSystem& right) {
  if (left.rank() != split || right.rank() + split != w.rank())
    throw RankMismatch("factor ranks do not match the split");
  const Syllables s = syllable_factorization(w, split);
  const auto lt = left.coxeter_tuple();
  const auto rt = right.coxeter_tuple();
  for (const auto& syl : s.syllables) {
    const bool is_left = static_cast<std::size_t>(std::abs(syl.letters().front())) <= split;
    GroupElement g = is_left ? left.identity() : right.identity();
    for (int l : syl.letters()) {
      const std::size_t i = static_cast<std::size_t>(std::abs(l)) - 1;
      g = g * (is_left ? lt[i] : rt[i - split]);
    }
    if (g.is_identity()) return {false, syl};
  }
  return {};
}

std::optional<BraidWord> h_star_search(const NCCertificate& c1, const NCCertificate& c2,
                                       const std::vector<BraidWord>& h_gens,
                                       const CoxeterSystem& system, std::size_t cap) {
  if (!(pi_project(c1.element, system) == pi_project(c2.element, system)))
    throw ProjectionMismatch("the certificates project to different elements");
  const std::size_t n = c1.element.rank();
  std::vector<BraidWord> moves;
  for (const auto& g : h_gens) {
    moves.push_back(g);
    moves.push_back(inverse(g));
  }
  std::vector<std::vector<FreeWord>> images;
  for (const auto& m : moves) images.push_back(star_images(m));
  struct Node {
    FreeWord w;
    BraidWord tau;
  };
  std::deque<Node> queue{{c2.element, BraidWord(n)}};
  std::unordered_set<std::string> seen{canonical_key(c2.element)};
  while (!queue.empty()) {
    Node u = std::move(queue.front());
    queue.pop_front();
    if (u.w == c1.element) return u.tau;
    for (std::size_t m = 0; m < moves.size(); ++m) {
      if (seen.size() >= cap) break;
      FreeWord v = substitute(images[m], u.w);
      if (seen.insert(canonical_key(v)).second) queue.push_back({std::move(v), moves[m] * u.tau});
    }
  }
  return std::nullopt;
}

}  // namespace dualart
