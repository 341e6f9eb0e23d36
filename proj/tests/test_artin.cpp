#include <map>
#include <random>

#include "doctest.h"
#include "dualart/artin.hpp"
#include "dualart/error.hpp"
#include "dualart/hurwitz.hpp"
#include "oracle/braid_monoid.hpp"
#include "support.hpp"

using namespace dualart;
using namespace testing_support;

namespace {

CoxeterMatrix dihedral_matrix(unsigned m) { return CoxeterMatrix({{1, m}, {m, 1}}); }
CoxeterMatrix free_a1a1() { return CoxeterMatrix({{1, kInfinity}, {kInfinity, 1}}); }

std::vector<int> random_signed(std::mt19937_64& rng, int rank, std::size_t len) {
  std::uniform_int_distribution<int> pick(1, rank);
  std::bernoulli_distribution neg(0.5);
  std::vector<int> w(len);
  for (auto& x : w) x = neg(rng) ? -pick(rng) : pick(rng);
  return w;
}

void all_words(int rank, std::size_t len, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  out.push_back(cur);
  if (cur.size() == len) return;
  for (int g = 1; g <= rank; ++g)
    for (int s : {g, -g}) {
      if (!cur.empty() && cur.back() == -s) continue;
      cur.push_back(s);
      all_words(rank, len, cur, out);
      cur.pop_back();
    }
}

void check_left_weighted(const ArtinElement& x) {
  for (const auto& syl : x.syllables()) {
    CHECK_FALSE(syl.form.is_identity());
    const auto& f = x.system().factors()[syl.factor];
    for (std::size_t k = 0; k < syl.form.simples.size(); ++k) {
      const auto& s = f.simple(syl.form.simples[k]);
      CHECK_FALSE(s.is_identity());
      CHECK_FALSE(s == f.w0);
      if (k == 0) continue;
      const auto left = s.descent_mask(Side::Left);
      CHECK((left & ~f.simple(syl.form.simples[k - 1]).descent_mask(Side::Right)) == 0);
    }
  }
  for (std::size_t k = 1; k < x.syllables().size(); ++k)
    CHECK(x.syllables()[k].factor != x.syllables()[k - 1].factor);
}

// all words up to length len, grouped by normal form, compared with the oracle
void exhaustive_against_monoid(unsigned m, std::size_t len) {
  auto art = ArtinSystem::create(dihedral_matrix(m));
  const auto oracle = oracle::dihedral_monoid(m);
  std::vector<std::vector<int>> words;
  std::vector<int> cur;
  all_words(2, len, cur, words);
  std::map<std::string, std::vector<int>> rep;
  for (const auto& w : words) {
    auto x = art->from_word(w);
    check_left_weighted(x);
    auto [it, fresh] = rep.emplace(canonical_key(x), w);
    if (!fresh) CHECK(oracle.group_equal(it->second, w));
  }
  std::vector<std::vector<int>> reps;
  for (const auto& [k, w] : rep) reps.push_back(w);
  for (std::size_t a = 0; a < reps.size(); ++a)
    for (std::size_t b = a + 1; b < reps.size(); ++b) CHECK_FALSE(oracle.group_equal(reps[a], reps[b]));
}

}  // namespace

TEST_CASE("defining relations and small normal forms") {
  auto art = ArtinSystem::create(dihedral_matrix(3));
  CHECK(art->from_word({1, 2, 1}) == art->from_word({2, 1, 2}));
  auto d = art->from_word({1, 2, 1});
  REQUIRE(d.syllables().size() == 1);
  CHECK(d.syllables()[0].form.delta == 1);
  CHECK(d.syllables()[0].form.simples.empty());
  CHECK(d == art->delta(0, 1));
  CHECK(d.to_string() == "D1^1");
  CHECK(art->from_word({1, 2}).to_string() == "[s1s2]");
  CHECK(art->from_word({1, 1}).to_string() == "[s1][s1]");
  CHECK(art->from_word({-1}).to_string() == "D1^-1[s1s2]");
  CHECK(art->from_word({1, -1}).is_identity());
  CHECK(art->identity().to_string() == "1");
  CHECK_FALSE(art->from_word({1, 2}) == art->from_word({2, 1}));

  auto f2 = ArtinSystem::create(free_a1a1());
  CHECK(f2->factors().size() == 2);
  CHECK_FALSE(f2->from_word({1, 2}) == f2->from_word({2, 1}));
  CHECK(f2->from_word({1, 2}).syllables().size() == 2);
  CHECK(f2->from_word({1, 2, -2, 1}) == f2->from_word({1, 1}));
  CHECK(f2->from_word({1, 2, -2, 1}).syllables().size() == 1);
  CHECK(f2->from_word({1, 2}).to_string() == "D1^1 * D2^1");

  CHECK_THROWS_AS(art->generator(2), IndexOutOfRange);
  CHECK_THROWS_AS(art->from_word({0}), IndexOutOfRange);
  CHECK_THROWS_AS(ArtinSystem::create(CoxeterMatrix({{1, 3, 3}, {3, 1, 3}, {3, 3, 1}})), UnsupportedSystem);
}

TEST_CASE("normal forms agree with the monoid oracle") {
  exhaustive_against_monoid(3, 5);
  exhaustive_against_monoid(4, 4);
  exhaustive_against_monoid(5, 4);
}

TEST_CASE("random longer words against the oracle") {
  std::mt19937_64 rng(11);
  for (unsigned m : {3u, 4u}) {
    auto art = ArtinSystem::create(dihedral_matrix(m));
    const auto oracle = oracle::dihedral_monoid(m);
    const auto rel_l = oracle::ArtinMonoid::alternating(1, 2, m), rel_r = oracle::ArtinMonoid::alternating(2, 1, m);
    for (int trial = 0; trial < 150; ++trial) {
      auto w = random_signed(rng, 2, 8);
      // insert a relation or a cancelling pair: equal in the group
      auto v = w;
      std::uniform_int_distribution<std::size_t> at(0, v.size());
      const auto pos = static_cast<long>(at(rng));
      if (trial % 2) {
        std::vector<int> ins = rel_l;
        for (auto it = rel_r.rbegin(); it != rel_r.rend(); ++it) ins.push_back(-*it);
        v.insert(v.begin() + pos, ins.begin(), ins.end());
      } else {
        v.insert(v.begin() + pos, {2, -2});
      }
      CHECK(art->from_word(w) == art->from_word(v));
      auto u = random_signed(rng, 2, 6);
      CHECK((art->from_word(w) == art->from_word(u)) == oracle.group_equal(w, u));
    }
  }
}

TEST_CASE("group axioms") {
  std::mt19937_64 rng(5);
  for (auto matrix : {dihedral_matrix(3), dihedral_matrix(4), dihedral_matrix(6), free_a1a1(),
                      CoxeterMatrix({{1, 3, 2}, {3, 1, 3}, {2, 3, 1}}),
                      CoxeterMatrix({{1, 3, kInfinity}, {3, 1, kInfinity}, {kInfinity, kInfinity, 1}})}) {
    auto art = ArtinSystem::create(matrix);
    const int n = static_cast<int>(art->rank());
    for (int trial = 0; trial < 40; ++trial) {
      auto a = art->from_word(random_signed(rng, n, 7));
      auto b = art->from_word(random_signed(rng, n, 7));
      auto c = art->from_word(random_signed(rng, n, 5));
      CHECK((a * b) * c == a * (b * c));
      CHECK((a * inverse(a)).is_identity());
      CHECK((inverse(a) * a).is_identity());
      CHECK(inverse(a * b) == inverse(b) * inverse(a));
      CHECK(a * art->identity() == a);
      check_left_weighted(a * b);
    }
    // word evaluation respects concatenation
    for (int trial = 0; trial < 20; ++trial) {
      auto u = random_signed(rng, n, 6), v = random_signed(rng, n, 6);
      auto uv = u;
      uv.insert(uv.end(), v.begin(), v.end());
      CHECK(art->from_word(uv) == art->from_word(u) * art->from_word(v));
    }
  }
}

TEST_CASE("delta conjugation is the diagram automorphism") {
  auto a2 = ArtinSystem::create(dihedral_matrix(3));
  auto d = a2->delta(0, 1);
  CHECK(inverse(d) * a2->generator(0) * d == a2->generator(1));
  CHECK(inverse(d) * a2->generator(1) * d == a2->generator(0));
  auto b2 = ArtinSystem::create(dihedral_matrix(4));
  auto db = b2->delta(0, 1);
  CHECK(inverse(db) * b2->generator(0) * db == b2->generator(0));
  CHECK(b2->factors()[0].w0_central);
  CHECK_FALSE(a2->factors()[0].w0_central);
  auto a3 = ArtinSystem::create(CoxeterMatrix({{1, 3, 2}, {3, 1, 3}, {2, 3, 1}}));
  auto d3 = a3->from_word({1, 2, 1, 3, 2, 1});
  CHECK(d3 == a3->delta(0, 1));
  for (int i = 0; i < 3; ++i)
    CHECK(inverse(d3) * a3->generator(static_cast<std::size_t>(i)) * d3 ==
          a3->generator(static_cast<std::size_t>(2 - i)));
  // Delta^2 is central
  auto d2 = a3->delta(0, 2);
  for (std::size_t i = 0; i < 3; ++i) CHECK(d2 * a3->generator(i) == a3->generator(i) * d2);
}

TEST_CASE("hurwitz action over the Artin group") {
  std::mt19937_64 rng(17);
  for (auto matrix : {dihedral_matrix(3), CoxeterMatrix({{1, 3, 2}, {3, 1, 3}, {2, 3, 1}}), free_a1a1()}) {
    auto art = ArtinSystem::create(matrix);
    const auto start = art->artin_tuple();
    const std::size_t n = start.size();
    const auto prod = tuple_product(start);
    for (int trial = 0; trial < 30; ++trial) {
      auto b1 = random_braid(rng, n, 4), b2 = random_braid(rng, n, 4);
      auto t = hurwitz_apply(b1 * b2, start);
      CHECK(t == hurwitz_apply(b1, hurwitz_apply(b2, start)));
      CHECK(tuple_product(t) == prod);
      CHECK(hurwitz_apply(inverse(b1), hurwitz_apply(b1, start)) == start);
    }
    if (n == 3) {
      auto lhs = BraidWord(3, {1, 2, 1}), rhs = BraidWord(3, {2, 1, 2});
      CHECK(hurwitz_apply(lhs, start) == hurwitz_apply(rhs, start));
    }
  }
  auto a2 = ArtinSystem::create(dihedral_matrix(3));
  CHECK(hurwitz_apply(power(BraidWord::sigma(2, 1, 1), 3), a2->artin_tuple()) == a2->artin_tuple());
  CHECK_FALSE(hurwitz_apply(BraidWord::sigma(2, 1, 1), a2->artin_tuple()) == a2->artin_tuple());
}

TEST_CASE("well-stabilized checks") {
  auto a2 = well_stabilized_check(dihedral_matrix(3), 100);
  CHECK(a2.verdict == Verdict::Proven);
  CHECK(a2.method == "schreier");
  CHECK(a2.orbit_complete);
  CHECK(a2.orbit_size == 3);
  CHECK_FALSE(a2.generators.empty());

  auto r1 = well_stabilized_check(CoxeterMatrix(std::vector<std::vector<unsigned>>{{1u}}), 10);
  CHECK(r1.verdict == Verdict::Proven);

  auto f = well_stabilized_check(free_a1a1(), 50);
  CHECK(f.verdict == Verdict::Proven);
  CHECK(f.method == "free-product");
  CHECK_FALSE(f.orbit_complete);

  for (auto m : {dihedral_matrix(4), dihedral_matrix(5), CoxeterMatrix({{1, 3, 2}, {3, 1, 3}, {2, 3, 1}})}) {
    auto r = well_stabilized_check(m, 1000);
    CHECK(r.verdict == Verdict::Proven);
    CHECK(r.method == "schreier");
  }
  auto fp = well_stabilized_check(CoxeterMatrix({{1, 3, kInfinity}, {3, 1, kInfinity}, {kInfinity, kInfinity, 1}}), 100);
  CHECK(fp.verdict == Verdict::Proven);
  CHECK(fp.method == "free-product");

  // a cap too small to close any orbit
  auto small = well_stabilized_check(CoxeterMatrix({{1, 3, 2}, {3, 1, 3}, {2, 3, 1}}), 4);
  CHECK(small.verdict == Verdict::Inconclusive);
  CHECK(small.method == "none");
}

TEST_CASE("tau equivalences") {
  auto eq = tau_equivalences(dihedral_matrix(3), BraidWord(2, {1, 1, 1}), BraidWord(2));
  CHECK(eq.approx);
  CHECK(eq.dot_approx);
  auto same = tau_equivalences(dihedral_matrix(4), BraidWord(2, {1, -1, 1}), BraidWord(2, {1, -1, 1}));
  CHECK(same.approx);
  CHECK(same.dot_approx);
  auto f = tau_equivalences(free_a1a1(), BraidWord(2, {1, 1}), BraidWord(2));
  CHECK_FALSE(f.approx);
  CHECK_FALSE(f.dot_approx);
  // B2: sigma1^2 changes the last entry in both groups
  auto b = tau_equivalences(dihedral_matrix(4), BraidWord(2, {1, 1}), BraidWord(2));
  CHECK_FALSE(b.dot_approx);

  std::mt19937_64 rng(23);
  auto w = CoxeterSystem::create(dihedral_matrix(3));
  auto art = ArtinSystem::create(dihedral_matrix(3));
  std::size_t both = 0;
  for (int trial = 0; trial < 200; ++trial) {
    auto t1 = random_braid(rng, 2, 5), t2 = random_braid(rng, 2, 5);
    auto r = tau_equivalences(w, art, t1, t2);
    if (r.dot_approx) CHECK(r.approx);
    both += r.dot_approx;
  }
  CHECK(both > 0);
  CHECK_THROWS_AS(tau_equivalences(CoxeterMatrix({{1, 3, 3}, {3, 1, 3}, {3, 3, 1}}), BraidWord(3), BraidWord(3)),
                  UnsupportedSystem);
}
