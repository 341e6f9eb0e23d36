#include <map>
#include <random>
#include <set>

#include "doctest.h"
#include "dualart/coxeter.hpp"
#include "dualart/error.hpp"
#include "oracle/perm_group.hpp"
#include "support.hpp"

using namespace dualart;
using namespace testing_support;

namespace {

GroupElement pow(const GroupElement& g, int k) {
  GroupElement acc = g.system().identity();
  for (int i = 0; i < k; ++i) acc = acc * g;
  return acc;
}

std::vector<Rational> flat(std::initializer_list<long> v) {
  std::vector<Rational> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

}  // namespace

TEST_CASE("parsing system files") {
  auto m = parse_system(R"({"matrix": [[1,3],[3,1]], "order": [1,2]})");
  CHECK(m.rank() == 2);
  CHECK(m(0, 1) == 3);
  auto inf = parse_system(R"({"matrix": [[1,"inf"],["inf",1]]})");
  CHECK(inf.is_infinite(0, 1));
  CHECK(parse_system("{\"matrix\": [[1,\"\xE2\x88\x9E\"],[\"\xE2\x88\x9E\",1]]}").is_infinite(0, 1));
  CHECK_THROWS_AS(parse_system(R"({"matrix": [[1,3],[4,1]]})"), InvalidMatrix);
  CHECK_THROWS_AS(parse_system(R"({"matrix": [[2,3],[3,1]]})"), InvalidMatrix);
  CHECK_THROWS_AS(parse_system(R"({"matrix": [[1,1],[1,1]]})"), InvalidMatrix);
  CHECK_THROWS_AS(parse_system(R"({"matrix": []})"), InvalidMatrix);
  CHECK_THROWS_AS(parse_system(R"({"matrix": [[1,3],[3,1]], "order": [1,1]})"), InvalidMatrix);
  CHECK_THROWS_AS(parse_system(R"({"matrx": 1})"), ParseError);
  CHECK_THROWS_AS(parse_system("matrix = [[1, 'x'], ['x', 1]]"), ParseError);
  CHECK_THROWS_AS(parse_system("garbage"), ParseError);

  auto toml = parse_system(
      "# A3 reversed\n"
      "matrix = [[1, 3, 2],\n  [3, 1, 3],\n  [2, 3, 1],]\n"
      "order = [3, 2, 1]\n");
  CHECK(toml.rank() == 3);
  CHECK(toml.order() == std::vector<std::size_t>{2, 1, 0});
  CHECK(parse_system("matrix = [[1, 'inf'], [\"inf\", 1]]").is_infinite(0, 1));

  CHECK(parse_system(serialize_system(toml)) == toml);
  CHECK(parse_system(serialize_system(inf)) == inf);
}

TEST_CASE("generator matrices") {
  auto w = a2();
  CHECK(w->generator(0).raw_matrix() == flat({-1, 1, 0, 1}));
  CHECK(w->generator(1).raw_matrix() == flat({1, 0, 1, -1}));
  CHECK_THROWS_AS(w->generator(2), IndexOutOfRange);
  for (auto s : {a1(), a2(), b2(), i2(5), inf_dihedral(), a3()})
    for (std::size_t i = 0; i < s->rank(); ++i) CHECK((s->generator(i) * s->generator(i)).is_identity());
}

TEST_CASE("defining relations and the form") {
  for (auto s : {a2(), b2(), i2(5), i2(7), a3(), sys(R"({"matrix": [[1,4,2],[4,1,3],[2,3,1]]})")}) {
    const auto& m = s->matrix();
    for (std::size_t i = 0; i < s->rank(); ++i)
      for (std::size_t j = 0; j < s->rank(); ++j) {
        if (m.is_infinite(i, j)) continue;
        CHECK(pow(s->generator(i) * s->generator(j), int(m(i, j))).is_identity());
        for (unsigned k = 1; k < m(i, j); ++k)
          CHECK_FALSE(pow(s->generator(i) * s->generator(j), int(k)).is_identity());
      }
  }
  auto d = inf_dihedral();
  auto r = d->generator(0) * d->generator(1);
  CHECK_FALSE(pow(r, 5) == pow(r, 4));
  for (int k = 1; k < 30; ++k) CHECK_FALSE(pow(r, k).is_identity());
}

TEST_CASE("multiply, invert, equality") {
  auto w = a2();
  auto s1 = w->generator(0), s2 = w->generator(1);
  CHECK((s1 * inverse(s1)).is_identity());
  CHECK(s1 * s2 * s1 == s2 * s1 * s2);
  CHECK_FALSE(s1 * s2 == s2 * s1);
  auto other = b2();
  CHECK_THROWS_AS(s1 * other->generator(0), SystemMismatch);
  // a separately created copy of the same matrix is compatible
  CHECK(s1 * a2()->generator(1) == s1 * s2);

  std::mt19937_64 rng(11);
  auto w3 = a3();
  for (int k = 0; k < 100; ++k) {
    auto a = w3->from_word(random_word(rng, 3, 6));
    auto b = w3->from_word(random_word(rng, 3, 6));
    auto c = w3->from_word(random_word(rng, 3, 6));
    CHECK((a * b) * c == a * (b * c));
    CHECK(inverse(a * b) == inverse(b) * inverse(a));
    CHECK((a * inverse(a)).is_identity());
    if (a == b) CHECK(a * c == b * c);
  }
}

TEST_CASE("length and descents against permutation models") {
  struct Case {
    SystemPtr w;
    oracle::PermGroup g;
  };
  std::vector<Case> cases{{a2(), oracle::type_a(2)},
                          {a3(), oracle::type_a(3)},
                          {b2(), oracle::type_b2()},
                          {i2(5), oracle::dihedral(5)},
                          {i2(6), oracle::dihedral(6)}};
  std::mt19937_64 rng(3);
  for (auto& c : cases) {
    const auto lengths = c.g.lengths();
    for (int k = 0; k < 200; ++k) {
      auto word = random_word(rng, c.w->rank(), 1 + k % 9);
      auto e = c.w->from_word(word);
      auto p = c.g.word(word);
      CHECK(e.length() == lengths.at(p));
      for (std::size_t i = 0; i < c.w->rank(); ++i) {
        CHECK(e.is_descent(i, Side::Right) ==
              (lengths.at(oracle::compose(p, c.g.gens[i])) < lengths.at(p)));
        CHECK(e.is_descent(i, Side::Left) ==
              (lengths.at(oracle::compose(c.g.gens[i], p)) < lengths.at(p)));
      }
      auto rw = e.reduced_word();
      CHECK(rw.size() == e.length());
      CHECK(c.w->from_word(rw) == e);
    }
  }
  auto w = a2();
  auto s1 = w->generator(0), s2 = w->generator(1);
  CHECK(w->identity().length() == 0);
  CHECK(w->identity().descents(Side::Right).empty());
  CHECK((s1 * s2 * s1).length() == 3);
  CHECK((s1 * s2 * s1).descents(Side::Left) == std::vector<std::size_t>{0, 1});
  CHECK((s1 * s2 * s1).descents(Side::Right) == std::vector<std::size_t>{0, 1});
  CHECK((s1 * s2).descents(Side::Right) == std::vector<std::size_t>{1});
  CHECK((s1 * s2 * s1).reduced_word() == std::vector<std::size_t>{0, 1, 0});
}

TEST_CASE("length changes by one") {
  std::mt19937_64 rng(5);
  for (auto s : {a3(), inf_dihedral(), sys(R"({"matrix": [[1,3,"inf"],[3,1,4],["inf",4,1]]})")}) {
    for (int k = 0; k < 100; ++k) {
      auto e = s->from_word(random_word(rng, s->rank(), 8));
      const auto l = e.length();
      for (std::size_t i = 0; i < s->rank(); ++i) {
        const auto l2 = e.times_generator(i).length();
        CHECK((l2 == l + 1 || l2 + 1 == l));
      }
    }
  }
}

TEST_CASE("group enumeration") {
  CHECK(enumerate_group(a1(), 100).elements.size() == 2);
  CHECK(enumerate_group(a2(), 100).elements.size() == oracle::type_a(2).lengths().size());
  CHECK(enumerate_group(a2(), 100).elements.size() == 6);
  CHECK(enumerate_group(b2(), 100).elements.size() == 8);
  CHECK(enumerate_group(b2(), 100).elements.size() == oracle::type_b2().lengths().size());
  auto e3 = enumerate_group(a3(), 100);
  CHECK_FALSE(e3.exceeds_cap);
  CHECK(e3.elements.size() == 24);
  // length distribution of S4
  std::map<std::size_t, std::size_t> dist, expect;
  for (const auto& g : e3.elements) ++dist[g.length()];
  for (const auto& [p, l] : oracle::type_a(3).lengths()) ++expect[l];
  CHECK(dist == expect);
  auto inf = enumerate_group(inf_dihedral(), 100);
  CHECK(inf.exceeds_cap);
  CHECK(inf.elements.size() == 100);
  CHECK(enumerate_group(a2(), 6).elements.size() == 6);
  CHECK(enumerate_group(a2(), 5).exceeds_cap);
}

TEST_CASE("sphericity and longest elements") {
  CHECK(a1()->is_spherical());
  CHECK(a3()->is_spherical());
  CHECK(i2(9)->is_spherical());
  CHECK_FALSE(inf_dihedral()->is_spherical());
  CHECK_FALSE(sys(R"({"matrix": [[1,3,3],[3,1,3],[3,3,1]]})")->is_spherical());  // affine A2
  CHECK_FALSE(sys(R"({"matrix": [[1,4,2],[4,1,4],[2,4,1]]})")->is_spherical());  // affine C2
  CHECK(sys(R"({"matrix": [[1,5,2],[5,1,3],[2,3,1]]})")->is_spherical());        // H3
  CHECK(longest_element(a3()).length() == 6);
  CHECK(longest_element(b2()).length() == 4);
  CHECK(longest_element(i2(7)).length() == 7);
  CHECK_THROWS_AS(longest_element(inf_dihedral()), UnsupportedSystem);
  auto h3 = sys(R"({"matrix": [[1,5,2],[5,1,3],[2,3,1]]})");
  CHECK(enumerate_group(h3, 200).elements.size() == 120);
  CHECK(longest_element(h3).length() == 15);
}

TEST_CASE("reflections differ from the identity by rank one") {
  std::mt19937_64 rng(17);
  for (auto s : {a3(), i2(5), inf_dihedral()}) {
    for (int k = 0; k < 50; ++k) {
      auto w = s->from_word(random_word(rng, s->rank(), 7));
      const std::size_t i = k % s->rank();
      auto t = w * s->generator(i) * inverse(w);
      CHECK((t * t).is_identity());
      // t - I has rank 1: all 2x2 minors vanish and it is nonzero
      const std::size_t n = s->rank();
      bool nonzero = false;
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c) {
          auto e = t.entry_scalar(r, c);
          if (r == c) e = e - Scalar::from_integer(s->field_ptr(), 1);
          nonzero = nonzero || !e.is_zero();
        }
      CHECK(nonzero);
      for (std::size_t r1 = 0; r1 < n; ++r1)
        for (std::size_t r2 = r1 + 1; r2 < n; ++r2)
          for (std::size_t c1 = 0; c1 < n; ++c1)
            for (std::size_t c2 = c1 + 1; c2 < n; ++c2) {
              auto at = [&](std::size_t r, std::size_t c) {
                auto e = t.entry_scalar(r, c);
                return r == c ? e - Scalar::from_integer(s->field_ptr(), 1) : e;
              };
              CHECK((at(r1, c1) * at(r2, c2) - at(r1, c2) * at(r2, c1)).is_zero());
            }
    }
  }
}

TEST_CASE("rank one and element serialization") {
  auto w = a1();
  CHECK(w->coxeter_element() == w->generator(0));
  CHECK(serialize_element(w->generator(0)) == "[[[\"-1/1\"]]]");
  auto s = a2()->generator(0);
  CHECK(serialize_element(s) == R"([[["-1/1"],["1/1"]],[["0/1"],["1/1"]]])");
}
