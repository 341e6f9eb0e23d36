#include <map>
#include <set>

#include "doctest.h"
#include "dualart/error.hpp"
#include "dualart/presentation.hpp"
#include "support.hpp"

using namespace dualart;
using namespace testing_support;

namespace {

int gen(const Presentation& p, const std::string& name) {
  for (std::size_t i = 0; i < p.generators.size(); ++i)
    if (p.generators[i] == name) return static_cast<int>(i) + 1;
  FAIL("missing generator " << name);
  return 0;
}

std::set<std::pair<LabelWord, LabelWord>> relation_set(const Presentation& p) {
  return {p.relations.begin(), p.relations.end()};
}

}  // namespace

TEST_CASE("A2 hurwitz presentation") {
  auto p = build_interval(a2(), 100);
  auto pres = emit_presentation(p, PresentationStyle::Hurwitz);
  CHECK(std::set<std::string>(pres.generators.begin(), pres.generators.end()) ==
        std::set<std::string>{"s1", "s2", "s1s2s1"});
  const int a = gen(pres, "s1"), b = gen(pres, "s2"), t = gen(pres, "s1s2s1");
  std::set<std::pair<LabelWord, LabelWord>> expect{
      {{a, b}, {t, a}}, {{b, t}, {a, b}}, {{t, a}, {b, t}}};
  CHECK(relation_set(pres) == expect);
  CHECK(pres.relations.size() == 3);
  for (const auto& [l, r] : pres.relations) CHECK(evaluate(p, l) == evaluate(p, r));
}

TEST_CASE("A2 interval presentation") {
  auto p = build_interval(a2(), 100);
  auto hp = emit_presentation(p, PresentationStyle::Hurwitz);
  auto ip = emit_presentation(p, PresentationStyle::Interval);
  CHECK(ip.generators == hp.generators);
  CHECK(ip.relations.size() == 2);
  const int a = gen(ip, "s1"), b = gen(ip, "s2"), t = gen(ip, "s1s2s1");
  std::set<LabelWord> words{{a, b}, {b, t}, {t, a}};
  for (const auto& [l, r] : ip.relations) {
    CHECK(words.contains(l));
    CHECK(words.contains(r));
    CHECK(l != r);
  }
  CHECK(ip.relations[0].first == ip.relations[1].first);
}

TEST_CASE("small presentations") {
  auto p1 = build_interval(a1(), 10);
  auto pres = emit_presentation(p1, PresentationStyle::Hurwitz);
  CHECK(pres.generators == std::vector<std::string>{"s1"});
  CHECK(pres.relations.empty());
  CHECK(emit_presentation(p1, PresentationStyle::Interval).relations.empty());

  for (auto s : {b2(), i2(5), a3()}) {
    auto p = build_interval(s, 1000);
    auto hp = emit_presentation(p, PresentationStyle::Hurwitz);
    auto ip = emit_presentation(p, PresentationStyle::Interval);
    CHECK(hp.generators == ip.generators);
    CHECK(hp.generators.size() == p.atoms().size());
    for (const auto& [l, r] : ip.relations) {
      CHECK(evaluate(p, l) == evaluate(p, r));
      CHECK(rewrite_connected(hp, l, r, 100000));
    }
    for (const auto& [l, r] : hp.relations) CHECK(evaluate(p, l) == evaluate(p, r));
  }
  // one relation per reduced word of h in the dihedral case
  for (unsigned m : {4u, 5u, 6u})
    CHECK(emit_presentation(build_interval(i2(m), 100), PresentationStyle::Hurwitz).relations.size() == m);
}

TEST_CASE("truncated posets are rejected") {
  auto p = build_interval(inf_dihedral(), 20);
  CHECK_THROWS_AS(emit_presentation(p, PresentationStyle::Hurwitz), IncompleteInterval);
  CHECK_THROWS_AS(psi_image(p, {1}), IncompleteInterval);
  CHECK_THROWS_AS(relation_instance(p, BraidWord(2), 1, 1), IncompleteInterval);
}

TEST_CASE("relation instances") {
  auto p = build_interval(a2(), 100);
  auto hp = emit_presentation(p, PresentationStyle::Hurwitz);
  const int a = gen(hp, "s1"), b = gen(hp, "s2"), t = gen(hp, "s1s2s1");
  auto [l, r] = relation_instance(p, BraidWord(2), 1, 1);
  CHECK(l == LabelWord{a, b});
  CHECK(r == LabelWord{t, a});
  CHECK_THROWS_AS(relation_instance(p, BraidWord(2), 0, 1), IndexOutOfRange);
  CHECK_THROWS_AS(relation_instance(p, BraidWord(2), 1, 2), IndexOutOfRange);

  auto p3 = build_interval(a3(), 100);
  auto hp3 = emit_presentation(p3, PresentationStyle::Hurwitz);
  auto [l3, r3] = relation_instance(p3, BraidWord(3), 1, 2);
  CHECK(l3.size() == 3);
  CHECK(r3.size() == 3);
  CHECK(l3 != r3);
  CHECK(one_step_rewrite(hp3, l3, r3));

  for (auto [pp, hpp] : {std::pair{&p, &hp}, std::pair{&p3, &hp3}}) {
    const std::size_t n = pp->rank();
    for (const auto& tau : reduced_braid_words(n, 3))
      for (std::size_t j = 1; j < n; ++j)
        for (std::size_t i = 1; i <= j; ++i) {
          auto [u, v] = relation_instance(*pp, tau, i, j);
          CHECK(u.size() == j + 1);
          CHECK(evaluate(*pp, u) == evaluate(*pp, v));
          CHECK(one_step_rewrite(*hpp, u, v));
        }
  }
}

TEST_CASE("labels through simples") {
  auto p = build_interval(a2(), 100);
  auto hp = emit_presentation(p, PresentationStyle::Hurwitz);
  auto w = a2();
  const int a = gen(hp, "s1"), b = gen(hp, "s2");
  auto t = w->generator(0) * w->generator(1) * w->generator(0);
  CHECK(reduce_word(express_label_via_simples(p, t)) == LabelWord{-b, a, b});
  CHECK(express_label_via_simples(p, w->generator(0)) == LabelWord{a});
  CHECK(express_label_via_simples(p, w->generator(1)) == LabelWord{b});
  CHECK_THROWS_AS(express_label_via_simples(p, w->generator(0) * w->generator(1)), NotAnAtom);

  auto p3 = build_interval(a3(), 100);
  for (auto e : p3.atoms()) {
    const auto& atom = p3.elements()[e];
    auto word = express_label_via_simples(p3, atom);
    CHECK(evaluate(p3, word) == atom);
    std::set<int> used;
    for (int l : word) used.insert(std::abs(l));
    for (int g : used) CHECK(p3.elements()[p3.atoms()[g - 1]].length() == 1);
  }
}

TEST_CASE("psi") {
  auto p = build_interval(a2(), 100);
  auto hp = emit_presentation(p, PresentationStyle::Hurwitz);
  const int a = gen(hp, "s1"), b = gen(hp, "s2");
  CHECK(psi_image(p, {1}) == LabelWord{a});
  CHECK(psi_image(p, {1, -2}) == LabelWord{a, -b});
  const auto lhs = psi_image(p, {1, 2, 1}), rhs = psi_image(p, {2, 1, 2});
  CHECK(lhs == LabelWord{a, b, a});
  CHECK(rewrite_connected(hp, lhs, rhs, 1000));
  CHECK_FALSE(rewrite_connected(hp, LabelWord{a, b}, LabelWord{b, a}, 1000));
  CHECK_THROWS_AS(psi_image(p, {3}), IndexOutOfRange);
  CHECK_THROWS_AS(psi_image(p, {0}), IndexOutOfRange);

  auto pb = build_interval(b2(), 100);
  auto hb = emit_presentation(pb, PresentationStyle::Hurwitz);
  CHECK(rewrite_connected(hb, psi_image(pb, {1, 2, 1, 2}), psi_image(pb, {2, 1, 2, 1}), 1000));
}

TEST_CASE("text round trip") {
  for (auto s : {a1(), a2(), b2(), a3()}) {
    auto p = build_interval(s, 100);
    for (auto style : {PresentationStyle::Hurwitz, PresentationStyle::Interval}) {
      auto pres = emit_presentation(p, style);
      auto back = parse_presentation_text(render_text(pres));
      CHECK(back.generators == pres.generators);
      CHECK(back.relations == pres.relations);
      CHECK(render_text(back) == render_text(pres));
    }
  }
  auto pres = emit_presentation(build_interval(a2(), 100), PresentationStyle::Hurwitz);
  const auto gap = render_gap(pres);
  CHECK(gap.find("FreeGroup(") != std::string::npos);
  CHECK(gap.find("G := F / rels;;") != std::string::npos);
  CHECK_THROWS_AS(parse_presentation_text("rels: a = b;"), ParseError);
  CHECK_THROWS_AS(parse_presentation_text("gens: a; rels: a = c;"), ParseError);
  CHECK_THROWS_AS(parse_presentation_text("gens: a, a; rels:"), ParseError);
  auto inv = parse_presentation_text("gens: x, y;\nrels: x^-1*y = 1;");
  CHECK(inv.relations.front().first == LabelWord{-1, 2});
  CHECK(inv.relations.front().second.empty());
}

TEST_CASE("free reduction of label words") {
  CHECK(reduce_word({1, 2, -2, -1, 3}) == LabelWord{3});
  CHECK(reduce_word({1, -1}).empty());
  CHECK(reduce_word({2, 2}) == LabelWord{2, 2});
}
