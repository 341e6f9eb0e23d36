#pragma once

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "dualart/braid.hpp"
#include "dualart/free_group.hpp"
#include "dualart/interval.hpp"

namespace dualart {

enum class PresentationStyle { Interval, Hurwitz };

/// Word over the generators of a presentation, signed 1-based.
using LabelWord = std::vector<int>;

struct Presentation {
  std::vector<std::string> generators;
  std::vector<std::pair<LabelWord, LabelWord>> relations;
  PresentationStyle style = PresentationStyle::Hurwitz;

  friend bool operator==(const Presentation&, const Presentation&) = default;
};

/// Generators are the atoms of p in element order, named by element_name.
/// Interval style relates the first reduced word of each element to every
/// other one; hurwitz style has {t}{t'} = {t t' t}{t} for each ordered
/// pair of atoms with t t' in p. Throws IncompleteInterval.
Presentation emit_presentation(const IntervalPoset& p, PresentationStyle style);

/// "gens: a, b;\nrels: a*b = c*a; ...;\n"
std::string render_text(const Presentation& p);
std::string render_gap(const Presentation& p);
std::string render_word(const Presentation& p, const LabelWord& w);
/// Inverse of render_text; the style is not recorded and comes back as Hurwitz.
Presentation parse_presentation_text(const std::string& text);

/// Product in W of the labels.
GroupElement evaluate(const IntervalPoset& p, const LabelWord& w);

/// (p_{tau,j}, p_{sigma_{n-i} tau, j}) with
/// p_{beta,j} = a[s_{n-1}...s_{n-j} beta] ... a[s_{n-1} beta] a[beta],
/// a[beta] the label of the last entry of beta . (s_1..s_n).
/// Requires 0 < i <= j < n. Throws IndexOutOfRange, IncompleteInterval.
std::pair<LabelWord, LabelWord> relation_instance(const IntervalPoset& p, const BraidWord& tau,
                                                  std::size_t i, std::size_t j);

/// Words differ in one window of two letters that is a relation of hurwitz.
bool one_step_rewrite(const Presentation& hurwitz, const LabelWord& a, const LabelWord& b);

/// Breadth-first search through positive words, applying relations of
/// equal length in both directions. Visits at most cap words.
bool rewrite_connected(const Presentation& pres, const LabelWord& a, const LabelWord& b,
                       std::size_t cap);

/// Word in the simple labels {s_i}^{+-1} equal to {t} in the dual group.
/// Throws NotAnAtom, IncompleteInterval.
LabelWord express_label_via_simples(const IntervalPoset& p, const GroupElement& t);

/// s_i^{+-1} -> {s_i}^{+-1}, letters signed 1-based matrix indices.
/// Throws IncompleteInterval, IndexOutOfRange.
LabelWord psi_image(const IntervalPoset& p, const std::vector<int>& artin_word);

/// Free reduction on label words.
LabelWord reduce_word(const LabelWord& w);

}  // namespace dualart
