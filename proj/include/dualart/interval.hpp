#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dualart/coxeter.hpp"
#include "dualart/hurwitz.hpp"
#include "dualart/verdict.hpp"

namespace dualart {

struct Cover {
  std::size_t lower;
  std::size_t upper;
  std::size_t label;  // index into IntervalPoset::labels()
};

struct ReducedWords {
  std::vector<Tuple<GroupElement>> words;  // sorted by tuple key
  bool complete = false;
};

/// [1,h]_T read off the Hurwitz orbit of the Coxeter tuple.
///
/// Elements are the prefix products of orbit tuples, sorted by
/// (height, key). When the orbit is truncated only the discovered part
/// is present and complete() is false.
class IntervalPoset {
 public:
  IntervalPoset(SystemPtr system, Orbit<GroupElement> orbit);

  const SystemPtr& system() const { return system_; }
  const Orbit<GroupElement>& orbit() const { return orbit_; }
  bool complete() const { return orbit_.complete; }
  std::size_t rank() const { return system_->rank(); }

  const std::vector<GroupElement>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  std::size_t height(std::size_t e) const { return heights_[e]; }
  const std::vector<Cover>& covers() const { return covers_; }
  /// Distinct cover labels, sorted by key.
  const std::vector<GroupElement>& labels() const { return labels_; }

  std::optional<std::size_t> find(const GroupElement& g) const;
  /// Throws NotInInterval.
  std::size_t index_of(const GroupElement& g) const;
  std::size_t bottom() const { return 0; }
  std::optional<std::size_t> top() const;

  /// Element indices of height 1, in element order.
  const std::vector<std::size_t>& atoms() const { return atoms_; }
  /// Position of g in atoms(), if g is an atom.
  std::optional<std::size_t> atom_number(const GroupElement& g) const;

  const std::vector<std::size_t>& covers_below(std::size_t e) const { return below_[e]; }
  const std::vector<std::size_t>& covers_above(std::size_t e) const { return above_[e]; }

  bool leq(std::size_t a, std::size_t b) const;
  bool leq(const GroupElement& a, const GroupElement& b) const;
  std::size_t len(const GroupElement& a) const;

  /// Label sequences of all cover chains from 1 to a.
  ReducedWords red(std::size_t a) const;
  ReducedWords red(const GroupElement& a) const { return red(index_of(a)); }

 private:
  SystemPtr system_;
  Orbit<GroupElement> orbit_;
  std::vector<GroupElement> elements_;
  std::vector<std::string> keys_;
  std::vector<std::size_t> heights_;
  std::vector<Cover> covers_;
  std::vector<GroupElement> labels_;
  std::vector<std::size_t> atoms_;
  std::vector<std::vector<std::size_t>> below_, above_;  // cover indices
  std::unordered_map<std::string, std::size_t> index_;
};

IntervalPoset build_interval(const SystemPtr& system, std::size_t cap);

struct ElementTransitivity {
  std::size_t element;
  std::size_t words;
  Verdict verdict;
  /// two reduced words in different orbits, when refuted
  std::optional<std::pair<std::size_t, std::size_t>> separated;
};

struct PanTransitivity {
  Verdict overall = Verdict::NoViolationWithinBound;
  std::vector<ElementTransitivity> elements;
};

/// Hurwitz transitivity on red(a) for every discovered a.
PanTransitivity pan_transitive_check(const IntervalPoset& p, std::size_t cap);

/// "1" for the identity, otherwise s<i> letters of the least reduced word.
std::string element_name(const GroupElement& g);

std::string poset_to_dot(const IntervalPoset& p);
std::string poset_to_json(const IntervalPoset& p);

}  // namespace dualart
