#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "dualart/braid.hpp"
#include "dualart/coxeter.hpp"
#include "dualart/free_group.hpp"
#include "dualart/interval.hpp"

namespace dualart {

/// Where each f_i goes: a 0-based generator of the system, or nullopt for 1.
using Assignment = std::vector<std::optional<std::size_t>>;

/// f_i -> i-th entry of the Coxeter tuple.
Assignment standard_assignment(const CoxeterSystem& system);
/// Standard on the first k letters, 1 on the rest (or the reverse).
Assignment left_assignment(const CoxeterSystem& system, std::size_t k);
Assignment right_assignment(const CoxeterSystem& system, std::size_t k);

/// Throws RankMismatch.
GroupElement pi_project(const FreeWord& w, const CoxeterSystem& system, const Assignment& a);
GroupElement pi_project(const FreeWord& w, const CoxeterSystem& system);

/// An element of [1,g]_R given by the product of the first k entries of
/// braid . (f_1, ..., f_n).
struct NCCertificate {
  FreeWord element;
  BraidWord braid;
  std::size_t prefix_len;
};

NCCertificate nc_prefix(const BraidWord& braid, std::size_t k);

/// Certificate projecting onto a, read from the orbit of p. Throws NotInInterval.
std::optional<NCCertificate> lift_search(const IntervalPoset& p, const GroupElement& a,
                                         std::size_t cap);

struct Syllables {
  std::size_t split;
  std::vector<FreeWord> syllables;
  /// true when syllables[0] is supported on f_1..f_split
  bool starts_left = true;
};

/// Maximal runs of letters on one side of the split.
Syllables syllable_factorization(const FreeWord& w, std::size_t split);

struct Goodness {
  bool good = true;
  std::optional<FreeWord> offender;
};

/// Left syllables are projected into left (ranks must be split and
/// n - split), right syllables into right with f_{split+j} -> j-th entry.
Goodness is_good(const FreeWord& w, std::size_t split, const CoxeterSystem& left,
                 const CoxeterSystem& right);

/// tau in the group generated by h_gens with tau * e2 = e1, searched
/// breadth first over at most cap elements. Throws ProjectionMismatch.
std::optional<BraidWord> h_star_search(const NCCertificate& c1, const NCCertificate& c2,
                                       const std::vector<BraidWord>& h_gens,
                                       const CoxeterSystem& system, std::size_t cap);

}  // namespace dualart
