#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "dualart/braid.hpp"
#include "dualart/coxeter.hpp"
#include "dualart/verdict.hpp"

namespace dualart {

/// Elements of one finite factor, numbered on first use, with their
/// descent sets and products by generators filled in lazily.
/// Id 0 is the identity. Safe to share between threads.
class SimpleTable {
 public:
  using Id = std::uint32_t;

  SimpleTable(SystemPtr system, const GroupElement& w0);

  Id intern(const GroupElement& g);
  const GroupElement& element(Id id) const;
  Id w0() const { return w0_; }

  std::uint64_t left_descents(Id id) const;
  std::uint64_t right_descents(Id id) const;
  Id times(Id id, std::size_t s);  // x s
  Id pre(std::size_t s, Id id);    // s x
  Id twisted(Id id);               // w0 x w0
  Id complement(Id id);            // w0 x^-1

 private:
  static constexpr std::int64_t kUnknown = -1;
  Id intern_locked(const GroupElement& g);

  SystemPtr system_;
  std::size_t rank_;
  Id w0_ = 0;
  mutable std::mutex mutex_;
  std::deque<GroupElement> elements_;
  std::vector<std::uint64_t> left_, right_;
  std::vector<std::int64_t> times_, pre_, twisted_, complement_;
  std::unordered_map<std::string, Id> index_;
};

/// Delta^delta a_1 ... a_r with the a_i proper simples of one spherical
/// factor, left-weighted: L(a_{i+1}) is contained in R(a_i).
/// Simples are ids in the factor's SimpleTable.
struct GarsideForm {
  long delta = 0;
  std::vector<SimpleTable::Id> simples;

  bool is_identity() const { return delta == 0 && simples.empty(); }
  friend bool operator==(const GarsideForm&, const GarsideForm&) = default;
};

struct Syllable {
  std::size_t factor;
  GarsideForm form;
  friend bool operator==(const Syllable&, const Syllable&) = default;
};

class ArtinElement;

/// Art(W,S) for W a free product of finite Coxeter groups.
///
/// The factors are the connected components of the graph with an edge
/// wherever m(i,j) is finite.
class ArtinSystem : public std::enable_shared_from_this<ArtinSystem> {
 public:
  struct Factor {
    std::vector<std::size_t> indices;  // global, increasing
    SystemPtr system;                  // restricted to indices
    GroupElement w0;
    bool w0_central;
    std::shared_ptr<SimpleTable> table;

    const GroupElement& simple(SimpleTable::Id id) const { return table->element(id); }
  };

  /// Throws UnsupportedSystem when a factor is infinite.
  static std::shared_ptr<const ArtinSystem> create(const CoxeterMatrix& matrix);

  const CoxeterMatrix& matrix() const { return matrix_; }
  std::size_t rank() const { return matrix_.rank(); }
  const std::vector<Factor>& factors() const { return factors_; }
  std::size_t factor_of(std::size_t i) const { return factor_of_[i]; }
  std::size_t local_index(std::size_t i) const { return local_[i]; }

  ArtinElement identity() const;
  /// s_i for a 0-based matrix index. Throws IndexOutOfRange.
  ArtinElement generator(std::size_t i) const;
  /// Signed 1-based letters over matrix indices.
  ArtinElement from_word(const std::vector<int>& letters) const;
  /// (s_order[0], ..., s_order[n-1]) lifted to Art(W,S).
  std::vector<ArtinElement> artin_tuple() const;
  ArtinElement delta(std::size_t factor, long power) const;

  /// Form multiplication inside one factor.
  GarsideForm multiply(std::size_t factor, const GarsideForm& a, const GarsideForm& b) const;
  GarsideForm invert(std::size_t factor, const GarsideForm& a) const;
  /// Renormalizes an arbitrary list of simples behind Delta^delta.
  GarsideForm normalize(std::size_t factor, long delta, const std::vector<GroupElement>& simples) const;

 private:
  explicit ArtinSystem(CoxeterMatrix matrix);

  CoxeterMatrix matrix_;
  std::vector<Factor> factors_;
  std::vector<std::size_t> factor_of_, local_;
};

using ArtinSystemPtr = std::shared_ptr<const ArtinSystem>;

/// Normal form: alternating syllables of distinct adjacent factors.
class ArtinElement {
 public:
  ArtinElement(ArtinSystemPtr system, std::vector<Syllable> syllables);

  const ArtinSystem& system() const { return *system_; }
  const std::vector<Syllable>& syllables() const { return syllables_; }
  bool is_identity() const { return syllables_.empty(); }

  /// e.g. "D1^-1[s1s2][s2] * [s3]"
  std::string to_string() const;
  std::string to_json() const;

  friend ArtinElement operator*(const ArtinElement& a, const ArtinElement& b);
  friend ArtinElement inverse(const ArtinElement& a);
  friend bool operator==(const ArtinElement& a, const ArtinElement& b);

 private:
  ArtinSystemPtr system_;
  std::vector<Syllable> syllables_;
};

std::string canonical_key(const ArtinElement& a);

struct WellStabilized {
  Verdict verdict = Verdict::Inconclusive;
  std::optional<BraidWord> witness;
  std::vector<BraidWord> generators;
  std::string method;  // "schreier", "free-product" or "none"
  std::size_t orbit_size = 0;
  bool orbit_complete = false;
};

/// Compares the Hurwitz stabilizers of the Coxeter tuple in W and in
/// Art(W,S). Throws UnsupportedSystem.
WellStabilized well_stabilized_check(const CoxeterMatrix& matrix, std::size_t cap);

struct TauEquivalence {
  bool approx;      // last entries agree in W
  bool dot_approx;  // last entries agree in Art(W,S)
};

TauEquivalence tau_equivalences(const CoxeterMatrix& matrix, const BraidWord& tau,
                                const BraidWord& tau2);
TauEquivalence tau_equivalences(const SystemPtr& w, const ArtinSystemPtr& art, const BraidWord& tau,
                                const BraidWord& tau2);

}  // namespace dualart
