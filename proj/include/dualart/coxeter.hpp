#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "dualart/number_field.hpp"

namespace dualart {

/// Entry value encoding m(i,j) = infinity.
inline constexpr unsigned kInfinity = 0;

/// Symmetric Coxeter matrix together with the generator order that fixes
/// the Coxeter tuple (s_order[0], ..., s_order[n-1]).
///
/// Indices are 0-based in the C++ API and 1-based in every file format.
class CoxeterMatrix {
 public:
  CoxeterMatrix() = default;
  /// Validates symmetry, the diagonal and the order permutation.
  /// Throws InvalidMatrix.
  CoxeterMatrix(std::vector<std::vector<unsigned>> rows,
                std::vector<std::size_t> order = {});

  std::size_t rank() const { return rank_; }
  unsigned operator()(std::size_t i, std::size_t j) const { return entries_[i * rank_ + j]; }
  bool is_infinite(std::size_t i, std::size_t j) const { return (*this)(i, j) == kInfinity; }
  const std::vector<std::size_t>& order() const { return order_; }
  std::vector<std::vector<unsigned>> rows() const;

  /// lcm of the finite entries >= 3 (1 when there are none).
  unsigned long conductor() const;

  /// Sub-system on the given indices, listed in the given order.
  CoxeterMatrix restrict_to(std::span<const std::size_t> indices) const;

  friend bool operator==(const CoxeterMatrix&, const CoxeterMatrix&) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<unsigned> entries_;
  std::vector<std::size_t> order_;
};

/// Parse a system file (JSON or TOML: "matrix" and optional "order").
/// Throws ParseError or InvalidMatrix.
CoxeterMatrix parse_system(const std::string& text);
/// Canonical JSON rendering, accepted back by parse_system.
std::string serialize_system(const CoxeterMatrix& m);

class GroupElement;

/// A Coxeter system with its geometric representation over Q(2cos(pi/N)).
///
/// Row i of the matrix of s_i stores -2B(alpha_i, alpha_j), so every
/// matrix entry of every element lies in Z[c].
class CoxeterSystem : public std::enable_shared_from_this<CoxeterSystem> {
 public:
  static std::shared_ptr<const CoxeterSystem> create(CoxeterMatrix matrix);

  const CoxeterMatrix& matrix() const { return matrix_; }
  std::size_t rank() const { return matrix_.rank(); }
  const NumberField& field() const { return *field_; }
  const std::shared_ptr<const NumberField>& field_ptr() const { return field_; }

  GroupElement identity() const;
  /// Throws IndexOutOfRange.
  GroupElement generator(std::size_t i) const;
  GroupElement from_word(std::span<const std::size_t> word) const;
  /// (s_order[0], ..., s_order[n-1])
  std::vector<GroupElement> coxeter_tuple() const;
  GroupElement coxeter_element() const;

  /// Coefficients of row i of the matrix of s_i, entry j.
  std::span<const Rational> generator_row(std::size_t i, std::size_t j) const;
  /// Doubled bilinear form 2B(alpha_i, alpha_j).
  Scalar form(std::size_t i, std::size_t j) const;

  /// Finite W, decided by positive definiteness of B.
  bool is_spherical() const;

 private:
  explicit CoxeterSystem(CoxeterMatrix matrix);

  CoxeterMatrix matrix_;
  std::shared_ptr<const NumberField> field_;
  std::vector<Rational> rows_;  // rank * rank * degree
  bool spherical_ = false;
};

using SystemPtr = std::shared_ptr<const CoxeterSystem>;

enum class Side { Left, Right };

/// Element of W stored as the exact matrix of the geometric representation
/// together with the matrix of its inverse.
class GroupElement {
 public:
  GroupElement(SystemPtr system, std::vector<Rational> mat, std::vector<Rational> inv,
               std::optional<std::size_t> known_length = std::nullopt);

  const CoxeterSystem& system() const { return *system_; }
  const SystemPtr& system_ptr() const { return system_; }
  std::size_t rank() const { return system_->rank(); }

  std::span<const Rational> entry(std::size_t r, std::size_t c) const;
  Scalar entry_scalar(std::size_t r, std::size_t c) const;

  bool is_identity() const;
  /// Length with respect to S.
  std::size_t length() const;
  bool is_descent(std::size_t i, Side side) const;
  std::vector<std::size_t> descents(Side side) const;
  std::uint64_t descent_mask(Side side) const;

  GroupElement times_generator(std::size_t i) const;        // w * s_i
  GroupElement generator_times(std::size_t i) const;        // s_i * w
  /// Lexicographically least reduced S-word (0-based indices).
  std::vector<std::size_t> reduced_word() const;

  /// Exact serialization of the matrix, used for hashing and ordering.
  std::string key() const;

  friend GroupElement operator*(const GroupElement& a, const GroupElement& b);
  friend GroupElement inverse(const GroupElement& a);
  friend bool operator==(const GroupElement& a, const GroupElement& b);

  const std::vector<Rational>& raw_matrix() const { return mat_; }

 private:
  bool column_negative(const std::vector<Rational>& m, std::size_t col) const;

  SystemPtr system_;
  std::vector<Rational> mat_;
  std::vector<Rational> inv_;
  std::optional<std::size_t> known_length_;
};

inline std::string canonical_key(const GroupElement& g) { return g.key(); }

/// Row-major matrix of coefficient vectors of "p/q" strings.
std::string serialize_element(const GroupElement& g);

/// Throws SystemMismatch unless a and b live in the same system.
void require_same_system(const CoxeterSystem& a, const CoxeterSystem& b);

struct GroupEnumeration {
  bool exceeds_cap = false;
  /// ShortLex order of the least reduced words.
  std::vector<GroupElement> elements;
};

/// BFS on the Cayley graph; stops once more than cap elements are found.
GroupEnumeration enumerate_group(const SystemPtr& system, std::size_t cap);

/// Longest element of a finite system. Throws UnsupportedSystem if infinite.
GroupElement longest_element(const SystemPtr& system);

}  // namespace dualart
