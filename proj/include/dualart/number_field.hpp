#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace dualart {

using Rational = mpq_class;

namespace poly {

/// Integer polynomials, coefficients stored lowest degree first.
using IntPoly = std::vector<mpz_class>;

IntPoly cyclotomic(unsigned long m);

/// Minimal polynomial of 2cos(pi/N) over Q, monic.
IntPoly two_cos_minimal_polynomial(unsigned long conductor);

}  // namespace poly

/// The real field Q(c) with c = 2cos(pi/N).
///
/// Elements are coefficient vectors of length degree() in the power basis
/// 1, c, ..., c^(d-1). All arithmetic is exact; reduction uses the monic
/// minimal polynomial of c. Signs are decided by interval evaluation on a
/// certified rational enclosure of c, refined on demand.
class NumberField {
 public:
  explicit NumberField(unsigned long conductor);

  unsigned long conductor() const { return conductor_; }
  std::size_t degree() const { return degree_; }
  const poly::IntPoly& minimal_polynomial() const { return minpoly_; }

  /// out = a * b (reduced). out must not alias a or b.
  void multiply(std::span<const Rational> a, std::span<const Rational> b,
                std::span<Rational> out) const;
  /// acc += a * b, acc has length 2d-1 (unreduced accumulator).
  void multiply_accumulate(std::span<const Rational> a,
                           std::span<const Rational> b,
                           std::span<Rational> acc) const;
  /// Reduce an unreduced accumulator of length 2d-1 into out (length d).
  void reduce(std::span<const Rational> acc, std::span<Rational> out) const;

  static bool is_zero(std::span<const Rational> a);
  /// -1, 0 or +1. Exact.
  int sign(std::span<const Rational> a) const;

  /// 2cos(pi/m) in the power basis. m == 0 encodes infinity (value 2).
  /// Requires m == 0, m == 1, m == 2 or m | N.
  std::vector<Rational> two_cos_pi_over(unsigned long m) const;

  double approximate(std::span<const Rational> a) const;

 private:
  int sign_at(const Rational& x) const;  // sign of minpoly at x
  bool decide_sign(std::span<const Rational> a, const Rational& lo,
                   const Rational& hi, int& out) const;

  unsigned long conductor_;
  std::size_t degree_;
  poly::IntPoly minpoly_;
  // reduction_[k] is c^(d + k) in the power basis, k = 0 .. d-2
  std::vector<std::vector<Rational>> reduction_;
  Rational lo_, hi_;
  int sign_lo_ = 0;
};

/// A field element bundled with the field it lives in.
class Scalar {
 public:
  Scalar(std::shared_ptr<const NumberField> field, std::vector<Rational> coeffs);
  static Scalar from_integer(std::shared_ptr<const NumberField> field, long v);

  const std::vector<Rational>& coefficients() const { return coeffs_; }
  const NumberField& field() const { return *field_; }
  bool is_zero() const { return NumberField::is_zero(coeffs_); }
  int sign() const { return field_->sign(coeffs_); }
  double approximate() const { return field_->approximate(coeffs_); }
  std::string to_string() const;

  friend Scalar operator+(const Scalar& a, const Scalar& b);
  friend Scalar operator-(const Scalar& a, const Scalar& b);
  friend Scalar operator*(const Scalar& a, const Scalar& b);
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.coeffs_ == b.coeffs_;
  }

 private:
  std::shared_ptr<const NumberField> field_;
  std::vector<Rational> coeffs_;
};

/// "p/q" with an explicit denominator, always.
std::string rational_to_string(const Rational& q);
Rational rational_from_string(const std::string& s);

}  // namespace dualart
