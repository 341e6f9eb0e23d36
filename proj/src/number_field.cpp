#include "dualart/number_field.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "dualart/error.hpp"

namespace dualart {

namespace poly {
namespace {

void trim(IntPoly& p) {
  while (p.size() > 1 && p.back() == 0) p.pop_back();
}

// Exact division a / b for monic b, asserting zero remainder.
IntPoly divide_exact(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  if (a.size() < b.size()) throw std::logic_error("divide_exact: degree");
  IntPoly q(a.size() - db, 0);
  for (std::size_t i = a.size(); i-- > db;) {
    const mpz_class coef = a[i];
    if (coef == 0) continue;
    q[i - db] = coef;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] -= coef * b[j];
  }
  for (std::size_t i = 0; i < db; ++i)
    if (a[i] != 0) throw std::logic_error("divide_exact: nonzero remainder");
  trim(q);
  return q;
}

}  // namespace

IntPoly cyclotomic(unsigned long m) {
  if (m == 0) throw std::invalid_argument("cyclotomic: m must be positive");
  // x^m - 1 divided by all Phi_d for proper divisors d of m
  IntPoly p(m + 1, 0);
  p[0] = -1;
  p[m] = 1;
  for (unsigned long d = 1; d < m; ++d)
    if (m % d == 0) p = divide_exact(p, cyclotomic(d));
  return p;
}

IntPoly two_cos_minimal_polynomial(unsigned long conductor) {
  if (conductor == 0) throw std::invalid_argument("conductor must be positive");
  if (conductor == 1) return {2, 1};  // c = -2
  const IntPoly phi = cyclotomic(2 * conductor);
  const std::size_t k = (phi.size() - 1) / 2;
  // x^(-k) Phi(x) = p_k + sum_j p_{k+j} (x^j + x^-j), and x^j + x^-j = D_j(y)
  std::vector<IntPoly> dickson{{2}, {0, 1}};
  for (std::size_t j = 2; j <= k; ++j) {
    IntPoly next(j + 1, 0);
    for (std::size_t i = 0; i < dickson[j - 1].size(); ++i)
      next[i + 1] += dickson[j - 1][i];
    for (std::size_t i = 0; i < dickson[j - 2].size(); ++i)
      next[i] -= dickson[j - 2][i];
    dickson.push_back(std::move(next));
  }
  IntPoly psi(k + 1, 0);
  psi[0] = phi[k];
  for (std::size_t j = 1; j <= k; ++j)
    for (std::size_t i = 0; i < dickson[j].size(); ++i)
      psi[i] += phi[k + j] * dickson[j][i];
  trim(psi);
  return psi;
}

}  // namespace poly

namespace {

Rational eval(const poly::IntPoly& p, const Rational& x) {
  Rational acc = 0;
  for (std::size_t i = p.size(); i-- > 0;) acc = acc * x + Rational(p[i]);
  return acc;
}

int sgn(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

}  // namespace

NumberField::NumberField(unsigned long conductor)
    : conductor_(conductor),
      minpoly_(poly::two_cos_minimal_polynomial(conductor)) {
  degree_ = minpoly_.size() - 1;
  const std::size_t d = degree_;
  // c^d = -sum_{i<d} m_i c^i; higher powers by repeated shifting
  if (d >= 2) {
    std::vector<Rational> cur(d);
    for (std::size_t i = 0; i < d; ++i) cur[i] = -Rational(minpoly_[i]);
    reduction_.push_back(cur);
    for (std::size_t k = 1; k + 1 < d; ++k) {
      std::vector<Rational> next(d, 0);
      const Rational top = cur[d - 1];
      for (std::size_t i = d - 1; i > 0; --i) next[i] = cur[i - 1];
      next[0] = 0;
      for (std::size_t i = 0; i < d; ++i) next[i] += top * reduction_[0][i];
      reduction_.push_back(next);
      cur = std::move(next);
    }
  }
  const double c = 2.0 * std::cos(std::numbers::pi / static_cast<double>(conductor));
  if (d == 1) {
    lo_ = hi_ = -Rational(minpoly_[0]);
    return;
  }
  lo_ = Rational(c) - Rational(1, 1'000'000'000);
  hi_ = Rational(c) + Rational(1, 1'000'000'000);
  lo_.canonicalize();
  hi_.canonicalize();
  sign_lo_ = sign_at(lo_);
  if (sign_lo_ == 0 || sign_lo_ == sign_at(hi_))
    throw std::logic_error("NumberField: failed to isolate 2cos(pi/N)");
  // roots of the minimal polynomial are at least 1/N^2 apart, so the
  // enclosure holds exactly one of them; tighten it once up front
  const Rational target(1, mpz_class(1) << 70);
  while (hi_ - lo_ > target) {
    Rational mid = (lo_ + hi_) / 2;
    const int s = sign_at(mid);
    if (s == sign_lo_) lo_ = mid; else hi_ = mid;
  }
}

int NumberField::sign_at(const Rational& x) const { return sgn(eval(minpoly_, x)); }

void NumberField::multiply_accumulate(std::span<const Rational> a,
                                      std::span<const Rational> b,
                                      std::span<Rational> acc) const {
  const std::size_t d = degree_;
  for (std::size_t i = 0; i < d; ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < d; ++j) {
      if (b[j] == 0) continue;
      acc[i + j] += a[i] * b[j];
    }
  }
}

void NumberField::reduce(std::span<const Rational> acc, std::span<Rational> out) const {
  const std::size_t d = degree_;
  for (std::size_t i = 0; i < d; ++i) out[i] = acc[i];
  for (std::size_t k = 0; k + 1 < d; ++k) {
    const Rational& coef = acc[d + k];
    if (coef == 0) continue;
    for (std::size_t i = 0; i < d; ++i) out[i] += coef * reduction_[k][i];
  }
}

void NumberField::multiply(std::span<const Rational> a, std::span<const Rational> b,
                           std::span<Rational> out) const {
  if (degree_ == 1) {
    out[0] = a[0] * b[0];
    return;
  }
  std::vector<Rational> acc(2 * degree_ - 1, 0);
  multiply_accumulate(a, b, acc);
  reduce(acc, out);
}

bool NumberField::is_zero(std::span<const Rational> a) {
  for (const auto& q : a)
    if (q != 0) return false;
  return true;
}

bool NumberField::decide_sign(std::span<const Rational> a, const Rational& lo,
                              const Rational& hi, int& out) const {
  // c in [lo, hi] with lo > 0, so c^i in [lo^i, hi^i]
  Rational sum_lo = a[0], sum_hi = a[0];
  Rational plo = 1, phi = 1;
  for (std::size_t i = 1; i < degree_; ++i) {
    plo *= lo;
    phi *= hi;
    if (a[i] > 0) {
      sum_lo += a[i] * plo;
      sum_hi += a[i] * phi;
    } else if (a[i] < 0) {
      sum_lo += a[i] * phi;
      sum_hi += a[i] * plo;
    }
  }
  if (sum_lo > 0) { out = 1; return true; }
  if (sum_hi < 0) { out = -1; return true; }
  return false;
}

int NumberField::sign(std::span<const Rational> a) const {
  if (degree_ == 1) return sgn(a[0]);
  if (is_zero(a)) return 0;
  int out = 0;
  if (decide_sign(a, lo_, hi_, out)) return out;
  Rational lo = lo_, hi = hi_;
  for (;;) {
    Rational mid = (lo + hi) / 2;
    if (sign_at(mid) == sign_lo_) lo = mid; else hi = mid;
    if (decide_sign(a, lo, hi, out)) return out;
  }
}

std::vector<Rational> NumberField::two_cos_pi_over(unsigned long m) const {
  std::vector<Rational> out(degree_, 0);
  if (m == 0) { out[0] = 2; return out; }
  if (m == 1) { out[0] = -2; return out; }
  if (m == 2) return out;
  if (conductor_ % m != 0)
    throw std::invalid_argument("two_cos_pi_over: m does not divide the conductor");
  // 2cos(k x) = D_k(2cos x) with k = N/m, evaluated in the field
  const unsigned long k = conductor_ / m;
  std::vector<Rational> c(degree_, 0);
  if (degree_ == 1) c[0] = -Rational(minpoly_[0]); else c[1] = 1;
  std::vector<Rational> prev(degree_, 0), cur = c, next(degree_, 0);
  prev[0] = 2;
  if (k == 0) return prev;
  for (unsigned long j = 1; j < k; ++j) {
    multiply(c, cur, next);
    for (std::size_t i = 0; i < degree_; ++i) next[i] -= prev[i];
    prev = cur;
    cur = next;
  }
  return cur;
}

double NumberField::approximate(std::span<const Rational> a) const {
  const double c = degree_ == 1 ? 0.0 : Rational((lo_ + hi_) / 2).get_d();
  double acc = 0, p = 1;
  for (std::size_t i = 0; i < degree_; ++i) {
    acc += a[i].get_d() * p;
    p *= c;
  }
  return acc;
}

Scalar::Scalar(std::shared_ptr<const NumberField> field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != field_->degree())
    throw std::invalid_argument("Scalar: coefficient vector has wrong length");
}

Scalar Scalar::from_integer(std::shared_ptr<const NumberField> field, long v) {
  std::vector<Rational> c(field->degree(), 0);
  c[0] = v;
  return Scalar(std::move(field), std::move(c));
}

Scalar operator+(const Scalar& a, const Scalar& b) {
  std::vector<Rational> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] + b.coeffs_[i];
  return Scalar(a.field_, std::move(c));
}

Scalar operator-(const Scalar& a, const Scalar& b) {
  std::vector<Rational> c(a.coeffs_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.coeffs_[i] - b.coeffs_[i];
  return Scalar(a.field_, std::move(c));
}

Scalar operator*(const Scalar& a, const Scalar& b) {
  std::vector<Rational> c(a.coeffs_.size());
  a.field_->multiply(a.coeffs_, b.coeffs_, c);
  return Scalar(a.field_, std::move(c));
}

std::string Scalar::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (i) s += ' ';
    s += rational_to_string(coeffs_[i]);
  }
  return s + "]";
}

std::string rational_to_string(const Rational& q) {
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

Rational rational_from_string(const std::string& s) {
  Rational q;
  if (q.set_str(s, 10) != 0) throw ParseError("bad rational '" + s + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace dualart
