#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace zqc {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Exact element of the cyclotomic field Q(w), w = exp(2*pi*i/q), stored as a
/// coefficient vector over the redundant basis {w^0, ..., w^{q-1}}. No
/// canonical form is maintained between operations; equality and zero tests
/// reduce the difference modulo the q-th cyclotomic polynomial, which is the
/// sound test for any integer modulus, prime or not.
///
/// Modulus 1 denotes a plain rational constant. Rationals embed canonically in
/// every Q(w), so mixed arithmetic lifts modulus-1 operands to the other
/// operand's modulus; any other modulus mismatch throws.
///
/// Values are immutable in spirit: every operation returns a fresh value, and
/// const values are safe to share between threads.
class Cyclotomic {
public:
  /// Rational zero (modulus 1).
  Cyclotomic() = default;

  /// Rational constant (modulus 1). Implicit so Eigen can form Scalar(0),
  /// Scalar(1) and tests can write x + 1.
  Cyclotomic(int value) : coeff_(value) {}
  Cyclotomic(const Rational& value) : coeff_(value) {}
  Cyclotomic(Rational&& value) : coeff_(std::move(value)) {}

  /// The zero / one element of Q(w_q).
  static Cyclotomic zero(int q) { return monomial(q, 0, Rational(0)); }
  static Cyclotomic one(int q) { return monomial(q, 0, Rational(1)); }

  /// w^e in Q(w_q), e reduced mod q. Rejects q < 2: there is no nontrivial
  /// root of unity below the second.
  static Cyclotomic root_power(int q, long long e);

  /// coeff * w^e with e reduced mod q. Requires q >= 1.
  static Cyclotomic monomial(int q, long long e, Rational coeff);

  /// Element from an explicit length-q coefficient vector.
  static Cyclotomic from_coeffs(int q, std::vector<Rational> coeffs);

  int modulus() const { return q_; }

  /// Coefficient of w^j, 0 <= j < modulus().
  const Rational& coeff(int j) const;

  /// Dense copy of all q coefficients.
  std::vector<Rational> coeffs() const;

  /// True iff the value is exactly zero, decided by reducing the coefficient
  /// polynomial modulo the q-th cyclotomic polynomial.
  bool is_zero() const;

  /// True while the value is held as a single monomial coeff * w^exp (the
  /// form every amplitude produced by the state builders has).
  bool is_monomial() const { return dense_.empty(); }
  int monomial_exponent() const { return exp_; }
  const Rational& monomial_coefficient() const { return coeff_; }

  Cyclotomic operator-() const;
  Cyclotomic& operator+=(const Cyclotomic& rhs);
  Cyclotomic& operator-=(const Cyclotomic& rhs);
  Cyclotomic& operator*=(const Cyclotomic& rhs);

  friend Cyclotomic operator+(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs += rhs; }
  friend Cyclotomic operator-(Cyclotomic lhs, const Cyclotomic& rhs) { return lhs -= rhs; }
  friend Cyclotomic operator*(const Cyclotomic& lhs, const Cyclotomic& rhs);

  /// Semantic equality: the difference reduces to zero mod the cyclotomic
  /// polynomial. Distinct coefficient vectors may compare equal.
  friend bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs);
  friend bool operator!=(const Cyclotomic& lhs, const Cyclotomic& rhs) { return !(lhs == rhs); }

  /// Complex conjugate: the coefficient of w^j moves to w^{(q-j) mod q}.
  friend Cyclotomic conj(const Cyclotomic& x);

  /// Multiply by w^k in Q(w_q). Lifts a rational constant to modulus q first;
  /// `this` must already have modulus q or 1.
  Cyclotomic times_root_power(int q, long long k) const;

  /// Floating approximation sum_j c_j exp(2*pi*i*j/q). Display and numeric
  /// cross-checks only; never consulted for equality decisions.
  std::complex<double> to_complex() const;

  /// Short human-readable form, e.g. "1 - w^2" or "3/2".
  std::string to_string() const;

private:
  friend void accumulate_conj_product(Cyclotomic& acc, const Cyclotomic& u, const Cyclotomic& v);

  // Representation: either a single monomial coeff_ * w^exp_ ("packed",
  // dense_ empty) or a full coefficient vector of length q_ ("dense"). All
  // states built by the code family have monomial amplitudes, so the packed
  // form keeps q^n-entry amplitude vectors cheap; sums promote to dense.
  bool packed() const { return dense_.empty(); }
  void ensure_dense();
  void lift(int q);
  static void check_same_modulus(const Cyclotomic& a, const Cyclotomic& b);

  int q_ = 1;
  int exp_ = 0;
  Rational coeff_ = Rational(0);
  std::vector<Rational> dense_;
};

/// acc += conj(u) * v without materializing temporaries; the inner-product
/// hot path. acc must be dense with modulus q >= max(u.q, v.q).
void accumulate_conj_product(Cyclotomic& acc, const Cyclotomic& u, const Cyclotomic& v);

/// The q-th cyclotomic polynomial (ascending coefficients, monic), computed by
/// iterated exact division of x^q - 1 by the lower-order factors. q >= 1.
std::vector<BigInt> cyclotomic_polynomial(int q);

using CycVector = Eigen::Matrix<Cyclotomic, Eigen::Dynamic, 1>;
using CycMatrix = Eigen::Matrix<Cyclotomic, Eigen::Dynamic, Eigen::Dynamic>;

} // namespace zqc

namespace Eigen {

template <> struct NumTraits<zqc::Cyclotomic> {
  using Real = zqc::Cyclotomic;
  using NonInteger = zqc::Cyclotomic;
  using Literal = int;
  using Nested = zqc::Cyclotomic;
  enum {
    IsComplex = 1, // so adjoint()/dot() conjugate through zqc::conj
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 32,
    MulCost = 64,
  };
  static int digits10() { return 0; }
};

// With Real == Cyclotomic the generic <T, Real> / <Real, T> partial
// specializations tie; this one wins overload resolution for same-type ops.
template <typename BinaryOp>
struct ScalarBinaryOpTraits<zqc::Cyclotomic, zqc::Cyclotomic, BinaryOp> {
  using ReturnType = zqc::Cyclotomic;
};

} // namespace Eigen
