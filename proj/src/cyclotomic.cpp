#include "zqc/cyclotomic.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace zqc {

namespace {

const Rational kZero(0);

long long floor_mod(long long v, long long q) {
  long long r = v % q;
  return r < 0 ? r + q : r;
}

// Exact quotient of integer polynomials, ascending coefficients, monic
// divisor. Aborts if the division leaves a remainder.
std::vector<BigInt> divide_exact(std::vector<BigInt> num, const std::vector<BigInt>& den) {
  const auto dn = static_cast<long>(num.size()) - 1;
  const auto dd = static_cast<long>(den.size()) - 1;
  if (dd < 0 || den.back() != 1)
    throw std::logic_error("divide_exact: divisor must be monic");
  std::vector<BigInt> quot(static_cast<size_t>(dn - dd + 1), BigInt(0));
  for (long i = dn; i >= dd; --i) {
    BigInt c = num[static_cast<size_t>(i)];
    if (c == 0) continue;
    quot[static_cast<size_t>(i - dd)] = c;
    for (long j = 0; j <= dd; ++j)
      num[static_cast<size_t>(i - dd + j)] -= c * den[static_cast<size_t>(j)];
  }
  for (const auto& c : num)
    if (c != 0) throw std::logic_error("divide_exact: nonzero remainder");
  return quot;
}

} // namespace

std::vector<BigInt> cyclotomic_polynomial(int q) {
  if (q < 1) throw std::invalid_argument("cyclotomic_polynomial: q must be >= 1");
  static std::map<int, std::vector<BigInt>> cache;
  static std::mutex mutex;
  std::lock_guard<std::mutex> lock(mutex);

  // Iterative over divisors so the cache fills bottom-up under one lock.
  auto compute = [](int m, const std::map<int, std::vector<BigInt>>& memo) {
    std::vector<BigInt> poly(static_cast<size_t>(m) + 1, BigInt(0));
    poly.front() = -1;
    poly.back() = 1; // x^m - 1
    for (int d = 1; d < m; ++d)
      if (m % d == 0) poly = divide_exact(std::move(poly), memo.at(d));
    return poly;
  };
  for (int d = 1; d <= q; ++d)
    if (q % d == 0 && !cache.count(d)) cache[d] = compute(d, cache);
  return cache.at(q);
}

Cyclotomic Cyclotomic::root_power(int q, long long e) {
  if (q < 2) throw std::invalid_argument("root_power: modulus must be at least 2");
  return monomial(q, e, Rational(1));
}

Cyclotomic Cyclotomic::monomial(int q, long long e, Rational coeff) {
  if (q < 1) throw std::invalid_argument("monomial: modulus must be at least 1");
  Cyclotomic x;
  x.q_ = q;
  x.exp_ = static_cast<int>(floor_mod(e, q));
  x.coeff_ = std::move(coeff);
  return x;
}

Cyclotomic Cyclotomic::from_coeffs(int q, std::vector<Rational> coeffs) {
  if (q < 1) throw std::invalid_argument("from_coeffs: modulus must be at least 1");
  if (coeffs.size() != static_cast<size_t>(q))
    throw std::invalid_argument("from_coeffs: expected exactly q coefficients");
  Cyclotomic x;
  x.q_ = q;
  x.dense_ = std::move(coeffs);
  return x;
}

const Rational& Cyclotomic::coeff(int j) const {
  if (j < 0 || j >= q_) throw std::out_of_range("Cyclotomic::coeff: index out of range");
  if (packed()) return j == exp_ ? coeff_ : kZero;
  return dense_[static_cast<size_t>(j)];
}

std::vector<Rational> Cyclotomic::coeffs() const {
  if (!packed()) return dense_;
  std::vector<Rational> out(static_cast<size_t>(q_), Rational(0));
  out[static_cast<size_t>(exp_)] = coeff_;
  return out;
}

void Cyclotomic::ensure_dense() {
  if (!packed()) return;
  dense_.assign(static_cast<size_t>(q_), Rational(0));
  dense_[static_cast<size_t>(exp_)] = std::move(coeff_);
  coeff_ = Rational(0);
  exp_ = 0;
}

void Cyclotomic::lift(int q) {
  if (q_ == q) return;
  if (q_ != 1) throw std::invalid_argument("Cyclotomic: modulus mismatch");
  Rational c = packed() ? coeff_ : dense_[0];
  *this = monomial(q, 0, std::move(c));
}

void Cyclotomic::check_same_modulus(const Cyclotomic& a, const Cyclotomic& b) {
  if (a.q_ != b.q_ && a.q_ != 1 && b.q_ != 1)
    throw std::invalid_argument("Cyclotomic: modulus mismatch");
}

bool Cyclotomic::is_zero() const {
  if (packed()) return coeff_ == 0;
  bool literal_zero = std::all_of(dense_.begin(), dense_.end(),
                                  [](const Rational& c) { return c == 0; });
  if (literal_zero || q_ == 1) return literal_zero;

  // Reduce modulo Phi_q; zero iff the remainder vanishes. The representation
  // modulo x^q - 1 is redundant for composite q, so a literal scan is not
  // sufficient.
  const auto phi = cyclotomic_polynomial(q_);
  const auto deg = static_cast<long>(phi.size()) - 1;
  std::vector<Rational> rem = dense_;
  for (long i = static_cast<long>(rem.size()) - 1; i >= deg; --i) {
    Rational c = rem[static_cast<size_t>(i)];
    if (c == 0) continue;
    for (long j = 0; j <= deg; ++j)
      rem[static_cast<size_t>(i - deg + j)] -= c * Rational(phi[static_cast<size_t>(j)]);
  }
  return std::all_of(rem.begin(), rem.begin() + deg,
                     [](const Rational& c) { return c == 0; });
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic out = *this;
  if (out.packed()) {
    out.coeff_ = -out.coeff_;
  } else {
    for (auto& c : out.dense_) c = -c;
  }
  return out;
}

Cyclotomic& Cyclotomic::operator+=(const Cyclotomic& rhs) {
  if (q_ != rhs.q_) {
    if (q_ == 1) {
      lift(rhs.q_);
    } else if (rhs.q_ == 1) {
      Cyclotomic lifted = rhs;
      lifted.lift(q_);
      return *this += lifted;
    } else {
      throw std::invalid_argument("Cyclotomic: modulus mismatch");
    }
  }
  if (&rhs == this) {
    Cyclotomic copy = rhs;
    return *this += copy;
  }
  if (packed() && rhs.packed()) {
    if (rhs.coeff_ == 0) return *this;
    if (coeff_ == 0) {
      exp_ = rhs.exp_;
      coeff_ = rhs.coeff_;
      return *this;
    }
    if (exp_ == rhs.exp_) {
      coeff_ += rhs.coeff_;
      return *this;
    }
    ensure_dense();
  }
  if (!packed() && rhs.packed()) {
    dense_[static_cast<size_t>(rhs.exp_)] += rhs.coeff_;
    return *this;
  }
  ensure_dense();
  if (rhs.packed()) {
    dense_[static_cast<size_t>(rhs.exp_)] += rhs.coeff_;
  } else {
    for (int j = 0; j < q_; ++j) dense_[static_cast<size_t>(j)] += rhs.dense_[static_cast<size_t>(j)];
  }
  return *this;
}

Cyclotomic& Cyclotomic::operator-=(const Cyclotomic& rhs) { return *this += -rhs; }

Cyclotomic operator*(const Cyclotomic& lhs, const Cyclotomic& rhs) {
  Cyclotomic::check_same_modulus(lhs, rhs);
  if (lhs.q_ != rhs.q_) {
    Cyclotomic a = lhs, b = rhs;
    if (a.q_ == 1) a.lift(b.q_); else b.lift(a.q_);
    return a * b;
  }
  const int q = lhs.q_;
  if (lhs.packed() && rhs.packed())
    return Cyclotomic::monomial(q, static_cast<long long>(lhs.exp_) + rhs.exp_,
                                lhs.coeff_ * rhs.coeff_);
  if (lhs.packed() || rhs.packed()) {
    const Cyclotomic& mono = lhs.packed() ? lhs : rhs;
    const Cyclotomic& dense = lhs.packed() ? rhs : lhs;
    if (mono.coeff_ == 0) return Cyclotomic::zero(q);
    std::vector<Rational> out(static_cast<size_t>(q), Rational(0));
    for (int j = 0; j < q; ++j) {
      const auto& c = dense.dense_[static_cast<size_t>(j)];
      if (c == 0) continue;
      out[static_cast<size_t>((j + mono.exp_) % q)] = mono.coeff_ * c;
    }
    return Cyclotomic::from_coeffs(q, std::move(out));
  }
  // Full convolution with exponents folded mod q.
  std::vector<Rational> out(static_cast<size_t>(q), Rational(0));
  for (int i = 0; i < q; ++i) {
    const auto& a = lhs.dense_[static_cast<size_t>(i)];
    if (a == 0) continue;
    for (int j = 0; j < q; ++j) {
      const auto& b = rhs.dense_[static_cast<size_t>(j)];
      if (b == 0) continue;
      out[static_cast<size_t>((i + j) % q)] += a * b;
    }
  }
  return Cyclotomic::from_coeffs(q, std::move(out));
}

Cyclotomic& Cyclotomic::operator*=(const Cyclotomic& rhs) { return *this = *this * rhs; }

bool operator==(const Cyclotomic& lhs, const Cyclotomic& rhs) {
  if (lhs.packed() && rhs.packed() && lhs.q_ == rhs.q_) {
    const bool lz = lhs.coeff_ == 0, rz = rhs.coeff_ == 0;
    if (lz || rz) return lz && rz;
    const int d = floor_mod(rhs.exp_ - lhs.exp_, lhs.q_);
    if (d == 0) return lhs.coeff_ == rhs.coeff_;
    // w^d is rational only for d = q/2 (where it equals -1), so distinct
    // exponents can only match through a sign flip.
    if (lhs.q_ % 2 == 0 && d == lhs.q_ / 2) return lhs.coeff_ == -rhs.coeff_;
    return false;
  }
  return (lhs - rhs).is_zero();
}

Cyclotomic conj(const Cyclotomic& x) {
  if (x.packed())
    return Cyclotomic::monomial(x.q_, x.exp_ == 0 ? 0 : x.q_ - x.exp_, x.coeff_);
  std::vector<Rational> out(static_cast<size_t>(x.q_), Rational(0));
  for (int j = 0; j < x.q_; ++j)
    out[static_cast<size_t>(j == 0 ? 0 : x.q_ - j)] = x.dense_[static_cast<size_t>(j)];
  return Cyclotomic::from_coeffs(x.q_, std::move(out));
}

Cyclotomic Cyclotomic::times_root_power(int q, long long k) const {
  if (q_ != q && q_ != 1) throw std::invalid_argument("times_root_power: modulus mismatch");
  Cyclotomic out = *this;
  out.lift(q);
  const int shift = static_cast<int>(floor_mod(k, q));
  if (out.packed()) {
    out.exp_ = (out.exp_ + shift) % q;
    return out;
  }
  std::vector<Rational> rotated(static_cast<size_t>(q), Rational(0));
  for (int j = 0; j < q; ++j)
    rotated[static_cast<size_t>((j + shift) % q)] = std::move(out.dense_[static_cast<size_t>(j)]);
  out.dense_ = std::move(rotated);
  return out;
}

void accumulate_conj_product(Cyclotomic& acc, const Cyclotomic& u, const Cyclotomic& v) {
  acc.ensure_dense();
  const int q = acc.q_;
  if ((u.q_ != q && u.q_ != 1) || (v.q_ != q && v.q_ != 1))
    throw std::invalid_argument("accumulate_conj_product: modulus mismatch");
  if (u.packed() && v.packed()) {
    if (u.coeff_ == 0 || v.coeff_ == 0) return;
    const int e = static_cast<int>(floor_mod(v.exp_ - u.exp_, q));
    acc.dense_[static_cast<size_t>(e)] += u.coeff_ * v.coeff_;
    return;
  }
  acc += conj(u) * v;
}

std::complex<double> Cyclotomic::to_complex() const {
  const double step = 2.0 * std::numbers::pi / static_cast<double>(q_);
  auto term = [&](int j, const Rational& c) {
    const double x = c.convert_to<double>();
    return std::complex<double>(x * std::cos(step * j), x * std::sin(step * j));
  };
  if (packed()) return term(exp_, coeff_);
  std::complex<double> acc(0.0, 0.0);
  for (int j = 0; j < q_; ++j) acc += term(j, dense_[static_cast<size_t>(j)]);
  return acc;
}

std::string Cyclotomic::to_string() const {
  std::ostringstream os;
  bool first = true;
  for (int j = 0; j < q_; ++j) {
    const Rational& c = coeff(j);
    if (c == 0) continue;
    if (!first) os << (c > 0 ? " + " : " - ");
    const Rational mag = (!first && c < 0) ? Rational(-c) : c;
    first = false;
    if (j == 0) {
      os << mag.str();
    } else {
      if (mag != 1) os << mag.str() << "*";
      os << "w";
      if (j > 1) os << "^" << j;
    }
  }
  if (first) os << "0";
  return os.str();
}

} // namespace zqc
