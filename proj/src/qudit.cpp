#include "zqc/qudit.hpp"

#include <stdexcept>

namespace zqc {

namespace {

void check_same_shape(int ql, int nl, int qr, int nr, const char* what) {
  if (ql != qr || nl != nr)
    throw std::invalid_argument(std::string(what) + ": dimension mismatch");
}

} // namespace

long long power_of(int q, int n) {
  long long p = 1;
  for (int i = 0; i < n; ++i) p *= q;
  return p;
}

Ket basis_state(int q, int n, long long index) {
  if (q < 2 || n < 1) throw std::invalid_argument("basis_state: need q >= 2, n >= 1");
  const long long dim = power_of(q, n);
  if (index < 0 || index >= dim) throw std::out_of_range("basis_state: index out of range");
  Ket s{q, n, 0, CycVector(dim)};
  for (long long i = 0; i < dim; ++i) s.amps(i) = Cyclotomic::zero(q);
  s.amps(index) = Cyclotomic::one(q);
  return s;
}

Ket tensor(const Ket& u, const Ket& v) {
  if (u.q != v.q) throw std::invalid_argument("tensor: dimension mismatch");
  Ket out{u.q, u.n + v.n, u.norm_exp + v.norm_exp, CycVector(u.amps.size() * v.amps.size())};
  const long long vd = v.amps.size();
  for (long long i = 0; i < u.amps.size(); ++i)
    for (long long j = 0; j < vd; ++j) out.amps(i * vd + j) = u.amps(i) * v.amps(j);
  return out;
}

int PauliOp::weight() const {
  int w = 0;
  for (int i = 0; i < n; ++i)
    if (xvec(i) != 0 || zvec(i) != 0) ++w;
  return w;
}

std::vector<int> PauliOp::support() const {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (xvec(i) != 0 || zvec(i) != 0) out.push_back(i + 1);
  return out;
}

PauliOp identity_pauli(int q, int n) {
  return PauliOp{q, n, Eigen::VectorXi::Zero(n), Eigen::VectorXi::Zero(n), 0};
}

PauliOp single_pauli(int q, int n, int pos, int a, int b) {
  if (pos < 1 || pos > n) throw std::out_of_range("single_pauli: position out of range");
  PauliOp p = identity_pauli(q, n);
  p.xvec(pos - 1) = ((a % q) + q) % q;
  p.zvec(pos - 1) = ((b % q) + q) % q;
  return p;
}

PauliOp pauli_mul(const PauliOp& lhs, const PauliOp& rhs) {
  check_same_shape(lhs.q, lhs.n, rhs.q, rhs.n, "pauli_mul");
  PauliOp out = identity_pauli(lhs.q, lhs.n);
  long long phase = lhs.phase_exp + rhs.phase_exp;
  for (int i = 0; i < lhs.n; ++i) {
    phase += static_cast<long long>(lhs.zvec(i)) * rhs.xvec(i);
    out.xvec(i) = (lhs.xvec(i) + rhs.xvec(i)) % lhs.q;
    out.zvec(i) = (lhs.zvec(i) + rhs.zvec(i)) % lhs.q;
  }
  out.phase_exp = static_cast<int>(phase % lhs.q);
  return out;
}

PauliOp adjoint(const PauliOp& p) {
  PauliOp out = identity_pauli(p.q, p.n);
  long long phase = -p.phase_exp;
  for (int i = 0; i < p.n; ++i) {
    phase += static_cast<long long>(p.xvec(i)) * p.zvec(i);
    out.xvec(i) = (p.q - p.xvec(i)) % p.q;
    out.zvec(i) = (p.q - p.zvec(i)) % p.q;
  }
  out.phase_exp = static_cast<int>(((phase % p.q) + p.q) % p.q);
  return out;
}

Ket apply_pauli(const PauliOp& p, const Ket& s) {
  check_same_shape(p.q, p.n, s.q, s.n, "apply_pauli");
  const int q = s.q;
  const long long dim = s.amps.size();
  Ket out{s.q, s.n, s.norm_exp, CycVector(dim)};
  std::vector<int> digits(static_cast<size_t>(s.n), 0);
  for (long long idx = 0; idx < dim; ++idx) {
    long long dest = 0;
    long long phase = p.phase_exp;
    for (int i = 0; i < s.n; ++i) {
      dest = dest * q + (digits[static_cast<size_t>(i)] + p.xvec(i)) % q;
      phase += static_cast<long long>(p.zvec(i)) * digits[static_cast<size_t>(i)];
    }
    out.amps(dest) = s.amps(idx).times_root_power(q, phase);
    for (int i = s.n - 1; i >= 0; --i) { // odometer, big-endian digits
      if (++digits[static_cast<size_t>(i)] < q) break;
      digits[static_cast<size_t>(i)] = 0;
    }
  }
  return out;
}

bool InnerProduct::equals_scalar(const Cyclotomic& s) const {
  if (value.is_zero()) return s.is_zero();
  if (half_exp % 2 != 0) return false;
  const Rational base(std::max(value.modulus(), s.modulus()));
  Rational power(1);
  for (int i = 0; i < half_exp / 2; ++i) power *= base;
  return value == s * Cyclotomic(power);
}

InnerProduct inner(const Ket& u, const Ket& v) {
  check_same_shape(u.q, u.n, v.q, v.n, "inner");
  const int q = u.q;
  const long long dim = u.amps.size();

  // Fast path: while both amplitudes stay unit monomials (every state the
  // builders emit), each term contributes +-1 to one exponent bucket, so the
  // sum is an exact integer count per power of w.
  std::vector<long long> counts(static_cast<size_t>(q), 0);
  long long i = 0;
  for (; i < dim; ++i) {
    const Cyclotomic& a = u.amps(i);
    const Cyclotomic& b = v.amps(i);
    if (!a.is_monomial() || !b.is_monomial()) break;
    const Rational& ca = a.monomial_coefficient();
    const Rational& cb = b.monomial_coefficient();
    const bool na = ca == 1, nb = cb == 1;
    if ((!na && ca != -1) || (!nb && cb != -1)) {
      if (ca == 0 || cb == 0) continue;
      break;
    }
    int e = b.monomial_exponent() - a.monomial_exponent();
    if (e < 0) e += q;
    counts[static_cast<size_t>(e)] += na == nb ? 1 : -1;
  }
  if (i == dim) {
    std::vector<Rational> coeffs(counts.begin(), counts.end());
    return InnerProduct{Cyclotomic::from_coeffs(q, std::move(coeffs)), u.norm_exp + v.norm_exp};
  }

  Cyclotomic acc = Cyclotomic::zero(q);
  for (long long j = 0; j < dim; ++j) accumulate_conj_product(acc, u.amps(j), v.amps(j));
  return InnerProduct{std::move(acc), u.norm_exp + v.norm_exp};
}

std::vector<PauliOp> enumerate_paulis(int q, int n, int max_weight) {
  if (max_weight < 0 || max_weight > n)
    throw std::invalid_argument("enumerate_paulis: weight out of range");
  std::vector<PauliOp> out;
  const long long pairs = static_cast<long long>(q) * q - 1;
  for (int w = 1; w <= max_weight; ++w) {
    std::vector<int> combo(static_cast<size_t>(w));
    for (int i = 0; i < w; ++i) combo[static_cast<size_t>(i)] = i;
    while (true) {
      // Sweep all nonzero pair assignments for this position subset; the
      // first (lowest) position is the most significant digit.
      std::vector<long long> digit(static_cast<size_t>(w), 1);
      while (true) {
        PauliOp p = identity_pauli(q, n);
        for (int k = 0; k < w; ++k) {
          const long long d = digit[static_cast<size_t>(k)];
          p.xvec(combo[static_cast<size_t>(k)]) = static_cast<int>(d / q);
          p.zvec(combo[static_cast<size_t>(k)]) = static_cast<int>(d % q);
        }
        out.push_back(std::move(p));
        int k = w - 1;
        while (k >= 0 && digit[static_cast<size_t>(k)] == pairs) {
          digit[static_cast<size_t>(k)] = 1;
          --k;
        }
        if (k < 0) break;
        ++digit[static_cast<size_t>(k)];
      }
      // Next lexicographic position subset.
      int i = w - 1;
      while (i >= 0 && combo[static_cast<size_t>(i)] == n - w + i) --i;
      if (i < 0) break;
      ++combo[static_cast<size_t>(i)];
      for (int j = i + 1; j < w; ++j)
        combo[static_cast<size_t>(j)] = combo[static_cast<size_t>(j - 1)] + 1;
    }
  }
  return out;
}

} // namespace zqc
