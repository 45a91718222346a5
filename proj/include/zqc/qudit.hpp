#pragma once

#include "zqc/cyclotomic.hpp"

#include <vector>

namespace zqc {

/// q^n as a 64-bit count.
long long power_of(int q, int n);

/// Unnormalized dense state over n qudits of local dimension q. The physical
/// state is q^{-norm_exp/2} times amps. Amplitude index is the big-endian
/// base-q digit string of the qudit values: the leftmost digit is qudit 1.
struct Ket {
  int q = 0;
  int n = 0;
  int norm_exp = 0;
  CycVector amps;
};

/// |digits...> with unit amplitude and norm_exp 0.
Ket basis_state(int q, int n, long long index);

/// Kronecker product: qudit counts and normalization exponents add.
Ket tensor(const Ket& u, const Ket& v);

/// Generalized Pauli error w^{phase_exp} * prod_i X(x_i)Z(z_i). On one qudit
/// X(a)Z(b)|x> = w^{bx}|x+a>: Z acts first, then X. Enumerated errors are
/// phase-free; phase_exp only accumulates through composition.
struct PauliOp {
  int q = 0;
  int n = 0;
  Eigen::VectorXi xvec;
  Eigen::VectorXi zvec;
  int phase_exp = 0;

  /// Number of qudits acted on non-trivially.
  int weight() const;
  bool is_identity() const { return weight() == 0; }
  /// 1-based positions with (x_i, z_i) != (0, 0), ascending.
  std::vector<int> support() const;
};

PauliOp identity_pauli(int q, int n);

/// Weight-<=1 operator acting as X(a)Z(b) on the 1-based position pos.
PauliOp single_pauli(int q, int n, int pos, int a, int b);

/// Composition: (X(a)Z(b))(X(a')Z(b')) = w^{b.a'} X(a+a')Z(b+b'), entrywise
/// mod q, phases accumulated in phase_exp.
PauliOp pauli_mul(const PauliOp& lhs, const PauliOp& rhs);

/// Hermitian adjoint; pauli_mul(adjoint(p), p) is the phase-free identity.
PauliOp adjoint(const PauliOp& p);

/// Dense application of the operator; norm_exp is unchanged.
Ket apply_pauli(const PauliOp& p, const Ket& s);

/// Exact scalar value * q^{-half_exp/2}. Two values with equal half_exp
/// compare by their Cyclotomic parts; with different half_exp they compare
/// equal only if both are zero.
struct InnerProduct {
  Cyclotomic value;
  int half_exp = 0;

  bool is_zero() const { return value.is_zero(); }

  friend bool operator==(const InnerProduct& lhs, const InnerProduct& rhs) {
    if (lhs.half_exp == rhs.half_exp) return lhs.value == rhs.value;
    return lhs.is_zero() && rhs.is_zero();
  }
  friend bool operator!=(const InnerProduct& lhs, const InnerProduct& rhs) {
    return !(lhs == rhs);
  }

  /// Compare the represented scalar against a plain field element (treated as
  /// half_exp 0): true iff value = s * q^{half_exp/2}.
  bool equals_scalar(const Cyclotomic& s) const;
};

/// <u|v> = sum_c conj(u_c) v_c, conjugate-linear in the first argument;
/// half_exp is the sum of the two normalization exponents.
InnerProduct inner(const Ket& u, const Ket& v);

/// Every phase-free error of weight 1..max_weight exactly once. Order: weight
/// ascending; position subsets in lexicographic order; per subset, the
/// per-position pairs (a, b) sweep lexicographically over Z_q^2 \ {(0,0)}
/// with the lowest position most significant.
std::vector<PauliOp> enumerate_paulis(int q, int n, int max_weight);

} // namespace zqc
