#pragma once

#include "zqc/qudit.hpp"

#include <vector>

namespace zqc {

/// Label of one codeword: pair-register vectors a, b in Z_q^t plus the
/// message index m carried by the last qudit. Valid labels satisfy
/// sum(a) = 0 and sum(b) = m (mod q), so only a_1..a_{t-1}, b_1..b_{t-1}
/// are free.
struct CodewordLabel {
  Eigen::VectorXi a;
  Eigen::VectorXi b;
  int m = 0;
};

struct Codeword {
  CodewordLabel label;
  Ket state;
};

/// A hybrid code: M mutually orthogonal inner codes of dimension K indexed by
/// the classical message, over n = 2t + 1 qudits of local dimension q. For
/// codes built by build_hybrid_code, K = q^{n-3} and M = q; codes produced by
/// splitting carry smaller K and larger M. inner_codes[message] lists the
/// ordered orthonormal basis (up to the q^{-norm_exp/2} scaling).
struct HybridCode {
  int q = 0;
  int n = 0;
  int t = 0;
  long long K = 0;
  long long M = 0;
  int claimed_distance = 2;
  std::vector<std::vector<Codeword>> inner_codes;

  long long total_codewords() const { return K * M; }
  const Codeword& codeword(long long message, long long index) const;
};

/// Two-qudit state with amplitude w^{(c1 - a)(c2 - b)} at (c1, c2); norm_exp 2.
Ket build_pair_state(int q, int a, int b);

/// Tensor product of the t pair states; norm_exp 2t.
Ket build_phi(int q, const Eigen::VectorXi& a, const Eigen::VectorXi& b);

/// Single-qudit state with amplitude w^{mc} at c; norm_exp 1.
Ket build_psi(int q, int m);

/// All labels with sum(a) = 0, sum(b) = m (mod q), in deterministic order:
/// the free coordinates a_1..a_{t-1}, b_1..b_{t-1} sweep lexicographically
/// (a_1 most significant) and the last coordinate of each vector is computed
/// from its constraint. Count is q^(n-3). Requires odd n >= 3.
std::vector<CodewordLabel> enumerate_labels(int q, int n, int m);

/// The [[n, n-3:1, 2]] hybrid code over Z_q: inner code m is spanned by
/// phi(a, b) (x) psi(m) over enumerate_labels(q, n, m).
HybridCode build_hybrid_code(int q, int n);

/// Pauli operator mapping the ordered basis of inner code 0 onto the ordered
/// basis of inner code m with no phase: X(m) on qudit n-1 shifts the forced
/// b coordinate, Z(m) on qudit n shifts the message register.
PauliOp translation_operator(int q, int n, int m);

/// Largest dimension of an odd-length distance-2 binary quantum code,
/// 2^{n-2} (1 - 1/(n-1)), as an exact rational.
Rational rains_bound(int n);

/// A free label coordinate: axis 'a' or 'b', 1-based index in 1..t-1.
struct SplitCoordinate {
  char axis = 'b';
  int index = 1;
};

/// Partition each inner code by the value of a free label coordinate,
/// trading one q-ary quantum digit for a classical one: K -> K/q, M -> qM.
/// New message indices are ordered (old message, coordinate value). This is
/// the unverified restructuring; trivial_split in the verifier wraps it with
/// a fresh detectability certificate.
HybridCode split_by_label_coordinate(const HybridCode& code, SplitCoordinate coordinate);

} // namespace zqc
