#pragma once

#include "zqc/code_family.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

namespace zqc {

enum class Engine { Dense, Factored };

/// (message, index-within-inner-code) coordinates of a codeword.
struct BlockIndex {
  long long message = 0;
  long long index = 0;
};

enum class DetectionStatus { ZeroDetected, DegenerateDetected, Violation };

/// On violation: the offending matrix element and where it sits.
struct Witness {
  BlockIndex row;
  BlockIndex col;
  InnerProduct value;
};

/// Verdict for a single error. For detected errors lambda_table holds the
/// block scalars: one entry per message for the hybrid check, a single entry
/// for the quantum-union check. A degenerate-detected error has diagonal
/// blocks lambda * identity with some lambda nonzero and vanishing
/// off-diagonal blocks; zero-detected means every matrix element vanishes.
struct DetectionCertificate {
  PauliOp error;
  DetectionStatus status = DetectionStatus::ZeroDetected;
  std::vector<InnerProduct> lambda_table;
  std::optional<Witness> witness;
};

/// Outcome of sweeping every enumerated error of weight <= weight. pass holds
/// iff there are no violations, i.e. the code detects the whole swept set.
struct VerificationReport {
  int q = 0;
  int n = 0;
  int t = 0;
  long long K = 0;
  long long M = 0;
  int claimed_distance = 2;
  int weight = 0;
  Engine engine = Engine::Factored;
  bool union_check = false;
  std::vector<DetectionCertificate> certificates;
  long long zero_detected = 0;
  long long degenerate_detected = 0;
  long long violations = 0;
  bool pass = false;
  long long wall_time_ms = 0;
};

/// <c_j^(b)| E |c_i^(a)> computed densely: apply the error to the column
/// codeword, then take the exact inner product.
InnerProduct kl_matrix_element(const HybridCode& code, const PauliOp& error, BlockIndex row,
                               BlockIndex col);

/// Write-once cache of per-factor matrix elements, keyed by (label pair,
/// single- or two-qudit error). Each worker owns its own instance. Factors
/// are evaluated densely in dimension q^2 (pairs) or q (the message qudit)
/// rather than through hand-derived closed forms.
class FactorCache {
public:
  explicit FactorCache(int q);

  /// <phi_{ra,rb}| X(u1)Z(v1) (x) X(u2)Z(v2) |phi_{ca,cb}>, unnormalized.
  const Cyclotomic& pair_factor(int ra, int rb, int ca, int cb, int u1, int v1, int u2, int v2);
  bool pair_factor_is_zero(int ra, int rb, int ca, int cb, int u1, int v1, int u2, int v2);

  /// <psi_rm| X(u)Z(v) |psi_cm>, unnormalized.
  const Cyclotomic& psi_factor(int rm, int cm, int u, int v);
  bool psi_factor_is_zero(int rm, int cm, int u, int v);

private:
  struct Entry {
    Cyclotomic value;
    bool zero = false;
  };
  const Entry& pair_entry(int ra, int rb, int ca, int cb, int u1, int v1, int u2, int v2);
  const Entry& psi_entry(int rm, int cm, int u, int v);
  const Ket& pair_state(int a, int b);

  int q_;
  std::unordered_map<std::uint64_t, Entry> pair_;
  std::unordered_map<std::uint32_t, Entry> psi_;
  std::unordered_map<int, Ket> pair_states_;
};

/// Same matrix element as kl_matrix_element, computed as the product of t
/// pair factors and one message factor. Factors where the error acts
/// trivially collapse to exact label comparisons (the orthogonality
/// relations), so mismatching elements short-circuit to zero.
InnerProduct factored_matrix_element(const HybridCode& code, const PauliOp& error, BlockIndex row,
                                     BlockIndex col, FactorCache& cache);

/// Hybrid detectability sweep: classifies every error from
/// enumerate_paulis(q, n, weight) against the hybrid conditions
/// (diagonal blocks lambda_{E,a} * identity, cross blocks zero).
VerificationReport verify_hybrid(const HybridCode& code, int weight,
                                 Engine engine = Engine::Factored, int threads = 1);

/// Standard detectability sweep for the union of all inner codes viewed as
/// one quantum code of dimension K*M: lambda must not depend on the message.
VerificationReport verify_quantum_union(const HybridCode& code, int weight,
                                        Engine engine = Engine::Factored, int threads = 1);

/// Exact Gram matrix of all K*M codewords in report order. Every entry is the
/// raw inner product; all codewords share one normalization exponent, kept in
/// half_exp.
struct GramMatrix {
  int q = 0;
  int half_exp = 0;
  CycMatrix values;
  bool is_identity() const;
};

GramMatrix gram_matrix(const HybridCode& code, int threads = 1);

struct SplitResult {
  HybridCode code;
  VerificationReport report;
};

/// Split verification failed; carries the candidate and its report, and the
/// message names the first violating error operator.
class SplitInvalidError : public std::runtime_error {
public:
  SplitInvalidError(const std::string& message, HybridCode code, VerificationReport report)
      : std::runtime_error(message), code(std::move(code)), report(std::move(report)) {}
  HybridCode code;
  VerificationReport report;
};

/// Trade one quantum digit for a classical one by partitioning each inner
/// code along a free label coordinate, then certify the candidate with a
/// fresh weight-1 verification. Throws SplitInvalidError if the candidate
/// fails, std::invalid_argument if K = 1 or the coordinate is not free.
SplitResult trivial_split(const HybridCode& code, SplitCoordinate coordinate,
                          Engine engine = Engine::Factored, int threads = 1);

/// Display form like "X(1)Z(0)@2 * X(0)Z(3)@5", or "I" for the identity.
std::string to_string(const PauliOp& p);

} // namespace zqc
