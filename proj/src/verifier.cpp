#include "zqc/verifier.hpp"

#include <chrono>
#include <functional>
#include <sstream>
#include <thread>

namespace zqc {

namespace {

using Clock = std::chrono::steady_clock;

void check_error_shape(const HybridCode& code, const PauliOp& error, const char* what) {
  if (error.q != code.q || error.n != code.n)
    throw std::invalid_argument(std::string(what) + ": error does not match the code's shape");
}

const Codeword& at(const HybridCode& code, BlockIndex idx) {
  return code.codeword(idx.message, idx.index);
}

// Runs fn(i) for i in [0, count) across the requested number of threads,
// in contiguous chunks. fn must only touch state owned by index i.
void parallel_for(long long count, int threads, const std::function<void(long long, long long)>& chunk_fn) {
  if (threads < 1) threads = 1;
  const long long workers = std::min<long long>(threads, count);
  if (workers <= 1) {
    chunk_fn(0, count);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(static_cast<size_t>(workers));
  const long long base = count / workers, extra = count % workers;
  long long begin = 0;
  for (long long w = 0; w < workers; ++w) {
    const long long size = base + (w < extra ? 1 : 0);
    pool.emplace_back(chunk_fn, begin, begin + size);
    begin += size;
  }
  for (auto& th : pool) th.join();
}

Rational integer_power(int base, int exponent) {
  Rational p(1);
  for (int i = 0; i < exponent; ++i) p *= base;
  return p;
}

} // namespace

std::string to_string(const PauliOp& p) {
  std::ostringstream os;
  if (p.phase_exp != 0) os << "w^" << p.phase_exp << " * ";
  bool first = true;
  for (int i = 0; i < p.n; ++i) {
    if (p.xvec(i) == 0 && p.zvec(i) == 0) continue;
    if (!first) os << " * ";
    first = false;
    os << "X(" << p.xvec(i) << ")Z(" << p.zvec(i) << ")@" << (i + 1);
  }
  if (first) os << "I";
  return os.str();
}

InnerProduct kl_matrix_element(const HybridCode& code, const PauliOp& error, BlockIndex row,
                               BlockIndex col) {
  check_error_shape(code, error, "kl_matrix_element");
  return inner(at(code, row).state, apply_pauli(error, at(code, col).state));
}

FactorCache::FactorCache(int q) : q_(q) {}

const Ket& FactorCache::pair_state(int a, int b) {
  const int key = a * q_ + b;
  auto it = pair_states_.find(key);
  if (it == pair_states_.end()) it = pair_states_.emplace(key, build_pair_state(q_, a, b)).first;
  return it->second;
}

const FactorCache::Entry& FactorCache::pair_entry(int ra, int rb, int ca, int cb, int u1, int v1,
                                                  int u2, int v2) {
  std::uint64_t key = 0;
  for (int field : {ra, rb, ca, cb, u1, v1, u2, v2}) key = key << 8 | static_cast<unsigned>(field);
  auto it = pair_.find(key);
  if (it == pair_.end()) {
    PauliOp e = identity_pauli(q_, 2);
    e.xvec << u1, u2;
    e.zvec << v1, v2;
    Entry entry;
    entry.value = inner(pair_state(ra, rb), apply_pauli(e, pair_state(ca, cb))).value;
    entry.zero = entry.value.is_zero();
    it = pair_.emplace(key, std::move(entry)).first;
  }
  return it->second;
}

const FactorCache::Entry& FactorCache::psi_entry(int rm, int cm, int u, int v) {
  const std::uint32_t key = static_cast<std::uint32_t>(((rm * 16 + cm) * 16 + u) * 16 + v);
  auto it = psi_.find(key);
  if (it == psi_.end()) {
    Entry entry;
    entry.value = inner(build_psi(q_, rm), apply_pauli(single_pauli(q_, 1, 1, u, v), build_psi(q_, cm))).value;
    entry.zero = entry.value.is_zero();
    it = psi_.emplace(key, std::move(entry)).first;
  }
  return it->second;
}

const Cyclotomic& FactorCache::pair_factor(int ra, int rb, int ca, int cb, int u1, int v1, int u2,
                                           int v2) {
  return pair_entry(ra, rb, ca, cb, u1, v1, u2, v2).value;
}

bool FactorCache::pair_factor_is_zero(int ra, int rb, int ca, int cb, int u1, int v1, int u2,
                                      int v2) {
  return pair_entry(ra, rb, ca, cb, u1, v1, u2, v2).zero;
}

const Cyclotomic& FactorCache::psi_factor(int rm, int cm, int u, int v) {
  return psi_entry(rm, cm, u, v).value;
}

bool FactorCache::psi_factor_is_zero(int rm, int cm, int u, int v) {
  return psi_entry(rm, cm, u, v).zero;
}

InnerProduct factored_matrix_element(const HybridCode& code, const PauliOp& error, BlockIndex row,
                                     BlockIndex col, FactorCache& cache) {
  check_error_shape(code, error, "factored_matrix_element");
  const int q = code.q;
  const CodewordLabel& rl = at(code, row).label;
  const CodewordLabel& cl = at(code, col).label;
  const InnerProduct zero{Cyclotomic::zero(q), 2 * code.n};

  Cyclotomic value = Cyclotomic::one(q);
  int trivial_pairs = 0;
  for (int i = 0; i < code.t; ++i) {
    const int u1 = error.xvec(2 * i), v1 = error.zvec(2 * i);
    const int u2 = error.xvec(2 * i + 1), v2 = error.zvec(2 * i + 1);
    if ((u1 | v1 | u2 | v2) == 0) {
      // Identity factor: the pair-state orthogonality relations decide it.
      if (rl.a(i) != cl.a(i) || rl.b(i) != cl.b(i)) return zero;
      ++trivial_pairs;
      continue;
    }
    if (cache.pair_factor_is_zero(rl.a(i), rl.b(i), cl.a(i), cl.b(i), u1, v1, u2, v2)) return zero;
    value *= cache.pair_factor(rl.a(i), rl.b(i), cl.a(i), cl.b(i), u1, v1, u2, v2);
  }
  const int u = error.xvec(code.n - 1), v = error.zvec(code.n - 1);
  bool trivial_psi = false;
  if ((u | v) == 0) {
    if (rl.m != cl.m) return zero;
    trivial_psi = true;
  } else {
    if (cache.psi_factor_is_zero(rl.m, cl.m, u, v)) return zero;
    value *= cache.psi_factor(rl.m, cl.m, u, v);
  }
  // Each trivial pair contributes its self inner product q^2, the trivial
  // message factor contributes q.
  const int scale = 2 * trivial_pairs + (trivial_psi ? 1 : 0);
  if (scale > 0) value *= Cyclotomic(integer_power(q, scale));
  if (error.phase_exp != 0) value = value.times_root_power(q, error.phase_exp);
  return InnerProduct{std::move(value), 2 * code.n};
}

namespace {

DetectionCertificate classify_error(const HybridCode& code, const PauliOp& error, Engine engine,
                                    bool union_check, FactorCache& cache) {
  DetectionCertificate cert;
  cert.error = error;
  const long long slots = union_check ? 1 : code.M;
  std::vector<InnerProduct> lambda(static_cast<size_t>(slots),
                                   InnerProduct{Cyclotomic::zero(code.q), 2 * code.n});
  std::vector<bool> lambda_set(static_cast<size_t>(slots), false);

  for (long long cm = 0; cm < code.M; ++cm) {
    for (long long ci = 0; ci < code.K; ++ci) {
      const BlockIndex colIdx{cm, ci};
      Ket applied;
      if (engine == Engine::Dense) applied = apply_pauli(error, at(code, colIdx).state);
      for (long long rm = 0; rm < code.M; ++rm) {
        for (long long ri = 0; ri < code.K; ++ri) {
          const BlockIndex rowIdx{rm, ri};
          InnerProduct v = engine == Engine::Dense
                               ? inner(at(code, rowIdx).state, applied)
                               : factored_matrix_element(code, error, rowIdx, colIdx, cache);
          if (rm == cm && ri == ci) {
            const auto slot = static_cast<size_t>(union_check ? 0 : cm);
            if (!lambda_set[slot]) {
              lambda[slot] = std::move(v);
              lambda_set[slot] = true;
            } else if (v != lambda[slot]) {
              cert.status = DetectionStatus::Violation;
              cert.witness = Witness{rowIdx, colIdx, std::move(v)};
              return cert;
            }
          } else if (!v.is_zero()) {
            cert.status = DetectionStatus::Violation;
            cert.witness = Witness{rowIdx, colIdx, std::move(v)};
            return cert;
          }
        }
      }
    }
  }
  cert.lambda_table = std::move(lambda);
  bool any_nonzero = false;
  for (const auto& l : cert.lambda_table)
    if (!l.is_zero()) any_nonzero = true;
  cert.status = any_nonzero ? DetectionStatus::DegenerateDetected : DetectionStatus::ZeroDetected;
  return cert;
}

VerificationReport run_verification(const HybridCode& code, int weight, Engine engine, int threads,
                                    bool union_check) {
  if (weight < 1 || weight > code.n) throw std::invalid_argument("weight out of range");
  const auto start = Clock::now();
  VerificationReport report;
  report.q = code.q;
  report.n = code.n;
  report.t = code.t;
  report.K = code.K;
  report.M = code.M;
  report.claimed_distance = code.claimed_distance;
  report.weight = weight;
  report.engine = engine;
  report.union_check = union_check;

  const auto errors = enumerate_paulis(code.q, code.n, weight);
  report.certificates.resize(errors.size());
  parallel_for(static_cast<long long>(errors.size()), threads,
               [&](long long begin, long long end) {
                 FactorCache cache(code.q);
                 for (long long i = begin; i < end; ++i)
                   report.certificates[static_cast<size_t>(i)] =
                       classify_error(code, errors[static_cast<size_t>(i)], engine, union_check, cache);
               });

  for (const auto& cert : report.certificates) {
    switch (cert.status) {
    case DetectionStatus::ZeroDetected: ++report.zero_detected; break;
    case DetectionStatus::DegenerateDetected: ++report.degenerate_detected; break;
    case DetectionStatus::Violation: ++report.violations; break;
    }
  }
  report.pass = report.violations == 0;
  report.wall_time_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
  return report;
}

} // namespace

VerificationReport verify_hybrid(const HybridCode& code, int weight, Engine engine, int threads) {
  return run_verification(code, weight, engine, threads, false);
}

VerificationReport verify_quantum_union(const HybridCode& code, int weight, Engine engine,
                                        int threads) {
  return run_verification(code, weight, engine, threads, true);
}

bool GramMatrix::is_identity() const {
  if (half_exp % 2 != 0) return false;
  const Cyclotomic unit{integer_power(q, half_exp / 2)};
  for (long long r = 0; r < values.rows(); ++r)
    for (long long c = 0; c < values.cols(); ++c) {
      if (r == c ? values(r, c) != unit : !values(r, c).is_zero()) return false;
    }
  return true;
}

namespace {

// Exponent/sign view of a state whose amplitudes are all unit monomials
// (+-w^e or 0), which every state built by the code family is. Inner products
// between two views reduce to exact integer counts per power of w.
struct MonomialView {
  bool valid = false;
  std::vector<int> exponent;
  std::vector<signed char> sign;
};

MonomialView view_of(const Ket& s) {
  MonomialView view;
  view.exponent.resize(static_cast<size_t>(s.amps.size()));
  view.sign.resize(static_cast<size_t>(s.amps.size()));
  for (long long i = 0; i < s.amps.size(); ++i) {
    const Cyclotomic& a = s.amps(i);
    if (!a.is_monomial()) return view;
    const Rational& c = a.monomial_coefficient();
    signed char sign = 0;
    if (c == 1)
      sign = 1;
    else if (c == -1)
      sign = -1;
    else if (c != 0)
      return view;
    view.exponent[static_cast<size_t>(i)] = a.monomial_exponent();
    view.sign[static_cast<size_t>(i)] = sign;
  }
  view.valid = true;
  return view;
}

Cyclotomic counted_inner(int q, const MonomialView& u, const MonomialView& v) {
  std::vector<long long> counts(static_cast<size_t>(q), 0);
  for (size_t i = 0; i < u.sign.size(); ++i) {
    const int s = u.sign[i] * v.sign[i];
    if (s == 0) continue;
    int e = v.exponent[i] - u.exponent[i];
    if (e < 0) e += q;
    counts[static_cast<size_t>(e)] += s;
  }
  std::vector<Rational> coeffs(counts.begin(), counts.end());
  return Cyclotomic::from_coeffs(q, std::move(coeffs));
}

} // namespace

GramMatrix gram_matrix(const HybridCode& code, int threads) {
  const long long total = code.total_codewords();
  std::vector<const Ket*> states;
  states.reserve(static_cast<size_t>(total));
  for (const auto& basis : code.inner_codes)
    for (const auto& cw : basis) states.push_back(&cw.state);

  std::vector<MonomialView> views(static_cast<size_t>(total));
  bool all_monomial = true;
  for (long long i = 0; i < total; ++i) {
    views[static_cast<size_t>(i)] = view_of(*states[static_cast<size_t>(i)]);
    all_monomial = all_monomial && views[static_cast<size_t>(i)].valid;
  }

  GramMatrix gram;
  gram.q = code.q;
  gram.half_exp = 2 * code.n;
  gram.values.resize(total, total);
  parallel_for(total, threads, [&](long long begin, long long end) {
    for (long long r = begin; r < end; ++r)
      for (long long c = 0; c < total; ++c) {
        gram.values(r, c) =
            all_monomial
                ? counted_inner(code.q, views[static_cast<size_t>(r)], views[static_cast<size_t>(c)])
                : inner(*states[static_cast<size_t>(r)], *states[static_cast<size_t>(c)]).value;
      }
  });
  return gram;
}

SplitResult trivial_split(const HybridCode& code, SplitCoordinate coordinate, Engine engine,
                          int threads) {
  HybridCode split = split_by_label_coordinate(code, coordinate);
  VerificationReport report = verify_hybrid(split, 1, engine, threads);
  if (!report.pass) {
    std::string culprit = "split verification failed";
    for (const auto& cert : report.certificates)
      if (cert.status == DetectionStatus::Violation) {
        culprit += " on error " + to_string(cert.error);
        break;
      }
    throw SplitInvalidError(culprit, std::move(split), std::move(report));
  }
  return SplitResult{std::move(split), std::move(report)};
}

} // namespace zqc
