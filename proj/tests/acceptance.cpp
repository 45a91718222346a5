// Acceptance suite: exercises every shipped claim about the code family on
// the full instance set and prints one pass/fail line per criterion.

#include "zqc/verifier.hpp"

#include <chrono>
#include <complex>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <numeric>
#include <random>
#include <thread>
#include <vector>

using namespace zqc;

namespace {

const std::vector<std::pair<int, int>> kInstances = {
    {2, 3}, {2, 5}, {2, 7}, {3, 3}, {3, 5}, {4, 3}, {5, 3}, {6, 3}, {6, 5}};

int worker_threads() {
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

struct Checker {
  std::vector<std::string> problems;
  void expect(bool ok, const std::string& what) {
    if (!ok) problems.push_back(what);
  }
};

struct Harness {
  int failures = 0;

  void criterion(int number, const std::string& title, const std::function<void(Checker&)>& body) {
    const auto start = std::chrono::steady_clock::now();
    Checker checker;
    try {
      body(checker);
    } catch (const std::exception& e) {
      checker.expect(false, std::string("exception: ") + e.what());
    }
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    const bool ok = checker.problems.empty();
    if (!ok) ++failures;
    std::printf("[%s] criterion %2d: %s (%lld ms)\n", ok ? "PASS" : "FAIL", number, title.c_str(),
                static_cast<long long>(ms));
    for (const auto& problem : checker.problems) std::printf("       - %s\n", problem.c_str());
    std::fflush(stdout);
  }
};

std::string instance_name(int q, int n) {
  return "(q=" + std::to_string(q) + ", n=" + std::to_string(n) + ")";
}

const HybridCode& get_code(int q, int n) {
  static std::map<std::pair<int, int>, HybridCode> cache;
  auto it = cache.find({q, n});
  if (it == cache.end()) it = cache.emplace(std::make_pair(q, n), build_hybrid_code(q, n)).first;
  return it->second;
}

const VerificationReport& get_weight1_report(int q, int n) {
  static std::map<std::pair<int, int>, VerificationReport> cache;
  auto it = cache.find({q, n});
  if (it == cache.end())
    it = cache
             .emplace(std::make_pair(q, n),
                      verify_hybrid(get_code(q, n), 1, Engine::Factored, worker_threads()))
             .first;
  return it->second;
}

bool is_pure_x_on_last(const PauliOp& p) {
  const auto sup = p.support();
  return sup.size() == 1 && sup[0] == p.n && p.xvec(p.n - 1) != 0 && p.zvec(p.n - 1) == 0;
}

bool is_x_type_on_last(const PauliOp& p) {
  const auto sup = p.support();
  return sup.size() == 1 && sup[0] == p.n && p.xvec(p.n - 1) != 0;
}

bool same_state(const Ket& u, const Ket& v) {
  if (u.q != v.q || u.n != v.n || u.norm_exp != v.norm_exp) return false;
  for (long long i = 0; i < u.amps.size(); ++i)
    if (u.amps(i) != v.amps(i)) return false;
  return true;
}

Cyclotomic random_element(int q, std::mt19937& rng) {
  std::uniform_int_distribution<int> num(-9, 9), den(1, 9);
  std::vector<Rational> coeffs;
  for (int j = 0; j < q; ++j) coeffs.emplace_back(num(rng), den(rng));
  return Cyclotomic::from_coeffs(q, std::move(coeffs));
}

void criterion_distance(Checker& check) {
  for (auto [q, n] : kInstances) {
    const auto start = std::chrono::steady_clock::now();
    const auto& report = get_weight1_report(q, n);
    const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start)
                        .count();
    check.expect(report.pass, instance_name(q, n) + " weight-1 verification must pass");
    check.expect(report.violations == 0, instance_name(q, n) + " must report zero violations");
    const long long budget_ms = q <= 4 ? 1000 : 300000;
    check.expect(ms <= budget_ms, instance_name(q, n) + " verification exceeded " +
                                      std::to_string(budget_ms) + " ms");
  }
}

void criterion_parameters(Checker& check) {
  for (auto [q, n] : kInstances) {
    const auto& code = get_code(q, n);
    check.expect(code.M == q, instance_name(q, n) + " must have M = q inner codes");
    check.expect(code.K == power_of(q, n - 3), instance_name(q, n) + " must have K = q^(n-3)");
    check.expect(static_cast<long long>(code.inner_codes.size()) == code.M,
                 instance_name(q, n) + " inner code count mismatch");
    for (const auto& basis : code.inner_codes)
      check.expect(static_cast<long long>(basis.size()) == code.K,
                   instance_name(q, n) + " inner code dimension mismatch");
  }
}

void criterion_degeneracy(Checker& check) {
  for (auto [q, n] : kInstances) {
    const auto& report = get_weight1_report(q, n);
    for (const auto& cert : report.certificates) {
      const bool degenerate = cert.status == DetectionStatus::DegenerateDetected;
      if (degenerate)
        check.expect(is_x_type_on_last(cert.error),
                     instance_name(q, n) + " degenerate error not X-type on qudit n: " +
                         to_string(cert.error));
      if (is_pure_x_on_last(cert.error)) {
        check.expect(degenerate, instance_name(q, n) + " pure X on qudit n must be degenerate: " +
                                     to_string(cert.error));
        const int u = cert.error.xvec(n - 1);
        for (int m = 0; m < q && degenerate; ++m)
          check.expect(cert.lambda_table[static_cast<size_t>(m)].equals_scalar(
                           Cyclotomic::root_power(q, -static_cast<long long>(m) * u)),
                       instance_name(q, n) + " lambda mismatch for " + to_string(cert.error) +
                           " at m=" + std::to_string(m));
      }
    }
  }
}

void criterion_union(Checker& check) {
  for (auto [q, n] : kInstances) {
    const auto report = verify_quantum_union(get_code(q, n), 1, Engine::Factored, worker_threads());
    check.expect(!report.pass, instance_name(q, n) + " union check must fail");
    for (const auto& cert : report.certificates) {
      const bool violated = cert.status == DetectionStatus::Violation;
      check.expect(violated == is_pure_x_on_last(cert.error),
                   instance_name(q, n) + " union violation set wrong at " + to_string(cert.error));
    }
  }
}

void criterion_engine_equivalence(Checker& check) {
  // Exhaustive for q <= 3, n <= 5.
  for (auto [q, n] : {std::pair{2, 3}, {2, 5}, {3, 3}, {3, 5}}) {
    const auto& code = get_code(q, n);
    FactorCache cache(q);
    long long mismatches = 0;
    for (const auto& e : enumerate_paulis(q, n, 1))
      for (long long rm = 0; rm < code.M; ++rm)
        for (long long ri = 0; ri < code.K; ++ri)
          for (long long cm = 0; cm < code.M; ++cm)
            for (long long ci = 0; ci < code.K; ++ci) {
              const auto dense = kl_matrix_element(code, e, {rm, ri}, {cm, ci});
              const auto fast = factored_matrix_element(code, e, {rm, ri}, {cm, ci}, cache);
              if (dense != fast || dense.half_exp != fast.half_exp) ++mismatches;
            }
    check.expect(mismatches == 0,
                 instance_name(q, n) + " engines disagree on " + std::to_string(mismatches) +
                     " weight-1 elements");
  }

  // 10,000 random elements for (6,5).
  const auto& code = get_code(6, 5);
  const auto errors = enumerate_paulis(6, 5, 1);
  const int threads = worker_threads();
  const long long samples = 10000;
  std::vector<long long> mismatch_counts(static_cast<size_t>(threads), 0);
  std::vector<std::thread> pool;
  for (int w = 0; w < threads; ++w) {
    pool.emplace_back([&, w] {
      std::mt19937 rng(1000 + w);
      std::uniform_int_distribution<size_t> pick_error(0, errors.size() - 1);
      std::uniform_int_distribution<long long> pick_m(0, code.M - 1), pick_i(0, code.K - 1);
      FactorCache cache(6);
      const long long share = samples / threads + (w < samples % threads ? 1 : 0);
      for (long long s = 0; s < share; ++s) {
        const auto& e = errors[pick_error(rng)];
        const BlockIndex row{pick_m(rng), pick_i(rng)}, col{pick_m(rng), pick_i(rng)};
        const auto dense = kl_matrix_element(code, e, row, col);
        const auto fast = factored_matrix_element(code, e, row, col, cache);
        if (dense != fast || dense.half_exp != fast.half_exp)
          ++mismatch_counts[static_cast<size_t>(w)];
      }
    });
  }
  for (auto& th : pool) th.join();
  const long long total = std::accumulate(mismatch_counts.begin(), mismatch_counts.end(), 0LL);
  check.expect(total == 0,
               "(q=6, n=5) engines disagree on " + std::to_string(total) + " random elements");
}

void criterion_orthonormality(Checker& check) {
  for (auto [q, n] : kInstances) {
    const auto gram = gram_matrix(get_code(q, n), worker_threads());
    check.expect(gram.is_identity(), instance_name(q, n) + " Gram matrix is not the identity");
  }
}

void criterion_distance_sharpness(Checker& check) {
  for (auto [q, n] : {std::pair{2, 3}, {3, 3}}) {
    const auto report = verify_hybrid(get_code(q, n), 2, Engine::Factored, worker_threads());
    check.expect(report.violations >= 1,
                 instance_name(q, n) + " weight-2 sweep found no violation (distance would be > 2)");
    const auto dense = verify_hybrid(get_code(q, n), 2, Engine::Dense, worker_threads());
    check.expect(dense.violations == report.violations,
                 instance_name(q, n) + " engines disagree on weight-2 violation count");
  }
}

void criterion_bound(Checker& check) {
  check.expect(rains_bound(5) == Rational(6), "bound at n=5 must be exactly 6");
  for (int n : {3, 5, 7, 9}) {
    const Rational km(BigInt(1) << (n - 2));
    check.expect(km > rains_bound(n),
                 "K*M = 2^(n-2) must strictly exceed the bound at n=" + std::to_string(n));
  }
}

void criterion_translation(Checker& check) {
  for (auto [q, n] : kInstances) {
    const auto& code = get_code(q, n);
    for (int m = 0; m < q; ++m) {
      const auto tm = translation_operator(q, n, m);
      for (long long i = 0; i < code.K; ++i) {
        const auto moved = apply_pauli(tm, code.codeword(0, i).state);
        if (!same_state(moved, code.codeword(m, i).state)) {
          check.expect(false, instance_name(q, n) + " translation m=" + std::to_string(m) +
                                  " misses basis state " + std::to_string(i));
          break;
        }
      }
    }
  }
}

void criterion_split(Checker& check) {
  for (auto [q, n] : {std::pair{2, 5}, {3, 5}}) {
    const auto& code = get_code(q, n);
    const auto result = trivial_split(code, SplitCoordinate{'b', 1}, Engine::Factored, worker_threads());
    check.expect(result.code.K == code.K / q, instance_name(q, n) + " split must divide K by q");
    check.expect(result.code.M == code.M * q, instance_name(q, n) + " split must multiply M by q");
    check.expect(result.report.pass, instance_name(q, n) + " split verification must pass");
  }
}

void criterion_cyclotomic(Checker& check) {
  std::mt19937 rng(42);
  for (int q = 2; q <= 12; ++q) {
    Cyclotomic sum = Cyclotomic::zero(q);
    for (int j = 0; j < q; ++j) sum += Cyclotomic::root_power(q, j);
    check.expect(sum.is_zero(), "root sum must vanish at q=" + std::to_string(q));

    for (int trial = 0; trial < 20; ++trial) {
      const auto a = random_element(q, rng), b = random_element(q, rng), c = random_element(q, rng);
      check.expect(((a + b) + c - (a + (b + c))).is_zero(), "associativity of + failed");
      check.expect(((a * b) * c - (a * (b * c))).is_zero(), "associativity of * failed");
      check.expect((a * b - b * a).is_zero(), "commutativity failed");
      check.expect((a * (b + c) - (a * b + a * c)).is_zero(), "distributivity failed");
      check.expect(conj(a * b) == conj(a) * conj(b), "conjugation homomorphism failed");
      check.expect(conj(conj(a)) == a, "conjugation involution failed");
    }
    for (int trial = 0; trial < 100; ++trial) {
      auto x = random_element(q, rng);
      if (trial % 3 == 0) x = x - x.times_root_power(q, q);
      check.expect(x.is_zero() == (std::abs(x.to_complex()) < 1e-9),
                   "exact zero test disagrees with the numeric oracle at q=" + std::to_string(q));
    }
  }
  for (int q = 1; q <= 30; ++q) {
    int totient = 0;
    for (int k = 1; k <= q; ++k)
      if (std::gcd(k, q) == 1) ++totient;
    check.expect(cyclotomic_polynomial(q).size() == static_cast<size_t>(totient) + 1,
                 "cyclotomic degree mismatch at q=" + std::to_string(q));
  }
}

} // namespace

int main() {
  Harness harness;
  harness.criterion(1, "weight-1 distance certification on all instances", criterion_distance);
  harness.criterion(2, "parameter counts match [[n, n-3:1, 2]]", criterion_parameters);
  harness.criterion(3, "degeneracy table: X on the last qudit, lambda = w^(-mu)",
                    criterion_degeneracy);
  harness.criterion(4, "quantum-union check fails exactly on X errors on the last qudit",
                    criterion_union);
  harness.criterion(5, "dense and factored engines agree exactly", criterion_engine_equivalence);
  harness.criterion(6, "Gram matrix of every instance is the identity", criterion_orthonormality);
  harness.criterion(7, "weight-2 sweep refutes distance > 2 on length-3 instances",
                    criterion_distance_sharpness);
  harness.criterion(8, "K*M strictly exceeds the odd-length distance-2 binary bound",
                    criterion_bound);
  harness.criterion(9, "translation operators map the seed basis onto every inner code",
                    criterion_translation);
  harness.criterion(10, "verified splits of (2,5) and (3,5) pass at weight 1", criterion_split);
  harness.criterion(11, "cyclotomic arithmetic property suite for q <= 12", criterion_cyclotomic);

  if (harness.failures == 0) {
    std::printf("acceptance: all criteria passed\n");
  } else {
    std::printf("acceptance: %d criteria FAILED\n", harness.failures);
  }
  return harness.failures;
}
