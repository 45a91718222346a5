#include "zqc/code_family.hpp"

#include <stdexcept>

namespace zqc {

namespace {

void check_code_shape(int q, int n) {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("n must be odd and at least 3");
}

int normalize(int v, int q) { return ((v % q) + q) % q; }

} // namespace

const Codeword& HybridCode::codeword(long long message, long long index) const {
  if (message < 0 || message >= M) throw std::out_of_range("message index out of range");
  const auto& basis = inner_codes[static_cast<size_t>(message)];
  if (index < 0 || index >= static_cast<long long>(basis.size()))
    throw std::out_of_range("codeword index out of range");
  return basis[static_cast<size_t>(index)];
}

Ket build_pair_state(int q, int a, int b) {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  Ket s{q, 2, 2, CycVector(static_cast<long long>(q) * q)};
  for (int c1 = 0; c1 < q; ++c1)
    for (int c2 = 0; c2 < q; ++c2)
      s.amps(static_cast<long long>(c1) * q + c2) =
          Cyclotomic::root_power(q, static_cast<long long>(c1 - a) * (c2 - b));
  return s;
}

Ket build_phi(int q, const Eigen::VectorXi& a, const Eigen::VectorXi& b) {
  if (a.size() != b.size() || a.size() < 1)
    throw std::invalid_argument("build_phi: label vectors must have equal positive length");
  Ket s = build_pair_state(q, a(0), b(0));
  for (int i = 1; i < a.size(); ++i) s = tensor(s, build_pair_state(q, a(i), b(i)));
  return s;
}

Ket build_psi(int q, int m) {
  if (q < 2) throw std::invalid_argument("q must be at least 2");
  Ket s{q, 1, 1, CycVector(q)};
  for (int c = 0; c < q; ++c)
    s.amps(c) = Cyclotomic::root_power(q, static_cast<long long>(m) * c);
  return s;
}

std::vector<CodewordLabel> enumerate_labels(int q, int n, int m) {
  check_code_shape(q, n);
  const int t = (n - 1) / 2;
  m = normalize(m, q);
  const int free_count = 2 * (t - 1);
  std::vector<CodewordLabel> labels;
  labels.reserve(static_cast<size_t>(power_of(q, free_count)));
  std::vector<int> digits(static_cast<size_t>(free_count), 0);
  while (true) {
    CodewordLabel label{Eigen::VectorXi::Zero(t), Eigen::VectorXi::Zero(t), m};
    int asum = 0, bsum = 0;
    for (int i = 0; i + 1 < t; ++i) {
      label.a(i) = digits[static_cast<size_t>(i)];
      label.b(i) = digits[static_cast<size_t>(t - 1 + i)];
      asum += label.a(i);
      bsum += label.b(i);
    }
    label.a(t - 1) = normalize(-asum, q);
    label.b(t - 1) = normalize(m - bsum, q);
    labels.push_back(std::move(label));
    int i = free_count - 1;
    while (i >= 0 && digits[static_cast<size_t>(i)] == q - 1) digits[static_cast<size_t>(i--)] = 0;
    if (i < 0) break;
    ++digits[static_cast<size_t>(i)];
  }
  return labels;
}

HybridCode build_hybrid_code(int q, int n) {
  check_code_shape(q, n);
  HybridCode code;
  code.q = q;
  code.n = n;
  code.t = (n - 1) / 2;
  code.K = power_of(q, n - 3);
  code.M = q;
  code.inner_codes.resize(static_cast<size_t>(q));
  for (int m = 0; m < q; ++m) {
    const Ket psi = build_psi(q, m);
    auto& basis = code.inner_codes[static_cast<size_t>(m)];
    for (auto& label : enumerate_labels(q, n, m)) {
      Ket state = tensor(build_phi(q, label.a, label.b), psi);
      basis.push_back(Codeword{std::move(label), std::move(state)});
    }
  }
  return code;
}

PauliOp translation_operator(int q, int n, int m) {
  check_code_shape(q, n);
  PauliOp p = identity_pauli(q, n);
  p.xvec(n - 2) = normalize(m, q);
  p.zvec(n - 1) = normalize(m, q);
  return p;
}

Rational rains_bound(int n) {
  if (n < 3 || n % 2 == 0) throw std::invalid_argument("n must be odd and at least 3");
  return Rational(BigInt(1) << (n - 2)) * Rational(n - 2, n - 1);
}

HybridCode split_by_label_coordinate(const HybridCode& code, SplitCoordinate coordinate) {
  if (code.K <= 1) throw std::invalid_argument("cannot split: inner dimension is already 1");
  if (coordinate.axis != 'a' && coordinate.axis != 'b')
    throw std::invalid_argument("split coordinate axis must be 'a' or 'b'");
  if (coordinate.index < 1 || coordinate.index > code.t - 1)
    throw std::invalid_argument("split coordinate index must name a free coordinate");
  if (code.K % code.q != 0)
    throw std::invalid_argument("inner dimension is not divisible by q");

  HybridCode split;
  split.q = code.q;
  split.n = code.n;
  split.t = code.t;
  split.K = code.K / code.q;
  split.M = code.M * code.q;
  split.inner_codes.reserve(static_cast<size_t>(split.M));
  for (const auto& basis : code.inner_codes) {
    for (int v = 0; v < code.q; ++v) {
      std::vector<Codeword> group;
      for (const auto& cw : basis) {
        const int value =
            coordinate.axis == 'a' ? cw.label.a(coordinate.index - 1) : cw.label.b(coordinate.index - 1);
        if (value == v) group.push_back(cw);
      }
      if (static_cast<long long>(group.size()) != split.K)
        throw std::invalid_argument("split coordinate is not free in this code");
      split.inner_codes.push_back(std::move(group));
    }
  }
  return split;
}

} // namespace zqc
