#include "zqc/json_io.hpp"

#include <cstdio>
#include <limits>

namespace zqc {

namespace {

Json int_json(const BigInt& v) {
  if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
    return Json(v.convert_to<long long>());
  return Json(v.str());
}

std::string approx_string(std::complex<double> z) {
  // Display only; tiny evaluation dust is snapped to zero for readability.
  const double re = std::abs(z.real()) < 1e-12 ? 0.0 : z.real();
  const double im = std::abs(z.imag()) < 1e-12 ? 0.0 : z.imag();
  char buf[80];
  std::snprintf(buf, sizeof buf, "%.12g%+.12gi", re, im);
  return buf;
}

const char* status_string(DetectionStatus status) {
  switch (status) {
  case DetectionStatus::ZeroDetected: return "zero-detected";
  case DetectionStatus::DegenerateDetected: return "degenerate-detected";
  case DetectionStatus::Violation: return "violation";
  }
  return "unknown";
}

Json block_index_json(const BlockIndex& idx) {
  return Json{{"message", idx.message}, {"index", idx.index}};
}

} // namespace

Json scalar_json(const Cyclotomic& x) {
  Json coeffs = Json::array();
  for (const auto& c : x.coeffs())
    coeffs.push_back(Json::array({int_json(numerator(c)), int_json(denominator(c))}));
  return Json{{"coeffs", std::move(coeffs)}, {"q", x.modulus()}, {"approx", approx_string(x.to_complex())}};
}

Json inner_product_json(const InnerProduct& v) {
  return Json{{"value", scalar_json(v.value)}, {"half_exp", v.half_exp}};
}

Json label_json(const CodewordLabel& label) {
  Json a = Json::array(), b = Json::array();
  for (int i = 0; i < label.a.size(); ++i) a.push_back(label.a(i));
  for (int i = 0; i < label.b.size(); ++i) b.push_back(label.b(i));
  return Json{{"a", std::move(a)}, {"b", std::move(b)}, {"m", label.m}};
}

Json pauli_json(const PauliOp& p) {
  Json x = Json::array(), z = Json::array(), support = Json::array();
  for (int i = 0; i < p.n; ++i) {
    x.push_back(p.xvec(i));
    z.push_back(p.zvec(i));
  }
  for (int pos : p.support()) support.push_back(pos);
  return Json{{"xvec", std::move(x)},
              {"zvec", std::move(z)},
              {"phase_exp", p.phase_exp},
              {"weight", p.weight()},
              {"support", std::move(support)}};
}

Json code_json(const HybridCode& code) {
  Json inner = Json::array();
  for (long long m = 0; m < code.M; ++m) {
    Json codewords = Json::array();
    for (const auto& cw : code.inner_codes[static_cast<size_t>(m)]) {
      Json amps = Json::array();
      for (long long i = 0; i < cw.state.amps.size(); ++i)
        amps.push_back(scalar_json(cw.state.amps(i)));
      codewords.push_back(Json{{"label", label_json(cw.label)},
                               {"norm_exp", cw.state.norm_exp},
                               {"amplitudes", std::move(amps)}});
    }
    inner.push_back(Json{{"message", m}, {"codewords", std::move(codewords)}});
  }
  return Json{{"q", code.q},
              {"n", code.n},
              {"t", code.t},
              {"K", code.K},
              {"M", code.M},
              {"claimed_distance", code.claimed_distance},
              {"inner_codes", std::move(inner)}};
}

Json report_json(const VerificationReport& report, bool include_timing) {
  Json certificates = Json::array();
  for (const auto& cert : report.certificates) {
    Json entry{{"error", pauli_json(cert.error)}, {"status", status_string(cert.status)}};
    if (cert.status != DetectionStatus::Violation) {
      Json table = Json::array();
      for (size_t m = 0; m < cert.lambda_table.size(); ++m) {
        Json lambda = Json::object();
        if (!report.union_check) lambda["m"] = static_cast<long long>(m);
        lambda["value"] = scalar_json(cert.lambda_table[m].value);
        lambda["half_exp"] = cert.lambda_table[m].half_exp;
        table.push_back(std::move(lambda));
      }
      entry["lambda_table"] = std::move(table);
    }
    if (cert.witness) {
      entry["witness"] = Json{{"row", block_index_json(cert.witness->row)},
                              {"col", block_index_json(cert.witness->col)},
                              {"value", inner_product_json(cert.witness->value)}};
    }
    certificates.push_back(std::move(entry));
  }
  return Json{{"params",
               Json{{"q", report.q},
                    {"n", report.n},
                    {"t", report.t},
                    {"K", report.K},
                    {"M", report.M},
                    {"claimed_distance", report.claimed_distance}}},
              {"weight", report.weight},
              {"engine", report.engine == Engine::Dense ? "dense" : "factored"},
              {"check", report.union_check ? "quantum-union" : "hybrid"},
              {"verdict", report.pass ? "pass" : "violation"},
              {"counts",
               Json{{"zero_detected", report.zero_detected},
                    {"degenerate_detected", report.degenerate_detected},
                    {"violations", report.violations}}},
              {"certificates", std::move(certificates)},
              {"wall_time_ms", include_timing ? Json(report.wall_time_ms) : Json(nullptr)}};
}

Json bound_json(int q, int n) {
  const Rational bound = rains_bound(n);
  BigInt km(1);
  for (int i = 0; i < n - 2; ++i) km *= q;
  return Json{{"q", q},
              {"n", n},
              {"bound", Json{{"num", int_json(numerator(bound))}, {"den", int_json(denominator(bound))}}},
              {"KM", int_json(km)},
              {"exceeds", Rational(km) > bound}};
}

Json split_json(const HybridCode& code, const VerificationReport& report, bool include_timing) {
  return Json{{"code", code_json(code)}, {"report", report_json(report, include_timing)}};
}

} // namespace zqc
