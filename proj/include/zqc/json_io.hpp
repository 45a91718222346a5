#pragma once

#include "zqc/verifier.hpp"

#include <json.hpp>

namespace zqc {

using Json = nlohmann::ordered_json;

/// Exact scalar as {"coeffs": [[num, den], ...], "q": modulus, "approx":
/// "re+imi"}. Coefficients are JSON integers, or decimal strings outside the
/// 64-bit range; the approx field is for human reading only.
Json scalar_json(const Cyclotomic& x);

/// {"value": scalar, "half_exp": h} — the represented number is
/// value * q^{-half_exp/2}.
Json inner_product_json(const InnerProduct& v);

Json label_json(const CodewordLabel& label);
Json pauli_json(const PauliOp& p);

/// Code artifact: parameters plus every inner code's labels and exact
/// amplitudes.
Json code_json(const HybridCode& code);

/// Report artifact: {"params", "weight", "engine", "verdict", "counts",
/// "certificates", "wall_time_ms"}. Certificates appear in enumeration
/// order. wall_time_ms serializes as null unless include_timing is set, so
/// identical configurations produce byte-identical artifacts.
Json report_json(const VerificationReport& report, bool include_timing = false);

/// {"q", "n", "bound": {"num", "den"}, "KM", "exceeds"} — the distance-2
/// odd-length binary bound against this instance's K*M = q^{n-2}.
Json bound_json(int q, int n);

Json split_json(const HybridCode& code, const VerificationReport& report,
                bool include_timing = false);

} // namespace zqc
