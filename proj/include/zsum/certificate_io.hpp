#pragma once

#include "zsum/counterexample.hpp"
#include "zsum/cover.hpp"

#include <nlohmann/json.hpp>

namespace zsum {

/// {group, prime, zeta, sequence, mode: "cover", assignments, verified}
nlohmann::json cover_certificate_json(const CoverCertificate& cert, bool verified);

/// {group, sequence, mode: "uncoverable", distributions_checked, verified}
nlohmann::json uncoverable_certificate_json(const CounterexampleSpec& spec, const UncoverableReport& report,
                                            bool verified);

/// Inverse of cover_certificate_json; the target is all of G^ unless listed.
CoverCertificate cover_certificate_from_json(const nlohmann::json& doc);

/// Rebuilds the certificate from its fields and re-runs the matching check
/// (coset enumeration for "cover", the split search for "uncoverable").
bool recheck_certificate(const nlohmann::json& doc);

} // namespace zsum
