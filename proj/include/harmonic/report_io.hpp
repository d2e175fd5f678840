#pragma once

#include <string>
#include <vector>

#include "harmonic/verify.hpp"

namespace harmonic::report_io {

/// JSON array of report objects, keys {identity, params, lhs_re, lhs_im,
/// rhs_re, rhs_im, abs_err, rel_err, quad_error, tolerance, status}.
std::string to_json(const std::vector<verify::IdentityReport>& reports);

/// CSV with the same column names; params flattened as param.<name> columns
/// (union over all reports, sorted). LF line endings.
std::string to_csv(const std::vector<verify::IdentityReport>& reports);

/// Suite config: {"checks": [{"identity": ..., "tol": ..., "params": {...}}]}.
verify::SuiteConfig config_from_json(const std::string& json_text);

std::string config_to_json(const verify::SuiteConfig& config);

}  // namespace harmonic::report_io
