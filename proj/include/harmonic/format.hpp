#pragma once

#include <complex>
#include <string>

#include "harmonic/errors.hpp"

namespace harmonic::fmt {

/// 17-significant-digit decimal form that round-trips the double exactly.
std::string format_double(double v);

/// "re+imi" / "re-imi" with 17 significant digits per component.
std::string format_complex(std::complex<double> v);

/// Accepts "a+bi", "a-bi", "a", "bi", "i", "-i" (decimal exponents allowed).
/// Throws UsageError on anything else.
std::complex<double> parse_complex(const std::string& text);

/// Full-consumption double parse; throws UsageError.
double parse_double(const std::string& text);

/// Full-consumption integer parse; throws UsageError.
int parse_int(const std::string& text);

}  // namespace harmonic::fmt
