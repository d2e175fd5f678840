#include "harmonic/format.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace harmonic::fmt {

std::string format_double(double v) {
    char buf[48];
    std::snprintf(buf, sizeof(buf), "%#.17g", v);
    return buf;
}

std::string format_complex(std::complex<double> v) {
    double im = v.imag();
    std::string out = format_double(v.real());
    out += std::signbit(im) ? '-' : '+';
    out += format_double(std::abs(im));
    out += 'i';
    return out;
}

double parse_double(const std::string& text) {
    if (text.empty()) throw UsageError("empty number");
    char* end = nullptr;
    double v = std::strtod(text.c_str(), &end);
    if (end != text.c_str() + text.size())
        throw UsageError("malformed number: '" + text + "'");
    return v;
}

int parse_int(const std::string& text) {
    if (text.empty()) throw UsageError("empty integer");
    char* end = nullptr;
    long v = std::strtol(text.c_str(), &end, 10);
    if (end != text.c_str() + text.size())
        throw UsageError("malformed integer: '" + text + "'");
    return static_cast<int>(v);
}

std::complex<double> parse_complex(const std::string& raw) {
    std::string s;
    for (char ch : raw)
        if (!std::isspace(static_cast<unsigned char>(ch))) s += ch;
    if (s.empty()) throw UsageError("empty complex number");

    if (s.back() != 'i' && s.back() != 'I') return {parse_double(s), 0.0};

    s.pop_back();
    // split at the last +/- that is not an exponent sign and not leading
    size_t split = std::string::npos;
    for (size_t i = s.size(); i-- > 1;) {
        if ((s[i] == '+' || s[i] == '-') && s[i - 1] != 'e' && s[i - 1] != 'E') {
            split = i;
            break;
        }
    }
    auto imag_of = [](const std::string& part) -> double {
        if (part.empty() || part == "+") return 1.0;
        if (part == "-") return -1.0;
        return parse_double(part);
    };
    if (split == std::string::npos) return {0.0, imag_of(s)};
    return {parse_double(s.substr(0, split)), imag_of(s.substr(split))};
}

}  // namespace harmonic::fmt
