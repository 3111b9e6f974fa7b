#include "shen_elliptic/csv.hpp"

#include <cctype>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <string>

#include "shen_elliptic/errors.hpp"

namespace shen_elliptic {
namespace csv {

std::string format_real(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

std::string format_complex_pair(const std::complex<double>& z) {
    return format_real(z.real()) + "," + format_real(z.imag());
}

namespace {

std::string strip_whitespace(std::string_view text) {
    std::string out;
    out.reserve(text.size());
    for (char ch : text)
        if (!std::isspace(static_cast<unsigned char>(ch))) out.push_back(ch);
    return out;
}

// Consume a leading floating-point literal; returns chars consumed (0 on fail).
std::size_t parse_double_prefix(const std::string& s, std::size_t pos, double& out) {
    const char* begin = s.c_str() + pos;
    char* end = nullptr;
    out = std::strtod(begin, &end);
    return static_cast<std::size_t>(end - begin);
}

} // namespace

std::complex<double> parse_complex(std::string_view text) {
    const std::string s = strip_whitespace(text);
    if (s.empty()) throw domain_error("parse_complex: empty literal");

    double re = 0.0;
    std::size_t used = parse_double_prefix(s, 0, re);
    if (used == 0) throw domain_error("parse_complex: malformed literal '" + s + "'");
    if (!std::isfinite(re))
        throw domain_error("parse_complex: non-finite component in '" + s + "'");
    if (used == s.size()) return {re, 0.0}; // plain real
    if (used + 1 == s.size() && s[used] == 'i') return {0.0, re}; // pure imaginary

    std::size_t pos = used;
    const char sign = s[pos];
    if (sign != '+' && sign != '-')
        throw domain_error("parse_complex: expected '+' or '-' in '" + s + "'");

    double im_mag = 0.0;
    std::size_t used_im = parse_double_prefix(s, pos + 1, im_mag);
    std::size_t ipos = pos + 1 + used_im;
    if (used_im == 0) {
        // Allow the bare-unit forms "a+i" / "a-i".
        im_mag = 1.0;
        ipos = pos + 1;
    }
    if (ipos + 1 != s.size() || s[ipos] != 'i')
        throw domain_error("parse_complex: expected trailing 'i' in '" + s + "'");
    if (!std::isfinite(im_mag))
        throw domain_error("parse_complex: non-finite component in '" + s + "'");
    const double im = sign == '-' ? -im_mag : im_mag;
    return {re, im};
}

} // namespace csv
} // namespace shen_elliptic
