#ifndef SHEN_ELLIPTIC_CSV_HPP
#define SHEN_ELLIPTIC_CSV_HPP

#include <complex>
#include <string>
#include <string_view>

namespace shen_elliptic {
namespace csv {

// Fixed 17-significant-digit decimal formatting ("%.17g"): enough digits to
// round-trip an IEEE double, deterministic across runs.
std::string format_real(double x);

std::string format_complex_pair(const std::complex<double>& z); // "re,im"

// Parse a complex literal of the form "a", "a+bi" or "a-bi", optional
// whitespace allowed around the tokens. Exponent forms like 1e-3+2.5i work.
std::complex<double> parse_complex(std::string_view text);

} // namespace csv
} // namespace shen_elliptic

#endif
