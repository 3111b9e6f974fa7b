#ifndef SHEN_ELLIPTIC_VERIFY_HPP
#define SHEN_ELLIPTIC_VERIFY_HPP

#include <string>
#include <vector>

namespace shen_elliptic {
namespace verify {

struct CheckRecord {
    std::string name;
    double kappa2;   // 0 when the check is not tied to one modulus
    double residual; // worst observed value
    double threshold;
    bool pass;
};

enum class Suite { All, Hypergeometric, Weierstrass, Modular, Shen };

Suite suite_from_name(const std::string& name);

// The standard modulus sweep kappa^2 in {0.1, 0.25, 0.5, 0.75, 0.9}.
const std::vector<double>& standard_sweep();

// Run every check of the suite. base_tol replaces the default 1e-8 threshold;
// checks whose contract pins a different tolerance keep their own. Records
// come back in deterministic order.
std::vector<CheckRecord> run_suite(Suite suite, double base_tol = 1e-8);

} // namespace verify
} // namespace shen_elliptic

#endif
