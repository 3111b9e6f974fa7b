#ifndef SHEN_ELLIPTIC_ERRORS_HPP
#define SHEN_ELLIPTIC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace shen_elliptic {

// Invalid argument or parameter outside the supported domain.
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& what) : std::domain_error(what) {}
};

// Invariants with discriminant g2^3 - 27 g3^2 <= 0: the period lattice
// collapses and no real-root evaluation path exists.
class degenerate_lattice_error : public domain_error {
public:
    explicit degenerate_lattice_error(const std::string& what) : domain_error(what) {}
};

// Evaluation requested too close to a pole of the target function.
class pole_error : public std::runtime_error {
public:
    explicit pole_error(const std::string& what) : std::runtime_error(what) {}
};

// An iteration or series exhausted its budget before reaching tolerance.
class nonconvergence_error : public std::runtime_error {
public:
    explicit nonconvergence_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace shen_elliptic

#endif
