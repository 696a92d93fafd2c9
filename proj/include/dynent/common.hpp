#pragma once

#include <complex>
#include <cstdio>
#include <stdexcept>
#include <string>

namespace dynent {

using cdouble = std::complex<double>;

// Bad inputs: precondition or invariant violated before any heavy work starts.
struct validation_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Requested computation exceeds a configured resource budget.
struct budget_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Internal numerical consistency failure (probability leak, PD loss, ...).
struct numerical_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Fixed 12-significant-digit formatting; output files must be byte-stable
// across reruns of the same configuration.
inline std::string fmt12(double x) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", x);
    return buf;
}

}  // namespace dynent
