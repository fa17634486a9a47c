#ifndef RFC_ERRORS_HPP
#define RFC_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace rfc {

// Evaluation point left the unit hypercube.
struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

// Invalid construction parameters or operation arguments.
struct ArgumentError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Requested work exceeds a hard oracle-scale limit (grid too large, etc.).
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Function has no variance to analyze.
struct DegenerateFunctionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Weight-function gradient requested on a cell boundary with exponent < 1.
struct SingularityError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A targeted term cannot be calibrated (zero variance).
struct CalibrationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Malformed or invalid spec document; message carries the field path.
struct SpecParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace rfc

#endif
