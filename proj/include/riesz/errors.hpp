#pragma once

#include <stdexcept>
#include <string>

namespace riesz {

/// Invalid argument outside a function's mathematical domain.
class domain_error : public std::domain_error {
public:
    explicit domain_error(const std::string& msg) : std::domain_error(msg) {}
};

/// Evaluation requested exactly at a non-removable singularity
/// (e.g. a singular kernel on the diagonal).
class singularity_error : public domain_error {
public:
    explicit singularity_error(const std::string& msg) : domain_error(msg) {}
};

/// Parameter combination the implementation deliberately does not support
/// (e.g. degenerate hypergeometric connection formula).
class unsupported_parameter_error : public domain_error {
public:
    explicit unsupported_parameter_error(const std::string& msg) : domain_error(msg) {}
};

/// An iteration or series failed to reach the requested tolerance.
class nonconvergence_error : public std::runtime_error {
public:
    explicit nonconvergence_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// The optimizer could not make any progress from any starting point.
class no_progress_error : public std::runtime_error {
public:
    explicit no_progress_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace riesz
