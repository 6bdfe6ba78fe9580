#pragma once

#include <stdexcept>
#include <string>

namespace genergy {

// Invalid parameter for a family/operation; message names the violated bound.
struct ParameterError : std::invalid_argument {
    explicit ParameterError(const std::string& msg) : std::invalid_argument(msg) {}
};

// Request exceeds a configured size cap.
struct CapacityError : std::runtime_error {
    explicit CapacityError(const std::string& msg) : std::runtime_error(msg) {}
};

// API misuse (e.g. context built without the data an operation needs).
struct UsageError : std::logic_error {
    explicit UsageError(const std::string& msg) : std::logic_error(msg) {}
};

// Quadrature failed to reach the requested tolerance; carries what it achieved.
struct ConvergenceError : std::runtime_error {
    double achieved_bound;
    ConvergenceError(const std::string& msg, double achieved)
        : std::runtime_error(msg), achieved_bound(achieved) {}
};

// Input file / text parse failure; message carries the line number.
struct ParseError : std::runtime_error {
    int line;
    ParseError(const std::string& msg, int line_no)
        : std::runtime_error(msg + " (line " + std::to_string(line_no) + ")"), line(line_no) {}
};

}  // namespace genergy
