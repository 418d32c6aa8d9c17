// errors.hpp
// Error taxonomy for the toolkit. Input problems (bad files, invalid
// configuration) and numerical failures map to different CLI exit codes.

#pragma once

#include <stdexcept>
#include <string>

namespace plunge {

// Unreadable or malformed inputs, invalid option values. CLI exit code 2.
class InputError : public std::runtime_error {
public:
    explicit InputError(const std::string& msg) : std::runtime_error(msg) {}
};

// Solver non-convergence, correlation overshoot and similar breakdowns.
// CLI exit code 3.
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace plunge
