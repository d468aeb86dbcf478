#pragma once

#include <stdexcept>
#include <string>

namespace gapbrack {

/// Bad input data: out-of-range ids, violated preconditions, malformed files.
class validation_error : public std::runtime_error {
public:
    explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical failure inside the eigensolver or a downstream consistency check.
class solver_error : public std::runtime_error {
public:
    explicit solver_error(const std::string& what) : std::runtime_error(what) {}
};

} // namespace gapbrack
