#pragma once

#include <stdexcept>
#include <string>

namespace slb {

/// Bad input: malformed files, out-of-range vertices, violated preconditions.
/// The CLI maps this to exit code 2.
class InputError : public std::invalid_argument {
public:
    explicit InputError(const std::string& what) : std::invalid_argument(what) {}
};

/// A computed object failed an internal consistency check (certificate that
/// does not re-validate, identity that does not hold). CLI exit code 1.
class CheckFailure : public std::runtime_error {
public:
    explicit CheckFailure(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace slb
