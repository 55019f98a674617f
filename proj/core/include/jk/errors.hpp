#pragma once

#include <stdexcept>
#include <string>

namespace jk {

// Base class for everything this library throws on purpose.
struct Error : std::runtime_error {
    explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

// Bad parameters, dimension mismatches, rejected input files.
struct InvalidArgument : Error {
    explicit InvalidArgument(const std::string& msg) : Error(msg) {}
};

// Arithmetic that has no answer: inversion of 0, division by a
// non-invertible jet.
struct MathDomainError : Error {
    explicit MathDomainError(const std::string& msg) : Error(msg) {}
};

// A randomized computation landed on a degenerate sample. Retrying with a
// fresh seed is the expected response.
struct NonGenericSample : Error {
    explicit NonGenericSample(const std::string& msg) : Error(msg) {}
};

// States that cannot occur for valid inputs. Not meant to be caught.
struct InternalError : Error {
    explicit InternalError(const std::string& msg) : Error(msg) {}
};

} // namespace jk
