#pragma once

#include <stdexcept>
#include <string>

namespace tcm {

// Error taxonomy shared across the library. Everything derives from
// tcm::Error so callers can catch the whole family at the CLI boundary.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct DomainError : Error {
    explicit DomainError(const std::string& what) : Error(what) {}
};

// vieta_ratio: (x^2 + y^2) not divisible by z, i.e. input off-equation.
struct NotDivisible : Error {
    explicit NotDivisible(const std::string& what) : Error(what) {}
};

// Point fails psi(p) = c.
struct NotOnSurface : Error {
    explicit NotOnSurface(const std::string& what) : Error(what) {}
};

struct InvalidDeterminant : Error {
    explicit InvalidDeterminant(const std::string& what) : Error(what) {}
};

struct NotHyperbolic : Error {
    explicit NotHyperbolic(const std::string& what) : Error(what) {}
};

struct CapExceeded : Error {
    explicit CapExceeded(const std::string& what) : Error(what) {}
};

struct InsufficientDigits : Error {
    explicit InsufficientDigits(const std::string& what) : Error(what) {}
};

struct DepthExceeded : Error {
    explicit DepthExceeded(const std::string& what) : Error(what) {}
};

struct NotNeighbors : Error {
    explicit NotNeighbors(const std::string& what) : Error(what) {}
};

struct IoError : Error {
    explicit IoError(const std::string& what) : Error(what) {}
};

struct ParseError : Error {
    explicit ParseError(const std::string& what) : Error(what) {}
};

// Fixed-width arithmetic left its representable range.
struct OverflowError : Error {
    explicit OverflowError(const std::string& what) : Error(what) {}
};

} // namespace tcm
