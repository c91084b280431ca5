#pragma once

#include <stdexcept>
#include <string>

namespace bers {

// Every failure mode gets its own type so callers can react precisely and
// tests can assert on the exact condition.

struct ZeroDivisor : std::runtime_error {
    explicit ZeroDivisor(const std::string& what) : std::runtime_error(what) {}
};

struct DegeneratePair : std::runtime_error {
    explicit DegeneratePair(const std::string& what) : std::runtime_error(what) {}
};

struct GridTooSmall : std::runtime_error {
    explicit GridTooSmall(const std::string& what) : std::runtime_error(what) {}
};

struct GridMismatch : std::runtime_error {
    explicit GridMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct NonPositivePermittivity : std::runtime_error {
    explicit NonPositivePermittivity(const std::string& what) : std::runtime_error(what) {}
};

struct NonMonotone : std::runtime_error {
    explicit NonMonotone(const std::string& what) : std::runtime_error(what) {}
};

struct NonPositiveF : std::runtime_error {
    explicit NonPositiveF(const std::string& what) : std::runtime_error(what) {}
};

struct DegreeOutOfRange : std::runtime_error {
    explicit DegreeOutOfRange(const std::string& what) : std::runtime_error(what) {}
};

struct OutOfDomain : std::runtime_error {
    explicit OutOfDomain(const std::string& what) : std::runtime_error(what) {}
};

struct NotInvertible : std::runtime_error {
    explicit NotInvertible(const std::string& what) : std::runtime_error(what) {}
};

struct DependentSet : std::runtime_error {
    explicit DependentSet(const std::string& what) : std::runtime_error(what) {}
};

struct StepTooLarge : std::runtime_error {
    explicit StepTooLarge(const std::string& what) : std::runtime_error(what) {}
};

struct ConfigError : std::runtime_error {
    explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace bers
