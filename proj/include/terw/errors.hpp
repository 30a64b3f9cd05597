#ifndef TERW_ERRORS_HPP
#define TERW_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace terw {

/// Operand dimensions do not match the operation's requirements.
class ShapeError : public std::invalid_argument {
public:
    explicit ShapeError(const std::string& msg) : std::invalid_argument(msg) {}
};

/// Argument outside the mathematical domain of the operation.
class DomainError : public std::domain_error {
public:
    explicit DomainError(const std::string& msg) : std::domain_error(msg) {}
};

/// Division by a structurally vanishing quantity (e.g. 1 - omega^2 = 0).
class SingularityError : public std::domain_error {
public:
    explicit SingularityError(const std::string& msg) : std::domain_error(msg) {}
};

/// A computation would materialize more data than the configured cap allows.
class ResourceError : public std::runtime_error {
public:
    explicit ResourceError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Two independent construction routes disagreed, or a verified
/// post-condition failed; indicates a bug, never user error.
class ConsistencyError : public std::logic_error {
public:
    explicit ConsistencyError(const std::string& msg) : std::logic_error(msg) {}
};

}  // namespace terw

#endif
