#pragma once

#include <stdexcept>
#include <string>

namespace heckesym {

/// Malformed textual input (permutation strings, subsets, files).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// An argument violates an operation's precondition.
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Operands live in different symmetric groups / ambient spaces.
class SizeMismatch : public DomainError {
public:
    using DomainError::DomainError;
};

/// A computation contradicted an identity that must hold; indicates a bug.
class InternalError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/// Exact polynomial division left a nonzero remainder.
class NotDivisible : public DomainError {
public:
    NotDivisible(const std::string& what, std::string remainder)
        : DomainError(what + " (remainder " + remainder + ")"),
          remainder_(std::move(remainder)) {}

    const std::string& remainder() const noexcept { return remainder_; }

private:
    std::string remainder_;
};

namespace detail {

inline void require(bool cond, const char* msg) {
    if (!cond) throw DomainError(msg);
}

inline void ensure(bool cond, const std::string& msg) {
    if (!cond) throw InternalError(msg);
}

}  // namespace detail

}  // namespace heckesym
