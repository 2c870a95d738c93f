#pragma once

#include <stdexcept>
#include <string>

namespace ecid {

/// Base for every error raised by the toolkit.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Violated precondition on an argument (non-prime p, ragged matrix, p | |G| on a semisimple path, ...).
class DomainError : public Error {
public:
    using Error::Error;
};

/// Elements of two different fields (or algebras over different groups) were combined.
class MismatchError : public Error {
public:
    using Error::Error;
};

/// An exhaustive enumeration would exceed its configured budget.
class BudgetExceeded : public Error {
public:
    using Error::Error;
};

/// A required hypothesis (splitting field, ECID certificate) but was neither proved nor asserted.
class HypothesisRequired : public Error {
public:
    using Error::Error;
};

/// Malformed JSON or textual input.
class ParseError : public Error {
public:
    using Error::Error;
};

}  // namespace ecid
