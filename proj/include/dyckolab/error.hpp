#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace dyckolab {

/// A symbol lies outside the alphabet an operation requires.
class AlphabetError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// An operation's precondition on its input value does not hold
/// (non-Dyck word passed to nesting_level, empty word passed to period, ...).
class DomainError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/// Malformed text input (words, morphism rules, DFAO files, LinRep JSON).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A configured safety cap was hit. `progress` carries the amount of work
/// completed before the refusal (words enumerated, symbols scanned, ...).
class CapExceeded : public std::runtime_error {
public:
    CapExceeded(const std::string& what, std::size_t progress)
        : std::runtime_error(what), progress_(progress) {}

    std::size_t progress() const noexcept { return progress_; }

private:
    std::size_t progress_;
};

} // namespace dyckolab
