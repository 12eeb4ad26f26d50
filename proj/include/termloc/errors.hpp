#pragma once

#include <stdexcept>
#include <string>

namespace termloc {

/// Malformed input text (JSON, TSV, snapshot, config).
class ParseError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// Well-formed input that breaks a data-model invariant.
class ValidationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/// A caller broke an operation's precondition.
class ContractError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

} // namespace termloc
