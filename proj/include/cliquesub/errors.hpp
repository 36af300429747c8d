#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace cliquesub {

class Error : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

/// Malformed arguments: out-of-range vertices, loops, bad probabilities.
class InputError : public Error {
  public:
    using Error::Error;
};

/// Text input that does not match its declared format.
class ParseError : public InputError {
  public:
    ParseError(const std::string & what, std::size_t line, std::size_t byte)
        : InputError(what + " (line " + std::to_string(line) + ", byte " + std::to_string(byte) + ")"),
          line_(line), byte_(byte)
    {
    }

    std::size_t line() const noexcept { return line_; }
    std::size_t byte() const noexcept { return byte_; }

  private:
    std::size_t line_;
    std::size_t byte_;
};

/// A lemma hypothesis does not hold; `hypothesis()` names the inequality.
class PreconditionError : public Error {
  public:
    PreconditionError(std::string hypothesis, const std::string & detail)
        : Error("hypothesis fails: " + hypothesis + " (" + detail + ")"), hypothesis_(std::move(hypothesis))
    {
    }

    const std::string & hypothesis() const noexcept { return hypothesis_; }

  private:
    std::string hypothesis_;
};

/// Arguments outside the mathematical domain of a bound.
class DomainError : public InputError {
  public:
    using InputError::InputError;
};

/// A caller broke a documented contract (e.g. passed an unverified certificate).
class ContractError : public Error {
  public:
    using Error::Error;
};

/// A guarantee that a proof establishes failed to hold. Always a bug.
class InternalError : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

} // namespace cliquesub
