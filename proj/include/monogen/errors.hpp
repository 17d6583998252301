#ifndef MONOGEN_ERRORS_HPP
#define MONOGEN_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace monogen {

/* Invalid input to a mathematical operation (reducible cubic, zero
 * polynomial, non-square-free d, ...). */
class DomainError : public std::domain_error {
  public:
    using std::domain_error::domain_error;
};

/* An internal invariant failed. This always means a bug, never bad input. */
class InvariantViolation : public std::logic_error {
  public:
    using std::logic_error::logic_error;
};

class ParseError : public std::runtime_error {
  public:
    ParseError(std::size_t line, std::string const & what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what)
        , line_(line)
    {}
    std::size_t line() const { return line_; }

  private:
    std::size_t line_;
};

/* A claimed fact (certified solution, checksum) did not survive
 * re-verification. */
class IntegrityError : public std::runtime_error {
  public:
    using std::runtime_error::runtime_error;
};

class NonSymmetricError : public DomainError {
  public:
    NonSymmetricError(std::vector<int> witness, std::string const & what)
        : DomainError(what)
        , witness_(std::move(witness))
    {}
    /* permutation of the root variables that changes the input */
    std::vector<int> const & witness() const { return witness_; }

  private:
    std::vector<int> witness_;
};

}  // namespace monogen

#endif  // MONOGEN_ERRORS_HPP
