#pragma once

#include <stdexcept>
#include <string>

namespace supercohom {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class DivisionByZero : public Error {
public:
    DivisionByZero() : Error("division by zero") {}
};

class FieldMismatch : public Error {
public:
    using Error::Error;
};

class NotCyclotomic : public Error {
public:
    using Error::Error;
};

/// Shape or index-range violation (length, degree, basis mismatches).
class DimensionError : public Error {
public:
    using Error::Error;
};

class ParseError : public Error {
public:
    ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
        : Error(line == 0 ? what
                          : what + " (line " + std::to_string(line) + ", column " +
                                std::to_string(column) + ")"),
          line_(line), column_(column)
    {
    }

    std::size_t line() const { return line_; }
    std::size_t column() const { return column_; }

private:
    std::size_t line_;
    std::size_t column_;
};

/// An axiom or invariant failed. `axiom()` names it, `witness()` carries the offending data.
class ValidationError : public Error {
public:
    ValidationError(std::string axiom, std::string witness)
        : Error(axiom + ": " + witness), axiom_(std::move(axiom)), witness_(std::move(witness))
    {
    }

    const std::string& axiom() const { return axiom_; }
    const std::string& witness() const { return witness_; }

private:
    std::string axiom_;
    std::string witness_;
};

/// Two independent computations of the same quantity disagreed.
class OracleDisagreement : public Error {
public:
    using Error::Error;
};

class PreconditionError : public Error {
public:
    using Error::Error;
};

class DegreeOutOfRange : public Error {
public:
    using Error::Error;
};

class WrongBidegree : public Error {
public:
    using Error::Error;
};

/// A deformation has no nonzero term beyond the base bracket.
class AllZero : public Error {
public:
    using Error::Error;
};

/// Obstruction requested for a deformation that fails its own order checks.
class NotValidated : public Error {
public:
    using Error::Error;
};

class NotCocycle : public Error {
public:
    using Error::Error;
};

} // namespace supercohom
