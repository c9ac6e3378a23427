#pragma once

#include <stdexcept>
#include <string>

namespace gslab {

enum class ErrorKind {
    Syntax,
    DuplicateGenerator,
    UnknownGenerator,
    UnknownToken,
    MissingAssignment,
    DuplicateAssignment,
    DegreeOverflow,
    VariableMismatch,
    InconsistentPBW,
    DimensionMismatch,
    NegativeDimension,
    NotACycle,
    InvalidComplex,
    InvalidCoefficientSystem,
    RequiresAsphericalFlag,
    IncompleteConjugationTable,
    NotWellDefined,
    InvalidArgument,
};

const char* to_string(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& what);

    ErrorKind kind() const noexcept { return kind_; }

private:
    ErrorKind kind_;
};

// Parse failures carry a 1-based location; line 0 means "whole input".
class ParseError : public Error {
public:
    ParseError(ErrorKind kind, const std::string& message, int line, int column,
               std::string source = {});

    int line() const noexcept { return line_; }
    int column() const noexcept { return column_; }
    const std::string& source() const noexcept { return source_; }
    const std::string& message() const noexcept { return message_; }

    // Re-raise with a file name attached.
    [[noreturn]] void rethrow_with_source(const std::string& source) const;

private:
    std::string message_;
    int line_;
    int column_;
    std::string source_;
};

}  // namespace gslab
