#include "gslab/error.hpp"

namespace gslab {

const char* to_string(ErrorKind kind)
{
    switch (kind) {
    case ErrorKind::Syntax: return "SyntaxError";
    case ErrorKind::DuplicateGenerator: return "DuplicateGenerator";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::UnknownToken: return "UnknownToken";
    case ErrorKind::MissingAssignment: return "MissingAssignment";
    case ErrorKind::DuplicateAssignment: return "DuplicateAssignment";
    case ErrorKind::DegreeOverflow: return "DegreeOverflow";
    case ErrorKind::VariableMismatch: return "VariableMismatch";
    case ErrorKind::InconsistentPBW: return "InconsistentPBW";
    case ErrorKind::DimensionMismatch: return "DimensionMismatch";
    case ErrorKind::NegativeDimension: return "NegativeDimension";
    case ErrorKind::NotACycle: return "NotACycle";
    case ErrorKind::InvalidComplex: return "InvalidComplex";
    case ErrorKind::InvalidCoefficientSystem: return "InvalidCoefficientSystem";
    case ErrorKind::RequiresAsphericalFlag: return "RequiresAsphericalFlag";
    case ErrorKind::IncompleteConjugationTable: return "IncompleteConjugationTable";
    case ErrorKind::NotWellDefined: return "NotWellDefined";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    }
    return "Error";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind)
{
}

namespace {

std::string format_location(const std::string& source, int line, int column)
{
    std::string out = source.empty() ? std::string("<input>") : source;
    if (line > 0) {
        out += ":" + std::to_string(line);
        if (column > 0)
            out += ":" + std::to_string(column);
    }
    return out;
}

}  // namespace

ParseError::ParseError(ErrorKind kind, const std::string& message, int line, int column,
                       std::string source)
    : Error(kind, format_location(source, line, column) + ": " + message),
      message_(message),
      line_(line),
      column_(column),
      source_(std::move(source))
{
}

void ParseError::rethrow_with_source(const std::string& source) const
{
    throw ParseError(kind(), message_, line_, column_, source);
}

}  // namespace gslab
