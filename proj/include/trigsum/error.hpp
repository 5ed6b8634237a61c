#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace trigsum {

// Every failure the library can signal, so callers (and the CLI exit-code
// mapping) can dispatch on the kind without string matching.
enum class Errc {
    CapExceeded,
    MixedOrders,
    DivisionByZero,
    NotRational,
    UnboundVariable,
    NonRationalAngle,
    NonIntegerBound,
    NonAlgebraicValue,
    IndexCollision,
    ParseError,
    NoConvergence,
    PoleOnGrid,
    NotPrime,
    WrongResidueClass,
    NonIntegerCoefficient,
    CertificateFailure,
    UnknownIdentity,
    MissingParam,
    HypothesisViolated,
    InvalidArgument,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

// Parse failure carrying the offending position in the input text.
class SourceError : public Error {
public:
    SourceError(std::size_t offset, int line, int column, const std::string& msg)
        : Error(Errc::ParseError,
                "line " + std::to_string(line) + ", col " + std::to_string(column) + ": " + msg),
          offset_(offset), line_(line), column_(column) {}

    std::size_t offset() const { return offset_; }
    int line() const { return line_; }
    int column() const { return column_; }

private:
    std::size_t offset_;
    int line_;
    int column_;
};

} // namespace trigsum
