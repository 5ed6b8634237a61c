#include "trigsum/error.hpp"

namespace trigsum {

const char* errc_name(Errc c) {
    switch (c) {
        case Errc::CapExceeded: return "CapExceeded";
        case Errc::MixedOrders: return "MixedOrders";
        case Errc::DivisionByZero: return "DivisionByZero";
        case Errc::NotRational: return "NotRational";
        case Errc::UnboundVariable: return "UnboundVariable";
        case Errc::NonRationalAngle: return "NonRationalAngle";
        case Errc::NonIntegerBound: return "NonIntegerBound";
        case Errc::NonAlgebraicValue: return "NonAlgebraicValue";
        case Errc::IndexCollision: return "IndexCollision";
        case Errc::ParseError: return "ParseError";
        case Errc::NoConvergence: return "NoConvergence";
        case Errc::PoleOnGrid: return "PoleOnGrid";
        case Errc::NotPrime: return "NotPrime";
        case Errc::WrongResidueClass: return "WrongResidueClass";
        case Errc::NonIntegerCoefficient: return "NonIntegerCoefficient";
        case Errc::CertificateFailure: return "CertificateFailure";
        case Errc::UnknownIdentity: return "UnknownIdentity";
        case Errc::MissingParam: return "MissingParam";
        case Errc::HypothesisViolated: return "HypothesisViolated";
        case Errc::InvalidArgument: return "InvalidArgument";
    }
    return "UnknownError";
}

} // namespace trigsum
