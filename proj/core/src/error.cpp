#include "ggt/error.hpp"

namespace ggt {

std::string_view to_string(ErrorKind kind) noexcept
{
    switch (kind) {
    case ErrorKind::NonPrimeCharacteristic: return "NonPrimeCharacteristic";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::ExponentOutOfRange: return "ExponentOutOfRange";
    case ErrorKind::AxiomViolation: return "AxiomViolation";
    case ErrorKind::MissingIdentity: return "MissingIdentity";
    case ErrorKind::MissingInverse: return "MissingInverse";
    case ErrorKind::NonUniqueInverse: return "NonUniqueInverse";
    case ErrorKind::UnknownLabel: return "UnknownLabel";
    case ErrorKind::SizeBoundExceeded: return "SizeBoundExceeded";
    case ErrorKind::NotWide: return "NotWide";
    case ErrorKind::NotSubgroupoid: return "NotSubgroupoid";
    case ErrorKind::FiberMismatch: return "FiberMismatch";
    case ErrorKind::NotIdentityOnFiber: return "NotIdentityOnFiber";
    case ErrorKind::CompositionFailure: return "CompositionFailure";
    case ErrorKind::NotSplit: return "NotSplit";
    case ErrorKind::CarrierMismatch: return "CarrierMismatch";
    case ErrorKind::BlockMismatch: return "BlockMismatch";
    case ErrorKind::SupportMismatch: return "SupportMismatch";
    case ErrorKind::NotBijective: return "NotBijective";
    case ErrorKind::IdentityNotTrivial: return "IdentityNotTrivial";
    case ErrorKind::SupportViolation: return "SupportViolation";
    case ErrorKind::UnknownPoint: return "UnknownPoint";
    case ErrorKind::KBlockNotField: return "KBlockNotField";
    case ErrorKind::TargetMismatch: return "TargetMismatch";
    case ErrorKind::NotSeparable: return "NotSeparable";
    case ErrorKind::NoSuchIdempotent: return "NoSuchIdempotent";
    case ErrorKind::NotAModule: return "NotAModule";
    case ErrorKind::HypothesisFailure: return "HypothesisFailure";
    case ErrorKind::OracleMismatch: return "OracleMismatch";
    case ErrorKind::ParseError: return "ParseError";
    }
    return "Unknown";
}

Error::Error(ErrorKind kind, const std::string& witness)
    : std::runtime_error(std::string(to_string(kind)) + ": " + witness),
      kind_(kind),
      witness_(witness)
{
}

} // namespace ggt
