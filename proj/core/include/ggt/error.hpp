#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ggt {

enum class ErrorKind {
    // scalar
    NonPrimeCharacteristic,
    ReducibleModulus,
    DegreeMismatch,
    ExponentOutOfRange,
    // groupoid / gset
    AxiomViolation,
    MissingIdentity,
    MissingInverse,
    NonUniqueInverse,
    UnknownLabel,
    SizeBoundExceeded,
    NotWide,
    NotSubgroupoid,
    FiberMismatch,
    NotIdentityOnFiber,
    CompositionFailure,
    NotSplit,
    CarrierMismatch,
    // rings and actions
    BlockMismatch,
    SupportMismatch,
    NotBijective,
    IdentityNotTrivial,
    SupportViolation,
    UnknownPoint,
    KBlockNotField,
    TargetMismatch,
    NotSeparable,
    NoSuchIdempotent,
    NotAModule,
    HypothesisFailure,
    // internal cross-checks and input parsing
    OracleMismatch,
    ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind and a human readable
/// witness describing the offending data.
class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& witness);

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& witness() const noexcept { return witness_; }

private:
    ErrorKind kind_;
    std::string witness_;
};

} // namespace ggt
