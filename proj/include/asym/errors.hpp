#ifndef ASYM_ERRORS_HPP
#define ASYM_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace asym {

enum class ErrorKind {
    NonUniformEdge,
    DuplicateEdge,
    DuplicateLabel,
    IndexOutOfRange,
    SameVertex,
    TooFewVertices,
    LengthMismatch,
    InvalidParams,
    RetryLimitExceeded,
    NotRegular,
    DegreeTooLow,
    NotAnAutomorphism,
    StructureViolation,
    SizeLimitExceeded,
    AsymmetricSubgraphFound,
    ParseError,
    IoError,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& message)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + message), kind_(kind) {}

    ErrorKind kind() const { return kind_; }

private:
    ErrorKind kind_;
};

} // namespace asym

#endif // ASYM_ERRORS_HPP
