#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace geb {

enum class Errc {
    VertexOutOfRange,
    SelfLoop,
    NTooLarge,
    CycleTooShort,
    BadSizeByte,
    TruncatedBits,
    ByteOutOfRange,
    HeaderMismatch,
    NTooLargeForSizeByte,
    NTooLargeForCanonicalization,
    NTooLargeForEnumeration,
    ConvergenceFailure,
    LengthMismatch,
    EmptyVector,
    BoundsViolated,
    NegativeFactor,
    EmptyGraph,
    ZeroRank,
    Io,
};

std::string_view to_string(Errc code) noexcept;

// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& what) : std::runtime_error(what), code_(code) {}

    Errc code() const noexcept { return code_; }

private:
    Errc code_;
};

// A decode failure inside a line-oriented corpus; line numbers are 1-based.
class LineError : public Error {
public:
    LineError(Errc code, std::size_t line, const std::string& what)
        : Error(code, "line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const noexcept { return line_; }

private:
    std::size_t line_;
};

}  // namespace geb
