#include "geb/error.hpp"

namespace geb {

std::string_view to_string(Errc code) noexcept
{
    switch (code) {
    case Errc::VertexOutOfRange: return "VertexOutOfRange";
    case Errc::SelfLoop: return "SelfLoop";
    case Errc::NTooLarge: return "NTooLarge";
    case Errc::CycleTooShort: return "CycleTooShort";
    case Errc::BadSizeByte: return "BadSizeByte";
    case Errc::TruncatedBits: return "TruncatedBits";
    case Errc::ByteOutOfRange: return "ByteOutOfRange";
    case Errc::HeaderMismatch: return "HeaderMismatch";
    case Errc::NTooLargeForSizeByte: return "NTooLargeForSizeByte";
    case Errc::NTooLargeForCanonicalization: return "NTooLargeForCanonicalization";
    case Errc::NTooLargeForEnumeration: return "NTooLargeForEnumeration";
    case Errc::ConvergenceFailure: return "ConvergenceFailure";
    case Errc::LengthMismatch: return "LengthMismatch";
    case Errc::EmptyVector: return "EmptyVector";
    case Errc::BoundsViolated: return "BoundsViolated";
    case Errc::NegativeFactor: return "NegativeFactor";
    case Errc::EmptyGraph: return "EmptyGraph";
    case Errc::ZeroRank: return "ZeroRank";
    case Errc::Io: return "Io";
    }
    return "Unknown";
}

}  // namespace geb
