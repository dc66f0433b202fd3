#include "feeamm/error.hpp"

namespace feeamm {

std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
        case ErrorCode::InvalidToken: return "InvalidToken";
        case ErrorCode::InvalidPair: return "InvalidPair";
        case ErrorCode::DomainError: return "DomainError";
        case ErrorCode::InvalidState: return "InvalidState";
        case ErrorCode::NoPool: return "NoPool";
        case ErrorCode::InsufficientBalance: return "InsufficientBalance";
        case ErrorCode::NonPositiveAmount: return "NonPositiveAmount";
        case ErrorCode::MissingPrice: return "MissingPrice";
        case ErrorCode::InvalidRange: return "InvalidRange";
        case ErrorCode::NoSignChange: return "NoSignChange";
        case ErrorCode::InvalidInterval: return "InvalidInterval";
        case ErrorCode::InsufficientInputAmount: return "InsufficientInputAmount";
        case ErrorCode::InsufficientLiquidity: return "InsufficientLiquidity";
        case ErrorCode::Overflow: return "Overflow";
        case ErrorCode::Underflow: return "Underflow";
        case ErrorCode::ParseError: return "ParseError";
        case ErrorCode::IoError: return "IoError";
    }
    return "Unknown";
}

}  // namespace feeamm
