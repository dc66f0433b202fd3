#pragma once

#include <cmath>
#include <string>

#include "feeamm/error.hpp"

namespace feeamm::detail {

inline void require_finite(double v, const std::string& what, ErrorCode code) {
    if (!std::isfinite(v)) throw Error(code, what + " must be finite");
}

inline void require_positive(double v, const std::string& what,
                             ErrorCode code = ErrorCode::DomainError) {
    require_finite(v, what, code);
    if (!(v > 0.0)) throw Error(code, what + " must be positive");
}

inline void require_non_negative(double v, const std::string& what,
                                 ErrorCode code = ErrorCode::DomainError) {
    require_finite(v, what, code);
    if (v < 0.0) throw Error(code, what + " must be non-negative");
}

}  // namespace feeamm::detail
