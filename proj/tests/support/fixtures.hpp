#pragma once

#include "feeamm/state.hpp"

// States from the worked examples: A trades against a single T0/T1 pool and
// the oracle prices T0 at 4 and T1 at 5.
namespace feeamm::testing {

inline const TokenId T0{"T0"};
inline const TokenId T1{"T1"};
inline const TokenId T2{"T2"};

inline SystemState two_token_state(double a0, double a1, double r0, double r1, double phi,
                                   double minted_supply = 100.0) {
    return SystemState({Pool(T0, T1, r0, r1, FeeParam(phi), minted_supply)},
                       {Wallet("A", {{T0, a0}, {T1, a1}})});
}

inline SystemState pool_40_60_state(double phi = 0.997) { return two_token_state(30, 20, 40, 60, phi); }
inline SystemState pool_400_600_state() { return two_token_state(300, 200, 400, 600, 0.997); }
inline SystemState pool_10_30_state() { return two_token_state(30, 20, 10, 30, 0.9); }

inline PriceOracle reference_oracle() { return PriceOracle({{T0, 4.0}, {T1, 5.0}}); }

}  // namespace feeamm::testing
