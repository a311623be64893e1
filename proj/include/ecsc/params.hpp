/*
 * Copyright (C) 2026 The ecsc Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <optional>
#include <string>

#include "ecsc/curve.hpp"

namespace ecsc {

/// NIST P-192 / secp192r1 over GF(2^192 - 2^64 - 1).
inline const DomainParams& p192() {
    static const DomainParams params(
        "p192",
        BigInt("0xFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFEFFFFFFFFFFFFFFFF"),
        BigInt("0xFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFFEFFFFFFFFFFFFFFFC"),
        BigInt("0x64210519E59C80E70FA7E9AB72243049FEB8DEECC146B9B1"),
        BigInt("0x188DA80EB03090F67CBF20EB43A18800F4FF0AFD82FF1012"),
        BigInt("0x07192B95FFC8DA78631011ED6B24CDD573F977A11E794811"),
        BigInt("0xFFFFFFFFFFFFFFFFFFFFFFFF99DEF836146BC9B1B4D22831"),
        1);
    return params;
}

/// Tiny fully enumerable test curve y^2 = x^3 + 2x + 2 over F_17 with
/// G = (5, 1) of prime order 19. Its whole group fits in a table, which
/// makes brute-force oracles (including discrete-log search) practical.
inline const DomainParams& tiny17() {
    static const DomainParams params("tiny17", BigInt(17), BigInt(2), BigInt(2),
                                     BigInt(5), BigInt(1), BigInt(19), 1);
    return params;
}

/// Built-in parameter sets loadable by identifier.
inline std::optional<DomainParams> params_by_name(const std::string& name) {
    if (name == "p192") return p192();
    if (name == "tiny17") return tiny17();
    return std::nullopt;
}

} // namespace ecsc
