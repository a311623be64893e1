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

#include <cstdint>

#include <boost/multiprecision/cpp_int.hpp>

#include "ecsc/bytes.hpp"
#include "ecsc/errors.hpp"

namespace ecsc {

using BigInt = boost::multiprecision::cpp_int;

inline std::size_t bit_length(const BigInt& v) {
    if (v == 0) return 0;
    return boost::multiprecision::msb(v) + 1;
}

/// Big-endian fixed-width encoding; throws if the value needs more bytes.
inline Bytes bigint_to_bytes(const BigInt& v, std::size_t width) {
    if (v < 0) throw UsageError("cannot encode a negative integer");
    if ((bit_length(v) + 7) / 8 > width)
        throw UsageError("integer too wide for the requested encoding width");
    Bytes out(width, 0);
    BigInt t = v;
    for (std::size_t i = 0; i < width && t != 0; ++i) {
        out[width - 1 - i] = static_cast<std::uint8_t>(t & 0xFF);
        t >>= 8;
    }
    return out;
}

/// Minimal big-endian encoding: no leading zero bytes, zero encodes empty.
inline Bytes bigint_to_bytes_min(const BigInt& v) {
    return bigint_to_bytes(v, (bit_length(v) + 7) / 8);
}

inline BigInt bytes_to_bigint(BytesView b) {
    BigInt v = 0;
    for (std::uint8_t byte : b) {
        v <<= 8;
        v += byte;
    }
    return v;
}

/// Strict inverse of bigint_to_bytes_min: leading zero bytes are rejected
/// so the minimal encoding stays canonical.
inline BigInt bytes_to_bigint_min(BytesView b) {
    if (!b.empty() && b[0] == 0)
        throw MalformedError("non-minimal integer encoding");
    return bytes_to_bigint(b);
}

/// Miller-Rabin with a fixed, deterministic witness schedule (the first
/// `rounds` primes, capped at 64) so validation reports are reproducible.
inline bool is_probable_prime(const BigInt& n, unsigned rounds = 64) {
    static constexpr unsigned kWitnesses[64] = {
        2,   3,   5,   7,   11,  13,  17,  19,  23,  29,  31,  37,  41,
        43,  47,  53,  59,  61,  67,  71,  73,  79,  83,  89,  97,  101,
        103, 107, 109, 113, 127, 131, 137, 139, 149, 151, 157, 163, 167,
        173, 179, 181, 191, 193, 197, 199, 211, 223, 227, 229, 233, 239,
        241, 251, 257, 263, 269, 271, 277, 281, 283, 293, 307, 311};
    if (n < 2) return false;
    if (n == 2 || n == 3) return true;
    if (n % 2 == 0) return false;

    BigInt d = n - 1;
    unsigned s = 0;
    while (d % 2 == 0) {
        d >>= 1;
        ++s;
    }

    if (rounds > 64) rounds = 64;
    for (unsigned i = 0; i < rounds; ++i) {
        BigInt a = BigInt(kWitnesses[i]) % n;
        if (a == 0) continue;
        BigInt x = boost::multiprecision::powm(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = (x * x) % n;
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

} // namespace ecsc
