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

#include "ecsc/curve.hpp"
#include "ecsc/hash.hpp"
#include "ecsc/rng.hpp"
#include "ecsc/wire.hpp"

namespace ecsc {

/// Schnorr signature (e, s): e = H(U || msg) mod n with U = uG, and
/// s = u + e*w mod n. Verified by recomputing U' = sG - eW.
struct SchnorrSignature {
    BigInt e, s;
};

inline SchnorrSignature schnorr_sign(const DomainParams& params,
                                     const HashFunction& hash, const BigInt& w,
                                     BytesView msg, RandomSource& rng) {
    const BigInt& n = params.n;
    BigInt u = random_scalar(n, rng);
    CurvePoint commit = scalar_mul_wnaf(u, params.g, params);
    Bytes input = wire::encode_point(commit, params, false);
    append_bytes(input, msg);
    BigInt e = bytes_to_bigint(hash.digest(input)) % n;
    BigInt s = (u + e * w) % n;
    return {e, s};
}

inline bool schnorr_verify(const DomainParams& params, const HashFunction& hash,
                           const CurvePoint& pub, BytesView msg,
                           const SchnorrSignature& sig) {
    const BigInt& n = params.n;
    if (sig.e < 0 || sig.e >= n || sig.s < 0 || sig.s >= n) return false;
    if (pub.is_infinity() || !on_curve(pub, params)) return false;
    // U' = sG - eW
    CurvePoint sg = scalar_mul_wnaf(sig.s, params.g, params);
    CurvePoint ew = scalar_mul_wnaf(sig.e, pub, params);
    CurvePoint commit = point_add(sg, point_neg(ew, params), params);
    if (commit.is_infinity()) return false;
    Bytes input = wire::encode_point(commit, params, false);
    append_bytes(input, msg);
    BigInt e = bytes_to_bigint(hash.digest(input)) % n;
    return e == sig.e;
}

} // namespace ecsc
