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

#include <string>

#include "ecsc/bigint.hpp"
#include "ecsc/bytes.hpp"
#include "ecsc/curve.hpp"
#include "ecsc/errors.hpp"
#include "ecsc/field.hpp"

// Bit-exact binary formats. Every format starts with a version byte;
// decoders reject trailing bytes, out-of-range values and non-minimal
// integer encodings, so decode(encode(x)) == x and encode(decode(b)) == b.
namespace ecsc::wire {

inline constexpr std::uint8_t kFormatVersion = 0x01;
inline constexpr std::uint8_t kKeyPrivateMarker = 0x50; // 'P'
inline constexpr std::uint8_t kKeyPublicMarker = 0x55;  // 'U'

/// Fixed-width big-endian coordinate encoding, width = ceil(bits(q)/8).
inline Bytes encode_field(const FieldElement& v, const PrimeField& field) {
    return bigint_to_bytes(v.value(), field.byte_length());
}

/// Fixed-width big-endian scalar encoding, width = ceil(bits(n)/8).
inline Bytes encode_scalar(const BigInt& v, const DomainParams& params) {
    return bigint_to_bytes(v, params.scalar_bytes());
}

inline FieldElement read_field(ByteReader& r, const PrimeField& field) {
    BigInt v = bytes_to_bigint(r.take(field.byte_length()));
    if (v >= field.modulus()) throw MalformedError("coordinate not reduced mod q");
    return FieldElement(v);
}

inline BigInt read_scalar(ByteReader& r, const DomainParams& params) {
    BigInt v = bytes_to_bigint(r.take(params.scalar_bytes()));
    if (v >= params.n) throw MalformedError("scalar not reduced mod n");
    return v;
}

/// Points: 0x00 for O; 0x04 || x || y uncompressed; (0x02 | parity) || x
/// compressed.
inline Bytes encode_point(const CurvePoint& p, const DomainParams& params,
                          bool compressed = false) {
    if (!on_curve(p, params))
        throw UsageError("cannot encode a point that is not on the curve");
    Bytes out;
    if (p.is_infinity()) {
        out.push_back(0x00);
        return out;
    }
    if (compressed) {
        out.push_back(p.y().is_odd() ? 0x03 : 0x02);
        append_bytes(out, encode_field(p.x(), params.field));
    } else {
        out.push_back(0x04);
        append_bytes(out, encode_field(p.x(), params.field));
        append_bytes(out, encode_field(p.y(), params.field));
    }
    return out;
}

inline CurvePoint read_point(ByteReader& r, const DomainParams& params) {
    const std::uint8_t tag = r.u8();
    if (tag == 0x00) return CurvePoint::infinity();
    const PrimeField& fq = params.field;
    if (tag == 0x04) {
        FieldElement x = read_field(r, fq);
        FieldElement y = read_field(r, fq);
        CurvePoint p(x, y);
        if (!on_curve(p, params)) throw MalformedError("decoded point is off the curve");
        return p;
    }
    if (tag == 0x02 || tag == 0x03) {
        FieldElement x = read_field(r, fq);
        FieldElement rhs = fq.add(
            fq.add(fq.mul(fq.sqr(x), x), fq.mul(params.a, x)), params.b);
        auto root = fq.sqrt(rhs);
        if (!root) throw MalformedError("compressed x has no matching y");
        FieldElement y = *root; // even root by convention
        const bool want_odd = (tag == 0x03);
        if (y.is_odd() != want_odd) {
            if (y.is_zero()) throw MalformedError("compressed parity impossible for y = 0");
            y = fq.neg(y);
        }
        return CurvePoint(x, y);
    }
    throw MalformedError("unknown point encoding tag");
}

inline CurvePoint decode_point(BytesView bytes, const DomainParams& params) {
    ByteReader r(bytes);
    CurvePoint p = read_point(r, params);
    r.expect_done();
    return p;
}

/// Domain-parameter files (.ecp): version || lp(name) || lp(q) || a || b ||
/// G || lp(n) || be32(h). Primality is deliberately not checked here;
/// decoding stays cheap and validate_domain_params owns the semantics.
inline Bytes encode_params(const DomainParams& params) {
    Bytes out;
    out.push_back(kFormatVersion);
    append_lp(out, as_bytes(params.name));
    append_lp(out, bigint_to_bytes_min(params.field.modulus()));
    append_bytes(out, encode_field(params.a, params.field));
    append_bytes(out, encode_field(params.b, params.field));
    append_bytes(out, encode_point(params.g, params, false));
    append_lp(out, bigint_to_bytes_min(params.n));
    append_be32(out, params.h);
    return out;
}

inline DomainParams decode_params(BytesView bytes) {
    ByteReader r(bytes);
    if (r.u8() != kFormatVersion) throw MalformedError("unsupported parameter file version");
    std::string name;
    {
        Bytes nb = r.lp();
        name.assign(nb.begin(), nb.end());
    }
    BigInt q = bytes_to_bigint_min(r.lp());
    if (q < 2) throw MalformedError("parameter file: modulus below 2");
    PrimeField fq(q);
    BigInt a = bytes_to_bigint(r.take(fq.byte_length()));
    BigInt b = bytes_to_bigint(r.take(fq.byte_length()));
    if (a >= q || b >= q) throw MalformedError("curve coefficient not reduced mod q");

    // The base point needs the curve equation, so build a throwaway set of
    // parameters to drive read_point, then the real one.
    const std::uint8_t tag = r.u8();
    if (tag != 0x04) throw MalformedError("parameter file: G must be uncompressed");
    BigInt gx = bytes_to_bigint(r.take(fq.byte_length()));
    BigInt gy = bytes_to_bigint(r.take(fq.byte_length()));
    if (gx >= q || gy >= q) throw MalformedError("base point coordinate not reduced mod q");
    BigInt n = bytes_to_bigint_min(r.lp());
    if (n < 2) throw MalformedError("parameter file: order below 2");
    std::uint32_t h = r.be32();
    r.expect_done();

    DomainParams params(name, q, a, b, gx, gy, n, h);
    if (!on_curve(params.g, params))
        throw MalformedError("parameter file: G is not on the curve");
    return params;
}

/// Signcrypted text (.sct): version || point(R) || be32(|C|) || C || s.
inline Bytes encode_sct_parts(const CurvePoint& r_point, BytesView ciphertext,
                              const BigInt& s, const DomainParams& params) {
    Bytes out;
    out.push_back(kFormatVersion);
    append_bytes(out, encode_point(r_point, params, false));
    append_be32(out, static_cast<std::uint32_t>(ciphertext.size()));
    append_bytes(out, ciphertext);
    append_bytes(out, encode_scalar(s, params));
    return out;
}

/// Private key files (.eck): version || PRIVATE marker || lp(params name)
/// || lp(id) || lp(w). Public key files carry the point and a possession
/// signature instead of the scalar.
inline Bytes encode_private_key(const std::string& params_name, BytesView id,
                                const BigInt& w) {
    Bytes out;
    out.push_back(kFormatVersion);
    out.push_back(kKeyPrivateMarker);
    append_lp(out, as_bytes(params_name));
    append_lp(out, id);
    append_lp(out, bigint_to_bytes_min(w));
    return out;
}

struct PrivateKeyFile {
    std::string params_name;
    Bytes id;
    BigInt w;
};

inline PrivateKeyFile decode_private_key(BytesView bytes) {
    ByteReader r(bytes);
    if (r.u8() != kFormatVersion) throw MalformedError("unsupported key file version");
    if (r.u8() != kKeyPrivateMarker) throw MalformedError("not a private key file");
    PrivateKeyFile out;
    Bytes nb = r.lp();
    out.params_name.assign(nb.begin(), nb.end());
    out.id = r.lp();
    out.w = bytes_to_bigint_min(r.lp());
    r.expect_done();
    return out;
}

inline Bytes encode_public_key(const std::string& params_name, BytesView id,
                               BytesView point_bytes, const BigInt& pop_e,
                               const BigInt& pop_s) {
    Bytes out;
    out.push_back(kFormatVersion);
    out.push_back(kKeyPublicMarker);
    append_lp(out, as_bytes(params_name));
    append_lp(out, id);
    append_lp(out, point_bytes);
    append_lp(out, bigint_to_bytes_min(pop_e));
    append_lp(out, bigint_to_bytes_min(pop_s));
    return out;
}

struct PublicKeyFile {
    std::string params_name;
    Bytes id;
    Bytes point_bytes;
    BigInt pop_e, pop_s;
};

inline PublicKeyFile decode_public_key(BytesView bytes) {
    ByteReader r(bytes);
    if (r.u8() != kFormatVersion) throw MalformedError("unsupported key file version");
    if (r.u8() != kKeyPublicMarker) throw MalformedError("not a public key file");
    PublicKeyFile out;
    Bytes nb = r.lp();
    out.params_name.assign(nb.begin(), nb.end());
    out.id = r.lp();
    out.point_bytes = r.lp();
    out.pop_e = bytes_to_bigint_min(r.lp());
    out.pop_s = bytes_to_bigint_min(r.lp());
    r.expect_done();
    return out;
}

} // namespace ecsc::wire
