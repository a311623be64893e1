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

#include "ecsc/cipher.hpp"
#include "ecsc/curve.hpp"
#include "ecsc/errors.hpp"
#include "ecsc/hash.hpp"
#include "ecsc/pki.hpp"
#include "ecsc/rng.hpp"
#include "ecsc/wire.hpp"

// Elliptic-curve signcryption with direct public verifiability.
//
// The sender draws an ephemeral r, publishes R = rG, and both sides derive
// the Diffie-Hellman-style point K = (r + x~_R w_A) W_B = w_B (R + x~_R W_A),
// where x~_R folds the low half of R's x-coordinate into the key agreement
// (MQV-flavoured binding). The session key is hashed from K's coordinates
// and both identities; the signature s = t w_A - r (mod n) makes the triple
// (R, C, s) verifiable by anyone via sG + R = tW_A, with no secret input.
namespace ecsc {

/// The transmitted triple (R, C, s). R is never the identity.
struct SigncryptedText {
    CurvePoint r_point;
    Bytes ciphertext;
    BigInt s;
};

/// Symmetric session key; its length always equals the cipher's key length.
struct SessionKey {
    Bytes key;
};

/// x~ = 2^ceil(f/2) + (x mod 2^ceil(f/2)) with f the bit length of n: the
/// least significant half of x plus a forced high bit, so the result lies
/// in [2^(f/2), 2^(f/2 + 1)).
inline BigInt xtilde(const FieldElement& x_r, const DomainParams& params) {
    const unsigned half = (params.f + 1) / 2;
    const BigInt pow = BigInt(1) << half;
    return pow + (x_r.value() % pow);
}

/// Hash input for session-key derivation: enc(x_K) || lp(ID_A) || enc(y_K)
/// || lp(ID_B). Coordinates are fixed-width and identifiers are
/// length-prefixed, which makes the concatenation injective.
inline Bytes kdf_input(const CurvePoint& k_point, BytesView id_a, BytesView id_b,
                       const DomainParams& params) {
    if (k_point.is_infinity())
        throw MalformedError("key derivation requires a finite point");
    Bytes input = wire::encode_field(k_point.x(), params.field);
    append_lp(input, id_a);
    append_bytes(input, wire::encode_field(k_point.y(), params.field));
    append_lp(input, id_b);
    return input;
}

/// k = H(x_K || ID_A || y_K || ID_B), truncated to key_len_bits; when the
/// hash is shorter than the requested key, extended in counter mode as
/// H(input || be32(i)).
inline SessionKey derive_session_key(const CurvePoint& k_point, BytesView id_a,
                                     BytesView id_b, const HashFunction& hash,
                                     std::size_t key_len_bits,
                                     const DomainParams& params) {
    if (key_len_bits == 0 || key_len_bits % 8 != 0)
        throw UsageError("session key length must be a positive multiple of 8 bits");
    const Bytes input = kdf_input(k_point, id_a, id_b, params);
    const std::size_t want = key_len_bits / 8;
    Bytes out;
    if (key_len_bits <= hash.output_bits()) {
        out = hash.digest(input);
        out.resize(want);
    } else {
        std::uint32_t counter = 0;
        while (out.size() < want) {
            Bytes block_input = input;
            append_be32(block_input, counter++);
            Bytes block = hash.digest(block_input);
            append_bytes(out, block);
        }
        out.resize(want);
    }
    return {out};
}

/// Hash input for the signature scalar: C || enc(x_R) || lp(ID_A) ||
/// enc(y_R) || lp(ID_B), with C entering as raw bytes.
inline Bytes signature_hash_input(BytesView ciphertext, const CurvePoint& r_point,
                                  BytesView id_a, BytesView id_b,
                                  const DomainParams& params) {
    Bytes input(ciphertext.begin(), ciphertext.end());
    append_bytes(input, wire::encode_field(r_point.x(), params.field));
    append_lp(input, id_a);
    append_bytes(input, wire::encode_field(r_point.y(), params.field));
    append_lp(input, id_b);
    return input;
}

/// t = H(C || x_R || ID_A || y_R || ID_B) as a big-endian integer mod n.
inline BigInt compute_t(BytesView ciphertext, const CurvePoint& r_point,
                        BytesView id_a, BytesView id_b, const HashFunction& hash,
                        const DomainParams& params) {
    return bytes_to_bigint(
               hash.digest(signature_hash_input(ciphertext, r_point, id_a, id_b,
                                                params))) %
           params.n;
}

namespace wire {

inline Bytes encode_sct(const SigncryptedText& sct, const DomainParams& params) {
    if (sct.r_point.is_infinity())
        throw UsageError("signcrypted text must carry a finite R");
    if (sct.s < 0 || sct.s >= params.n)
        throw UsageError("signcrypted text must carry s in [0, n)");
    return encode_sct_parts(sct.r_point, sct.ciphertext, sct.s, params);
}

inline SigncryptedText decode_sct(BytesView bytes, const DomainParams& params) {
    ByteReader r(bytes);
    if (r.u8() != kFormatVersion)
        throw MalformedError("unsupported signcrypted text version");
    SigncryptedText sct;
    sct.r_point = read_point(r, params);
    if (sct.r_point.is_infinity())
        throw MalformedError("signcrypted text carries the identity as R");
    std::uint32_t clen = r.be32();
    sct.ciphertext = r.take(clen);
    sct.s = read_scalar(r, params);
    r.expect_done();
    return sct;
}

} // namespace wire

namespace detail {

/// Shared entry validation for the receiving side: R finite, on curve and
/// (when the cofactor is nontrivial) in the main group.
inline void check_r_point(const CurvePoint& r_point, const DomainParams& params) {
    if (r_point.is_infinity())
        throw MalformedError("R is the identity");
    if (!on_curve(r_point, params))
        throw MalformedError("R is not on the curve");
    if (params.h != 1 && !scalar_mul_wnaf(params.n, r_point, params).is_infinity())
        throw MalformedError("R is not in the main group");
}

} // namespace detail

/// The raw acceptance equation sG + R = tW_A over already-validated
/// inputs. Split out so exhaustive tamper tests can drive it directly.
inline bool verify_equation(const SigncryptedText& sct, const CurvePoint& sender_key,
                            BytesView id_a, BytesView id_b, const HashFunction& hash,
                            const DomainParams& params) {
    BigInt t = compute_t(sct.ciphertext, sct.r_point, id_a, id_b, hash, params);
    CurvePoint lhs = point_add(scalar_mul_wnaf(sct.s, params.g, params),
                               sct.r_point, params);
    CurvePoint rhs = scalar_mul_wnaf(t, sender_key, params);
    return lhs == rhs;
}

/// Signcrypt M for the holder of cert_b:
///   1. validate the recipient certificate and public key,
///   2. draw r in [1, n-1],
///   3. R = rG,
///   4. K = (r + x~_R w_A) W_B, retrying from 2 if K = O, and derive k,
///   5. C = E_k(M),
///   6. t = H(C || x_R || ID_A || y_R || ID_B), s = t w_A - r (mod n),
///   7. emit (R, C, s).
inline SigncryptedText signcrypt(const DomainParams& params, const KeyPair& sender,
                                 const Certificate& cert_b, const CurvePoint& ca_key,
                                 const RevocationList& crl, std::int64_t now,
                                 BytesView message, RandomSource& rng,
                                 const HashFunction& hash = default_hash(),
                                 const SymmetricCipher& cipher = default_cipher()) {
    CertStatus status = check_certificate(cert_b, ca_key, crl, now, params, hash);
    if (!status.ok)
        throw CertificateError("recipient certificate rejected: " + status.reason);
    if (!validate_public_key(cert_b.subject_key, params))
        throw CertificateError("recipient public key is not in the main group");

    const BigInt& n = params.n;
    const CurvePoint& recipient_key = cert_b.subject_key;
    const BytesView id_b(cert_b.subject_id);

    // K = O happens only when r + x~_R w_A = 0 (mod n); negligible on real
    // curves but routine on the tiny test curve, hence the bounded retry.
    for (int attempt = 0; attempt < 64; ++attempt) {
        BigInt r = random_scalar(n, rng);
        CurvePoint r_point = scalar_mul_wnaf(r, params.g, params);
        BigInt u = (r + xtilde(r_point.x(), params) * sender.w) % n;
        if (u == 0) continue;
        CurvePoint k_point = scalar_mul_wnaf(u, recipient_key, params);
        if (k_point.is_infinity()) continue;

        SessionKey key = derive_session_key(k_point, sender.id, id_b, hash,
                                            cipher.key_length_bytes() * 8, params);
        Bytes ciphertext = cipher.encrypt(key.key, message);
        BigInt t = compute_t(ciphertext, r_point, sender.id, id_b, hash, params);
        BigInt s = (t * sender.w - r) % n;
        if (s < 0) s += n;
        return {r_point, ciphertext, s};
    }
    throw Error("signcryption failed: derived K = O in 64 consecutive attempts");
}

/// Unsigncrypt (R, C, s) from the holder of cert_a:
///   1. validate the sender certificate and public key,
///   2. K = w_B (R + x~_R W_A) and derive k,
///   3. M = D_k(C),
///   4. t = H(C || x_R || ID_A || y_R || ID_B),
///   5. return M iff sG + R = tW_A, otherwise reject.
inline Bytes unsigncrypt(const DomainParams& params, const KeyPair& receiver,
                         const Certificate& cert_a, const CurvePoint& ca_key,
                         const RevocationList& crl, std::int64_t now,
                         const SigncryptedText& sct,
                         const HashFunction& hash = default_hash(),
                         const SymmetricCipher& cipher = default_cipher()) {
    CertStatus status = check_certificate(cert_a, ca_key, crl, now, params, hash);
    if (!status.ok)
        throw CertificateError("sender certificate rejected: " + status.reason);
    if (!validate_public_key(cert_a.subject_key, params))
        throw CertificateError("sender public key is not in the main group");

    detail::check_r_point(sct.r_point, params);
    if (sct.s < 0 || sct.s >= params.n)
        throw MalformedError("signature scalar out of range");

    const CurvePoint& sender_key = cert_a.subject_key;
    const BytesView id_a(cert_a.subject_id);

    CurvePoint inner = point_add(
        sct.r_point, scalar_mul_wnaf(xtilde(sct.r_point.x(), params), sender_key, params),
        params);
    CurvePoint k_point = scalar_mul_wnaf(receiver.w, inner, params);
    if (k_point.is_infinity())
        throw MalformedError("derived K is the identity");

    SessionKey key = derive_session_key(k_point, id_a, receiver.id, hash,
                                        cipher.key_length_bytes() * 8, params);
    Bytes message = cipher.decrypt(key.key, sct.ciphertext);

    if (!verify_equation(sct, sender_key, id_a, receiver.id, hash, params))
        throw RejectionError("signcryption verification failed: sG + R != tW_A");
    return message;
}

/// Third-party verification from public data only: recompute t from
/// (R, C, s) and the two identities and check sG + R = tW_A. Takes no
/// private key by construction. Malformed inputs report false with a
/// reason instead of throwing.
inline bool public_verify(const DomainParams& params, const Certificate& cert_a,
                          const CurvePoint& ca_key, const RevocationList& crl,
                          std::int64_t now, const SigncryptedText& sct,
                          BytesView id_b, const HashFunction& hash = default_hash(),
                          std::string* reason = nullptr) {
    auto fail = [&](const std::string& why) {
        if (reason) *reason = why;
        return false;
    };
    CertStatus status = check_certificate(cert_a, ca_key, crl, now, params, hash);
    if (!status.ok) return fail("sender certificate rejected: " + status.reason);
    if (!validate_public_key(cert_a.subject_key, params))
        return fail("sender public key is not in the main group");
    try {
        detail::check_r_point(sct.r_point, params);
    } catch (const MalformedError& e) {
        return fail(e.what());
    }
    if (sct.s < 0 || sct.s >= params.n) return fail("signature scalar out of range");
    if (!verify_equation(sct, cert_a.subject_key, cert_a.subject_id, id_b, hash,
                         params))
        return fail("verification equation sG + R = tW_A does not hold");
    return true;
}

} // namespace ecsc
