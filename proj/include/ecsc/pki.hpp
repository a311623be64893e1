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
#include <set>
#include <string>

#include "ecsc/curve.hpp"
#include "ecsc/hash.hpp"
#include "ecsc/rng.hpp"
#include "ecsc/schnorr.hpp"
#include "ecsc/wire.hpp"

namespace ecsc {

/// Long-term keypair: private scalar w in [1, n-1], public point W = wG,
/// and the participant identifier bound into key derivation and signatures.
struct KeyPair {
    BigInt w;
    CurvePoint W;
    Bytes id;
};

/// Public-key certificate in a flat single-CA model. The CA signature
/// covers the canonical body encoding of all other fields.
struct Certificate {
    Bytes subject_id;
    CurvePoint subject_key;
    std::int64_t not_before = 0; // seconds since epoch, UTC
    std::int64_t not_after = 0;
    std::uint64_t serial = 0;
    SchnorrSignature ca_signature;
};

/// Revoked serial numbers. Single writer; readers see consistent snapshots.
struct RevocationList {
    std::int64_t issued_at = 0;
    std::set<std::uint64_t> serials;

    bool contains(std::uint64_t serial) const { return serials.count(serial) != 0; }
    void revoke(std::uint64_t serial) { serials.insert(serial); }
};

inline KeyPair keygen(const DomainParams& params, BytesView id, RandomSource& rng) {
    BigInt w = random_scalar(params.n, rng);
    return {w, scalar_mul_wnaf(w, params.g, params), Bytes(id.begin(), id.end())};
}

namespace wire {

/// Canonical certificate body: lp(subject_id) || point(subject_key) ||
/// be64(not_before) || be64(not_after) || be64(serial). This is exactly
/// what the CA signs.
inline Bytes encode_cert_body(const Certificate& cert, const DomainParams& params) {
    Bytes out;
    append_lp(out, cert.subject_id);
    append_bytes(out, encode_point(cert.subject_key, params, false));
    append_be64(out, static_cast<std::uint64_t>(cert.not_before));
    append_be64(out, static_cast<std::uint64_t>(cert.not_after));
    append_be64(out, cert.serial);
    return out;
}

/// Certificate files (.ecc): version || lp(params name) || body || e || s.
inline Bytes encode_certificate(const Certificate& cert, const DomainParams& params) {
    Bytes out;
    out.push_back(kFormatVersion);
    append_lp(out, as_bytes(params.name));
    append_bytes(out, encode_cert_body(cert, params));
    append_bytes(out, encode_scalar(cert.ca_signature.e, params));
    append_bytes(out, encode_scalar(cert.ca_signature.s, params));
    return out;
}

inline Certificate decode_certificate(BytesView bytes, const DomainParams& params) {
    ByteReader r(bytes);
    if (r.u8() != kFormatVersion) throw MalformedError("unsupported certificate version");
    Bytes name = r.lp();
    if (std::string(name.begin(), name.end()) != params.name)
        throw MalformedError("certificate was issued for different domain parameters");
    Certificate cert;
    cert.subject_id = r.lp();
    cert.subject_key = read_point(r, params);
    cert.not_before = static_cast<std::int64_t>(r.be64());
    cert.not_after = static_cast<std::int64_t>(r.be64());
    cert.serial = r.be64();
    cert.ca_signature.e = read_scalar(r, params);
    cert.ca_signature.s = read_scalar(r, params);
    r.expect_done();
    return cert;
}

/// Revocation list files (.crl): version || be64(issued_at) || be32(count)
/// || strictly increasing be64 serials. The ordering requirement keeps the
/// encoding canonical.
inline Bytes encode_crl(const RevocationList& crl) {
    Bytes out;
    out.push_back(kFormatVersion);
    append_be64(out, static_cast<std::uint64_t>(crl.issued_at));
    append_be32(out, static_cast<std::uint32_t>(crl.serials.size()));
    for (std::uint64_t serial : crl.serials) append_be64(out, serial);
    return out;
}

inline RevocationList decode_crl(BytesView bytes) {
    ByteReader r(bytes);
    if (r.u8() != kFormatVersion) throw MalformedError("unsupported CRL version");
    RevocationList crl;
    crl.issued_at = static_cast<std::int64_t>(r.be64());
    std::uint32_t count = r.be32();
    std::uint64_t prev = 0;
    for (std::uint32_t i = 0; i < count; ++i) {
        std::uint64_t serial = r.be64();
        if (i > 0 && serial <= prev)
            throw MalformedError("CRL serials must be strictly increasing");
        prev = serial;
        crl.serials.insert(serial);
    }
    r.expect_done();
    return crl;
}

} // namespace wire

/// Challenge a subject signs to prove possession of its private key at
/// issuance time (stand-in for an interactive zero-knowledge exchange).
inline Bytes possession_challenge(BytesView id, const CurvePoint& key,
                                  const DomainParams& params) {
    Bytes out = as_bytes("ecsc-pop-v1");
    append_lp(out, id);
    append_bytes(out, wire::encode_point(key, params, false));
    return out;
}

inline SchnorrSignature make_possession_proof(const DomainParams& params,
                                              const HashFunction& hash,
                                              const KeyPair& subject,
                                              RandomSource& rng) {
    return schnorr_sign(params, hash,
                        subject.w, possession_challenge(subject.id, subject.W, params),
                        rng);
}

inline bool verify_possession_proof(const DomainParams& params,
                                    const HashFunction& hash, BytesView id,
                                    const CurvePoint& key,
                                    const SchnorrSignature& proof) {
    return schnorr_verify(params, hash, key, possession_challenge(id, key, params),
                          proof);
}

inline Certificate issue_certificate(const DomainParams& params,
                                     const HashFunction& hash, const KeyPair& ca,
                                     BytesView subject_id,
                                     const CurvePoint& subject_key,
                                     std::int64_t not_before,
                                     std::int64_t not_after, std::uint64_t serial,
                                     RandomSource& rng) {
    if (!validate_public_key(subject_key, params))
        throw CertificateError("refusing to certify: subject key is not in the main group");
    Certificate cert;
    cert.subject_id.assign(subject_id.begin(), subject_id.end());
    cert.subject_key = subject_key;
    cert.not_before = not_before;
    cert.not_after = not_after;
    cert.serial = serial;
    cert.ca_signature =
        schnorr_sign(params, hash, ca.w, wire::encode_cert_body(cert, params), rng);
    return cert;
}

struct CertStatus {
    bool ok = false;
    std::string reason; // names the failed sub-check when !ok
};

/// The three certificate-validation sub-checks, in order: CA signature
/// over the body, validity window, revocation.
inline CertStatus check_certificate(const Certificate& cert, const CurvePoint& ca_key,
                                    const RevocationList& crl, std::int64_t now,
                                    const DomainParams& params,
                                    const HashFunction& hash = default_hash()) {
    if (!schnorr_verify(params, hash, ca_key, wire::encode_cert_body(cert, params),
                        cert.ca_signature))
        return {false, "CA signature invalid"};
    if (now < cert.not_before || now > cert.not_after)
        return {false, "certificate expired or not yet valid"};
    if (crl.contains(cert.serial)) return {false, "certificate revoked"};
    return {true, ""};
}

inline bool verify_certificate(const Certificate& cert, const CurvePoint& ca_key,
                               const RevocationList& crl, std::int64_t now,
                               const DomainParams& params,
                               const HashFunction& hash = default_hash()) {
    return check_certificate(cert, ca_key, crl, now, params, hash).ok;
}

} // namespace ecsc
