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
#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "test_util.hpp"

using namespace ecsc;
using ecsc::test::FixedBytesSource;
using ecsc::test::PkiFixture;

TEST_CASE("keygen with a forced private scalar") {
    const DomainParams& tp = tiny17();
    FixedBytesSource rng{0x07};
    KeyPair kp = keygen(tp, as_bytes("alice"), rng);
    CHECK(kp.w == 7);
    CHECK(kp.W == scalar_mul_naive(7, tp.g, tp));
    CHECK(validate_public_key(kp.W, tp));
}

TEST_CASE("keygen rejects out-of-range draws") {
    const DomainParams& tp = tiny17();
    FixedBytesSource rng{0x00, 0x07}; // 0 is rejected, 7 accepted
    KeyPair kp = keygen(tp, as_bytes("alice"), rng);
    CHECK(kp.w == 7);
}

TEST_CASE("exhaustive tiny17 keyspace yields distinct valid keys") {
    const DomainParams& tp = tiny17();
    std::set<std::pair<BigInt, BigInt>> seen;
    for (std::uint8_t w = 1; w <= 18; ++w) {
        FixedBytesSource rng{w};
        KeyPair kp = keygen(tp, as_bytes("id"), rng);
        CHECK(validate_public_key(kp.W, tp));
        seen.insert({kp.W.x().value(), kp.W.y().value()});
    }
    CHECK(seen.size() == 18);
}

TEST_CASE("keygen on the benchmark curve produces valid keys") {
    const DomainParams& pp = p192();
    SystemRandomSource rng;
    for (int i = 0; i < 3; ++i) {
        KeyPair kp = keygen(pp, as_bytes("x"), rng);
        CHECK(kp.w >= 1);
        CHECK(kp.w < pp.n);
        CHECK(validate_public_key(kp.W, pp));
    }
}

TEST_CASE("issue and verify a certificate") {
    const DomainParams& tp = tiny17();
    PkiFixture fx(tp);

    CHECK(verify_certificate(fx.cert_a, fx.ca.W, fx.crl, fx.now, tp));
    CHECK(verify_certificate(fx.cert_b, fx.ca.W, fx.crl, fx.now, tp));

    SECTION("expiry is enforced") {
        CHECK_FALSE(verify_certificate(fx.cert_a, fx.ca.W, fx.crl,
                                       fx.cert_a.not_after + 1, tp));
        CHECK_FALSE(verify_certificate(fx.cert_a, fx.ca.W, fx.crl,
                                       fx.cert_a.not_before - 1, tp));
        CertStatus status = check_certificate(fx.cert_a, fx.ca.W, fx.crl,
                                              fx.cert_a.not_after + 1, tp);
        CHECK(status.reason.find("expired") != std::string::npos);
    }

    SECTION("revocation is enforced") {
        RevocationList crl;
        crl.revoke(fx.cert_a.serial);
        CHECK_FALSE(verify_certificate(fx.cert_a, fx.ca.W, crl, fx.now, tp));
        CertStatus status = check_certificate(fx.cert_a, fx.ca.W, crl, fx.now, tp);
        CHECK(status.reason.find("revoked") != std::string::npos);
    }

    // binding assertions run on p192: the challenge scalar carries only
    // log2(n) bits, so a tiny group admits lucky forgeries at rate ~1/n
    SECTION("the signature binds the subject identifier") {
        const DomainParams& pp = p192();
        PkiFixture big(pp);
        Certificate forged = big.cert_a;
        forged.subject_id[0] ^= 0x01;
        CHECK_FALSE(verify_certificate(forged, big.ca.W, big.crl, big.now, pp));
    }

    SECTION("a different CA key does not verify") {
        CHECK_FALSE(verify_certificate(fx.cert_a, fx.alice.W, fx.crl, fx.now, tp));
    }
}

TEST_CASE("issuance refuses invalid subject keys") {
    const DomainParams& tp = tiny17();
    InsecureSeededSource rng(3);
    KeyPair ca = keygen(tp, as_bytes("ca"), rng);
    CHECK_THROWS_AS(issue_certificate(tp, default_hash(), ca, as_bytes("x"),
                                      CurvePoint::infinity(), 0, 10, 1, rng),
                    CertificateError);
    CurvePoint off_curve(tp.field.element(5), tp.field.element(2));
    CHECK_THROWS_AS(issue_certificate(tp, default_hash(), ca, as_bytes("x"),
                                      off_curve, 0, 10, 2, rng),
                    CertificateError);
}

TEST_CASE("every single-bit mutation of an encoded certificate fails") {
    const DomainParams& pp = p192();
    PkiFixture fx(pp);
    Bytes enc = wire::encode_certificate(fx.cert_a, pp);

    REQUIRE(verify_certificate(wire::decode_certificate(enc, pp), fx.ca.W, fx.crl,
                               fx.now, pp));
    for (std::size_t byte = 0; byte < enc.size(); ++byte) {
        for (int bit = 0; bit < 8; ++bit) {
            Bytes mutated = enc;
            mutated[byte] ^= static_cast<std::uint8_t>(1 << bit);
            bool accepted = false;
            try {
                Certificate cert = wire::decode_certificate(mutated, pp);
                accepted = verify_certificate(cert, fx.ca.W, fx.crl, fx.now, pp);
            } catch (const MalformedError&) {
                accepted = false;
            }
            REQUIRE_FALSE(accepted);
        }
    }
}

TEST_CASE("possession proofs bind identifier and key") {
    const DomainParams& tp = tiny17();
    InsecureSeededSource rng(9);
    KeyPair alice = keygen(tp, as_bytes("alice"), rng);
    KeyPair eve = keygen(tp, as_bytes("eve"), rng);

    SchnorrSignature proof = make_possession_proof(tp, default_hash(), alice, rng);
    CHECK(verify_possession_proof(tp, default_hash(), alice.id, alice.W, proof));
    CHECK_FALSE(verify_possession_proof(tp, default_hash(), as_bytes("mallory"),
                                        alice.W, proof));
    CHECK_FALSE(verify_possession_proof(tp, default_hash(), alice.id, eve.W, proof));
}

TEST_CASE("schnorr signatures verify and reject tampering") {
    const DomainParams& pp = p192();
    InsecureSeededSource rng(10);
    KeyPair signer = keygen(pp, as_bytes("s"), rng);
    Bytes msg = as_bytes("message to sign");

    SchnorrSignature sig = schnorr_sign(pp, default_hash(), signer.w, msg, rng);
    CHECK(schnorr_verify(pp, default_hash(), signer.W, msg, sig));

    Bytes other = as_bytes("message to sigN");
    CHECK_FALSE(schnorr_verify(pp, default_hash(), signer.W, other, sig));

    SchnorrSignature bad = sig;
    bad.s = (bad.s + 1) % pp.n;
    CHECK_FALSE(schnorr_verify(pp, default_hash(), signer.W, msg, bad));
    bad = sig;
    bad.e = (bad.e + 1) % pp.n;
    CHECK_FALSE(schnorr_verify(pp, default_hash(), signer.W, msg, bad));
    bad = sig;
    bad.s = pp.n; // out of range
    CHECK_FALSE(schnorr_verify(pp, default_hash(), signer.W, msg, bad));
}
