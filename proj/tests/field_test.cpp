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

#include "ecsc/field.hpp"
#include "ecsc/params.hpp"
#include "ecsc/rng.hpp"

using namespace ecsc;

namespace {

FieldElement random_element(const PrimeField& fq, RandomSource& rng) {
    return fq.element(bytes_to_bigint(rng.bytes(fq.byte_length() + 4)));
}

} // namespace

TEST_CASE("addition and subtraction mod 17") {
    PrimeField fq(BigInt(17));
    CHECK(fq.add(fq.element(5), fq.element(15)) == fq.element(3));
    CHECK(fq.add(fq.element(0), fq.element(9)) == fq.element(9));
    CHECK(fq.add(fq.element(16), fq.element(1)) == fq.element(0));
    CHECK(fq.sub(fq.element(3), fq.element(5)) == fq.element(15));
    CHECK(fq.neg(fq.element(1)) == fq.element(16));
    CHECK(fq.neg(fq.zero()) == fq.zero());
}

TEST_CASE("multiplication mod 17") {
    PrimeField fq(BigInt(17));
    CHECK(fq.mul(fq.element(3), fq.element(6)) == fq.element(1));
    CHECK(fq.mul(fq.element(1), fq.element(13)) == fq.element(13));
    CHECK(fq.mul(fq.element(13), fq.element(13)) == fq.element(16));
    CHECK(fq.sqr(fq.element(13)) == fq.element(16));
}

TEST_CASE("inversion mod 17") {
    PrimeField fq(BigInt(17));
    CHECK(fq.inv(fq.element(2)) == fq.element(9));
    CHECK(fq.inv(fq.element(1)) == fq.element(1));
    CHECK(fq.inv(fq.element(16)) == fq.element(16));
    CHECK_THROWS_AS(fq.inv(fq.zero()), DivisionByZeroError);

    for (int a = 1; a < 17; ++a)
        CHECK(fq.mul(fq.element(a), fq.inv(fq.element(a))) == fq.one());
}

TEST_CASE("inversion on the benchmark field") {
    const PrimeField& fq = p192().field;
    InsecureSeededSource rng(11);
    for (int i = 0; i < 50; ++i) {
        FieldElement a = random_element(fq, rng);
        if (a.is_zero()) continue;
        CHECK(fq.mul(a, fq.inv(a)) == fq.one());
    }
}

TEST_CASE("square roots mod 17 against the exhaustive square table") {
    PrimeField fq(BigInt(17));
    CHECK(fq.sqrt(fq.element(13)) == fq.element(8));
    CHECK(fq.sqrt(fq.element(0)) == fq.element(0));
    CHECK(!fq.sqrt(fq.element(3)).has_value());

    std::set<int> squares;
    for (int y = 0; y < 17; ++y) squares.insert(y * y % 17);
    for (int a = 0; a < 17; ++a) {
        auto root = fq.sqrt(fq.element(a));
        if (squares.count(a)) {
            REQUIRE(root.has_value());
            CHECK(fq.sqr(*root) == fq.element(a));
            // even-root convention
            CHECK(root->value() % 2 == 0);
        } else {
            CHECK(!root.has_value());
        }
    }
}

TEST_CASE("square roots on the benchmark field") {
    const PrimeField& fq = p192().field;
    InsecureSeededSource rng(12);
    for (int i = 0; i < 25; ++i) {
        FieldElement x = random_element(fq, rng);
        FieldElement sq = fq.sqr(x);
        auto root = fq.sqrt(sq);
        REQUIRE(root.has_value());
        CHECK(fq.sqr(*root) == sq);
        CHECK(root->value() % 2 == 0);
    }
}

TEST_CASE("field axioms hold on random triples") {
    const BigInt moduli[] = {BigInt(17), p192().field.modulus()};
    for (const BigInt& q : moduli) {
        PrimeField fq(q);
        InsecureSeededSource rng(99);
        for (int i = 0; i < 10000; ++i) {
            FieldElement a = random_element(fq, rng);
            FieldElement b = random_element(fq, rng);
            FieldElement c = random_element(fq, rng);
            REQUIRE(fq.add(fq.add(a, b), c) == fq.add(a, fq.add(b, c)));
            REQUIRE(fq.add(a, b) == fq.add(b, a));
            REQUIRE(fq.mul(fq.mul(a, b), c) == fq.mul(a, fq.mul(b, c)));
            REQUIRE(fq.mul(a, b) == fq.mul(b, a));
            REQUIRE(fq.mul(a, fq.add(b, c)) == fq.add(fq.mul(a, b), fq.mul(a, c)));
            // canonical form
            REQUIRE(fq.mul(a, b).value() < q);
            REQUIRE(fq.add(a, b).value() < q);
            REQUIRE(fq.sub(a, b).value() < q);
        }
    }
}

TEST_CASE("op counter is exact within a session") {
    PrimeField fq(BigInt(17));
    OpCounter counter;
    fq.attach_counter(&counter);

    FieldElement a = fq.element(5), b = fq.element(7);
    for (int i = 0; i < 137; ++i) fq.mul(a, b);
    CHECK(counter.mul_count == 137);
    CHECK(counter.add_count == 0);
    CHECK(counter.inv_count == 0);

    for (int i = 0; i < 9; ++i) fq.add(a, b);
    for (int i = 0; i < 4; ++i) fq.sub(a, b);
    fq.inv(b);
    CHECK(counter.add_count == 13);
    CHECK(counter.inv_count == 1);

    counter.reset();
    CHECK(counter.mul_count == 0);

    fq.attach_counter(nullptr);
    fq.mul(a, b);
    CHECK(counter.mul_count == 0);
}

TEST_CASE("operands from another field are rejected") {
    PrimeField fq(BigInt(17));
    FieldElement foreign(BigInt(100)); // reduced mod some larger modulus
    CHECK_THROWS_AS(fq.add(fq.element(3), foreign), UsageError);
    CHECK_THROWS_AS(fq.mul(foreign, fq.element(3)), UsageError);
}

TEST_CASE("modulus below 2 is rejected") {
    CHECK_THROWS_AS(PrimeField(BigInt(1)), UsageError);
    CHECK_THROWS_AS(PrimeField(BigInt(0)), UsageError);
}
