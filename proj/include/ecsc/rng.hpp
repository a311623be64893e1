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

#include <cstdio>
#include <memory>

#include "ecsc/bigint.hpp"
#include "ecsc/bytes.hpp"
#include "ecsc/errors.hpp"
#include "ecsc/hash.hpp"

namespace ecsc {

/// Source of random bytes, injected into every randomized operation so
/// tests can force specific draws.
class RandomSource {
public:
    virtual ~RandomSource() = default;
    virtual void fill(std::uint8_t* out, std::size_t len) = 0;

    Bytes bytes(std::size_t len) {
        Bytes out(len);
        if (len > 0) fill(out.data(), len);
        return out;
    }
};

/// OS entropy from /dev/urandom.
class SystemRandomSource final : public RandomSource {
public:
    SystemRandomSource() : f_(std::fopen("/dev/urandom", "rb")) {
        if (!f_) throw Error("cannot open /dev/urandom");
    }
    ~SystemRandomSource() override {
        if (f_) std::fclose(f_);
    }
    SystemRandomSource(const SystemRandomSource&) = delete;
    SystemRandomSource& operator=(const SystemRandomSource&) = delete;

    void fill(std::uint8_t* out, std::size_t len) override {
        if (len > 0 && std::fread(out, 1, len, f_) != len)
            throw Error("short read from /dev/urandom");
    }

private:
    std::FILE* f_;
};

/// Deterministic stream: block i is H(seed || be32(i)). NOT a secure
/// generator; exists for reproducible tests and the CLI's loudly named
/// --insecure-seed flag.
class InsecureSeededSource final : public RandomSource {
public:
    explicit InsecureSeededSource(std::uint64_t seed,
                                  const HashFunction& hash = default_hash())
        : hash_(hash) {
        append_be64(seed_, seed);
    }

    explicit InsecureSeededSource(Bytes seed,
                                  const HashFunction& hash = default_hash())
        : hash_(hash), seed_(std::move(seed)) {}

    void fill(std::uint8_t* out, std::size_t len) override {
        std::size_t pos = 0;
        while (pos < len) {
            if (buf_pos_ == buf_.size()) {
                Bytes input = seed_;
                append_be32(input, counter_++);
                buf_ = hash_.digest(input);
                buf_pos_ = 0;
            }
            out[pos++] = buf_[buf_pos_++];
        }
    }

private:
    const HashFunction& hash_;
    Bytes seed_;
    Bytes buf_;
    std::size_t buf_pos_ = 0;
    std::uint32_t counter_ = 0;
};

/// Uniform scalar in [1, bound-1] by rejection sampling: draw ceil(f/8)
/// bytes, mask down to f = bitlen(bound) bits, reject out-of-range values.
inline BigInt random_scalar(const BigInt& bound, RandomSource& rng) {
    if (bound < 2) throw UsageError("scalar bound must exceed 1");
    const std::size_t f = bit_length(bound);
    const std::size_t nbytes = (f + 7) / 8;
    const unsigned excess = static_cast<unsigned>(nbytes * 8 - f);
    for (int attempts = 0; attempts < 10000; ++attempts) {
        Bytes buf = rng.bytes(nbytes);
        buf[0] &= static_cast<std::uint8_t>(0xFF >> excess);
        BigInt v = bytes_to_bigint(buf);
        if (v >= 1 && v < bound) return v;
    }
    throw Error("random scalar rejection sampling did not terminate");
}

} // namespace ecsc
