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

#include "ecsc/bytes.hpp"
#include "ecsc/errors.hpp"
#include "ecsc/hash.hpp"

namespace ecsc {

/// Symmetric cipher seam. decrypt(k, encrypt(k, m)) == m for every m,
/// including the empty message. A standardized block cipher can be plugged
/// in behind this interface.
class SymmetricCipher {
public:
    virtual ~SymmetricCipher() = default;
    virtual std::string name() const = 0;
    virtual std::size_t key_length_bytes() const = 0;
    virtual Bytes encrypt(BytesView key, BytesView msg) const = 0;
    virtual Bytes decrypt(BytesView key, BytesView ct) const = 0;
};

/// Deterministic counter-mode stream cipher over a hash: keystream block i
/// is H(key || be32(i)) and the message is XORed with the truncated stream.
/// Dependency-free reference cipher for reproducible tests.
class HashCtrCipher final : public SymmetricCipher {
public:
    explicit HashCtrCipher(const HashFunction& hash = default_hash(),
                           std::size_t key_len_bytes = 16)
        : hash_(hash), key_len_(key_len_bytes) {}

    std::string name() const override { return "hashctr-" + hash_.name(); }
    std::size_t key_length_bytes() const override { return key_len_; }

    Bytes encrypt(BytesView key, BytesView msg) const override {
        return apply(key, msg);
    }

    Bytes decrypt(BytesView key, BytesView ct) const override {
        return apply(key, ct);
    }

private:
    Bytes apply(BytesView key, BytesView data) const {
        if (key.size() != key_len_)
            throw UsageError("cipher key has the wrong length");
        Bytes out(data.begin(), data.end());
        std::size_t pos = 0;
        std::uint32_t counter = 0;
        while (pos < out.size()) {
            Bytes block_input(key.begin(), key.end());
            append_be32(block_input, counter++);
            Bytes ks = hash_.digest(block_input);
            for (std::size_t i = 0; i < ks.size() && pos < out.size(); ++i, ++pos)
                out[pos] ^= ks[i];
        }
        return out;
    }

    const HashFunction& hash_;
    std::size_t key_len_;
};

inline const SymmetricCipher& default_cipher() {
    static const HashCtrCipher c;
    return c;
}

} // namespace ecsc
