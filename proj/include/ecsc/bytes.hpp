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
#include <span>
#include <string>
#include <vector>

#include "ecsc/errors.hpp"

namespace ecsc {

using Bytes = std::vector<std::uint8_t>;
using BytesView = std::span<const std::uint8_t>;

inline void append_bytes(Bytes& out, BytesView b) {
    out.insert(out.end(), b.begin(), b.end());
}

inline void append_be32(Bytes& out, std::uint32_t v) {
    out.push_back(static_cast<std::uint8_t>(v >> 24));
    out.push_back(static_cast<std::uint8_t>(v >> 16));
    out.push_back(static_cast<std::uint8_t>(v >> 8));
    out.push_back(static_cast<std::uint8_t>(v));
}

inline void append_be64(Bytes& out, std::uint64_t v) {
    for (int shift = 56; shift >= 0; shift -= 8)
        out.push_back(static_cast<std::uint8_t>(v >> shift));
}

/// Length-prefixed bytes: 4-byte big-endian count followed by the bytes.
/// Keeps concatenations of variable-length fields injective.
inline void append_lp(Bytes& out, BytesView b) {
    append_be32(out, static_cast<std::uint32_t>(b.size()));
    append_bytes(out, b);
}

inline Bytes be32(std::uint32_t v) {
    Bytes out;
    append_be32(out, v);
    return out;
}

inline Bytes as_bytes(const std::string& s) {
    return Bytes(s.begin(), s.end());
}

/// Bounds-checked sequential reader over an immutable byte buffer.
/// Throws MalformedError on any attempt to read past the end.
class ByteReader {
public:
    explicit ByteReader(BytesView data) : data_(data) {}

    std::size_t remaining() const { return data_.size() - pos_; }
    bool done() const { return pos_ == data_.size(); }

    std::uint8_t u8() {
        need(1);
        return data_[pos_++];
    }

    std::uint32_t be32() {
        need(4);
        std::uint32_t v = 0;
        for (int i = 0; i < 4; ++i) v = (v << 8) | data_[pos_++];
        return v;
    }

    std::uint64_t be64() {
        need(8);
        std::uint64_t v = 0;
        for (int i = 0; i < 8; ++i) v = (v << 8) | data_[pos_++];
        return v;
    }

    Bytes take(std::size_t n) {
        need(n);
        Bytes out(data_.begin() + pos_, data_.begin() + pos_ + n);
        pos_ += n;
        return out;
    }

    Bytes lp() {
        std::uint32_t n = be32();
        return take(n);
    }

    /// Decoders call this last so trailing garbage is rejected and every
    /// accepted encoding is canonical.
    void expect_done() const {
        if (!done()) throw MalformedError("trailing bytes after encoded value");
    }

private:
    void need(std::size_t n) const {
        if (remaining() < n) throw MalformedError("truncated encoding");
    }

    BytesView data_;
    std::size_t pos_ = 0;
};

inline std::string to_hex(BytesView b) {
    static const char digits[] = "0123456789abcdef";
    std::string out;
    out.reserve(b.size() * 2);
    for (std::uint8_t v : b) {
        out.push_back(digits[v >> 4]);
        out.push_back(digits[v & 0xF]);
    }
    return out;
}

inline Bytes from_hex(const std::string& s) {
    auto nibble = [](char c) -> int {
        if (c >= '0' && c <= '9') return c - '0';
        if (c >= 'a' && c <= 'f') return c - 'a' + 10;
        if (c >= 'A' && c <= 'F') return c - 'A' + 10;
        return -1;
    };
    std::string filtered;
    for (char c : s)
        if (c != ' ' && c != '\n' && c != '\r' && c != '\t') filtered.push_back(c);
    if (filtered.size() % 2 != 0) throw MalformedError("odd-length hex string");
    Bytes out;
    out.reserve(filtered.size() / 2);
    for (std::size_t i = 0; i < filtered.size(); i += 2) {
        int hi = nibble(filtered[i]);
        int lo = nibble(filtered[i + 1]);
        if (hi < 0 || lo < 0) throw MalformedError("invalid hex digit");
        out.push_back(static_cast<std::uint8_t>((hi << 4) | lo));
    }
    return out;
}

} // namespace ecsc
