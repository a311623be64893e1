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
#include <optional>

#include "ecsc/bigint.hpp"
#include "ecsc/errors.hpp"

namespace ecsc {

/// Tallies of field operations, for the cost instrumentation. A counting
/// session is confined to one thread; counts from such a session are exact.
struct OpCounter {
    std::uint64_t mul_count = 0; // multiplications, squarings included
    std::uint64_t add_count = 0; // additions, subtractions and negations
    std::uint64_t inv_count = 0;

    void reset() { mul_count = add_count = inv_count = 0; }
};

/// A residue in F_q, always kept in canonical reduced form [0, q).
/// The modulus lives in the PrimeField context, not in the element.
class FieldElement {
public:
    FieldElement() : v_(0) {}
    explicit FieldElement(BigInt v) : v_(std::move(v)) {}

    const BigInt& value() const { return v_; }
    bool is_zero() const { return v_ == 0; }
    bool is_odd() const { return (v_ & 1) != 0; }

    friend bool operator==(const FieldElement& a, const FieldElement& b) {
        return a.v_ == b.v_;
    }
    friend bool operator!=(const FieldElement& a, const FieldElement& b) {
        return !(a == b);
    }

private:
    BigInt v_;
};

/// Arbitrary-precision arithmetic in F_q for odd prime q, with an optional
/// operation counter.
class PrimeField {
public:
    explicit PrimeField(BigInt modulus) : q_(std::move(modulus)) {
        if (q_ < 2) throw UsageError("field modulus must be at least 2");
        bits_ = ecsc::bit_length(q_);
    }

    const BigInt& modulus() const { return q_; }
    std::size_t bit_length() const { return bits_; }
    std::size_t byte_length() const { return (bits_ + 7) / 8; }

    /// Reduce an arbitrary integer (negative allowed) into canonical form.
    FieldElement element(const BigInt& v) const {
        BigInt r = v % q_;
        if (r < 0) r += q_;
        return FieldElement(r);
    }

    FieldElement zero() const { return FieldElement(BigInt(0)); }
    FieldElement one() const { return element(1); }

    FieldElement add(const FieldElement& a, const FieldElement& b) const {
        check(a);
        check(b);
        if (counter_) ++counter_->add_count;
        BigInt r = a.value() + b.value();
        if (r >= q_) r -= q_;
        return FieldElement(r);
    }

    FieldElement sub(const FieldElement& a, const FieldElement& b) const {
        check(a);
        check(b);
        if (counter_) ++counter_->add_count;
        BigInt r = a.value() - b.value();
        if (r < 0) r += q_;
        return FieldElement(r);
    }

    FieldElement neg(const FieldElement& a) const { return sub(zero(), a); }

    FieldElement mul(const FieldElement& a, const FieldElement& b) const {
        check(a);
        check(b);
        if (counter_) ++counter_->mul_count;
        return FieldElement((a.value() * b.value()) % q_);
    }

    FieldElement sqr(const FieldElement& a) const { return mul(a, a); }

    /// Modular inverse by extended Euclid. Counted as a single inversion
    /// regardless of internal steps.
    FieldElement inv(const FieldElement& a) const {
        check(a);
        if (a.is_zero()) throw DivisionByZeroError("inverse of zero in F_q");
        if (counter_) ++counter_->inv_count;
        BigInt old_r = a.value(), r = q_;
        BigInt old_s = 1, s = 0;
        while (r != 0) {
            BigInt quotient = old_r / r;
            BigInt tmp = old_r - quotient * r;
            old_r = r;
            r = tmp;
            tmp = old_s - quotient * s;
            old_s = s;
            s = tmp;
        }
        // old_r == gcd(a, q) == 1 for prime q and a != 0
        if (old_r != 1) throw UsageError("element not invertible; modulus is not prime");
        if (old_s < 0) old_s += q_;
        return FieldElement(old_s);
    }

    /// Square root when it exists: fast exponent for q = 3 (mod 4),
    /// Tonelli-Shanks otherwise. Of the two roots, returns the one with
    /// even canonical value so compressed encodings are deterministic.
    std::optional<FieldElement> sqrt(const FieldElement& a) const {
        check(a);
        if (a.is_zero()) return zero();
        const BigInt& x = a.value();
        using boost::multiprecision::powm;
        if (powm(x, (q_ - 1) / 2, q_) != 1) return std::nullopt;

        BigInt r;
        if (q_ % 4 == 3) {
            r = powm(x, (q_ + 1) / 4, q_);
        } else {
            r = tonelli_shanks(x);
        }
        if ((r & 1) != 0) r = q_ - r;
        return FieldElement(r);
    }

    /// The counter pointer is mutable state on an otherwise immutable
    /// context; attach on a private copy of the field when measuring.
    void attach_counter(OpCounter* c) const { counter_ = c; }
    OpCounter* counter() const { return counter_; }

private:
    void check(const FieldElement& a) const {
        if (a.value() < 0 || a.value() >= q_)
            throw UsageError("field element out of range; mismatched moduli?");
    }

    BigInt tonelli_shanks(const BigInt& a) const {
        using boost::multiprecision::powm;
        BigInt q1 = q_ - 1;
        unsigned s = 0;
        while (q1 % 2 == 0) {
            q1 >>= 1;
            ++s;
        }
        BigInt z = 2;
        while (powm(z, (q_ - 1) / 2, q_) != q_ - 1) ++z;
        BigInt m = s;
        BigInt c = powm(z, q1, q_);
        BigInt t = powm(a, q1, q_);
        BigInt r = powm(a, (q1 + 1) / 2, q_);
        while (t != 1) {
            BigInt t2 = t;
            unsigned i = 0;
            while (t2 != 1) {
                t2 = (t2 * t2) % q_;
                ++i;
            }
            BigInt b = c;
            for (BigInt j = 0; j < m - i - 1; ++j) b = (b * b) % q_;
            m = i;
            c = (b * b) % q_;
            t = (t * c) % q_;
            r = (r * b) % q_;
        }
        return r;
    }

    BigInt q_;
    std::size_t bits_;
    mutable OpCounter* counter_ = nullptr;
};

} // namespace ecsc
