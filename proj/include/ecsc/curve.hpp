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
#include <string>
#include <utility>
#include <vector>

#include "ecsc/bigint.hpp"
#include "ecsc/errors.hpp"
#include "ecsc/field.hpp"

namespace ecsc {

/// Affine point on a short-Weierstrass curve, or the identity O.
class CurvePoint {
public:
    CurvePoint() : inf_(true) {}
    CurvePoint(FieldElement x, FieldElement y)
        : inf_(false), x_(std::move(x)), y_(std::move(y)) {}

    static CurvePoint infinity() { return CurvePoint(); }

    bool is_infinity() const { return inf_; }
    const FieldElement& x() const {
        if (inf_) throw UsageError("the identity has no coordinates");
        return x_;
    }
    const FieldElement& y() const {
        if (inf_) throw UsageError("the identity has no coordinates");
        return y_;
    }

    friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
        if (a.inf_ || b.inf_) return a.inf_ == b.inf_;
        return a.x_ == b.x_ && a.y_ == b.y_;
    }
    friend bool operator!=(const CurvePoint& a, const CurvePoint& b) {
        return !(a == b);
    }

private:
    bool inf_;
    FieldElement x_, y_;
};

/// Domain parameters (q, a, b, G, n, h) of a prime-order subgroup, plus the
/// derived bit length f of n.
struct DomainParams {
    std::string name;
    PrimeField field; // F_q
    FieldElement a, b;
    CurvePoint g;
    BigInt n;
    std::uint32_t h = 1;
    unsigned f = 0;           // bit length of n
    bool a_is_minus3 = false; // enables the short doubling formula

    DomainParams(std::string name_, BigInt q, const BigInt& a_, const BigInt& b_,
                 const BigInt& gx, const BigInt& gy, BigInt n_, std::uint32_t h_)
        : name(std::move(name_)),
          field(std::move(q)),
          a(field.element(a_)),
          b(field.element(b_)),
          g(field.element(gx), field.element(gy)),
          n(std::move(n_)),
          h(h_),
          f(static_cast<unsigned>(bit_length(n))),
          a_is_minus3(a == field.element(field.modulus() - 3)) {}

    std::size_t scalar_bytes() const { return (bit_length(n) + 7) / 8; }
};

inline bool on_curve(const CurvePoint& p, const DomainParams& params) {
    if (p.is_infinity()) return true;
    const PrimeField& fq = params.field;
    FieldElement lhs = fq.sqr(p.y());
    FieldElement x3 = fq.mul(fq.sqr(p.x()), p.x());
    FieldElement rhs = fq.add(fq.add(x3, fq.mul(params.a, p.x())), params.b);
    return lhs == rhs;
}

inline CurvePoint point_neg(const CurvePoint& p, const DomainParams& params) {
    if (p.is_infinity()) return p;
    return CurvePoint(p.x(), params.field.neg(p.y()));
}

/// Chord-tangent group law in affine coordinates. Reference path; operands
/// are checked against the curve equation and rejected if off-curve.
inline CurvePoint point_add(const CurvePoint& p, const CurvePoint& q,
                            const DomainParams& params) {
    if (!on_curve(p, params) || !on_curve(q, params))
        throw UsageError("point_add operand is not on the curve");
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;

    const PrimeField& fq = params.field;
    FieldElement lambda;
    if (p.x() == q.x()) {
        if (p.y() != q.y() || p.y().is_zero()) return CurvePoint::infinity();
        // tangent: (3x^2 + a) / 2y
        FieldElement x2 = fq.sqr(p.x());
        FieldElement num = fq.add(fq.add(x2, x2), fq.add(x2, params.a));
        FieldElement den = fq.add(p.y(), p.y());
        lambda = fq.mul(num, fq.inv(den));
    } else {
        lambda = fq.mul(fq.sub(q.y(), p.y()), fq.inv(fq.sub(q.x(), p.x())));
    }
    FieldElement x3 = fq.sub(fq.sub(fq.sqr(lambda), p.x()), q.x());
    FieldElement y3 = fq.sub(fq.mul(lambda, fq.sub(p.x(), x3)), p.y());
    return CurvePoint(x3, y3);
}

/// Plain double-and-add over affine points. Slow and simple; serves as the
/// oracle for every optimized path.
inline CurvePoint scalar_mul_naive(const BigInt& k, const CurvePoint& p,
                                   const DomainParams& params) {
    if (k < 0) throw UsageError("scalar must be nonnegative");
    if (k == 0 || p.is_infinity()) return CurvePoint::infinity();
    CurvePoint acc = CurvePoint::infinity();
    for (std::size_t i = bit_length(k); i-- > 0;) {
        acc = point_add(acc, acc, params);
        if (boost::multiprecision::bit_test(k, static_cast<unsigned>(i)))
            acc = point_add(acc, p, params);
    }
    return acc;
}

/// Width-w non-adjacent form: signed digits d with sum(d_i 2^i) = k, every
/// nonzero digit odd with |d| < 2^(w-1), and at most one nonzero digit in
/// any w consecutive positions. Least significant digit first.
inline std::vector<std::int8_t> wnaf_recode(BigInt k, unsigned w) {
    if (w < 2 || w > 8) throw UsageError("wNAF width must be in [2, 8]");
    if (k < 1) throw UsageError("wNAF recoding requires a positive scalar");
    const BigInt window = BigInt(1) << w;
    const BigInt half = BigInt(1) << (w - 1);
    std::vector<std::int8_t> digits;
    while (k > 0) {
        if ((k & 1) != 0) {
            BigInt d = k % window;
            if (d >= half) d -= window;
            digits.push_back(static_cast<std::int8_t>(d));
            k -= d;
        } else {
            digits.push_back(0);
        }
        k >>= 1;
    }
    return digits;
}

/// Jacobian projective point: x = X/Z^2, y = Y/Z^3, Z = 0 encodes O.
struct JacobianPoint {
    FieldElement X, Y, Z;

    bool is_infinity() const { return Z.is_zero(); }
};

inline JacobianPoint jac_from_affine(const CurvePoint& p, const DomainParams& params) {
    if (p.is_infinity())
        return {params.field.one(), params.field.one(), params.field.zero()};
    return {p.x(), p.y(), params.field.one()};
}

inline CurvePoint jac_to_affine(const JacobianPoint& p, const DomainParams& params) {
    if (p.is_infinity()) return CurvePoint::infinity();
    const PrimeField& fq = params.field;
    if (p.Z == fq.one()) return CurvePoint(p.X, p.Y);
    FieldElement zi = fq.inv(p.Z);
    FieldElement zi2 = fq.sqr(zi);
    return CurvePoint(fq.mul(p.X, zi2), fq.mul(p.Y, fq.mul(zi2, zi)));
}

inline JacobianPoint jac_double(const JacobianPoint& p, const DomainParams& params) {
    const PrimeField& fq = params.field;
    if (p.is_infinity() || p.Y.is_zero())
        return {fq.one(), fq.one(), fq.zero()};

    FieldElement ysq = fq.sqr(p.Y);
    FieldElement s = fq.mul(p.X, ysq);
    s = fq.add(s, s);
    s = fq.add(s, s); // s = 4*X*Y^2

    FieldElement m;
    FieldElement zsq = fq.sqr(p.Z);
    if (params.a_is_minus3) {
        // a = -3: m = 3(X - Z^2)(X + Z^2)
        FieldElement t = fq.mul(fq.sub(p.X, zsq), fq.add(p.X, zsq));
        m = fq.add(fq.add(t, t), t);
    } else {
        FieldElement xsq = fq.sqr(p.X);
        m = fq.add(fq.add(xsq, xsq), xsq);
        m = fq.add(m, fq.mul(params.a, fq.sqr(zsq)));
    }

    FieldElement x3 = fq.sub(fq.sub(fq.sqr(m), s), s);
    FieldElement ysq2 = fq.sqr(ysq);
    FieldElement y8 = fq.add(ysq2, ysq2);
    y8 = fq.add(y8, y8);
    y8 = fq.add(y8, y8); // 8*Y^4
    FieldElement y3 = fq.sub(fq.mul(m, fq.sub(s, x3)), y8);
    FieldElement z3 = fq.mul(p.Y, p.Z);
    z3 = fq.add(z3, z3);
    return {x3, y3, z3};
}

/// Full Jacobian-Jacobian addition with explicit dispatch for the
/// exceptional cases (either operand O, P = Q, P = -Q).
inline JacobianPoint jac_add(const JacobianPoint& p, const JacobianPoint& q,
                             const DomainParams& params) {
    const PrimeField& fq = params.field;
    if (p.is_infinity()) return q;
    if (q.is_infinity()) return p;

    FieldElement z1sq = fq.sqr(p.Z);
    FieldElement z2sq = fq.sqr(q.Z);
    FieldElement u1 = fq.mul(p.X, z2sq);
    FieldElement u2 = fq.mul(q.X, z1sq);
    FieldElement s1 = fq.mul(p.Y, fq.mul(z2sq, q.Z));
    FieldElement s2 = fq.mul(q.Y, fq.mul(z1sq, p.Z));
    FieldElement hcoord = fq.sub(u2, u1);
    FieldElement r = fq.sub(s2, s1);
    if (hcoord.is_zero()) {
        if (r.is_zero()) return jac_double(p, params);
        return {fq.one(), fq.one(), fq.zero()};
    }
    FieldElement hsq = fq.sqr(hcoord);
    FieldElement hcu = fq.mul(hcoord, hsq);
    FieldElement v = fq.mul(u1, hsq);
    FieldElement x3 = fq.sub(fq.sub(fq.sqr(r), hcu), fq.add(v, v));
    FieldElement y3 = fq.sub(fq.mul(r, fq.sub(v, x3)), fq.mul(s1, hcu));
    FieldElement z3 = fq.mul(fq.mul(p.Z, q.Z), hcoord);
    return {x3, y3, z3};
}

/// Mixed addition (Jacobian + affine), the fast path of the wNAF loop.
inline JacobianPoint jac_add_mixed(const JacobianPoint& p, const CurvePoint& q,
                                   const DomainParams& params) {
    const PrimeField& fq = params.field;
    if (q.is_infinity()) return p;
    if (p.is_infinity()) return jac_from_affine(q, params);

    FieldElement z1sq = fq.sqr(p.Z);
    FieldElement u2 = fq.mul(q.x(), z1sq);
    FieldElement s2 = fq.mul(q.y(), fq.mul(z1sq, p.Z));
    FieldElement hcoord = fq.sub(u2, p.X);
    FieldElement r = fq.sub(s2, p.Y);
    if (hcoord.is_zero()) {
        if (r.is_zero()) return jac_double(p, params);
        return {fq.one(), fq.one(), fq.zero()};
    }
    FieldElement hsq = fq.sqr(hcoord);
    FieldElement hcu = fq.mul(hcoord, hsq);
    FieldElement v = fq.mul(p.X, hsq);
    FieldElement x3 = fq.sub(fq.sub(fq.sqr(r), hcu), fq.add(v, v));
    FieldElement y3 = fq.sub(fq.mul(r, fq.sub(v, x3)), fq.mul(p.Y, hcu));
    FieldElement z3 = fq.mul(p.Z, hcoord);
    return {x3, y3, z3};
}

namespace detail {

/// Montgomery's batch-inversion trick: normalizes the precomputed odd
/// multiples to affine with one field inversion. Entries at infinity are
/// skipped (possible only for composite-order base points).
inline std::vector<CurvePoint> normalize_all(const std::vector<JacobianPoint>& pts,
                                             const DomainParams& params) {
    const PrimeField& fq = params.field;
    std::vector<CurvePoint> out(pts.size());
    std::vector<std::size_t> live;
    std::vector<FieldElement> prefix;
    for (std::size_t i = 0; i < pts.size(); ++i) {
        if (pts[i].is_infinity()) {
            out[i] = CurvePoint::infinity();
            continue;
        }
        live.push_back(i);
        prefix.push_back(prefix.empty() ? pts[i].Z : fq.mul(prefix.back(), pts[i].Z));
    }
    if (live.empty()) return out;
    FieldElement acc = fq.inv(prefix.back());
    for (std::size_t j = live.size(); j-- > 0;) {
        std::size_t i = live[j];
        FieldElement zinv = (j == 0) ? acc : fq.mul(prefix[j - 1], acc);
        if (j > 0) acc = fq.mul(acc, pts[i].Z);
        FieldElement zi2 = fq.sqr(zinv);
        out[i] = CurvePoint(fq.mul(pts[i].X, zi2),
                            fq.mul(pts[i].Y, fq.mul(zi2, zinv)));
    }
    return out;
}

} // namespace detail

/// Scalar multiplication with wNAF digits over Jacobian coordinates and a
/// batch-normalized table of odd multiples. Produces identical output to
/// scalar_mul_naive for all inputs.
inline CurvePoint scalar_mul_wnaf(const BigInt& k, const CurvePoint& p,
                                  const DomainParams& params, unsigned w = 5) {
    if (k < 0) throw UsageError("scalar must be nonnegative");
    if (k == 0 || p.is_infinity()) return CurvePoint::infinity();

    const std::vector<std::int8_t> digits = wnaf_recode(k, w);
    int maxd = 1;
    for (std::int8_t d : digits)
        if (d > maxd || -d > maxd) maxd = d > 0 ? d : -d;

    // Table of P, 3P, 5P, ..., maxd*P.
    std::vector<CurvePoint> table;
    const std::size_t m = static_cast<std::size_t>((maxd + 1) / 2);
    if (m == 1) {
        table.push_back(p);
    } else {
        std::vector<JacobianPoint> jt;
        jt.reserve(m);
        jt.push_back(jac_from_affine(p, params));
        JacobianPoint p2 = jac_double(jt[0], params);
        for (std::size_t i = 1; i < m; ++i)
            jt.push_back(jac_add(jt[i - 1], p2, params));
        table = detail::normalize_all(jt, params);
    }

    JacobianPoint acc = jac_from_affine(CurvePoint::infinity(), params);
    for (std::size_t i = digits.size(); i-- > 0;) {
        if (!acc.is_infinity()) acc = jac_double(acc, params);
        std::int8_t d = digits[i];
        if (d > 0) {
            acc = jac_add_mixed(acc, table[(d - 1) / 2], params);
        } else if (d < 0) {
            acc = jac_add_mixed(acc, point_neg(table[(-d - 1) / 2], params), params);
        }
    }
    return jac_to_affine(acc, params);
}

/// Main-group membership: W != O, W on the curve, and n*W = O.
inline bool validate_public_key(const CurvePoint& w, const DomainParams& params) {
    if (w.is_infinity()) return false;
    if (!on_curve(w, params)) return false;
    return scalar_mul_wnaf(params.n, w, params).is_infinity();
}

struct ValidationCheck {
    std::string name;
    bool passed;
    std::string detail;
};

/// Result of the domain-parameter safety checks, in a fixed order. The
/// overall flag honours all seven checks in strict mode; in advisory mode
/// checks 5-7 are reported but do not fail the flag, which keeps small
/// test curves usable.
struct ValidationReport {
    std::vector<ValidationCheck> checks;
    bool strict = false;
    bool passed = false;

    const ValidationCheck& check(std::size_t index1) const {
        return checks.at(index1 - 1);
    }
};

/// Runs, in order: (1) q prime, (2) curve non-singular, (3) G on curve with
/// n*G = O, (4) n prime, (5) n^2 > 16q, (6) n does not divide q^i - 1 for
/// i <= mov_rounds and n != q, (7) n > 2^160. Failures are report entries,
/// never exceptions.
inline ValidationReport validate_domain_params(const DomainParams& params,
                                               bool strict,
                                               unsigned mov_rounds = 20) {
    ValidationReport report;
    report.strict = strict;
    const BigInt& q = params.field.modulus();
    const BigInt& n = params.n;

    auto add = [&](const std::string& name, bool ok, const std::string& detail) {
        report.checks.push_back({name, ok, detail});
    };

    // 1. field modulus primality
    {
        bool ok = is_probable_prime(q, 64);
        add("q-prime", ok,
            ok ? "q passed 64 Miller-Rabin rounds" : "q is composite");
    }

    // 2. non-singularity: 4a^3 + 27b^2 != 0 (mod q)
    {
        const PrimeField& fq = params.field;
        FieldElement a3 = fq.mul(fq.sqr(params.a), params.a);
        FieldElement disc = fq.add(fq.mul(fq.element(4), a3),
                                   fq.mul(fq.element(27), fq.sqr(params.b)));
        bool ok = !disc.is_zero();
        add("non-singular", ok,
            ok ? "4a^3 + 27b^2 != 0" : "4a^3 + 27b^2 = 0: curve is singular");
    }

    // 3. base point on curve and annihilated by n
    {
        bool ok = false;
        std::string detail;
        try {
            if (params.g.is_infinity()) {
                detail = "G is the identity";
            } else if (!on_curve(params.g, params)) {
                detail = "G does not satisfy the curve equation";
            } else if (!scalar_mul_naive(n, params.g, params).is_infinity()) {
                detail = "n*G != O";
            } else {
                ok = true;
                detail = "G on curve and n*G = O";
            }
        } catch (const Error& e) {
            detail = std::string("point arithmetic failed: ") + e.what();
        }
        add("base-point-order", ok, detail);
    }

    // 4. group order primality
    {
        bool ok = is_probable_prime(n, 64);
        add("n-prime", ok,
            ok ? "n passed 64 Miller-Rabin rounds" : "n is composite");
    }

    // 5. small-subgroup bound n > 4*sqrt(q), checked as n^2 > 16q
    {
        bool ok = n * n > 16 * q;
        add("subgroup-bound", ok, ok ? "n^2 > 16q" : "n^2 <= 16q");
    }

    // 6. MOV and anomalous conditions
    {
        bool ok = true;
        std::string detail = "n does not divide q^i - 1 for i <= " +
                             std::to_string(mov_rounds) + ", and n != q";
        if (n == q) {
            ok = false;
            detail = "n = q (anomalous curve)";
        } else if (n > 1) {
            BigInt acc = q % n;
            for (unsigned i = 1; i <= mov_rounds; ++i) {
                if (acc == 1) {
                    ok = false;
                    detail = "n divides q^i - 1 (i=" + std::to_string(i) + ")";
                    break;
                }
                acc = (acc * q) % n;
            }
        }
        add("mov-condition", ok, detail);
    }

    // 7. ECDLP size floor
    {
        bool ok = n > (BigInt(1) << 160);
        add("size-floor", ok, ok ? "n > 2^160" : "n <= 2^160");
    }

    bool all7 = true, first4 = true;
    for (std::size_t i = 0; i < report.checks.size(); ++i) {
        if (!report.checks[i].passed) {
            all7 = false;
            if (i < 4) first4 = false;
        }
    }
    report.passed = strict ? all7 : first4;
    return report;
}

} // namespace ecsc
