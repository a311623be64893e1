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

#include <algorithm>
#include <array>
#include <cctype>
#include <cstdint>
#include <sstream>
#include <string>

#include "ecsc/curve.hpp"
#include "ecsc/errors.hpp"
#include "ecsc/field.hpp"
#include "ecsc/rng.hpp"

// Executable operation-count cost model for signcryption schemes: per-scheme
// operation tallies, asymptotic unit costs for an f-bit modulus, closed-form
// elliptic-curve operation costs, and a comparison report.
namespace ecsc::cost {

/// Per-participant operation counts for one scheme.
struct OpVector {
    std::uint32_t exp = 0;  // modular exponentiations
    std::uint32_t div = 0;  // modular divisions / inverses
    std::uint32_t ecpm = 0; // elliptic-curve point multiplications
    std::uint32_t ecpa = 0; // elliptic-curve point additions
    std::uint32_t mul = 0;  // modular multiplications
    std::uint32_t add = 0;  // modular additions
    std::uint32_t hash = 0; // hash invocations

    friend bool operator==(const OpVector&, const OpVector&) = default;
};

enum class Participant { sender, receiver };

inline const char* participant_label(Participant p) {
    return p == Participant::sender ? "Alice" : "Bob";
}

struct SchemeCosts {
    std::string key;     // lookup key
    std::string display; // printed name
    bool ec_based;       // priced at the EC modulus length
    OpVector sender, receiver;
};

/// Operation counts of the eight compared schemes (verification and
/// symmetric-cipher costs neglected).
inline const std::array<SchemeCosts, 8>& scheme_table() {
    static const std::array<SchemeCosts, 8> table = {{
        {"zheng", "Zheng [1]", false,
         {1, 1, 0, 0, 0, 1, 2}, {2, 0, 0, 0, 2, 0, 2}},
        {"jung", "Jung et al. [2]", false,
         {2, 1, 0, 0, 0, 1, 2}, {3, 0, 0, 0, 1, 0, 2}},
        {"bao-deng", "Bao and Deng [4]", false,
         {2, 1, 0, 0, 0, 1, 3}, {3, 0, 0, 0, 1, 0, 3}},
        {"gamage", "Gamage et al. [5]", false,
         {2, 1, 0, 0, 0, 1, 2}, {3, 0, 0, 0, 1, 0, 2}},
        {"zheng-imai", "Zheng and Imai [3]", true,
         {0, 1, 1, 0, 1, 1, 2}, {0, 0, 2, 1, 2, 0, 2}},
        {"han", "Han et al. [6]", true,
         {0, 1, 2, 0, 2, 1, 2}, {0, 1, 3, 1, 2, 0, 2}},
        {"hwang", "Hwang et al. [7]", true,
         {0, 0, 2, 0, 1, 1, 1}, {0, 0, 3, 1, 0, 0, 1}},
        {"proposed", "The proposed Scheme", true,
         {0, 0, 2, 0, 2, 2, 2}, {0, 0, 4, 2, 0, 0, 2}},
    }};
    return table;
}

inline const SchemeCosts& scheme_by_name(std::string_view name) {
    std::string lower(name);
    std::transform(lower.begin(), lower.end(), lower.begin(),
                   [](unsigned char c) { return std::tolower(c); });
    for (const SchemeCosts& s : scheme_table()) {
        if (lower == s.key) return s;
        std::string display_lower = s.display;
        std::transform(display_lower.begin(), display_lower.end(),
                       display_lower.begin(),
                       [](unsigned char c) { return std::tolower(c); });
        if (lower == display_lower || display_lower.rfind(lower + " ", 0) == 0)
            return s;
    }
    throw UsageError("unknown scheme: " + std::string(name));
}

inline const OpVector& table2_counts(std::string_view scheme, Participant p) {
    const SchemeCosts& s = scheme_by_name(scheme);
    return p == Participant::sender ? s.sender : s.receiver;
}

inline constexpr std::uint64_t kSha1BitOps = 1110;
inline constexpr std::uint64_t kMd5BitOps = 744;

/// Modulus bit length and per-invocation hash cost.
struct CostParams {
    unsigned zeta = 192;
    std::uint64_t hash_cost = kSha1BitOps;
};

/// Asymptotic unit costs with unit leading constants: add is zeta bit
/// operations, mul and div are zeta^2, exp and inverse are zeta^3.
struct UnitCosts {
    std::uint64_t add, mul, div, exp, inv;
};

inline UnitCosts unit_costs(const CostParams& cp) {
    const std::uint64_t z = cp.zeta;
    return {z, z * z, z * z, z * z * z, z * z * z};
}

/// Point multiplication of an unknown point (window NAF over projective
/// coordinates): 1936 T_Mul + T_Inv.
inline std::uint64_t ecpm_cost(const CostParams& cp) {
    const std::uint64_t z = cp.zeta;
    return 1936 * z * z + z * z * z;
}

/// Projective point addition: 16 T_Mul + 7 T_Add.
inline std::uint64_t ecpa_cost(const CostParams& cp) {
    const std::uint64_t z = cp.zeta;
    return 16 * z * z + 7 * z;
}

/// Dot product of an operation vector with the unit costs.
inline std::uint64_t vector_cost(const OpVector& v, const CostParams& cp) {
    const UnitCosts u = unit_costs(cp);
    return v.exp * u.exp + v.div * u.div + v.ecpm * ecpm_cost(cp) +
           v.ecpa * ecpa_cost(cp) + v.mul * u.mul + v.add * u.add +
           v.hash * cp.hash_cost;
}

/// Total bit operations for one (scheme, participant): exponentiation-based
/// schemes are priced at cp_exp, elliptic-curve schemes at cp_ec.
inline std::uint64_t total_cost(std::string_view scheme, Participant p,
                                const CostParams& cp_exp, const CostParams& cp_ec) {
    const SchemeCosts& s = scheme_by_name(scheme);
    const OpVector& v = p == Participant::sender ? s.sender : s.receiver;
    return vector_cost(v, s.ec_based ? cp_ec : cp_exp);
}

enum class NonRepudiation { direct, via_another_protocol, no };

inline const char* non_repudiation_label(NonRepudiation nr) {
    switch (nr) {
        case NonRepudiation::direct: return "direct";
        case NonRepudiation::via_another_protocol: return "via-another-protocol";
        default: return "no";
    }
}

/// One row of the security-attribute matrix.
struct AttributeRow {
    std::string display;
    bool direct_public_verifiability;
    bool confidentiality;
    bool integrity;
    NonRepudiation non_repudiation;
    bool unforgeability;
    bool forward_secrecy;
};

inline const std::array<AttributeRow, 8>& attribute_table() {
    constexpr auto via = NonRepudiation::via_another_protocol;
    constexpr auto direct = NonRepudiation::direct;
    static const std::array<AttributeRow, 8> table = {{
        {"Zheng [1]", false, true, true, via, true, false},
        {"Jung et al. [2]", false, true, true, via, true, true},
        {"Zheng and Imai [3]", false, true, true, via, true, false},
        {"Bao and Deng [4]", false, true, true, direct, true, false},
        {"Gamage et al. [5]", true, true, true, direct, true, false},
        {"Han et al. [6]", false, false, false, direct, false, false},
        {"Hwang et al. [7]", false, false, false, direct, false, false},
        {"The proposed Scheme", true, true, true, direct, true, true},
    }};
    return table;
}

enum class ReportFormat { csv, chart };

namespace detail {

inline const char* yesno(bool v) { return v ? "yes" : "no"; }

inline std::string attribute_csv() {
    std::ostringstream out;
    out << "scheme,direct_public_verifiability,confidentiality,integrity,"
           "non_repudiation,unforgeability,forward_secrecy\n";
    for (const AttributeRow& row : attribute_table()) {
        out << row.display << ',' << yesno(row.direct_public_verifiability) << ','
            << yesno(row.confidentiality) << ',' << yesno(row.integrity) << ','
            << non_repudiation_label(row.non_repudiation) << ','
            << yesno(row.unforgeability) << ',' << yesno(row.forward_secrecy)
            << '\n';
    }
    return out.str();
}

} // namespace detail

/// Per-scheme, per-participant totals plus the attribute matrix, as CSV or
/// a proportional text bar chart. Output bytes are deterministic for a
/// given parameter choice, so reports can be golden-file tested.
inline std::string emit_comparison(const CostParams& cp_exp, const CostParams& cp_ec,
                                   ReportFormat format) {
    std::ostringstream out;
    if (format == ReportFormat::csv) {
        out << "scheme,participant,exp,div,ecpm,ecpa,mul,add,hash,total_bitops\n";
        for (const SchemeCosts& s : scheme_table()) {
            for (Participant p : {Participant::sender, Participant::receiver}) {
                const OpVector& v = p == Participant::sender ? s.sender : s.receiver;
                out << s.display << ',' << participant_label(p) << ',' << v.exp
                    << ',' << v.div << ',' << v.ecpm << ',' << v.ecpa << ','
                    << v.mul << ',' << v.add << ',' << v.hash << ','
                    << vector_cost(v, s.ec_based ? cp_ec : cp_exp) << '\n';
            }
        }
        out << '\n' << detail::attribute_csv();
        return out.str();
    }
    if (format != ReportFormat::chart) throw UsageError("unsupported report format");

    std::uint64_t max_total = 1;
    for (const SchemeCosts& s : scheme_table()) {
        const CostParams& cp = s.ec_based ? cp_ec : cp_exp;
        max_total = std::max({max_total, vector_cost(s.sender, cp),
                              vector_cost(s.receiver, cp)});
    }
    out << "# bit operations, zeta_exp=" << cp_exp.zeta
        << ", zeta_ec=" << cp_ec.zeta << ", hash_cost=" << cp_ec.hash_cost
        << "\n";
    constexpr int kBarWidth = 48;
    for (const SchemeCosts& s : scheme_table()) {
        for (Participant p : {Participant::sender, Participant::receiver}) {
            const OpVector& v = p == Participant::sender ? s.sender : s.receiver;
            const std::uint64_t total = vector_cost(v, s.ec_based ? cp_ec : cp_exp);
            int bar = static_cast<int>((total * kBarWidth + max_total - 1) / max_total);
            if (bar < 1) bar = 1;
            out << s.display << '/' << participant_label(p);
            for (std::size_t pad = s.display.size() +
                                   std::string(participant_label(p)).size();
                 pad < 26; ++pad)
                out << ' ';
            out << ' ' << std::string(static_cast<std::size_t>(bar), '#') << ' '
                << total << '\n';
        }
    }
    out << '\n';
    out << "# attributes: dpv conf integ non-rep unforg fs\n";
    for (const AttributeRow& row : attribute_table()) {
        out << row.display;
        for (std::size_t pad = row.display.size(); pad < 22; ++pad) out << ' ';
        out << detail::yesno(row.direct_public_verifiability) << ' '
            << detail::yesno(row.confidentiality) << ' '
            << detail::yesno(row.integrity) << ' '
            << non_repudiation_label(row.non_repudiation) << ' '
            << detail::yesno(row.unforgeability) << ' '
            << detail::yesno(row.forward_secrecy) << '\n';
    }
    return out.str();
}

enum class MeasureOp { ecpm_wnaf, ecpa };

/// Empirical counterpart of the closed-form EC costs: runs one operation
/// instance on a private copy of the parameters with a counter attached and
/// returns the tally. Squarings count as multiplications.
inline OpCounter measure_field_ops(const DomainParams& params, MeasureOp op,
                                   RandomSource& rng,
                                   const BigInt* forced_scalar = nullptr) {
    DomainParams work = params;
    OpCounter counter;

    // Random operands are prepared before the counter is attached.
    BigInt k = forced_scalar ? *forced_scalar : random_scalar(work.n, rng);
    CurvePoint p = scalar_mul_wnaf(random_scalar(work.n, rng), work.g, work);

    if (op == MeasureOp::ecpm_wnaf) {
        work.field.attach_counter(&counter);
        scalar_mul_wnaf(k, p, work);
        work.field.attach_counter(nullptr);
        return counter;
    }

    CurvePoint q = scalar_mul_wnaf(random_scalar(work.n, rng), work.g, work);
    // Rescale to random Z so the measured addition sees generic operands.
    auto randomize = [&](const CurvePoint& pt) {
        const PrimeField& fq = work.field;
        FieldElement z = fq.element(random_scalar(fq.modulus(), rng));
        FieldElement z2 = fq.sqr(z);
        return JacobianPoint{fq.mul(pt.x(), z2), fq.mul(pt.y(), fq.mul(z2, z)), z};
    };
    JacobianPoint jp = randomize(p);
    JacobianPoint jq = randomize(q);
    work.field.attach_counter(&counter);
    jac_add(jp, jq, work);
    work.field.attach_counter(nullptr);
    return counter;
}

} // namespace ecsc::cost
