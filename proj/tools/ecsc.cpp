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

// Command-line front end: key and certificate management, signcryption,
// third-party verification, and the cost-model bench.
//
// Exit status: 0 success, 1 verification rejection, 2 malformed input,
// 3 usage error, 4 certificate failure.

#include <cstdint>
#include <ctime>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ecsc/ecsc.hpp"

using namespace ecsc;

namespace {

struct GlobalOpts {
    bool porcelain = false;
    std::int64_t now = 0;
    bool now_set = false;
    std::uint64_t seed = 0;
    bool seed_set = false;

    std::int64_t effective_now() const {
        return now_set ? now : static_cast<std::int64_t>(std::time(nullptr));
    }

    std::unique_ptr<RandomSource> make_rng() const {
        if (seed_set) {
            std::cerr << "warning: --insecure-seed produces predictable keys; "
                         "test use only\n";
            return std::make_unique<InsecureSeededSource>(seed);
        }
        return std::make_unique<SystemRandomSource>();
    }

    void kv(const std::string& key, const std::string& value) const {
        if (porcelain) std::cout << key << '=' << value << '\n';
    }

    void say(const std::string& line) const {
        if (!porcelain) std::cout << line << '\n';
    }
};

Bytes read_input(const std::string& path) {
    if (path == "-") {
        std::ostringstream ss;
        ss << std::cin.rdbuf();
        const std::string& s = ss.str();
        return Bytes(s.begin(), s.end());
    }
    std::ifstream in(path, std::ios::binary);
    if (!in.good()) throw UsageError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    const std::string& s = ss.str();
    return Bytes(s.begin(), s.end());
}

void write_output(const std::string& path, BytesView data) {
    if (path == "-") {
        std::cout.write(reinterpret_cast<const char*>(data.data()),
                        static_cast<std::streamsize>(data.size()));
        return;
    }
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out.good()) throw UsageError("cannot write " + path);
    out.write(reinterpret_cast<const char*>(data.data()),
              static_cast<std::streamsize>(data.size()));
}

/// A parameter spec is a built-in name or a parameter file path.
DomainParams resolve_params_spec(const std::string& spec) {
    if (auto builtin = params_by_name(spec)) return *builtin;
    return wire::decode_params(read_input(spec));
}

/// Files carry the name of their parameter set; resolve it against the
/// built-ins or an explicit --params override.
DomainParams resolve_named_params(const std::string& name,
                                  const std::string& override_spec) {
    if (!override_spec.empty()) {
        DomainParams params = resolve_params_spec(override_spec);
        if (params.name != name)
            throw UsageError("file expects parameters '" + name + "' but --params supplied '" +
                             params.name + "'");
        return params;
    }
    if (auto builtin = params_by_name(name)) return *builtin;
    throw UsageError("parameters '" + name + "' are not built in; pass --params <file>");
}

struct LoadedKey {
    DomainParams params;
    KeyPair key;
};

LoadedKey load_private_key(const std::string& path, const std::string& params_spec) {
    wire::PrivateKeyFile file = wire::decode_private_key(read_input(path));
    DomainParams params = resolve_named_params(file.params_name, params_spec);
    if (file.w < 1 || file.w >= params.n)
        throw MalformedError("private scalar out of range for " + params.name);
    KeyPair key{file.w, scalar_mul_wnaf(file.w, params.g, params), file.id};
    return {params, key};
}

struct LoadedPub {
    DomainParams params;
    Bytes id;
    CurvePoint point;
    SchnorrSignature pop;
};

LoadedPub load_public_key(const std::string& path, const std::string& params_spec) {
    wire::PublicKeyFile file = wire::decode_public_key(read_input(path));
    DomainParams params = resolve_named_params(file.params_name, params_spec);
    CurvePoint point = wire::decode_point(file.point_bytes, params);
    return {params, file.id, point, {file.pop_e, file.pop_s}};
}

RevocationList load_crl(const std::string& path) {
    if (path.empty()) return {};
    return wire::decode_crl(read_input(path));
}

Bytes maybe_dearmor(Bytes data, bool hex) {
    if (!hex) return data;
    return from_hex(std::string(data.begin(), data.end()));
}

Bytes maybe_armor(Bytes data, bool hex) {
    if (!hex) return data;
    std::string s = to_hex(data);
    s.push_back('\n');
    return as_bytes(s);
}

std::string hexint(const BigInt& v) {
    std::ostringstream ss;
    ss << std::hex << v;
    return ss.str();
}

void write_keypair_files(const GlobalOpts& g, const DomainParams& params,
                         const KeyPair& key, const std::string& out,
                         std::string pub_out, RandomSource& rng) {
    if (pub_out.empty()) pub_out = out + ".pub";
    write_output(out, wire::encode_private_key(params.name, key.id, key.w));
    SchnorrSignature pop = make_possession_proof(params, default_hash(), key, rng);
    write_output(pub_out,
                 wire::encode_public_key(params.name, key.id,
                                         wire::encode_point(key.W, params), pop.e,
                                         pop.s));
    g.kv("id", std::string(key.id.begin(), key.id.end()));
    g.kv("public_key", to_hex(wire::encode_point(key.W, params)));
    g.kv("out", out);
    g.kv("pub_out", pub_out);
    g.say("wrote private key to " + out + " and public key to " + pub_out);
}

int cmd_params_show(const GlobalOpts& g, const std::string& spec) {
    DomainParams params = resolve_params_spec(spec);
    g.kv("name", params.name);
    g.kv("q", hexint(params.field.modulus()));
    g.kv("a", hexint(params.a.value()));
    g.kv("b", hexint(params.b.value()));
    g.kv("gx", hexint(params.g.x().value()));
    g.kv("gy", hexint(params.g.y().value()));
    g.kv("n", hexint(params.n));
    g.kv("h", std::to_string(params.h));
    g.kv("f", std::to_string(params.f));
    if (!g.porcelain) {
        std::cout << "name: " << params.name << "\n"
                  << "q:  0x" << hexint(params.field.modulus()) << "\n"
                  << "a:  0x" << hexint(params.a.value()) << "\n"
                  << "b:  0x" << hexint(params.b.value()) << "\n"
                  << "Gx: 0x" << hexint(params.g.x().value()) << "\n"
                  << "Gy: 0x" << hexint(params.g.y().value()) << "\n"
                  << "n:  0x" << hexint(params.n) << "\n"
                  << "h:  " << params.h << "\n"
                  << "f:  " << params.f << "\n";
    }
    return 0;
}

int cmd_params_validate(const GlobalOpts& g, const std::string& spec, bool strict,
                        unsigned mov_rounds) {
    DomainParams params = resolve_params_spec(spec);
    ValidationReport report = validate_domain_params(params, strict, mov_rounds);
    for (const ValidationCheck& check : report.checks) {
        g.kv("check." + check.name, check.passed ? "pass" : "fail");
        if (!g.porcelain)
            std::cout << (check.passed ? "[pass] " : "[FAIL] ") << check.name
                      << ": " << check.detail << "\n";
    }
    g.kv("mode", strict ? "strict" : "advisory");
    g.kv("result", report.passed ? "pass" : "fail");
    if (!g.porcelain)
        std::cout << (strict ? "strict" : "advisory") << " validation "
                  << (report.passed ? "passed" : "FAILED") << "\n";
    return report.passed ? 0 : 1;
}

int cmd_keygen(const GlobalOpts& g, const std::string& params_spec,
               const std::string& id, const std::string& out,
               const std::string& pub_out) {
    DomainParams params = resolve_params_spec(params_spec);
    ValidationReport report = validate_domain_params(params, false);
    if (!report.passed)
        throw UsageError("domain parameters failed advisory validation");
    auto rng = g.make_rng();
    KeyPair key = keygen(params, as_bytes(id), *rng);
    write_keypair_files(g, params, key, out, pub_out, *rng);
    return 0;
}

int cmd_ca_issue(const GlobalOpts& g, const std::string& ca_path,
                 const std::string& subject_path, const std::string& params_spec,
                 std::uint64_t serial, std::optional<std::int64_t> not_before,
                 std::optional<std::int64_t> not_after, const std::string& out) {
    LoadedKey ca = load_private_key(ca_path, params_spec);
    LoadedPub subject = load_public_key(subject_path, params_spec);
    if (subject.params.name != ca.params.name)
        throw UsageError("subject and CA use different domain parameters");
    if (!verify_possession_proof(ca.params, default_hash(), subject.id,
                                 subject.point, subject.pop))
        throw CertificateError("subject possession proof is invalid");

    std::int64_t nb = not_before.value_or(g.effective_now());
    std::int64_t na = not_after.value_or(nb + 365 * 86400);
    auto rng = g.make_rng();
    Certificate cert = issue_certificate(ca.params, default_hash(), ca.key,
                                         subject.id, subject.point, nb, na,
                                         serial, *rng);
    write_output(out, wire::encode_certificate(cert, ca.params));
    g.kv("subject", std::string(subject.id.begin(), subject.id.end()));
    g.kv("serial", std::to_string(serial));
    g.kv("not_before", std::to_string(nb));
    g.kv("not_after", std::to_string(na));
    g.kv("out", out);
    g.say("issued certificate " + out);
    return 0;
}

int cmd_ca_revoke(const GlobalOpts& g, const std::string& crl_path,
                  std::uint64_t serial) {
    RevocationList crl;
    std::ifstream probe(crl_path, std::ios::binary);
    if (probe.good()) {
        probe.close();
        crl = load_crl(crl_path);
    }
    crl.revoke(serial);
    crl.issued_at = g.effective_now();
    write_output(crl_path, wire::encode_crl(crl));
    g.kv("serial", std::to_string(serial));
    g.kv("revoked", std::to_string(crl.serials.size()));
    g.say("revoked serial " + std::to_string(serial) + " in " + crl_path);
    return 0;
}

int cmd_ca_verify(const GlobalOpts& g, const std::string& cert_path,
                  const std::string& ca_path, const std::string& crl_path,
                  const std::string& params_spec) {
    LoadedPub ca = load_public_key(ca_path, params_spec);
    Certificate cert = wire::decode_certificate(read_input(cert_path), ca.params);
    RevocationList crl = load_crl(crl_path);
    CertStatus status =
        check_certificate(cert, ca.point, crl, g.effective_now(), ca.params);
    g.kv("result", status.ok ? "pass" : "fail");
    if (!status.ok) {
        g.kv("reason", status.reason);
        if (!g.porcelain) std::cerr << "certificate invalid: " << status.reason << "\n";
        return 4;
    }
    g.say("certificate valid");
    return 0;
}

int cmd_signcrypt(const GlobalOpts& g, const std::string& key_path,
                  const std::string& cert_path, const std::string& ca_path,
                  const std::string& crl_path, const std::string& params_spec,
                  const std::string& in, const std::string& out, bool hex) {
    LoadedKey sender = load_private_key(key_path, params_spec);
    LoadedPub ca = load_public_key(ca_path, params_spec);
    Certificate cert_b =
        wire::decode_certificate(read_input(cert_path), sender.params);
    RevocationList crl = load_crl(crl_path);
    Bytes message = read_input(in);

    auto rng = g.make_rng();
    SigncryptedText sct =
        signcrypt(sender.params, sender.key, cert_b, ca.point, crl,
                  g.effective_now(), message, *rng);
    write_output(out, maybe_armor(wire::encode_sct(sct, sender.params), hex));
    if (out != "-") { // keep stdout payload-clean when piping
        g.kv("bytes", std::to_string(message.size()));
        g.kv("out", out);
        g.say("signcrypted " + std::to_string(message.size()) + " bytes to " + out);
    }
    return 0;
}

int cmd_unsigncrypt(const GlobalOpts& g, const std::string& key_path,
                    const std::string& cert_path, const std::string& ca_path,
                    const std::string& crl_path, const std::string& params_spec,
                    const std::string& in, const std::string& out, bool hex) {
    LoadedKey receiver = load_private_key(key_path, params_spec);
    LoadedPub ca = load_public_key(ca_path, params_spec);
    Certificate cert_a =
        wire::decode_certificate(read_input(cert_path), receiver.params);
    RevocationList crl = load_crl(crl_path);
    SigncryptedText sct =
        wire::decode_sct(maybe_dearmor(read_input(in), hex), receiver.params);

    Bytes message = unsigncrypt(receiver.params, receiver.key, cert_a, ca.point,
                                crl, g.effective_now(), sct);
    write_output(out, message);
    if (out != "-") { // keep stdout payload-clean when piping
        g.kv("bytes", std::to_string(message.size()));
        g.kv("result", "accepted");
        g.say("verified and recovered " + std::to_string(message.size()) + " bytes");
    }
    return 0;
}

int cmd_verify(const GlobalOpts& g, const std::string& cert_path,
               const std::string& sct_path, const std::string& id_b,
               const std::string& ca_path, const std::string& crl_path,
               const std::string& params_spec, bool hex) {
    LoadedPub ca = load_public_key(ca_path, params_spec);
    Certificate cert_a = wire::decode_certificate(read_input(cert_path), ca.params);
    RevocationList crl = load_crl(crl_path);
    SigncryptedText sct =
        wire::decode_sct(maybe_dearmor(read_input(sct_path), hex), ca.params);

    std::string reason;
    bool ok = public_verify(ca.params, cert_a, ca.point, crl, g.effective_now(),
                            sct, as_bytes(id_b), default_hash(), &reason);
    g.kv("result", ok ? "pass" : "fail");
    if (!ok) {
        g.kv("reason", reason);
        if (!g.porcelain) std::cerr << "verification failed: " << reason << "\n";
        return 1;
    }
    g.say("signcryption verifies");
    return 0;
}

int cmd_bench_cost_model(unsigned zeta_exp, unsigned zeta_ec,
                         const std::string& hash_name, const std::string& format) {
    std::uint64_t hash_cost;
    if (hash_name == "sha1") hash_cost = cost::kSha1BitOps;
    else if (hash_name == "md5") hash_cost = cost::kMd5BitOps;
    else throw UsageError("unknown hash model: " + hash_name);

    cost::ReportFormat fmt;
    if (format == "csv") fmt = cost::ReportFormat::csv;
    else if (format == "chart") fmt = cost::ReportFormat::chart;
    else throw UsageError("unknown format: " + format);

    std::cout << cost::emit_comparison({zeta_exp, hash_cost}, {zeta_ec, hash_cost},
                                       fmt);
    return 0;
}

int cmd_bench_measure(const GlobalOpts& g, const std::string& params_spec,
                      const std::string& op_name) {
    DomainParams params = resolve_params_spec(params_spec);
    cost::MeasureOp op;
    if (op_name == "ecpm") op = cost::MeasureOp::ecpm_wnaf;
    else if (op_name == "ecpa") op = cost::MeasureOp::ecpa;
    else throw UsageError("unknown operation: " + op_name);

    auto rng = g.make_rng();
    OpCounter counter = cost::measure_field_ops(params, op, *rng);
    g.kv("op", op_name);
    g.kv("mul_count", std::to_string(counter.mul_count));
    g.kv("add_count", std::to_string(counter.add_count));
    g.kv("inv_count", std::to_string(counter.inv_count));
    if (!g.porcelain)
        std::cout << op_name << " on " << params.name << ": "
                  << counter.mul_count << " mul, " << counter.add_count
                  << " add, " << counter.inv_count << " inv\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    GlobalOpts g;
    int exit_code = 0;

    CLI::App app{"elliptic-curve signcryption toolkit"};
    app.require_subcommand(1);
    app.add_flag("--porcelain", g.porcelain, "machine-readable key=value output");
    app.add_option("--now", g.now, "override the current time (seconds since epoch)")
        ->each([&](const std::string&) { g.now_set = true; });
    app.add_option("--insecure-seed", g.seed,
                   "deterministic rng seed; FOR TESTS ONLY")
        ->each([&](const std::string&) { g.seed_set = true; });

    // params
    auto* params_cmd = app.add_subcommand("params", "inspect and validate domain parameters");
    params_cmd->require_subcommand(1);
    {
        static std::string spec;
        auto* show = params_cmd->add_subcommand("show", "print a parameter set");
        show->add_option("spec", spec, "built-in name or .ecp file")->required();
        show->callback([&] { exit_code = cmd_params_show(g, spec); });

        static std::string vspec;
        static bool strict = false;
        static unsigned mov_rounds = 20;
        auto* validate = params_cmd->add_subcommand("validate", "run the safety checks");
        validate->add_option("spec", vspec, "built-in name or .ecp file")->required();
        validate->add_flag("--strict", strict, "require all seven checks");
        validate->add_option("--mov-rounds", mov_rounds, "MOV embedding bound V");
        validate->callback(
            [&] { exit_code = cmd_params_validate(g, vspec, strict, mov_rounds); });
    }

    // keygen
    {
        static std::string pspec, id, out, pub_out;
        auto* kg = app.add_subcommand("keygen", "generate a keypair");
        kg->add_option("--params", pspec, "parameter set")->required();
        kg->add_option("--id", id, "participant identifier")->required();
        kg->add_option("--out", out, "private key file (.eck)")->required();
        kg->add_option("--pub-out", pub_out, "public key file (default <out>.pub)");
        kg->callback([&] { exit_code = cmd_keygen(g, pspec, id, out, pub_out); });
    }

    // ca
    auto* ca_cmd = app.add_subcommand("ca", "certificate authority operations");
    ca_cmd->require_subcommand(1);
    {
        static std::string pspec, id, out, pub_out;
        auto* init = ca_cmd->add_subcommand("init", "create the CA keypair");
        init->add_option("--params", pspec, "parameter set")->required();
        init->add_option("--id", id, "CA identifier")->required();
        init->add_option("--out", out, "CA private key file")->required();
        init->add_option("--pub-out", pub_out, "CA public key file (default <out>.pub)");
        init->callback([&] { exit_code = cmd_keygen(g, pspec, id, out, pub_out); });

        static std::string ca_path, subject, ipspec, iout;
        static std::uint64_t serial = 0;
        static std::optional<std::int64_t> nb, na;
        auto* issue = ca_cmd->add_subcommand("issue", "issue a certificate");
        issue->add_option("--ca", ca_path, "CA private key (.eck)")->required();
        issue->add_option("--subject", subject, "subject public key file")->required();
        issue->add_option("--params", ipspec, "parameter file for custom curves");
        issue->add_option("--serial", serial, "unique serial number")->required();
        issue->add_option("--not-before", nb, "validity start (epoch seconds)");
        issue->add_option("--not-after", na, "validity end (epoch seconds)");
        issue->add_option("--out", iout, "certificate file (.ecc)")->required();
        issue->callback([&] {
            exit_code = cmd_ca_issue(g, ca_path, subject, ipspec, serial, nb, na, iout);
        });

        static std::string crl_path;
        static std::uint64_t rserial = 0;
        auto* revoke = ca_cmd->add_subcommand("revoke", "add a serial to a CRL");
        revoke->add_option("--crl", crl_path, "CRL file (created if missing)")->required();
        revoke->add_option("--serial", rserial, "serial to revoke")->required();
        revoke->callback([&] { exit_code = cmd_ca_revoke(g, crl_path, rserial); });

        static std::string vcert, vca, vcrl, vpspec;
        auto* cverify = ca_cmd->add_subcommand("verify", "validate a certificate");
        cverify->add_option("--cert", vcert, "certificate file")->required();
        cverify->add_option("--ca", vca, "CA public key file")->required();
        cverify->add_option("--crl", vcrl, "CRL file");
        cverify->add_option("--params", vpspec, "parameter file for custom curves");
        cverify->callback(
            [&] { exit_code = cmd_ca_verify(g, vcert, vca, vcrl, vpspec); });
    }

    // signcrypt
    {
        static std::string key, cert, ca, crl, pspec, in, out;
        static bool hex = false;
        auto* sc = app.add_subcommand("signcrypt", "signcrypt a message");
        sc->add_option("--key", key, "sender private key (.eck)")->required();
        sc->add_option("--cert", cert, "recipient certificate (.ecc)")->required();
        sc->add_option("--ca", ca, "CA public key file")->required();
        sc->add_option("--crl", crl, "CRL file");
        sc->add_option("--params", pspec, "parameter file for custom curves");
        sc->add_option("--in", in, "message file, or - for stdin")->required();
        sc->add_option("--out", out, "signcrypted text file (.sct)")->required();
        sc->add_flag("--hex", hex, "hex-armor the output");
        sc->callback([&] {
            exit_code = cmd_signcrypt(g, key, cert, ca, crl, pspec, in, out, hex);
        });
    }

    // unsigncrypt
    {
        static std::string key, cert, ca, crl, pspec, in, out;
        static bool hex = false;
        auto* uc = app.add_subcommand("unsigncrypt", "decrypt and verify a signcrypted text");
        uc->add_option("--key", key, "recipient private key (.eck)")->required();
        uc->add_option("--cert", cert, "sender certificate (.ecc)")->required();
        uc->add_option("--ca", ca, "CA public key file")->required();
        uc->add_option("--crl", crl, "CRL file");
        uc->add_option("--params", pspec, "parameter file for custom curves");
        uc->add_option("--in", in, "signcrypted text file, or - for stdin")->required();
        uc->add_option("--out", out, "recovered message file, or - for stdout")->required();
        uc->add_flag("--hex", hex, "input is hex-armored");
        uc->callback([&] {
            exit_code = cmd_unsigncrypt(g, key, cert, ca, crl, pspec, in, out, hex);
        });
    }

    // verify
    {
        static std::string cert, sct, id_b, ca, crl, pspec;
        static bool hex = false;
        auto* v = app.add_subcommand(
            "verify", "third-party verification from public data only");
        v->add_option("--cert", cert, "sender certificate (.ecc)")->required();
        v->add_option("--sct", sct, "signcrypted text file")->required();
        v->add_option("--id-b", id_b, "recipient identifier")->required();
        v->add_option("--ca", ca, "CA public key file")->required();
        v->add_option("--crl", crl, "CRL file");
        v->add_option("--params", pspec, "parameter file for custom curves");
        v->add_flag("--hex", hex, "input is hex-armored");
        v->callback([&] {
            exit_code = cmd_verify(g, cert, sct, id_b, ca, crl, pspec, hex);
        });
    }

    // bench
    auto* bench = app.add_subcommand("bench", "cost model and measurements");
    bench->require_subcommand(1);
    {
        static unsigned zeta_exp = 1024, zeta_ec = 192;
        static std::string hash_name = "sha1", format = "csv";
        auto* cm = bench->add_subcommand("cost-model", "emit the scheme comparison");
        cm->add_option("--zeta-exp", zeta_exp, "modulus bits for exponentiation-based schemes");
        cm->add_option("--zeta-ec", zeta_ec, "modulus bits for elliptic-curve schemes");
        cm->add_option("--hash", hash_name, "hash cost model: sha1 or md5");
        cm->add_option("--format", format, "csv or chart");
        cm->callback([&] {
            exit_code = cmd_bench_cost_model(zeta_exp, zeta_ec, hash_name, format);
        });

        static std::string mpspec = "p192", op = "ecpm";
        auto* ms = bench->add_subcommand("measure", "count field operations empirically");
        ms->add_option("--params", mpspec, "parameter set");
        ms->add_option("--op", op, "ecpm or ecpa")->required();
        ms->callback([&] { exit_code = cmd_bench_measure(g, mpspec, op); });
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int rc = app.exit(e);
        return rc == 0 ? 0 : 3;
    } catch (const RejectionError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const CertificateError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    } catch (const MalformedError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const UsageError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    return exit_code;
}
