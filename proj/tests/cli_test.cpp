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

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ecsc/ecsc.hpp"

namespace fs = std::filesystem;

namespace {

struct RunResult {
    int code;
    std::string out, err;
};

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const fs::path& path, const std::string& data) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    out.write(data.data(), static_cast<std::streamsize>(data.size()));
}

class CliHarness {
public:
    CliHarness() {
        const char* cli = std::getenv("ECSC_CLI");
        REQUIRE(cli != nullptr);
        cli_ = cli;
        work_ = fs::temp_directory_path() /
                ("ecsc_cli_" + std::to_string(::getpid()) + "_" +
                 std::to_string(counter()++));
        fs::create_directories(work_);
    }

    ~CliHarness() { fs::remove_all(work_); }

    /// Runs `ecsc <args>` with the working directory set to the sandbox.
    RunResult run(const std::string& args, const std::string& cd = "") const {
        fs::path out = work_ / ".stdout";
        fs::path err = work_ / ".stderr";
        std::string cmd = "cd '" + (cd.empty() ? work_.string() : cd) + "' && '" +
                          cli_ + "' " + args + " > '" + out.string() + "' 2> '" +
                          err.string() + "'";
        int rc = std::system(cmd.c_str());
        return {WEXITSTATUS(rc), slurp(out), slurp(err)};
    }

    const fs::path& dir() const { return work_; }

private:
    static int& counter() {
        static int c = 0;
        return c;
    }
    std::string cli_;
    fs::path work_;
};

/// ca init, two keypairs, two certificates. Everything deterministic.
void build_pki(const CliHarness& h, const std::string& params = "p192") {
    auto step = [&](const std::string& args) {
        RunResult r = h.run(args);
        INFO(args << "\nstderr: " << r.err);
        REQUIRE(r.code == 0);
    };
    step("--insecure-seed 1 ca init --params " + params + " --id root --out ca.eck");
    step("--insecure-seed 2 keygen --params " + params + " --id alice --out alice.eck");
    step("--insecure-seed 3 keygen --params " + params + " --id bob --out bob.eck");
    step("--insecure-seed 4 ca issue --ca ca.eck --subject alice.eck.pub "
         "--serial 1 --not-before 0 --not-after 4102444800 --out alice.ecc");
    step("--insecure-seed 5 ca issue --ca ca.eck --subject bob.eck.pub "
         "--serial 2 --not-before 0 --not-after 4102444800 --out bob.ecc");
}

} // namespace

TEST_CASE("full happy path exits zero at every step") {
    CliHarness h;
    build_pki(h);
    spit(h.dir() / "msg.bin", "the quick brown fox");

    RunResult sc = h.run("--insecure-seed 6 --now 1000 signcrypt --key alice.eck "
                         "--cert bob.ecc --ca ca.eck.pub --in msg.bin --out msg.sct");
    INFO(sc.err);
    REQUIRE(sc.code == 0);

    RunResult cv = h.run("--now 1000 ca verify --cert alice.ecc --ca ca.eck.pub");
    REQUIRE(cv.code == 0);

    RunResult v = h.run("--now 1000 verify --cert alice.ecc --sct msg.sct "
                        "--id-b bob --ca ca.eck.pub");
    INFO(v.err);
    REQUIRE(v.code == 0);

    RunResult uc = h.run("--now 1000 unsigncrypt --key bob.eck --cert alice.ecc "
                         "--ca ca.eck.pub --in msg.sct --out msg.out");
    INFO(uc.err);
    REQUIRE(uc.code == 0);
    CHECK(slurp(h.dir() / "msg.out") == "the quick brown fox");
}

TEST_CASE("verification rejection maps to exit 1") {
    CliHarness h;
    build_pki(h);
    spit(h.dir() / "msg.bin", "payload");
    REQUIRE(h.run("--insecure-seed 6 --now 1000 signcrypt --key alice.eck "
                  "--cert bob.ecc --ca ca.eck.pub --in msg.bin --out msg.sct")
                .code == 0);

    // flip one ciphertext bit; the triple stays well-formed but must reject
    std::string sct = slurp(h.dir() / "msg.sct");
    sct[sct.size() - 30] ^= 0x01;
    spit(h.dir() / "tampered.sct", sct);

    CHECK(h.run("--now 1000 verify --cert alice.ecc --sct tampered.sct "
                "--id-b bob --ca ca.eck.pub")
              .code == 1);
    CHECK(h.run("--now 1000 unsigncrypt --key bob.eck --cert alice.ecc "
                "--ca ca.eck.pub --in tampered.sct --out x.out")
              .code == 1);
}

TEST_CASE("malformed input maps to exit 2") {
    CliHarness h;
    build_pki(h);
    spit(h.dir() / "msg.bin", "payload");
    REQUIRE(h.run("--insecure-seed 6 --now 1000 signcrypt --key alice.eck "
                  "--cert bob.ecc --ca ca.eck.pub --in msg.bin --out msg.sct")
                .code == 0);

    std::string sct = slurp(h.dir() / "msg.sct");
    spit(h.dir() / "trunc.sct", sct.substr(0, sct.size() - 3));
    CHECK(h.run("--now 1000 unsigncrypt --key bob.eck --cert alice.ecc "
                "--ca ca.eck.pub --in trunc.sct --out x.out")
              .code == 2);
    CHECK(h.run("--now 1000 verify --cert alice.ecc --sct trunc.sct --id-b bob "
                "--ca ca.eck.pub")
              .code == 2);
}

TEST_CASE("usage errors map to exit 3") {
    CliHarness h;
    CHECK(h.run("no-such-command").code == 3);
    CHECK(h.run("signcrypt --key missing.eck").code == 3);
    CHECK(h.run("bench cost-model --hash bogus").code == 3);
    CHECK(h.run("params show nonexistent-curve").code == 3);
}

TEST_CASE("certificate failures map to exit 4") {
    CliHarness h;
    build_pki(h);
    spit(h.dir() / "msg.bin", "payload");
    REQUIRE(h.run("--insecure-seed 6 --now 1000 signcrypt --key alice.eck "
                  "--cert bob.ecc --ca ca.eck.pub --in msg.bin --out msg.sct")
                .code == 0);

    SECTION("revoked sender certificate") {
        REQUIRE(h.run("--now 900 ca revoke --crl ca.crl --serial 1").code == 0);
        CHECK(h.run("--now 1000 unsigncrypt --key bob.eck --cert alice.ecc "
                    "--ca ca.eck.pub --crl ca.crl --in msg.sct --out x.out")
                  .code == 4);
        CHECK(h.run("--now 1000 ca verify --cert alice.ecc --ca ca.eck.pub "
                    "--crl ca.crl")
                  .code == 4);
    }

    SECTION("expired recipient certificate") {
        CHECK(h.run("--now 9999999999 --insecure-seed 6 signcrypt --key alice.eck "
                    "--cert bob.ecc --ca ca.eck.pub --in msg.bin --out y.sct")
                  .code == 4);
    }
}

TEST_CASE("verify works in a directory holding only public artifacts") {
    CliHarness h;
    build_pki(h);
    spit(h.dir() / "msg.bin", "public verifiability");
    REQUIRE(h.run("--insecure-seed 6 --now 1000 signcrypt --key alice.eck "
                  "--cert bob.ecc --ca ca.eck.pub --in msg.bin --out msg.sct")
                .code == 0);

    fs::path pub = h.dir() / "public-only";
    fs::create_directories(pub);
    fs::copy_file(h.dir() / "alice.ecc", pub / "alice.ecc");
    fs::copy_file(h.dir() / "ca.eck.pub", pub / "ca.pub");
    fs::copy_file(h.dir() / "msg.sct", pub / "msg.sct");

    RunResult v = h.run("--now 1000 verify --cert alice.ecc --sct msg.sct "
                        "--id-b bob --ca ca.pub",
                        pub.string());
    INFO(v.err);
    CHECK(v.code == 0);
}

TEST_CASE("parameter validation exit codes") {
    CliHarness h;
    CHECK(h.run("params validate p192 --strict").code == 0);
    CHECK(h.run("params validate tiny17").code == 0);
    CHECK(h.run("params validate tiny17 --strict").code == 1);

    RunResult r = h.run("--porcelain params validate tiny17 --strict");
    CHECK(r.out.find("check.mov-condition=fail") != std::string::npos);
    CHECK(r.out.find("check.size-floor=fail") != std::string::npos);
    CHECK(r.out.find("check.q-prime=pass") != std::string::npos);
    CHECK(r.out.find("result=fail") != std::string::npos);
}

TEST_CASE("porcelain output is deterministic under a fixed seed") {
    CliHarness a, b;
    for (const CliHarness* h : {&a, &b}) {
        RunResult kg = h->run("--porcelain --insecure-seed 42 keygen "
                              "--params tiny17 --id carol --out carol.eck");
        REQUIRE(kg.code == 0);
    }
    CHECK(slurp(a.dir() / "carol.eck") == slurp(b.dir() / "carol.eck"));
    CHECK(slurp(a.dir() / "carol.eck.pub") == slurp(b.dir() / "carol.eck.pub"));

    RunResult ra = a.run("--porcelain --insecure-seed 42 keygen --params tiny17 "
                         "--id carol --out again.eck");
    RunResult rb = b.run("--porcelain --insecure-seed 42 keygen --params tiny17 "
                         "--id carol --out again.eck");
    CHECK(ra.out == rb.out);

    build_pki(a, "p192");
    build_pki(b, "p192");
    spit(a.dir() / "m.bin", "same bytes");
    spit(b.dir() / "m.bin", "same bytes");
    RunResult sa = a.run("--porcelain --insecure-seed 9 --now 77 signcrypt "
                         "--key alice.eck --cert bob.ecc --ca ca.eck.pub "
                         "--in m.bin --out m.sct");
    RunResult sb = b.run("--porcelain --insecure-seed 9 --now 77 signcrypt "
                         "--key alice.eck --cert bob.ecc --ca ca.eck.pub "
                         "--in m.bin --out m.sct");
    REQUIRE(sa.code == 0);
    REQUIRE(sb.code == 0);
    CHECK(sa.out == sb.out);
    CHECK(slurp(a.dir() / "m.sct") == slurp(b.dir() / "m.sct"));
}

TEST_CASE("cost model CSV through the CLI matches the golden file") {
    CliHarness h;
    RunResult r = h.run("bench cost-model --format csv");
    REQUIRE(r.code == 0);
    CHECK(r.out == slurp(fs::path(ECSC_TEST_DATA_DIR) / "costmodel_golden.csv"));

    RunResult chart = h.run("bench cost-model --format chart");
    REQUIRE(chart.code == 0);
    CHECK(chart.out.find('#') != std::string::npos);

    RunResult md5 = h.run("bench cost-model --hash md5 --format csv");
    REQUIRE(md5.code == 0);
    CHECK(md5.out != r.out);
}

TEST_CASE("bench measure reports counter snapshots") {
    CliHarness h;
    RunResult r = h.run("--porcelain bench measure --params p192 --op ecpa");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("mul_count=") != std::string::npos);

    RunResult m = h.run("--porcelain bench measure --params p192 --op ecpm");
    REQUIRE(m.code == 0);
    auto pos = m.out.find("mul_count=");
    REQUIRE(pos != std::string::npos);
    long muls = std::stol(m.out.substr(pos + 10));
    CHECK(muls >= 1355);
    CHECK(muls <= 2517);
}

TEST_CASE("hex armor round-trips through the CLI") {
    CliHarness h;
    build_pki(h, "tiny17");
    spit(h.dir() / "msg.bin", "armored");
    REQUIRE(h.run("--insecure-seed 6 --now 1000 signcrypt --key alice.eck "
                  "--cert bob.ecc --ca ca.eck.pub --in msg.bin --out msg.hex --hex")
                .code == 0);
    std::string armored = slurp(h.dir() / "msg.hex");
    for (char c : armored)
        CHECK((std::isxdigit(static_cast<unsigned char>(c)) || c == '\n'));
    REQUIRE(h.run("--now 1000 unsigncrypt --key bob.eck --cert alice.ecc "
                  "--ca ca.eck.pub --in msg.hex --out msg.out --hex")
                .code == 0);
    CHECK(slurp(h.dir() / "msg.out") == "armored");
}

TEST_CASE("messages flow through stdin and stdout") {
    CliHarness h;
    build_pki(h, "tiny17");
    spit(h.dir() / "in.bin", "via stdin");
    fs::path out = h.dir() / ".stdout";

    std::string cmd = "cd '" + h.dir().string() + "' && printf 'via stdin' | '" +
                      std::getenv("ECSC_CLI") +
                      "' --insecure-seed 6 --now 1000 signcrypt --key alice.eck "
                      "--cert bob.ecc --ca ca.eck.pub --in - --out msg.sct";
    REQUIRE(WEXITSTATUS(std::system(cmd.c_str())) == 0);

    RunResult uc = h.run("--now 1000 unsigncrypt --key bob.eck --cert alice.ecc "
                         "--ca ca.eck.pub --in msg.sct --out -");
    REQUIRE(uc.code == 0);
    CHECK(uc.out == "via stdin");
}

TEST_CASE("custom parameter files drive the whole pipeline") {
    CliHarness h;
    // a clone of the tiny curve under a name that is not built in
    ecsc::DomainParams custom("custom17", ecsc::BigInt(17), ecsc::BigInt(2),
                              ecsc::BigInt(2), ecsc::BigInt(5), ecsc::BigInt(1),
                              ecsc::BigInt(19), 1);
    ecsc::Bytes enc = ecsc::wire::encode_params(custom);
    spit(h.dir() / "custom17.ecp", std::string(enc.begin(), enc.end()));

    RunResult show = h.run("--porcelain params show custom17.ecp");
    REQUIRE(show.code == 0);
    CHECK(show.out.find("name=custom17") != std::string::npos);
    CHECK(h.run("params validate custom17.ecp").code == 0);

    auto step = [&](const std::string& args) {
        RunResult r = h.run(args);
        INFO(args << "\nstderr: " << r.err);
        REQUIRE(r.code == 0);
    };
    step("--insecure-seed 1 ca init --params custom17.ecp --id root --out ca.eck");
    step("--insecure-seed 2 keygen --params custom17.ecp --id alice --out alice.eck");
    step("--insecure-seed 3 keygen --params custom17.ecp --id bob --out bob.eck");

    // key files name parameters that are not built in; commands must refuse
    // to guess and accept an explicit override
    CHECK(h.run("--insecure-seed 4 ca issue --ca ca.eck --subject alice.eck.pub "
                "--serial 1 --not-before 0 --not-after 4102444800 --out alice.ecc")
              .code == 3);
    step("--insecure-seed 4 ca issue --ca ca.eck --subject alice.eck.pub "
         "--params custom17.ecp --serial 1 --not-before 0 --not-after 4102444800 "
         "--out alice.ecc");
    step("--insecure-seed 5 ca issue --ca ca.eck --subject bob.eck.pub "
         "--params custom17.ecp --serial 2 --not-before 0 --not-after 4102444800 "
         "--out bob.ecc");

    spit(h.dir() / "msg.bin", "custom curve");
    step("--insecure-seed 6 --now 1000 signcrypt --key alice.eck --cert bob.ecc "
         "--ca ca.eck.pub --params custom17.ecp --in msg.bin --out msg.sct");
    step("--now 1000 verify --cert alice.ecc --sct msg.sct --id-b bob "
         "--ca ca.eck.pub --params custom17.ecp");
    step("--now 1000 unsigncrypt --key bob.eck --cert alice.ecc --ca ca.eck.pub "
         "--params custom17.ecp --in msg.sct --out msg.out");
    CHECK(slurp(h.dir() / "msg.out") == "custom curve");
}

TEST_CASE("params show prints the curve constants") {
    CliHarness h;
    RunResult r = h.run("--porcelain params show p192");
    REQUIRE(r.code == 0);
    CHECK(r.out.find("q=fffffffffffffffffffffffffffffffeffffffffffffffff") !=
          std::string::npos);
    CHECK(r.out.find("n=ffffffffffffffffffffffff99def836146bc9b1b4d22831") !=
          std::string::npos);
    CHECK(r.out.find("h=1") != std::string::npos);
    CHECK(r.out.find("f=192") != std::string::npos);
}
