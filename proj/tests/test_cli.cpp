// End-to-end CLI checks: runs the pintz-forge binary (path injected by the
// build) and inspects stdout, exit codes, and report structure.
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <string>

#include <json.hpp>

#ifndef PINTZ_FORGE_BIN
#error "PINTZ_FORGE_BIN must point at the CLI executable"
#endif

namespace {

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run_cli(const std::string& args, const std::string& env = "") {
    std::string cmd = env + " " + std::string(PINTZ_FORGE_BIN) + " " + args +
                      " 2>/dev/null";
    std::array<char, 4096> buf{};
    RunResult r;
    FILE* p = popen(cmd.c_str(), "r");
    REQUIRE(p != nullptr);
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0)
        r.out.append(buf.data(), n);
    int st = pclose(p);
    r.exit_code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

nlohmann::json parse_report(const std::string& out) {
    return nlohmann::json::parse(out);
}

double ext_ln(const std::string& ser) {
    REQUIRE(ser.substr(0, 7) == "s:+|ln:");
    return std::strtod(ser.c_str() + 7, nullptr);
}

} // namespace

TEST_CASE("cli: mertens json and csv") {
    auto r = run_cli("mertens --limit 10 --emit json");
    REQUIRE(r.exit_code == 0);
    auto j = parse_report(r.out);
    CHECK(j["result"]["M"] == -1);
    CHECK(j["result"]["S_abs"] == "12");
    CHECK(j["result"]["argmax"] == 5);
    CHECK(j["result"]["first_violation"].is_null());
    CHECK(j["manifest"]["subcommand"] == "mertens");

    auto c = run_cli("mertens --limit 10 --emit csv");
    REQUIRE(c.exit_code == 0);
    CHECK(c.out.find("limit,cursor,M,S_abs,max_ratio,argmax,first_violation,"
                     "mean_abs") != std::string::npos);
    CHECK(c.out.find("10,10,-1,12,") != std::string::npos);
}

TEST_CASE("cli: determinism of result and digest") {
    const char* cmd =
        "theorem eval --preset zeta-mertens --y 1e20 --beta0 0.5 "
        "--gamma0 14.134725 --c0 0.1";
    auto a = run_cli(cmd);
    auto b = run_cli(cmd);
    REQUIRE(a.exit_code == 0);
    REQUIRE(b.exit_code == 0);
    auto ja = parse_report(a.out), jb = parse_report(b.out);
    CHECK(ja["result"].dump() == jb["result"].dump());
    CHECK(ja["manifest"]["result_digest"] == jb["manifest"]["result_digest"]);
    CHECK(ja["manifest"]["parameters"].dump() ==
          jb["manifest"]["parameters"].dump());
}

TEST_CASE("cli: theorem eval reproduces the headline bound") {
    auto r = run_cli(
        "theorem eval --preset zeta-mertens --y 1e20 --beta0 0.5 "
        "--gamma0 14.134725 --c0 0.1");
    REQUIRE(r.exit_code == 0);
    auto j = parse_report(r.out);
    double total = j["result"]["total_double"].get<double>();
    CHECK(total >= 70.0);
    CHECK(total / 1e10 >= 7e-9);
    CHECK(total / 1e10 <= 9e-9);
    CHECK(j["result"]["mean_lower_constant"].get<double>() >= 7e-9);
}

TEST_CASE("cli: infer check on the log-space instance") {
    auto r = run_cli(
        "infer check --y exp:1e19 --d 1 --beta0 0.51 --gamma0 exp:1e16");
    REQUIRE(r.exit_code == 0);
    auto j = parse_report(r.out);
    CHECK(j["result"]["verdict"] == "Excluded");
    // lower and upper live at the e^(5.1e18)/e^(5e18) scale
    CHECK(ext_ln(j["result"]["upper"].get<std::string>()) ==
          doctest::Approx(5e18).epsilon(1e-6));
}

TEST_CASE("cli: bounds verify") {
    auto r = run_cli("bounds verify");
    REQUIRE(r.exit_code == 0);
    auto j = parse_report(r.out);
    CHECK(j["result"]["all_pass"] == true);
    CHECK(j["result"]["checks"].size() == 10);
}

TEST_CASE("cli: config file precedence under flags") {
    auto dir = std::filesystem::temp_directory_path();
    auto cfg = (dir / "pintz_cli_test.cfg").string();
    std::ofstream(cfg) << "# test config\nc0 = 0.1\nd = 1\n";

    // flag overrides the file
    auto r = run_cli("infer check --config " + cfg +
                     " --y 1e80 --beta0 0.99 --gamma0 1e13 --c0 0.05");
    REQUIRE(r.exit_code == 0);
    auto j = parse_report(r.out);
    CHECK(j["result"]["c0_used"].get<double>() == 0.05);
    CHECK(j["manifest"]["parameters"]["c0"] == "0.05");

    // file supplies what flags omit
    auto r2 = run_cli("infer check --config " + cfg +
                      " --y 1e80 --beta0 0.99 --gamma0 1e13");
    REQUIRE(r2.exit_code == 0);
    CHECK(parse_report(r2.out)["result"]["c0_used"].get<double>() == 0.1);

    // unknown key is rejected with its line number
    auto bad = (dir / "pintz_cli_bad.cfg").string();
    std::ofstream(bad) << "c0 = 0.1\nbogus-key = 7\n";
    auto r3 = run_cli("infer check --config " + bad +
                      " --y 1e80 --beta0 0.99 --gamma0 1e13");
    CHECK(r3.exit_code == 2);

    // an empty file leaves every default in place
    auto empty = (dir / "pintz_cli_empty.cfg").string();
    std::ofstream(empty) << "";
    auto r4 = run_cli("infer check --config " + empty +
                      " --y 1e80 --d 1 --beta0 0.99 --gamma0 1e13");
    REQUIRE(r4.exit_code == 0);
    CHECK(parse_report(r4.out)["result"]["c0_used"].get<double>() == 0.1);

    std::remove(cfg.c_str());
    std::remove(bad.c_str());
    std::remove(empty.c_str());
}

TEST_CASE("cli: environment sits below config and flags") {
    // PINTZ_THREADS feeds mertens when nothing else specifies it
    auto r = run_cli("mertens --limit 1000", "PINTZ_THREADS=2");
    REQUIRE(r.exit_code == 0);
    CHECK(parse_report(r.out)["manifest"]["parameters"]["threads"] == "2");
    auto r2 = run_cli("mertens --limit 1000 --threads 1", "PINTZ_THREADS=2");
    REQUIRE(r2.exit_code == 0);
    CHECK(parse_report(r2.out)["manifest"]["parameters"]["threads"] == "1");
}

TEST_CASE("cli: exit codes") {
    CHECK(run_cli("mertens --limit 10 --no-such-flag").exit_code == 2);
    CHECK(run_cli("theorem eval --preset zeta-mertens --y 100 --beta0 0.5 "
                  "--gamma0 14.1")
              .exit_code == 2); // Y too small: precondition
    CHECK(run_cli("infer max-gamma --y 1e3 --d 1 --beta0 0.51").exit_code ==
          3); // NoExclusion: computational outcome
    CHECK(run_cli("mertens --limit 10 --emit yaml").exit_code == 2);
    CHECK(run_cli("").exit_code == 2);
}

TEST_CASE("cli: PINTZ_CHECKPOINT_DIR prefixes bare checkpoint names") {
    auto dir = std::filesystem::temp_directory_path() / "pintz_ckdir_test";
    std::filesystem::create_directories(dir);
    std::string name = "env_ck.jsonl";
    std::remove((dir / name).string().c_str());
    auto r = run_cli("mertens --limit 5000 --segment-size 1024 --checkpoint " +
                         name,
                     "PINTZ_CHECKPOINT_DIR=" + dir.string());
    REQUIRE(r.exit_code == 0);
    CHECK(std::filesystem::exists(dir / name));
    std::filesystem::remove_all(dir);
}

TEST_CASE("cli: infer csv projection") {
    auto r = run_cli(
        "infer check --y 1e80 --d 1 --beta0 0.99 --gamma0 1e13 --emit csv");
    REQUIRE(r.exit_code == 0);
    CHECK(r.out.find("verdict,lower,upper,c0_used,total") != std::string::npos);
    CHECK(r.out.find("Excluded,") != std::string::npos);
}

TEST_CASE("cli: generic theorem parameters") {
    // the zeta constants fed through the generic flags reproduce the preset
    auto preset = run_cli(
        "theorem eval --preset zeta-mertens --y 1e20 --beta0 0.5 "
        "--gamma0 14.134725 --c0 0.1");
    REQUIRE(preset.exit_code == 0);
    std::string f0 = parse_report(preset.out)["result"]["breakdown"]["main_term"]
                         .get<std::string>();
    auto generic = run_cli(
        "theorem eval --y 1e20 --beta0 0.5 --gamma0 14.134725 --c0 0.1 "
        "--ca 1 --cc 1 --cf 1.4142135623730951 --bf 1 --cg 13.38 --bg 3.5 "
        "--f-rho0 14.143565704079894");
    REQUIRE(generic.exit_code == 0);
    auto jp = parse_report(preset.out), jg = parse_report(generic.out);
    double tp = jp["result"]["total_double"].get<double>();
    double tg = jg["result"]["total_double"].get<double>();
    CHECK(tg == doctest::Approx(tp).epsilon(1e-9));
    // omitting --f-rho0 with generic flags is a usage error
    auto missing = run_cli(
        "theorem eval --y 1e20 --beta0 0.5 --gamma0 14.134725 --c0 0.1 "
        "--ca 1 --cc 1 --cf 1.41 --bf 1 --cg 13.38 --bg 3.5");
    CHECK(missing.exit_code == 2);
    (void)f0;
}

TEST_CASE("cli: checkpoint resume through the binary") {
    auto dir = std::filesystem::temp_directory_path();
    auto ck = (dir / "pintz_cli_ck.jsonl").string();
    std::remove(ck.c_str());

    auto full = run_cli("mertens --limit 20000 --segment-size 1024 "
                        "--checkpoint " +
                        ck);
    REQUIRE(full.exit_code == 0);
    auto jf = parse_report(full.out);

    // drop the tail of the checkpoint, then resume
    std::ifstream in(ck);
    std::string line, prefix;
    for (int i = 0; i < 6 && std::getline(in, line); ++i) prefix += line + "\n";
    in.close();
    std::ofstream(ck) << prefix;
    auto resumed = run_cli("mertens --limit 20000 --segment-size 1024 "
                           "--checkpoint " +
                           ck);
    REQUIRE(resumed.exit_code == 0);
    CHECK(parse_report(resumed.out)["result"].dump() == jf["result"].dump());
    std::remove(ck.c_str());
}
