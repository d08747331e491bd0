// End-to-end checks of the CLI: output lines, exit codes, JSON schema and
// the scan report files. ALPHACI_CLI_PATH is injected by the build.

#include <catch2/catch_amalgamated.hpp>

#include <json.hpp>

#include <algorithm>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>
#include <sys/wait.h>

namespace {

struct CliResult {
    int exit_code;
    std::string out;
};

CliResult run_cli(const std::string& args)
{
    const std::string cmd = std::string(ALPHACI_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    for (;;) {
        const std::size_t nr = fread(buf, 1, sizeof buf, pipe);
        if (nr == 0)
            break;
        out.append(buf, nr);
    }
    const int status = pclose(pipe);
    const int code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return {code, out};
}

CliResult run_cli_env(const std::string& env, const std::string& args)
{
    const std::string cmd = env + " " + std::string(ALPHACI_CLI_PATH) + " " + args + " 2>&1";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    for (;;) {
        const std::size_t nr = fread(buf, 1, sizeof buf, pipe);
        if (nr == 0)
            break;
        out.append(buf, nr);
    }
    const int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

bool contains(const std::string& hay, const std::string& needle)
{
    return hay.find(needle) != std::string::npos;
}

std::string slurp(const std::filesystem::path& p)
{
    std::ifstream f(p, std::ios::binary);
    REQUIRE(f.good());
    return {std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>()};
}

} // namespace

TEST_CASE("alpha command")
{
    const auto r = run_cli("alpha --n 1 --d 2,2");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "alpha = 1"));
    CHECK(contains(r.out, "m = 0"));
    CHECK(contains(r.out, "closed_form"));

    const auto all = run_cli("alpha --n 5 --d 3,3 --all-backends");
    CHECK(all.exit_code == 0);
    CHECK(contains(all.out, "alpha = 0"));
    CHECK(contains(all.out, "m = -1"));
    CHECK(contains(all.out, "sign_sum = 0"));
    CHECK(contains(all.out, "hilbert = 0"));
    CHECK(contains(all.out, "partition_sum = 0"));
    CHECK(contains(all.out, "fr = 0"));

    const auto j = run_cli("alpha --n 1 --d 2,2 --json");
    CHECK(j.exit_code == 0);
    const auto parsed = nlohmann::json::parse(j.out);
    CHECK(parsed["alpha"] == 1);
    CHECK(parsed["m"] == 0);
    CHECK(parsed["backends"]["fr"] == 1);
}

TEST_CASE("alpha abstract mode accepts any integers")
{
    const auto r = run_cli("alpha --abstract --n -1 --d 3,5");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "alpha = 1"));

    const auto z = run_cli("alpha --abstract --n 7 --d 0,4");
    CHECK(z.exit_code == 0);
    CHECK(contains(z.out, "alpha = 0"));

    const auto neg = run_cli("alpha --abstract --n 1 --d -2,2");
    CHECK(neg.exit_code == 0);
    CHECK(contains(neg.out, "alpha = 1"));
}

TEST_CASE("ahat, spin, profile, euler, hilbert, fr commands")
{
    const auto a = run_cli("ahat --n 2 --d 4");
    CHECK(a.exit_code == 0);
    CHECK(contains(a.out, "ahat = 2"));

    const auto s = run_cli("spin --n 2 --d 3");
    CHECK(s.exit_code == 0);
    CHECK(contains(s.out, "not spin"));
    CHECK(contains(run_cli("spin --n 2 --d 4").out, "spin, m = 0"));

    const auto p = run_cli("profile --n 5 --d 3,3");
    CHECK(p.exit_code == 0);
    CHECK(contains(p.out, "profile = n=5;dtot=9;sums=16,160"));
    CHECK_FALSE(contains(p.out, "note"));
    CHECK(contains(run_cli("profile --n 1 --d 3").out, "not a diffeomorphism invariant"));

    const auto e = run_cli("euler --n 2 --d 4");
    CHECK(e.exit_code == 0);
    CHECK(contains(e.out, "euler = 24"));

    const auto h = run_cli("hilbert --n 1 --d 2,2 --order 5");
    CHECK(h.exit_code == 0);
    CHECK(contains(h.out, "coefficients = 1 4 8 12 16 20"));

    const auto f = run_cli("fr --r 5");
    CHECK(f.exit_code == 0);
    CHECK(contains(f.out, "f_5 = T^4 + T^2 + 1"));
}

TEST_CASE("invalid input exits 1 with a one-line diagnostic")
{
    for (const std::string args : {"alpha --n 3 --d 2,2", "alpha --n 5 --d 2",
                                   "alpha --n 5 --d x", "ahat --n 2 --d 3",
                                   "hilbert --n 0 --d 2 --order 3", "alpha --d 2,2",
                                   "nosuchcommand"}) {
        const auto r = run_cli(args);
        INFO(args << " -> " << r.out);
        CHECK(r.exit_code == 1);
        CHECK_FALSE(r.out.empty());
    }
}

TEST_CASE("scan writes JSON and CSV reports")
{
    const auto dir = std::filesystem::temp_directory_path() / "alphaci_cli_test";
    std::filesystem::create_directories(dir);
    const auto json_path = dir / "out.json";
    const auto csv_path = dir / "out.csv";

    const auto r = run_cli("scan --n 5 --max-k 2 --max-degree 6 --workers 2 --json " +
                           json_path.string() + " --csv " + csv_path.string());
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "violations = 0"));

    const std::string text = slurp(json_path);
    const auto parsed = nlohmann::json::parse(text);
    CHECK(parsed["violations"].empty());
    CHECK(parsed["box"]["n"] == 5);
    // re-serializing the parsed report is byte-identical
    CHECK(parsed.dump(2) + "\n" == text);

    const std::string csv = slurp(csv_path);
    CHECK(csv.rfind("profile,n,d_tot,", 0) == 0);
    CHECK(std::count(csv.begin(), csv.end(), '\n') ==
          static_cast<long long>(parsed["groups"].size()) + 1);

    std::filesystem::remove_all(dir);
}

TEST_CASE("ALPHA_CI_WORKERS provides the worker default")
{
    const auto r = run_cli_env("ALPHA_CI_WORKERS=1", "scan --n 5 --max-k 1 --max-degree 4");
    CHECK(r.exit_code == 0);
    CHECK(contains(r.out, "workers = 1"));
}
