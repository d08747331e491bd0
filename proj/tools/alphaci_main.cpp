// Command-line surface for the alphaci library. Every command is
// deterministic; output is human-readable lines by default and a stable
// JSON schema under --json. Exit codes: 0 success, 1 invalid input,
// 2 internal cross-check failure (never expected).

#include <alphaci/alphaci.hpp>

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <limits>
#include <string>
#include <vector>

namespace {

using nlohmann::json;

long long parse_integer_token(const std::string& tok)
{
    std::size_t used = 0;
    long long v = 0;
    try {
        v = std::stoll(tok, &used);
    } catch (const std::exception&) {
        throw std::invalid_argument("invalid integer '" + tok + "' in multi-degree");
    }
    if (used != tok.size())
        throw std::invalid_argument("invalid integer '" + tok + "' in multi-degree");
    return v;
}

std::vector<long long> split_degrees(const std::string& s)
{
    std::vector<long long> out;
    if (s.empty())
        return out;
    std::size_t start = 0;
    for (;;) {
        const std::size_t comma = s.find(',', start);
        out.push_back(parse_integer_token(s.substr(start, comma - start)));
        if (comma == std::string::npos)
            break;
        start = comma + 1;
    }
    return out;
}

std::vector<int> positive_degrees(const std::string& s)
{
    std::vector<int> out;
    for (long long v : split_degrees(s)) {
        if (v < 1 || v > std::numeric_limits<int>::max())
            throw std::invalid_argument("degrees must be positive integers (got " +
                                        std::to_string(v) + ")");
        out.push_back(static_cast<int>(v));
    }
    return out;
}

std::string join_backends(const std::vector<alphaci::AlphaValue>& vals)
{
    std::string s = "consensus(";
    for (std::size_t i = 0; i < vals.size(); ++i) {
        if (i)
            s += '+';
        s += alphaci::to_string(vals[i].backend);
    }
    return s + ")";
}

void write_file(const std::string& path, const std::string& contents)
{
    std::ofstream f(path, std::ios::binary);
    if (!f)
        throw std::runtime_error("cannot open '" + path + "' for writing");
    f << contents;
    if (!f)
        throw std::runtime_error("failed writing '" + path + "'");
}

struct AlphaArgs {
    int n = 0;
    std::string d;
    bool all_backends = false;
    bool abstract_mode = false;
    bool as_json = false;
};

int cmd_alpha(const AlphaArgs& a)
{
    if (a.abstract_mode) {
        const auto d = split_degrees(a.d);
        const auto v = alphaci::alpha_abstract(a.n, d);
        long long total = 0;
        for (long long x : d)
            total += x < 0 ? -x : x;
        const long long two_m = -static_cast<long long>(a.n) - static_cast<long long>(d.size()) - 1 + total;
        const bool integral = (two_m % 2) == 0;
        if (a.as_json) {
            json j{{"alpha", v.value}, {"backend", alphaci::to_string(v.backend)}};
            if (integral)
                j["m"] = two_m / 2;
            else
                j["m"] = nullptr;
            std::cout << j.dump(2) << '\n';
        } else {
            std::cout << "alpha = " << v.value << '\n';
            std::cout << "backend = " << alphaci::to_string(v.backend) << '\n';
            if (integral)
                std::cout << "m = " << two_m / 2 << '\n';
            else
                std::cout << "m = none (odd twist)" << '\n';
        }
        return 0;
    }

    const auto d = positive_degrees(a.d);
    const auto vals = alphaci::alpha_all_backends(a.n, d);
    const auto v = alphaci::alpha(a.n, d);
    const alphaci::CompleteIntersection X(a.n, d);
    const long long m = *alphaci::spin_twist(X);
    if (a.as_json) {
        json backends;
        for (const auto& b : vals)
            backends[alphaci::to_string(b.backend)] = b.value;
        const json j{{"alpha", v.value},
                     {"backend", join_backends(vals)},
                     {"m", m},
                     {"n", a.n},
                     {"degrees", X.degrees()},
                     {"backends", backends}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "alpha = " << v.value << '\n';
        std::cout << "backend = " << join_backends(vals) << '\n';
        std::cout << "m = " << m << '\n';
        if (a.all_backends)
            for (const auto& b : vals)
                std::cout << alphaci::to_string(b.backend) << " = " << b.value << '\n';
    }
    return 0;
}

int cmd_ahat(int n, const std::string& dstr, bool as_json)
{
    const auto d = positive_degrees(dstr);
    const auto v = alphaci::ahat(n, d);
    const alphaci::CompleteIntersection X(n, d);
    const long long m = *alphaci::spin_twist(X);
    if (as_json) {
        const json j{{"ahat", v.value.str()},
                     {"backend", "consensus(sign_sum+hilbert)"},
                     {"m", m},
                     {"n", n},
                     {"degrees", X.degrees()}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "ahat = " << v.value.str() << '\n';
        std::cout << "backend = consensus(sign_sum+hilbert)" << '\n';
        std::cout << "m = " << m << '\n';
    }
    return 0;
}

int cmd_spin(int n, const std::string& dstr, bool as_json)
{
    const alphaci::CompleteIntersection X(n, positive_degrees(dstr));
    const auto m = alphaci::spin_twist(X);
    if (as_json) {
        json j{{"spin", m.has_value()}};
        if (m)
            j["m"] = *m;
        else
            j["m"] = nullptr;
        std::cout << j.dump(2) << '\n';
    } else if (m) {
        std::cout << "spin, m = " << *m << '\n';
    } else {
        std::cout << "not spin" << '\n';
    }
    return 0;
}

int cmd_profile(int n, const std::string& dstr, bool as_json)
{
    const alphaci::CompleteIntersection X(n, positive_degrees(dstr));
    const auto p = alphaci::invariant_profile(X);
    if (as_json) {
        json sums = json::array();
        for (const auto& s : p.normalized_power_sums)
            sums.push_back(s.str());
        const json j{{"key", p.key()},
                     {"n", p.n},
                     {"d_tot", p.d_tot.str()},
                     {"normalized_power_sums", sums},
                     {"diffeomorphism_invariant", p.diffeomorphism_invariant()}};
        std::cout << j.dump(2) << '\n';
    } else {
        std::cout << "profile = " << p.key() << '\n';
        if (!p.diffeomorphism_invariant())
            std::cout << "note = not a diffeomorphism invariant for n <= 2" << '\n';
    }
    return 0;
}

int cmd_euler(int n, const std::string& dstr, bool as_json)
{
    const alphaci::CompleteIntersection X(n, positive_degrees(dstr));
    const auto chi = alphaci::euler_characteristic(X);
    if (as_json)
        std::cout << json{{"euler", chi.str()}}.dump(2) << '\n';
    else
        std::cout << "euler = " << chi.str() << '\n';
    return 0;
}

int cmd_hilbert(int n, const std::string& dstr, int order, bool as_json)
{
    const auto series = alphaci::hilbert_series(n, positive_degrees(dstr), order);
    if (as_json) {
        json coeffs = json::array();
        for (const auto& c : series.coeffs())
            coeffs.push_back(c.str());
        std::cout << json{{"order", order}, {"coefficients", coeffs}}.dump(2) << '\n';
    } else {
        std::cout << "coefficients =";
        for (const auto& c : series.coeffs())
            std::cout << ' ' << c.str();
        std::cout << '\n';
    }
    return 0;
}

int cmd_fr(int r, bool as_json)
{
    const auto f = alphaci::fr_polynomial(static_cast<unsigned>(r));
    if (as_json) {
        json coeffs = json::array();
        for (long long j = 0; j <= std::max<long long>(f.degree(), 0); ++j)
            coeffs.push_back(f.coeff(static_cast<std::size_t>(j)) ? 1 : 0);
        std::cout << json{{"r", r}, {"polynomial", f.to_string()}, {"degree", f.degree()},
                          {"coefficients", coeffs}}
                         .dump(2)
                  << '\n';
    } else {
        std::cout << "f_" << r << " = " << f.to_string() << '\n';
    }
    return 0;
}

int cmd_scan(int n, int max_k, int max_degree, unsigned workers, const std::string& json_path,
             const std::string& csv_path)
{
    const auto report = alphaci::scan(n, max_k, max_degree, workers);
    std::cout << "scan n=" << n << " k<=" << max_k << " d<=" << max_degree << '\n';
    std::cout << "multidegrees = " << report.multidegrees << '\n';
    std::cout << "groups = " << report.groups.size() << '\n';
    std::cout << "violations = " << report.violations.size() << '\n';
    for (const auto& v : report.violations)
        std::cout << "violation " << v.kind << ": " << v.detail << '\n';
    std::cout << "pair_checks = " << report.pair_checks << " (predictor_confirmed "
              << report.predictor_confirmed << ", guarantee_confirmed "
              << report.guarantee_confirmed << ")" << '\n';
    std::cout << "workers = " << report.workers << '\n';
    std::cout << "elapsed_seconds = " << report.elapsed_seconds << '\n';
    if (!json_path.empty()) {
        write_file(json_path, report.to_json().dump(2) + "\n");
        std::cout << "wrote " << json_path << '\n';
    }
    if (!csv_path.empty()) {
        write_file(csv_path, report.to_csv());
        std::cout << "wrote " << csv_path << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Exact alpha invariants and A-hat genera of complete intersections"};
    app.require_subcommand(1);

    AlphaArgs alpha_args;
    auto* alpha_cmd = app.add_subcommand("alpha", "Alpha invariant of X_n(d), n = 1 (mod 4)");
    alpha_cmd->add_option("--n", alpha_args.n, "complex dimension")->required();
    alpha_cmd->add_option("--d", alpha_args.d, "comma-separated degrees, e.g. 3,3");
    alpha_cmd->add_flag("--all-backends", alpha_args.all_backends, "print each backend's value");
    alpha_cmd->add_flag("--abstract", alpha_args.abstract_mode,
                        "abstract invariant: any integer n and degrees");
    alpha_cmd->add_flag("--json", alpha_args.as_json, "JSON output");

    int ahat_n = 0;
    std::string ahat_d;
    bool ahat_json = false;
    auto* ahat_cmd = app.add_subcommand("ahat", "A-hat genus of X_n(d), n even");
    ahat_cmd->add_option("--n", ahat_n, "complex dimension (even)")->required();
    ahat_cmd->add_option("--d", ahat_d, "comma-separated degrees");
    ahat_cmd->add_flag("--json", ahat_json, "JSON output");

    int spin_n = 0;
    std::string spin_d;
    bool spin_json = false;
    auto* spin_cmd = app.add_subcommand("spin", "spin condition and square-root twist m");
    spin_cmd->add_option("--n", spin_n, "complex dimension")->required();
    spin_cmd->add_option("--d", spin_d, "comma-separated degrees");
    spin_cmd->add_flag("--json", spin_json, "JSON output");

    int profile_n = 0;
    std::string profile_d;
    bool profile_json = false;
    auto* profile_cmd = app.add_subcommand("profile", "invariant profile (d_tot, sigma_{2j}-k)");
    profile_cmd->add_option("--n", profile_n, "complex dimension")->required();
    profile_cmd->add_option("--d", profile_d, "comma-separated degrees");
    profile_cmd->add_flag("--json", profile_json, "JSON output");

    int euler_n = 0;
    std::string euler_d;
    bool euler_json = false;
    auto* euler_cmd = app.add_subcommand("euler", "Euler characteristic");
    euler_cmd->add_option("--n", euler_n, "complex dimension")->required();
    euler_cmd->add_option("--d", euler_d, "comma-separated degrees");
    euler_cmd->add_flag("--json", euler_json, "JSON output");

    int hilbert_n = 0, hilbert_order = 0;
    std::string hilbert_d;
    bool hilbert_json = false;
    auto* hilbert_cmd = app.add_subcommand("hilbert", "Hilbert series coefficients");
    hilbert_cmd->add_option("--n", hilbert_n, "complex dimension")->required();
    hilbert_cmd->add_option("--d", hilbert_d, "comma-separated degrees");
    hilbert_cmd->add_option("--order", hilbert_order, "truncation order")->required();
    hilbert_cmd->add_flag("--json", hilbert_json, "JSON output");

    int fr_r = 0;
    bool fr_json = false;
    auto* fr_cmd = app.add_subcommand("fr", "the Z_2 polynomial f_r(T)");
    fr_cmd->add_option("--r", fr_r, "index r >= 0")->required()->check(CLI::NonNegativeNumber);
    fr_cmd->add_flag("--json", fr_json, "JSON output");

    int scan_n = 0, scan_max_k = 0, scan_max_degree = 0;
    unsigned scan_workers = 0;
    std::string scan_json_path, scan_csv_path;
    auto* scan_cmd = app.add_subcommand("scan", "exhaustive profile-grouped alpha scan");
    scan_cmd->add_option("--n", scan_n, "complex dimension (n = 1 mod 4)")->required();
    scan_cmd->add_option("--max-k", scan_max_k, "maximum number of degrees")->required();
    scan_cmd->add_option("--max-degree", scan_max_degree, "maximum degree")->required();
    scan_cmd->add_option("--workers", scan_workers, "worker threads (0 = machine parallelism)")
        ->envname("ALPHA_CI_WORKERS");
    scan_cmd->add_option("--json", scan_json_path, "write the JSON report to this path");
    scan_cmd->add_option("--csv", scan_csv_path, "write the CSV summary to this path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 1;
    }

    try {
        if (alpha_cmd->parsed())
            return cmd_alpha(alpha_args);
        if (ahat_cmd->parsed())
            return cmd_ahat(ahat_n, ahat_d, ahat_json);
        if (spin_cmd->parsed())
            return cmd_spin(spin_n, spin_d, spin_json);
        if (profile_cmd->parsed())
            return cmd_profile(profile_n, profile_d, profile_json);
        if (euler_cmd->parsed())
            return cmd_euler(euler_n, euler_d, euler_json);
        if (hilbert_cmd->parsed())
            return cmd_hilbert(hilbert_n, hilbert_d, hilbert_order, hilbert_json);
        if (fr_cmd->parsed())
            return cmd_fr(fr_r, fr_json);
        if (scan_cmd->parsed())
            return cmd_scan(scan_n, scan_max_k, scan_max_degree, scan_workers, scan_json_path,
                            scan_csv_path);
    } catch (const alphaci::consistency_error& e) {
        std::cerr << "internal consistency error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
