#pragma once

#include "alpha.hpp"
#include "numtheory.hpp"
#include "topology.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <chrono>
#include <map>
#include <mutex>
#include <string>
#include <thread>
#include <utility>
#include <vector>

namespace alphaci {

/// The 2-adic threshold rho = 2 + nu_2((n+1)!) governing when a sigma_{n+1}
/// difference can flip the alpha invariant.
inline unsigned long long rho(int n)
{
    if (n < 1 || n % 4 != 1)
        throw std::invalid_argument("rho: defined for n = 1 (mod 4)");
    return 2 + nu2_factorial(static_cast<unsigned long long>(n) + 1);
}

/// Predicted alpha difference from q = d_tot (sigma_{n+1} - sigma'_{n+1}):
/// 0 when q = 0, otherwise 1 exactly when nu_2(q) = rho. A hypothesis-
/// satisfying pair can never produce nu_2(q) < rho; seeing one falsifies
/// either the implementation or the hypothesis check, so it aborts loudly
/// instead of returning a value.
inline int predicted_difference_from_q(int n, const Integer& q)
{
    if (q == 0)
        return 0;
    const unsigned long long v = nu_p(2, q);
    const unsigned long long r = rho(n);
    if (v < r)
        throw consistency_error("predicted_difference_from_q: nu_2(q) = " + std::to_string(v) +
                                " < rho = " + std::to_string(r) + " for q = " + q.str());
    return v == r ? 1 : 0;
}

/// True when 2^{rho+1} divides q, which guarantees equal alpha invariants.
inline bool guarantee_from_q(int n, const Integer& q)
{
    if (q == 0)
        return true;
    const unsigned long long v = nu_p(2, q);
    const unsigned long long r = rho(n);
    if (v < r)
        throw consistency_error("guarantee_from_q: nu_2(q) = " + std::to_string(v) +
                                " < rho = " + std::to_string(r) + " for q = " + q.str());
    return v >= r + 1;
}

namespace detail {

inline void require_pair_hypotheses(const CompleteIntersection& X, const CompleteIntersection& Y)
{
    if (X.n() != Y.n())
        throw std::invalid_argument("pair check: dimensions differ");
    if (X.n() % 4 != 1)
        throw std::invalid_argument("pair check: needs n = 1 (mod 4)");
    if (!is_spin(X) || !is_spin(Y))
        throw std::invalid_argument("pair check: both complete intersections must be spin");
    // equal profiles = equal total degree and equal sigma_{2j} - k for
    // j <= (n-1)/2, i.e. equal Pontryagin classes after padding with 1s
    if (!(invariant_profile(X) == invariant_profile(Y)))
        throw std::invalid_argument("pair check: total degree or Pontryagin classes differ");
}

/// q = d_tot ((sigma_{n+1}(X) - k) - (sigma_{n+1}(Y) - k')); the k-shift
/// makes the value unchanged by padding either side with degree-1 entries.
inline Integer pair_q(const CompleteIntersection& X, const CompleteIntersection& Y)
{
    const int j = X.n() + 1;
    return total_degree(X) *
           ((power_sum(X, j) - X.k()) - (power_sum(Y, j) - Y.k()));
}

} // namespace detail

/// alpha_n(d) - alpha_n(d') in Z_2 predicted from total degree and
/// sigma_{n+1} alone, for a pair with equal total degree and Pontryagin
/// classes.
inline int predicted_alpha_difference(const CompleteIntersection& X, const CompleteIntersection& Y)
{
    detail::require_pair_hypotheses(X, Y);
    return predicted_difference_from_q(X.n(), detail::pair_q(X, Y));
}

/// Divisibility test that certifies alpha_n(d) = alpha_n(d') outright.
inline bool divisibility_guarantee(const CompleteIntersection& X, const CompleteIntersection& Y)
{
    detail::require_pair_hypotheses(X, Y);
    return guarantee_from_q(X.n(), detail::pair_q(X, Y));
}

struct ScanEntry {
    std::vector<int> degrees;
    int alpha = 0;
    long long m = 0;
};

struct ScanGroup {
    InvariantProfile profile;
    std::vector<ScanEntry> members;
};

struct ScanViolation {
    std::string kind;   // "nonconstant_alpha" | "predictor_mismatch" | "guarantee_violated"
    std::string detail;
};

/// Result of an exhaustive box scan: multi-degrees grouped by invariant
/// profile, with the alpha constancy and 2-adic pair checks applied to
/// every group.
struct ScanReport {
    int n = 0;
    int max_k = 0;
    int max_degree = 0;
    unsigned workers = 1;
    unsigned long long multidegrees = 0;
    std::vector<ScanGroup> groups;
    std::vector<ScanViolation> violations;
    unsigned long long pair_checks = 0;
    unsigned long long predictor_confirmed = 0;
    unsigned long long guarantee_confirmed = 0;
    double elapsed_seconds = 0.0;

    nlohmann::json to_json() const
    {
        nlohmann::json j;
        j["box"] = {{"n", n}, {"max_k", max_k}, {"max_degree", max_degree}};
        j["workers"] = workers;
        j["multidegrees"] = multidegrees;
        j["groups"] = nlohmann::json::array();
        for (const auto& g : groups) {
            nlohmann::json sums = nlohmann::json::array();
            for (const auto& s : g.profile.normalized_power_sums)
                sums.push_back(s.str());
            nlohmann::json members = nlohmann::json::array();
            for (const auto& e : g.members)
                members.push_back({{"degrees", e.degrees}, {"alpha", e.alpha}, {"m", e.m}});
            j["groups"].push_back({{"profile",
                                    {{"key", g.profile.key()},
                                     {"n", g.profile.n},
                                     {"d_tot", g.profile.d_tot.str()},
                                     {"normalized_power_sums", sums}}},
                                   {"alpha", g.members.empty() ? 0 : g.members.front().alpha},
                                   {"members", members}});
        }
        j["violations"] = nlohmann::json::array();
        for (const auto& v : violations)
            j["violations"].push_back({{"kind", v.kind}, {"detail", v.detail}});
        j["pair_checks"] = {{"pairs", pair_checks},
                            {"predictor_confirmed", predictor_confirmed},
                            {"guarantee_confirmed", guarantee_confirmed}};
        j["elapsed_seconds"] = elapsed_seconds;
        return j;
    }

    /// One row per group. The profile key is quoted (it contains commas).
    std::string to_csv() const
    {
        std::string out = "profile,n,d_tot,normalized_power_sums,group_size,alpha,members\n";
        for (const auto& g : groups) {
            out += '"' + g.profile.key() + "\",";
            out += std::to_string(g.profile.n) + ',';
            out += g.profile.d_tot.str() + ',';
            for (std::size_t i = 0; i < g.profile.normalized_power_sums.size(); ++i) {
                if (i)
                    out += ' ';
                out += g.profile.normalized_power_sums[i].str();
            }
            out += ',';
            out += std::to_string(g.members.size()) + ',';
            out += std::to_string(g.members.empty() ? 0 : g.members.front().alpha) + ',';
            for (std::size_t i = 0; i < g.members.size(); ++i) {
                if (i)
                    out += ';';
                for (std::size_t t = 0; t < g.members[i].degrees.size(); ++t) {
                    if (t)
                        out += ' ';
                    out += std::to_string(g.members[i].degrees[t]);
                }
            }
            out += '\n';
        }
        return out;
    }
};

namespace detail {

// Enumerates the sorted multi-degrees of one shard (fixed smallest degree
// d1, entries in [2, max_degree], length in [1, max_k]), keeping those with
// an even number of even entries, and evaluates each through the alpha
// dispatcher. Depth-first, so the output order is lexicographic.
inline void scan_extend(int n, int max_k, int max_degree, std::vector<int>& cur, int evens,
                        std::vector<std::pair<InvariantProfile, ScanEntry>>& out)
{
    if (evens % 2 == 0) {
        CompleteIntersection X(n, cur);
        ScanEntry e;
        e.degrees = cur;
        e.alpha = alpha(n, cur).value;
        e.m = *spin_twist(X);
        out.emplace_back(invariant_profile(X), std::move(e));
    }
    if (static_cast<int>(cur.size()) == max_k)
        return;
    for (int d = cur.back(); d <= max_degree; ++d) {
        cur.push_back(d);
        scan_extend(n, max_k, max_degree, cur, evens + (d % 2 == 0 ? 1 : 0), out);
        cur.pop_back();
    }
}

inline void scan_shard(int n, int max_k, int max_degree, int d1,
                       std::vector<std::pair<InvariantProfile, ScanEntry>>& out)
{
    std::vector<int> cur{d1};
    scan_extend(n, max_k, max_degree, cur, d1 % 2 == 0 ? 1 : 0, out);
}

} // namespace detail

/// Exhaustively verifies, over the box k <= max_k, 2 <= d_i <= max_degree,
/// that spin multi-degrees with equal invariant profile have equal alpha,
/// and that every profile-equal pair obeys the 2-adic difference predictor
/// and divisibility guarantee. Degree-1 entries are excluded up front:
/// they change neither the profile nor alpha. Work is sharded by the
/// smallest degree; shards share nothing and merge deterministically, so
/// the report is independent of worker count.
inline ScanReport scan(int n, int max_k, int max_degree, unsigned workers = 0)
{
    if (n < 1 || n % 4 != 1)
        throw std::invalid_argument("scan: needs n = 1 (mod 4)");
    if (max_k < 1)
        throw std::invalid_argument("scan: max_k must be at least 1");
    if (max_degree < 1)
        throw std::invalid_argument("scan: max_degree must be at least 1");
    if (workers == 0) {
        workers = std::thread::hardware_concurrency();
        if (workers == 0)
            workers = 1;
    }
    const auto t0 = std::chrono::steady_clock::now();

    ScanReport report;
    report.n = n;
    report.max_k = max_k;
    report.max_degree = max_degree;
    report.workers = workers;

    // one shard per admissible smallest degree
    std::vector<int> shard_d1;
    for (int d1 = 2; d1 <= max_degree; ++d1)
        shard_d1.push_back(d1);

    std::vector<std::vector<std::pair<InvariantProfile, ScanEntry>>> shard_out(shard_d1.size());
    {
        std::atomic<std::size_t> next{0};
        std::exception_ptr failure;
        std::mutex failure_mutex;
        auto work = [&] {
            for (;;) {
                const std::size_t i = next.fetch_add(1);
                if (i >= shard_d1.size())
                    return;
                try {
                    detail::scan_shard(n, max_k, max_degree, shard_d1[i], shard_out[i]);
                } catch (...) {
                    const std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure)
                        failure = std::current_exception();
                    return;
                }
            }
        };
        std::vector<std::thread> pool;
        const auto nthreads = static_cast<unsigned>(
            std::min<std::size_t>(workers, std::max<std::size_t>(shard_d1.size(), 1)));
        for (unsigned i = 0; i + 1 < nthreads; ++i)
            pool.emplace_back(work);
        work();
        for (auto& t : pool)
            t.join();
        if (failure)
            std::rethrow_exception(failure);
    }

    // deterministic merge: the empty multi-degree first (CP^n itself, spin
    // in these dimensions), then shards in ascending d1 order
    std::map<InvariantProfile, ScanGroup> grouped;
    auto insert = [&](InvariantProfile profile, ScanEntry entry) {
        ++report.multidegrees;
        auto [it, fresh] = grouped.try_emplace(profile);
        if (fresh)
            it->second.profile = std::move(profile);
        it->second.members.push_back(std::move(entry));
    };
    {
        CompleteIntersection projective_space(n, {});
        ScanEntry e;
        e.alpha = alpha(n, {}).value;
        e.m = *spin_twist(projective_space);
        insert(invariant_profile(projective_space), std::move(e));
    }
    for (auto& shard : shard_out)
        for (auto& [profile, entry] : shard)
            insert(std::move(profile), std::move(entry));

    for (auto& [key, group] : grouped) {
        bool constant = true;
        for (const auto& e : group.members)
            if (e.alpha != group.members.front().alpha)
                constant = false;
        if (!constant) {
            std::string detail = group.profile.key() + " ->";
            for (const auto& e : group.members) {
                detail += " (";
                for (std::size_t t = 0; t < e.degrees.size(); ++t)
                    detail += (t ? "," : "") + std::to_string(e.degrees[t]);
                detail += "):" + std::to_string(e.alpha);
            }
            report.violations.push_back({"nonconstant_alpha", detail});
        }
        // the grouping key is exactly the hypothesis set of the 2-adic
        // predictor, so intra-group pairs are all hypothesis-satisfying pairs
        for (std::size_t i = 0; i < group.members.size(); ++i) {
            for (std::size_t j = i + 1; j < group.members.size(); ++j) {
                const CompleteIntersection X(n, group.members[i].degrees);
                const CompleteIntersection Y(n, group.members[j].degrees);
                const int predicted = predicted_alpha_difference(X, Y);
                const int actual = group.members[i].alpha ^ group.members[j].alpha;
                ++report.pair_checks;
                if (predicted == actual)
                    ++report.predictor_confirmed;
                else
                    report.violations.push_back(
                        {"predictor_mismatch",
                         group.profile.key() + " predicted=" + std::to_string(predicted) +
                             " actual=" + std::to_string(actual)});
                if (divisibility_guarantee(X, Y)) {
                    if (actual == 0)
                        ++report.guarantee_confirmed;
                    else
                        report.violations.push_back({"guarantee_violated", group.profile.key()});
                }
            }
        }
        report.groups.push_back(std::move(group));
    }

    report.elapsed_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return report;
}

} // namespace alphaci
