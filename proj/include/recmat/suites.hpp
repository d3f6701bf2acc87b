#pragma once

/**
 * @file suites.hpp
 * @brief Named verification suites over parameter grids, with optional
 * fan-out across worker threads. Results come back in task order regardless
 * of completion order.
 */

#include "recmat/catalog.hpp"
#include "recmat/identities.hpp"
#include "recmat/oracle.hpp"
#include "recmat/triangle.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace recmat {

struct RunConfig {
    std::string suite = "all";
    std::optional<int> nmax;
    std::optional<int> mmax;
    std::optional<int> rmax;
    std::optional<int> lmax;
    std::string format = "json";
    std::string out;
    int jobs = 1;

    void validate() const {
        for (const auto& b : {nmax, mmax, rmax, lmax})
            if (b && *b < 0) throw std::invalid_argument("parameter bounds must be non-negative");
        if (jobs < 1) throw std::invalid_argument("--jobs must be at least 1");
        if (format != "json" && format != "csv") throw std::invalid_argument("--format must be csv or json");
    }
};

struct SuiteResult {
    std::vector<VerifyReport> reports;
    int skipped = 0;

    std::size_t passed() const {
        return std::count_if(reports.begin(), reports.end(), [](const VerifyReport& r) { return r.equal; });
    }
    std::size_t failed() const { return reports.size() - passed(); }
    bool all_equal() const { return failed() == 0; }
};

using SuiteTask = std::function<std::vector<VerifyReport>()>;

/// Runs tasks on `jobs` threads; output keeps task order. The first exception
/// thrown by any task is rethrown after all workers finish.
inline std::vector<VerifyReport> run_tasks(const std::vector<SuiteTask>& tasks, int jobs) {
    std::vector<std::vector<VerifyReport>> slots(tasks.size());
    std::atomic<std::size_t> next{0};
    std::exception_ptr error;
    std::mutex error_mutex;
    auto worker = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < tasks.size();) {
            try {
                slots[i] = tasks[i]();
            } catch (...) {
                std::lock_guard lock(error_mutex);
                if (!error) error = std::current_exception();
            }
        }
    };
    const int n = std::max(1, std::min<int>(jobs, static_cast<int>(tasks.size())));
    if (n == 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        for (int i = 0; i < n; ++i) pool.emplace_back(worker);
        for (auto& t : pool) t.join();
    }
    if (error) std::rethrow_exception(error);
    std::vector<VerifyReport> out;
    for (auto& s : slots)
        for (auto& r : s) out.push_back(std::move(r));
    return out;
}

namespace detail {

inline Poly ore_as_poly(const OreOp& op) {
    Poly acc;
    for (int j = 0; j <= op.order(); ++j) acc += op.coeff(j) * kT.pow(j);
    return acc;
}

/// z^d p(1/z) for a polynomial in z of degree at most d.
inline Poly reverse_in_z(const Poly& p, int d) {
    std::vector<Term> terms;
    for (const Term& t : p.terms()) {
        unsigned e = t.mono.exponent(Var::z);
        terms.push_back({t.mono.without(Var::z) * Monomial::power(Var::z, d - e), t.coeff});
    }
    return Poly::from_terms(std::move(terms));
}

inline SigmaTauSpec table_family(const std::string& name) {
    if (name == "shapiro" || name == "shapiro-minors") return SigmaTauSpec::shapiro();
    if (name == "schroder" || name == "schroder-minors") return SigmaTauSpec::schroder();
    if (name == "narayana") return SigmaTauSpec::narayana();
    if (name == "xy0") return SigmaTauSpec::xy0();
    throw std::invalid_argument("no family for table " + name);
}

}  // namespace detail

/// Table reproduction: each printed row against the built triangle (or its
/// adjacent-minor triangle), plus the printed row sums weighted by tau^k.
inline std::vector<VerifyReport> reproduce_tables() {
    std::vector<VerifyReport> out;
    for (const ReferenceTable& table : reference_tables()) {
        const bool minors = table.name.ends_with("-minors");
        const SigmaTauSpec spec = detail::table_family(table.name);
        const int rows = static_cast<int>(table.rows.size()) - 1;
        const Triangle tri = Triangle::build(spec, rows + 1);
        const auto built = minors ? adjacent_minor_triangle(tri, rows) : tri.rows();
        for (int n = 0; n <= rows; ++n) {
            Poly lhs, rhs;
            for (int k = 0; k <= n; ++k) {
                lhs += built[n][k] * kT.pow(k);
                if (k < static_cast<int>(table.rows[n].size())) rhs += parse_poly(table.rows[n][k]) * kT.pow(k);
            }
            if (static_cast<int>(table.rows[n].size()) != n + 1) rhs += kT.pow(n + 7);  // malformed row
            out.push_back(VerifyReport::make("table-" + table.name, {{"n", n}}, std::move(lhs), std::move(rhs)));
        }
        for (int n = 0; n < static_cast<int>(table.row_sums.size()); ++n) {
            out.push_back(VerifyReport::make("table-" + table.name + "-rowsum", {{"n", n}},
                                             weighted_row_sum(built[n], spec.tau_tail),
                                             Poly(table.row_sums[n])));
            // The printed sums are perfect squares of column 0.
            const Poly& c0 = tri.entry(n, 0);
            out.push_back(VerifyReport::make("table-" + table.name + "-rowsum-square", {{"n", n}},
                                             Poly(table.row_sums[n]), c0 * c0));
        }
    }
    return out;
}

inline const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names{"minor",    "permanent", "f-closed", "f-rec", "residue",
                                                "catalan",  "binomial",  "ballot",   "ore",   "dual",
                                                "special",  "tables",    "all"};
    return names;
}

inline std::string canonical_suite(const std::string& s) {
    static const std::map<std::string, std::string> aliases{
        {"thm1", "minor"}, {"thm2", "permanent"}, {"thm4", "binomial"}, {"xy0", "binomial"}};
    auto it = aliases.find(s);
    std::string c = it == aliases.end() ? s : it->second;
    if (std::find(suite_names().begin(), suite_names().end(), c) == suite_names().end())
        throw std::invalid_argument("unknown suite '" + s + "'");
    return c;
}

/// Builds the task list for one suite. Defaults reproduce the full grids:
///   minor      0<=n,m<=8, 0<=r<=3, 0<=l<=min(m,3), symbolic x, y, z
///   permanent  0<=n<=m<=8, -3<=r<=3 (tuples with n < -r are skipped)
///   f-closed   0<=n<m<=10 plus F(n,n) = 0, F(n+1,n) = N_n(z^2), antisymmetry
///   f-rec      1<=m<=10, 0<=n<=10
///   residue    0<=m,n<=8
///   catalan    0<=n<m<=10
///   binomial   0<=n,m<=10
///   ballot     0<=n<=10
///   ore        factorization; L1 sweep n<=15 (--nmax); L sweep n<=12 (--mmax)
///   dual       Cigler = Lagrange n<=10 (--nmax); palindromic n<=12 (--mmax);
///              homogeneity and Riordan cross-checks at depth 8
///   special    specializations and product identities at depth 10 (--nmax)
///   tables     printed tables and row sums
inline std::vector<SuiteTask> suite_tasks(const std::string& suite_name, const RunConfig& cfg, int& skipped) {
    const std::string suite = canonical_suite(suite_name);
    std::vector<SuiteTask> tasks;
    auto add = [&](SuiteTask t) { tasks.push_back(std::move(t)); };
    auto one = [&](std::function<VerifyReport()> f) { add([f] { return std::vector<VerifyReport>{f()}; }); };

    if (suite == "all") {
        for (const std::string& s : suite_names())
            if (s != "all") {
                auto sub = suite_tasks(s, cfg, skipped);
                tasks.insert(tasks.end(), sub.begin(), sub.end());
            }
        return tasks;
    }
    if (suite == "minor") {
        const int nmax = cfg.nmax.value_or(8), mmax = cfg.mmax.value_or(8);
        const int rmax = cfg.rmax.value_or(3), lmax = cfg.lmax.value_or(3);
        auto fam = std::make_shared<const MinorFamily>(MinorFamily::symbolic(std::max(nmax, mmax) + rmax + 1));
        for (int n = 0; n <= nmax; ++n)
            for (int m = 0; m <= mmax; ++m)
                for (int r = 0; r <= rmax; ++r)
                    for (int l = 0; l <= std::min(m, lmax); ++l)
                        one([=] { return verify_weighted_minor(*fam, n, m, r, l); });
    } else if (suite == "permanent") {
        const int nmax = cfg.nmax.value_or(8), mmax = cfg.mmax.value_or(8), rmax = cfg.rmax.value_or(3);
        auto fam = std::make_shared<const PermanentFamily>(
            PermanentFamily::symbolic(std::max(nmax, mmax) * 2 + rmax + 1));
        for (int n = 0; n <= nmax; ++n)
            for (int m = n; m <= mmax; ++m)
                for (int r = -rmax; r <= rmax; ++r) {
                    if (n < -r) {
                        ++skipped;
                        continue;
                    }
                    one([=] { return verify_weighted_permanent(*fam, n, m, r); });
                }
    } else if (suite == "f-closed") {
        const int mmax = cfg.mmax.value_or(10);
        for (int m = 1; m <= mmax; ++m)
            for (int n = 0; n < m; ++n) {
                one([=] { return verify_F_closed_form(m, n); });
                one([=] {
                    return VerifyReport::make("F-antisymmetry", {{"m", m}, {"n", n}}, compute_F(m, n),
                                              -compute_F(n, m));
                });
            }
        for (int n = 0; n <= mmax; ++n) {
            one([=] { return VerifyReport::make("F-diagonal", {{"n", n}}, compute_F(n, n), Poly{}); });
            one([=] {
                return VerifyReport::make("F-subdiagonal", {{"n", n}}, compute_F(n + 1, n),
                                          narayana_poly(n).subst(Var::z, kZ * kZ));
            });
        }
    } else if (suite == "f-rec") {
        const int mmax = cfg.mmax.value_or(10), nmax = cfg.nmax.value_or(10);
        for (int m = 1; m <= mmax; ++m)
            for (int n = 0; n <= nmax; ++n) one([=] { return verify_F_recurrence(m, n); });
    } else if (suite == "residue") {
        const int mmax = cfg.mmax.value_or(8), nmax = cfg.nmax.value_or(8);
        for (int m = 0; m <= mmax; ++m)
            for (int n = 0; n <= nmax; ++n)
                one([=] { return VerifyReport::make("residue-F", {{"m", m}, {"n", n}}, residue_F(m, n), compute_F(m, n)); });
    } else if (suite == "catalan") {
        const int mmax = cfg.mmax.value_or(10);
        for (int m = 1; m <= mmax; ++m)
            for (int n = 0; n < m; ++n) one([=] { return verify_catalan_corollary(m, n); });
    } else if (suite == "binomial") {
        const int nmax = cfg.nmax.value_or(10), mmax = cfg.mmax.value_or(10);
        for (int n = 0; n <= nmax; ++n)
            for (int m = 0; m <= mmax; ++m) one([=] { return verify_binomial_minor_sum(m, n); });
    } else if (suite == "ballot") {
        const int nmax = cfg.nmax.value_or(10);
        for (int n = 0; n <= nmax; ++n) one([=] { return verify_ballot(n); });
    } else if (suite == "ore") {
        const int l1_max = cfg.nmax.value_or(15), l_max = cfg.mmax.value_or(12);
        one([] {
            return VerifyReport::make("ore-factorization", {},
                                      detail::ore_as_poly(operator_G() * operator_L1()),
                                      detail::ore_as_poly(operator_L()));
        });
        add([=] {
            const OreOp l1 = operator_L1();
            const auto seq = narayana_z2_sequence(l1_max + l1.order() + 1);
            std::vector<VerifyReport> out;
            for (int n = 0; n <= l1_max; ++n)
                out.push_back(VerifyReport::make("L1-annihilates", {{"n", n}}, ore_apply(l1, seq, n), Poly{}));
            return out;
        });
        add([=] {
            const OreOp l = operator_L();
            const auto seq = subdiagonal_F_sequence(l_max + l.order() + 1);
            std::vector<VerifyReport> out;
            for (int n = 0; n <= l_max; ++n)
                out.push_back(VerifyReport::make("L-annihilates", {{"n", n}}, ore_apply(l, seq, n), Poly{}));
            return out;
        });
    } else if (suite == "dual") {
        const int cig = cfg.nmax.value_or(10), pal = cfg.mmax.value_or(12);
        for (int n = 0; n <= cig; ++n)
            for (int k = 0; k <= n; ++k)
                one([=] {
                    return VerifyReport::make("cigler-lagrange", {{"n", n}, {"k", k}}, cigler_entry(n, k),
                                              narayana_entry(n, k));
                });
        for (int n = 0; n <= pal; ++n)
            for (int k = 0; k <= n; ++k)
                one([=] {
                    Poly p = narayana_entry(n, k);
                    return VerifyReport::make("narayana-palindromic", {{"n", n}, {"k", k}}, p,
                                              detail::reverse_in_z(p, n - k));
                });
        add([] {
            const int depth = 8;
            const Triangle tri = Triangle::build(SigmaTauSpec::xyz(), depth);
            const std::pair<Var, Poly> scale[] = {{Var::x, kT * kX}, {Var::y, kT * kY}, {Var::z, kT * kT * kZ}};
            std::vector<VerifyReport> out;
            for (int n = 0; n <= depth; ++n)
                for (int k = 0; k <= n; ++k)
                    out.push_back(VerifyReport::make("homogeneity", {{"n", n}, {"k", k}},
                                                     tri.entry(n, k).substitute(scale),
                                                     kT.pow(n - k) * tri.entry(n, k)));
            return out;
        });
        for (const auto& [name, spec] : std::vector<std::pair<std::string, SigmaTauSpec>>{
                 {"xyz", SigmaTauSpec::xyz()}, {"narayana", SigmaTauSpec::narayana()}, {"xy0", SigmaTauSpec::xy0()}}) {
            add([name, spec] {
                const int depth = 8;
                const RiordanPair rp = riordan_pair(spec, depth);
                const Triangle tri = Triangle::build(spec, depth);
                std::vector<VerifyReport> out;
                for (int n = 0; n <= depth; ++n)
                    for (int k = 0; k <= n; ++k)
                        out.push_back(VerifyReport::make("riordan-" + name, {{"n", n}, {"k", k}}, tri.entry(n, k),
                                                         riordan_entry(rp.g, rp.f, n, k)));
                return out;
            });
        }
    } else if (suite == "special") {
        const int depth = cfg.nmax.value_or(10);
        add([=] { return verify_specializations(depth); });
    } else if (suite == "tables") {
        add([] { return reproduce_tables(); });
    }
    return tasks;
}

inline SuiteResult run_suite(const RunConfig& cfg) {
    cfg.validate();
    SuiteResult res;
    auto tasks = suite_tasks(cfg.suite, cfg, res.skipped);
    res.reports = run_tasks(tasks, cfg.jobs);
    return res;
}

}  // namespace recmat
