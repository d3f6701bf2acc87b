// Acceptance run: one PASS/FAIL line per criterion. Every check is exact
// polynomial equality; the only tolerance is the wall-clock budget below.

#include "recmat/recmat.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <set>
#include <string>
#include <vector>

using namespace recmat;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

struct Criterion {
    int id;
    std::string name;
    double budget_seconds;
    std::function<Outcome()> run;
};

SuiteResult suite(const std::string& name, std::optional<int> nmax = {}, std::optional<int> mmax = {}) {
    RunConfig cfg;
    cfg.suite = name;
    cfg.nmax = nmax;
    cfg.mmax = mmax;
    return run_suite(cfg);
}

/// All reports equal, at least `min_total` of them, and every listed id present.
Outcome expect_all(const SuiteResult& r, std::size_t min_total, const std::vector<std::string>& ids = {}) {
    Outcome o;
    std::set<std::string> seen;
    for (const auto& rep : r.reports) {
        seen.insert(rep.identity_id);
        if (!rep.equal && o.ok) {
            o.ok = false;
            o.detail = "first failure: " + rep.identity_id;
            for (const auto& [k, v] : rep.parameters) o.detail += " " + k + "=" + std::to_string(v);
        }
    }
    for (const auto& id : ids)
        if (!seen.count(id)) {
            o.ok = false;
            o.detail += " missing " + id;
        }
    if (r.reports.size() < min_total) {
        o.ok = false;
        o.detail += " only " + std::to_string(r.reports.size()) + " records";
    }
    if (o.ok) o.detail = std::to_string(r.reports.size()) + " records";
    return o;
}

Outcome merge(Outcome a, const Outcome& b) {
    a.ok = a.ok && b.ok;
    a.detail += "; " + b.detail;
    return a;
}

Outcome table_reproduction() {
    auto reports = reproduce_tables();
    SuiteResult r{std::move(reports), 0};
    Outcome o = expect_all(r, 40,
                           {"table-shapiro", "table-schroder", "table-narayana", "table-xy0", "table-shapiro-minors",
                            "table-schroder-minors", "table-shapiro-minors-rowsum", "table-schroder-minors-rowsum",
                            "table-schroder-minors-rowsum-square"});
    // Depths printed: rows 0..5 for the plain triangles, 0..4 for the rest.
    Triangle sh = build_triangle(SigmaTauSpec::shapiro(), 5);
    if (sh.entry(5, 0) != Poly(132)) o = {false, "Shapiro (5,0)"};
    return o;
}

Outcome minor_sweep() { return expect_all(suite("minor"), 9 * 9 * 4 * 3, {"weighted-minor"}); }

Outcome permanent_sweep() {
    SuiteResult r = suite("permanent");
    Outcome o = expect_all(r, 200, {"weighted-permanent"});
    bool neg = false, zero = false, pos = false;
    for (const auto& rep : r.reports) {
        const long long rr = rep.parameters[2].second;
        neg |= rr < 0;
        zero |= rr == 0;
        pos |= rr > 0;
    }
    if (!(neg && zero && pos)) o = {false, "not all correction branches exercised"};
    return o;
}

Outcome f_family() {
    return merge(expect_all(suite("f-closed"), 55 + 22, {"F-closed-form", "F-diagonal", "F-subdiagonal"}),
                 expect_all(suite("f-rec"), 110, {"F-recurrence"}));
}

Outcome residue_oracle() { return expect_all(suite("residue"), 81, {"residue-F"}); }

Outcome catalan() {
    SuiteResult r = suite("catalan");
    Outcome o = expect_all(r, 55, {"catalan-alternating"});
    for (const auto& rep : r.reports)
        if (!rep.lhs.is_integer()) o = {false, "non-integral left side"};
    return o;
}

Outcome binomial_and_ballot() {
    Outcome o = merge(expect_all(suite("binomial"), 121, {"binomial-minor-sum"}),
                      expect_all(suite("ballot"), 11, {"ballot"}));
    const auto& flat = sequence_catalog().at("A033184").values;
    std::size_t i = 0;
    for (int n = 0; i < flat.size(); ++n)
        for (int k = 0; k <= n; ++k, ++i) {
            BigInt c = ballot_number(n, k);
            if (c != static_cast<long>(flat[i]) || c * (n + 1) != binomial(2 * n - k, n) * (k + 1)) o = {false, "ballot number mismatch"};
        }
    return o;
}

Outcome operators() {
    Outcome o = expect_all(suite("ore"), 1 + 16 + 13, {"ore-factorization", "L1-annihilates", "L-annihilates"});
    if (!verify_factorization()) o = {false, "factorization"};
    return o;
}

Outcome dual_formulas() {
    Outcome o = expect_all(suite("dual"), 66 + 91 + 45,
                           {"cigler-lagrange", "narayana-palindromic", "homogeneity"});
    if (!homogeneity_check(SigmaTauSpec::xyz(), 8)) o = {false, "homogeneity_check"};
    return o;
}

Outcome specializations() {
    return expect_all(suite("special"), 4 * 11 + 4 * 66,
                      {"narayana-at-z0", "narayana-at-z1", "narayana-at-z2", "schroder-minor-product",
                       "schroder-permanent", "narayana-minor-product", "narayana-permanent"});
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria{
        {1, "table reproduction and minor row sums", 1.0, table_reproduction},
        {2, "weighted minor sweep, symbolic x,y,z", 60.0, minor_sweep},
        {3, "weighted permanent sweep, symbolic y,z", 60.0, permanent_sweep},
        {4, "F closed form, recurrence, boundary rows", 30.0, f_family},
        {5, "residue oracle equals determinant sums", 60.0, residue_oracle},
        {6, "Catalan alternating sums", 10.0, catalan},
        {7, "binomial minor sums and ballot numbers", 10.0, binomial_and_ballot},
        {8, "operator factorization and annihilation", 10.0, operators},
        {9, "dual closed forms, palindromy, homogeneity", 10.0, dual_formulas},
        {10, "specializations and product identities", 10.0, specializations},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        if (secs > c.budget_seconds) {
            o.ok = false;
            o.detail += "; over budget";
        }
        failed += !o.ok;
        std::printf("[%s] AC%d %s (%.3fs / %.0fs budget) %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name.c_str(), secs,
                    c.budget_seconds, o.detail.c_str());
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
