// recmat: emit recursive-matrix triangles, look up cells, run verification
// suites and cross-check against the embedded sequence catalog.
//
// Exit codes: 0 success, 1 identity failure or catalog mismatch, 2 usage error.

#include "recmat/recmat.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace recmat;

constexpr int kExitOk = 0;
constexpr int kExitFailure = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

const std::vector<std::string> kFamilies{"shapiro", "schroder", "narayana", "pascal", "xy0", "generic"};

std::string family_list() {
    std::string s;
    for (const auto& f : kFamilies) s += (s.empty() ? "" : ", ") + f;
    return s;
}

struct FamilyArgs {
    std::string family;
    std::optional<std::string> sigma0, sigma, tau;

    bool explicit_spec() const { return sigma0 || sigma || tau; }
};

Poly parse_arg(const std::string& flag, const std::string& text) {
    try {
        return parse_poly(text);
    } catch (const PolyParseError& e) {
        throw UsageError(flag + ": " + e.what());
    }
}

/// Explicit sigma/tau flags build sigma = (sigma0, sigma, sigma, ...),
/// tau = (tau, tau, ...). Unset fields fall back to the symbolic x, y, z
/// family; a tau that is identically zero opts into the degenerate case.
SigmaTauSpec resolve_family(const FamilyArgs& a) {
    std::string fam = a.family.empty() ? (a.explicit_spec() ? "generic" : "") : a.family;
    if (fam.empty()) throw UsageError("a family is required; known families: " + family_list());
    if (a.explicit_spec() && fam != "generic")
        throw UsageError("--sigma0/--sigma/--tau require family 'generic'");
    if (fam == "shapiro") return SigmaTauSpec::shapiro();
    if (fam == "schroder") return SigmaTauSpec::schroder();
    if (fam == "narayana") return SigmaTauSpec::narayana();
    if (fam == "pascal") return SigmaTauSpec::pascal();
    if (fam == "xy0") return SigmaTauSpec::xy0();
    if (fam == "generic") {
        Poly s = a.sigma ? parse_arg("--sigma", *a.sigma) : kY;
        Poly s0 = a.sigma0 ? parse_arg("--sigma0", *a.sigma0) : (a.sigma ? s : kX);
        Poly t = a.tau ? parse_arg("--tau", *a.tau) : kZ;
        const bool zero_tau = t.is_zero();
        return SigmaTauSpec::lead_then_constant(std::move(s0), std::move(s), std::move(t), zero_tau);
    }
    throw UsageError("unknown family '" + fam + "'; known families: " + family_list());
}

void add_family_options(CLI::App* cmd, FamilyArgs& a) {
    cmd->add_option("family,--family", a.family, "Family: " + family_list());
    cmd->add_option("--sigma0", a.sigma0, "Explicit sigma_0 polynomial");
    cmd->add_option("--sigma", a.sigma, "Explicit sigma_k polynomial for k >= 1");
    cmd->add_option("--tau", a.tau, "Explicit tau_k polynomial for k >= 1");
}

/// Writes to --out when given, stdout otherwise.
class Sink {
public:
    explicit Sink(const std::string& path) {
        if (!path.empty()) {
            file_.open(path);
            if (!file_) throw UsageError("cannot open output file '" + path + "'");
        }
    }
    std::ostream& out() { return file_.is_open() ? file_ : std::cout; }
    bool to_file() const { return file_.is_open(); }

private:
    std::ofstream file_;
};

int cmd_triangle(const FamilyArgs& fa, int depth, const std::string& format, const std::string& out) {
    if (depth < 0) throw UsageError("--depth must be non-negative");
    const Triangle tri = Triangle::build(resolve_family(fa), depth);
    Sink sink(out);
    if (format == "csv") sink.out() << triangle_to_csv(tri.rows());
    else sink.out() << triangle_to_json(tri.rows(), fa.family.empty() ? "generic" : fa.family).dump() << '\n';
    return kExitOk;
}

int cmd_entry(const FamilyArgs& fa, int n, int k) {
    if (n < 0 || k < 0 || k > n) throw UsageError("entry: need 0 <= k <= n");
    std::cout << Triangle::build(resolve_family(fa), n).entry(n, k).to_string() << '\n';
    return kExitOk;
}

int cmd_verify(const RunConfig& cfg) {
    try {
        cfg.validate();
        canonical_suite(cfg.suite);
    } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
    }
    const SuiteResult res = run_suite(cfg);
    Sink sink(cfg.out);
    std::ostream& os = sink.out();
    if (cfg.format == "csv") {
        os << kReportCsvHeader << '\n';
        for (const auto& r : res.reports) os << report_to_csv(r) << '\n';
    } else {
        for (const auto& r : res.reports) os << report_to_json(r).dump() << '\n';
    }
    nlohmann::ordered_json summary;
    summary["suite"] = cfg.suite;
    summary["total"] = res.reports.size();
    summary["passed"] = res.passed();
    summary["failed"] = res.failed();
    summary["skipped"] = res.skipped;
    const std::string line = cfg.format == "csv"
                                 ? "# summary suite=" + cfg.suite + " total=" + std::to_string(res.reports.size()) +
                                       " passed=" + std::to_string(res.passed()) +
                                       " failed=" + std::to_string(res.failed()) +
                                       " skipped=" + std::to_string(res.skipped)
                                 : nlohmann::ordered_json{{"summary", summary}}.dump();
    os << line << '\n';
    if (sink.to_file()) std::cout << line << '\n';
    return res.all_equal() ? kExitOk : kExitFailure;
}

std::string join(const std::vector<std::string>& xs) {
    std::string s;
    for (const auto& x : xs) s += (s.empty() ? "" : ",") + x;
    return s;
}

/// Compares computed values with a catalog prefix; prints one line either way.
bool check_catalog(std::ostream& os, const std::string& label, const std::string& id,
                   const std::vector<std::string>& computed, std::size_t offset = 0) {
    const auto& ref = sequence_catalog().at(id).values;
    std::vector<std::string> expect;
    for (std::size_t i = 0; i < computed.size(); ++i) {
        if (offset + i >= ref.size()) {
            os << "mismatch " << id << ' ' << label << ": index " << i << " beyond catalog prefix\n";
            return false;
        }
        expect.push_back(std::to_string(ref[offset + i]));
        if (computed[i] != expect.back()) {
            os << "mismatch " << id << ' ' << label << ": index " << i << " computed " << computed[i]
               << " expected " << expect.back() << '\n';
            return false;
        }
    }
    os << "ok " << id << ' ' << label << ": " << join(computed) << '\n';
    return true;
}

int cmd_seqcheck(int depth) {
    // Triangle prefixes hold rows 0..5; column prefixes are longer.
    constexpr int kMaxDepth = 5;
    if (depth < 0 || depth > kMaxDepth)
        throw UsageError("seqcheck: --depth must lie in [0, " + std::to_string(kMaxDepth) + "]");
    const Triangle shapiro = Triangle::build(SigmaTauSpec::shapiro(), depth);
    const Triangle schroder = Triangle::build(SigmaTauSpec::schroder(), depth);
    const Triangle narayana = Triangle::build(SigmaTauSpec::narayana(), depth);

    auto column0 = [&](const Triangle& t) {
        std::vector<std::string> v;
        for (int n = 0; n <= depth; ++n) v.push_back(t.entry(n, 0).to_string());
        return v;
    };
    auto flat = [&](const Triangle& t, std::optional<int> z) {
        std::vector<std::string> v;
        for (int n = 0; n <= depth; ++n)
            for (int k = 0; k <= n; ++k)
                v.push_back((z ? t.entry(n, k).subst(Var::z, Poly(*z)) : t.entry(n, k)).to_string());
        return v;
    };
    std::vector<std::string> ballot;
    for (int n = 0; n <= depth; ++n)
        for (int k = 0; k <= n; ++k) ballot.push_back(ballot_number(n, k).get_str());
    std::vector<std::string> catalan{"1"};  // C_0, then C_{i+1} = N_i(1)
    for (int i = 0; i <= depth; ++i) catalan.push_back(narayana_poly(i).subst(Var::z, Poly(1)).to_string());

    bool ok = true;
    ok &= check_catalog(std::cout, "shapiro column 0", "A000108", column0(shapiro), 1);
    ok &= check_catalog(std::cout, "N_n(1) with C_0", "A000108", catalan);
    ok &= check_catalog(std::cout, "schroder column 0", "A001003", column0(schroder));
    ok &= check_catalog(std::cout, "shapiro triangle", "A039598", flat(shapiro, std::nullopt));
    ok &= check_catalog(std::cout, "schroder triangle", "A110440", flat(schroder, std::nullopt));
    ok &= check_catalog(std::cout, "narayana at z=1", "A039598", flat(narayana, 1));
    ok &= check_catalog(std::cout, "narayana at z=2", "A110440", flat(narayana, 2));
    ok &= check_catalog(std::cout, "ballot coefficients", "A033184", ballot);
    // The ballot coefficients must also be the ones carried by the minor sums.
    for (int n = 0; n <= depth; ++n) {
        VerifyReport r = verify_ballot(n);
        if (!r.equal) {
            std::cout << "mismatch ballot minor sum at n=" << n << '\n';
            ok = false;
        }
    }
    return ok ? kExitOk : kExitFailure;
}

int cmd_gamma(int m, int n, const std::string& format) {
    if (m < 0 || n < 0) throw UsageError("gamma: need m, n >= 0");
    const Poly f = compute_F(m, n);
    GammaExpansion g;
    try {
        g = gamma_expand(f);
    } catch (const std::invalid_argument& e) {
        std::cerr << "recmat: " << e.what() << '\n';
        return kExitFailure;
    }
    const bool ok = gamma_reconstruct(g) == f;
    if (format == "csv") {
        std::cout << "j,gamma\n";
        for (std::size_t j = 0; j < g.gamma.size(); ++j) std::cout << j << ',' << g.gamma[j].to_string() << '\n';
    } else {
        nlohmann::ordered_json j;
        j["m"] = m;
        j["n"] = n;
        j["F"] = f.to_string();
        j["degree"] = f.is_zero() ? -1 : g.degree;
        nlohmann::ordered_json arr = nlohmann::ordered_json::array();
        for (const Rational& c : g.gamma) arr.push_back(c.to_string());
        j["gamma"] = std::move(arr);
        j["reconstructs"] = ok;
        std::cout << j.dump() << '\n';
    }
    return ok ? kExitOk : kExitFailure;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Recursive matrices: triangles, identities and catalog checks"};
    app.require_subcommand(1);

    FamilyArgs fam;
    int depth = 5;
    std::string format = "csv";
    std::string out;
    auto* tri = app.add_subcommand("triangle", "Print the first rows of a recursive matrix");
    add_family_options(tri, fam);
    tri->add_option("--depth", depth, "Last row index")->capture_default_str();
    tri->add_option("--format", format, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();
    tri->add_option("--out", out, "Output path (default stdout)");

    int n = 0, k = 0;
    auto* ent = app.add_subcommand("entry", "Print a single cell A(n,k)");
    add_family_options(ent, fam);
    ent->add_option("--n", n, "Row index")->required();
    ent->add_option("--k", k, "Column index")->required();

    RunConfig cfg;
    auto* ver = app.add_subcommand("verify", "Run a verification suite");
    ver->add_option("--suite", cfg.suite, "Suite: " + [] {
        std::string s;
        for (const auto& x : suite_names()) s += (s.empty() ? "" : ", ") + x;
        return s + " (aliases thm1, thm2, thm4, xy0)";
    }())->capture_default_str();
    ver->add_option("--nmax", cfg.nmax, "Upper bound on n");
    ver->add_option("--mmax", cfg.mmax, "Upper bound on m");
    ver->add_option("--rmax", cfg.rmax, "Bound on |r|");
    ver->add_option("--lmax", cfg.lmax, "Upper bound on l");
    ver->add_option("--format", cfg.format, "json (newline-delimited) or csv")
        ->check(CLI::IsMember({"csv", "json"}))
        ->capture_default_str();
    ver->add_option("--out", cfg.out, "Output path (default stdout)");
    ver->add_option("--jobs", cfg.jobs, "Worker threads")->capture_default_str();

    int seq_depth = 5;
    auto* seq = app.add_subcommand("seqcheck", "Compare triangles against the embedded sequence catalog");
    seq->add_option("--depth", seq_depth, "Last row index")->capture_default_str();

    int gm = 0, gn = 0;
    std::string gformat = "json";
    auto* gam = app.add_subcommand("gamma", "Gamma-basis expansion of F_{m,n}(z)");
    gam->add_option("--m", gm, "m")->required();
    gam->add_option("--n", gn, "n")->required();
    gam->add_option("--format", gformat, "csv or json")->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (*tri) return cmd_triangle(fam, depth, format, out);
        if (*ent) return cmd_entry(fam, n, k);
        if (*ver) return cmd_verify(cfg);
        if (*seq) return cmd_seqcheck(seq_depth);
        if (*gam) return cmd_gamma(gm, gn, gformat);
    } catch (const UsageError& e) {
        std::cerr << "recmat: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        std::cerr << "recmat: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "recmat: " << e.what() << '\n';
        return kExitFailure;
    }
    return kExitUsage;
}
