#include "cli.hpp"

#include "finitea/analytic.hpp"
#include "finitea/cache.hpp"
#include "finitea/dobinski.hpp"
#include "finitea/finite_euler.hpp"
#include "finitea/gregory.hpp"
#include "finitea/parallel.hpp"
#include "finitea/primes.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <map>
#include <ostream>
#include <sstream>

namespace finitea::cli {

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;
constexpr std::size_t kMaxListed = 20;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ReportOptions {
    u64 pmin = 5;
    u64 pmax = 0;
    unsigned threads = default_threads();
    std::string json;
    bool no_timestamp = false;
};

void add_report_options(CLI::App* cmd, ReportOptions& o) {
    cmd->add_option("--pmin", o.pmin, "smallest prime of the window")->capture_default_str();
    cmd->add_option("--pmax", o.pmax, "largest prime of the window")->capture_default_str();
    cmd->add_option("--threads", o.threads, "worker threads")->check(CLI::PositiveNumber);
    cmd->add_option("--json", o.json, "write the report as one JSON line to this file");
    cmd->add_flag("--no-timestamp", o.no_timestamp, "omit timestamp and wall time from the JSON report");
}

Rational rational_arg(const std::string& s, const char* name) {
    auto q = parse_rational(s);
    if (!q) throw UsageError(std::string("malformed rational for ") + name + ": '" + s + "'");
    return *q;
}

std::vector<Rational> rational_list(const std::vector<std::string>& items, const char* name) {
    std::vector<Rational> out;
    for (const auto& s : items) out.push_back(rational_arg(s, name));
    return out;
}

int emit_report(VerificationReport report, const ReportOptions& o, std::ostream& out, std::ostream& err) {
    const auto primes = sieve_primes(o.pmin, o.pmax);
    out << "theorem     " << report.theorem << '\n';
    out << "parameters ";
    for (const auto& [k, v] : report.parameters) out << ' ' << k << '=' << v;
    out << '\n';
    out << "window      [" << o.pmin << ", " << o.pmax << "]  " << primes.size() << " primes\n";
    out << "checks      " << report.pass_count() << " passed, " << report.fail_count() << " failed";
    if (!report.records.empty()) out << std::fixed << std::setprecision(2) << " (" << 100 * report.pass_rate() << "%)";
    out << '\n';
    out << "skipped     " << report.skipped.size() << '\n';

    std::map<std::string, std::pair<std::size_t, std::size_t>> by_label;
    std::vector<std::string> order;
    for (const auto& r : report.records) {
        auto [it, inserted] = by_label.try_emplace(r.label, 0, 0);
        if (inserted) order.push_back(r.label);
        ++it->second.first;
        if (!r.pass) ++it->second.second;
    }
    if (!order.empty()) {
        out << '\n' << std::left << std::setw(20) << "label" << std::right << std::setw(8) << "checks" << std::setw(8)
            << "failed" << '\n';
        for (const auto& label : order)
            out << std::left << std::setw(20) << label << std::right << std::setw(8) << by_label[label].first
                << std::setw(8) << by_label[label].second << '\n';
    }

    std::size_t shown = 0;
    for (const auto& s : report.skipped) {
        if (shown++ == kMaxListed) {
            out << "  ... " << report.skipped.size() - kMaxListed << " more skipped\n";
            break;
        }
        out << "  skip p=" << s.prime << ": " << s.reason << '\n';
    }
    shown = 0;
    for (const auto& f : report.failures()) {
        if (shown++ == kMaxListed) {
            out << "  ... more failures\n";
            break;
        }
        out << "FAIL p=" << f.prime << ' ' << f.label << ": lhs=" << f.lhs << " rhs=" << f.rhs << '\n';
    }

    if (!o.json.empty()) {
        if (o.no_timestamp) {
            report.timestamp.reset();
            report.wall_time_seconds = 0;
        } else {
            report.timestamp = utc_timestamp();
        }
        std::ofstream file(o.json);
        if (!file) {
            err << "cannot write " << o.json << '\n';
            return kExitUsage;
        }
        file << to_json(report).dump() << '\n';
    }
    return report.all_passed() ? 0 : kExitFail;
}

// gamma_M(-1) against gamma_W wherever both are admissible.
int compare_wilson(const std::vector<u64>& window, unsigned threads, std::ostream& out) {
    const AElement m = gamma_M(-1, window, threads);
    const AElement w = wilson_gamma(window, threads);
    std::size_t compared = 0;
    for (std::size_t i = 0; i < window.size(); ++i)
        if (m.admissible(i) && w.admissible(i)) ++compared;
    const auto bad = m.mismatches(w);
    out << "gamma_M(-1) = gamma_W at " << compared - bad.size() << " of " << compared << " admissible primes\n";
    for (u64 p : bad) out << "FAIL p=" << p << " gamma_M(-1)=" << *m.at(p) << " gamma_W=" << *w.at(p) << '\n';
    return bad.empty() ? 0 : kExitFail;
}

template <class T>
void write_bfile(std::ostream& os, const std::vector<T>& values) {
    for (std::size_t n = 0; n < values.size(); ++n) os << n << ' ' << values[n] << '\n';
}

std::vector<std::string> sequence(const std::string& name, unsigned n_max, const Rational& x, unsigned j) {
    std::vector<std::string> out;
    if (name == "bell") {
        for (const auto& v : bell(n_max)) out.push_back(v.get_str());
    } else if (name == "g") {
        for (const auto& v : g_seq(n_max)) out.push_back(v.get_str());
    } else if (name == "b2j") {
        if (j > 1) throw UsageError("--j must be 0 or 1 for b2j");
        const auto fam = coeff_family(2, n_max);
        for (unsigned n = 0; n <= n_max; ++n) out.push_back(to_string(fam.b[j][n](x)));
    } else if (name == "gregory") {
        for (const auto& v : gregory_values(x, n_max)) out.push_back(to_string(v));
    }
    return out;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"finitea: finite analogues of e and Euler's constant, verified prime by prime"};
    app.name("finitea");
    app.require_subcommand(1);
    app.set_help_all_flag("--help-all");

    // verify dobinski / verify euler
    auto* verify = app.add_subcommand("verify", "check congruences over a prime window");
    verify->require_subcommand(1);

    ReportOptions dob_opts;
    dob_opts.pmax = 2003;
    unsigned dob_r = 1, dob_nmax = 10;
    std::string dob_x = "1";
    auto* dob = verify->add_subcommand("dobinski", "D_{r,A}(n; x) = sum_j b_{r,j}(n; x) D_{r,A}(j; x) + g_r(n; x)");
    dob->add_option("--r", dob_r, "order r >= 1")->capture_default_str()->check(CLI::PositiveNumber);
    dob->add_option("--nmax", dob_nmax, "largest n")->capture_default_str();
    dob->add_option("--x", dob_x, "rational x")->capture_default_str();
    add_report_options(dob, dob_opts);

    ReportOptions eul_opts;
    eul_opts.pmax = 1009;
    std::string which;
    std::vector<std::string> eul_x{"0"};
    std::vector<unsigned> eul_m{1}, eul_k{2};
    auto* eul = verify->add_subcommand("euler", "finite Euler-constant theorems and lemmas");
    eul->add_option("--which", which, "theorem")
        ->required()
        ->check(CLI::IsMember({"mascheroni", "interlude", "kluyver", "eisenstein", "logadd", "l1"}));
    eul->add_option("--x", eul_x, "rational x, comma separated")->delimiter(',')->capture_default_str();
    eul->add_option("--m", eul_m, "Kluyver m, comma separated")->delimiter(',')->capture_default_str();
    eul->add_option("--k", eul_k, "interlude k >= 2, comma separated")->delimiter(',')->capture_default_str();
    add_report_options(eul, eul_opts);

    // search
    std::string target;
    u64 s_pmin = 5, s_pmax = 600;
    unsigned s_threads = default_threads();
    bool no_cache = false;
    auto* search = app.add_subcommand("search", "primes where a residue vanishes");
    search->add_option("--target", target, "eA-zero or wilson")->required()->check(CLI::IsMember({"eA-zero", "wilson"}));
    search->add_option("--pmin", s_pmin)->capture_default_str();
    search->add_option("--pmax", s_pmax)->capture_default_str();
    search->add_option("--threads", s_threads)->check(CLI::PositiveNumber);
    search->add_flag("--no-cache", no_cache, "neither read nor append the residue cache");

    // seq
    std::string seq_name, seq_x, bfile;
    unsigned seq_nmax = 10, seq_j = 0;
    auto* seq = app.add_subcommand("seq", "print a coefficient sequence");
    seq->add_option("--name", seq_name)->required()->check(CLI::IsMember({"bell", "g", "b2j", "gregory"}));
    seq->add_option("--nmax", seq_nmax)->capture_default_str();
    seq->add_option("--x", seq_x, "x for b2j (default 1) and gregory (default 0)");
    seq->add_option("--j", seq_j, "j for b2j")->capture_default_str();
    seq->add_option("--bfile", bfile, "write 'n a(n)' lines to this file");

    // gamma
    std::string method, g_x = "0";
    unsigned g_m = 1, g_k = 1, g_terms = 1000;
    mpfr_prec_t g_prec = 128;
    auto* gamma = app.add_subcommand("gamma", "real partial sums of the Gregory series for Euler's constant");
    gamma->add_option("--method", method)->required()->check(CLI::IsMember({"mascheroni", "kluyver", "bla101"}));
    gamma->add_option("--x", g_x, "rational x > -1")->capture_default_str();
    auto* m_opt = gamma->add_option("--m", g_m, "Kluyver m")->capture_default_str();
    gamma->add_option("--k", g_k, "number of shifts for bla101")->capture_default_str()->check(CLI::PositiveNumber);
    gamma->add_option("--terms", g_terms)->capture_default_str();
    gamma->add_option("--prec", g_prec, "bits, at least 64")->capture_default_str();

    // cache
    std::size_t sample = 50;
    u64 seed = 1;
    auto* cache = app.add_subcommand("cache", "residue cache maintenance");
    cache->require_subcommand(1);
    auto* cache_verify = cache->add_subcommand("verify", "recompute a random sample of cached residues");
    cache_verify->add_option("--sample", sample)->capture_default_str();
    cache_verify->add_option("--seed", seed)->capture_default_str();

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*dob) {
            const Rational x = rational_arg(dob_x, "--x");
            const auto window = sieve_primes(dob_opts.pmin, dob_opts.pmax);
            return emit_report(verify_dobinski(dob_r, dob_nmax, x, window, dob_opts.threads), dob_opts, out, err);
        }
        if (*eul) {
            const auto xs = rational_list(eul_x, "--x");
            const auto window = sieve_primes(eul_opts.pmin, eul_opts.pmax);
            const unsigned t = eul_opts.threads;
            if (which == "interlude" && std::any_of(eul_k.begin(), eul_k.end(), [](unsigned k) { return k < 2; }))
                throw UsageError("--k values must be at least 2");
            VerificationReport report;
            if (which == "mascheroni") report = verify_mascheroni(xs, window, t);
            if (which == "interlude") report = verify_interlude(eul_k, xs, window, t);
            if (which == "kluyver") report = verify_kluyver(eul_m, xs, window, t);
            if (which == "eisenstein") report = verify_eisenstein(xs, window, t);
            if (which == "logadd") report = verify_log_additivity(xs, window, t);
            if (which == "l1") report = verify_L1(xs, window, t);
            int code = emit_report(std::move(report), eul_opts, out, err);
            if (which == "mascheroni" && std::find(xs.begin(), xs.end(), Rational(-1)) != xs.end()) {
                const int wilson = compare_wilson(window, t, out);
                if (code == 0) code = wilson;
            }
            return code;
        }
        if (*search) {
            std::unique_ptr<ResidueCache> store;
            if (!no_cache) store = std::make_unique<ResidueCache>(default_cache_dir());
            const auto kind = target == "wilson" ? SearchTarget::wilson : SearchTarget::eA_zero;
            const auto result = search_primes(kind, s_pmin, s_pmax, store.get(), s_threads);
            for (u64 p : result.hits) out << p << '\n';
            out << "# " << result.hits.size() << " hit(s); " << result.from_cache << " cached, " << result.computed
                << " computed\n";
            return 0;
        }
        if (*seq) {
            const bool b2j = seq_name == "b2j";
            const Rational x = rational_arg(seq_x.empty() ? (b2j ? "1" : "0") : seq_x, "--x");
            const auto values = sequence(seq_name, seq_nmax, x, seq_j);
            if (bfile.empty()) {
                write_bfile(out, values);
            } else {
                std::ofstream file(bfile);
                if (!file) {
                    err << "cannot write " << bfile << '\n';
                    return kExitUsage;
                }
                write_bfile(file, values);
                out << "wrote " << values.size() << " terms to " << bfile << '\n';
            }
            return 0;
        }
        if (*gamma) {
            const Rational x = rational_arg(g_x, "--x");
            if (x <= -1) throw UsageError("--x must exceed -1");
            if (g_prec < kMinPrecision) throw UsageError("--prec must be at least 64");
            if (method == "mascheroni" && m_opt->count() && g_m != 0)
                throw UsageError("mascheroni is the m = 0 case; use --method kluyver for m > 0");
            const unsigned m = method == "mascheroni" ? 0 : g_m;

            BigFloat value(g_prec);
            std::vector<std::pair<std::string, std::string>> rows = {{"method", method}, {"x", to_string(x)}};
            if (method == "bla101") {
                value = bla101_partial(g_k, x, g_terms, g_prec);
                Rational product = 1;
                for (unsigned j = 1; j <= g_k; ++j) product *= x + j;
                BigFloat logs = log(BigFloat(product, g_prec)) / BigFloat(static_cast<long>(g_k), g_prec);
                rows.push_back({"k", std::to_string(g_k)});
                rows.push_back({"(1/k)sum log(x+j)", logs.to_string(30)});
            } else {
                value = mascheroni_partial(x, m, g_terms, g_prec);
                rows.push_back({"m", std::to_string(m)});
                rows.push_back({"H_m", to_string(harmonic(m))});
                rows.push_back({"log(x+m+1)", log(BigFloat(x + m + 1, g_prec)).to_string(30)});
            }
            const BigFloat ref = euler_gamma_reference(g_prec);
            rows.push_back({"terms", std::to_string(g_terms)});
            rows.push_back({"precision", std::to_string(g_prec)});
            rows.push_back({"value", value.to_string(30)});
            rows.push_back({"gamma_ref", ref.to_string(30)});
            rows.push_back({"|value-gamma|", abs(value - ref).to_string(6)});
            for (const auto& [k, v] : rows) out << std::left << std::setw(20) << k << v << '\n';
            return 0;
        }
        if (*cache_verify) {
            const ResidueCache store(default_cache_dir());
            const auto check = verify_cache_sample(store, sample, seed);
            out << "cache       " << store.file().string() << '\n';
            out << "records     " << store.records().size() << '\n';
            out << "malformed   " << store.malformed_lines() << '\n';
            out << "sampled     " << check.sampled << '\n';
            out << "mismatches  " << check.mismatches.size() << '\n';
            for (const auto& r : check.mismatches) out << "FAIL " << to_line(r) << '\n';
            return check.mismatches.empty() && store.malformed_lines() == 0 ? 0 : kExitFail;
        }
    } catch (const UsageError& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace finitea::cli
