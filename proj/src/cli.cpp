#include "euler/cli.hpp"

#include "euler/bounds.hpp"
#include "euler/quadrature.hpp"
#include "euler/reference.hpp"
#include "euler/report.hpp"
#include "euler/transform.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <thread>

namespace euler::cli {

namespace {

struct Failure : std::runtime_error {
    Failure(int c, const std::string& what) : std::runtime_error(what), code(c) {}
    int code;
};

struct Options {
    std::string command;
    std::string scheme;
    std::optional<long> n;
    std::string params;
    std::string grid;
    std::optional<long> digits;
    std::optional<long> prec_digits;
    std::string bound;
    std::optional<double> tol;
    std::string format = "csv";
    std::string out;
    long max_prec_bits = 1'000'000;
};

long parse_long(const std::string& s, const std::string& what) {
    std::size_t pos = 0;
    long v = 0;
    try {
        v = std::stol(s, &pos);
    } catch (const std::exception&) {
        throw DomainError("bad integer for " + what + ": '" + s + "'");
    }
    if (pos != s.size()) throw DomainError("bad integer for " + what + ": '" + s + "'");
    return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> parts;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) {
        if (!cur.empty()) parts.push_back(cur);
    }
    return parts;
}

std::pair<std::string, std::string> key_value(const std::string& item) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw DomainError("expected k=v, got '" + item + "'");
    return {item.substr(0, eq), item.substr(eq + 1)};
}

long elapsed_ms(std::chrono::steady_clock::time_point start) {
    return static_cast<long>(
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count());
}

long max_prec_from_env() {
    const char* v = std::getenv("EULER_MAX_PREC_BITS");
    if (v == nullptr || *v == '\0') return 1'000'000;
    const long bits = parse_long(v, "EULER_MAX_PREC_BITS");
    if (bits < 64) throw DomainError("EULER_MAX_PREC_BITS must be >= 64");
    return bits;
}

long target_bits(const Options& o) { return o.prec_digits ? digits_to_bits(static_cast<std::size_t>(*o.prec_digits)) : 64; }

// One computed row plus its verification verdict.
struct Outcome {
    ReportRow row;
    VerifyStatus status = VerifyStatus::passed;
};

Outcome compute_row(const SchemeSpec& s, const Options& o) {
    const auto start = std::chrono::steady_clock::now();
    if (paired_bound(s)) {
        const VerificationRow v = verify(s, target_bits(o), VerifyOptions{o.max_prec_bits});
        return Outcome{make_row(v, elapsed_ms(start)), v.status};
    }
    // No printed bound: raise the precision until the measured error is
    // resolved to 53 bits or the cap is reached.
    const TransformParams p = scheme(s);
    long bits = target_bits(o);
    for (;;) {
        const ApproxResult r = evaluate(p, bits, EvaluateOptions{o.max_prec_bits, true});
        const bool resolved = r.abs_error->is_zero() ? false : r.abs_error->exponent() > -bits + 53;
        if (resolved || 2 * bits + 64 > o.max_prec_bits) return Outcome{make_row(s, r, elapsed_ms(start)), VerifyStatus::passed};
        bits *= 2;
    }
}

// Runs independent row computations concurrently; results keep input order.
std::vector<Outcome> compute_rows(const std::vector<SchemeSpec>& specs, const Options& o) {
    std::vector<Outcome> out;
    out.reserve(specs.size());
    const std::size_t width = std::max(1u, std::thread::hardware_concurrency());
    for (std::size_t begin = 0; begin < specs.size(); begin += width) {
        std::vector<std::future<Outcome>> batch;
        const std::size_t end = std::min(specs.size(), begin + width);
        for (std::size_t i = begin; i < end; ++i) {
            batch.push_back(std::async(std::launch::async, [&, i] {
                Outcome r = compute_row(specs[i], o);
                mpfr_free_cache();
                return r;
            }));
        }
        for (auto& f : batch) out.push_back(f.get());
    }
    return out;
}

int finish_rows(const std::vector<Outcome>& outcomes, const Options& o, std::ostream& out) {
    std::vector<ReportRow> rows;
    for (const auto& r : outcomes) rows.push_back(r.row);
    emit(rows, parse_format(o.format), o.out, out);
    for (const auto& r : outcomes) {
        if (r.status == VerifyStatus::failed) {
            throw Failure(verification_failed, "bound violated: " + r.row.scheme + " n=" + std::to_string(r.row.n) +
                                                   " " + r.row.params);
        }
    }
    for (const auto& r : outcomes) {
        if (r.status == VerifyStatus::inconclusive) {
            throw PrecisionError("comparison undecided at the precision cap: " + r.row.scheme +
                                 " n=" + std::to_string(r.row.n) + " " + r.row.params);
        }
    }
    return ok;
}

std::map<std::string, long> extra_from(const Options& o) {
    std::map<std::string, long> extra;
    for (const auto& [k, v] : parse_params(o.params)) extra[k] = v;
    return extra;
}

std::uint32_t size_n(long n) {
    if (n < 1 || n > 0x7fffffffL) throw DomainError("n must be a positive integer");
    return static_cast<std::uint32_t>(n);
}

// Cartesian product of the grid (first key outermost) merged over `base`.
std::vector<SchemeSpec> expand(const std::string& name, const Options& o) {
    const auto grid = parse_grid(o.grid);
    std::vector<std::map<std::string, long>> combos{extra_from(o)};
    for (const auto& [key, values] : grid) {
        std::vector<std::map<std::string, long>> next;
        for (const auto& c : combos) {
            for (long v : values) {
                auto d = c;
                d[key] = v;
                next.push_back(std::move(d));
            }
        }
        combos = std::move(next);
    }
    std::vector<SchemeSpec> specs;
    for (auto& c : combos) {
        long n = o.n.value_or(-1);
        if (auto it = c.find("n"); it != c.end()) {
            n = it->second;
            c.erase(it);
        }
        if (n == -1) throw DomainError("n is required (--n or a grid entry n=a..b)");
        if (n < 1) continue;
        SchemeSpec s{name, static_cast<std::uint32_t>(n), c};
        try {
            (void)scheme(s);
        } catch (const DomainError&) {
            continue;  // inadmissible combination
        }
        specs.push_back(std::move(s));
    }
    return specs;
}

int cmd_approx(const Options& o, std::ostream& out) {
    if (o.scheme.empty()) throw DomainError("approx: --scheme is required");
    if (!o.n) throw DomainError("approx: --n is required");
    const SchemeSpec s{o.scheme, size_n(*o.n), extra_from(o)};
    (void)scheme(s);
    return finish_rows(compute_rows({s}, o), o, out);
}

int cmd_verify(const Options& o, std::ostream& out) {
    std::string name = o.scheme;
    if (!o.bound.empty()) {
        const BoundId id = parse_bound_id(o.bound);
        name = BoundSpec{id, 1, {}}.scheme().name;
        if (!o.scheme.empty() && o.scheme != name) throw DomainError("verify: --bound and --scheme disagree");
    }
    if (name.empty()) throw DomainError("verify: --bound or --scheme is required");
    if (!paired_bound(SchemeSpec{name, 1, {}})) throw DomainError("verify: scheme '" + name + "' has no printed bound");
    const auto specs = expand(name, o);
    if (specs.empty()) throw DomainError("verify: no admissible parameter combination");
    return finish_rows(compute_rows(specs, o), o, out);
}

int cmd_compare(const Options& o, std::ostream& out) {
    if (o.scheme.empty()) throw DomainError("compare: --scheme is required (comma-separated list)");
    std::vector<SchemeSpec> specs;
    for (const auto& name : split(o.scheme, ',')) {
        if (std::find(scheme_names().begin(), scheme_names().end(), name) == scheme_names().end()) {
            throw DomainError("unknown scheme '" + name + "'");
        }
        auto part = expand(name, o);
        specs.insert(specs.end(), part.begin(), part.end());
    }
    if (specs.empty()) throw DomainError("compare: no admissible parameter combination");
    return finish_rows(compute_rows(specs, o), o, out);
}

int cmd_digits(const Options& o, std::ostream& out) {
    if (!o.digits || *o.digits < 1 || *o.digits > 100000) throw DomainError("digits: --digits D with 1 <= D <= 100000 is required");
    const std::string name = o.scheme.empty() ? "cor2_5" : o.scheme;
    const auto digits = static_cast<std::size_t>(*o.digits);
    const auto extra = extra_from(o);
    const auto spec = paired_bound(SchemeSpec{name, 1, extra});
    if (!spec) throw DomainError("digits: scheme '" + name + "' has no printed bound to choose n from");
    const std::uint32_t n = optimal_n(spec->id, extra, digits);

    const long bits = digits_to_bits(digits) + 64;
    const ApproxResult r = evaluate(scheme(SchemeSpec{name, n, extra}), bits, EvaluateOptions{o.max_prec_bits, true});
    const ReferenceValue ref = gamma_ref(Precision(bits));
    const std::string got = r.approx.to_fixed(digits);
    const std::string want = ref.value.to_fixed(digits);
    out << got << "\n";
    if (got != want) throw Failure(verification_failed, "digits: " + got + " disagrees with oracle " + want);
    return ok;
}

int cmd_oracle(const Options& o, std::ostream& out) {
    const long d = o.digits.value_or(50);
    if (d < 1 || d > 1000000) throw DomainError("oracle: --digits must be in 1..1000000");
    const ReferenceValue ref = gamma_ref(Precision(digits_to_bits(static_cast<std::size_t>(d)) + 32));
    out << ref.value.to_fixed(static_cast<std::size_t>(d)) << "\n";
    return ok;
}

struct Check {
    std::string name;
    double residual;
    double tol;
};

void require_converged(const QuadResult& q, const std::string& what) {
    if (!q.converged) throw PrecisionError(what + ": quadrature did not converge");
}

int cmd_quadcheck(const Options& o, std::ostream& out) {
    if (o.tol && !(*o.tol > 0)) throw DomainError("quadcheck: --tol must be positive");
    auto tol_or = [&](double t) { return o.tol.value_or(t); };
    std::vector<Check> checks;

    {
        const double tol = tol_or(1e-10);
        const QuadResult q = integrate(
            Integrand{"omega_mass", IntegrandDomain::omega_weighted, [](long double, long double) { return 1.0L; }}, tol);
        require_converged(q, "omega_mass");
        checks.push_back({"omega_mass", std::fabs(q.value.to_double() - 0.5), tol});
    }
    {
        const double tol = tol_or(1e-12);
        const QuadResult q = gamma_integral(tol);
        require_converged(q, "gamma_integral");
        const BigReal ref = gamma_ref(Precision(128)).value;
        checks.push_back({"gamma_integral", abs(q.value.with_precision(Precision(128)) - ref).to_double(), tol});
    }
    for (const char* x : {"1/10", "1/4", "1/2", "3/4", "9/10"}) {
        const double tol = tol_or(1e-10);
        checks.push_back({std::string("prevost x=") + x, prevost_residual(Rational::parse(x), tol).to_double(), tol});
    }
    {
        TransformParams a;
        a.n = {1};
        a.tau = {1, 0};
        TransformParams b;
        b.r = 2;
        b.n = {2};
        b.tau = {1, 1};
        const double tol = tol_or(1e-8);
        for (auto [p, alpha] : {std::pair{a, 0L}, std::pair{a, 1L}, std::pair{b, 0L}}) {
            const double res = lemma2_residual(p, Rational(alpha), tol / 10).to_double();
            p.alpha = Rational(alpha);
            checks.push_back({"moment " + p.describe(), res, tol});
        }
    }
    {
        TransformParams a;
        a.n = {1};
        a.tau = {1, 0};
        TransformParams b;
        b.n = {1, 1};
        b.tau = {2, 0, 2};
        TransformParams c;
        c.n = {1, 1};
        c.tau = {1, 0, 0};
        const double tol = tol_or(1e-6);
        auto relative = [](const QuadResult& q, const TransformParams& p, const std::string& what) {
            require_converged(q, what);
            const double lhs = thm1_lhs(p, Precision(128)).to_double();
            return std::fabs(q.value.to_double() - lhs) / lhs;
        };
        for (const auto& p : {a, b}) {
            const std::string what = "error_integral " + p.describe();
            checks.push_back({what, relative(thm1_rhs(p, true, tol / 100), p, what), tol});
        }
        const std::string what = "error_integral_signed " + c.describe();
        checks.push_back({what, relative(thm1_signed(c, tol / 100), c, what), tol});
    }
    for (const auto& [name, lp] : {std::pair<std::string, LmaxParams>{"lmax thm2 profile", {0, 1, 1, 1, 1, 1}},
                                   std::pair<std::string, LmaxParams>{"lmax cor2_5 profile", {2, 4, 4, 4, 1, 2}}}) {
        const LmaxGridResult g = lmax_grid_check(lp, 1000);
        checks.push_back({name, g.exceeds ? INFINITY : g.residual.to_double(), 1e-6});
    }

    bool all = true;
    const Format f = parse_format(o.format);
    std::ostringstream text;
    if (f == Format::csv) text << "check,residual,tol,status\n";
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& c : checks) {
        const bool pass = c.residual <= c.tol;
        all = all && pass;
        char res[32], tol[32];
        std::snprintf(res, sizeof res, "%.3e", c.residual);
        std::snprintf(tol, sizeof tol, "%.0e", c.tol);
        if (f == Format::csv) {
            text << '"' << c.name << "\"," << res << ',' << tol << ',' << (pass ? "PASS" : "FAIL") << '\n';
        } else {
            arr.push_back({{"check", c.name}, {"residual", res}, {"tol", tol}, {"status", pass ? "PASS" : "FAIL"}});
        }
    }
    if (f == Format::json) text << arr.dump(2) << '\n';
    if (o.out.empty() || o.out == "-") {
        out << text.str();
    } else {
        std::ofstream file(o.out);
        if (!(file << text.str())) throw DomainError("cannot write '" + o.out + "'");
    }
    if (!all) throw Failure(verification_failed, "quadcheck: at least one residual exceeds its tolerance");
    return ok;
}

const char* kind(int code) {
    switch (code) {
        case verification_failed: return "verification_failed";
        case invalid_parameters: return "invalid_parameters";
        default: return "precision";
    }
}

std::string one_line(std::string s) {
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

}  // namespace

std::vector<std::pair<std::string, long>> parse_params(const std::string& text) {
    std::vector<std::pair<std::string, long>> out;
    for (const auto& item : split(text, ',')) {
        auto [k, v] = key_value(item);
        out.emplace_back(k, parse_long(v, k));
    }
    return out;
}

std::vector<std::pair<std::string, std::vector<long>>> parse_grid(const std::string& text) {
    std::vector<std::pair<std::string, std::vector<long>>> out;
    for (const auto& item : split(text, ',')) {
        auto [k, v] = key_value(item);
        std::vector<long> values;
        const auto dots = v.find("..");
        if (dots == std::string::npos) {
            values.push_back(parse_long(v, k));
        } else {
            const long lo = parse_long(v.substr(0, dots), k);
            const long hi = parse_long(v.substr(dots + 2), k);
            if (hi < lo) throw DomainError("empty range for " + k + ": " + v);
            if (hi - lo > 100000) throw DomainError("range too large for " + k + ": " + v);
            for (long x = lo; x <= hi; ++x) values.push_back(x);
        }
        for (const auto& [existing, unused] : out) {
            if (existing == k) throw DomainError("duplicate grid key '" + k + "'");
        }
        out.emplace_back(k, std::move(values));
    }
    return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"High-precision Euler constant via accelerated series transformations", "euler"};
    app.require_subcommand(1);
    Options o;

    const std::vector<std::pair<const char*, const char*>> commands = {
        {"approx", "Evaluate one scheme instance and its bound"},
        {"digits", "Print gamma to D decimals using the smallest sufficient n"},
        {"verify", "Check a bound over a parameter grid"},
        {"compare", "Error table across schemes over a parameter grid"},
        {"quadcheck", "Run the quadrature certifications"},
        {"oracle", "Print the reference value of gamma"},
    };
    for (const auto& [name, help] : commands) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("--scheme", o.scheme, "Scheme name (comma-separated list for compare)");
        sub->add_option("--n", o.n, "Size parameter n");
        sub->add_option("--params", o.params, "Extra parameters k=v,...");
        sub->add_option("--grid", o.grid, "Parameter ranges k=a..b,...");
        sub->add_option("--digits", o.digits, "Decimal digits");
        sub->add_option("--prec-digits", o.prec_digits, "Target precision in decimal digits");
        sub->add_option("--bound", o.bound, "Bound name");
        sub->add_option("--tol", o.tol, "Quadrature tolerance");
        sub->add_option("--format", o.format, "csv or json")->check(CLI::IsMember({"csv", "json"}));
        sub->add_option("--out", o.out, "Output path (default stdout)");
        sub->callback([&o, n = std::string(name)] { o.command = n; });
    }

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return ok;
    } catch (const CLI::ParseError& e) {
        err << "error: " << kind(invalid_parameters) << ": " << one_line(e.what()) << "\n";
        return invalid_parameters;
    }

    try {
        o.max_prec_bits = max_prec_from_env();
        if (o.command == "approx") return cmd_approx(o, out);
        if (o.command == "digits") return cmd_digits(o, out);
        if (o.command == "verify") return cmd_verify(o, out);
        if (o.command == "compare") return cmd_compare(o, out);
        if (o.command == "quadcheck") return cmd_quadcheck(o, out);
        return cmd_oracle(o, out);
    } catch (const Failure& e) {
        err << "error: " << kind(e.code) << ": " << one_line(e.what()) << "\n";
        return e.code;
    } catch (const DomainError& e) {
        err << "error: " << kind(invalid_parameters) << ": " << one_line(e.what()) << "\n";
        return invalid_parameters;
    } catch (const PrecisionError& e) {
        err << "error: " << kind(precision_failure) << ": " << one_line(e.what()) << "\n";
        return precision_failure;
    } catch (const std::invalid_argument& e) {
        err << "error: " << kind(invalid_parameters) << ": " << one_line(e.what()) << "\n";
        return invalid_parameters;
    } catch (const std::out_of_range& e) {
        err << "error: " << kind(invalid_parameters) << ": " << one_line(e.what()) << "\n";
        return invalid_parameters;
    } catch (const std::logic_error& e) {
        err << "error: " << kind(verification_failed) << ": " << one_line(e.what()) << "\n";
        return verification_failed;
    } catch (const std::exception& e) {
        err << "error: " << kind(precision_failure) << ": " << one_line(e.what()) << "\n";
        return precision_failure;
    }
}

}  // namespace euler::cli
