#include "nsjac/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <functional>
#include <numeric>
#include <ostream>
#include <variant>

#include "nsjac/checks.hpp"
#include "nsjac/io.hpp"
#include "nsjac/jacobian.hpp"
#include "nsjac/sampling.hpp"

namespace nsjac {

namespace {

using nlohmann::json;

struct Options {
    std::uint64_t seed = 1;
    bool json = false;
    bool auto_extend = false;
    bool direct = false;
    int trials = 100;
    std::uint64_t count = 0;
    std::string curve_path;
    std::vector<std::string> divisor_paths;
};

using OpResult = std::variant<Divisor, TorsionResult>;

std::string modulus_text(const Field& f) {
    std::string out;
    for (const auto c : f.modulus()) out += (out.empty() ? "" : ",") + std::to_string(c);
    return out;
}

std::string monomial_name(const Field& f, const Monomial& m) {
    return BiPoly::from_terms(f, {{m.i, m.j, f.one()}}).to_string();
}

std::string join(const std::vector<int>& v) {
    std::string out;
    for (const int x : v) out += (out.empty() ? "" : ",") + std::to_string(x);
    return out;
}

int cmd_curve_info(const Options& o, std::ostream& out) {
    const CurveFile cf = parse_curve_file(read_text_file(o.curve_path));
    const Curve& c = cf.curve;
    const Field& f = c.field();
    const int g = c.genus();
    std::string basis;
    for (const auto& m : c.basis_prefix(2 * g + 1)) {
        basis += (basis.empty() ? "" : " ") + monomial_name(f, m) + ":" + std::to_string(m.pole_order);
    }
    if (o.json) {
        json j = {{"n", c.n()},       {"s", c.s()},           {"p", std::to_string(f.characteristic())},
                  {"field", f.describe()}, {"field_size", f.size_string()}, {"genus", g},
                  {"gaps", join(c.gap_sequence())}, {"basis", basis}};
        if (!f.is_prime_field()) j["ext"] = modulus_text(f);
        out << j.dump() << "\n";
        return kExitOk;
    }
    out << "n=" << c.n() << "\n"
        << "s=" << c.s() << "\n"
        << "p=" << f.characteristic() << "\n";
    if (!f.is_prime_field()) out << "ext=" << modulus_text(f) << "\n";
    out << "field=" << f.describe() << "\n"
        << "field_size=" << f.size_string() << "\n"
        << "genus=" << g << "\n"
        << "gaps=" << join(c.gap_sequence()) << "\n"
        << "basis=" << basis << "\n";
    return kExitOk;
}

OpResult compute(const std::string& op, const Options& o, const std::vector<Divisor>& ds) {
    if (op == "add") return add(ds[0], ds[1]);
    if (op == "neg") return negate(ds[0]);
    if (op == "reduce") return reduce(ds[0]);
    if (op == "mul") {
        if (o.direct) {
            if (o.count > 64) throw InvalidInput("--direct needs k <= 64");
            if (o.count < 2) return scalar_mul(o.count, ds[0]);
            return direct_multiple(static_cast<int>(o.count), ds[0]);
        }
        return scalar_mul(o.count, ds[0]);
    }
    if (o.count < 2 || o.count > 64) throw InvalidInput("torsion order must lie in [2, 64]");
    return is_n_torsion(static_cast<int>(o.count), ds[0]);
}

int cmd_op(const std::string& op, const Options& o, std::ostream& out) {
    const CurveFile cf = parse_curve_file(read_text_file(o.curve_path));
    if (o.auto_extend && cf.declares_extension) throw InvalidInput("--auto-extend needs a curve over a prime field");
    std::vector<Divisor> ds;
    for (const auto& path : o.divisor_paths) ds.push_back(parse_divisor(cf.curve, read_text_file(path)));

    std::optional<Field> extended;
    OpResult result = Divisor(cf.curve);
    try {
        result = compute(op, o, ds);
    } catch (const NonSplitResult& e) {
        if (!o.auto_extend) throw;
        int d = 1;
        for (const int deg : e.degrees()) d = std::lcm(d, deg);
        // Reduced classes over F_p split over F_{p^L}, L = lcm(1..g).
        if (const int all = std::lcm(d, split_extension_degree(cf.curve.genus())); all <= kMaxExtensionDegree) d = all;
        if (d < 2 || d > kMaxExtensionDegree) throw;
        const Field& base = cf.curve.field();
        std::vector<std::uint64_t> modulus;
        for (const auto& c : irreducible_of_degree(base, d, o.seed).coeffs()) modulus.push_back(c.coeff(0));
        const Field ext = Field::extension(base.characteristic(), modulus);
        const Curve lifted = cf.curve.embed(ext);
        std::vector<Divisor> lifted_ds;
        for (const auto& dv : ds) lifted_ds.push_back(dv.embed(lifted));
        result = compute(op, o, lifted_ds);
        extended = ext;
    }

    if (const auto* t = std::get_if<TorsionResult>(&result)) {
        const char* path = t->path == TorsionPath::Matrix ? "matrix" : "scalar";
        if (o.json) {
            json j = {{"torsion", t->torsion}, {"path", path}};
            if (extended) j["ext"] = modulus_text(*extended);
            out << j.dump() << "\n";
        } else {
            if (extended) out << "# ext=" << modulus_text(*extended) << "\n";
            out << (t->torsion ? "true" : "false") << "\n";
        }
        return kExitOk;
    }
    const Divisor& d = std::get<Divisor>(result);
    if (o.json) {
        json pts = json::array();
        for (const auto& pt : d.points()) pts.push_back(pt.to_string());
        json j = {{"field", d.curve().field().describe()}, {"degree", d.degree()}, {"points", pts}};
        if (extended) j["ext"] = modulus_text(*extended);
        out << j.dump() << "\n";
    } else {
        if (extended) out << "# ext=" << modulus_text(*extended) << "\n";
        out << format_divisor(d);
    }
    return kExitOk;
}

int report_suites(const std::vector<SuiteStats>& suites, const Sampler& s, const Options& o, std::ostream& out) {
    const bool ok = std::all_of(suites.begin(), suites.end(), [](const SuiteStats& st) { return st.ok(); });
    const bool complete = std::all_of(suites.begin(), suites.end(), [](const SuiteStats& st) { return st.inconclusive == 0; });
    const char* verdict = !ok ? "FAIL" : complete ? "PASS" : "INCONCLUSIVE";
    if (o.json) {
        json rows = json::array();
        for (const auto& st : suites) {
            rows.push_back({{"suite", st.name},
                            {"passed", st.passed},
                            {"failed", st.failed},
                            {"resampled", st.resampled},
                            {"fallback", st.fallback},
                            {"inconclusive", st.inconclusive}});
        }
        out << json{{"curve", s.base().describe()},
                    {"work_field", s.work().field().describe()},
                    {"trials", o.trials},
                    {"seed", std::to_string(o.seed)},
                    {"sampler_resamples", s.resamples()},
                    {"suites", rows},
                    {"ok", ok},
                    {"result", verdict}}
                   .dump()
            << "\n";
    } else {
        out << "curve: " << s.base().describe() << "\n"
            << "work field: " << s.work().field().describe() << "\n"
            << "trials: " << o.trials << "  seed: " << o.seed << "\n";
        char line[160];
        std::snprintf(line, sizeof line, "%-36s %8s %8s %10s %9s %13s\n", "suite", "passed", "failed", "resampled", "fallback",
                      "inconclusive");
        out << line;
        for (const auto& st : suites) {
            std::snprintf(line, sizeof line, "%-36s %8llu %8llu %10llu %9llu %13llu\n", st.name.c_str(),
                          static_cast<unsigned long long>(st.passed), static_cast<unsigned long long>(st.failed),
                          static_cast<unsigned long long>(st.resampled), static_cast<unsigned long long>(st.fallback),
                          static_cast<unsigned long long>(st.inconclusive));
            out << line;
            for (const auto& why : st.failures) out << "    failure: " << why << "\n";
        }
        out << "sampler resamples: " << s.resamples() << "\n"
            << "result: " << verdict << "\n";
    }
    if (!ok) return kExitCheckFailed;
    return complete ? kExitOk : kExitNonSplit;
}

Sampler make_sampler(const Options& o) {
    if (o.trials < 0) throw InvalidInput("--trials must be non-negative");
    Sampler s(parse_curve_file(read_text_file(o.curve_path)).curve, o.seed);
    if (s.work().has_singular_point()) throw SingularPoint("curve has a singular point over " + s.work().field().describe());
    return s;
}

int cmd_check(const Options& o, std::ostream& out) {
    Sampler s = make_sampler(o);
    std::vector<SuiteStats> suites = run_axiom_suites(s, o.trials);
    for (auto& st : run_oracle_suites(s, o.trials)) suites.push_back(std::move(st));
    for (auto& st : run_direct_suites(s, o.trials)) suites.push_back(std::move(st));
    for (auto& st : run_torsion_suites(s, o.trials)) suites.push_back(std::move(st));
    return report_suites(suites, s, o, out);
}

int cmd_oracle_check(const Options& o, std::ostream& out) {
    Sampler s = make_sampler(o);
    if (s.base().n() != 2) throw InvalidInput("no classical oracle for n >= 3");
    return report_suites(run_oracle_suites(s, o.trials), s, o, out);
}

struct BenchRow {
    std::string op;
    std::vector<double> micros;
};

double percentile(std::vector<double> v, double q) {
    if (v.empty()) return 0.0;
    std::sort(v.begin(), v.end());
    const auto rank = static_cast<std::size_t>(std::ceil(q * static_cast<double>(v.size())));
    return v[std::clamp<std::size_t>(rank, 1, v.size()) - 1];
}

int cmd_bench(const Options& o, std::ostream& out) {
    Sampler s = make_sampler(o);
    const int g = s.work().genus();
    // prepare() draws inputs, run() is timed; either may throw Special / NonSplit.
    auto measure = [&](const std::string& name, const std::function<std::function<void()>()>& prepare) {
        BenchRow row{name, {}};
        const int budget = 100 * o.trials + 1000;
        for (int attempt = 0; attempt < budget && static_cast<int>(row.micros.size()) < o.trials; ++attempt) {
            try {
                const auto run = prepare();
                const auto t0 = std::chrono::steady_clock::now();
                run();
                const auto t1 = std::chrono::steady_clock::now();
                row.micros.push_back(std::chrono::duration<double, std::micro>(t1 - t0).count());
            } catch (const SpecialDivisor&) {
            } catch (const NonSplitResult&) {
            }
        }
        return row;
    };
    std::vector<BenchRow> rows;
    rows.push_back(measure("add", [&] {
        return [a = s.reduced(), b = s.reduced()] { add(a, b); };
    }));
    rows.push_back(measure("reduce_2g", [&] {
        return [d = s.points(2 * g, false)] { reduce(d); };
    }));
    rows.push_back(measure("negate", [&] {
        return [d = s.reduced()] { negate(d); };
    }));
    rows.push_back(measure("direct_multiple_2", [&] {
        Divisor d = s.reduced_distinct();
        while (d.empty()) d = s.reduced_distinct();
        return [d] { direct_multiple(2, d); };
    }));

    if (o.json) {
        json arr = json::array();
        for (const auto& r : rows) {
            arr.push_back({{"op", r.op},
                           {"trials", r.micros.size()},
                           {"median_us", percentile(r.micros, 0.5)},
                           {"p95_us", percentile(r.micros, 0.95)}});
        }
        out << json{{"curve", s.base().describe()}, {"work_field", s.work().field().describe()}, {"rows", arr}}.dump()
            << "\n";
    } else {
        out << "curve: " << s.base().describe() << "\n"
            << "work field: " << s.work().field().describe() << "\n";
        char line[160];
        std::snprintf(line, sizeof line, "%-20s %8s %14s %14s\n", "op", "trials", "median_us", "p95_us");
        out << line;
        for (const auto& r : rows) {
            std::snprintf(line, sizeof line, "%-20s %8zu %14.1f %14.1f\n", r.op.c_str(), r.micros.size(),
                          percentile(r.micros, 0.5), percentile(r.micros, 0.95));
            out << line;
        }
    }
    return kExitOk;
}

}  // namespace

int exit_code_for(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::SpecialDivisor:
            return kExitSpecial;
        case ErrorKind::NonSplitResult:
            return kExitNonSplit;
        case ErrorKind::InternalFactorFailure:
        case ErrorKind::Internal:
            return kExitInternal;
        default:
            return kExitInvalid;
    }
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    Options o;
    CLI::App app{"Jacobian arithmetic on (n,s) curves over finite fields", "nsjac"};
    app.require_subcommand(1);

    auto common = [&](CLI::App* sub) {
        sub->add_option("--seed", o.seed, "RNG seed");
        sub->add_flag("--json", o.json, "Machine-readable output");
    };
    auto op = [&](const std::string& name, const std::string& help, int divisors, const char* count_name) {
        CLI::App* sub = app.add_subcommand(name, help);
        if (count_name) sub->add_option(count_name, o.count, "Multiplier")->required();
        sub->add_option("curve", o.curve_path, "Curve file")->required();
        sub->add_option("divisors", o.divisor_paths, "Divisor file(s)")->required()->expected(divisors);
        sub->add_flag("--auto-extend", o.auto_extend, "Retry once over F_{p^d} on a non-split result");
        common(sub);
        return sub;
    };
    auto suite = [&](const std::string& name, const std::string& help) {
        CLI::App* sub = app.add_subcommand(name, help);
        sub->add_option("curve", o.curve_path, "Curve file")->required();
        sub->add_option("--trials", o.trials, "Trials per suite");
        common(sub);
        return sub;
    };

    CLI::App* info = app.add_subcommand("curve-info", "Genus, gaps and basis of a curve");
    info->add_option("curve", o.curve_path, "Curve file")->required();
    common(info);
    op("add", "Reduced sum of two divisors", 2, nullptr);
    op("neg", "Reduced negative of a divisor", 1, nullptr);
    op("reduce", "Reduced representative of a divisor", 1, nullptr);
    op("mul", "k times a divisor", 1, "k")->add_flag("--direct", o.direct, "Use one confluent determinant");
    op("torsion", "Whether n times a divisor is trivial", 1, "n");
    suite("check", "Group-law, oracle, multiplication and torsion suites");
    suite("bench", "Timing per operation");
    suite("oracle-check", "Oracle suites only ((2,s) curves)");

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e, out, err);
    } catch (const CLI::ParseError& e) {
        app.exit(e, out, err);
        return kExitInvalid;
    }

    const std::string cmd = app.get_subcommands().front()->get_name();
    try {
        if (cmd == "curve-info") return cmd_curve_info(o, out);
        if (cmd == "check") return cmd_check(o, out);
        if (cmd == "bench") return cmd_bench(o, out);
        if (cmd == "oracle-check") return cmd_oracle_check(o, out);
        return cmd_op(cmd, o, out);
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        if (const auto* ns = dynamic_cast<const NonSplitResult*>(&e)) {
            err << "irreducible factor degrees:";
            for (const int d : ns->degrees()) err << " " << d;
            err << "\n";
        }
        return exit_code_for(e.kind());
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kExitInternal;
    }
}

}  // namespace nsjac
