// One line per acceptance criterion: PASS/FAIL, detail, wall time vs limit.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <numeric>
#include <sstream>
#include <string>

#include <unistd.h>

#include "nsjac/checks.hpp"
#include "nsjac/cli.hpp"
#include "nsjac/io.hpp"
#include "nsjac/jacobian.hpp"
#include "nsjac/oracle.hpp"
#include "nsjac/sampling.hpp"

using namespace nsjac;
namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

Curve curve_from(const std::string& text) { return parse_curve_file(text).curve; }

std::string tail_text(const std::vector<std::tuple<int, int, std::uint64_t>>& terms) {
    std::string out;
    for (const auto& [i, j, c] : terms) out += "c " + std::to_string(i) + " " + std::to_string(j) + " " + std::to_string(c) + "\n";
    return out;
}

std::string stats_line(const SuiteStats& st) {
    return st.name + " " + std::to_string(st.passed) + "/" + std::to_string(st.trials()) + " resampled " +
           std::to_string(st.resampled);
}

bool all_ok(const std::vector<SuiteStats>& v) {
    return std::all_of(v.begin(), v.end(), [](const SuiteStats& s) { return s.ok(); });
}

// ---------------------------------------------------------------- 1

Outcome c1_structure() {
    Outcome o;
    const Curve c = curve_from("p=1009\nn=3\ns=4\nc 0 0 5\nc 1 1 3\nc 2 0 7\n");
    const auto basis = c.basis_prefix(5);
    const std::vector<std::pair<int, int>> expected{{0, 0}, {1, 0}, {0, 1}, {2, 0}, {1, 1}};
    bool basis_ok = basis.size() == 5;
    for (std::size_t k = 0; basis_ok && k < 5; ++k) basis_ok = basis[k].i == expected[k].first && basis[k].j == expected[k].second;
    o.pass = c.genus() == 3 && c.gap_sequence() == std::vector<int>{1, 2, 5} && basis_ok;
    Sampler s(c, 101);
    int checked = 0;
    for (int t = 0; t < 20; ++t) {
        const Divisor d = s.points(4);
        const InterpFunction r = interp_function(d);
        const Divisor extra = extra_zeros(r, d);
        o.pass = o.pass && r.basis.size() == 5 && r.full_pole_order() && r.pole_order() == 7 && extra.degree() == 3;
        ++checked;
    }
    o.detail = "genus=3 gaps=1,2,5 basis=[1,x,y,x^2,xy] pole=7 residual=3 on " + std::to_string(checked) + " degree-4 divisors";
    return o;
}

// ---------------------------------------------------------------- 2

Outcome c2_pole_law() {
    Outcome o;
    int curves = 0, divisors = 0;
    Rng rng(2);
    const Field f = Field::prime(1000003);
    for (int n = 2; n <= 5; ++n) {
        for (int s = n + 1; s <= 9; ++s) {
            if (std::gcd(n, s) != 1) continue;
            std::vector<BiPoly::Term> tail;
            for (int i = 0; i < s; ++i) {
                for (int j = 0; j < n; ++j) {
                    if (n * i + s * j < n * s && rng() % 3 == 0) tail.push_back({i, j, f.random(rng)});
                }
            }
            const Curve c(f, n, s, BiPoly::from_terms(f, tail));
            const int g = c.genus();
            const auto basis = c.basis_prefix(3 * g + 2);
            for (int k = g; k < static_cast<int>(basis.size()); ++k) {
                if (basis[static_cast<std::size_t>(k)].pole_order != g + k) {
                    o.pass = false;
                    o.detail += " basis(" + std::to_string(n) + "," + std::to_string(s) + ")";
                }
            }
            for (int m = 0; m <= g; ++m) {
                std::vector<AffinePoint> pts;
                for (int k = 0; k < g + m; ++k) pts.push_back(c.random_point(rng));
                const Divisor d = Divisor::from_points(c, pts);
                if (is_special(d)) continue;
                const InterpFunction r = interp_function(d);
                if (r.pole_order() != 2 * g + m || !r.full_pole_order()) {
                    o.pass = false;
                    o.detail += " pole(" + std::to_string(n) + "," + std::to_string(s) + ",m=" + std::to_string(m) + ")";
                }
                ++divisors;
            }
            ++curves;
        }
    }
    o.detail = std::to_string(curves) + " curves, " + std::to_string(divisors) + " divisors over F_1000003" + o.detail;
    return o;
}

// ---------------------------------------------------------------- 3

Outcome c3_elliptic() {
    Outcome o;
    const Field f = Field::prime(10007);
    Rng rng(3);
    std::ostringstream detail;
    int curves = 0;
    while (curves < 3) {
        const Fe a = f.random(rng), b = f.random(rng);
        if ((f.from_int(4) * a * a * a + f.from_int(27) * b * b).is_zero()) continue;
        const Curve c = curve_from("p=10007\nn=2\ns=3\n" + tail_text({{1, 0, a.coeff(0)}, {0, 0, b.coeff(0)}}));
        Sampler s(c, 30 + static_cast<std::uint64_t>(curves));
        const auto suites = run_oracle_suites(s, 1000);
        std::uint64_t resampled = s.resamples(), total = 0;
        for (const auto& st : suites) resampled += st.resampled, total += st.trials();
        // Doubling and inverse edge cases.
        std::uint64_t edge = 0, edge_ok = 0;
        for (int k = 0; k < 100; ++k) {
            const AffinePoint p = c.random_point(rng);
            const Divisor d = Divisor::from_points(c, {p});
            const auto dbl = oracle::chord_tangent_add(c, p, p);
            edge_ok += add(d, d) == (dbl ? Divisor::from_points(c, {*dbl}) : Divisor(c));
            edge_ok += add(d, negate(d)).empty();
            edge += 2;
        }
        o.pass = o.pass && all_ok(suites) && edge == edge_ok;
        detail << " [A=" << a.to_string() << " B=" << b.to_string() << ": ";
        for (const auto& st : suites) detail << st.passed << "/" << st.trials() << " ";
        detail << "edge " << edge_ok << "/" << edge << " resample rate "
               << (total ? static_cast<double>(resampled) / static_cast<double>(total + resampled) : 0.0) << "]";
        ++curves;
    }
    o.detail = "add/negate/scalar_mul vs chord-tangent" + detail.str();
    return o;
}

// ---------------------------------------------------------------- 4

Outcome c4_cantor() {
    Outcome o;
    const Field f = Field::prime(10007);
    Rng rng(4);
    for (;;) {
        const Fe a = f.random(rng), b = f.random(rng);
        const UniPoly poly(f, {b, a, f.zero(), f.zero(), f.zero(), f.one()});
        if (gcd(poly, poly.derivative()).degree() > 0) continue;
        const Curve c = curve_from("p=10007\nn=2\ns=5\n" + tail_text({{1, 0, a.coeff(0)}, {0, 0, b.coeff(0)}}));
        Sampler s(c, 44, false);
        SuiteStats st{"cantor add"};
        while (st.trials() < 500) {
            try {
                const Divisor d1 = s.reduced(), d2 = s.reduced();
                const auto expected = oracle::cantor_add(c, oracle::divisor_to_mumford(d1), oracle::divisor_to_mumford(d2));
                if (oracle::divisor_to_mumford(add(d1, d2)) == expected) {
                    ++st.passed;
                } else {
                    ++st.failed;
                }
            } catch (const SpecialDivisor&) {
                ++st.resampled;
            } catch (const NonSplitResult&) {
                ++st.resampled;
            }
        }
        o.pass = st.ok();
        o.detail = "y^2=x^5+" + a.to_string() + "x+" + b.to_string() + " over F_10007: " + stats_line(st) +
                   " (sampler resamples " + std::to_string(s.resamples()) + ")";
        return o;
    }
}

// ---------------------------------------------------------------- 5

Outcome c5_axioms() {
    Outcome o;
    const Curve c = curve_from("p=1009\nn=3\ns=4\nc 0 0 5\nc 1 1 3\nc 2 0 7\n");
    Sampler s(c, 5);
    const auto before = conservation_checks();
    const auto suites = run_axiom_suites(s, 200);
    const auto checks = conservation_checks() - before;
    o.pass = all_ok(suites) && checks > 0;
    for (const auto& st : suites) o.detail += stats_line(st) + "; ";
    o.detail += "over " + s.work().field().describe() + "; conservation asserted " + std::to_string(checks) + " times";
    return o;
}

// ---------------------------------------------------------------- 6, 7

std::vector<Curve> mult_curves() {
    return {curve_from("p=10007\nn=2\ns=3\nc 1 0 3\nc 0 0 5\n"), curve_from("p=10007\nn=2\ns=5\nc 1 0 3\nc 0 0 5\n"),
            curve_from("p=1009\nn=3\ns=4\nc 0 0 5\nc 1 1 3\nc 2 0 7\n")};
}

Outcome c6_direct() {
    Outcome o;
    std::uint64_t seed = 60;
    for (const Curve& c : mult_curves()) {
        Sampler s(c, seed++);
        for (const auto& st : run_direct_suites(s, 100)) {
            const double rate = st.passed ? static_cast<double>(st.passed - st.fallback) / static_cast<double>(st.passed) : 0.0;
            o.pass = o.pass && st.ok() && st.trials() >= 100 && rate >= 0.8;
            char buf[64];
            std::snprintf(buf, sizeof buf, "%.2f", rate);
            o.detail += "(" + std::to_string(c.n()) + "," + std::to_string(c.s()) + ") " + stats_line(st) + " matrix " + buf + "; ";
        }
    }
    return o;
}

Outcome c7_torsion() {
    Outcome o;
    std::uint64_t seed = 70;
    std::uint64_t agree = 0, total = 0;
    for (const Curve& c : mult_curves()) {
        Sampler s(c, seed++);
        for (const auto& st : run_torsion_suites(s, 100)) {
            o.pass = o.pass && st.ok() && st.trials() >= 100;
            agree += st.passed;
            total += st.trials();
        }
    }
    // Curves with all ramification points rational.
    std::uint64_t constructed = 0, constructed_ok = 0;
    const Curve split1 = curve_from("p=10007\nn=2\ns=3\nc 1 0 10006\n");
    const Curve split2 = curve_from("p=10007\nn=2\ns=5\n" + tail_text({{4, 0, 10007 - 10}, {3, 0, 35}, {2, 0, 10007 - 50}, {1, 0, 24}}));
    for (const Curve& c : {split1, split2}) {
        const auto ram = ramification_points(c);
        const auto g = static_cast<std::size_t>(c.genus());
        if (ram.size() != static_cast<std::size_t>(c.s())) o.pass = false;
        for (std::size_t i = 0; i + g <= ram.size(); ++i) {
            for (std::size_t j = i + 1; j <= ram.size(); ++j) {
                std::vector<AffinePoint> pts{ram[i]};
                if (g == 2) {
                    if (j == ram.size()) break;
                    pts.push_back(ram[j]);
                } else if (j != i + 1) {
                    break;
                }
                const Divisor d = Divisor::from_points(c, pts);
                const TorsionResult r = is_n_torsion(2, d);
                constructed_ok += r.torsion && scalar_mul(2, d).empty();
                ++constructed;
            }
        }
    }
    const Curve e7 = curve_from("p=7\nn=2\ns=3\nc 0 0 1\n");
    const Divisor flex = Divisor::from_points(e7, {{e7.field().from_int(0), e7.field().one()}});
    constructed_ok += is_n_torsion(3, flex).torsion && scalar_mul(3, flex).empty();
    constructed_ok += !is_n_torsion(2, flex).torsion && !scalar_mul(2, flex).empty();
    constructed += 2;
    o.pass = o.pass && constructed == constructed_ok;
    o.detail = "random " + std::to_string(agree) + "/" + std::to_string(total) + " agree; constructed " +
               std::to_string(constructed_ok) + "/" + std::to_string(constructed);
    return o;
}

// ---------------------------------------------------------------- 8

Outcome c8_chain() {
    Outcome o;
    const Curve c = curve_from("p=7\nn=2\ns=3\nc 0 0 1\n");
    const Field& f = c.field();
    auto P = [&](int x, int y) { return AffinePoint{f.from_int(x), f.from_int(y)}; };
    const Divisor d = Divisor::from_points(c, {P(0, 1), P(2, 3)});
    const InterpFunction r = interp_function(d);
    const BiPoly line = BiPoly::from_terms(f, {{0, 1, f.one()}, {1, 0, f.from_int(-1)}, {0, 0, f.from_int(-1)}});
    const Divisor six = Divisor::from_points(c, {P(6, 0)});
    const Divisor p01 = Divisor::from_points(c, {P(0, 1)});
    o.pass = r.as_bipoly() == line && extra_zeros(r, d) == six && reduce(d) == six &&
             negate(p01) == Divisor::from_points(c, {P(0, 6)}) && scalar_mul(3, p01).empty();
    o.detail = "R=" + r.as_bipoly().to_string() + " extra=" + six.points()[0].to_string() + " reduce, negate, 3P=0";
    return o;
}

// ---------------------------------------------------------------- 9

class Scratch {
public:
    Scratch() : dir_(fs::temp_directory_path() / ("nsjac_accept_" + std::to_string(::getpid()))) { fs::create_directories(dir_); }
    ~Scratch() { fs::remove_all(dir_); }
    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(dir_ / name) << text;
        return (dir_ / name).string();
    }

private:
    fs::path dir_;
};

int cli(const std::vector<std::string>& args, std::string* out = nullptr) {
    std::ostringstream o, e;
    const int code = run_cli(args, o, e);
    if (out) *out = o.str();
    return code;
}

Outcome c9_robustness() {
    Outcome o;
    Scratch s;
    Rng rng(9);

    // Special: conjugate pair in genus 2, and a full x-fibre on (3,4).
    int special = 0, special_ok = 0;
    const std::string g2 = s.write("g2", "p=11\nn=2\ns=5\nc 0 0 1\n");
    special_ok += cli({"add", g2, s.write("a", "0;1\n"), s.write("b", "0;10\n")}) == kExitSpecial;
    ++special;
    const std::string c34_text = "p=1009\nn=3\ns=4\nc 0 0 5\nc 1 1 3\nc 2 0 7\n";
    const Curve c34 = curve_from(c34_text);
    const std::string c34_path = s.write("c34", c34_text);
    for (std::uint64_t x = 0; x < 1009 && special < 6; ++x) {
        const auto above = c34.points_above(c34.field().from_u64(x));
        if (above.size() != 3) continue;
        std::string text;
        for (const auto& p : above) text += p.to_string() + "\n";
        special_ok += cli({"reduce", c34_path, s.write("fibre", text)}) == kExitSpecial;
        ++special;
    }

    // Non-split: exit 3, and the extended answer is a genuine reduced class.
    int nonsplit = 0, nonsplit_ok = 0;
    for (int t = 0; t < 200 && nonsplit < 5; ++t) {
        std::string text;
        std::vector<AffinePoint> pts;
        for (int k = 0; k < 4; ++k) pts.push_back(c34.random_point(rng)), text += pts.back().to_string() + "\n";
        const std::string path = s.write("ns", text);
        if (cli({"reduce", c34_path, path}) != kExitNonSplit) continue;
        ++nonsplit;
        std::string out;
        if (cli({"reduce", c34_path, path, "--auto-extend"}, &out) != kExitOk) continue;
        const std::string modulus = out.substr(6, out.find('\n') - 6);
        const Curve lifted = curve_from("p=1009\next=" + modulus + "\nn=3\ns=4\nc 0 0 5\nc 1 1 3\nc 2 0 7\n");
        const Divisor result = parse_divisor(lifted, out);
        const Divisor input = Divisor::from_points(c34, pts).embed(lifted);
        nonsplit_ok += result.degree() <= 3 && add(input, negate(result)).empty();
    }

    // Fuzz.
    const int runs = 10000;
    std::array<int, 6> codes{};
    int escaped = 0;
    std::uniform_int_distribution<int> small(0, 1 << 20);
    const std::vector<std::uint64_t> primes{2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 101, 1009, 9};
    for (int run = 0; run < runs; ++run) {
        auto pick = [&](int n) { return static_cast<int>(rng() % static_cast<std::uint64_t>(n)); };
        const std::uint64_t p = primes[static_cast<std::size_t>(pick(static_cast<int>(primes.size())))];
        const int n = 2 + pick(3), sdeg = n + 1 + pick(4);
        std::string curve = "p=" + std::to_string(p) + "\nn=" + std::to_string(n) + "\ns=" + std::to_string(sdeg) + "\n";
        for (int k = pick(4); k-- > 0;) {
            const int j = pick(n);
            // Mostly monomials below the pole order of x^s.
            const int i = pick(5) ? pick((n * sdeg - sdeg * j + n - 1) / n) : pick(sdeg);
            curve += "c " + std::to_string(i) + " " + std::to_string(j) + " " + std::to_string(pick(static_cast<int>(p) + 2)) + "\n";
        }
        switch (pick(12)) {
            case 0: curve += "junk\n"; break;
            case 1: curve = curve.substr(0, static_cast<std::size_t>(pick(static_cast<int>(curve.size()) + 1))); break;
            case 2: curve += "ext=1,0,1\n"; break;
            default: break;
        }
        std::vector<std::string> divisor_files;
        for (int f = 0; f < 2; ++f) {
            std::string text;
            const int pts = pick(6);
            std::optional<Curve> parsed;
            try {
                parsed = curve_from(curve);
            } catch (const Error&) {
            }
            for (int k = 0; k < pts; ++k) {
                if (parsed && pick(10) != 0) {
                    try {
                        text += parsed->random_point(static_cast<std::uint64_t>(small(rng))).to_string() + "\n";
                        continue;
                    } catch (const Error&) {
                    }
                }
                text += std::to_string(pick(static_cast<int>(p) + 1)) + (pick(10) ? ";" : ",") + std::to_string(pick(static_cast<int>(p))) + "\n";
            }
            divisor_files.push_back(s.write("f" + std::to_string(f), text));
        }
        const std::string curve_path = s.write("curve", curve);
        std::vector<std::string> args;
        switch (pick(9)) {
            case 0: args = {"curve-info", curve_path}; break;
            case 1: args = {"add", curve_path, divisor_files[0], divisor_files[1]}; break;
            case 2: args = {"neg", curve_path, divisor_files[0]}; break;
            case 3: args = {"reduce", curve_path, divisor_files[0]}; break;
            case 4: args = {"mul", std::to_string(pick(40)), curve_path, divisor_files[0]}; break;
            case 5: args = {"torsion", std::to_string(pick(6)), curve_path, divisor_files[0]}; break;
            case 6: args = {"mul", std::to_string(pick(5)), curve_path, divisor_files[0], "--direct"}; break;
            case 7: args = {pick(2) ? "check" : "oracle-check", curve_path, "--trials", std::to_string(pick(2))}; break;
            default: {
                const std::vector<std::string> words{"add", "--json", "--seed", "x", "-1", curve_path, "--trials", "mul", "", "--auto-extend"};
                for (int k = pick(5); k-- > 0;) args.push_back(words[static_cast<std::size_t>(pick(static_cast<int>(words.size())))]);
            }
        }
        if (pick(4) == 0) args.push_back("--auto-extend");
        if (pick(4) == 0) args.push_back("--json");
        try {
            const auto t0 = std::chrono::steady_clock::now();
            std::ostringstream fo, fe;
            const int code = run_cli(args, fo, fe);
            const double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
            if (std::getenv("NSJAC_FUZZ_DEBUG") && (code == 1 || code == 5 || dt > 0.5)) {
                std::fprintf(stderr, "code=%d t=%.2f args:", code, dt);
                for (const auto& a : args) std::fprintf(stderr, " %s", a.c_str());
                std::fprintf(stderr, "\ncurve:\n%s\nf0:\n%sf1:\n%serr: %s\nout: %.300s\n----\n", curve.c_str(), read_text_file(divisor_files[0]).c_str(), read_text_file(divisor_files[1]).c_str(), fe.str().c_str(), fo.str().c_str());
            }
            ++codes[static_cast<std::size_t>(std::clamp(code, 0, 5))];
        } catch (...) {
            ++escaped;
        }
    }
    o.pass = special == special_ok && special >= 2 && nonsplit > 0 && nonsplit == nonsplit_ok && escaped == 0 &&
             codes[kExitInternal] == 0 && codes[kExitCheckFailed] == 0;
    o.detail = "special->2 " + std::to_string(special_ok) + "/" + std::to_string(special) + ", non-split->3 verified " +
               std::to_string(nonsplit_ok) + "/" + std::to_string(nonsplit) + "; fuzz " + std::to_string(runs) + " runs: exit0=" +
               std::to_string(codes[0]) + " exit2=" + std::to_string(codes[2]) + " exit3=" + std::to_string(codes[3]) +
               " exit4=" + std::to_string(codes[4]) + " exit1=" + std::to_string(codes[1]) + " internal=" +
               std::to_string(codes[5]) + " escaped=" + std::to_string(escaped);
    return o;
}

}  // namespace

int main(int argc, char** argv) {
    std::vector<int> only;
    for (int k = 1; k < argc; ++k) only.push_back(std::atoi(argv[k]));
    struct Criterion {
        int id;
        double limit;
        std::function<Outcome()> run;
    };
    const std::vector<Criterion> criteria{
        {1, 1, c1_structure}, {2, 5, c2_pole_law},  {3, 60, c3_elliptic},  {4, 120, c4_cantor},     {5, 300, c5_axioms},
        {6, 120, c6_direct},  {7, 60, c7_torsion},  {8, 1, c8_chain},      {9, 120, c9_robustness},
    };
    bool all = true;
    for (const auto& c : criteria) {
        if (!only.empty() && std::find(only.begin(), only.end(), c.id) == only.end()) continue;
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        const bool pass = o.pass && secs < c.limit;
        all = all && pass;
        std::printf("criterion %d: %s  %.2fs (limit %.0fs)  %s\n", c.id, pass ? "PASS" : "FAIL", secs, c.limit, o.detail.c_str());
        std::fflush(stdout);
    }
    return all ? 0 : 1;
}
