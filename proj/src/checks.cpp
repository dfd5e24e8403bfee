#include "nsjac/checks.hpp"

#include "nsjac/jacobian.hpp"
#include "nsjac/oracle.hpp"

namespace nsjac {

namespace {

constexpr int kMaxAttempts = 200;
constexpr std::size_t kKeptFailures = 5;
constexpr std::size_t kKeptConstructed = 16;

void fail(SuiteStats& st, const std::string& why) {
    ++st.failed;
    if (st.failures.size() < kKeptFailures) st.failures.push_back(why);
}

// body() returns pass/fail; SpecialDivisor and NonSplitResult redraw.
template <typename Body>
void trial(Sampler& s, SuiteStats& st, Body&& body) {
    if (s.starved()) {
        ++st.inconclusive;
        return;
    }
    for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
        try {
            if (body()) {
                ++st.passed;
            } else {
                fail(st, "mismatch");
            }
            return;
        } catch (const SpecialDivisor&) {
        } catch (const NonSplitResult&) {
        } catch (const NoRationalPoint&) {
            break;
        } catch (const Error& e) {
            fail(st, std::string(error_kind_name(e.kind())) + ": " + e.what());
            return;
        }
        ++st.resampled;
    }
    s.mark_starved();
    ++st.inconclusive;
}

// Fixed inputs: nothing to redraw.
template <typename Body>
void once(SuiteStats& st, Body&& body) {
    try {
        if (body()) {
            ++st.passed;
        } else {
            fail(st, "mismatch");
        }
    } catch (const Error& e) {
        fail(st, std::string(error_kind_name(e.kind())) + ": " + e.what());
    }
}

oracle::EcPoint to_ec(const Divisor& d) {
    if (d.degree() > 1) throw Internal("reduced divisor of degree > 1 on an elliptic curve");
    if (d.empty()) return std::nullopt;
    return d.points().front();
}

Divisor from_ec(const Curve& c, const oracle::EcPoint& p) {
    if (!p) return Divisor(c);
    return Divisor::from_points(c, {*p});
}

}  // namespace

std::vector<SuiteStats> run_axiom_suites(Sampler& s, int trials) {
    SuiteStats assoc{"associativity"};
    SuiteStats comm{"commutativity"};
    SuiteStats ident{"identity"};
    SuiteStats inv{"inverse"};
    const Divisor zero(s.work());
    for (int t = 0; t < trials; ++t) {
        trial(s, assoc, [&] {
            const Divisor a = s.reduced(), b = s.reduced(), c = s.reduced();
            return add(add(a, b), c) == add(a, add(b, c));
        });
        trial(s, comm, [&] {
            const Divisor a = s.reduced(), b = s.reduced();
            return add(a, b) == add(b, a);
        });
        trial(s, ident, [&] {
            const Divisor a = s.reduced();
            return add(a, zero) == a && add(zero, a) == a;
        });
        trial(s, inv, [&] {
            const Divisor a = s.reduced();
            return add(a, negate(a)).empty() && negate(negate(a)) == a;
        });
    }
    return {assoc, comm, ident, inv};
}

std::vector<SuiteStats> run_oracle_suites(Sampler& s, int trials) {
    const Curve& c = s.work();
    if (c.n() != 2) return {};
    if (c.s() == 3) {
        SuiteStats sum{"oracle add (chord-tangent)"};
        SuiteStats neg{"oracle negate (chord-tangent)"};
        SuiteStats mul{"oracle scalar_mul (chord-tangent)"};
        std::uniform_int_distribution<std::uint64_t> scalar(0, 1U << 16);
        for (int t = 0; t < trials; ++t) {
            trial(s, sum, [&] {
                const Divisor a = s.reduced(), b = s.reduced();
                return add(a, b) == from_ec(c, oracle::chord_tangent_add(c, to_ec(a), to_ec(b)));
            });
            trial(s, neg, [&] {
                const Divisor a = s.reduced();
                return negate(a) == from_ec(c, oracle::chord_tangent_negate(c, to_ec(a)));
            });
            trial(s, mul, [&] {
                const Divisor a = s.reduced();
                const std::uint64_t k = scalar(s.rng());
                return scalar_mul(k, a) == from_ec(c, oracle::chord_tangent_mul(c, k, to_ec(a)));
            });
        }
        return {sum, neg, mul};
    }
    SuiteStats sum{"oracle add (Cantor)"};
    SuiteStats neg{"oracle negate (Cantor)"};
    for (int t = 0; t < trials; ++t) {
        trial(s, sum, [&] {
            const Divisor a = s.reduced(), b = s.reduced();
            const auto expected = oracle::cantor_add(c, oracle::divisor_to_mumford(a), oracle::divisor_to_mumford(b));
            return oracle::divisor_to_mumford(add(a, b)) == expected;
        });
        trial(s, neg, [&] {
            const Divisor a = s.reduced();
            return oracle::divisor_to_mumford(negate(a)) == oracle::cantor_negate(c, oracle::divisor_to_mumford(a));
        });
    }
    return {sum, neg};
}

std::vector<SuiteStats> run_direct_suites(Sampler& s, int trials, const std::vector<int>& ns) {
    std::vector<SuiteStats> out;
    for (int n : ns) {
        SuiteStats st{"direct_multiple n=" + std::to_string(n)};
        for (int t = 0; t < trials; ++t) {
            trial(s, st, [&] {
                Divisor d = s.reduced_distinct();
                while (d.empty()) d = s.reduced_distinct();
                const Divisor expected = scalar_mul(static_cast<std::uint64_t>(n), d);
                try {
                    return direct_multiple(n, d) == expected;
                } catch (const SpecialDivisor&) {
                } catch (const NonSplitResult&) {
                }
                ++st.fallback;
                return true;
            });
        }
        out.push_back(std::move(st));
    }
    return out;
}

std::vector<AffinePoint> ramification_points(const Curve& curve) {
    if (curve.n() != 2) return {};
    // F_y = 2y - p1(x) = 0 on y^2 - p1 y = x^s + p0: f + p1^2/4 = 0.
    const Field& f = curve.field();
    const UniPoly p1 = curve.tail().y_coeff(1);
    const UniPoly p0 = UniPoly::monomial(f.one(), curve.s()) + curve.tail().y_coeff(0);
    const Fe quarter = f.from_u64(4).inverse();
    const Fe half = f.from_u64(2).inverse();
    const RootSet rs = roots(p0 + p1 * p1 * UniPoly::constant(quarter));
    std::vector<AffinePoint> pts;
    for (const auto& [x0, unused] : rs.roots) pts.push_back({x0, p1.eval(x0) * half});
    return pts;
}

std::vector<SuiteStats> run_torsion_suites(Sampler& s, int trials, const std::vector<int>& ns) {
    std::vector<SuiteStats> out;
    for (int n : ns) {
        SuiteStats st{"torsion n=" + std::to_string(n)};
        for (int t = 0; t < trials; ++t) {
            trial(s, st, [&] {
                const Divisor d = s.reduced();
                const TorsionResult r = is_n_torsion(n, d);
                if (r.path == TorsionPath::ScalarFallback) ++st.fallback;
                return r.torsion == scalar_mul(static_cast<std::uint64_t>(n), d).empty();
            });
        }
        if (n == 2 && trials > 0) {
            // g distinct ramification points form a 2-torsion class.
            const auto ram = ramification_points(s.base());
            const auto g = static_cast<std::size_t>(s.work().genus());
            for (std::size_t start = 0; start + g <= ram.size() && start < kKeptConstructed; ++start) {
                const std::vector<AffinePoint> pts(ram.begin() + static_cast<std::ptrdiff_t>(start),
                                                   ram.begin() + static_cast<std::ptrdiff_t>(start + g));
                const Divisor d = Divisor::from_points(s.base(), pts).embed(s.work());
                once(st, [&] {
                    const TorsionResult r = is_n_torsion(2, d);
                    if (r.path == TorsionPath::ScalarFallback) ++st.fallback;
                    return r.torsion && scalar_mul(2, d).empty();
                });
            }
        }
        out.push_back(std::move(st));
    }
    return out;
}

}  // namespace nsjac
