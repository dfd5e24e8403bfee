#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "nsjac/sampling.hpp"

namespace nsjac {

struct SuiteStats {
    std::string name;
    std::uint64_t passed = 0;
    std::uint64_t failed = 0;
    /// Draws discarded on SpecialDivisor / NonSplitResult.
    std::uint64_t resampled = 0;
    /// Trials where the matrix path gave way to the scalar path.
    std::uint64_t fallback = 0;
    /// Trials abandoned because no usable sample turned up.
    std::uint64_t inconclusive = 0;
    std::vector<std::string> failures{};

    bool ok() const { return failed == 0; }
    std::uint64_t trials() const { return passed + failed; }
};

/// Associativity, commutativity, identity, inverse.
std::vector<SuiteStats> run_axiom_suites(Sampler& s, int trials);
/// add / negate / scalar_mul against chord-tangent on (2,3) curves, add /
/// negate against Cantor on other (2,s) curves. Empty for n >= 3.
std::vector<SuiteStats> run_oracle_suites(Sampler& s, int trials);
/// direct_multiple(n, D) against scalar_mul(n, D) for each n.
std::vector<SuiteStats> run_direct_suites(Sampler& s, int trials, const std::vector<int>& ns = {2, 3});
/// is_n_torsion against scalar_mul for each n, plus, on (2,s) curves, the
/// rational ramification points as known 2-torsion.
std::vector<SuiteStats> run_torsion_suites(Sampler& s, int trials, const std::vector<int>& ns = {2, 3});

/// Rational points with F_y = 0 on a (2,s) curve.
std::vector<AffinePoint> ramification_points(const Curve& curve);

}  // namespace nsjac
