#include "nsjac/sampling.hpp"

#include <algorithm>
#include <numeric>

#include "nsjac/jacobian.hpp"

namespace nsjac {

namespace {

constexpr int kMaxDraws = 2000;

Curve lifted(const Curve& base, std::uint64_t seed, bool lift) {
    const int L = split_extension_degree(base.genus());
    if (!lift || L == 1 || !base.field().is_prime_field()) return base;
    const UniPoly m = irreducible_of_degree(base.field(), L, seed);
    std::vector<std::uint64_t> modulus;
    for (const auto& c : m.coeffs()) modulus.push_back(c.coeff(0));
    return base.embed(Field::extension(base.field().characteristic(), modulus));
}

}  // namespace

int split_extension_degree(int genus) {
    int L = 1;
    for (int k = 2; k <= genus; ++k) {
        L = std::lcm(L, k);
        if (L > kMaxExtensionDegree) return 1;
    }
    return L;
}

Sampler::Sampler(Curve base, std::uint64_t seed, bool lift)
    : base_(base), work_(lifted(base, seed, lift)), rng_(seed) {}

Divisor Sampler::points(int k, bool distinct) {
    std::vector<AffinePoint> pts;
    int draws = 0;
    while (static_cast<int>(pts.size()) < k) {
        if (++draws > kMaxDraws) throw NoRationalPoint("not enough distinct points on " + base_.describe());
        AffinePoint pt = base_.random_point(rng_);
        if (distinct && std::find(pts.begin(), pts.end(), pt) != pts.end()) continue;
        pts.push_back(std::move(pt));
    }
    return Divisor::from_points(base_, std::move(pts)).embed(work_);
}

Divisor Sampler::reduced() {
    const int g = work_.genus();
    for (int draws = 0; draws < kMaxDraws; ++draws) {
        const bool longer = std::uniform_int_distribution<int>(0, 1)(rng_) == 1;
        try {
            return reduce(points(longer ? g + 1 : g, false));
        } catch (const SpecialDivisor&) {
        } catch (const NonSplitResult&) {
        }
        ++resamples_;
    }
    throw NoRationalPoint("no reduced divisor found on " + work_.describe());
}

Divisor Sampler::reduced_distinct() {
    for (int draws = 0; draws < kMaxDraws; ++draws) {
        Divisor d = reduced();
        if (!d.has_repeated_points()) return d;
        ++resamples_;
    }
    throw NoRationalPoint("no distinct-support divisor found on " + work_.describe());
}

}  // namespace nsjac
