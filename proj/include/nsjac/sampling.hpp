#pragma once

#include <cstdint>

#include "nsjac/divisor.hpp"

namespace nsjac {

/// lcm(1..g) when it fits under kMaxExtensionDegree, otherwise 1. Over
/// F_{p^L} with this L, every class defined over F_p has split support.
int split_extension_degree(int genus);

/// Random divisors on a curve. Points are drawn on the base curve; for a
/// prime base field the work happens on the curve lifted to F_{p^L},
/// L = split_extension_degree(g), so residual zeros rarely fail to split.
class Sampler {
public:
    Sampler(Curve base, std::uint64_t seed, bool lift = true);

    const Curve& base() const { return base_; }
    const Curve& work() const { return work_; }
    int extension_degree() const { return work_.field().degree() / base_.field().degree(); }
    Rng& rng() { return rng_; }

    /// k base points (distinct when asked), lifted to the work curve.
    Divisor points(int k, bool distinct = true);
    /// A reduced divisor: g random points, or reduce() of g+1 random points.
    /// Special and non-split draws are redrawn; resamples() counts them.
    Divisor reduced();
    /// Reduced with pairwise distinct points.
    Divisor reduced_distinct();
    std::uint64_t resamples() const { return resamples_; }
    void count_resample() { ++resamples_; }
    /// Set once a caller gives up on drawing usable samples.
    bool starved() const { return starved_; }
    void mark_starved() { starved_ = true; }

private:
    Curve base_;
    Curve work_;
    Rng rng_;
    std::uint64_t resamples_ = 0;
    bool starved_ = false;
};

}  // namespace nsjac
