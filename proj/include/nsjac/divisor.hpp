#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nsjac/curve.hpp"

namespace nsjac {

/// Effective divisor sum(P_i) standing for the class sum(P_i) - deg * w,
/// where w is the point at infinity. Points are kept sorted, so two
/// divisors are equal exactly when their point multisets agree.
class Divisor {
public:
    /// The identity class.
    explicit Divisor(Curve curve);

    /// Throws PointNotOnCurve if any point misses the curve.
    static Divisor from_points(Curve curve, std::vector<AffinePoint> points);

    const Curve& curve() const { return curve_; }
    const std::vector<AffinePoint>& points() const { return points_; }
    int degree() const { return static_cast<int>(points_.size()); }
    bool empty() const { return points_.empty(); }

    /// Distinct points with their multiplicities, in canonical order.
    std::vector<std::pair<AffinePoint, int>> support() const;
    int multiplicity(const AffinePoint& pt) const;
    bool has_repeated_points() const;

    /// Multiset union.
    Divisor operator+(const Divisor& o) const;
    /// Point-multiset equality (throws FieldMismatch across curves).
    bool operator==(const Divisor& o) const;
    bool operator!=(const Divisor& o) const { return !(*this == o); }

    Divisor embed(const Curve& target) const;

private:
    Divisor(Curve curve, std::vector<AffinePoint> sorted_points);

    Curve curve_;
    std::vector<AffinePoint> points_;
};

inline Divisor divisor_from_points(Curve curve, std::vector<AffinePoint> points) {
    return Divisor::from_points(std::move(curve), std::move(points));
}

/// prod over the points of (x - x(P)), with multiplicity.
UniPoly mumford_u(const Divisor& d);

/// Multiset equality; FieldMismatch if the curves differ.
bool divisor_equal(const Divisor& a, const Divisor& b);

/// One "x;y" line per point, sorted; the empty divisor is the empty string.
std::string format_divisor(const Divisor& d);
/// Inverse of format_divisor. Blank lines and '#' comments are ignored.
Divisor parse_divisor(const Curve& curve, std::string_view text);

}  // namespace nsjac
