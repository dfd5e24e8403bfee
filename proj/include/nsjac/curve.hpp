#pragma once

#include <compare>
#include <memory>
#include <string>
#include <vector>

#include "nsjac/field.hpp"
#include "nsjac/poly.hpp"

namespace nsjac {

/// x^i y^j with its pole order n*i + s*j at infinity.
struct Monomial {
    int i = 0;
    int j = 0;
    int pole_order = 0;

    bool operator==(const Monomial&) const = default;
};

/// Monomials sorted by strictly increasing pole order, starting with 1.
using MonomialBasis = std::vector<Monomial>;

/// Affine point; never the point at infinity.
struct AffinePoint {
    Fe x;
    Fe y;

    bool operator==(const AffinePoint& o) const { return x == o.x && y == o.y; }
    std::strong_ordering operator<=>(const AffinePoint& o) const {
        if (auto c = x <=> o.x; c != 0) return c;
        return y <=> o.y;
    }
    /// "x;y" with field elements in their canonical text form.
    std::string to_string() const { return x.to_string() + ";" + y.to_string(); }
};

/// Truncated power series in the local parameter, lowest order first.
using Series = std::vector<Fe>;

enum class LocalParameter { X, Y };

/// x(t), y(t) about a smooth point, with t = x - x0 or t = y - y0.
struct LocalExpansion {
    AffinePoint center;
    LocalParameter parameter = LocalParameter::X;
    Series x;
    Series y;
};

/// Truncated series product, result length `len`.
Series series_mul(const Series& a, const Series& b, std::size_t len);
/// P(x(t), y(t)) truncated to `len` terms.
Series compose(const BiPoly& p, const Series& x, const Series& y, std::size_t len);

/// The plane curve y^n = x^s + p(x, y) with gcd(n, s) = 1, deg_x p < s and
/// deg_y p < n. Immutable; copies share state.
class Curve {
public:
    Curve(Field field, int n, int s, BiPoly tail);

    const Field& field() const;
    int n() const;
    int s() const;
    int genus() const;
    const BiPoly& tail() const;
    /// F(x, y) = y^n - x^s - p(x, y); the curve is F = 0.
    const BiPoly& equation() const;

    /// Positive integers that are not pole orders at infinity.
    std::vector<int> gap_sequence() const;
    /// The first `count` monomials in pole order.
    MonomialBasis basis_prefix(int count) const;

    bool is_on_curve(const Fe& x, const Fe& y) const;
    bool is_on_curve(const AffinePoint& pt) const { return is_on_curve(pt.x, pt.y); }
    /// Both partial derivatives of F vanish.
    bool is_singular(const AffinePoint& pt) const;
    /// A singular affine point exists over the curve's field, or F has a
    /// repeated factor.
    bool has_singular_point() const;

    /// Rational points with the given x-coordinate.
    std::vector<AffinePoint> points_above(const Fe& x) const;
    AffinePoint random_point(Rng& rng) const;
    AffinePoint random_point(std::uint64_t seed) const;

    /// Hensel lifting of the branch through `pt` to t^order.
    LocalExpansion local_expansion(const AffinePoint& pt, int order) const;
    /// Row k holds the k-th Hasse derivative (series coefficient) of every
    /// basis monomial at `pt`, for k = 0 .. up_to_order-1.
    std::vector<std::vector<Fe>> hasse_rows(const AffinePoint& pt, int up_to_order, const MonomialBasis& basis) const;
    /// Order of vanishing of r at `pt`, inspecting coefficients below `cap`.
    int valuation_of(const BiPoly& r, const AffinePoint& pt, int cap) const;

    /// The same curve over an extension of its (prime) field.
    Curve embed(const Field& target) const;

    bool operator==(const Curve& o) const;
    bool operator!=(const Curve& o) const { return !(*this == o); }

    std::string describe() const;

private:
    struct Impl;
    std::shared_ptr<const Impl> impl_;
};

}  // namespace nsjac
