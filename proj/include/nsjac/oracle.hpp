#pragma once

#include <cstdint>
#include <optional>

#include "nsjac/divisor.hpp"

// Classical group laws kept independent of the determinant machinery; they
// exist to cross-check it.

namespace nsjac::oracle {

/// nullopt is the identity.
using EcPoint = std::optional<AffinePoint>;

/// Weierstrass chord-tangent law on an (2,3) curve
/// y^2 = x^3 + c20 x^2 + c10 x + c00 + c01 y + c11 x y.
EcPoint chord_tangent_add(const Curve& curve, const EcPoint& p, const EcPoint& q);
EcPoint chord_tangent_negate(const Curve& curve, const EcPoint& p);
EcPoint chord_tangent_mul(const Curve& curve, std::uint64_t k, const EcPoint& p);

/// (u, v) with u monic, deg v < deg u and u | v^2 + h v - f, for the
/// curve written as y^2 + h(x) y = f(x).
struct MumfordPair {
    UniPoly u;
    UniPoly v;

    bool operator==(const MumfordPair& o) const { return u == o.u && v == o.v; }
};

/// f and h for y^2 + h y = f on a (2,s) curve.
struct HyperellipticModel {
    UniPoly f;
    UniPoly h;
};
HyperellipticModel hyperelliptic_model(const Curve& curve);

MumfordPair cantor_identity(const Curve& curve);
bool mumford_valid(const Curve& curve, const MumfordPair& a);
/// Composition and reduction (Cantor, with the h-term).
MumfordPair cantor_add(const Curve& curve, const MumfordPair& a, const MumfordPair& b);
MumfordPair cantor_negate(const Curve& curve, const MumfordPair& a);

/// u = mumford_u(D), v the Hermite interpolant of the points. Throws
/// NotSemiReduced if D holds a point together with its hyperelliptic
/// conjugate, or a ramification point more than once.
MumfordPair divisor_to_mumford(const Divisor& d);
/// Requires u to split over the working field (NonSplitResult otherwise).
Divisor mumford_to_divisor(const Curve& curve, const MumfordPair& a);

}  // namespace nsjac::oracle
