#include "nsjac/oracle.hpp"

#include <bit>

namespace nsjac::oracle {

namespace {

struct Weierstrass {
    Fe a1, a2, a3, a4, a6;
};

// y^2 = x^3 + c20 x^2 + c10 x + c00 + c01 y + c11 x y  becomes
// y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6.
Weierstrass weierstrass(const Curve& curve) {
    if (curve.n() != 2 || curve.s() != 3) throw InvalidInput("chord-tangent oracle needs an (2,3) curve");
    const BiPoly& t = curve.tail();
    return {-t.coeff(1, 1), t.coeff(2, 0), -t.coeff(0, 1), t.coeff(1, 0), t.coeff(0, 0)};
}

void require_hyperelliptic(const Curve& curve) {
    if (curve.n() != 2) throw InvalidInput("Cantor oracle needs a (2,s) curve");
}

UniPoly linear(const Fe& root) { return UniPoly(root.field(), {-root, root.field().one()}); }

}  // namespace

EcPoint chord_tangent_negate(const Curve& curve, const EcPoint& p) {
    if (!p) return p;
    const auto w = weierstrass(curve);
    return AffinePoint{p->x, -p->y - w.a1 * p->x - w.a3};
}

EcPoint chord_tangent_add(const Curve& curve, const EcPoint& p, const EcPoint& q) {
    if (!p) return q;
    if (!q) return p;
    const auto w = weierstrass(curve);
    const Fe& x1 = p->x;
    const Fe& y1 = p->y;
    const Fe& x2 = q->x;
    const Fe& y2 = q->y;
    Fe lambda;
    if (x1 == x2) {
        if ((y1 + y2 + w.a1 * x2 + w.a3).is_zero()) return std::nullopt;
        const Field f = curve.field();
        lambda = (f.from_u64(3) * x1 * x1 + f.from_u64(2) * w.a2 * x1 + w.a4 - w.a1 * y1) /
                 (f.from_u64(2) * y1 + w.a1 * x1 + w.a3);
    } else {
        lambda = (y2 - y1) / (x2 - x1);
    }
    const Fe nu = y1 - lambda * x1;
    const Fe x3 = lambda * lambda + w.a1 * lambda - w.a2 - x1 - x2;
    const Fe y3 = -(lambda + w.a1) * x3 - nu - w.a3;
    return AffinePoint{x3, y3};
}

EcPoint chord_tangent_mul(const Curve& curve, std::uint64_t k, const EcPoint& p) {
    EcPoint acc;
    for (int bit = std::bit_width(k) - 1; bit >= 0; --bit) {
        acc = chord_tangent_add(curve, acc, acc);
        if ((k >> bit) & 1U) acc = chord_tangent_add(curve, acc, p);
    }
    return acc;
}

HyperellipticModel hyperelliptic_model(const Curve& curve) {
    require_hyperelliptic(curve);
    const Field& f = curve.field();
    // y^2 - p1(x) y = x^s + p0(x).
    return {UniPoly::monomial(f.one(), curve.s()) + curve.tail().y_coeff(0), -curve.tail().y_coeff(1)};
}

MumfordPair cantor_identity(const Curve& curve) {
    const Field& f = curve.field();
    return {UniPoly::constant(f.one()), UniPoly(f)};
}

bool mumford_valid(const Curve& curve, const MumfordPair& a) {
    const auto [f, h] = hyperelliptic_model(curve);
    if (a.u.is_zero() || !a.u.leading().is_one()) return false;
    if (a.v.degree() >= a.u.degree()) return false;
    if (a.u.degree() > curve.genus()) return false;
    return ((a.v * a.v + h * a.v - f) % a.u).is_zero();
}

MumfordPair cantor_negate(const Curve& curve, const MumfordPair& a) {
    const auto model = hyperelliptic_model(curve);
    return {a.u, (-model.h - a.v) % a.u};
}

MumfordPair cantor_add(const Curve& curve, const MumfordPair& a, const MumfordPair& b) {
    const auto [f, h] = hyperelliptic_model(curve);
    // Composition.
    const XGcd first = xgcd(a.u, b.u);
    const XGcd second = xgcd(first.g, a.v + b.v + h);
    const UniPoly& d = second.g;
    const UniPoly s1 = second.s * first.s;
    const UniPoly s2 = second.s * first.t;
    const UniPoly& s3 = second.t;
    UniPoly u = exact_div(a.u * b.u, d * d);
    UniPoly v = exact_div(s1 * a.u * b.v + s2 * b.u * a.v + s3 * (a.v * b.v + f), d) % u;
    // Reduction.
    while (u.degree() > curve.genus()) {
        const UniPoly next_u = exact_div(f - v * h - v * v, u);
        v = (-h - v) % next_u;
        u = next_u;
    }
    u = u.monic();
    return {u, v % u};
}

MumfordPair divisor_to_mumford(const Divisor& d) {
    const Curve& curve = d.curve();
    require_hyperelliptic(curve);
    const Field& field = curve.field();
    const auto support = d.support();
    for (std::size_t k = 1; k < support.size(); ++k) {
        if (support[k].first.x == support[k - 1].first.x) {
            throw NotSemiReduced("points (" + support[k - 1].first.to_string() + ") and (" + support[k].first.to_string() +
                                 ") are conjugate");
        }
    }
    UniPoly v(field);
    UniPoly modulus = UniPoly::constant(field.one());
    for (const auto& [pt, mult] : support) {
        // Local branch y(x) to order mult, as a polynomial in x.
        UniPoly branch = UniPoly::constant(pt.y);
        if (mult > 1) {
            const auto e = curve.local_expansion(pt, mult - 1);
            if (e.parameter != LocalParameter::X) {
                throw NotSemiReduced("ramification point (" + pt.to_string() + ") repeated");
            }
            branch = UniPoly(field);
            for (auto k = e.y.size(); k-- > 0;) branch = branch * linear(pt.x) + UniPoly::constant(e.y[k]);
        }
        UniPoly local_mod = UniPoly::constant(field.one());
        for (int k = 0; k < mult; ++k) local_mod *= linear(pt.x);
        // CRT: v + modulus * t = branch mod local_mod.
        const XGcd inv = xgcd(modulus, local_mod);
        const UniPoly t = ((branch - v) * inv.s) % local_mod;
        v = v + modulus * t;
        modulus *= local_mod;
        v = v % modulus;
    }
    return {mumford_u(d), v};
}

Divisor mumford_to_divisor(const Curve& curve, const MumfordPair& a) {
    const RootSet rs = roots(a.u);
    if (!rs.splits()) throw NonSplitResult("Mumford u does not split", rs.remaining_degrees);
    std::vector<AffinePoint> pts;
    for (const auto& [x0, mult] : rs.roots) {
        for (int k = 0; k < mult; ++k) pts.push_back({x0, a.v.eval(x0)});
    }
    return Divisor::from_points(curve, std::move(pts));
}

}  // namespace nsjac::oracle
