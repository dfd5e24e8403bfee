#include "nsjac/jacobian.hpp"

#include <atomic>
#include <bit>

namespace nsjac {

namespace {

std::atomic<std::uint64_t> g_conservation_checks{0};

Divisor repeat_points(const Divisor& d, int times) {
    std::vector<AffinePoint> pts;
    pts.reserve(static_cast<std::size_t>(d.degree() * times));
    for (const auto& pt : d.points()) {
        for (int k = 0; k < times; ++k) pts.push_back(pt);
    }
    return Divisor::from_points(d.curve(), std::move(pts));
}

}  // namespace

BiPoly InterpFunction::as_bipoly() const {
    std::vector<BiPoly::Term> terms;
    for (int k = 0; k <= leading_index; ++k) {
        const auto& m = basis[static_cast<std::size_t>(k)];
        if (!coeffs[static_cast<std::size_t>(k)].is_zero()) terms.push_back({m.i, m.j, coeffs[static_cast<std::size_t>(k)]});
    }
    return BiPoly::from_terms(curve.field(), terms);
}

Fe InterpFunction::eval(const AffinePoint& pt) const { return as_bipoly().eval(pt.x, pt.y); }

Matrix evaluation_matrix(const Divisor& d, const MonomialBasis& basis) {
    const Curve& curve = d.curve();
    Matrix m(curve.field(), d.degree(), static_cast<int>(basis.size()));
    int row = 0;
    for (const auto& [pt, mult] : d.support()) {
        const auto rows = curve.hasse_rows(pt, mult, basis);
        for (const auto& r : rows) {
            for (std::size_t c = 0; c < r.size(); ++c) m.at(row, static_cast<int>(c)) = r[c];
            ++row;
        }
    }
    return m;
}

InterpFunction interp_function(const Divisor& d) {
    const Curve& curve = d.curve();
    InterpFunction r{curve, curve.basis_prefix(d.degree() + 1), {}, 0};
    auto kernel = first_column_dependency(evaluation_matrix(d, r.basis));
    if (!kernel) throw Internal("evaluation matrix with more columns than rows has trivial kernel");
    r.coeffs = std::move(*kernel);
    for (int k = static_cast<int>(r.coeffs.size()) - 1; k >= 0; --k) {
        if (!r.coeffs[static_cast<std::size_t>(k)].is_zero()) {
            r.leading_index = k;
            break;
        }
    }
    return r;
}

Divisor extra_zeros(const InterpFunction& r, const Divisor& d) {
    const Curve& curve = d.curve();
    const Field& field = curve.field();
    const int pole = r.pole_order();
    const int expected = pole - d.degree();
    if (expected < 0) throw Internal("interpolation function has fewer poles than prescribed zeros");

    const BiPoly rb = r.as_bipoly();
    const UniPoly norm = resultant_y(rb, curve.equation());
    if (norm.degree() != pole) throw Internal("resultant degree differs from the pole order");
    UniPoly quotient = norm;
    for (const auto& pt : d.points()) {
        auto [q, rem] = divmod(quotient, UniPoly(field, {-pt.x, field.one()}));
        if (!rem.is_zero()) throw Internal("interpolation function does not vanish on the divisor");
        quotient = std::move(q);
    }

    const RootSet xs = roots(quotient);
    if (!xs.splits()) throw NonSplitResult("residual zeros are not rational over " + field.describe(), xs.remaining_degrees);

    const int cap = pole + 1;
    std::vector<AffinePoint> residual;
    for (const auto& [x0, mu] : xs.roots) {
        const UniPoly fiber = gcd(rb.eval_x(x0), curve.equation().eval_x(x0));
        const RootSet ys = roots(fiber);
        if (!ys.splits()) throw NonSplitResult("residual zero above x = " + x0.to_string() + " is not rational", ys.remaining_degrees);
        int found = 0;
        for (const auto& [y0, unused] : ys.roots) {
            const AffinePoint pt{x0, y0};
            if (curve.is_singular(pt)) throw SingularPoint("(" + pt.to_string() + ") is a singular zero");
            const int extra = curve.valuation_of(rb, pt, cap) - d.multiplicity(pt);
            if (extra < 0) throw Internal("interpolation function vanishes to lower order than prescribed");
            for (int k = 0; k < extra; ++k) residual.push_back(pt);
            found += extra;
        }
        if (found != mu) throw Internal("fiber multiplicities disagree with the resultant");
    }
    // Zero count: prescribed zeros plus residual zeros equal the pole order.
    if (static_cast<int>(residual.size()) + d.degree() != pole) throw Internal("zero-count conservation violated");
    g_conservation_checks.fetch_add(1, std::memory_order_relaxed);
    return Divisor::from_points(curve, std::move(residual));
}

bool is_special(const Divisor& d) {
    const int g = d.curve().genus();
    if (d.degree() < g) return true;
    return rank(evaluation_matrix(d, d.curve().basis_prefix(g))) < g;
}

Divisor negate(const Divisor& d) { return extra_zeros(interp_function(d), d); }

Divisor reduce(const Divisor& d) {
    const int g = d.curve().genus();
    if (d.degree() >= g && is_special(d)) throw SpecialDivisor("degree " + std::to_string(d.degree()) + " divisor is special");
    if (d.degree() == g) return d;
    return negate(negate(d));
}

Divisor add(const Divisor& d1, const Divisor& d2) { return reduce(d1 + d2); }

Divisor scalar_mul(std::uint64_t k, const Divisor& d) {
    Divisor acc(d.curve());
    if (k == 0) return acc;
    for (int bit = std::bit_width(k) - 1; bit >= 0; --bit) {
        acc = add(acc, acc);
        if ((k >> bit) & 1U) acc = add(acc, d);
    }
    return acc;
}

Divisor direct_multiple(int n, const Divisor& d) {
    if (n < 2) throw InvalidInput("direct_multiple needs n >= 2");
    const int g = d.curve().genus();
    if (d.degree() > g) throw InvalidInput("direct_multiple needs deg D <= g");
    if (d.has_repeated_points()) throw SpecialDivisor("direct_multiple needs distinct points (multiplicity overlap)");
    if (d.empty()) return d;
    const Divisor confluent = repeat_points(d, n);
    if (confluent.degree() >= g && is_special(confluent)) throw SpecialDivisor("confluent divisor n*D is special");
    return negate(extra_zeros(interp_function(confluent), confluent));
}

TorsionResult is_n_torsion(int n, const Divisor& d) {
    if (n < 2) throw InvalidInput("is_n_torsion needs n >= 2");
    const int g = d.curve().genus();
    if (d.degree() == g && !d.has_repeated_points() && !is_special(d)) {
        try {
            const Divisor confluent = repeat_points(d, n - 1);
            const Divisor residual = extra_zeros(interp_function(confluent), confluent);
            return {residual == d, TorsionPath::Matrix};
        } catch (const SpecialDivisor&) {
        } catch (const NonSplitResult&) {
        }
    }
    return {scalar_mul(static_cast<std::uint64_t>(n), d).empty(), TorsionPath::ScalarFallback};
}

std::uint64_t conservation_checks() { return g_conservation_checks.load(std::memory_order_relaxed); }

}  // namespace nsjac
