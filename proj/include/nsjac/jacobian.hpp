#pragma once

#include <cstdint>
#include <vector>

#include "nsjac/divisor.hpp"
#include "nsjac/linalg.hpp"

namespace nsjac {

/// R = sum_j c_j f_j over a prefix of the pole-ordered monomial basis.
/// coeffs[leading_index] == 1 and every later coefficient is zero.
struct InterpFunction {
    Curve curve;
    MonomialBasis basis;
    std::vector<Fe> coeffs;
    int leading_index = 0;

    int pole_order() const { return basis[static_cast<std::size_t>(leading_index)].pole_order; }
    /// True when the last basis column carries the leading coefficient, i.e.
    /// the interpolation determinant has its full pole order.
    bool full_pole_order() const { return leading_index + 1 == static_cast<int>(basis.size()); }
    BiPoly as_bipoly() const;
    Fe eval(const AffinePoint& pt) const;
};

/// One row per point of D, with the Hasse rows 0..m-1 for a point of
/// multiplicity m, against the given basis columns.
Matrix evaluation_matrix(const Divisor& d, const MonomialBasis& basis);

/// The interpolation determinant of D over basis_prefix(deg D + 1).
///
/// Its coefficient vector spans the kernel of the evaluation matrix. When
/// that matrix has full rank this is the signed vector of maximal minors;
/// otherwise the determinant vanishes identically and the kernel element of
/// least pole order is returned instead. Either way R is the function of
/// least pole order that vanishes on D.
InterpFunction interp_function(const Divisor& d);

/// The residual zeros E of R beyond D, so that D + E - (deg D + deg E) w is
/// principal. Works from the resultant Res_y(R, F) with D's x-factors
/// divided out; multiplicities come from valuations along the curve.
/// Throws NonSplitResult when E is not rational over the working field.
Divisor extra_zeros(const InterpFunction& r, const Divisor& d);

/// i(D) > 0, tested as rank deficiency of D against the first g basis
/// columns (the holomorphic differentials). Divisors of degree < g are
/// always special.
bool is_special(const Divisor& d);

/// Reduced representative of -[D].
Divisor negate(const Divisor& d);
/// Reduced representative of [D]. Throws SpecialDivisor when deg D >= g and
/// D is special.
Divisor reduce(const Divisor& d);
/// reduce(d1 + d2).
Divisor add(const Divisor& d1, const Divisor& d2);
/// k*[D] by double-and-add over `add`.
Divisor scalar_mul(std::uint64_t k, const Divisor& d);
/// n*[D] from one confluent interpolation determinant: every point of D
/// contributes its Hasse rows 0..n-1. D must have distinct points.
Divisor direct_multiple(int n, const Divisor& d);

enum class TorsionPath { Matrix, ScalarFallback };

struct TorsionResult {
    bool torsion = false;
    TorsionPath path = TorsionPath::Matrix;
};

/// Whether n*[D] = 0. The matrix path reads off the residual zeros of the
/// (n-1)-fold confluent determinant of D and compares them with D; it needs
/// deg D = g, distinct points and D non-special, and otherwise (or when it
/// hits SpecialDivisor / NonSplitResult) the answer comes from scalar_mul.
TorsionResult is_n_torsion(int n, const Divisor& d);

/// Number of zero-count conservation checks passed since process start.
std::uint64_t conservation_checks();

}  // namespace nsjac
