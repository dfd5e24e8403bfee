#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "nsjac/field.hpp"

namespace nsjac {

/// Dense univariate polynomial, little-endian. The zero polynomial has no
/// coefficients and degree -1; otherwise the leading coefficient is nonzero.
class UniPoly {
public:
    explicit UniPoly(Field field);
    UniPoly(Field field, std::vector<Fe> coeffs);

    static UniPoly constant(const Fe& c);
    /// c * var^degree
    static UniPoly monomial(const Fe& c, int degree);
    /// The polynomial `var`.
    static UniPoly identity(const Field& field);
    /// Shorthand for tests and examples: integer coefficients, little-endian.
    static UniPoly from_ints(const Field& field, const std::vector<std::int64_t>& coeffs);

    const Field& field() const { return field_; }
    const std::vector<Fe>& coeffs() const { return coeffs_; }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const { return coeffs_.size() == 1 && coeffs_[0].is_one(); }
    /// Coefficient of var^i; zero outside the stored range.
    Fe coeff(int i) const;
    Fe leading() const;

    Fe eval(const Fe& at) const;
    UniPoly monic() const;
    UniPoly derivative() const;

    UniPoly operator+(const UniPoly& o) const;
    UniPoly operator-(const UniPoly& o) const;
    UniPoly operator*(const UniPoly& o) const;
    UniPoly operator*(const Fe& c) const;
    UniPoly operator-() const;
    UniPoly& operator+=(const UniPoly& o) { return *this = *this + o; }
    UniPoly& operator-=(const UniPoly& o) { return *this = *this - o; }
    UniPoly& operator*=(const UniPoly& o) { return *this = *this * o; }

    bool operator==(const UniPoly& o) const;
    bool operator!=(const UniPoly& o) const { return !(*this == o); }

    std::string to_string(char var = 'x') const;

private:
    void trim();

    Field field_;
    std::vector<Fe> coeffs_;
};

struct DivMod {
    UniPoly quotient;
    UniPoly remainder;
};

/// a = q*b + r with deg r < deg b. Throws DivisionByZero for b = 0.
DivMod divmod(const UniPoly& a, const UniPoly& b);
/// Quotient of a division that must be exact; throws Internal otherwise.
UniPoly exact_div(const UniPoly& a, const UniPoly& b);
UniPoly operator%(const UniPoly& a, const UniPoly& b);

/// Monic gcd; gcd(0, 0) = 0.
UniPoly gcd(const UniPoly& a, const UniPoly& b);

struct XGcd {
    UniPoly g;  ///< monic gcd
    UniPoly s;
    UniPoly t;  ///< s*a + t*b = g
};
XGcd xgcd(const UniPoly& a, const UniPoly& b);

UniPoly mulmod(const UniPoly& a, const UniPoly& b, const UniPoly& m);
UniPoly powmod(const UniPoly& base, std::uint64_t e, const UniPoly& m);
/// Coefficientwise embedding from F_p into an extension of it.
UniPoly embed_poly(const UniPoly& a, const Field& target);

/// Interpolating polynomial of degree < xs.size() through (xs[i], ys[i]); xs distinct.
UniPoly interpolate(const std::vector<Fe>& xs, const std::vector<Fe>& ys);

/// lc(b)^deg(a) * prod_{b(beta)=0} a(beta), as the determinant of the
/// Sylvester matrix with b's rows on top. Uses the true degrees of a and b.
Fe resultant(const UniPoly& a, const UniPoly& b);

struct RootSet {
    /// Distinct roots in increasing canonical order, with multiplicity.
    std::vector<std::pair<Fe, int>> roots;
    /// Degrees (with repetition) of the irreducible factors of degree >= 2.
    std::vector<int> remaining_degrees;

    bool splits() const { return remaining_degrees.empty(); }
};

/// All roots in the working field. Distinct-degree splitting isolates the
/// linear part; equal-degree splitting (seeded) separates it into roots.
RootSet roots(const UniPoly& a, Rng& rng);
RootSet roots(const UniPoly& a);

/// Rabin irreducibility test over the polynomial's field.
bool is_irreducible(const UniPoly& a);

/// Monic irreducible polynomial of exact degree d over the prime field;
/// deterministic for a fixed seed.
UniPoly irreducible_of_degree(const Field& prime_field, int d, std::uint64_t seed = 0);

/// Bivariate polynomial stored as a polynomial in y with coefficients in F[x]:
/// rows()[j] is the coefficient of y^j. Trailing zero rows are trimmed.
class BiPoly {
public:
    explicit BiPoly(Field field);
    BiPoly(Field field, std::vector<UniPoly> rows);

    struct Term {
        int i;  ///< x exponent
        int j;  ///< y exponent
        Fe c;
    };
    static BiPoly from_terms(const Field& field, const std::vector<Term>& terms);
    /// Lifts a polynomial in x.
    static BiPoly from_x(const UniPoly& p);

    const Field& field() const { return field_; }
    const std::vector<UniPoly>& rows() const { return rows_; }
    bool is_zero() const { return rows_.empty(); }
    /// -1 for the zero polynomial.
    int deg_y() const { return static_cast<int>(rows_.size()) - 1; }
    int deg_x() const;
    Fe coeff(int i, int j) const;
    UniPoly y_coeff(int j) const;

    /// Specialize x = x0: a polynomial in y.
    UniPoly eval_x(const Fe& x0) const;
    Fe eval(const Fe& x0, const Fe& y0) const;

    BiPoly partial_x() const;
    BiPoly partial_y() const;

    BiPoly operator+(const BiPoly& o) const;
    BiPoly operator-(const BiPoly& o) const;
    BiPoly operator*(const BiPoly& o) const;
    BiPoly operator*(const Fe& c) const;
    bool operator==(const BiPoly& o) const;

    std::string to_string() const;

private:
    void trim();

    Field field_;
    std::vector<UniPoly> rows_;
};

BiPoly embed_bipoly(const BiPoly& a, const Field& target);

/// Res_y(f, g) as a polynomial in x, using the formal y-degrees of f and g:
/// lc_y(g)^deg_y(f) * prod over the roots beta(x) of g of f(x, beta(x)).
/// Evaluation-interpolation at deg_y(f)*deg_x(g) + deg_y(g)*deg_x(f) + 1
/// points; small prime fields evaluate over F_{p^2} and descend.
UniPoly resultant_y(const BiPoly& f, const BiPoly& g);

/// The same resultant via fraction-free (Bareiss) elimination of the
/// Sylvester matrix with entries in F[x]. Works over any field size.
UniPoly resultant_y_bareiss(const BiPoly& f, const BiPoly& g);

}  // namespace nsjac
