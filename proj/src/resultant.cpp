#include "nsjac/linalg.hpp"
#include "nsjac/poly.hpp"

namespace nsjac {

namespace {

/// Sylvester determinant with formal degrees len(a)-1 and len(b)-1
/// (coefficients little-endian, leading entries may vanish); b's rows on top.
Fe sylvester_det(const std::vector<Fe>& a, const std::vector<Fe>& b, const Field& field) {
    const int m = static_cast<int>(a.size()) - 1;
    const int l = static_cast<int>(b.size()) - 1;
    const int n = m + l;
    if (n == 0) return field.one();
    Matrix s(field, n, n);
    for (int r = 0; r < m; ++r) {
        for (int k = 0; k <= l; ++k) s.at(r, r + k) = b[static_cast<std::size_t>(l - k)];
    }
    for (int r = 0; r < l; ++r) {
        for (int k = 0; k <= m; ++k) s.at(m + r, r + k) = a[static_cast<std::size_t>(m - k)];
    }
    return determinant(std::move(s));
}

std::vector<Fe> formal_row(const BiPoly& p, const Fe& x0) {
    std::vector<Fe> v;
    v.reserve(static_cast<std::size_t>(p.deg_y() + 1));
    for (const auto& row : p.rows()) v.push_back(row.eval(x0));
    return v;
}

UniPoly resultant_by_evaluation(const BiPoly& f, const BiPoly& g, int bound) {
    const Field& field = f.field();
    std::vector<Fe> xs, ys;
    xs.reserve(static_cast<std::size_t>(bound) + 1);
    ys.reserve(static_cast<std::size_t>(bound) + 1);
    for (int k = 0; k <= bound; ++k) {
        const Fe x0 = field.from_index(static_cast<std::uint64_t>(k));
        xs.push_back(x0);
        ys.push_back(sylvester_det(formal_row(f, x0), formal_row(g, x0), field));
    }
    return interpolate(xs, ys);
}

}  // namespace

UniPoly resultant_y(const BiPoly& f, const BiPoly& g) {
    if (f.field() != g.field()) throw FieldMismatch("resultant across fields");
    const Field& field = f.field();
    if (f.is_zero() || g.is_zero()) return UniPoly(field);
    const int bound = f.deg_y() * g.deg_x() + g.deg_y() * f.deg_x();
    if (field.has_more_than(static_cast<std::uint64_t>(bound))) return resultant_by_evaluation(f, g, bound);

    const auto p = field.characteristic();
    if (field.is_prime_field() && static_cast<unsigned __int128>(p) * p > static_cast<unsigned>(bound)) {
        const Field ext = Field::extension(p, [&] {
            std::vector<std::uint64_t> m;
            for (const auto& c : irreducible_of_degree(field, 2).coeffs()) m.push_back(c.coeff(0));
            return m;
        }());
        const UniPoly lifted = resultant_by_evaluation(embed_bipoly(f, ext), embed_bipoly(g, ext), bound);
        std::vector<Fe> down;
        for (const auto& c : lifted.coeffs()) {
            if (!c.in_prime_field()) throw Internal("resultant coefficient outside the base field");
            down.push_back(field.from_u64(c.coeff(0)));
        }
        return UniPoly(field, std::move(down));
    }
    return resultant_y_bareiss(f, g);
}

UniPoly resultant_y_bareiss(const BiPoly& f, const BiPoly& g) {
    if (f.field() != g.field()) throw FieldMismatch("resultant across fields");
    const Field& field = f.field();
    if (f.is_zero() || g.is_zero()) return UniPoly(field);
    const int m = f.deg_y();
    const int l = g.deg_y();
    const int n = m + l;
    const UniPoly one = UniPoly::constant(field.one());
    if (n == 0) return one;

    std::vector<std::vector<UniPoly>> s(static_cast<std::size_t>(n), std::vector<UniPoly>(static_cast<std::size_t>(n), UniPoly(field)));
    for (int r = 0; r < m; ++r) {
        for (int k = 0; k <= l; ++k) s[static_cast<std::size_t>(r)][static_cast<std::size_t>(r + k)] = g.y_coeff(l - k);
    }
    for (int r = 0; r < l; ++r) {
        for (int k = 0; k <= m; ++k) s[static_cast<std::size_t>(m + r)][static_cast<std::size_t>(r + k)] = f.y_coeff(m - k);
    }

    bool negate = false;
    UniPoly prev = one;
    for (int k = 0; k < n; ++k) {
        int pivot = k;
        while (pivot < n && s[static_cast<std::size_t>(pivot)][static_cast<std::size_t>(k)].is_zero()) ++pivot;
        if (pivot == n) return UniPoly(field);
        if (pivot != k) {
            std::swap(s[static_cast<std::size_t>(pivot)], s[static_cast<std::size_t>(k)]);
            negate = !negate;
        }
        const auto& pk = s[static_cast<std::size_t>(k)];
        for (int i = k + 1; i < n; ++i) {
            auto& row = s[static_cast<std::size_t>(i)];
            for (int j = k + 1; j < n; ++j) {
                row[static_cast<std::size_t>(j)] = exact_div(
                    row[static_cast<std::size_t>(j)] * pk[static_cast<std::size_t>(k)] - row[static_cast<std::size_t>(k)] * pk[static_cast<std::size_t>(j)], prev);
            }
            row[static_cast<std::size_t>(k)] = UniPoly(field);
        }
        prev = pk[static_cast<std::size_t>(k)];
    }
    UniPoly det = s[static_cast<std::size_t>(n - 1)][static_cast<std::size_t>(n - 1)];
    return negate ? -det : det;
}

}  // namespace nsjac
