#include "nsjac/curve.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace nsjac {

namespace {

constexpr int kRandomPointDraws = 4096;

}  // namespace

Series series_mul(const Series& a, const Series& b, std::size_t len) {
    const Field f = a.empty() ? b.front().field() : a.front().field();
    Series r(len, f.zero());
    for (std::size_t i = 0; i < a.size() && i < len; ++i) {
        if (a[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.size() && i + j < len; ++j) r[i + j] += a[i] * b[j];
    }
    return r;
}

Series compose(const BiPoly& p, const Series& x, const Series& y, std::size_t len) {
    const Field& f = p.field();
    Series total(len, f.zero());
    Series y_power(len, f.zero());
    y_power[0] = f.one();
    for (int j = 0; j <= p.deg_y(); ++j) {
        const UniPoly& row = p.rows()[static_cast<std::size_t>(j)];
        if (!row.is_zero()) {
            Series acc(len, f.zero());
            for (int i = row.degree(); i >= 0; --i) {
                acc = series_mul(acc, x, len);
                acc[0] += row.coeff(i);
            }
            const Series term = series_mul(acc, y_power, len);
            for (std::size_t k = 0; k < len; ++k) total[k] += term[k];
        }
        if (j < p.deg_y()) y_power = series_mul(y_power, y, len);
    }
    return total;
}

struct Curve::Impl {
    Field field;
    int n;
    int s;
    int genus;
    BiPoly tail;
    BiPoly equation;
    BiPoly fx;
    BiPoly fy;
};

Curve::Curve(Field field, int n, int s, BiPoly tail) {
    if (n < 2 || s <= n) throw BadDegrees("need n >= 2 and s > n, got (" + std::to_string(n) + "," + std::to_string(s) + ")");
    if (std::gcd(n, s) != 1) throw NotCoprime("gcd(" + std::to_string(n) + "," + std::to_string(s) + ") != 1");
    if (tail.field() != field) throw FieldMismatch("tail polynomial over a different field");
    if (tail.deg_x() >= s || tail.deg_y() >= n) throw BadDegrees("tail must have deg_x < s and deg_y < n");
    for (int j = 0; j <= tail.deg_y(); ++j) {
        const int i = tail.rows()[static_cast<std::size_t>(j)].degree();
        if (i >= 0 && n * i + s * j >= n * s) {
            throw BadDegrees("tail monomial x^" + std::to_string(i) + " y^" + std::to_string(j) + " has pole order >= n*s");
        }
    }
    const auto p = field.characteristic();
    if ((static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(s)) % p == 0) {
        throw BadCharacteristic("characteristic " + std::to_string(p) + " divides n*s");
    }
    const BiPoly ys = BiPoly::from_terms(field, {{0, n, field.one()}});
    const BiPoly xs = BiPoly::from_terms(field, {{s, 0, field.one()}});
    BiPoly eq = ys - xs - tail;
    auto impl = std::make_shared<Impl>(Impl{field, n, s, (n - 1) * (s - 1) / 2, tail, eq, eq.partial_x(), eq.partial_y()});
    impl_ = std::move(impl);
}

const Field& Curve::field() const { return impl_->field; }
int Curve::n() const { return impl_->n; }
int Curve::s() const { return impl_->s; }
int Curve::genus() const { return impl_->genus; }
const BiPoly& Curve::tail() const { return impl_->tail; }
const BiPoly& Curve::equation() const { return impl_->equation; }

std::vector<int> Curve::gap_sequence() const {
    const int n = impl_->n, s = impl_->s;
    std::vector<int> gaps;
    for (int v = 1; v < 2 * impl_->genus; ++v) {
        bool representable = false;
        for (int j = 0; j < n && s * j <= v; ++j) {
            if ((v - s * j) % n == 0) {
                representable = true;
                break;
            }
        }
        if (!representable) gaps.push_back(v);
    }
    return gaps;
}

MonomialBasis Curve::basis_prefix(int count) const {
    if (count < 1) throw InvalidInput("basis prefix needs count >= 1");
    const int n = impl_->n, s = impl_->s, g = impl_->genus;
    // Entry k has pole order g + k once k >= g, and entries below g stay under 2g.
    const int bound = std::max(2 * g - 1, g + count - 1);
    MonomialBasis all;
    for (int j = 0; j < n && s * j <= bound; ++j) {
        for (int i = 0; n * i + s * j <= bound; ++i) all.push_back({i, j, n * i + s * j});
    }
    std::sort(all.begin(), all.end(), [](const Monomial& a, const Monomial& b) { return a.pole_order < b.pole_order; });
    if (static_cast<int>(all.size()) < count) throw Internal("basis enumeration fell short");
    all.resize(static_cast<std::size_t>(count));
    return all;
}

bool Curve::is_on_curve(const Fe& x, const Fe& y) const {
    if (x.field() != impl_->field || y.field() != impl_->field) return false;
    return impl_->equation.eval(x, y).is_zero();
}

bool Curve::is_singular(const AffinePoint& pt) const {
    return impl_->fx.eval(pt.x, pt.y).is_zero() && impl_->fy.eval(pt.x, pt.y).is_zero();
}

bool Curve::has_singular_point() const {
    const UniPoly disc = resultant_y(impl_->equation, impl_->fy);
    if (disc.is_zero()) return true;
    for (const auto& [x0, mult] : roots(disc).roots) {
        const UniPoly common = gcd(impl_->equation.eval_x(x0), impl_->fy.eval_x(x0));
        for (const auto& [y0, m] : roots(common).roots) {
            if (impl_->fx.eval(x0, y0).is_zero()) return true;
        }
    }
    return false;
}

std::vector<AffinePoint> Curve::points_above(const Fe& x) const {
    std::vector<AffinePoint> out;
    for (const auto& [y, mult] : roots(impl_->equation.eval_x(x)).roots) out.push_back({x, y});
    return out;
}

AffinePoint Curve::random_point(Rng& rng) const {
    for (int draw = 0; draw < kRandomPointDraws; ++draw) {
        const Fe x = impl_->field.random(rng);
        const auto candidates = roots(impl_->equation.eval_x(x), rng).roots;
        if (candidates.empty()) continue;
        std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
        AffinePoint pt{x, candidates[pick(rng)].first};
        if (is_singular(pt)) continue;
        return pt;
    }
    throw NoRationalPoint("no smooth rational point found in " + std::to_string(kRandomPointDraws) + " draws");
}

AffinePoint Curve::random_point(std::uint64_t seed) const {
    Rng rng(seed);
    return random_point(rng);
}

LocalExpansion Curve::local_expansion(const AffinePoint& pt, int order) const {
    if (order < 0) throw InvalidInput("negative expansion order");
    if (!is_on_curve(pt)) throw PointNotOnCurve(pt.to_string());
    const Field& f = impl_->field;
    const std::size_t len = static_cast<std::size_t>(order) + 1;
    const Fe fy = impl_->fy.eval(pt.x, pt.y);
    const Fe fx = impl_->fx.eval(pt.x, pt.y);

    LocalExpansion e{pt, LocalParameter::X, Series(len, f.zero()), Series(len, f.zero())};
    e.x[0] = pt.x;
    e.y[0] = pt.y;
    Series* solved = nullptr;
    Fe slope_inv;
    if (!fy.is_zero()) {
        e.parameter = LocalParameter::X;
        if (len > 1) e.x[1] = f.one();
        solved = &e.y;
        slope_inv = fy.inverse();
    } else if (!fx.is_zero()) {
        e.parameter = LocalParameter::Y;
        if (len > 1) e.y[1] = f.one();
        solved = &e.x;
        slope_inv = fx.inverse();
    } else {
        throw SingularPoint(pt.to_string());
    }
    // F(x(t), y(t) + c t^k) = F(x(t), y(t)) + F_y(pt) c t^k + O(t^(k+1)), likewise for x.
    for (std::size_t k = 1; k < len; ++k) {
        const Series residual = compose(impl_->equation, e.x, e.y, k + 1);
        (*solved)[k] = -residual[k] * slope_inv;
    }
    return e;
}

std::vector<std::vector<Fe>> Curve::hasse_rows(const AffinePoint& pt, int up_to_order, const MonomialBasis& basis) const {
    if (up_to_order < 1) throw InvalidInput("hasse_rows needs up_to_order >= 1");
    const auto e = local_expansion(pt, up_to_order - 1);
    const std::size_t len = static_cast<std::size_t>(up_to_order);
    const Field& f = impl_->field;
    int max_i = 0, max_j = 0;
    for (const auto& m : basis) {
        max_i = std::max(max_i, m.i);
        max_j = std::max(max_j, m.j);
    }
    std::vector<Series> xp{Series(len, f.zero())}, yp{Series(len, f.zero())};
    xp[0][0] = f.one();
    yp[0][0] = f.one();
    for (int i = 1; i <= max_i; ++i) xp.push_back(series_mul(xp.back(), e.x, len));
    for (int j = 1; j <= max_j; ++j) yp.push_back(series_mul(yp.back(), e.y, len));

    std::vector<std::vector<Fe>> rows(len, std::vector<Fe>(basis.size(), f.zero()));
    for (std::size_t col = 0; col < basis.size(); ++col) {
        const Series mono = series_mul(xp[static_cast<std::size_t>(basis[col].i)], yp[static_cast<std::size_t>(basis[col].j)], len);
        for (std::size_t k = 0; k < len; ++k) rows[k][col] = mono[k];
    }
    return rows;
}

int Curve::valuation_of(const BiPoly& r, const AffinePoint& pt, int cap) const {
    if (cap < 1) throw InvalidInput("valuation cap must be positive");
    if (!r.eval(pt.x, pt.y).is_zero()) {
        if (!is_on_curve(pt)) throw PointNotOnCurve(pt.to_string());
        return 0;
    }
    const auto e = local_expansion(pt, cap - 1);
    const Series s = compose(r, e.x, e.y, static_cast<std::size_t>(cap));
    for (int k = 0; k < cap; ++k) {
        if (!s[static_cast<std::size_t>(k)].is_zero()) return k;
    }
    return cap;
}

Curve Curve::embed(const Field& target) const {
    if (target == impl_->field) return *this;
    return Curve(target, impl_->n, impl_->s, embed_bipoly(impl_->tail, target));
}

bool Curve::operator==(const Curve& o) const {
    if (impl_ == o.impl_) return true;
    return impl_->field == o.impl_->field && impl_->n == o.impl_->n && impl_->s == o.impl_->s && impl_->tail == o.impl_->tail;
}

std::string Curve::describe() const {
    std::ostringstream os;
    os << "y^" << impl_->n << " = x^" << impl_->s;
    if (!impl_->tail.is_zero()) os << " + " << impl_->tail.to_string();
    os << " over " << impl_->field.describe();
    return os.str();
}

}  // namespace nsjac
