#include "nsjac/poly.hpp"

#include <algorithm>
#include <sstream>

#include "nsjac/linalg.hpp"

namespace nsjac {

// ---------------------------------------------------------------- UniPoly

UniPoly::UniPoly(Field field) : field_(std::move(field)) {}

UniPoly::UniPoly(Field field, std::vector<Fe> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    for (const auto& c : coeffs_) {
        if (c.field() != field_) throw FieldMismatch("polynomial coefficient from a different field");
    }
    trim();
}

UniPoly UniPoly::constant(const Fe& c) { return UniPoly(c.field(), {c}); }

UniPoly UniPoly::monomial(const Fe& c, int degree) {
    std::vector<Fe> v(static_cast<std::size_t>(degree) + 1, c.field().zero());
    v.back() = c;
    return UniPoly(c.field(), std::move(v));
}

UniPoly UniPoly::identity(const Field& field) { return monomial(field.one(), 1); }

UniPoly UniPoly::from_ints(const Field& field, const std::vector<std::int64_t>& coeffs) {
    std::vector<Fe> v;
    v.reserve(coeffs.size());
    for (auto c : coeffs) v.push_back(field.from_int(c));
    return UniPoly(field, std::move(v));
}

void UniPoly::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

Fe UniPoly::coeff(int i) const {
    if (i < 0 || i >= static_cast<int>(coeffs_.size())) return field_.zero();
    return coeffs_[static_cast<std::size_t>(i)];
}

Fe UniPoly::leading() const { return coeffs_.empty() ? field_.zero() : coeffs_.back(); }

Fe UniPoly::eval(const Fe& at) const {
    Fe acc = field_.zero();
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * at + *it;
    return acc;
}

UniPoly UniPoly::monic() const {
    if (is_zero()) return *this;
    return *this * leading().inverse();
}

UniPoly UniPoly::derivative() const {
    std::vector<Fe> v;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) v.push_back(coeffs_[i] * field_.from_u64(i));
    return UniPoly(field_, std::move(v));
}

UniPoly UniPoly::operator+(const UniPoly& o) const {
    if (field_ != o.field_) throw FieldMismatch("polynomial addition across fields");
    std::vector<Fe> v = coeffs_.size() >= o.coeffs_.size() ? coeffs_ : o.coeffs_;
    const auto& shorter = coeffs_.size() >= o.coeffs_.size() ? o.coeffs_ : coeffs_;
    for (std::size_t i = 0; i < shorter.size(); ++i) v[i] += shorter[i];
    return UniPoly(field_, std::move(v));
}

UniPoly UniPoly::operator-() const {
    std::vector<Fe> v = coeffs_;
    for (auto& c : v) c = -c;
    return UniPoly(field_, std::move(v));
}

UniPoly UniPoly::operator-(const UniPoly& o) const { return *this + (-o); }

UniPoly UniPoly::operator*(const UniPoly& o) const {
    if (field_ != o.field_) throw FieldMismatch("polynomial product across fields");
    if (is_zero() || o.is_zero()) return UniPoly(field_);
    std::vector<Fe> v(coeffs_.size() + o.coeffs_.size() - 1, field_.zero());
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        for (std::size_t j = 0; j < o.coeffs_.size(); ++j) v[i + j] += coeffs_[i] * o.coeffs_[j];
    }
    return UniPoly(field_, std::move(v));
}

UniPoly UniPoly::operator*(const Fe& c) const {
    std::vector<Fe> v = coeffs_;
    for (auto& x : v) x *= c;
    return UniPoly(field_, std::move(v));
}

bool UniPoly::operator==(const UniPoly& o) const { return field_ == o.field_ && coeffs_ == o.coeffs_; }

std::string UniPoly::to_string(char var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const bool compound = field_.degree() > 1;
        if (i == 0 || !coeffs_[i].is_one()) {
            os << (compound ? "(" : "") << coeffs_[i].to_string() << (compound ? ")" : "");
            if (i > 0) os << '*';
        }
        if (i >= 1) os << var;
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

// ---------------------------------------------------------------- division, gcd

DivMod divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    if (a.field() != b.field()) throw FieldMismatch("polynomial division across fields");
    const Field& f = a.field();
    if (a.degree() < b.degree()) return {UniPoly(f), a};
    std::vector<Fe> rem = a.coeffs();
    std::vector<Fe> quo(static_cast<std::size_t>(a.degree() - b.degree() + 1), f.zero());
    const Fe lead_inv = b.leading().inverse();
    const int db = b.degree();
    for (int i = a.degree(); i >= db; --i) {
        const Fe c = rem[static_cast<std::size_t>(i)] * lead_inv;
        quo[static_cast<std::size_t>(i - db)] = c;
        if (c.is_zero()) continue;
        for (int j = 0; j <= db; ++j) rem[static_cast<std::size_t>(i - db + j)] -= c * b.coeffs()[static_cast<std::size_t>(j)];
    }
    rem.resize(static_cast<std::size_t>(db));
    return {UniPoly(f, std::move(quo)), UniPoly(f, std::move(rem))};
}

UniPoly exact_div(const UniPoly& a, const UniPoly& b) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) throw Internal("inexact polynomial division");
    return q;
}

UniPoly operator%(const UniPoly& a, const UniPoly& b) { return divmod(a, b).remainder; }

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly x = a, y = b;
    while (!y.is_zero()) {
        UniPoly r = x % y;
        x = std::move(y);
        y = std::move(r);
    }
    return x.monic();
}

XGcd xgcd(const UniPoly& a, const UniPoly& b) {
    const Field& f = a.field();
    UniPoly r0 = a, r1 = b;
    UniPoly s0 = UniPoly::constant(f.one()), s1(f);
    UniPoly t0(f), t1 = UniPoly::constant(f.one());
    while (!r1.is_zero()) {
        auto [q, r] = divmod(r0, r1);
        UniPoly s2 = s0 - q * s1;
        UniPoly t2 = t0 - q * t1;
        r0 = std::move(r1);
        r1 = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (r0.is_zero()) return {r0, s0, t0};
    const Fe inv = r0.leading().inverse();
    return {r0 * inv, s0 * inv, t0 * inv};
}

UniPoly mulmod(const UniPoly& a, const UniPoly& b, const UniPoly& m) { return (a * b) % m; }

UniPoly powmod(const UniPoly& base, std::uint64_t e, const UniPoly& m) {
    UniPoly result = UniPoly::constant(m.field().one()) % m;
    UniPoly b = base % m;
    while (e) {
        if (e & 1) result = mulmod(result, b, m);
        e >>= 1;
        if (e) b = mulmod(b, b, m);
    }
    return result;
}

UniPoly embed_poly(const UniPoly& a, const Field& target) {
    std::vector<Fe> v;
    v.reserve(a.coeffs().size());
    for (const auto& c : a.coeffs()) v.push_back(embed_prime(c, target));
    return UniPoly(target, std::move(v));
}

UniPoly interpolate(const std::vector<Fe>& xs, const std::vector<Fe>& ys) {
    if (xs.size() != ys.size() || xs.empty()) throw InvalidInput("interpolation needs matching, nonempty samples");
    const Field f = xs[0].field();
    const std::size_t n = xs.size();
    // Newton divided differences.
    std::vector<Fe> dd = ys;
    for (std::size_t level = 1; level < n; ++level) {
        for (std::size_t i = n - 1; i >= level; --i) {
            const Fe denom = xs[i] - xs[i - level];
            if (denom.is_zero()) throw InvalidInput("interpolation nodes must be distinct");
            dd[i] = (dd[i] - dd[i - 1]) / denom;
        }
    }
    UniPoly result = UniPoly::constant(dd[n - 1]);
    for (std::size_t k = n - 1; k-- > 0;) {
        result = result * UniPoly(f, {-xs[k], f.one()}) + UniPoly::constant(dd[k]);
    }
    return result;
}

Fe resultant(const UniPoly& a, const UniPoly& b) {
    const Field& f = a.field();
    if (a.is_zero() || b.is_zero()) return f.zero();
    const int m = a.degree();
    const int l = b.degree();
    const int size = m + l;
    if (size == 0) return f.one();
    Matrix s(f, size, size);
    // b's m shifted rows first, then a's l shifted rows; coefficients high to low.
    for (int r = 0; r < m; ++r) {
        for (int k = 0; k <= l; ++k) s.at(r, r + k) = b.coeff(l - k);
    }
    for (int r = 0; r < l; ++r) {
        for (int k = 0; k <= m; ++k) s.at(m + r, r + k) = a.coeff(m - k);
    }
    return determinant(std::move(s));
}

// ---------------------------------------------------------------- BiPoly

BiPoly::BiPoly(Field field) : field_(std::move(field)) {}

BiPoly::BiPoly(Field field, std::vector<UniPoly> rows) : field_(std::move(field)), rows_(std::move(rows)) {
    for (const auto& r : rows_) {
        if (r.field() != field_) throw FieldMismatch("bivariate row from a different field");
    }
    trim();
}

void BiPoly::trim() {
    while (!rows_.empty() && rows_.back().is_zero()) rows_.pop_back();
}

BiPoly BiPoly::from_terms(const Field& field, const std::vector<Term>& terms) {
    int max_j = -1;
    for (const auto& t : terms) {
        if (t.i < 0 || t.j < 0) throw InvalidInput("negative exponent in bivariate term");
        max_j = std::max(max_j, t.j);
    }
    std::vector<UniPoly> rows(static_cast<std::size_t>(max_j + 1), UniPoly(field));
    for (const auto& t : terms) {
        rows[static_cast<std::size_t>(t.j)] += UniPoly::monomial(t.c, t.i);
    }
    return BiPoly(field, std::move(rows));
}

BiPoly BiPoly::from_x(const UniPoly& p) { return BiPoly(p.field(), {p}); }

int BiPoly::deg_x() const {
    int d = -1;
    for (const auto& r : rows_) d = std::max(d, r.degree());
    return d;
}

Fe BiPoly::coeff(int i, int j) const {
    if (j < 0 || j > deg_y()) return field_.zero();
    return rows_[static_cast<std::size_t>(j)].coeff(i);
}

UniPoly BiPoly::y_coeff(int j) const {
    if (j < 0 || j > deg_y()) return UniPoly(field_);
    return rows_[static_cast<std::size_t>(j)];
}

UniPoly BiPoly::eval_x(const Fe& x0) const {
    std::vector<Fe> v;
    v.reserve(rows_.size());
    for (const auto& r : rows_) v.push_back(r.eval(x0));
    return UniPoly(field_, std::move(v));
}

Fe BiPoly::eval(const Fe& x0, const Fe& y0) const { return eval_x(x0).eval(y0); }

BiPoly BiPoly::partial_x() const {
    std::vector<UniPoly> v;
    for (const auto& r : rows_) v.push_back(r.derivative());
    return BiPoly(field_, std::move(v));
}

BiPoly BiPoly::partial_y() const {
    std::vector<UniPoly> v;
    for (std::size_t j = 1; j < rows_.size(); ++j) v.push_back(rows_[j] * field_.from_u64(j));
    return BiPoly(field_, std::move(v));
}

BiPoly BiPoly::operator+(const BiPoly& o) const {
    if (field_ != o.field_) throw FieldMismatch("bivariate addition across fields");
    std::vector<UniPoly> v = rows_.size() >= o.rows_.size() ? rows_ : o.rows_;
    const auto& shorter = rows_.size() >= o.rows_.size() ? o.rows_ : rows_;
    for (std::size_t j = 0; j < shorter.size(); ++j) v[j] += shorter[j];
    return BiPoly(field_, std::move(v));
}

BiPoly BiPoly::operator*(const Fe& c) const {
    std::vector<UniPoly> v;
    for (const auto& r : rows_) v.push_back(r * c);
    return BiPoly(field_, std::move(v));
}

BiPoly BiPoly::operator-(const BiPoly& o) const { return *this + o * (-field_.one()); }

BiPoly BiPoly::operator*(const BiPoly& o) const {
    if (field_ != o.field_) throw FieldMismatch("bivariate product across fields");
    if (is_zero() || o.is_zero()) return BiPoly(field_);
    std::vector<UniPoly> v(rows_.size() + o.rows_.size() - 1, UniPoly(field_));
    for (std::size_t a = 0; a < rows_.size(); ++a) {
        for (std::size_t b = 0; b < o.rows_.size(); ++b) v[a + b] += rows_[a] * o.rows_[b];
    }
    return BiPoly(field_, std::move(v));
}

bool BiPoly::operator==(const BiPoly& o) const { return field_ == o.field_ && rows_ == o.rows_; }

std::string BiPoly::to_string() const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = 0; j < rows_.size(); ++j) {
        for (int i = 0; i <= rows_[j].degree(); ++i) {
            const Fe c = rows_[j].coeff(i);
            if (c.is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            const bool compound = field_.degree() > 1;
            const bool unit = c.is_one() && (i > 0 || j > 0);
            if (!unit) os << (compound ? "(" : "") << c.to_string() << (compound ? ")" : "");
            bool need_star = !unit;
            if (i > 0) {
                os << (need_star ? "*" : "") << 'x';
                if (i > 1) os << '^' << i;
                need_star = true;
            }
            if (j > 0) {
                os << (need_star ? "*" : "") << 'y';
                if (j > 1) os << '^' << j;
            }
        }
    }
    return os.str();
}

BiPoly embed_bipoly(const BiPoly& a, const Field& target) {
    std::vector<UniPoly> v;
    for (const auto& r : a.rows()) v.push_back(embed_poly(r, target));
    return BiPoly(target, std::move(v));
}

}  // namespace nsjac
