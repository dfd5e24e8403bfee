#include <doctest.h>

#include <map>

#include "nsjac/poly.hpp"

using namespace nsjac;

namespace {

const Field& f7() {
    static const Field f = Field::prime(7);
    return f;
}

UniPoly P(const std::vector<std::int64_t>& c) { return UniPoly::from_ints(f7(), c); }

BiPoly Bi(const Field& f, const std::vector<BiPoly::Term>& t) { return BiPoly::from_terms(f, t); }

// Sylvester determinant of two univariate integer polynomials mod p by plain
// Gaussian elimination on int64, with g's rows on top.
std::int64_t sylvester_mod(std::vector<std::int64_t> a, std::vector<std::int64_t> b, std::int64_t p) {
    const int da = static_cast<int>(a.size()) - 1;
    const int db = static_cast<int>(b.size()) - 1;
    const int n = da + db;
    if (n == 0) return 1;
    std::vector<std::vector<std::int64_t>> m(static_cast<std::size_t>(n), std::vector<std::int64_t>(static_cast<std::size_t>(n), 0));
    for (int r = 0; r < da; ++r) {
        for (int k = 0; k <= db; ++k) m[r][r + k] = ((b[db - k] % p) + p) % p;
    }
    for (int r = 0; r < db; ++r) {
        for (int k = 0; k <= da; ++k) m[da + r][r + k] = ((a[da - k] % p) + p) % p;
    }
    auto inv = [p](std::int64_t x) {
        std::int64_t r = 1, e = p - 2;
        x %= p;
        while (e) {
            if (e & 1) r = r * x % p;
            x = x * x % p;
            e >>= 1;
        }
        return r;
    };
    std::int64_t det = 1;
    for (int c = 0; c < n; ++c) {
        int piv = c;
        while (piv < n && m[piv][c] == 0) ++piv;
        if (piv == n) return 0;
        if (piv != c) {
            std::swap(m[piv], m[c]);
            det = (p - det) % p;
        }
        det = det * m[c][c] % p;
        const std::int64_t iv = inv(m[c][c]);
        for (int r = c + 1; r < n; ++r) {
            const std::int64_t factor = m[r][c] * iv % p;
            for (int k = c; k < n; ++k) m[r][k] = ((m[r][k] - factor * m[c][k]) % p + p) % p;
        }
    }
    return det;
}

}  // namespace

TEST_CASE("divmod") {
    auto [q, r] = divmod(P({-1, 0, 1}), P({-1, 1}));
    CHECK(q == P({1, 1}));
    CHECK(r.is_zero());
    auto [q2, r2] = divmod(P({0, 1}), P({0, 0, 1}));
    CHECK(q2.is_zero());
    CHECK(r2 == P({0, 1}));
    // (x^2 - 2x)(x + 1) = x^3 - x^2 - 2x
    CHECK(P({0, -2, 1}) * P({1, 1}) == P({0, -2, -1, 1}));
    auto [q3, r3] = divmod(P({0, -2, -1, 1}), P({0, -2, 1}));
    CHECK(q3 == P({1, 1}));
    CHECK(r3.is_zero());
    CHECK_THROWS_AS(divmod(P({1}), UniPoly(f7())), DivisionByZero);
}

TEST_CASE("gcd") {
    CHECK(gcd(P({-1, 0, 1}), P({-1, 1})) == P({-1, 1}));
    CHECK(gcd(P({3, 0, 2}), UniPoly(f7())) == P({3, 0, 2}).monic());
    REQUIRE((3 * 3) % 7 == 2);
    CHECK(gcd(P({-2, 0, 1}), P({-3, 1})) == P({-3, 1}));
    const Field f = Field::prime(1009);
    Rng rng(5);
    for (int k = 0; k < 20; ++k) {
        UniPoly a(f), b(f), c(f);
        std::vector<Fe> ca, cb, cc;
        for (int i = 0; i < 4; ++i) ca.push_back(f.random(rng)), cb.push_back(f.random(rng)), cc.push_back(f.random(rng));
        a = UniPoly(f, ca), b = UniPoly(f, cb), c = UniPoly(f, cc);
        const XGcd x = xgcd(a * c, b * c);
        CHECK(x.s * (a * c) + x.t * (b * c) == x.g);
        CHECK(((a * c) % x.g).is_zero());
        CHECK((c % x.g).is_zero() == (x.g.degree() <= c.degree()));
    }
}

TEST_CASE("resultant_y with a linear factor is substitution") {
    const Field& f = f7();
    const BiPoly line = Bi(f, {{0, 1, f.one()}, {1, 0, f.from_int(-1)}, {0, 0, f.from_int(-1)}});
    const BiPoly curve = Bi(f, {{0, 2, f.one()}, {3, 0, f.from_int(-1)}, {0, 0, f.from_int(-1)}});
    // (x+1)^2 - x^3 - 1 = -x^3 + x^2 + 2x
    CHECK(resultant_y(line, curve) == P({0, 2, 1, 6}));
    CHECK(resultant_y_bareiss(line, curve) == P({0, 2, 1, 6}));
}

TEST_CASE("resultant_y of constants in x") {
    const Field& f = f7();
    for (int a = 0; a < 7; ++a) {
        for (int b = 0; b < 7; ++b) {
            const BiPoly ya = Bi(f, {{0, 1, f.one()}, {0, 0, f.from_int(-a)}});
            const BiPoly yb = Bi(f, {{0, 1, f.one()}, {0, 0, f.from_int(-b)}});
            CHECK(resultant_y(ya, yb) == UniPoly::constant(f.from_int(b - a)));
        }
    }
    const BiPoly y2m2 = Bi(f, {{0, 2, f.one()}, {0, 0, f.from_int(-2)}});
    const BiPoly ym3 = Bi(f, {{0, 1, f.one()}, {0, 0, f.from_int(-3)}});
    CHECK(resultant_y(y2m2, ym3).is_zero());
}

TEST_CASE("resultant_y agrees with Bareiss and with Sylvester at sample x") {
    for (const std::uint64_t p : {7ULL, 13ULL, 1009ULL}) {
        const Field f = Field::prime(p);
        Rng rng(p);
        for (int trial = 0; trial < 15; ++trial) {
            std::vector<BiPoly::Term> ta, tb;
            const int dya = 1 + trial % 3, dyb = 2 + trial % 2;
            for (int j = 0; j <= dya; ++j) {
                for (int i = 0; i < 3; ++i) ta.push_back({i, j, f.random(rng)});
            }
            for (int j = 0; j < dyb; ++j) {
                for (int i = 0; i < 4; ++i) tb.push_back({i, j, f.random(rng)});
            }
            tb.push_back({0, dyb, f.one()});
            const BiPoly a = Bi(f, ta), b = Bi(f, tb);
            const UniPoly r = resultant_y(a, b);
            CHECK(r == resultant_y_bareiss(a, b));
            for (std::uint64_t x = 0; x < std::min<std::uint64_t>(p, 10); ++x) {
                const Fe x0 = f.from_u64(x);
                std::vector<std::int64_t> ca, cb;
                const UniPoly sa = a.eval_x(x0), sb = b.eval_x(x0);
                if (sa.degree() != a.deg_y()) continue;
                for (int k = 0; k <= sa.degree(); ++k) ca.push_back(static_cast<std::int64_t>(sa.coeff(k).coeff(0)));
                for (int k = 0; k <= sb.degree(); ++k) cb.push_back(static_cast<std::int64_t>(sb.coeff(k).coeff(0)));
                CHECK(r.eval(x0).coeff(0) == static_cast<std::uint64_t>(sylvester_mod(ca, cb, static_cast<std::int64_t>(p))));
            }
        }
    }
}

TEST_CASE("roots over F_7") {
    const auto r1 = roots(P({-1, 0, 1}));
    REQUIRE(r1.roots.size() == 2);
    CHECK(r1.roots[0] == std::pair{f7().from_int(1), 1});
    CHECK(r1.roots[1] == std::pair{f7().from_int(6), 1});
    CHECK(r1.splits());

    const auto r2 = roots(P({1, 0, 1}));
    CHECK(r2.roots.empty());
    CHECK(r2.remaining_degrees == std::vector<int>{2});

    const auto r3 = roots(P({0, -2, 1}) * P({1, 1}));
    REQUIRE(r3.roots.size() == 3);
    CHECK(r3.roots[0].first == f7().from_int(0));
    CHECK(r3.roots[1].first == f7().from_int(2));
    CHECK(r3.roots[2].first == f7().from_int(6));

    const auto r4 = roots(P({-1, 1}) * P({-1, 1}) * P({-1, 1}) * P({1, 0, 1}));
    REQUIRE(r4.roots.size() == 1);
    CHECK(r4.roots[0].second == 3);
    CHECK(r4.remaining_degrees == std::vector<int>{2});
    CHECK_THROWS_AS(roots(UniPoly(f7())), InvalidInput);
}

TEST_CASE("roots against brute-force evaluation over F_1009") {
    const Field f = Field::prime(1009);
    Rng rng(17);
    for (int trial = 0; trial < 40; ++trial) {
        // Product of random linears (some repeated) and a random tail.
        UniPoly a = UniPoly::constant(f.one());
        for (int k = 0; k < trial % 6; ++k) {
            const Fe r = f.from_u64(rng() % 20);
            a *= UniPoly(f, {-r, f.one()});
        }
        std::vector<Fe> tail;
        for (int k = 0; k < 3; ++k) tail.push_back(f.random(rng));
        tail.push_back(f.one());
        a *= UniPoly(f, tail);
        std::map<std::uint64_t, int> brute;
        for (std::uint64_t x = 0; x < 1009; ++x) {
            UniPoly rest = a;
            const UniPoly lin(f, {-f.from_u64(x), f.one()});
            int mult = 0;
            while (rest.degree() > 0 && rest.eval(f.from_u64(x)).is_zero()) {
                rest = exact_div(rest, lin);
                ++mult;
            }
            if (mult) brute[x] = mult;
        }
        const RootSet rs = roots(a);
        std::map<std::uint64_t, int> fast;
        int linear_degree = 0;
        for (const auto& [x, m] : rs.roots) fast[x.coeff(0)] = m, linear_degree += m;
        CHECK(fast == brute);
        int rest = 0;
        for (int d : rs.remaining_degrees) rest += d;
        CHECK(linear_degree + rest == a.degree());
    }
}

TEST_CASE("roots over an extension field") {
    const Field f = Field::extension(7, {1, 0, 1});
    const RootSet rs = roots(UniPoly(f, {f.one(), f.zero(), f.one()}));
    REQUIRE(rs.splits());
    REQUIRE(rs.roots.size() == 2);
    for (const auto& [r, m] : rs.roots) CHECK((r * r + f.one()).is_zero());
}

TEST_CASE("irreducible_of_degree") {
    int roots7 = 0;
    for (int x = 0; x < 7; ++x) roots7 += (x * x + 1) % 7 == 0;
    CHECK(roots7 == 0);
    CHECK(is_irreducible(P({1, 0, 1})));
    const Field f5 = Field::prime(5);
    CHECK(is_irreducible(UniPoly::from_ints(f5, {2, 0, 1})));
    for (int d = 2; d <= 12; ++d) {
        const UniPoly m = irreducible_of_degree(f7(), d, 3);
        CHECK(m.degree() == d);
        CHECK(m.leading().is_one());
        CHECK(is_irreducible(m));
        CHECK(m == irreducible_of_degree(f7(), d, 3));
    }
    CHECK_FALSE(is_irreducible(P({-1, 0, 1})));
}

TEST_CASE("interpolation") {
    const Field f = Field::prime(1009);
    const UniPoly a = UniPoly::from_ints(f, {3, 0, 7, 1});
    std::vector<Fe> xs, ys;
    for (int k = 0; k < 4; ++k) xs.push_back(f.from_int(k * 5 + 1)), ys.push_back(a.eval(xs.back()));
    CHECK(interpolate(xs, ys) == a);
}
