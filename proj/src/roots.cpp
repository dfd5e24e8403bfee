#include <algorithm>

#include "nsjac/poly.hpp"

namespace nsjac {

namespace {

constexpr int kSplitRetryBudget = 64;

/// h^q mod f for q = |F|, as d successive p-th powers.
UniPoly pow_field_size(const UniPoly& h, const UniPoly& f) {
    const Field& field = f.field();
    UniPoly r = h % f;
    for (int i = 0; i < field.degree(); ++i) r = powmod(r, field.characteristic(), f);
    return r;
}

UniPoly random_poly_below(const Field& field, int degree_bound, Rng& rng) {
    std::vector<Fe> v;
    v.reserve(static_cast<std::size_t>(degree_bound));
    for (int i = 0; i < degree_bound; ++i) v.push_back(field.random(rng));
    return UniPoly(field, std::move(v));
}

/// g monic, squarefree, product of linear factors over the working field.
void split_linear(const UniPoly& g, Rng& rng, std::vector<Fe>& out) {
    if (g.degree() <= 0) return;
    if (g.degree() == 1) {
        out.push_back(-g.coeff(0));
        return;
    }
    const Field& field = g.field();
    const std::uint64_t p = field.characteristic();
    for (int attempt = 0; attempt < kSplitRetryBudget; ++attempt) {
        const UniPoly a = random_poly_below(field, g.degree(), rng);
        if (a.degree() < 1) continue;
        // a^((q-1)/2) = (a^(1 + p + ... + p^(d-1)))^((p-1)/2) with q = p^d.
        UniPoly conj = a;
        UniPoly norm = a;
        for (int i = 1; i < field.degree(); ++i) {
            conj = powmod(conj, p, g);
            norm = mulmod(norm, conj, g);
        }
        const UniPoly b = powmod(norm, (p - 1) / 2, g);
        const UniPoly h = gcd(b - UniPoly::constant(field.one()), g);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            split_linear(h, rng, out);
            split_linear(exact_div(g, h), rng, out);
            return;
        }
    }
    throw InternalFactorFailure("equal-degree splitting exhausted its retry budget");
}

/// Degrees of the irreducible factors of f (with repetition). f must be monic.
std::vector<int> distinct_degree_profile(const UniPoly& f) {
    std::vector<int> degrees;
    if (f.degree() <= 0) return degrees;
    const UniPoly x = UniPoly::identity(f.field());
    UniPoly current = f;
    UniPoly h = pow_field_size(x, f);  // x^(q^i) mod f, i = 1
    for (int i = 1; current.degree() > 0; ++i) {
        if (2 * i > current.degree()) {
            degrees.push_back(current.degree());
            break;
        }
        while (true) {
            const UniPoly g = gcd((h % current) - x, current);
            if (g.degree() <= 0) break;
            for (int k = 0; k < g.degree() / i; ++k) degrees.push_back(i);
            current = exact_div(current, g);
            if (current.degree() <= 0) break;
        }
        h = pow_field_size(h, f);
    }
    std::sort(degrees.begin(), degrees.end());
    return degrees;
}

}  // namespace

RootSet roots(const UniPoly& a, Rng& rng) {
    if (a.is_zero()) throw InvalidInput("roots of the zero polynomial");
    RootSet out;
    if (a.degree() == 0) return out;
    const Field& field = a.field();
    const UniPoly f = a.monic();
    const UniPoly x = UniPoly::identity(field);

    std::vector<Fe> distinct;
    if (f.degree() == 1) {
        distinct.push_back(-f.coeff(0));
    } else {
        const UniPoly linear_part = gcd(pow_field_size(x, f) - x, f);
        split_linear(linear_part, rng, distinct);
    }
    std::sort(distinct.begin(), distinct.end());

    UniPoly rest = f;
    for (const auto& r : distinct) {
        const UniPoly factor(field, {-r, field.one()});
        int mult = 0;
        while (true) {
            auto [q, rem] = divmod(rest, factor);
            if (!rem.is_zero()) break;
            rest = std::move(q);
            ++mult;
        }
        out.roots.emplace_back(r, mult);
    }
    out.remaining_degrees = distinct_degree_profile(rest.monic());
    return out;
}

RootSet roots(const UniPoly& a) {
    Rng rng(0x6e736a6163ULL ^ static_cast<std::uint64_t>(a.degree()));
    return roots(a, rng);
}

bool is_irreducible(const UniPoly& a) {
    if (a.degree() < 1) return false;
    if (a.degree() == 1) return true;
    const UniPoly f = a.monic();
    const UniPoly x = UniPoly::identity(f.field());
    const int n = f.degree();
    std::vector<UniPoly> powers{x % f};
    for (int i = 1; i <= n; ++i) powers.push_back(pow_field_size(powers.back(), f));
    if (powers[static_cast<std::size_t>(n)] != x % f) return false;
    int rest = n;
    for (int l = 2; l <= rest; ++l) {
        if (rest % l != 0) continue;
        while (rest % l == 0) rest /= l;
        if (gcd(powers[static_cast<std::size_t>(n / l)] - x, f).degree() > 0) return false;
    }
    return true;
}

UniPoly irreducible_of_degree(const Field& prime_field, int d, std::uint64_t seed) {
    if (!prime_field.is_prime_field()) throw InvalidInput("irreducible_of_degree needs a prime field");
    if (d < 2) throw InvalidInput("irreducible_of_degree needs d >= 2");
    Rng rng(seed);
    while (true) {
        std::vector<Fe> v;
        for (int i = 0; i < d; ++i) v.push_back(prime_field.random(rng));
        v.push_back(prime_field.one());
        if (v[0].is_zero()) continue;
        UniPoly candidate(prime_field, std::move(v));
        if (is_irreducible(candidate)) return candidate;
    }
}

}  // namespace nsjac
