#include "nsjac/field.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>

namespace nsjac {

namespace detail {

struct FieldData {
    std::uint64_t p = 0;
    int d = 1;
    /// Monic modulus, size d + 1; empty for the prime field.
    std::vector<std::uint64_t> modulus;
};

}  // namespace detail

namespace {

using u64 = std::uint64_t;
using u128 = unsigned __int128;
using UPoly = std::vector<u64>;

constexpr u64 kMaxPrime = u64{1} << 62;

u64 add_mod(u64 a, u64 b, u64 p) {
    const u64 s = a + b;
    return s >= p ? s - p : s;
}

u64 sub_mod(u64 a, u64 b, u64 p) { return a >= b ? a - b : a + p - b; }

u64 mul_mod(u64 a, u64 b, u64 p) { return static_cast<u64>(static_cast<u128>(a) * b % p); }

u64 pow_mod(u64 a, u64 e, u64 p) {
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul_mod(r, a, p);
        a = mul_mod(a, a, p);
        e >>= 1;
    }
    return r;
}

u64 inv_mod(u64 a, u64 p) {
    if (a == 0) throw DivisionByZero("inverse of zero");
    return pow_mod(a, p - 2, p);
}

void trim(UPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

int deg(const UPoly& a) { return static_cast<int>(a.size()) - 1; }

UPoly poly_sub(UPoly a, const UPoly& b, u64 p) {
    if (a.size() < b.size()) a.resize(b.size(), 0);
    for (std::size_t i = 0; i < b.size(); ++i) a[i] = sub_mod(a[i], b[i], p);
    trim(a);
    return a;
}

UPoly poly_mul(const UPoly& a, const UPoly& b, u64 p) {
    if (a.empty() || b.empty()) return {};
    UPoly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add_mod(r[i + j], mul_mod(a[i], b[j], p), p);
    }
    trim(r);
    return r;
}

/// Returns (quotient, remainder); b must be nonzero.
std::pair<UPoly, UPoly> poly_divmod(UPoly a, const UPoly& b, u64 p) {
    trim(a);
    if (deg(a) < deg(b)) return {{}, a};
    const u64 lead_inv = inv_mod(b.back(), p);
    UPoly q(a.size() - b.size() + 1, 0);
    for (int i = deg(a); i >= deg(b); --i) {
        const u64 c = mul_mod(a[static_cast<std::size_t>(i)], lead_inv, p);
        q[static_cast<std::size_t>(i - deg(b))] = c;
        if (c == 0) continue;
        for (int j = 0; j <= deg(b); ++j) {
            auto& slot = a[static_cast<std::size_t>(i - deg(b) + j)];
            slot = sub_mod(slot, mul_mod(c, b[static_cast<std::size_t>(j)], p), p);
        }
    }
    trim(q);
    trim(a);
    return {q, a};
}

UPoly poly_mulmod(const UPoly& a, const UPoly& b, const UPoly& m, u64 p) {
    return poly_divmod(poly_mul(a, b, p), m, p).second;
}

UPoly poly_powmod(UPoly base, u64 e, const UPoly& m, u64 p) {
    UPoly r{1};
    base = poly_divmod(base, m, p).second;
    while (e) {
        if (e & 1) r = poly_mulmod(r, base, m, p);
        base = poly_mulmod(base, base, m, p);
        e >>= 1;
    }
    return r;
}

UPoly poly_gcd(UPoly a, UPoly b, u64 p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        auto r = poly_divmod(a, b, p).second;
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

/// Rabin's test: t^(p^d) = t mod m and gcd(t^(p^(d/l)) - t, m) = 1 for primes l | d.
bool modulus_irreducible(const UPoly& m, u64 p) {
    const int d = deg(m);
    std::vector<UPoly> frob(static_cast<std::size_t>(d) + 1);
    frob[0] = UPoly{0, 1};
    for (int i = 1; i <= d; ++i) frob[static_cast<std::size_t>(i)] = poly_powmod(frob[static_cast<std::size_t>(i) - 1], p, m, p);
    const UPoly t{0, 1};
    if (poly_sub(frob[static_cast<std::size_t>(d)], t, p) != UPoly{}) return false;
    int rest = d;
    for (int l = 2; l <= rest; ++l) {
        if (rest % l != 0) continue;
        while (rest % l == 0) rest /= l;
        auto g = poly_gcd(poly_sub(frob[static_cast<std::size_t>(d / l)], t, p), m, p);
        if (deg(g) > 0) return false;
    }
    return true;
}

bool same_context(const detail::FieldData* a, const detail::FieldData* b) {
    if (a == b) return true;
    if (!a || !b) return false;
    return a->p == b->p && a->modulus == b->modulus;
}

}  // namespace

bool is_prime_u64(std::uint64_t n) {
    if (n < 2) return false;
    for (u64 small : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % small == 0) return n == small;
    }
    u64 d = n - 1;
    int r = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++r;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = pow_mod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int i = 1; i < r; ++i) {
            x = mul_mod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

// ---------------------------------------------------------------- Field

Field::Field(const FieldSpec& spec) {
    if (spec.p < 3 || spec.p >= kMaxPrime || !is_prime_u64(spec.p)) {
        throw NotPrime("p = " + std::to_string(spec.p) + " is not an odd prime below 2^62");
    }
    auto data = std::make_shared<detail::FieldData>();
    data->p = spec.p;
    if (spec.ext_modulus) {
        UPoly m = *spec.ext_modulus;
        if (m.size() < 3 || m.size() > static_cast<std::size_t>(kMaxExtensionDegree) + 1) {
            throw InvalidInput("extension modulus degree must be in [2, " + std::to_string(kMaxExtensionDegree) + "]");
        }
        if (m.back() != 1) throw InvalidInput("extension modulus must be monic");
        for (u64 c : m) {
            if (c >= spec.p) throw InvalidInput("modulus coefficient " + std::to_string(c) + " not reduced mod p");
        }
        if (!modulus_irreducible(m, spec.p)) throw ReducibleModulus("modulus is reducible over F_" + std::to_string(spec.p));
        data->d = deg(m);
        data->modulus = std::move(m);
    }
    data_ = std::move(data);
}

Field Field::prime(std::uint64_t p) { return Field(FieldSpec{p, std::nullopt}); }

Field Field::extension(std::uint64_t p, std::vector<std::uint64_t> modulus) {
    return Field(FieldSpec{p, std::move(modulus)});
}

std::uint64_t Field::characteristic() const { return data_->p; }
int Field::degree() const { return data_->d; }
bool Field::is_prime_field() const { return data_->d == 1; }
const std::vector<std::uint64_t>& Field::modulus() const { return data_->modulus; }

FieldSpec Field::spec() const {
    FieldSpec s{data_->p, std::nullopt};
    if (data_->d > 1) s.ext_modulus = data_->modulus;
    return s;
}

std::optional<std::uint64_t> Field::size() const {
    u128 acc = 1;
    for (int i = 0; i < data_->d; ++i) {
        acc *= data_->p;
        if (acc > static_cast<u128>(UINT64_MAX)) return std::nullopt;
    }
    return static_cast<u64>(acc);
}

std::string Field::size_string() const {
    if (auto s = size()) return std::to_string(*s);
    return std::to_string(data_->p) + "^" + std::to_string(data_->d);
}

bool Field::has_more_than(std::uint64_t count) const {
    auto s = size();
    return !s || *s > count;
}

bool Field::operator==(const Field& other) const { return same_context(data_.get(), other.data_.get()); }

std::string Field::describe() const {
    std::ostringstream os;
    os << "F_" << data_->p;
    if (data_->d > 1) {
        os << "^" << data_->d << " mod [";
        for (std::size_t i = 0; i < data_->modulus.size(); ++i) os << (i ? "," : "") << data_->modulus[i];
        os << "]";
    }
    return os.str();
}

Fe Field::zero() const {
    Fe r;
    r.ctx_ = data_;
    return r;
}

Fe Field::one() const { return from_u64(1); }

Fe Field::from_u64(std::uint64_t v) const {
    Fe r = zero();
    r.c_[0] = v % data_->p;
    return r;
}

Fe Field::from_int(std::int64_t v) const {
    const auto p = static_cast<std::int64_t>(data_->p);
    std::int64_t m = v % p;
    if (m < 0) m += p;
    return from_u64(static_cast<u64>(m));
}

Fe Field::from_coeffs(const std::vector<std::uint64_t>& coeffs) const {
    if (coeffs.size() > static_cast<std::size_t>(data_->d)) throw InvalidInput("too many coefficients for " + describe());
    Fe r = zero();
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i] >= data_->p) throw InvalidInput("coefficient " + std::to_string(coeffs[i]) + " not reduced mod p");
        r.c_[i] = coeffs[i];
    }
    return r;
}

Fe Field::from_index(std::uint64_t index) const {
    if (auto s = size(); s && index >= *s) throw InvalidInput("index out of range for " + describe());
    Fe r = zero();
    for (int i = 0; i < data_->d && index; ++i) {
        r.c_[static_cast<std::size_t>(i)] = index % data_->p;
        index /= data_->p;
    }
    return r;
}

Fe Field::generator() const {
    if (data_->d < 2) throw InvalidInput("prime field has no extension generator");
    Fe r = zero();
    r.c_[1] = 1;
    return r;
}

Fe Field::random(Rng& rng) const {
    std::uniform_int_distribution<u64> dist(0, data_->p - 1);
    Fe r = zero();
    for (int i = 0; i < data_->d; ++i) r.c_[static_cast<std::size_t>(i)] = dist(rng);
    return r;
}

Fe Field::parse(std::string_view text) const {
    auto strip = [](std::string_view s) {
        while (!s.empty() && (s.front() == ' ' || s.front() == '\t' || s.front() == '\r')) s.remove_prefix(1);
        while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
        return s;
    };
    std::vector<u64> coeffs;
    std::size_t start = 0;
    while (true) {
        const auto comma = text.find(',', start);
        auto token = strip(text.substr(start, comma == std::string_view::npos ? std::string_view::npos : comma - start));
        if (token.empty()) throw InvalidInput("empty field element component");
        u64 value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
        if (ec != std::errc() || ptr != token.data() + token.size()) {
            throw InvalidInput("malformed field element '" + std::string(text) + "'");
        }
        coeffs.push_back(value);
        if (comma == std::string_view::npos) break;
        start = comma + 1;
    }
    return from_coeffs(coeffs);
}

// ---------------------------------------------------------------- Fe

Field Fe::field() const {
    if (!ctx_) throw FieldMismatch("unbound field element");
    return Field(ctx_);
}

void Fe::check_same(const Fe& o) const {
    if (!same_context(ctx_.get(), o.ctx_.get())) throw FieldMismatch("operands live in different fields");
}

std::vector<std::uint64_t> Fe::coeffs() const {
    return {c_.begin(), c_.begin() + (ctx_ ? ctx_->d : 1)};
}

bool Fe::is_zero() const {
    return std::all_of(c_.begin(), c_.end(), [](u64 v) { return v == 0; });
}

bool Fe::is_one() const {
    return c_[0] == 1 && std::all_of(c_.begin() + 1, c_.end(), [](u64 v) { return v == 0; });
}

bool Fe::in_prime_field() const {
    return std::all_of(c_.begin() + 1, c_.end(), [](u64 v) { return v == 0; });
}

Fe Fe::operator+(const Fe& o) const {
    check_same(o);
    Fe r = *this;
    const u64 p = ctx_->p;
    for (int i = 0; i < ctx_->d; ++i) r.c_[static_cast<std::size_t>(i)] = add_mod(c_[static_cast<std::size_t>(i)], o.c_[static_cast<std::size_t>(i)], p);
    return r;
}

Fe Fe::operator-(const Fe& o) const {
    check_same(o);
    Fe r = *this;
    const u64 p = ctx_->p;
    for (int i = 0; i < ctx_->d; ++i) r.c_[static_cast<std::size_t>(i)] = sub_mod(c_[static_cast<std::size_t>(i)], o.c_[static_cast<std::size_t>(i)], p);
    return r;
}

Fe Fe::operator-() const {
    if (!ctx_) throw FieldMismatch("unbound field element");
    Fe r = *this;
    for (int i = 0; i < ctx_->d; ++i) r.c_[static_cast<std::size_t>(i)] = sub_mod(0, c_[static_cast<std::size_t>(i)], ctx_->p);
    return r;
}

Fe Fe::operator*(const Fe& o) const {
    check_same(o);
    const u64 p = ctx_->p;
    const int d = ctx_->d;
    Fe r = *this;
    if (d == 1) {
        r.c_[0] = mul_mod(c_[0], o.c_[0], p);
        return r;
    }
    // p < 2^62 and d <= 12: each accumulator holds at most 12 products below 2^124.
    std::array<u128, 2 * kMaxExtensionDegree - 1> acc{};
    for (int i = 0; i < d; ++i) {
        if (c_[static_cast<std::size_t>(i)] == 0) continue;
        for (int j = 0; j < d; ++j) {
            acc[static_cast<std::size_t>(i + j)] += static_cast<u128>(c_[static_cast<std::size_t>(i)]) * o.c_[static_cast<std::size_t>(j)];
        }
    }
    std::array<u64, 2 * kMaxExtensionDegree - 1> red{};
    for (int i = 0; i < 2 * d - 1; ++i) red[static_cast<std::size_t>(i)] = static_cast<u64>(acc[static_cast<std::size_t>(i)] % p);
    const auto& m = ctx_->modulus;
    for (int i = 2 * d - 2; i >= d; --i) {
        const u64 c = red[static_cast<std::size_t>(i)];
        if (c == 0) continue;
        for (int j = 0; j < d; ++j) {
            auto& slot = red[static_cast<std::size_t>(i - d + j)];
            slot = sub_mod(slot, mul_mod(c, m[static_cast<std::size_t>(j)], p), p);
        }
    }
    for (int i = 0; i < d; ++i) r.c_[static_cast<std::size_t>(i)] = red[static_cast<std::size_t>(i)];
    return r;
}

Fe Fe::inverse() const {
    if (!ctx_) throw FieldMismatch("unbound field element");
    if (is_zero()) throw DivisionByZero("inverse of zero in " + field().describe());
    const u64 p = ctx_->p;
    Fe r = *this;
    if (ctx_->d == 1) {
        r.c_[0] = inv_mod(c_[0], p);
        return r;
    }
    // Extended Euclid in F_p[t]: track s with s*a = r (mod m).
    UPoly r0 = ctx_->modulus;
    UPoly r1(c_.begin(), c_.begin() + ctx_->d);
    trim(r1);
    UPoly s0{}, s1{1};
    while (deg(r1) > 0) {
        auto [q, rem] = poly_divmod(r0, r1, p);
        UPoly s2 = poly_sub(s0, poly_mul(q, s1, p), p);
        r0 = std::move(r1);
        r1 = std::move(rem);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    const u64 scale = inv_mod(r1[0], p);
    r.c_.fill(0);
    for (std::size_t i = 0; i < s1.size(); ++i) r.c_[i] = mul_mod(s1[i], scale, p);
    return r;
}

Fe Fe::operator/(const Fe& o) const {
    check_same(o);
    return *this * o.inverse();
}

Fe Fe::pow(std::uint64_t e) const {
    Fe base = *this;
    Fe r = field().one();
    while (e) {
        if (e & 1) r *= base;
        base *= base;
        e >>= 1;
    }
    return r;
}

Fe Fe::frobenius() const {
    if (!ctx_) throw FieldMismatch("unbound field element");
    if (ctx_->d == 1) return *this;
    return pow(ctx_->p);
}

bool Fe::operator==(const Fe& o) const {
    check_same(o);
    return c_ == o.c_;
}

std::strong_ordering Fe::operator<=>(const Fe& o) const {
    check_same(o);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] != o.c_[i]) return c_[i] < o.c_[i] ? std::strong_ordering::less : std::strong_ordering::greater;
    }
    return std::strong_ordering::equal;
}

std::string Fe::to_string() const {
    if (!ctx_) return "<unbound>";
    if (ctx_->d == 1) return std::to_string(c_[0]);
    std::string out;
    for (int i = 0; i < ctx_->d; ++i) {
        if (i) out += ',';
        out += std::to_string(c_[static_cast<std::size_t>(i)]);
    }
    return out;
}

Fe embed_prime(const Fe& a, const Field& target) {
    const Field source = a.field();
    if (source == target) return a;
    if (!source.is_prime_field() || source.characteristic() != target.characteristic()) {
        throw FieldMismatch("cannot embed " + source.describe() + " into " + target.describe());
    }
    return target.from_u64(a.coeff(0));
}

Fe random_element(const Field& field, std::uint64_t seed) {
    Rng rng(seed);
    return field.random(rng);
}

const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::NotPrime: return "NotPrime";
        case ErrorKind::ReducibleModulus: return "ReducibleModulus";
        case ErrorKind::InvalidInput: return "InvalidInput";
        case ErrorKind::DivisionByZero: return "DivisionByZero";
        case ErrorKind::FieldMismatch: return "FieldMismatch";
        case ErrorKind::BadDegrees: return "BadDegrees";
        case ErrorKind::NotCoprime: return "NotCoprime";
        case ErrorKind::BadCharacteristic: return "BadCharacteristic";
        case ErrorKind::NoRationalPoint: return "NoRationalPoint";
        case ErrorKind::SingularPoint: return "SingularPoint";
        case ErrorKind::PointNotOnCurve: return "PointNotOnCurve";
        case ErrorKind::SpecialDivisor: return "SpecialDivisor";
        case ErrorKind::NonSplitResult: return "NonSplitResult";
        case ErrorKind::NotSemiReduced: return "NotSemiReduced";
        case ErrorKind::InternalFactorFailure: return "InternalFactorFailure";
        case ErrorKind::Internal: return "Internal";
    }
    return "Unknown";
}

}  // namespace nsjac
