#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "nsjac/errors.hpp"

namespace nsjac {

using Rng = std::mt19937_64;

/// Largest supported extension degree d of F_{p^d}.
inline constexpr int kMaxExtensionDegree = 12;

struct FieldSpec {
    std::uint64_t p = 0;
    /// Little-endian coefficients of a monic irreducible m(t), leading 1 included.
    std::optional<std::vector<std::uint64_t>> ext_modulus;
};

namespace detail {
struct FieldData;
}

class Fe;

/// Handle to F_p or F_p[t]/m(t). Copies share the same immutable context.
class Field {
public:
    /// Validates primality of p and irreducibility of the modulus.
    explicit Field(const FieldSpec& spec);

    static Field prime(std::uint64_t p);
    static Field extension(std::uint64_t p, std::vector<std::uint64_t> modulus);

    std::uint64_t characteristic() const;
    int degree() const;
    bool is_prime_field() const;
    /// Empty for the prime field.
    const std::vector<std::uint64_t>& modulus() const;
    FieldSpec spec() const;

    /// p^d, or nullopt if it does not fit in 64 bits.
    std::optional<std::uint64_t> size() const;
    std::string size_string() const;
    /// True if the field has strictly more than `count` elements.
    bool has_more_than(std::uint64_t count) const;

    Fe zero() const;
    Fe one() const;
    Fe from_int(std::int64_t v) const;
    Fe from_u64(std::uint64_t v) const;
    /// Little-endian coefficients in t, each already reduced mod p.
    Fe from_coeffs(const std::vector<std::uint64_t>& coeffs) const;
    /// Bijection {0, ..., size-1} -> field via base-p digits.
    Fe from_index(std::uint64_t index) const;
    /// The class of t in F_p[t]/m(t) (throws for the prime field).
    Fe generator() const;

    Fe random(Rng& rng) const;
    Fe parse(std::string_view text) const;

    bool operator==(const Field& other) const;
    bool operator!=(const Field& other) const { return !(*this == other); }

    std::string describe() const;

private:
    friend class Fe;
    explicit Field(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}

    std::shared_ptr<const detail::FieldData> data_;
};

/// Element of a Field. Canonical: every coefficient is fully reduced, so
/// equality is coefficientwise.
class Fe {
public:
    /// Unbound placeholder; only assignment and destruction are valid.
    Fe() = default;

    Field field() const;
    bool bound() const { return static_cast<bool>(ctx_); }

    std::uint64_t coeff(int i) const { return c_[static_cast<std::size_t>(i)]; }
    std::vector<std::uint64_t> coeffs() const;
    bool is_zero() const;
    bool is_one() const;
    /// True if the element lies in the prime subfield.
    bool in_prime_field() const;

    Fe operator+(const Fe& o) const;
    Fe operator-(const Fe& o) const;
    Fe operator*(const Fe& o) const;
    Fe operator/(const Fe& o) const;
    Fe operator-() const;
    Fe& operator+=(const Fe& o) { return *this = *this + o; }
    Fe& operator-=(const Fe& o) { return *this = *this - o; }
    Fe& operator*=(const Fe& o) { return *this = *this * o; }
    Fe& operator/=(const Fe& o) { return *this = *this / o; }

    Fe inverse() const;
    Fe pow(std::uint64_t e) const;
    /// x -> x^p.
    Fe frobenius() const;

    bool operator==(const Fe& o) const;
    bool operator!=(const Fe& o) const { return !(*this == o); }
    /// Orders by the coefficient tuple (c0, c1, ...); used for canonical sorting.
    std::strong_ordering operator<=>(const Fe& o) const;

    std::string to_string() const;

private:
    friend class Field;
    friend Fe embed_prime(const Fe& a, const Field& target);

    void check_same(const Fe& o) const;

    std::shared_ptr<const detail::FieldData> ctx_;
    std::array<std::uint64_t, kMaxExtensionDegree> c_{};
};

/// Canonical inclusion F_p -> F_{p^d}.
Fe embed_prime(const Fe& a, const Field& target);

/// Deterministic draw for a fixed seed.
Fe random_element(const Field& field, std::uint64_t seed);

/// Deterministic Miller-Rabin, valid for all 64-bit inputs.
bool is_prime_u64(std::uint64_t n);

}  // namespace nsjac
