#pragma once

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include <gmpxx.h>

namespace incmat {

using BigInt = mpz_class;
using Rational = mpq_class;

/// Raised when a request is well-formed but mathematically refused
/// (e.g. a rank formula asked for outside its hypotheses, or a root of
/// unity that the host field cannot contain).
class RefusedError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

/**
 * Description of a computation field.
 *
 * characteristic 0 selects the rationals. Otherwise the field is
 * F_p[x]/(modulus) with modulus monic of the given degree, stored
 * low-order coefficient first (modulus.size() == degree + 1). Prime
 * fields keep an empty modulus.
 */
struct FieldSpec {
    std::uint32_t characteristic = 0;
    std::uint32_t degree = 1;
    std::vector<std::uint32_t> modulus;

    static FieldSpec rationals();
    static FieldSpec prime(std::uint32_t p);
    /// F_{p^t} with the default (lexicographically least) modulus.
    static FieldSpec extension(std::uint32_t p, std::uint32_t t);
    /// Finite field of the given prime-power order with the default modulus.
    static FieldSpec of_order(std::uint64_t q);
    /// Parses `q0`, `gf<p>` or `gf<p>^<t>`.
    static FieldSpec parse(std::string_view text);

    /// 0 for the rationals, p^degree otherwise.
    [[nodiscard]] std::uint64_t order() const;
    /// Inverse of parse(); extension fields with a non-default modulus
    /// additionally print the modulus in brackets.
    [[nodiscard]] std::string to_string() const;

    friend bool operator==(const FieldSpec&, const FieldSpec&) = default;
};

[[nodiscard]] bool is_prime(std::uint64_t n);

/// Decomposes q = p^t; throws std::invalid_argument if q is not a prime power.
struct PrimePower {
    std::uint32_t p;
    std::uint32_t t;
};
[[nodiscard]] PrimePower prime_power(std::uint64_t q);

/// True iff the monic polynomial (low-order first) has no factor of
/// degree 1..deg/2 over F_p. Exhaustive; meant for desk-scale degrees.
[[nodiscard]] bool is_irreducible(const std::vector<std::uint32_t>& monic, std::uint32_t p);

/// Least monic irreducible of degree t over F_p, ordering candidates by
/// the integer sum_{i<t} c_i p^i of their lower coefficients.
[[nodiscard]] std::vector<std::uint32_t> least_irreducible(std::uint32_t p, std::uint32_t t);

namespace detail {
struct FieldData;
}

class Field;

/**
 * Field element. Finite-field elements are stored as a code in [0, q):
 * the coefficient vector c_0 + c_1 x + ... read as the base-p integer
 * sum c_i p^i. Rationals are kept reduced with positive denominator.
 */
class Ffe {
public:
    Ffe() = default;

    [[nodiscard]] Field field() const;
    [[nodiscard]] bool is_zero() const;
    [[nodiscard]] bool is_one() const;

    /// Finite fields only.
    [[nodiscard]] std::uint32_t code() const;
    /// Characteristic zero only.
    [[nodiscard]] const Rational& rational() const;
    /// Coefficient vector (length = degree) of a finite-field element.
    [[nodiscard]] std::vector<std::uint32_t> coefficients() const;

    [[nodiscard]] std::string to_string() const;

    Ffe operator+(const Ffe& o) const;
    Ffe operator-(const Ffe& o) const;
    Ffe operator*(const Ffe& o) const;
    Ffe operator/(const Ffe& o) const;
    Ffe operator-() const;
    Ffe& operator+=(const Ffe& o) { return *this = *this + o; }
    Ffe& operator-=(const Ffe& o) { return *this = *this - o; }
    Ffe& operator*=(const Ffe& o) { return *this = *this * o; }
    [[nodiscard]] Ffe inv() const;
    [[nodiscard]] Ffe pow(std::uint64_t e) const;

    friend bool operator==(const Ffe& a, const Ffe& b);

private:
    friend class Field;
    Ffe(std::shared_ptr<const detail::FieldData> owner, std::uint32_t code);
    Ffe(std::shared_ptr<const detail::FieldData> owner, Rational value);

    std::shared_ptr<const detail::FieldData> owner_;
    std::variant<std::uint32_t, Rational> value_;
};

/**
 * Immutable, shareable field context. Copies share the same tables.
 *
 * Besides the Ffe interface, finite fields expose arithmetic on raw
 * element codes for the elimination kernels.
 */
class Field {
public:
    /// Validates the spec: characteristic 0 or prime, modulus monic and
    /// irreducible of the stated degree.
    explicit Field(const FieldSpec& spec);
    explicit Field(std::string_view text) : Field(FieldSpec::parse(text)) {}

    static Field rationals() { return Field(FieldSpec::rationals()); }
    static Field prime(std::uint32_t p) { return Field(FieldSpec::prime(p)); }
    static Field of_order(std::uint64_t q) { return Field(FieldSpec::of_order(q)); }

    [[nodiscard]] const FieldSpec& spec() const;
    [[nodiscard]] std::uint32_t characteristic() const { return spec().characteristic; }
    [[nodiscard]] std::uint32_t degree() const { return spec().degree; }
    /// Number of elements; 0 for the rationals.
    [[nodiscard]] std::uint64_t order() const;
    [[nodiscard]] bool is_rational() const { return characteristic() == 0; }
    [[nodiscard]] bool is_finite() const { return characteristic() != 0; }
    [[nodiscard]] bool is_prime_field() const { return is_finite() && degree() == 1; }
    [[nodiscard]] std::string to_string() const { return spec().to_string(); }

    [[nodiscard]] Ffe zero() const;
    [[nodiscard]] Ffe one() const;
    /// n * 1, reduced by the characteristic.
    [[nodiscard]] Ffe embed(long long n) const;
    [[nodiscard]] Ffe embed(const BigInt& n) const;
    [[nodiscard]] Ffe from_rational(const Rational& v) const;
    [[nodiscard]] Ffe from_code(std::uint32_t code) const;
    [[nodiscard]] Ffe from_coefficients(const std::vector<std::uint32_t>& coeffs) const;
    /// The class of x in F_p[x]/(modulus). Extension fields only.
    [[nodiscard]] Ffe generator() const;
    /// All elements in code order. Finite fields only.
    [[nodiscard]] std::vector<Ffe> elements() const;

    [[nodiscard]] std::string format(const Ffe& x) const;
    /// Parses the canonical value strings produced by format().
    [[nodiscard]] Ffe parse(std::string_view text) const;

    // Code-level arithmetic (finite fields only, no validation).
    [[nodiscard]] std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
    [[nodiscard]] std::uint32_t sub(std::uint32_t a, std::uint32_t b) const;
    [[nodiscard]] std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
    [[nodiscard]] std::uint32_t neg(std::uint32_t a) const;
    [[nodiscard]] std::uint32_t inv(std::uint32_t a) const;
    /// Reduction of an integer into a code of the prime subfield.
    [[nodiscard]] std::uint32_t code_of(long long n) const;

    /// Throws std::invalid_argument unless x belongs to this field.
    void check_owner(const Ffe& x) const;

    friend bool operator==(const Field& a, const Field& b);

private:
    friend class Ffe;
    explicit Field(std::shared_ptr<const detail::FieldData> data) : data_(std::move(data)) {}
    std::shared_ptr<const detail::FieldData> data_;
};

/// Equivalent to Field(spec); the name used throughout the docs.
inline Field make_field(const FieldSpec& spec) { return Field(spec); }

} // namespace incmat
