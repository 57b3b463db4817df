#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace supercohom {

using Rational = mpq_class;

/// Ground field: Q, or the cyclotomic extension Q(zeta_m).
struct FieldSpec {
    enum class Kind : std::uint8_t { Rational, Cyclotomic };

    Kind kind = Kind::Rational;
    unsigned conductor = 1;

    static FieldSpec rational() { return {}; }
    static FieldSpec cyclotomic(unsigned m);

    bool is_rational() const { return kind == Kind::Rational; }
    /// Degree of the field over Q, i.e. phi(conductor).
    std::size_t degree() const;
    std::string to_string() const;

    bool operator==(const FieldSpec&) const = default;
};

/// Dense rational polynomial, coefficient k multiplies x^k. Trailing zeros are trimmed.
using RationalPoly = std::vector<Rational>;

/// The m-th cyclotomic polynomial, by exact division of x^m - 1 by Phi_d for proper divisors d.
RationalPoly cyclotomic_poly(unsigned m);

/// Exact element of a FieldSpec.
///
/// Stored as the coefficient vector of a polynomial in zeta reduced modulo Phi_m. The vector is
/// trimmed, so zero is the empty vector and costs no allocation.
class Scalar {
public:
    Scalar() = default;
    explicit Scalar(FieldSpec field) : field_(field) {}
    Scalar(FieldSpec field, Rational value);
    Scalar(FieldSpec field, long value) : Scalar(field, Rational(value)) {}

    /// Builds from an arbitrary-length polynomial in zeta, reducing it into canonical form.
    static Scalar from_polynomial(FieldSpec field, RationalPoly coefficients);
    static Scalar zero(FieldSpec field) { return Scalar(field); }
    static Scalar one(FieldSpec field) { return Scalar(field, 1L); }

    const FieldSpec& field() const { return field_; }
    const RationalPoly& coefficients() const { return coeffs_; }
    Rational coefficient(std::size_t power) const;

    bool is_zero() const { return coeffs_.empty(); }
    bool is_one() const;
    /// The value when it lies in Q, nullopt otherwise.
    std::optional<Rational> as_rational() const;

    Scalar inverse() const;

    Scalar operator-() const;
    Scalar& operator+=(const Scalar& other);
    Scalar& operator-=(const Scalar& other);
    Scalar& operator*=(const Scalar& other);
    Scalar& operator/=(const Scalar& other);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

    /// Multiplies by a rational without a field check.
    Scalar scaled(const Rational& factor) const;
    /// Multiplies by +1 or -1.
    Scalar signed_by(int sign) const { return sign < 0 ? -*this : *this; }

    bool operator==(const Scalar& other) const;
    bool operator!=(const Scalar& other) const { return !(*this == other); }

    /// Canonical text: "p/q" for rationals, "c0 + c1*z + ..." in a cyclotomic field.
    std::string to_string() const;
    static Scalar parse(std::string_view text, FieldSpec field);

private:
    void check_same_field(const Scalar& other) const;
    void trim();

    FieldSpec field_{};
    RationalPoly coeffs_;
};

enum class ArithOp { Add, Sub, Mul, Div };

Scalar arith(const Scalar& a, const Scalar& b, ArithOp op);

/// zeta_m^k with k reduced mod m. A rational FieldSpec only accepts k = 0.
Scalar root_of_unity(FieldSpec field, long k);

std::ostream& operator<<(std::ostream& os, const Scalar& s);

std::string rational_to_string(const Rational& q);

} // namespace supercohom
