#pragma once

// Exact commutative rings with unit: arbitrary-precision integers and
// univariate polynomials with integer coefficients, unified behind
// RingElement. Formula code only ever talks to RingElement, so a new ring
// is added by extending the variant here.

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "bandet/errors.hpp"

namespace bandet {

using Integer = boost::multiprecision::cpp_int;

/// Dense polynomial in one variable (printed as `b`). Coefficient i belongs
/// to b^i. Trailing zeros are always stripped, so the zero polynomial has
/// no coefficients and equality is plain vector equality.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Integer> coeffs);

    static Poly constant(Integer c);
    /// The polynomial `b`.
    static Poly variable();

    const std::vector<Integer>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    /// -1 for the zero polynomial.
    std::int64_t degree() const noexcept { return static_cast<std::int64_t>(coeffs_.size()) - 1; }
    /// Coefficient of b^k; zero past the degree.
    Integer coeff(std::size_t k) const;
    Integer evaluate(const Integer& at) const;

    std::string to_string() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& rhs);
    Poly& operator-=(const Poly& rhs);
    Poly& operator*=(const Integer& s);

    friend Poly operator+(Poly lhs, const Poly& rhs) { return lhs += rhs; }
    friend Poly operator-(Poly lhs, const Poly& rhs) { return lhs -= rhs; }
    friend Poly operator*(const Poly& lhs, const Poly& rhs);
    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim();

    std::vector<Integer> coeffs_;
};

/// An element of one of the supported rings. Arithmetic between elements
/// of different rings throws MixedRingError.
class RingElement {
public:
    enum class Kind { integer, polynomial };

    RingElement() : value_(Integer(0)) {}
    RingElement(Integer v) : value_(std::move(v)) {}  // NOLINT(google-explicit-constructor)
    RingElement(Poly v) : value_(std::move(v)) {}     // NOLINT(google-explicit-constructor)
    template <std::integral T>
    RingElement(T v) : value_(Integer(v)) {}  // NOLINT(google-explicit-constructor)

    Kind kind() const noexcept { return static_cast<Kind>(value_.index()); }
    bool same_ring(const RingElement& other) const noexcept { return value_.index() == other.value_.index(); }
    bool is_integer() const noexcept { return kind() == Kind::integer; }
    bool is_poly() const noexcept { return kind() == Kind::polynomial; }

    const Integer& as_integer() const;
    const Poly& as_poly() const;

    /// Additive and multiplicative identities of this element's ring.
    RingElement zero() const;
    RingElement one() const;
    bool is_zero() const noexcept;

    std::string to_string() const;

    RingElement operator-() const;
    RingElement& operator+=(const RingElement& rhs);
    RingElement& operator-=(const RingElement& rhs);
    RingElement& operator*=(const RingElement& rhs);

    friend RingElement operator+(RingElement lhs, const RingElement& rhs) { return lhs += rhs; }
    friend RingElement operator-(RingElement lhs, const RingElement& rhs) { return lhs -= rhs; }
    friend RingElement operator*(RingElement lhs, const RingElement& rhs) { return lhs *= rhs; }
    friend bool operator==(const RingElement&, const RingElement&) = default;

private:
    std::variant<Integer, Poly> value_;
};

const char* ring_name(RingElement::Kind kind) noexcept;

std::ostream& operator<<(std::ostream& os, const Poly& p);
std::ostream& operator<<(std::ostream& os, const RingElement& x);

RingElement add(const RingElement& x, const RingElement& y);
RingElement mul(const RingElement& x, const RingElement& y);
/// x^e by repeated squaring; x^0 is the unit of x's ring.
RingElement pow(const RingElement& x, std::uint64_t e);
/// The s-fold sum of x (negative s negates).
RingElement scalar_mul(const Integer& s, const RingElement& x);
Integer coeff(const Poly& p, std::size_t k);

/// Ring homomorphism Z[b] -> Z sending b to `at`; identity on integers.
RingElement evaluate(const RingElement& x, const Integer& at);

/// (-1)^e as an Integer.
inline Integer sign_power(std::uint64_t e) { return (e % 2 == 0) ? Integer(1) : Integer(-1); }

}  // namespace bandet
