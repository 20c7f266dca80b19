#pragma once

#include "qrook/laurent_poly.hpp"

namespace qrook {

/// An element of the field of rational functions in q, held as a reduced
/// fraction num/den of integer polynomials.
///
/// Canonical form: den is nonzero, gcd(num, den) = 1 in Z[q] (including
/// integer content), and den has a positive leading coefficient.  Reduced
/// fractions over Z[q] are unique up to sign, so the sign rule makes the
/// representation canonical and operator== decides equality of values.
///
/// Laurent polynomials embed via a power of q in the denominator, e.g.
/// q^{-2} is stored as 1 / q^2.
class RationalFn {
public:
    RationalFn() : RationalFn(LaurentPoly()) {}
    RationalFn(long value) : RationalFn(LaurentPoly(value)) {}
    RationalFn(Int value) : RationalFn(LaurentPoly(std::move(value))) {}
    RationalFn(const LaurentPoly& value) : RationalFn(value, LaurentPoly(1)) {}
    /// num / den.  \throws std::domain_error when den is zero.
    RationalFn(const LaurentPoly& num, const LaurentPoly& den);

    static RationalFn q() { return RationalFn(LaurentPoly::q()); }

    const LaurentPoly& num() const { return num_; }
    const LaurentPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }

    RationalFn operator-() const;
    RationalFn& operator+=(const RationalFn& o);
    RationalFn& operator-=(const RationalFn& o);
    RationalFn& operator*=(const RationalFn& o);
    RationalFn& operator/=(const RationalFn& o);

    friend RationalFn operator+(RationalFn a, const RationalFn& b) { return a += b; }
    friend RationalFn operator-(RationalFn a, const RationalFn& b) { return a -= b; }
    friend RationalFn operator*(RationalFn a, const RationalFn& b) { return a *= b; }
    friend RationalFn operator/(RationalFn a, const RationalFn& b) { return a /= b; }

    /// 1 / this.  \throws std::domain_error on zero.
    RationalFn reciprocal() const;
    /// The substitution q -> q^{-1}.
    RationalFn inverted() const;

    /// True when the value is an ordinary polynomial (den == 1).
    bool is_polynomial() const;
    /// True when the value is a Laurent polynomial (den a power of q).
    bool is_laurent() const;
    /// \throws std::domain_error when the value is not a Laurent polynomial.
    LaurentPoly to_laurent() const;

    /// Exact evaluation; \throws std::domain_error when den vanishes at x.
    Rat evaluate(const Rat& x) const;

    bool operator==(const RationalFn&) const = default;

private:
    LaurentPoly num_, den_;  // ordinary polynomials in canonical form
};

/// a^e for any integer e (negative e requires a != 0).
RationalFn pow(const RationalFn& a, int e);

/// GCD in Z[q] of two ordinary polynomials, including integer content;
/// result has positive leading coefficient.  gcd(0, 0) = 0.
LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b);

} // namespace qrook
