#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <map>
#include <stdexcept>

namespace qrook {

/// Arbitrary-precision integer and rational scalars used throughout the
/// library.  Every statistic computed here is exact; no floating point
/// appears anywhere.
using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

/// x^e for integer e (negative allowed when x != 0).
Rat rat_pow(const Rat& x, int e);

/// A Laurent polynomial in a single variable q with Int coefficients.
///
/// The representation is sparse: a map from exponent to coefficient that
/// never stores a zero coefficient.  This gives a normal form, so
/// operator== is structural equality of values.  Exponents may be
/// negative; `is_polynomial()` tells whether the value is an ordinary
/// polynomial.
class LaurentPoly {
public:
    /// The zero polynomial.
    LaurentPoly() = default;
    LaurentPoly(long value) : LaurentPoly(Int(value)) {}
    LaurentPoly(Int value);

    /// The variable q itself.
    static LaurentPoly q() { return monomial(1, 1); }
    /// coeff * q^exp
    static LaurentPoly monomial(Int coeff, int exp);

    bool is_zero() const { return terms_.empty(); }
    bool is_polynomial() const;            ///< no negative exponents
    bool has_nonnegative_coeffs() const;

    /// Smallest exponent carrying a nonzero coefficient.
    /// \throws std::domain_error on the zero polynomial.
    int min_exp() const;
    /// Largest exponent carrying a nonzero coefficient.
    /// \throws std::domain_error on the zero polynomial.
    int max_exp() const;

    /// Coefficient of q^exp (zero when absent).
    Int coeff(int exp) const;
    const std::map<int, Int>& terms() const { return terms_; }

    LaurentPoly operator-() const;
    LaurentPoly& operator+=(const LaurentPoly& o);
    LaurentPoly& operator-=(const LaurentPoly& o);
    LaurentPoly& operator*=(const LaurentPoly& o);

    friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
    friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
    friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);

    /// The product q^k * this.
    LaurentPoly shifted(int k) const;
    /// The substitution q -> q^{-1}.
    LaurentPoly inverted() const;

    /// Exact evaluation at a rational point.  Negative exponents require
    /// x != 0 (std::domain_error otherwise).
    Rat evaluate(const Rat& x) const;

    bool operator==(const LaurentPoly&) const = default;

private:
    std::map<int, Int> terms_;
};

/// Exact division a / b.
/// \throws std::domain_error when b is zero.
/// \throws std::logic_error when the division leaves a remainder; callers
///         use this for quantities that are divisible by construction, so
///         a remainder indicates an internal arithmetic error.
LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b);

/// a^e for e >= 0 (std::invalid_argument otherwise).
LaurentPoly pow(const LaurentPoly& a, int e);

} // namespace qrook
