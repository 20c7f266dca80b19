#include "qrook/rational_fn.hpp"

#include <utility>

namespace qrook {

namespace {

Int content(const LaurentPoly& p) {
    Int g = 0;
    for (const auto& [e, c] : p.terms()) g = boost::multiprecision::gcd(g, c);
    return g < 0 ? Int(-g) : g;
}

LaurentPoly scale_down(const LaurentPoly& p, const Int& d) {
    LaurentPoly out;
    for (const auto& [e, c] : p.terms()) out += LaurentPoly::monomial(c / d, e);
    return out;
}

LaurentPoly primitive_part(const LaurentPoly& p) {
    if (p.is_zero()) return p;
    return scale_down(p, content(p));
}

Int leading(const LaurentPoly& p) { return p.coeff(p.max_exp()); }

// One fraction-free reduction pass: multiples of b are subtracted from
// lc(b)-rescalings of a until deg a < deg b.
LaurentPoly pseudo_rem(LaurentPoly a, const LaurentPoly& b) {
    const int db = b.max_exp();
    const Int lb = leading(b);
    while (!a.is_zero() && a.max_exp() >= db) {
        const int da = a.max_exp();
        const Int la = leading(a);
        LaurentPoly scaled;
        for (const auto& [e, c] : a.terms()) scaled += LaurentPoly::monomial(c * lb, e);
        a = scaled - b.shifted(da - db) * LaurentPoly(la);
    }
    return a;
}

} // namespace

LaurentPoly poly_gcd(const LaurentPoly& a, const LaurentPoly& b) {
    if (a.is_zero() && b.is_zero()) return {};
    if (a.is_zero()) return leading(b) < 0 ? -b : b;
    if (b.is_zero()) return leading(a) < 0 ? -a : a;

    const Int cont = boost::multiprecision::gcd(content(a), content(b));
    LaurentPoly x = primitive_part(a), y = primitive_part(b);
    if (x.max_exp() < y.max_exp()) std::swap(x, y);
    while (!y.is_zero()) {
        LaurentPoly r = primitive_part(pseudo_rem(x, y));
        x = std::move(y);
        y = std::move(r);
    }
    if (leading(x) < 0) x = -x;
    LaurentPoly out;
    for (const auto& [e, c] : x.terms()) out += LaurentPoly::monomial(c * cont, e);
    return out;
}

RationalFn::RationalFn(const LaurentPoly& num, const LaurentPoly& den) {
    if (den.is_zero()) throw std::domain_error("RationalFn: zero denominator");
    num_ = num;
    den_ = den;
    // Clear negative exponents by scaling both sides with a power of q.
    int shift = 0;
    if (!num_.is_zero()) shift = std::min(shift, num_.min_exp());
    shift = std::min(shift, den_.min_exp());
    if (shift < 0) {
        num_ = num_.shifted(-shift);
        den_ = den_.shifted(-shift);
    }
    if (num_.is_zero()) {
        den_ = LaurentPoly(1);
        return;
    }
    LaurentPoly g = poly_gcd(num_, den_);
    num_ = exact_div(num_, g);
    den_ = exact_div(den_, g);
    if (den_.coeff(den_.max_exp()) < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

RationalFn RationalFn::operator-() const {
    RationalFn out;
    out.num_ = -num_;
    out.den_ = den_;
    return out;
}

RationalFn& RationalFn::operator+=(const RationalFn& o) {
    *this = RationalFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    return *this;
}

RationalFn& RationalFn::operator-=(const RationalFn& o) {
    *this = RationalFn(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    return *this;
}

RationalFn& RationalFn::operator*=(const RationalFn& o) {
    *this = RationalFn(num_ * o.num_, den_ * o.den_);
    return *this;
}

RationalFn& RationalFn::operator/=(const RationalFn& o) {
    if (o.is_zero()) throw std::domain_error("RationalFn: division by zero");
    *this = RationalFn(num_ * o.den_, den_ * o.num_);
    return *this;
}

RationalFn RationalFn::reciprocal() const {
    if (is_zero()) throw std::domain_error("RationalFn: reciprocal of zero");
    return RationalFn(den_, num_);
}

RationalFn RationalFn::inverted() const {
    return RationalFn(num_.inverted(), den_.inverted());
}

bool RationalFn::is_polynomial() const { return den_ == LaurentPoly(1); }

bool RationalFn::is_laurent() const {
    return den_.terms().size() == 1 && leading(den_) == 1;
}

LaurentPoly RationalFn::to_laurent() const {
    if (is_zero()) return {};
    if (!is_laurent())
        throw std::domain_error("RationalFn: value is not a Laurent polynomial");
    return num_.shifted(-den_.max_exp());
}

Rat RationalFn::evaluate(const Rat& x) const {
    Rat d = den_.evaluate(x);
    if (d == 0) throw std::domain_error("RationalFn: denominator vanishes at evaluation point");
    return num_.evaluate(x) / d;
}

RationalFn pow(const RationalFn& a, int e) {
    if (e < 0) return pow(a.reciprocal(), -e);
    RationalFn out(1), base = a;
    while (e > 0) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

} // namespace qrook
