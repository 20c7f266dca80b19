#include "qrook/laurent_poly.hpp"

#include <vector>

namespace qrook {

Rat rat_pow(const Rat& x, int e) {
    if (e == 0) return Rat(1);
    if (x == 0) {
        if (e < 0) throw std::domain_error("rat_pow: 0 raised to a negative power");
        return Rat(0);
    }
    Rat base = e > 0 ? x : Rat(1) / x;
    int k = e > 0 ? e : -e;
    Rat out(1);
    while (k > 0) {
        if (k & 1) out *= base;
        base *= base;
        k >>= 1;
    }
    return out;
}

LaurentPoly::LaurentPoly(Int value) {
    if (value != 0) terms_.emplace(0, std::move(value));
}

LaurentPoly LaurentPoly::monomial(Int coeff, int exp) {
    LaurentPoly p;
    if (coeff != 0) p.terms_.emplace(exp, std::move(coeff));
    return p;
}

bool LaurentPoly::is_polynomial() const {
    return terms_.empty() || terms_.begin()->first >= 0;
}

bool LaurentPoly::has_nonnegative_coeffs() const {
    for (const auto& [e, c] : terms_)
        if (c < 0) return false;
    return true;
}

int LaurentPoly::min_exp() const {
    if (terms_.empty()) throw std::domain_error("min_exp of zero polynomial");
    return terms_.begin()->first;
}

int LaurentPoly::max_exp() const {
    if (terms_.empty()) throw std::domain_error("max_exp of zero polynomial");
    return terms_.rbegin()->first;
}

Int LaurentPoly::coeff(int exp) const {
    auto it = terms_.find(exp);
    return it == terms_.end() ? Int(0) : it->second;
}

LaurentPoly LaurentPoly::operator-() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, Int(-c));
    return out;
}

LaurentPoly& LaurentPoly::operator+=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly& LaurentPoly::operator-=(const LaurentPoly& o) {
    for (const auto& [e, c] : o.terms_) {
        auto [it, inserted] = terms_.try_emplace(e, Int(-c));
        if (!inserted) {
            it->second -= c;
            if (it->second == 0) terms_.erase(it);
        }
    }
    return *this;
}

LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            auto [it, inserted] = out.terms_.try_emplace(ea + eb, Int(ca * cb));
            if (!inserted) {
                it->second += ca * cb;
                if (it->second == 0) out.terms_.erase(it);
            }
        }
    return out;
}

LaurentPoly& LaurentPoly::operator*=(const LaurentPoly& o) {
    *this = *this * o;
    return *this;
}

LaurentPoly LaurentPoly::shifted(int k) const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e + k, c);
    return out;
}

LaurentPoly LaurentPoly::inverted() const {
    LaurentPoly out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(-e, c);
    return out;
}

Rat LaurentPoly::evaluate(const Rat& x) const {
    Rat out(0);
    for (const auto& [e, c] : terms_) out += Rat(c) * rat_pow(x, e);
    return out;
}

LaurentPoly exact_div(const LaurentPoly& a, const LaurentPoly& b) {
    if (b.is_zero()) throw std::domain_error("exact_div: division by zero polynomial");
    if (a.is_zero()) return {};

    // Shift both operands into ordinary polynomials with nonzero constant
    // term, divide, and shift back.
    const int la = a.min_exp(), lb = b.min_exp();
    const int da = a.max_exp() - la, db = b.max_exp() - lb;
    if (da < db) throw std::logic_error("exact_div: divisor degree exceeds dividend degree");

    std::vector<Int> rem(da + 1), div(db + 1);
    for (const auto& [e, c] : a.terms()) rem[e - la] = c;
    for (const auto& [e, c] : b.terms()) div[e - lb] = c;

    std::vector<Int> quot(da - db + 1);
    for (int d = da - db; d >= 0; --d) {
        Int head = rem[d + db];
        if (head == 0) continue;
        Int c, r;
        boost::multiprecision::divide_qr(head, div[db], c, r);
        if (r != 0) throw std::logic_error("exact_div: leading coefficient does not divide");
        quot[d] = c;
        for (int i = 0; i <= db; ++i) rem[d + i] -= c * div[i];
    }
    for (const Int& c : rem)
        if (c != 0) throw std::logic_error("exact_div: nonzero remainder");

    LaurentPoly out;
    for (int d = 0; d < static_cast<int>(quot.size()); ++d)
        if (quot[d] != 0) out += LaurentPoly::monomial(quot[d], d + la - lb);
    return out;
}

LaurentPoly pow(const LaurentPoly& a, int e) {
    if (e < 0) throw std::invalid_argument("pow: negative exponent for polynomial base");
    LaurentPoly out(1), base = a;
    while (e > 0) {
        if (e & 1) out *= base;
        base *= base;
        e >>= 1;
    }
    return out;
}

} // namespace qrook
