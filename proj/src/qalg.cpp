#include "qrook/qalg.hpp"

namespace qrook {

LaurentPoly q_number(int n) {
    if (n < 0) throw std::domain_error("q_number: negative argument");
    LaurentPoly out;
    for (int e = 0; e < n; ++e) out += LaurentPoly::monomial(1, e);
    return out;
}

LaurentPoly q_factorial(int n) {
    if (n < 0) throw std::domain_error("q_factorial: negative argument");
    LaurentPoly out(1);
    for (int i = 1; i <= n; ++i) out *= q_number(i);
    return out;
}

LaurentPoly q_pochhammer(const LaurentPoly& a, int j) {
    if (j < 0) throw std::domain_error("q_pochhammer: negative length");
    LaurentPoly out(1);
    for (int i = 0; i < j; ++i)
        out *= LaurentPoly(1) - a.shifted(i);
    return out;
}

LaurentPoly q_binomial(int n, int k) {
    if (n < 0) throw std::domain_error("q_binomial: negative n");
    if (k < 0 || k > n) return {};
    const LaurentPoly q = LaurentPoly::q();
    return exact_div(q_pochhammer(q, n),
                     q_pochhammer(q, k) * q_pochhammer(q, n - k));
}

LaurentPoly q_multinomial(int n, const Partition& mu) {
    if (mu.size() != n)
        throw std::invalid_argument("q_multinomial: mu must be a partition of n");
    LaurentPoly den(1);
    for (int part : mu.parts()) den *= q_factorial(part);
    return exact_div(q_factorial(n), den);
}

LaurentPoly reverse(const LaurentPoly& p, int d) {
    return p.inverted().shifted(d);
}

} // namespace qrook
