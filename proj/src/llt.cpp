#include "qrook/llt.hpp"

#include "qrook/qalg.hpp"
#include "qrook/rook.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>

namespace qrook {
namespace {

/// Accumulates q^{inv} per exponent vector over all words in [n]^n,
/// optionally skipping words that repeat a value on an area pair.  The
/// exponent vector of a word records how often each value 1..n occurs.
std::map<std::vector<int>, LaurentPoly> word_sums(const DyckPath& pi, bool proper) {
    const int n = pi.semilength();
    std::vector<std::vector<int>> partners(n + 1);
    for (const auto& [i, j] : pi.area_cells()) partners[j].push_back(i);

    std::map<std::vector<int>, LaurentPoly> acc;
    std::vector<int> w(n + 1, 0);
    std::vector<int> counts(n, 0);

    struct Rec {
        int n;
        bool proper;
        const std::vector<std::vector<int>>& partners;
        std::map<std::vector<int>, LaurentPoly>& acc;
        std::vector<int>& w;
        std::vector<int>& counts;

        void go(int j, int inv) {
            if (j > n) {
                acc[counts] += LaurentPoly::monomial(1, inv);
                return;
            }
            for (int v = 1; v <= n; ++v) {
                int add = 0;
                bool clash = false;
                for (const int i : partners[j]) {
                    if (w[i] == v)
                        clash = true;
                    else if (w[i] > v)
                        ++add;
                }
                if (proper && clash) continue;
                w[j] = v;
                ++counts[v - 1];
                go(j + 1, inv + add);
                --counts[v - 1];
            }
        }
    } rec{n, proper, partners, acc, w, counts};
    rec.go(1, 0);
    return acc;
}

SymFunc word_sums_to_m(const DyckPath& pi, bool proper, const char* what) {
    const auto acc = word_sums(pi, proper);
    SymFunc f(Basis::m, pi.semilength());
    for (const auto& [vec, poly] : acc) {
        std::vector<int> sorted = vec;
        std::sort(sorted.begin(), sorted.end(), std::greater<>());
        const auto rep = acc.find(sorted);
        if (rep == acc.end() || rep->second != poly)
            throw std::logic_error(std::string(what) +
                                   ": coefficients are not symmetric across rearrangements");
        if (vec == sorted) f.set_coeff(Partition(sorted), RationalFn(poly));
    }
    return f;
}

RationalFn one_minus_q_power(int e) {
    return pow(RationalFn(LaurentPoly(1) - LaurentPoly::q()), e);
}

RationalFn q_minus_one_power(int e) {
    return pow(RationalFn(LaurentPoly::q() - LaurentPoly(1)), e);
}

LaurentPoly checked_polynomial(const RationalFn& value, const char* what) {
    if (!value.is_laurent())
        throw std::logic_error(std::string(what) + ": coefficient is not a polynomial");
    LaurentPoly p = value.to_laurent();
    if (!p.is_polynomial() || !p.has_nonnegative_coeffs())
        throw std::logic_error(std::string(what) +
                               ": coefficient has a negative exponent or coefficient");
    return p;
}

} // namespace

SymFunc llt_chi(const DyckPath& pi) {
    if (pi.semilength() > 8)
        throw std::invalid_argument("llt_chi: semilength exceeds the supported bound of 8");
    return word_sums_to_m(pi, false, "llt_chi");
}

SymFunc llt_chi_tilde(const DyckPath& pi) {
    const SymFunc chi = llt_chi(pi);
    const int area = pi.area_size();
    int top = 0;
    SymFunc out(Basis::m, chi.degree());
    for (const auto& [mu, c] : chi.coeffs()) {
        const LaurentPoly p = c.to_laurent();
        top = std::max(top, p.max_exp());
        out.set_coeff(mu, RationalFn(reverse(p, area)));
    }
    if (top != area)
        throw std::logic_error("llt_chi_tilde: top power of chi differs from the area count");
    return out;
}

SymFunc chromatic_qsym(const DyckPath& pi) {
    if (pi.semilength() > 8)
        throw std::invalid_argument(
            "chromatic_qsym: semilength exceeds the supported bound of 8");
    return word_sums_to_m(pi, true, "chromatic_qsym");
}

std::vector<int> diagonal_touch_composition(const DyckPath& pi) {
    std::vector<int> alpha;
    int balance = 0;
    int segment = 0;
    for (const char step : pi.word()) {
        if (step == 'N') {
            ++balance;
            ++segment;
        } else {
            --balance;
        }
        if (balance == 0) {
            alpha.push_back(segment);
            segment = 0;
        }
    }
    return alpha;
}

LLTExpansion expand_c(const DyckPath& pi) {
    if (pi.semilength() > 7)
        throw std::invalid_argument("expand_c: semilength exceeds the supported bound of 7");
    const int n = pi.semilength();
    LLTExpansion out{pi, Basis::W, {}};
    for (const auto& [mu, coeff] : expand_in(llt_chi(pi), Basis::W)) {
        const RationalFn c = coeff / one_minus_q_power(n - mu.part(1));
        if (c.is_zero()) continue;
        out.coeffs.emplace(mu, checked_polynomial(c, "expand_c"));
    }
    return out;
}

LLTExpansion expand_ctilde(const DyckPath& pi) {
    const LLTExpansion c = expand_c(pi);
    const int n = pi.semilength();
    const int area = pi.area_size();
    LLTExpansion out{pi, Basis::Wtilde, {}};
    SymFunc reconstruction(Basis::Wtilde, n);
    const RationalFn prefactor_base{LaurentPoly(1) - LaurentPoly::monomial(1, -1)};
    for (const auto& [mu, p] : c.coeffs) {
        LaurentPoly ct = p.inverted().shifted(area - n_prime(mu));
        if (!ct.has_nonnegative_coeffs())
            throw std::logic_error("expand_ctilde: coefficient has a negative coefficient");
        reconstruction.set_coeff(mu, RationalFn(ct) * pow(prefactor_base, n - mu.part(1)));
        out.coeffs.emplace(mu, std::move(ct));
    }
    if (to_basis(reconstruction, Basis::m) != llt_chi_tilde(pi))
        throw std::logic_error(
            "expand_ctilde: coefficients fail to reconstruct the reversed function");
    return out;
}

LLTExpansion expand_b(const DyckPath& pi) {
    if (pi.semilength() > 7)
        throw std::invalid_argument("expand_b: semilength exceeds the supported bound of 7");
    const int n = pi.semilength();
    LLTExpansion out{pi, Basis::e, {}};
    for (const auto& [mu, coeff] : expand_in(llt_chi(pi), Basis::e)) {
        const RationalFn b = coeff / q_minus_one_power(n - mu.length());
        if (b.is_zero()) continue;
        out.coeffs.emplace(mu, checked_polynomial(b, "expand_b"));
    }
    return out;
}

LaurentPoly enrook_lhs(const DyckPath& pi) {
    const int n = pi.semilength();
    LaurentPoly sum;
    for (const auto& [mu, b] : expand_b(pi).coeffs) sum += b.shifted(n - mu.length());
    if (sum != g_functional(pi))
        throw std::logic_error("enrook_lhs: sum differs from the factor product");
    if (sum != rk_last(complement(pi.shape(), n, n)))
        throw std::logic_error("enrook_lhs: sum differs from the complement rook polynomial");
    return sum;
}

LaurentPoly g_functional(const DyckPath& pi) {
    const int n = pi.semilength();
    LaurentPoly g(1);
    for (int j = 1; j <= n; ++j) g *= q_number(n - pi.shape().part(j) - j + 1);
    return g;
}

bool guay_paquet_decomposition(const Partition& lam, int m, int n) {
    if (n < 0 || m < n)
        throw std::invalid_argument("guay_paquet_decomposition: requires 0 <= n <= m");
    if (m + n > 7)
        throw std::invalid_argument(
            "guay_paquet_decomposition: semilength exceeds the supported bound of 7");
    if (!Partition(std::vector<int>(n, m)).contains(lam))
        throw std::invalid_argument(
            "guay_paquet_decomposition: shape must fit inside the m x n rectangle");

    const SymFunc lhs = llt_chi(DyckPath::from_partition(lam, m + n));
    SymFunc sum(Basis::m, m + n);
    for (int j = 0; j <= n; ++j) {
        const RationalFn h = q_hit(lam, m, n, j);
        if (h.is_zero()) continue;
        const Partition rect(std::vector<int>(j, m));
        sum += h * llt_chi(DyckPath::from_partition(rect, m + n));
    }
    sum *= RationalFn(q_factorial(m - n)) / RationalFn(q_factorial(m));
    return lhs == sum;
}

} // namespace qrook
