#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "qrook/sym_func.hpp"

#include "qrook/qalg.hpp"
#include "qrook/text_io.hpp"

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

using qrook::Basis;
using qrook::LaurentPoly;
using qrook::Partition;
using qrook::RationalFn;
using qrook::SymFunc;

namespace {

constexpr std::array<Basis, 8> kAllBases = {Basis::m, Basis::e, Basis::h, Basis::p,
                                            Basis::s, Basis::W, Basis::Wtilde,
                                            Basis::Htilde0};

SymFunc in_m(Basis b, const Partition& lam) {
    return qrook::to_basis(SymFunc::unit(b, lam), Basis::m);
}

SymFunc from_map(Basis b, int degree, const std::map<Partition, RationalFn>& coeffs) {
    SymFunc f(b, degree);
    for (const auto& [lam, c] : coeffs) f.set_coeff(lam, c);
    return f;
}

RationalFn rf(const LaurentPoly& p) { return RationalFn(p); }

LaurentPoly qpow(int e) { return LaurentPoly::monomial(1, e); }

int permutation_sign(const std::vector<int>& perm) {
    int inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
        for (std::size_t j = i + 1; j < perm.size(); ++j)
            if (perm[i] > perm[j]) ++inversions;
    return inversions % 2 == 0 ? 1 : -1;
}

// Determinant of the matrix (h_{lam_i - i + j}) expanded over permutations,
// collected in the h basis.  This builds the Schur function through a
// formula disjoint from the tableau enumeration used by the library.
SymFunc jacobi_trudi(const Partition& lam) {
    const int l = lam.length();
    std::vector<int> perm(l);
    std::iota(perm.begin(), perm.end(), 0);
    SymFunc acc(Basis::h, lam.size());
    do {
        std::vector<int> rows;
        bool vanish = false;
        for (int i = 0; i < l; ++i) {
            const int r = lam.part(i + 1) - (i + 1) + (perm[i] + 1);
            if (r < 0) { vanish = true; break; }
            if (r > 0) rows.push_back(r);
        }
        if (vanish) continue;
        std::sort(rows.begin(), rows.end(), std::greater<>());
        const Partition mu(rows);
        acc.set_coeff(mu, acc.coeff(mu) + RationalFn(permutation_sign(perm)));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return acc;
}

} // namespace

TEST_CASE("basis names round trip and reject junk") {
    for (const Basis b : kAllBases) CHECK(qrook::basis_from_name(qrook::basis_name(b)) == b);
    CHECK_THROWS_AS(qrook::basis_from_name("schur"), std::invalid_argument);
    CHECK_THROWS_AS(qrook::basis_from_name(""), std::invalid_argument);
}

TEST_CASE("coefficient bookkeeping") {
    SymFunc f(Basis::m, 3);
    CHECK(f.is_zero());
    f.set_coeff(Partition{2, 1}, RationalFn(5));
    CHECK(f.coeff(Partition{2, 1}) == RationalFn(5));
    CHECK(f.coeff(Partition{3}) == RationalFn());
    f.set_coeff(Partition{2, 1}, RationalFn());
    CHECK(f.is_zero());
    CHECK_THROWS_AS(f.set_coeff(Partition{2}, RationalFn(1)), std::invalid_argument);

    const SymFunc e2 = SymFunc::unit(Basis::e, Partition{2});
    CHECK((e2 + e2) == RationalFn(2) * e2);
    CHECK((e2 - e2).is_zero());
    CHECK((e2 * RationalFn()).is_zero());
    CHECK_THROWS_AS(e2 + SymFunc::unit(Basis::h, Partition{2}), std::invalid_argument);
    CHECK_THROWS_AS(e2 + SymFunc::unit(Basis::e, Partition{3}), std::invalid_argument);
}

TEST_CASE("monomial expansions of small e, h, p elements") {
    CHECK(in_m(Basis::e, Partition{2}) ==
          from_map(Basis::m, 2, {{Partition{1, 1}, RationalFn(1)}}));
    CHECK(in_m(Basis::e, Partition{1, 1}) ==
          from_map(Basis::m, 2,
                   {{Partition{2}, RationalFn(1)}, {Partition{1, 1}, RationalFn(2)}}));
    CHECK(in_m(Basis::h, Partition{2}) ==
          from_map(Basis::m, 2,
                   {{Partition{2}, RationalFn(1)}, {Partition{1, 1}, RationalFn(1)}}));
    CHECK(in_m(Basis::p, Partition{2}) == from_map(Basis::m, 2, {{Partition{2}, RationalFn(1)}}));
    CHECK(in_m(Basis::e, Partition{2, 1}) ==
          from_map(Basis::m, 3,
                   {{Partition{2, 1}, RationalFn(1)}, {Partition{1, 1, 1}, RationalFn(3)}}));
    CHECK(in_m(Basis::h, Partition{2, 1}) ==
          from_map(Basis::m, 3,
                   {{Partition{3}, RationalFn(1)},
                    {Partition{2, 1}, RationalFn(2)},
                    {Partition{1, 1, 1}, RationalFn(3)}}));
}

TEST_CASE("schur functions match frozen expansions and the determinant formula") {
    CHECK(in_m(Basis::s, Partition{2, 1}) ==
          from_map(Basis::m, 3,
                   {{Partition{2, 1}, RationalFn(1)}, {Partition{1, 1, 1}, RationalFn(2)}}));
    CHECK(in_m(Basis::s, Partition{2, 2}) ==
          from_map(Basis::m, 4,
                   {{Partition{2, 2}, RationalFn(1)},
                    {Partition{2, 1, 1}, RationalFn(1)},
                    {Partition{1, 1, 1, 1}, RationalFn(2)}}));
    for (int n = 0; n <= 6; ++n) {
        for (const auto& lam : qrook::partitions_of(n)) {
            CAPTURE(qrook::to_string(lam));
            CHECK(in_m(Basis::s, lam) == qrook::to_basis(jacobi_trudi(lam), Basis::m));
        }
    }
}

TEST_CASE("power sums against the elementary basis") {
    CHECK(qrook::expand_in(SymFunc::unit(Basis::p, Partition{2}), Basis::e) ==
          std::map<Partition, RationalFn>{{Partition{1, 1}, RationalFn(1)},
                                          {Partition{2}, RationalFn(-2)}});
    CHECK(qrook::expand_in(SymFunc::unit(Basis::p, Partition{3}), Basis::e) ==
          std::map<Partition, RationalFn>{{Partition{1, 1, 1}, RationalFn(1)},
                                          {Partition{2, 1}, RationalFn(-3)},
                                          {Partition{3}, RationalFn(3)}});
}

TEST_CASE("omega swaps e and h, conjugates schur shapes, and signs power sums") {
    for (int n = 0; n <= 5; ++n) {
        for (const auto& mu : qrook::partitions_of(n)) {
            CAPTURE(qrook::to_string(mu));
            const SymFunc oe = qrook::omega(SymFunc::unit(Basis::e, mu));
            CHECK(qrook::to_basis(oe, Basis::h) == SymFunc::unit(Basis::h, mu));
            const SymFunc os = qrook::omega(SymFunc::unit(Basis::s, mu));
            CHECK(qrook::to_basis(os, Basis::s) ==
                  SymFunc::unit(Basis::s, qrook::conjugate(mu)));
            const SymFunc op = qrook::omega(SymFunc::unit(Basis::p, mu));
            const int sign = (mu.size() - mu.length()) % 2 == 0 ? 1 : -1;
            CHECK(op == RationalFn(sign) * SymFunc::unit(Basis::p, mu));
        }
    }
}

TEST_CASE("omega is an involution in every basis") {
    for (int n = 0; n <= 4; ++n) {
        for (const Basis b : kAllBases) {
            for (const auto& lam : qrook::partitions_of(n)) {
                const SymFunc f = SymFunc::unit(b, lam);
                CHECK(qrook::omega(qrook::omega(f)) == f);
            }
        }
    }
}

TEST_CASE("plethystic substitution divides each power sum by q^r - 1") {
    for (int r = 1; r <= 4; ++r) {
        const auto out =
            qrook::expand_in(qrook::plethysm_over_qminus1(SymFunc::unit(Basis::p, Partition{r})),
                             Basis::p);
        const RationalFn expected = RationalFn(1) / rf(qpow(r) - LaurentPoly(1));
        CHECK(out == std::map<Partition, RationalFn>{{Partition{r}, expected}});
    }
    for (int n = 1; n <= 4; ++n) {
        const SymFunc e1n = SymFunc::unit(Basis::e, Partition(std::vector<int>(n, 1)));
        const RationalFn scale = qrook::pow(rf(LaurentPoly::q() - LaurentPoly(1)), n);
        CHECK(scale * qrook::plethysm_over_qminus1(e1n) == e1n);
    }
}

TEST_CASE("modified macdonald functions at t = 0 for small shapes") {
    CHECK(qrook::htilde_t0(Partition{2}) ==
          from_map(Basis::s, 2,
                   {{Partition{2}, RationalFn(1)}, {Partition{1, 1}, rf(qpow(1))}}));
    CHECK(qrook::htilde_t0(Partition{1, 1}) ==
          from_map(Basis::s, 2, {{Partition{2}, RationalFn(1)}}));
    CHECK(qrook::htilde_t0(Partition{3}) ==
          from_map(Basis::s, 3,
                   {{Partition{3}, RationalFn(1)},
                    {Partition{2, 1}, rf(qpow(1) + qpow(2))},
                    {Partition{1, 1, 1}, rf(qpow(3))}}));
    CHECK(qrook::htilde_t0(Partition{2, 1}) ==
          from_map(Basis::s, 3,
                   {{Partition{3}, RationalFn(1)}, {Partition{2, 1}, rf(qpow(1))}}));
    CHECK(qrook::htilde_t0(Partition{1, 1, 1}) ==
          from_map(Basis::s, 3, {{Partition{3}, RationalFn(1)}}));
    CHECK(qrook::htilde_t0(Partition{2, 2}) ==
          from_map(Basis::s, 4,
                   {{Partition{4}, RationalFn(1)},
                    {Partition{3, 1}, rf(qpow(1))},
                    {Partition{2, 2}, rf(qpow(2))}}));
}

TEST_CASE("schur coefficients of htilde_t0 are nonnegative and count tableaux at q = 1") {
    for (int n = 0; n <= 6; ++n) {
        for (const auto& mu : qrook::partitions_of(n)) {
            const SymFunc h = qrook::htilde_t0(mu);
            const Partition muc = qrook::conjugate(mu);
            for (const auto& lam : qrook::partitions_of(n)) {
                CAPTURE(qrook::to_string(mu));
                CAPTURE(qrook::to_string(lam));
                const RationalFn c = h.coeff(lam);
                REQUIRE(c.is_laurent());
                const LaurentPoly p = c.to_laurent();
                CHECK(p.is_polynomial());
                CHECK(p.has_nonnegative_coeffs());
                // at q = 1 the coefficient counts semistandard tableaux of
                // shape lam and content mu', as does [m_{mu'}] s_lam
                CHECK(p.evaluate(1) == in_m(Basis::s, lam).coeff(muc).evaluate(1));
            }
        }
    }
}

TEST_CASE("one-row whittaker elements carry q-multinomial coefficients") {
    for (int n = 1; n <= 4; ++n) {
        const SymFunc w = qrook::w_basis_element(Partition{n});
        for (const auto& mu : qrook::partitions_of(n)) {
            CAPTURE(n);
            CAPTURE(qrook::to_string(mu));
            CHECK(w.coeff(mu) == rf(qrook::q_multinomial(n, mu)));
        }
    }
}

TEST_CASE("one-column whittaker elements degenerate to elementaries") {
    for (int n = 1; n <= 5; ++n) {
        const Partition col(std::vector<int>(n, 1));
        CHECK(qrook::w_basis_element(col) == in_m(Basis::e, Partition{n}));
    }
}

TEST_CASE("whittaker elements are unitriangular for dominance") {
    for (int n = 1; n <= 5; ++n) {
        for (const auto& lam : qrook::partitions_of(n)) {
            const SymFunc w = qrook::w_basis_element(lam);
            CHECK(w.coeff(lam) == RationalFn(1));
            for (const auto& [mu, c] : w.coeffs()) {
                CAPTURE(qrook::to_string(lam));
                CAPTURE(qrook::to_string(mu));
                CHECK(qrook::dominance_leq(mu, lam));
                REQUIRE(c.is_laurent());
                CHECK(c.to_laurent().has_nonnegative_coeffs());
            }
        }
    }
}

TEST_CASE("reversed whittaker elements equal omega of htilde_t0") {
    for (int n = 0; n <= 5; ++n) {
        for (const auto& lam : qrook::partitions_of(n)) {
            CAPTURE(qrook::to_string(lam));
            const SymFunc wt = qrook::wtilde_basis_element(lam);
            CHECK(wt == qrook::to_basis(qrook::omega(qrook::htilde_t0(lam)), Basis::m));
            const RationalFn shift = rf(qpow(qrook::n_prime(lam)));
            const SymFunc w = qrook::w_basis_element(lam);
            SymFunc rev(Basis::m, n);
            for (const auto& [mu, c] : w.coeffs()) rev.set_coeff(mu, c.inverted() * shift);
            CHECK(wt == rev);
        }
    }
}

TEST_CASE("all pairwise basis round trips are exact") {
    for (int n = 0; n <= 6; ++n) {
        for (const auto& lam : qrook::partitions_of(n)) {
            for (const Basis b1 : kAllBases) {
                const SymFunc f = SymFunc::unit(b1, lam);
                for (const Basis b2 : kAllBases) {
                    CAPTURE(qrook::to_string(lam));
                    CAPTURE(qrook::basis_name(b1));
                    CAPTURE(qrook::basis_name(b2));
                    CHECK(qrook::to_basis(qrook::to_basis(f, b2), b1) == f);
                }
            }
        }
    }
}

TEST_CASE("expand_in matches to_basis and keeps the identity expansion free") {
    const SymFunc f = SymFunc::unit(Basis::W, Partition{2, 1});
    for (const Basis target : kAllBases)
        CHECK(qrook::expand_in(f, target) == qrook::to_basis(f, target).coeffs());
    CHECK(qrook::expand_in(f, Basis::W) ==
          std::map<Partition, RationalFn>{{Partition{2, 1}, RationalFn(1)}});
}

TEST_CASE("degrees beyond the supported bound are rejected") {
    CHECK_THROWS_AS(qrook::htilde_t0(Partition{9}), std::invalid_argument);
    CHECK_THROWS_AS(qrook::w_basis_element(Partition{5, 4}), std::invalid_argument);
    const SymFunc f = SymFunc::unit(Basis::m, Partition{5, 4});
    CHECK_THROWS_AS(qrook::to_basis(f, Basis::e), std::invalid_argument);
}

TEST_CASE("json rendering") {
    SymFunc f(Basis::s, 3);
    f.set_coeff(Partition{2, 1}, rf(qpow(1) + LaurentPoly(1)));
    const nlohmann::json j = qrook::symfunc_to_json(f);
    CHECK(j["basis"] == "s");
    CHECK(j["degree"] == 3);
    CHECK(j["coeffs"].size() == 1);
    CHECK(j["coeffs"]["2,1"] == qrook::to_string(rf(qpow(1) + LaurentPoly(1))));

    const nlohmann::json empty = qrook::symfunc_to_json(SymFunc(Basis::m, 0));
    CHECK(empty["coeffs"].empty());
}
