#pragma once

#include "qrook/dyck_path.hpp"
#include "qrook/sym_func.hpp"

#include <map>
#include <vector>

namespace qrook {

/// Unicellular LLT function of a path: every word w in [n]^n contributes
/// q^{#{(i,j) in Area : w_i > w_j}} x_w, and n variables suffice at degree
/// n.  Returned in the monomial basis with polynomial coefficients; the
/// accumulated coefficients are checked to be symmetric across exponent
/// rearrangements.
/// \throws std::invalid_argument for semilength > 8.
SymFunc llt_chi(const DyckPath& pi);

/// The reversal q^{#Area} chi(1/q).  The top power of q appearing in chi
/// is #Area, so the result again has polynomial coefficients (checked).
SymFunc llt_chi_tilde(const DyckPath& pi);

/// Chromatic quasisymmetric function: the same word sum restricted to
/// proper words, those with w_i != w_j on every area pair.
/// \throws std::invalid_argument for semilength > 8.
SymFunc chromatic_qsym(const DyckPath& pi);

/// Semilengths of the segments between consecutive visits of the path to
/// the diagonal.  At q = 0 the LLT function degenerates to the product of
/// complete homogeneous functions indexed by this composition.
std::vector<int> diagonal_touch_composition(const DyckPath& pi);

/// Expansion of chi over a basis with the scalar prefactor divided out of
/// each coefficient: (1-q)^{n-mu_1} per W_mu, (q-1)^{n-length(mu)} per
/// e_mu, and the reversed form for Wtilde.  Coefficients are stored
/// without the prefactor and carry nonnegative integer coefficients.
struct LLTExpansion {
    DyckPath path;
    Basis basis;
    std::map<Partition, LaurentPoly> coeffs;
};

/// W-basis coefficients c of chi: chi = sum (1-q)^{n-mu_1} c_mu W_mu.
/// Exact divisibility, polynomiality and nonnegativity are checked.
/// \throws std::invalid_argument for semilength > 7.
LLTExpansion expand_c(const DyckPath& pi);

/// Reversed coefficients q^{#Area - n'(mu)} c_mu(1/q); these reconstruct
/// chi_tilde against the reversed Whittaker basis via the prefactor
/// (1-q^{-1})^{n-mu_1} (checked).  Entries are Laurent polynomials.
LLTExpansion expand_ctilde(const DyckPath& pi);

/// e-basis coefficients b of chi: chi = sum (q-1)^{n-length(mu)} b_mu e_mu.
/// \throws std::invalid_argument for semilength > 7.
LLTExpansion expand_b(const DyckPath& pi);

/// sum_mu q^{n-length(mu)} b_mu; equal to g_functional(pi) and to the full
/// rook polynomial of the complement shape in the n x n square (both
/// recomputed and checked).
LaurentPoly enrook_lhs(const DyckPath& pi);

/// G(pi) = prod_j [n - shape_j - j + 1]_q.  The factor arguments are >= 1
/// for every Dyck path, G is multiplicative under concatenation, and it
/// obeys the three-term modular law.
LaurentPoly g_functional(const DyckPath& pi);

/// Checks that chi of the path of lam inside the (m+n) x (m+n) grid equals
/// [m-n]!/[m]! times the q-hit-weighted sum of chi over the rectangle
/// paths (m^j), j = 0..n.  Requires lam inside (m^n), n <= m, m + n <= 7.
bool guay_paquet_decomposition(const Partition& lam, int m, int n);

} // namespace qrook
