#pragma once

#include "qrook/dyck_path.hpp"
#include "qrook/laurent_poly.hpp"
#include "qrook/partition.hpp"

#include <vector>

namespace qrook {

/// A standard Young tableau restricted by the order of a Dyck path: rows
/// and columns increase as usual, and whenever i sits directly above j in
/// a column, i comes before j in the path order.
class PiTableau {
public:
    /// \throws std::invalid_argument if rows do not form a partition
    /// shape filled bijectively by 1..n with increasing rows/columns, or
    /// the column path-order condition fails.
    PiTableau(DyckPath pi, std::vector<std::vector<int>> rows);

    const DyckPath& path() const { return pi_; }
    const Partition& shape() const { return shape_; }
    const std::vector<std::vector<int>>& rows() const { return rows_; }
    int size() const { return pi_.semilength(); }
    int entry(Box b) const;

    bool operator==(const PiTableau&) const = default;

private:
    DyckPath pi_;
    std::vector<std::vector<int>> rows_;
    Partition shape_;
};

/// All path-restricted tableaux of shape mu, by backtracking insertion of
/// 1..n at addable corners.  Requires |mu| = semilength of pi.
std::vector<PiTableau> enumerate_pi_syt(const DyckPath& pi, const Partition& mu);

/// Pairs of boxes (b, c) with b strictly lower than c whose entries
/// (T(c), T(b)) form an area pair of the path.
int gamma(const PiTableau& T);

/// Boxes strictly right of b in its row whose entry precedes j in the
/// path order.
int arm_less_pi(const PiTableau& T, Box b, int j);

/// wt(T) = q^{n'(mu) - #Area + gamma(T)} * prod over boxes b below the
/// first row of [arm_less_pi(T, up(b), T(b)) + 1]_q.  Individual weights
/// may carry negative exponents; only their theorem-level sums are
/// genuine polynomials.
LaurentPoly weight(const PiTableau& T);

/// The rook polynomial of the path's shape as a tableau sum:
///   R_k = sum over mu with mu_1 = n - k, T in SYT^pi_mu, of wt(T).
/// Nonnegativity and polynomiality are checked on the result.
LaurentPoly rk_tableaux(const DyckPath& pi, int k);

/// c_{pi,mu} = sum_T q^{gamma(T)} prod [arm_less_pi(T, up(b), T(b)) + 1].
/// Always a polynomial with nonnegative coefficients (checked).
LaurentPoly c_coefficient(const DyckPath& pi, const Partition& mu);

/// Rook polynomial of lam through the single surviving coefficient of an
/// abelian path: q^{|lam| - (N-k)k} c_{pi,(N-k,k)} where pi is the path
/// of lam at semilength N.  Requires N >= lam_1 + lam'_1.
LaurentPoly rk_abelian(const Partition& lam, int N, int k);

/// Stirling number of the second kind as a tableau sum over ordinary
/// standard Young tableaux (the path order of (NE)^n is the total order):
///   sum over mu with mu_1 = k, T in SYT_mu, of q^{n'(mu)} prod [arm+1].
/// Requires 1 <= k <= n.
LaurentPoly stirling2_tableaux(int n, int k);

} // namespace qrook
