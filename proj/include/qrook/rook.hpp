#pragma once

#include "qrook/partition.hpp"
#include "qrook/qalg.hpp"
#include "qrook/rational_fn.hpp"

#include <vector>

namespace qrook {

/// Non-attacking rooks on the diagram of a partition: no two share a row
/// or a column.  Rooks are kept sorted by row.
class RookPlacement {
public:
    RookPlacement() = default;
    /// \throws std::invalid_argument if a rook lies outside lam or two
    /// rooks attack each other.
    RookPlacement(std::vector<Box> rooks, const Partition& lam);

    const std::vector<Box>& rooks() const { return rooks_; }
    int count() const { return static_cast<int>(rooks_.size()); }

private:
    std::vector<Box> rooks_;
};

/// All placements of k non-attacking rooks on lam, deterministic order.
std::vector<RookPlacement> placements(const Partition& lam, int k);

/// Cells of lam left over after every rook cancels its own cell, the
/// cells above it in its column, and the cells to its left in its row.
int inv_statistic(const RookPlacement& C, const Partition& lam);

/// Sum of q^inv over all k-rook placements.  Requires |lam| <= 30.
LaurentPoly rk_bruteforce(const Partition& lam, int k);

/// Same polynomial by the first-row recursion
///   R_k(lam) = q^{lam_1 - k} R_k(lam~) + [lam_1 - k + 1] R_{k-1}(lam~)
/// where lam~ drops the first row; R_0(lam) = q^{|lam|}, zero when k is
/// negative or exceeds the row or column count.
LaurentPoly rk_recursion(const Partition& lam, int k);

/// Closed form on the a x b rectangle:
///   R_i = q^{(a-i)(b-i)} [a]!/[a-i]! qbin(b, i);  zero for i out of range.
LaurentPoly rk_rectangle(int a, int b, int i);

/// The maximal rook number R_l(lam) for l = length(lam), as the product
/// prod_i [lam_{l-i+1} - i + 1].  A zero factor is kept (the product is
/// then zero); a negative factor argument raises std::domain_error.
LaurentPoly rk_last(const Partition& lam);

/// q-Stirling numbers of the second kind:
///   S(n,k) = q^{k-1} S(n-1,k-1) + [k] S(n-1,k),  S(0,0) = 1,
/// zero outside 0 <= k <= n.
LaurentPoly q_stirling2(int n, int k);

/// q-Stirling numbers of the first kind: the coefficient of z^{n-k} in
/// prod_{i=0}^{n-1} (1 + [i] z), zero outside 0 <= k <= n.
LaurentPoly q_stirling1(int n, int k);

/// q-hit numbers of lam relative to the m x n rectangle (n <= m):
///   H_k = q^{C(k,2)-|lam|}/[m-n]! *
///         sum_{i=k}^{n} R_i(lam) [m-i]! qbin(i,k) (-1)^{i+k} q^{mi-C(i,2)}.
/// The result always reduces to a Laurent polynomial; that is checked and
/// a failure raises std::logic_error.
/// \throws std::invalid_argument unless lam fits in (m^n) and n <= m.
RationalFn q_hit(const Partition& lam, int m, int n, int k);

} // namespace qrook
