#pragma once

#include <vector>

#include "qrook/dyck_path.hpp"
#include "qrook/laurent_poly.hpp"

namespace qrook {

/// Counts matrices over the field with p elements supported on the cells of
/// the path's shape, grouped by rank. Entry k of the result is the number
/// of fillings of the shape whose matrix has rank k, for k = 0..n where n
/// is the semilength. Every filling is enumerated, so p must be prime and
/// p^|shape| must not exceed 2^24.
std::vector<Int> count_by_rank(const DyckPath& pi, int p);

/// The rank-k count predicted by the rook polynomial of the shape:
/// (p-1)^k p^(|shape|-k) R_k(shape; 1/p).
Int count_by_formula(const DyckPath& pi, int p, int k);

}  // namespace qrook
