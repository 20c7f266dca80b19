#pragma once

#include "qrook/laurent_poly.hpp"
#include "qrook/partition.hpp"

namespace qrook {

/// [n]_q = 1 + q + ... + q^{n-1}; [0]_q = 0.
/// \throws std::domain_error for n < 0.
LaurentPoly q_number(int n);

/// [n]_q! = [1]_q [2]_q ... [n]_q; [0]_q! = 1.
LaurentPoly q_factorial(int n);

/// (a; q)_j = prod_{i=0}^{j-1} (1 - a q^i); empty product for j = 0.
LaurentPoly q_pochhammer(const LaurentPoly& a, int j);

/// Gaussian binomial [n choose k]_q; zero when k < 0 or k > n.
/// Computed as an exact quotient of (q; q)-products.
LaurentPoly q_binomial(int n, int k);

/// [n choose mu]_q = [n]_q! / prod_i [mu_i]_q! for a partition mu of n.
/// \throws std::invalid_argument when |mu| != n.
LaurentPoly q_multinomial(int n, const Partition& mu);

/// q^d * p(q^{-1}).
LaurentPoly reverse(const LaurentPoly& p, int d);

} // namespace qrook
