#pragma once

#include "qrook/partition.hpp"
#include "qrook/rational_fn.hpp"

#include <json.hpp>

#include <map>
#include <string>
#include <string_view>

namespace qrook {

/// Bases for homogeneous symmetric functions of a fixed degree.
///
/// m, e, h, p, s are the classical ones.  W is the q-Whittaker basis,
/// Wtilde its reversal, and Htilde0 the modified Macdonald functions with
/// the second parameter set to zero.  The last three have coefficients in
/// the rational-function field.
enum class Basis { m, e, h, p, s, W, Wtilde, Htilde0 };

std::string basis_name(Basis b);
/// \throws std::invalid_argument for an unknown name.
Basis basis_from_name(std::string_view name);

/// A homogeneous symmetric function of fixed degree, stored as a sparse
/// coefficient map over partitions of that degree in a declared basis.
/// Zero coefficients are never stored, so operator== is structural
/// equality of exact values within one basis.
class SymFunc {
public:
    SymFunc(Basis basis, int degree);
    /// The single basis element labelled by lam.
    static SymFunc unit(Basis basis, const Partition& lam);

    Basis basis() const { return basis_; }
    int degree() const { return degree_; }
    const std::map<Partition, RationalFn>& coeffs() const { return coeffs_; }
    RationalFn coeff(const Partition& lam) const;
    /// Inserts or overwrites one coefficient; zero erases.
    /// \throws std::invalid_argument if |lam| differs from the degree.
    void set_coeff(const Partition& lam, RationalFn value);
    bool is_zero() const { return coeffs_.empty(); }

    SymFunc& operator+=(const SymFunc& other);
    SymFunc& operator-=(const SymFunc& other);
    SymFunc& operator*=(const RationalFn& scalar);
    friend SymFunc operator+(SymFunc a, const SymFunc& b) { return a += b; }
    friend SymFunc operator-(SymFunc a, const SymFunc& b) { return a -= b; }
    friend SymFunc operator*(SymFunc a, const RationalFn& c) { return a *= c; }
    friend SymFunc operator*(const RationalFn& c, SymFunc a) { return a *= c; }

    bool operator==(const SymFunc&) const = default;

private:
    Basis basis_;
    int degree_;
    std::map<Partition, RationalFn> coeffs_;
};

/// Exact change of basis.  Transition matrices are built per (basis,
/// degree), inverted over the rational-function field, and cached.
/// \throws std::logic_error if a transition matrix is singular, which
/// would signal a construction bug rather than bad input.
SymFunc to_basis(const SymFunc& f, Basis target);

/// Coefficients of f against the target basis, as a map.
std::map<Partition, RationalFn> expand_in(const SymFunc& f, Basis target);

/// The standard involution, applied through the power-sum basis where it
/// multiplies p_mu by (-1)^{|mu| - length(mu)}.
SymFunc omega(const SymFunc& f);

/// The plethystic substitution f[X/(q-1)], computed in the power-sum
/// basis by p_r -> p_r / (q^r - 1).
SymFunc plethysm_over_qminus1(const SymFunc& f);

/// Modified Macdonald function at t = 0, in the Schur basis: the
/// coefficient of s_lam is the cocharge generating function over
/// semistandard tableaux of shape lam and content mu'.
SymFunc htilde_t0(const Partition& mu);

/// q-Whittaker element W_lam = q^{n'(lam)} omega htilde_t0(lam)|_{q->1/q},
/// returned in the monomial basis.
SymFunc w_basis_element(const Partition& lam);

/// Reversed q-Whittaker element q^{n'(lam)} W_lam(1/q), equal to
/// omega htilde_t0(lam); the equality is recomputed and checked.
SymFunc wtilde_basis_element(const Partition& lam);

nlohmann::json symfunc_to_json(const SymFunc& f);

} // namespace qrook
