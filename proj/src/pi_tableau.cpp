#include "qrook/pi_tableau.hpp"

#include "qrook/qalg.hpp"

#include <algorithm>
#include <numeric>

namespace qrook {

PiTableau::PiTableau(DyckPath pi, std::vector<std::vector<int>> rows)
    : pi_(std::move(pi)), rows_(std::move(rows)) {
    std::vector<int> lens;
    for (const auto& row : rows_) lens.push_back(static_cast<int>(row.size()));
    shape_ = Partition(lens);
    if (static_cast<std::size_t>(shape_.length()) != rows_.size())
        throw std::invalid_argument("PiTableau: empty row inside the filling");
    if (shape_.size() != pi_.semilength())
        throw std::invalid_argument("PiTableau: shape size differs from path semilength");

    std::vector<bool> seen(pi_.semilength() + 1, false);
    for (std::size_t r = 0; r < rows_.size(); ++r)
        for (std::size_t c = 0; c < rows_[r].size(); ++c) {
            int v = rows_[r][c];
            if (v < 1 || v > pi_.semilength() || seen[v])
                throw std::invalid_argument("PiTableau: entries must be a bijection to 1..n");
            seen[v] = true;
            if (c > 0 && rows_[r][c - 1] >= v)
                throw std::invalid_argument("PiTableau: rows must increase");
            if (r > 0) {
                int above = rows_[r - 1][c];
                if (above >= v) throw std::invalid_argument("PiTableau: columns must increase");
                if (!pi_.less(above, v))
                    throw std::invalid_argument(
                        "PiTableau: column neighbours violate the path order");
            }
        }
}

int PiTableau::entry(Box b) const {
    if (!box_in(shape_, b)) throw std::invalid_argument("PiTableau::entry: box outside shape");
    return rows_[b.row - 1][b.col - 1];
}

namespace {

void fill_tableau(const DyckPath& pi, const Partition& mu, int value,
                  std::vector<std::vector<int>>& rows, std::vector<int>& filled,
                  std::vector<PiTableau>& out) {
    const int n = pi.semilength();
    if (value > n) {
        out.emplace_back(pi, rows);
        return;
    }
    for (int r = 0; r < mu.length(); ++r) {
        if (filled[r] == mu.part(r + 1)) continue;
        if (r > 0 && filled[r - 1] <= filled[r]) continue;
        if (r > 0 && !pi.less(rows[r - 1][filled[r]], value)) continue;
        rows[r][filled[r]] = value;
        ++filled[r];
        fill_tableau(pi, mu, value + 1, rows, filled, out);
        --filled[r];
    }
}

} // namespace

std::vector<PiTableau> enumerate_pi_syt(const DyckPath& pi, const Partition& mu) {
    if (mu.size() != pi.semilength())
        throw std::invalid_argument("enumerate_pi_syt: |mu| must equal the semilength");
    std::vector<std::vector<int>> rows;
    for (int r = 1; r <= mu.length(); ++r) rows.emplace_back(mu.part(r), 0);
    std::vector<int> filled(mu.length(), 0);
    std::vector<PiTableau> out;
    fill_tableau(pi, mu, 1, rows, filled, out);
    return out;
}

int gamma(const PiTableau& T) {
    const auto& rows = T.rows();
    int count = 0;
    for (std::size_t rb = 1; rb < rows.size(); ++rb)
        for (std::size_t rc = 0; rc < rb; ++rc)
            for (int vb : rows[rb])
                for (int vc : rows[rc])
                    if (T.path().area_contains(vc, vb)) ++count;
    return count;
}

int arm_less_pi(const PiTableau& T, Box b, int j) {
    if (!box_in(T.shape(), b)) throw std::invalid_argument("arm_less_pi: box outside shape");
    const auto& row = T.rows()[b.row - 1];
    int count = 0;
    for (std::size_t c = b.col; c < row.size(); ++c)
        if (T.path().less(row[c], j)) ++count;
    return count;
}

LaurentPoly weight(const PiTableau& T) {
    int exponent = n_prime(T.shape()) - T.path().area_size() + gamma(T);
    LaurentPoly value = LaurentPoly::monomial(1, exponent);
    for (int r = 2; r <= T.shape().length(); ++r)
        for (int c = 1; c <= T.shape().part(r); ++c)
            value *= q_number(arm_less_pi(T, {r - 1, c}, T.entry({r, c})) + 1);
    return value;
}

LaurentPoly rk_tableaux(const DyckPath& pi, int k) {
    if (k < 0) throw std::invalid_argument("rk_tableaux: negative k");
    const int n = pi.semilength();
    if (k > n) return LaurentPoly();
    LaurentPoly total;
    for (const Partition& mu : partitions_of(n)) {
        if (mu.part(1) != n - k) continue;
        for (const PiTableau& T : enumerate_pi_syt(pi, mu)) total += weight(T);
    }
    if (!total.is_polynomial() || !total.has_nonnegative_coeffs())
        throw std::logic_error("rk_tableaux: tableau sum is not a nonnegative polynomial");
    return total;
}

LaurentPoly c_coefficient(const DyckPath& pi, const Partition& mu) {
    if (mu.size() != pi.semilength())
        throw std::invalid_argument("c_coefficient: |mu| must equal the semilength");
    LaurentPoly total;
    for (const PiTableau& T : enumerate_pi_syt(pi, mu)) {
        LaurentPoly term = LaurentPoly::monomial(1, gamma(T));
        for (int r = 2; r <= mu.length(); ++r)
            for (int c = 1; c <= mu.part(r); ++c)
                term *= q_number(arm_less_pi(T, {r - 1, c}, T.entry({r, c})) + 1);
        total += term;
    }
    if (!total.is_polynomial() || !total.has_nonnegative_coeffs())
        throw std::logic_error("c_coefficient: sum is not a nonnegative polynomial");
    return total;
}

LaurentPoly rk_abelian(const Partition& lam, int N, int k) {
    if (k < 0) throw std::invalid_argument("rk_abelian: negative k");
    if (N < lam.part(1) + conjugate(lam).part(1))
        throw std::invalid_argument("rk_abelian: semilength too small for the abelian range");
    if (k > N - k) return LaurentPoly();
    DyckPath pi = DyckPath::from_partition(lam, N);
    LaurentPoly c = c_coefficient(pi, Partition{N - k, k});
    return c.shifted(lam.size() - (N - k) * k);
}

LaurentPoly stirling2_tableaux(int n, int k) {
    if (n < 1 || k < 1 || k > n)
        throw std::invalid_argument("stirling2_tableaux: requires 1 <= k <= n");
    std::string word;
    for (int i = 0; i < n; ++i) word += "NE";
    DyckPath pi(word);
    LaurentPoly total;
    for (const Partition& mu : partitions_of(n)) {
        if (mu.part(1) != k) continue;
        for (const PiTableau& T : enumerate_pi_syt(pi, mu)) {
            LaurentPoly term = LaurentPoly::monomial(1, n_prime(mu));
            for (int r = 2; r <= mu.length(); ++r)
                for (int c = 1; c <= mu.part(r); ++c)
                    term *= q_number(arm_less_pi(T, {r - 1, c}, T.entry({r, c})) + 1);
            total += term;
        }
    }
    return total;
}

} // namespace qrook
