#include "qrook/rook.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

namespace qrook {

RookPlacement::RookPlacement(std::vector<Box> rooks, const Partition& lam)
    : rooks_(std::move(rooks)) {
    std::sort(rooks_.begin(), rooks_.end(),
              [](Box a, Box b) { return std::pair(a.row, a.col) < std::pair(b.row, b.col); });
    std::set<int> rows, cols;
    for (Box b : rooks_) {
        if (!box_in(lam, b))
            throw std::invalid_argument("RookPlacement: rook outside the diagram");
        if (!rows.insert(b.row).second || !cols.insert(b.col).second)
            throw std::invalid_argument("RookPlacement: two rooks attack each other");
    }
}

namespace {

void place_rows(const Partition& lam, int row, int remaining, std::vector<Box>& chosen,
                std::set<int>& used_cols, std::vector<RookPlacement>& out) {
    if (remaining == 0) {
        out.emplace_back(chosen, lam);
        return;
    }
    if (lam.length() - row + 1 < remaining) return;
    if (row > lam.length()) return;
    for (int col = 1; col <= lam.part(row); ++col)
        if (used_cols.insert(col).second) {
            chosen.push_back({row, col});
            place_rows(lam, row + 1, remaining - 1, chosen, used_cols, out);
            chosen.pop_back();
            used_cols.erase(col);
        }
    place_rows(lam, row + 1, remaining, chosen, used_cols, out);
}

} // namespace

std::vector<RookPlacement> placements(const Partition& lam, int k) {
    if (k < 0) throw std::invalid_argument("placements: negative rook count");
    std::vector<RookPlacement> out;
    std::vector<Box> chosen;
    std::set<int> used_cols;
    place_rows(lam, 1, k, chosen, used_cols, out);
    return out;
}

int inv_statistic(const RookPlacement& C, const Partition& lam) {
    int cancelled = 0;
    for (int r = 1; r <= lam.length(); ++r)
        for (int c = 1; c <= lam.part(r); ++c)
            for (Box rook : C.rooks())
                if ((rook.row == r && rook.col >= c) || (rook.col == c && rook.row >= r)) {
                    ++cancelled;
                    break;
                }
    return lam.size() - cancelled;
}

LaurentPoly rk_bruteforce(const Partition& lam, int k) {
    if (lam.size() > 30)
        throw std::invalid_argument("rk_bruteforce: diagram exceeds enumeration bound 30");
    LaurentPoly total;
    for (const RookPlacement& C : placements(lam, k))
        total += LaurentPoly::monomial(1, inv_statistic(C, lam));
    return total;
}

namespace {

LaurentPoly rk_rec_impl(std::vector<int> parts, int k,
                        std::map<std::pair<std::vector<int>, int>, LaurentPoly>& memo) {
    if (k < 0) return LaurentPoly();
    const int len = static_cast<int>(parts.size());
    const int first = len ? parts.front() : 0;
    if (k > first || k > len) return LaurentPoly();
    if (k == 0) {
        int cells = 0;
        for (int p : parts) cells += p;
        return LaurentPoly::monomial(1, cells);
    }
    auto key = std::pair(parts, k);
    if (auto it = memo.find(key); it != memo.end()) return it->second;

    std::vector<int> rest(parts.begin() + 1, parts.end());
    LaurentPoly value = rk_rec_impl(rest, k, memo).shifted(first - k) +
                        q_number(first - k + 1) * rk_rec_impl(rest, k - 1, memo);
    memo.emplace(std::move(key), value);
    return value;
}

} // namespace

LaurentPoly rk_recursion(const Partition& lam, int k) {
    std::map<std::pair<std::vector<int>, int>, LaurentPoly> memo;
    return rk_rec_impl(lam.parts(), k, memo);
}

LaurentPoly rk_rectangle(int a, int b, int i) {
    if (a < 0 || b < 0) throw std::invalid_argument("rk_rectangle: negative dimensions");
    if (i < 0 || i > std::min(a, b)) return LaurentPoly();
    LaurentPoly value = LaurentPoly::monomial(1, (a - i) * (b - i)) * q_binomial(b, i);
    for (int j = a - i + 1; j <= a; ++j) value *= q_number(j);
    return value;
}

LaurentPoly rk_last(const Partition& lam) {
    const int len = lam.length();
    LaurentPoly value(1);
    for (int i = 1; i <= len; ++i) value *= q_number(lam.part(len - i + 1) - i + 1);
    return value;
}

LaurentPoly q_stirling2(int n, int k) {
    if (n < 0) throw std::invalid_argument("q_stirling2: negative n");
    if (k < 0 || k > n) return LaurentPoly();
    // row[j] = S(i, j) while sweeping i upward; S(i, 0) = 0 once i > 0.
    std::vector<LaurentPoly> row(k + 1);
    row[0] = LaurentPoly(1);
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j)
            row[j] = row[j - 1].shifted(j - 1) + q_number(j) * row[j];
        row[0] = LaurentPoly();
    }
    return row[k];
}

LaurentPoly q_stirling1(int n, int k) {
    if (n < 0) throw std::invalid_argument("q_stirling1: negative n");
    if (k < 0 || k > n) return LaurentPoly();
    // Coefficients of prod_{i=0}^{n-1} (1 + [i] z) in z.
    std::vector<LaurentPoly> coeff = {LaurentPoly(1)};
    for (int i = 0; i < n; ++i) {
        coeff.emplace_back();
        for (int d = static_cast<int>(coeff.size()) - 1; d >= 1; --d)
            coeff[d] += q_number(i) * coeff[d - 1];
    }
    return coeff[n - k];
}

RationalFn q_hit(const Partition& lam, int m, int n, int k) {
    if (n > m) throw std::invalid_argument("q_hit: requires n <= m");
    if (n < 0 || k < 0) throw std::invalid_argument("q_hit: negative argument");
    if (lam.part(1) > m || lam.length() > n)
        throw std::invalid_argument("q_hit: shape does not fit the m x n rectangle");

    LaurentPoly sum;
    for (int i = k; i <= n; ++i) {
        LaurentPoly term = rk_recursion(lam, i) * q_factorial(m - i) * q_binomial(i, k);
        term = term.shifted(m * i - i * (i - 1) / 2);
        if ((i + k) % 2) sum -= term;
        else sum += term;
    }
    sum = sum.shifted(k * (k - 1) / 2 - lam.size());
    RationalFn h = RationalFn(sum) / RationalFn(q_factorial(m - n));
    if (!h.is_laurent())
        throw std::logic_error("q_hit: value failed to reduce to a Laurent polynomial");
    return h;
}

} // namespace qrook
