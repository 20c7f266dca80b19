#include "qrook/dyck_path.hpp"

#include <algorithm>
#include <bit>

namespace qrook {

DyckPath::DyckPath(std::string_view word) : word_(word) {
    int north = 0, east = 0;
    for (char c : word_) {
        if (c == 'N') ++north;
        else if (c == 'E') ++east;
        else throw std::invalid_argument("DyckPath: step word may contain only 'N' and 'E'");
        if (east > north)
            throw std::invalid_argument("DyckPath: path dips below the diagonal");
    }
    if (north != east)
        throw std::invalid_argument("DyckPath: unequal numbers of N and E steps");
    n_ = north;

    // The i-th row of the shape (from the top) counts the E steps that
    // precede the (n+1-i)-th N step.
    std::vector<int> north_positions;
    int x = 0;
    for (char c : word_) {
        if (c == 'E') ++x;
        else north_positions.push_back(x);
    }
    std::reverse(north_positions.begin(), north_positions.end());
    shape_ = Partition(std::move(north_positions));

    conj_.assign(n_, 0);
    Partition conj = conjugate(shape_);
    for (int i = 1; i <= n_; ++i) conj_[i - 1] = conj.part(i);
}

DyckPath DyckPath::from_partition(const Partition& lam, int n) {
    if (n < 0) throw std::invalid_argument("DyckPath::from_partition: negative semilength");
    for (int i = 1; i <= std::max(n, lam.length()); ++i)
        if (lam.part(i) > n - i)
            throw std::invalid_argument(
                "DyckPath::from_partition: partition does not fit under the staircase");
    std::string word;
    int x = 0;
    for (int i = n; i >= 1; --i) {
        word.append(lam.part(i) - x, 'E');
        x = lam.part(i);
        word.push_back('N');
    }
    word.append(n - x, 'E');
    return DyckPath(word);
}

bool DyckPath::area_contains(int i, int j) const {
    if (i < 1 || j <= i || j > n_) return false;
    return j <= n_ - conj_[i - 1];
}

int DyckPath::area_size() const { return n_ * (n_ - 1) / 2 - shape_.size(); }

std::vector<std::pair<int, int>> DyckPath::area_cells() const {
    std::vector<std::pair<int, int>> out;
    for (int i = 1; i <= n_; ++i)
        for (int j = i + 1; j <= n_ - conj_[i - 1]; ++j)
            out.emplace_back(i, j);
    return out;
}

bool DyckPath::less(int i, int j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_) return false;
    return i < j && j > n_ - conj_[i - 1];
}

DyckPath reverse_path(const DyckPath& pi) {
    std::string word(pi.word().rbegin(), pi.word().rend());
    for (char& c : word) c = (c == 'N') ? 'E' : 'N';
    return DyckPath(word);
}

DyckPath concat(const DyckPath& pi, const DyckPath& eta) {
    return DyckPath(pi.word() + eta.word());
}

std::vector<int> hessenberg(const DyckPath& pi) {
    const int n = pi.semilength();
    std::vector<int> m(n);
    for (int i = 1; i <= n; ++i) m[i - 1] = n - pi.shape().part(i);
    return m;
}

PiPoset::PiPoset(const DyckPath& pi) : n_(pi.semilength()) {
    Partition conj = conjugate(pi.shape());
    conj_.assign(n_, 0);
    for (int i = 1; i <= n_; ++i) conj_[i - 1] = conj.part(i);
}

bool PiPoset::less(int i, int j) const {
    if (i < 1 || j < 1 || i > n_ || j > n_) return false;
    return i < j && j > n_ - conj_[i - 1];
}

Partition greene_shape(const DyckPath& pi) {
    const int n = pi.semilength();
    if (n > 12) throw std::invalid_argument("greene_shape: semilength exceeds bound 12");
    if (n == 0) return Partition{};

    // comp[v]: elements comparable to v (either direction), as a bitmask.
    std::vector<unsigned> comp(n, 0);
    for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j)
            if (pi.less(i, j) || pi.less(j, i)) comp[i - 1] |= 1u << (j - 1);

    // width[S]: the largest antichain inside S.  By Dilworth's theorem S
    // is a union of k chains exactly when width[S] <= k.
    const unsigned full = (1u << n) - 1;
    std::vector<signed char> width(full + 1, 0);
    for (unsigned s = 1; s <= full; ++s) {
        const int v = std::countr_zero(s);
        const unsigned rest = s & (s - 1);
        width[s] = std::max<signed char>(width[rest],
                                         static_cast<signed char>(1 + width[rest & ~comp[v]]));
    }

    // chain_union[k]: maximum size of a union of k chains.
    std::vector<int> chain_union(n + 1, 0);
    for (unsigned s = 0; s <= full; ++s) {
        const int members = std::popcount(s);
        if (members > chain_union[width[s]]) chain_union[width[s]] = members;
    }
    for (int k = 1; k <= n; ++k)
        chain_union[k] = std::max(chain_union[k], chain_union[k - 1]);

    std::vector<int> conj_parts;
    for (int k = 1; k <= n; ++k) conj_parts.push_back(chain_union[k] - chain_union[k - 1]);
    for (std::size_t i = 1; i < conj_parts.size(); ++i)
        if (conj_parts[i] > conj_parts[i - 1])
            throw std::logic_error("greene_shape: chain-union increments not weakly decreasing");
    return conjugate(Partition(std::move(conj_parts)));
}

namespace {

void extend_paths(std::string& word, int open, int remaining, std::vector<DyckPath>& out) {
    if (open == 0 && remaining == 0) {
        out.emplace_back(word);
        return;
    }
    if (remaining > 0) {
        word.push_back('N');
        extend_paths(word, open + 1, remaining - 1, out);
        word.pop_back();
    }
    if (open > 0) {
        word.push_back('E');
        extend_paths(word, open - 1, remaining, out);
        word.pop_back();
    }
}

} // namespace

std::vector<DyckPath> all_dyck_paths(int n) {
    if (n < 0) throw std::invalid_argument("all_dyck_paths: negative semilength");
    std::vector<DyckPath> out;
    std::string word;
    extend_paths(word, 0, n, out);
    return out;
}

} // namespace qrook
