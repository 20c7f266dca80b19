#pragma once

#include "qrook/partition.hpp"

#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qrook {

/// A Dyck path of semilength n: a word over {N, E} with n of each letter
/// in which every prefix has at least as many N as E steps (the path from
/// (0,0) to (n,n) stays weakly above the diagonal).
///
/// Two derived views are kept in sync with the step word:
///   - shape(): the partition of cells lying above the path in the n x n
///     grid, read row by row from the top; it always fits under the
///     staircase (n-1, ..., 1).
///   - the area relation: (i,j) with i < j is an area pair exactly when
///     the cell is below the path and strictly above the diagonal, which
///     in terms of the shape means j <= n - shape()'_i.
///
/// The natural order of the path compares labels i < j with (i,j) not an
/// area pair; see less().
class DyckPath {
public:
    explicit DyckPath(std::string_view word);

    /// The unique path in D_n whose shape is lam.
    /// \throws std::invalid_argument when lam_i > n - i for some i.
    static DyckPath from_partition(const Partition& lam, int n);

    int semilength() const { return n_; }
    const std::string& word() const { return word_; }
    const Partition& shape() const { return shape_; }

    /// Membership in the area pair set; arguments outside 1..n give false.
    bool area_contains(int i, int j) const;
    int area_size() const;
    /// All area pairs (i,j), i < j, in lexicographic order.
    std::vector<std::pair<int, int>> area_cells() const;

    /// The path order: i comes before j when i < j and (i,j) is not an
    /// area pair.
    bool less(int i, int j) const;

    bool operator==(const DyckPath&) const = default;

private:
    std::string word_;
    int n_ = 0;
    Partition shape_;
    std::vector<int> conj_;  // conjugate of shape_, padded to length n
};

inline Partition path_to_partition(const DyckPath& pi) { return pi.shape(); }
inline DyckPath partition_to_path(const Partition& lam, int n) {
    return DyckPath::from_partition(lam, n);
}

/// Read the word right to left, swapping N and E.
DyckPath reverse_path(const DyckPath& pi);

/// Word concatenation; the second path's grid sits on top of the first's.
DyckPath concat(const DyckPath& pi, const DyckPath& eta);

/// m(i) = n - shape()_i, a nondecreasing list with m(i) >= i.
std::vector<int> hessenberg(const DyckPath& pi);

/// The poset of labels 1..n ordered by DyckPath::less.
class PiPoset {
public:
    explicit PiPoset(const DyckPath& pi);
    int size() const { return n_; }
    bool less(int i, int j) const;

private:
    int n_;
    std::vector<int> conj_;
};

/// Greene shape P of the path order: the partial sums of the conjugate
/// P'_1 + ... + P'_k equal the maximum size of a union of k chains.
/// Exhaustive over subsets; requires semilength <= 12.
Partition greene_shape(const DyckPath& pi);

/// All Dyck paths of semilength n, in lexicographic word order (N < E).
std::vector<DyckPath> all_dyck_paths(int n);

} // namespace qrook
