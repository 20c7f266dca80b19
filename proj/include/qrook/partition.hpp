#pragma once

#include <compare>
#include <initializer_list>
#include <stdexcept>
#include <vector>

namespace qrook {

/// An integer partition: a weakly decreasing list of positive parts.
/// Constructors accept trailing zeros and drop them, so the empty
/// partition is spelled Partition{} or Partition({0,0}).
class Partition {
public:
    Partition() = default;
    explicit Partition(std::vector<int> parts);
    Partition(std::initializer_list<int> parts) : Partition(std::vector<int>(parts)) {}

    /// The staircase (n-1, n-2, ..., 1).
    static Partition staircase(int n);

    const std::vector<int>& parts() const { return parts_; }
    /// Number of cells.
    int size() const;
    /// Number of (nonzero) parts.
    int length() const { return static_cast<int>(parts_.size()); }
    /// 1-based part access; zero beyond the last part.
    int part(int i) const;
    bool empty() const { return parts_.empty(); }
    /// Diagram containment: inner fits inside *this row by row.
    bool contains(const Partition& inner) const;

    auto operator<=>(const Partition&) const = default;

private:
    std::vector<int> parts_;
};

/// A cell of a Young diagram in English notation, 1-based: row counts
/// from the top, col from the left.
struct Box {
    int row = 0;
    int col = 0;
    friend bool operator==(Box, Box) = default;
};

inline int coarm(Box b) { return b.col - 1; }
inline int coleg(Box b) { return b.row - 1; }
inline Box up(Box b) { return {b.row - 1, b.col}; }

bool box_in(const Partition& p, Box b);
/// Cells strictly to the right of b in its row.
int arm(const Partition& p, Box b);
/// Cells strictly below b in its column.
int leg(const Partition& p, Box b);

Partition conjugate(const Partition& p);

/// Sum over parts of C(part, 2); equals the standard statistic n(.) of
/// the conjugate partition.
int n_prime(const Partition& p);

/// Complement of p inside the m x n rectangle (m = row length, n = row
/// count): the parts m - p_n, ..., m - p_1.  Requires p to fit in the
/// rectangle.
Partition complement(const Partition& p, int m, int n);

/// Dominance order on partitions of equal size: every prefix sum of a is
/// <= the corresponding prefix sum of b.
/// \throws std::invalid_argument when |a| != |b|.
bool dominance_leq(const Partition& a, const Partition& b);

/// All partitions of n, sorted by operator< (a fixed, deterministic order).
std::vector<Partition> partitions_of(int n);

/// All partitions with parts <= m and at most n parts, sorted.
std::vector<Partition> partitions_in_box(int m, int n);

} // namespace qrook
