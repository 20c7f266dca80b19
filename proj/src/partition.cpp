#include "qrook/partition.hpp"

#include <algorithm>
#include <numeric>

namespace qrook {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    while (!parts_.empty() && parts_.back() == 0) parts_.pop_back();
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] <= 0)
            throw std::invalid_argument("Partition: parts must be positive");
        if (i > 0 && parts_[i] > parts_[i - 1])
            throw std::invalid_argument("Partition: parts must be weakly decreasing");
    }
}

Partition Partition::staircase(int n) {
    if (n < 0) throw std::invalid_argument("Partition::staircase: negative n");
    std::vector<int> parts;
    for (int i = n - 1; i >= 1; --i) parts.push_back(i);
    return Partition(std::move(parts));
}

int Partition::size() const {
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

int Partition::part(int i) const {
    if (i < 1) throw std::invalid_argument("Partition::part: index is 1-based");
    return i <= length() ? parts_[i - 1] : 0;
}

bool Partition::contains(const Partition& inner) const {
    if (inner.length() > length()) return false;
    for (int i = 1; i <= inner.length(); ++i)
        if (inner.part(i) > part(i)) return false;
    return true;
}

bool box_in(const Partition& p, Box b) {
    return b.row >= 1 && b.col >= 1 && b.col <= p.part(b.row);
}

int arm(const Partition& p, Box b) {
    if (!box_in(p, b)) throw std::invalid_argument("arm: box outside diagram");
    return p.part(b.row) - b.col;
}

int leg(const Partition& p, Box b) {
    if (!box_in(p, b)) throw std::invalid_argument("leg: box outside diagram");
    int count = 0;
    for (int r = b.row + 1; b.col <= p.part(r); ++r) ++count;
    return count;
}

Partition conjugate(const Partition& p) {
    std::vector<int> cols;
    for (int c = 1; c <= p.part(1); ++c) {
        int height = 0;
        while (height < p.length() && p.part(height + 1) >= c) ++height;
        cols.push_back(height);
    }
    return Partition(std::move(cols));
}

int n_prime(const Partition& p) {
    int total = 0;
    for (int part : p.parts()) total += part * (part - 1) / 2;
    return total;
}

Partition complement(const Partition& p, int m, int n) {
    if (p.part(1) > m || p.length() > n)
        throw std::invalid_argument("complement: partition does not fit the rectangle");
    std::vector<int> parts;
    for (int i = n; i >= 1; --i) parts.push_back(m - p.part(i));
    return Partition(std::move(parts));
}

bool dominance_leq(const Partition& a, const Partition& b) {
    if (a.size() != b.size())
        throw std::invalid_argument("dominance_leq: partitions must have equal size");
    int sa = 0, sb = 0;
    int len = std::max(a.length(), b.length());
    for (int i = 1; i <= len; ++i) {
        sa += a.part(i);
        sb += b.part(i);
        if (sa > sb) return false;
    }
    return true;
}

namespace {

void collect_partitions(int remaining, int max_part, std::vector<int>& prefix,
                        std::vector<Partition>& out) {
    if (remaining == 0) {
        out.emplace_back(prefix);
        return;
    }
    for (int part = std::min(remaining, max_part); part >= 1; --part) {
        prefix.push_back(part);
        collect_partitions(remaining - part, part, prefix, out);
        prefix.pop_back();
    }
}

} // namespace

std::vector<Partition> partitions_of(int n) {
    if (n < 0) throw std::invalid_argument("partitions_of: negative n");
    std::vector<Partition> out;
    std::vector<int> prefix;
    collect_partitions(n, n, prefix, out);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Partition> partitions_in_box(int m, int n) {
    if (m < 0 || n < 0) throw std::invalid_argument("partitions_in_box: negative bounds");
    std::vector<Partition> out;
    std::vector<int> stack;
    // Depth-first over weakly decreasing part lists bounded by m, length <= n.
    auto rec = [&](auto&& self, int max_part) -> void {
        out.emplace_back(stack);
        if (static_cast<int>(stack.size()) == n) return;
        for (int part = max_part; part >= 1; --part) {
            stack.push_back(part);
            self(self, part);
            stack.pop_back();
        }
    };
    rec(rec, m);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace qrook
