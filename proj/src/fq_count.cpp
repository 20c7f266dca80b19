#include "qrook/fq_count.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

#include "qrook/partition.hpp"
#include "qrook/rook.hpp"

namespace qrook {
namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Int int_pow(Int base, int e) {
  Int out = 1;
  for (int i = 0; i < e; ++i) out *= base;
  return out;
}

int mod_inverse(int a, int p) {
  for (int x = 1; x < p; ++x) {
    if (a * x % p == 1) return x;
  }
  throw std::logic_error("mod_inverse: argument is not a unit");
}

int rank_mod_p(std::vector<std::vector<int>> a, int p) {
  const int rows = static_cast<int>(a.size());
  const int cols = rows == 0 ? 0 : static_cast<int>(a[0].size());
  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int pivot = -1;
    for (int r = rank; r < rows; ++r) {
      if (a[r][col] != 0) {
        pivot = r;
        break;
      }
    }
    if (pivot < 0) continue;
    std::swap(a[rank], a[pivot]);
    const int inv = mod_inverse(a[rank][col], p);
    for (int r = rank + 1; r < rows; ++r) {
      if (a[r][col] == 0) continue;
      const int factor = a[r][col] * inv % p;
      for (int c = col; c < cols; ++c) {
        a[r][c] = ((a[r][c] - factor * a[rank][c]) % p + p) % p;
      }
    }
    ++rank;
  }
  return rank;
}

}  // namespace

std::vector<Int> count_by_rank(const DyckPath& pi, int p) {
  if (!is_prime(p)) {
    throw std::invalid_argument("count_by_rank: p must be prime");
  }
  const Partition lam = pi.shape();
  const int cells = static_cast<int>(lam.size());
  if (int_pow(p, cells) > Int(1) << 24) {
    throw std::invalid_argument(
        "count_by_rank: too many fillings to enumerate");
  }

  std::vector<std::pair<int, int>> support;
  for (int i = 1; i <= lam.length(); ++i) {
    for (int j = 1; j <= lam.part(i); ++j) {
      support.emplace_back(i - 1, j - 1);
    }
  }

  const int n = static_cast<int>(pi.semilength());
  std::vector<Int> counts(n + 1, Int(0));
  const int rows = lam.length();
  const int cols = lam.part(1);
  std::vector<std::vector<int>> matrix(rows, std::vector<int>(cols, 0));
  std::vector<int> odometer(cells, 0);
  while (true) {
    for (int i = 0; i < cells; ++i) {
      matrix[support[i].first][support[i].second] = odometer[i];
    }
    counts[rank_mod_p(matrix, p)] += 1;
    int pos = 0;
    while (pos < cells && odometer[pos] == p - 1) odometer[pos++] = 0;
    if (pos == cells) break;
    ++odometer[pos];
  }
  return counts;
}

Int count_by_formula(const DyckPath& pi, int p, int k) {
  if (!is_prime(p)) {
    throw std::invalid_argument("count_by_formula: p must be prime");
  }
  if (k < 0) throw std::invalid_argument("count_by_formula: negative rank");
  const Partition lam = pi.shape();
  const LaurentPoly rk = rk_recursion(lam, k);
  if (rk.is_zero()) return 0;
  const int cells = static_cast<int>(lam.size());
  const Rat value = rk.inverted().evaluate(Rat(p));
  const Rat total = Rat(int_pow(p - 1, k) * int_pow(p, cells - k)) * value;
  if (denominator(total) != 1) {
    throw std::logic_error("count_by_formula: count is not an integer");
  }
  return numerator(total);
}

}  // namespace qrook
