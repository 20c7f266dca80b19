#include "qrook/verify.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

#include "qrook/dyck_path.hpp"
#include "qrook/fq_count.hpp"
#include "qrook/llt.hpp"
#include "qrook/partition.hpp"
#include "qrook/pi_tableau.hpp"
#include "qrook/qalg.hpp"
#include "qrook/rook.hpp"
#include "qrook/sym_func.hpp"
#include "qrook/text_io.hpp"

namespace qrook {
namespace {

std::string render(const LaurentPoly& p) { return to_string(p); }
std::string render(const RationalFn& f) { return to_string(f); }
std::string render(const SymFunc& f) { return symfunc_to_json(f).dump(); }
std::string render(const Int& v) { return v.str(); }

template <typename T>
void add_case(VerifyReport& rep, std::string identity, std::string input,
              const T& left, const T& right) {
  rep.cases.push_back({std::move(identity), std::move(input), left == right,
                       render(left), render(right)});
}

std::string path_input(const DyckPath& pi) { return "path " + pi.word(); }

std::string path_k_input(const DyckPath& pi, int k) {
  return path_input(pi) + ", k=" + std::to_string(k);
}

VerifyReport rook_suite(int n) {
  VerifyReport rep{"rook", {}};
  for (int m = 1; m <= n; ++m) {
    for (const DyckPath& pi : all_dyck_paths(m)) {
      const Partition lam = pi.shape();
      for (int k = 0; k <= m; ++k) {
        const LaurentPoly rec = rk_recursion(lam, k);
        add_case(rep, "recursion-matches-bruteforce", path_k_input(pi, k),
                 rec, rk_bruteforce(lam, k));
        add_case(rep, "tableaux-matches-recursion", path_k_input(pi, k),
                 rk_tableaux(pi, k), rec);
      }
    }
    for (int k = 0; k <= m; ++k) {
      add_case(rep, "stirling2-matches-staircase-rook",
               "n=" + std::to_string(m) + ", k=" + std::to_string(k),
               q_stirling2(m, k),
               rk_recursion(Partition::staircase(m), m - k));
    }
  }
  return rep;
}

VerifyReport llt_suite(int n) {
  VerifyReport rep{"llt", {}};
  for (int m = 1; m <= n; ++m) {
    for (const DyckPath& pi : all_dyck_paths(m)) {
      const SymFunc chi = llt_chi(pi);
      add_case(rep, "reversal-invariance", path_input(pi), chi,
               llt_chi(reverse_path(pi)));
      add_case(rep, "omega-matches-reversed-llt", path_input(pi), omega(chi),
               llt_chi_tilde(pi));

      const LLTExpansion exp = expand_c(pi);
      const LLTExpansion tilde = expand_ctilde(pi);
      const int area = pi.area_size();
      for (const Partition& mu : partitions_of(m)) {
        LaurentPoly from_exp;
        if (const auto it = exp.coeffs.find(mu); it != exp.coeffs.end()) {
          from_exp = it->second;
        }
        add_case(rep, "whittaker-coefficient-matches-tableaux",
                 path_input(pi) + ", mu=" + to_string(mu), from_exp,
                 c_coefficient(pi, mu));
      }
      for (int k = 0; k <= m; ++k) {
        LaurentPoly rows;
        LaurentPoly rows_tilde;
        for (const Partition& mu : partitions_of(m)) {
          if (mu.part(1) != m - k) continue;
          if (const auto it = exp.coeffs.find(mu); it != exp.coeffs.end()) {
            rows += it->second.shifted(n_prime(mu) - area);
          }
          if (const auto it = tilde.coeffs.find(mu);
              it != tilde.coeffs.end()) {
            rows_tilde += it->second;
          }
        }
        const LaurentPoly rk = rk_recursion(pi.shape(), k);
        add_case(rep, "whittaker-row-sums-match-rook", path_k_input(pi, k),
                 rows, rk);
        add_case(rep, "reversed-row-sums-match-rook", path_k_input(pi, k),
                 rows_tilde, rk.inverted());
      }
    }
  }
  return rep;
}

VerifyReport abelian_suite(int n) {
  VerifyReport rep{"abelian", {}};
  for (const Partition& lam : partitions_in_box(3, 3)) {
    for (int k = 0; k <= 3; ++k) {
      add_case(rep, "single-shape-reduction",
               "shape " + to_string(lam) + ", N=6, k=" + std::to_string(k),
               rk_abelian(lam, 6, k), rk_recursion(lam, k));
    }
  }
  for (int mr = 1; mr <= n; ++mr) {
    for (int nr = 1; nr <= mr && mr + nr <= n; ++nr) {
      for (const Partition& lam : partitions_in_box(mr, nr)) {
        const bool ok = guay_paquet_decomposition(lam, mr, nr);
        rep.cases.push_back({"guay-paquet-decomposition",
                             "shape " + to_string(lam) + ", m=" +
                                 std::to_string(mr) + ", n=" +
                                 std::to_string(nr),
                             ok, ok ? "equal" : "differs", "equal"});
      }
    }
  }
  for (const auto& [mm, nn] : {std::pair{3, 3}, std::pair{4, 3}}) {
    const RationalFn full =
        RationalFn(q_factorial(mm)) / RationalFn(q_factorial(mm - nn));
    for (const Partition& lam : partitions_in_box(mm, nn)) {
      const std::string where = "shape " + to_string(lam) + " in " +
                                std::to_string(mm) + "x" + std::to_string(nn);
      std::vector<RationalFn> hits;
      RationalFn total;
      for (int k = 0; k <= nn; ++k) {
        hits.push_back(q_hit(lam, mm, nn, k));
        total += hits.back();
      }
      add_case(rep, "hit-numbers-total", where, total, full);
      for (int k = 0; k <= nn; ++k) {
        RationalFn sum;
        for (int j = k; j <= nn; ++j) {
          sum += hits[j] * RationalFn(q_binomial(j, k).shifted(-k * (j - k)));
        }
        const RationalFn back =
            RationalFn(LaurentPoly::monomial(1, lam.size() - mm * k)) *
            (RationalFn(q_factorial(mm - nn)) /
             RationalFn(q_factorial(mm - k))) *
            sum;
        add_case(rep, "hit-rook-inversion", where + ", k=" + std::to_string(k),
                 back, RationalFn(rk_recursion(lam, k)));
      }
    }
  }
  return rep;
}

VerifyReport enrook_suite(int n) {
  VerifyReport rep{"enrook", {}};
  for (int m = 1; m <= n; ++m) {
    for (const DyckPath& pi : all_dyck_paths(m)) {
      bool ok = true;
      std::string note = "nonnegative";
      try {
        const LaurentPoly lhs = enrook_lhs(pi);
        add_case(rep, "enrook-sum-matches-product", path_input(pi), lhs,
                 g_functional(pi));
        add_case(rep, "enrook-matches-complement-rooks", path_input(pi), lhs,
                 rk_last(complement(pi.shape(), m, m)));
      } catch (const std::logic_error& e) {
        ok = false;
        note = e.what();
      }
      rep.cases.push_back({"elementary-coefficients-nonnegative",
                           path_input(pi), ok, note, "nonnegative"});
    }
    const DyckPath rect =
        DyckPath(std::string(m, 'N') + std::string(m, 'E'));
    const LLTExpansion full = expand_b(rect);
    LaurentPoly factorial_sum;
    for (int k = 1; k <= m; ++k) {
      LaurentPoly row;
      for (const auto& [mu, b] : full.coeffs) {
        if (mu.length() != k) continue;
        row += b;
        factorial_sum += b.shifted(m - k);
      }
      add_case(rep, "stirling1-row-sums",
               "n=" + std::to_string(m) + ", k=" + std::to_string(k), row,
               q_stirling1(m, k));
    }
    add_case(rep, "weighted-total-is-factorial", "n=" + std::to_string(m),
             factorial_sum, q_factorial(m));
  }

  const LaurentPoly one_plus_q = LaurentPoly(1) + LaurentPoly::monomial(1, 1);
  for (int m = 2; m <= n; ++m) {
    for (const DyckPath& pi : all_dyck_paths(m)) {
      const std::vector<int> mid = pi.shape().parts();
      const int len = static_cast<int>(mid.size());
      auto fits = [m](const std::vector<int>& parts) {
        for (std::size_t i = 0; i < parts.size(); ++i) {
          if (parts[i] < 0) return false;
          if (i + 1 < parts.size() && parts[i] < parts[i + 1]) return false;
          if (parts[i] > m - static_cast<int>(i) - 1) return false;
        }
        return true;
      };
      auto check_triple = [&](const std::vector<int>& up,
                              const std::vector<int>& down, int pos) {
        if (!fits(up) || !fits(down)) return;
        const LaurentPoly left = one_plus_q * g_functional(pi);
        const LaurentPoly right =
            LaurentPoly::monomial(1, 1) *
                g_functional(DyckPath::from_partition(Partition(up), m)) +
            g_functional(DyckPath::from_partition(Partition(down), m));
        add_case(rep, "modular-law",
                 path_input(pi) + ", part=" + std::to_string(pos), left,
                 right);
      };
      for (int s = 1; s <= len; ++s) {
        std::vector<int> up = mid;
        std::vector<int> down = mid;
        up[s - 1] += 1;
        down[s - 1] -= 1;
        check_triple(up, down, s);
      }
      for (int r = 1; r <= len; ++r) {
        const int next = r < len ? mid[r] : 0;
        if (mid[r - 1] - next != 1) continue;
        std::vector<int> down = mid;
        down[r - 1] -= 1;
        std::vector<int> up = mid;
        if (r < len) {
          up[r] += 1;
        } else {
          up.push_back(1);
        }
        check_triple(up, down, r);
      }
    }
  }
  return rep;
}

VerifyReport fq_suite(int n) {
  VerifyReport rep{"fq", {}};
  const Int budget = Int(1) << 20;
  const int depth = std::min(n, 6);
  for (int m = 1; m <= depth; ++m) {
    for (const DyckPath& pi : all_dyck_paths(m)) {
      const int cells = pi.shape().size();
      for (const int p : {2, 3}) {
        Int fillings = 1;
        for (int c = 0; c < cells; ++c) fillings *= p;
        if (fillings > budget) continue;
        const std::vector<Int> counts = count_by_rank(pi, p);
        Int total = 0;
        for (int k = 0; k <= m; ++k) {
          add_case(rep, "rank-count-matches-formula",
                   path_input(pi) + ", p=" + std::to_string(p) + ", k=" +
                       std::to_string(k),
                   counts[k], count_by_formula(pi, p, k));
          total += counts[k];
        }
        add_case(rep, "rank-counts-total",
                 path_input(pi) + ", p=" + std::to_string(p), total,
                 fillings);
      }
      const auto dual = expand_in(llt_chi_tilde(pi), Basis::Wtilde);
      RationalFn unit_sum;
      for (const auto& [mu, c] : dual) unit_sum += c;
      add_case(rep, "unit-dual-coefficient-sum", path_input(pi), unit_sum,
               RationalFn(1));
    }
  }
  return rep;
}

}  // namespace

int VerifyReport::passed() const {
  return static_cast<int>(
      std::count_if(cases.begin(), cases.end(),
                    [](const VerifyCase& c) { return c.pass; }));
}

int VerifyReport::failed() const {
  return static_cast<int>(cases.size()) - passed();
}

const std::vector<std::string>& verify_suite_names() {
  static const std::vector<std::string> names{"abelian", "enrook", "fq",
                                              "llt", "rook"};
  return names;
}

VerifyReport run_suite(const std::string& suite, int n) {
  if (n < 1) throw std::invalid_argument("run_suite: depth must be >= 1");
  if (suite == "abelian") return abelian_suite(n);
  if (suite == "enrook") return enrook_suite(n);
  if (suite == "fq") return fq_suite(n);
  if (suite == "llt") return llt_suite(n);
  if (suite == "rook") return rook_suite(n);
  throw std::invalid_argument("run_suite: unknown suite '" + suite + "'");
}

std::vector<VerifyReport> run_verification(const std::string& suite, int n) {
  std::vector<VerifyReport> out;
  if (suite == "all") {
    for (const std::string& name : verify_suite_names()) {
      out.push_back(run_suite(name, n));
    }
  } else {
    out.push_back(run_suite(suite, n));
  }
  return out;
}

}  // namespace qrook
