#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <cstdint>
#include <cstdlib>
#include <iostream>
#include <limits>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "qrook/dyck_path.hpp"
#include "qrook/fq_count.hpp"
#include "qrook/llt.hpp"
#include "qrook/partition.hpp"
#include "qrook/pi_tableau.hpp"
#include "qrook/qalg.hpp"
#include "qrook/rook.hpp"
#include "qrook/sym_func.hpp"
#include "qrook/text_io.hpp"
#include "qrook/verify.hpp"

namespace {

using nlohmann::json;
using qrook::Basis;
using qrook::DyckPath;
using qrook::Int;
using qrook::LaurentPoly;
using qrook::Partition;
using qrook::RationalFn;
using qrook::SymFunc;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

int depth_cap() {
  const char* env = std::getenv("QROOK_MAX_N");
  if (env == nullptr || *env == '\0') {
    return std::numeric_limits<int>::max();
  }
  const std::string text(env);
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(text, &used);
  } catch (const std::exception&) {
    throw UsageError("QROOK_MAX_N: not a number: '" + text + "'");
  }
  if (used != text.size() || value < 0) {
    throw UsageError("QROOK_MAX_N: not a depth: '" + text + "'");
  }
  return value;
}

void check_cap(int semilength) {
  if (semilength > depth_cap()) {
    throw UsageError("semilength " + std::to_string(semilength) +
                     " exceeds QROOK_MAX_N");
  }
}

int minimal_semilength(const Partition& lam) {
  int n = 0;
  for (int i = 1; i <= lam.length(); ++i) {
    n = std::max(n, lam.part(i) + i);
  }
  return n;
}

DyckPath resolve_path(const std::string& word, const std::string& shape,
                      int semilength) {
  DyckPath pi = [&] {
    if (!word.empty()) return DyckPath(word);
    if (shape.empty()) throw UsageError("provide --path or --shape");
    const Partition lam = qrook::parse_partition(shape);
    const int n = semilength >= 0 ? semilength : minimal_semilength(lam);
    return DyckPath::from_partition(lam, n);
  }();
  check_cap(pi.semilength());
  return pi;
}

std::vector<int> parse_int_list(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string token;
  while (std::getline(ss, token, ',')) {
    std::size_t used = 0;
    int value = 0;
    try {
      value = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw UsageError("not an integer: '" + token + "'");
    }
    if (used != token.size()) {
      throw UsageError("not an integer: '" + token + "'");
    }
    out.push_back(value);
  }
  if (out.empty()) throw UsageError("empty integer list");
  return out;
}

json int_to_json(const Int& v) {
  static const Int lo = std::numeric_limits<std::int64_t>::min();
  static const Int hi = std::numeric_limits<std::int64_t>::max();
  if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
  return v.str();
}

void emit(bool as_json, const json& j, const std::string& text) {
  if (as_json) {
    std::cout << j.dump() << "\n";
  } else {
    std::cout << text << "\n";
  }
}

std::string symfunc_text(const SymFunc& f) {
  if (f.coeffs().empty()) return "0";
  std::string out;
  for (const auto& [lam, c] : f.coeffs()) {
    if (!out.empty()) out += "\n";
    out += qrook::basis_name(f.basis()) + "[" + qrook::to_string(lam) +
           "]: " + qrook::to_string(c);
  }
  return out;
}

std::string join_ints(const std::vector<int>& v) {
  std::string out;
  for (int x : v) {
    if (!out.empty()) out += ",";
    out += std::to_string(x);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "exact q-rook polynomials, unicellular LLT functions, and their "
      "verification harness"};
  app.require_subcommand(1);

  auto* rook_cmd =
      app.add_subcommand("rook", "q-rook polynomial R_k of a board");
  std::string rook_shape, rook_path, rook_method = "rec";
  int rook_k = 0;
  bool rook_json = false;
  rook_cmd->add_option("--shape", rook_shape, "board shape, e.g. 4,3,3");
  rook_cmd->add_option("--path", rook_path,
                       "NE word; its shape becomes the board");
  rook_cmd->add_option("--k", rook_k, "number of rooks")->required();
  rook_cmd->add_option("--method", rook_method, "brute | rec | tableaux")
      ->check(CLI::IsMember({"brute", "rec", "tableaux"}));
  rook_cmd->add_flag("--json", rook_json, "emit JSON");

  auto* stirling_cmd =
      app.add_subcommand("stirling", "q-Stirling numbers of both kinds");
  int st_kind = 2, st_n = 0, st_k = 0;
  bool st_json = false;
  stirling_cmd->add_option("--kind", st_kind, "1 or 2")->required();
  stirling_cmd->add_option("--n", st_n)->required();
  stirling_cmd->add_option("--k", st_k)->required();
  stirling_cmd->add_flag("--json", st_json, "emit JSON");

  auto* hit_cmd =
      app.add_subcommand("hit", "q-hit number of a board in a rectangle");
  std::string hit_shape;
  int hit_m = 0, hit_n = 0, hit_k = 0;
  bool hit_json = false;
  hit_cmd->add_option("--shape", hit_shape)->required();
  hit_cmd->add_option("--m", hit_m, "rectangle width")->required();
  hit_cmd->add_option("--n", hit_n, "rectangle height")->required();
  hit_cmd->add_option("--k", hit_k, "number of hits")->required();
  hit_cmd->add_flag("--json", hit_json, "emit JSON");

  auto* coeff_cmd = app.add_subcommand(
      "coeff", "q-Whittaker / elementary expansion coefficients");
  std::string co_which, co_path, co_shape, co_mu;
  int co_semilength = -1;
  bool co_json = false;
  coeff_cmd->add_option("--which", co_which, "c | ctilde | b")
      ->required()
      ->check(CLI::IsMember({"c", "ctilde", "b"}));
  coeff_cmd->add_option("--path", co_path, "NE word");
  coeff_cmd->add_option("--shape", co_shape, "partition above the path");
  coeff_cmd->add_option("--semilength", co_semilength,
                        "grid size when --shape is used");
  coeff_cmd->add_option("--mu", co_mu, "restrict to one index partition");
  coeff_cmd->add_flag("--json", co_json, "emit JSON");

  auto* syt_cmd = app.add_subcommand(
      "syt", "standard Young tableaux compatible with the path order");
  std::string syt_path, syt_shape, syt_mu;
  int syt_semilength = -1;
  bool syt_json = false;
  syt_cmd->add_option("--path", syt_path, "NE word");
  syt_cmd->add_option("--shape", syt_shape, "partition above the path");
  syt_cmd->add_option("--semilength", syt_semilength,
                      "grid size when --shape is used");
  syt_cmd->add_option("--mu", syt_mu, "tableau shape")->required();
  syt_cmd->add_flag("--json", syt_json, "emit JSON");

  auto* llt_cmd = app.add_subcommand("llt", "unicellular LLT functions");
  llt_cmd->require_subcommand(1);
  auto* chi_cmd = llt_cmd->add_subcommand(
      "chi", "the LLT function in the monomial basis");
  std::string chi_path, chi_shape;
  int chi_semilength = -1;
  bool chi_tilde = false, chi_chromatic = false, chi_json = false;
  chi_cmd->add_option("--path", chi_path, "NE word");
  chi_cmd->add_option("--shape", chi_shape, "partition above the path");
  chi_cmd->add_option("--semilength", chi_semilength,
                      "grid size when --shape is used");
  auto* tilde_flag =
      chi_cmd->add_flag("--tilde", chi_tilde, "reversed coefficients");
  chi_cmd->add_flag("--chromatic", chi_chromatic, "proper words only")
      ->excludes(tilde_flag);
  chi_cmd->add_flag("--json", chi_json, "emit JSON");
  auto* expand_cmd =
      llt_cmd->add_subcommand("expand", "expansion in a chosen basis");
  std::string ex_path, ex_shape, ex_basis;
  int ex_semilength = -1;
  bool ex_tilde = false, ex_json = false;
  expand_cmd->add_option("--path", ex_path, "NE word");
  expand_cmd->add_option("--shape", ex_shape, "partition above the path");
  expand_cmd->add_option("--semilength", ex_semilength,
                         "grid size when --shape is used");
  expand_cmd
      ->add_option("--basis", ex_basis,
                   "m | e | h | p | s | W | Wtilde | Htilde0")
      ->required();
  expand_cmd->add_flag("--tilde", ex_tilde, "expand the reversed function");
  expand_cmd->add_flag("--json", ex_json, "emit JSON");

  auto* fq_cmd = app.add_subcommand(
      "fq", "matrices over a prime field supported on the shape, by rank");
  std::string fq_path, fq_shape;
  int fq_semilength = -1, fq_p = 0, fq_k = -1;
  bool fq_formula_only = false, fq_json = false;
  fq_cmd->add_option("--path", fq_path, "NE word");
  fq_cmd->add_option("--shape", fq_shape, "partition above the path");
  fq_cmd->add_option("--semilength", fq_semilength,
                     "grid size when --shape is used");
  fq_cmd->add_option("--p", fq_p, "field size, a prime")->required();
  fq_cmd->add_option("--k", fq_k, "restrict to one rank");
  fq_cmd->add_flag("--formula-only", fq_formula_only,
                   "skip the exhaustive enumeration");
  fq_cmd->add_flag("--json", fq_json, "emit JSON");

  auto* greene_cmd = app.add_subcommand(
      "greene", "chain/antichain shape of the path order");
  std::string gr_path, gr_shape;
  int gr_semilength = -1;
  bool gr_json = false;
  greene_cmd->add_option("--path", gr_path, "NE word");
  greene_cmd->add_option("--shape", gr_shape, "partition above the path");
  greene_cmd->add_option("--semilength", gr_semilength,
                         "grid size when --shape is used");
  greene_cmd->add_flag("--json", gr_json, "emit JSON");

  auto* convert_cmd = app.add_subcommand(
      "convert", "translate between path word, shape, and Hessenberg form");
  std::string cv_path, cv_shape, cv_hess;
  int cv_semilength = -1;
  bool cv_json = false;
  convert_cmd->add_option("--path", cv_path, "NE word");
  convert_cmd->add_option("--shape", cv_shape, "partition above the path");
  convert_cmd->add_option("--semilength", cv_semilength,
                          "grid size when --shape is used");
  convert_cmd->add_option("--hessenberg", cv_hess,
                          "nondecreasing values m(1),...,m(n)");
  convert_cmd->add_flag("--json", cv_json, "emit JSON");

  auto* verify_cmd =
      app.add_subcommand("verify", "run the identity verification suites");
  int v_n = 5;
  std::string v_suite = "all";
  bool v_json = false;
  verify_cmd->add_option("--n", v_n, "maximum semilength (default 5)")
      ->check(CLI::Range(1, 8));
  verify_cmd
      ->add_option("--suite", v_suite,
                   "all | abelian | enrook | fq | llt | rook")
      ->check(CLI::IsMember({"all", "abelian", "enrook", "fq", "llt",
                             "rook"}));
  verify_cmd->add_flag("--json", v_json, "emit JSON");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  auto do_rook = [&]() -> int {
    if (rook_k < 0) throw UsageError("--k must be nonnegative");
    if (rook_path.empty() && rook_shape.empty()) {
      throw UsageError("provide --path or --shape");
    }
    const Partition lam = [&] {
      if (rook_path.empty()) return qrook::parse_partition(rook_shape);
      const DyckPath pi(rook_path);
      check_cap(pi.semilength());
      return pi.shape();
    }();
    LaurentPoly value;
    if (rook_method == "brute") {
      value = qrook::rk_bruteforce(lam, rook_k);
    } else if (rook_method == "tableaux") {
      const int n = minimal_semilength(lam);
      check_cap(n);
      value = qrook::rk_tableaux(DyckPath::from_partition(lam, n), rook_k);
    } else {
      value = qrook::rk_recursion(lam, rook_k);
    }
    const json j{{"shape", qrook::to_string(lam)},
                 {"k", rook_k},
                 {"method", rook_method},
                 {"text", qrook::to_string(value)},
                 {"value", qrook::laurent_to_json(value)}};
    emit(rook_json, j, qrook::to_string(value));
    return 0;
  };

  auto do_stirling = [&]() -> int {
    if (st_kind != 1 && st_kind != 2) {
      throw UsageError("--kind must be 1 or 2");
    }
    const LaurentPoly value = st_kind == 1 ? qrook::q_stirling1(st_n, st_k)
                                           : qrook::q_stirling2(st_n, st_k);
    const json j{{"kind", st_kind},
                 {"n", st_n},
                 {"k", st_k},
                 {"text", qrook::to_string(value)},
                 {"value", qrook::laurent_to_json(value)}};
    emit(st_json, j, qrook::to_string(value));
    return 0;
  };

  auto do_hit = [&]() -> int {
    const RationalFn value =
        qrook::q_hit(qrook::parse_partition(hit_shape), hit_m, hit_n, hit_k);
    const json j{{"shape", hit_shape},
                 {"m", hit_m},
                 {"n", hit_n},
                 {"k", hit_k},
                 {"text", qrook::to_string(value)}};
    emit(hit_json, j, qrook::to_string(value));
    return 0;
  };

  auto do_coeff = [&]() -> int {
    const DyckPath pi = resolve_path(co_path, co_shape, co_semilength);
    const qrook::LLTExpansion exp =
        co_which == "c" ? qrook::expand_c(pi)
        : co_which == "ctilde" ? qrook::expand_ctilde(pi)
                               : qrook::expand_b(pi);
    if (!co_mu.empty()) {
      const Partition mu = qrook::parse_partition(co_mu);
      if (mu.size() != pi.semilength()) {
        throw UsageError("--mu must be a partition of the semilength");
      }
      LaurentPoly value;
      if (const auto it = exp.coeffs.find(mu); it != exp.coeffs.end()) {
        value = it->second;
      }
      const json j{{"which", co_which},
                   {"path", pi.word()},
                   {"mu", qrook::to_string(mu)},
                   {"text", qrook::to_string(value)},
                   {"value", qrook::laurent_to_json(value)}};
      emit(co_json, j, qrook::to_string(value));
      return 0;
    }
    json coeffs = json::object();
    std::string text;
    for (const auto& [mu, c] : exp.coeffs) {
      coeffs[qrook::to_string(mu)] = qrook::laurent_to_json(c);
      if (!text.empty()) text += "\n";
      text += qrook::to_string(mu) + ": " + qrook::to_string(c);
    }
    if (text.empty()) text = "0";
    const json j{{"which", co_which}, {"path", pi.word()},
                 {"coeffs", coeffs}};
    emit(co_json, j, text);
    return 0;
  };

  auto do_syt = [&]() -> int {
    const DyckPath pi = resolve_path(syt_path, syt_shape, syt_semilength);
    const Partition mu = qrook::parse_partition(syt_mu);
    const std::vector<qrook::PiTableau> tabs = qrook::enumerate_pi_syt(pi, mu);
    json list = json::array();
    std::string text = "count " + std::to_string(tabs.size());
    for (const qrook::PiTableau& t : tabs) {
      std::string rows_text;
      for (const auto& row : t.rows()) {
        if (!rows_text.empty()) rows_text += " / ";
        rows_text += join_ints(row);
      }
      const LaurentPoly wt = qrook::weight(t);
      list.push_back({{"rows", t.rows()},
                      {"gamma", qrook::gamma(t)},
                      {"weight", qrook::to_string(wt)}});
      text += "\n" + rows_text + "  gamma=" + std::to_string(qrook::gamma(t)) +
              "  weight=" + qrook::to_string(wt);
    }
    const json j{{"path", pi.word()},
                 {"mu", qrook::to_string(mu)},
                 {"count", tabs.size()},
                 {"tableaux", list}};
    emit(syt_json, j, text);
    return 0;
  };

  auto do_chi = [&]() -> int {
    const DyckPath pi = resolve_path(chi_path, chi_shape, chi_semilength);
    const SymFunc f = chi_tilde ? qrook::llt_chi_tilde(pi)
                      : chi_chromatic ? qrook::chromatic_qsym(pi)
                                      : qrook::llt_chi(pi);
    json j = qrook::symfunc_to_json(f);
    j["path"] = pi.word();
    emit(chi_json, j, symfunc_text(f));
    return 0;
  };

  auto do_expand = [&]() -> int {
    const DyckPath pi = resolve_path(ex_path, ex_shape, ex_semilength);
    const Basis basis = qrook::basis_from_name(ex_basis);
    const SymFunc f = qrook::to_basis(
        ex_tilde ? qrook::llt_chi_tilde(pi) : qrook::llt_chi(pi), basis);
    json j = qrook::symfunc_to_json(f);
    j["path"] = pi.word();
    emit(ex_json, j, symfunc_text(f));
    return 0;
  };

  auto do_fq = [&]() -> int {
    const DyckPath pi = resolve_path(fq_path, fq_shape, fq_semilength);
    const int n = pi.semilength();
    if (fq_k > n) throw UsageError("--k exceeds the semilength");
    std::vector<Int> counts;
    if (!fq_formula_only) counts = qrook::count_by_rank(pi, fq_p);
    std::vector<Int> formula;
    for (int k = 0; k <= n; ++k) {
      formula.push_back(qrook::count_by_formula(pi, fq_p, k));
    }
    json j{{"path", pi.word()}, {"p", fq_p}};
    json formula_json = json::array();
    for (const Int& v : formula) formula_json.push_back(int_to_json(v));
    j["formula"] = formula_json;
    if (!counts.empty()) {
      json counts_json = json::array();
      for (const Int& v : counts) counts_json.push_back(int_to_json(v));
      j["counts"] = counts_json;
    }
    std::string text;
    const int lo = fq_k >= 0 ? fq_k : 0;
    const int hi = fq_k >= 0 ? fq_k : n;
    for (int k = lo; k <= hi; ++k) {
      if (!text.empty()) text += "\n";
      text += "k=" + std::to_string(k);
      if (!counts.empty()) text += " count=" + counts[k].str();
      text += " formula=" + formula[k].str();
    }
    emit(fq_json, j, text);
    return 0;
  };

  auto do_greene = [&]() -> int {
    const DyckPath pi = resolve_path(gr_path, gr_shape, gr_semilength);
    const Partition g = qrook::greene_shape(pi);
    const json j{{"path", pi.word()},
                 {"greene", qrook::to_string(g)},
                 {"value", qrook::partition_to_json(g)}};
    emit(gr_json, j, qrook::to_string(g));
    return 0;
  };

  auto do_convert = [&]() -> int {
    const DyckPath pi = [&] {
      if (!cv_path.empty()) return DyckPath(cv_path);
      if (!cv_shape.empty()) {
        const Partition lam = qrook::parse_partition(cv_shape);
        const int n =
            cv_semilength >= 0 ? cv_semilength : minimal_semilength(lam);
        return DyckPath::from_partition(lam, n);
      }
      if (!cv_hess.empty()) {
        const std::vector<int> m = parse_int_list(cv_hess);
        const int n = static_cast<int>(m.size());
        std::vector<int> parts;
        for (int i = 0; i < n; ++i) parts.push_back(n - m[i]);
        return DyckPath::from_partition(Partition(parts), n);
      }
      throw UsageError("provide --path, --shape, or --hessenberg");
    }();
    check_cap(pi.semilength());
    const std::vector<int> hess = qrook::hessenberg(pi);
    const json j{{"path", pi.word()},
                 {"shape", qrook::to_string(pi.shape())},
                 {"semilength", pi.semilength()},
                 {"hessenberg", hess}};
    const std::string text = "path " + pi.word() + "\nshape " +
                             qrook::to_string(pi.shape()) + "\nsemilength " +
                             std::to_string(pi.semilength()) +
                             "\nhessenberg " + join_ints(hess);
    emit(cv_json, j, text);
    return 0;
  };

  auto do_verify = [&]() -> int {
    int depth = v_n;
    const int cap = depth_cap();
    if (depth > cap) {
      depth = cap;
      if (depth < 1) {
        throw UsageError("QROOK_MAX_N leaves nothing to enumerate");
      }
      std::cerr << "note: depth clamped to " << depth << " by QROOK_MAX_N\n";
    }
    if (depth >= 6) {
      std::cerr << "note: depth " << depth
                << " enumerates large word tables; the llt and fq suites "
                   "may take minutes\n";
    }
    const std::vector<qrook::VerifyReport> reports =
        qrook::run_verification(v_suite, depth);
    int total = 0;
    int failed = 0;
    if (v_json) {
      json out{{"depth", depth}, {"suites", json::array()}};
      for (const qrook::VerifyReport& rep : reports) {
        json cases = json::array();
        for (const qrook::VerifyCase& c : rep.cases) {
          cases.push_back({{"identity", c.identity},
                           {"input", c.input},
                           {"pass", c.pass},
                           {"left", c.left},
                           {"right", c.right}});
        }
        out["suites"].push_back({{"suite", rep.suite},
                                 {"passed", rep.passed()},
                                 {"failed", rep.failed()},
                                 {"cases", std::move(cases)}});
        total += static_cast<int>(rep.cases.size());
        failed += rep.failed();
      }
      std::cout << out.dump() << "\n";
    } else {
      for (const qrook::VerifyReport& rep : reports) {
        std::cout << "suite " << rep.suite << ": " << rep.passed() << "/"
                  << rep.cases.size() << " passed\n";
        for (const qrook::VerifyCase& c : rep.cases) {
          if (c.pass) continue;
          std::cout << "  FAIL " << c.identity << " [" << c.input << "]\n"
                    << "    left:  " << c.left << "\n"
                    << "    right: " << c.right << "\n";
        }
        total += static_cast<int>(rep.cases.size());
        failed += rep.failed();
      }
      std::cout << "verify: " << (total - failed) << "/" << total
                << " cases passed\n";
    }
    return failed == 0 ? 0 : 1;
  };

  try {
    if (rook_cmd->parsed()) return do_rook();
    if (stirling_cmd->parsed()) return do_stirling();
    if (hit_cmd->parsed()) return do_hit();
    if (coeff_cmd->parsed()) return do_coeff();
    if (syt_cmd->parsed()) return do_syt();
    if (llt_cmd->parsed()) {
      if (chi_cmd->parsed()) return do_chi();
      if (expand_cmd->parsed()) return do_expand();
    }
    if (fq_cmd->parsed()) return do_fq();
    if (greene_cmd->parsed()) return do_greene();
    if (convert_cmd->parsed()) return do_convert();
    if (verify_cmd->parsed()) return do_verify();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::logic_error& e) {
    std::cerr << "identity violation: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
