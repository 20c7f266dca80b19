#include "qrook/sym_func.hpp"

#include "qrook/text_io.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace qrook {
namespace {

using Coeffs = std::map<Partition, RationalFn>;

constexpr int kMaxDegree = 8;

void check_degree(int degree, const char* what) {
    if (degree > kMaxDegree)
        throw std::invalid_argument(std::string(what) +
                                    ": degree exceeds the supported bound of 8");
}

/// [x^nu] (m_lam * m_mu): the number of distinct rearrangements a of lam,
/// padded with zeros to the length of nu, such that nu - a sorts to mu.
Int mono_pair_coeff(const Partition& lam, const Partition& mu, const Partition& nu) {
    const int len = nu.length();
    if (lam.length() > len || lam.length() + mu.length() < len) return 0;
    std::vector<int> alpha(len, 0);
    std::copy(lam.parts().begin(), lam.parts().end(), alpha.begin());
    std::sort(alpha.begin(), alpha.end());
    Int count = 0;
    do {
        std::vector<int> beta(len);
        bool ok = true;
        for (int i = 0; i < len; ++i) {
            beta[i] = nu.part(i + 1) - alpha[i];
            if (beta[i] < 0) { ok = false; break; }
        }
        if (!ok) continue;
        std::sort(beta.begin(), beta.end(), std::greater<>());
        while (!beta.empty() && beta.back() == 0) beta.pop_back();
        if (beta == mu.parts()) ++count;
    } while (std::next_permutation(alpha.begin(), alpha.end()));
    return count;
}

Coeffs mono_product(const Coeffs& a, int deg_a, const Coeffs& b, int deg_b) {
    Coeffs out;
    const auto nus = partitions_of(deg_a + deg_b);
    for (const auto& [lam, ca] : a) {
        for (const auto& [mu, cb] : b) {
            const RationalFn cab = ca * cb;
            for (const auto& nu : nus) {
                const Int c = mono_pair_coeff(lam, mu, nu);
                if (c == 0) continue;
                const auto it = out.try_emplace(nu).first;
                it->second += cab * RationalFn(c);
                if (it->second.is_zero()) out.erase(it);
            }
        }
    }
    return out;
}

/// One-row generators expanded in the monomial basis: e_r = m_{(1^r)},
/// p_r = m_{(r)}, and h_r = sum of m_nu over all nu of r.
Coeffs generator_in_m(Basis b, int r) {
    Coeffs c;
    switch (b) {
    case Basis::e:
        c.emplace(Partition(std::vector<int>(r, 1)), RationalFn(1));
        break;
    case Basis::p:
        c.emplace(Partition{r}, RationalFn(1));
        break;
    case Basis::h:
        for (const auto& nu : partitions_of(r)) c.emplace(nu, RationalFn(1));
        break;
    default:
        throw std::logic_error("generator_in_m: basis is not multiplicative");
    }
    return c;
}

Coeffs multiplicative_in_m(Basis b, const Partition& lam) {
    Coeffs acc{{Partition{}, RationalFn(1)}};
    int deg = 0;
    for (const int part : lam.parts()) {
        acc = mono_product(acc, deg, generator_in_m(b, part), part);
        deg += part;
    }
    return acc;
}

/// Visits every semistandard tableau of the given shape and content once,
/// as a vector of rows.  Values are placed in increasing order; the cells
/// carrying one value form a horizontal strip, which is exactly what keeps
/// rows weakly and columns strictly increasing.
template <typename Visit>
class SsytEnumerator {
public:
    SsytEnumerator(const Partition& shape, const Partition& content, const Visit& visit)
        : shape_(shape), content_(content), visit_(visit) {}

    void run() {
        cur_.assign(shape_.length(), 0);
        rows_.assign(shape_.length(), {});
        place_value(1);
    }

private:
    void place_value(int value) {
        if (value > content_.length()) {
            if (cells_ == shape_.size()) visit_(rows_);
            return;
        }
        const std::vector<int> prev = cur_;  // snapshot: strip bounds must not
                                             // see this value's own additions
        choose_row(value, 0, content_.part(value), prev);
    }

    // prev holds the row lengths before the current value started; a new
    // cell in row i may not pass column prev[i-1], so no two cells of one
    // value share a column.
    void choose_row(int value, int row, int remaining, const std::vector<int>& prev) {
        if (row == static_cast<int>(cur_.size())) {
            if (remaining == 0) place_value(value + 1);
            return;
        }
        int cap = shape_.part(row + 1) - cur_[row];
        if (row > 0) cap = std::min(cap, prev[row - 1] - cur_[row]);
        cap = std::min(cap, remaining);
        choose_row(value, row + 1, remaining, prev);
        for (int add = 1; add <= cap; ++add) {
            rows_[row].push_back(value);
            ++cur_[row];
            ++cells_;
            choose_row(value, row + 1, remaining - add, prev);
        }
        for (int add = cap; add >= 1; --add) {
            rows_[row].pop_back();
            --cur_[row];
            --cells_;
        }
    }

    const Partition& shape_;
    const Partition& content_;
    const Visit& visit_;
    std::vector<int> cur_;
    std::vector<std::vector<int>> rows_;
    int cells_ = 0;
};

template <typename Visit>
void for_each_ssyt(const Partition& shape, const Partition& content, const Visit& visit) {
    SsytEnumerator<Visit>(shape, content, visit).run();
}

/// Charge of a word whose letter multiset is a partition.  Letters are
/// removed in ladders 1, 2, 3, ...: the 1 is taken scanning from the right
/// end, and each following letter is sought leftward from the previous
/// one, wrapping around cyclically; the ladder stops when the next letter
/// is absent.  Within a ladder a running index starts at 0 and grows by
/// one each time a letter sits to the right of its predecessor in the
/// original word.  Charge is the sum of the indices of all letters.
int charge_of_word(const std::vector<int>& w) {
    const int n = static_cast<int>(w.size());
    std::vector<char> used(n, 0);
    int left = n;
    int total = 0;
    while (left > 0) {
        int pos = -1;
        for (int i = n - 1; i >= 0; --i) {
            if (!used[i] && w[i] == 1) { pos = i; break; }
        }
        if (pos < 0)
            throw std::logic_error("charge_of_word: letter content is not a partition");
        used[pos] = 1;
        --left;
        int index = 0;
        for (int value = 2;; ++value) {
            int found = -1;
            for (int step = 1; step <= n; ++step) {
                const int i = (pos - step + n) % n;
                if (!used[i] && w[i] == value) { found = i; break; }
            }
            if (found < 0) break;
            if (found > pos) ++index;
            total += index;
            used[found] = 1;
            --left;
            pos = found;
        }
    }
    return total;
}

std::vector<int> reading_word(const std::vector<std::vector<int>>& rows) {
    std::vector<int> w;
    for (auto it = rows.rbegin(); it != rows.rend(); ++it)
        w.insert(w.end(), it->begin(), it->end());
    return w;
}

/// Generating function of cocharge = n(content) - charge over the
/// semistandard tableaux of the given shape and content.
LaurentPoly cocharge_kostka(const Partition& shape, const Partition& content) {
    int nw = 0;
    for (int i = 1; i <= content.length(); ++i) nw += (i - 1) * content.part(i);
    LaurentPoly out;
    for_each_ssyt(shape, content, [&](const std::vector<std::vector<int>>& rows) {
        out += LaurentPoly::monomial(1, nw - charge_of_word(reading_word(rows)));
    });
    return out;
}

Int kostka_number(const Partition& shape, const Partition& content) {
    Int k = 0;
    for_each_ssyt(shape, content, [&](const std::vector<std::vector<int>>&) { ++k; });
    return k;
}

Coeffs schur_in_m(const Partition& lam) {
    Coeffs out;
    for (const auto& nu : partitions_of(lam.size())) {
        const Int k = kostka_number(lam, nu);
        if (k != 0) out.emplace(nu, RationalFn(k));
    }
    return out;
}

Coeffs element_in_m(Basis b, const Partition& lam);

using Matrix = std::vector<std::vector<RationalFn>>;

std::vector<RationalFn> mat_vec(const Matrix& a, const std::vector<RationalFn>& x) {
    std::vector<RationalFn> y(x.size());
    for (std::size_t j = 0; j < x.size(); ++j) {
        if (x[j].is_zero()) continue;
        for (std::size_t i = 0; i < y.size(); ++i) {
            if (!a[i][j].is_zero()) y[i] += a[i][j] * x[j];
        }
    }
    return y;
}

Matrix invert_matrix(Matrix a) {
    const int n = static_cast<int>(a.size());
    Matrix inv(n, std::vector<RationalFn>(n));
    for (int i = 0; i < n; ++i) inv[i][i] = RationalFn(1);
    for (int col = 0; col < n; ++col) {
        int pivot = -1;
        for (int r = col; r < n; ++r) {
            if (!a[r][col].is_zero()) { pivot = r; break; }
        }
        if (pivot < 0) throw std::logic_error("basis transition matrix is singular");
        std::swap(a[pivot], a[col]);
        std::swap(inv[pivot], inv[col]);
        const RationalFn scale = a[col][col].reciprocal();
        for (int j = 0; j < n; ++j) {
            a[col][j] *= scale;
            inv[col][j] *= scale;
        }
        for (int r = 0; r < n; ++r) {
            if (r == col || a[r][col].is_zero()) continue;
            const RationalFn f = a[r][col];
            for (int j = 0; j < n; ++j) {
                a[r][j] -= f * a[col][j];
                inv[r][j] -= f * inv[col][j];
            }
        }
    }
    return inv;
}

/// Per (basis, degree) transition matrices to and from the monomial
/// basis, built on first use.  Builders run outside the lock because the
/// W and Htilde0 columns recurse into the cache for other bases; a lost
/// race just rebuilds an identical matrix.
class TransitionCache {
public:
    const Matrix& to_m(Basis b, int degree) {
        return fetch(to_m_, b, degree, [&] { return build_to_m(b, degree); });
    }
    const Matrix& from_m(Basis b, int degree) {
        return fetch(from_m_, b, degree, [&] { return invert_matrix(to_m(b, degree)); });
    }

private:
    using Key = std::pair<int, int>;

    template <typename Build>
    const Matrix& fetch(std::map<Key, Matrix>& table, Basis b, int degree, const Build& build) {
        const Key key{static_cast<int>(b), degree};
        {
            const std::lock_guard<std::mutex> lock(mu_);
            if (const auto it = table.find(key); it != table.end()) return it->second;
        }
        Matrix built = build();
        const std::lock_guard<std::mutex> lock(mu_);
        return table.try_emplace(key, std::move(built)).first->second;
    }

    static Matrix build_to_m(Basis b, int degree) {
        const auto parts = partitions_of(degree);
        std::map<Partition, std::size_t> row;
        for (std::size_t i = 0; i < parts.size(); ++i) row.emplace(parts[i], i);
        Matrix m(parts.size(), std::vector<RationalFn>(parts.size()));
        for (std::size_t j = 0; j < parts.size(); ++j) {
            for (const auto& [nu, c] : element_in_m(b, parts[j])) m[row.at(nu)][j] = c;
        }
        return m;
    }

    std::mutex mu_;
    std::map<Key, Matrix> to_m_, from_m_;
};

TransitionCache& cache() {
    static TransitionCache c;
    return c;
}

std::vector<RationalFn> coords(const SymFunc& f, const std::vector<Partition>& parts) {
    std::map<Partition, std::size_t> idx;
    for (std::size_t i = 0; i < parts.size(); ++i) idx.emplace(parts[i], i);
    std::vector<RationalFn> x(parts.size());
    for (const auto& [lam, c] : f.coeffs()) x[idx.at(lam)] = c;
    return x;
}

} // namespace

std::string basis_name(Basis b) {
    switch (b) {
    case Basis::m: return "m";
    case Basis::e: return "e";
    case Basis::h: return "h";
    case Basis::p: return "p";
    case Basis::s: return "s";
    case Basis::W: return "W";
    case Basis::Wtilde: return "Wtilde";
    case Basis::Htilde0: return "Htilde0";
    }
    throw std::invalid_argument("basis_name: unknown basis");
}

Basis basis_from_name(std::string_view name) {
    for (const Basis b : {Basis::m, Basis::e, Basis::h, Basis::p, Basis::s, Basis::W,
                          Basis::Wtilde, Basis::Htilde0}) {
        if (name == basis_name(b)) return b;
    }
    throw std::invalid_argument("basis_from_name: unknown basis name '" + std::string(name) +
                                "'");
}

SymFunc::SymFunc(Basis basis, int degree) : basis_(basis), degree_(degree) {
    if (degree < 0) throw std::invalid_argument("SymFunc: negative degree");
}

SymFunc SymFunc::unit(Basis basis, const Partition& lam) {
    SymFunc f(basis, lam.size());
    f.set_coeff(lam, RationalFn(1));
    return f;
}

RationalFn SymFunc::coeff(const Partition& lam) const {
    const auto it = coeffs_.find(lam);
    return it == coeffs_.end() ? RationalFn() : it->second;
}

void SymFunc::set_coeff(const Partition& lam, RationalFn value) {
    if (lam.size() != degree_)
        throw std::invalid_argument("SymFunc::set_coeff: partition size differs from degree");
    if (value.is_zero())
        coeffs_.erase(lam);
    else
        coeffs_[lam] = std::move(value);
}

SymFunc& SymFunc::operator+=(const SymFunc& other) {
    if (basis_ != other.basis_ || degree_ != other.degree_)
        throw std::invalid_argument("SymFunc: addition requires matching basis and degree");
    for (const auto& [lam, c] : other.coeffs_) {
        const auto it = coeffs_.try_emplace(lam).first;
        it->second += c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
    return *this;
}

SymFunc& SymFunc::operator-=(const SymFunc& other) {
    if (basis_ != other.basis_ || degree_ != other.degree_)
        throw std::invalid_argument("SymFunc: subtraction requires matching basis and degree");
    for (const auto& [lam, c] : other.coeffs_) {
        const auto it = coeffs_.try_emplace(lam).first;
        it->second -= c;
        if (it->second.is_zero()) coeffs_.erase(it);
    }
    return *this;
}

SymFunc& SymFunc::operator*=(const RationalFn& scalar) {
    if (scalar.is_zero()) {
        coeffs_.clear();
        return *this;
    }
    for (auto& [lam, c] : coeffs_) c *= scalar;
    return *this;
}

std::map<Partition, RationalFn> expand_in(const SymFunc& f, Basis target) {
    check_degree(f.degree(), "expand_in");
    if (target == f.basis()) return f.coeffs();
    const auto parts = partitions_of(f.degree());
    std::vector<RationalFn> fm = coords(f, parts);
    if (f.basis() != Basis::m) fm = mat_vec(cache().to_m(f.basis(), f.degree()), fm);
    if (target != Basis::m) fm = mat_vec(cache().from_m(target, f.degree()), fm);
    std::map<Partition, RationalFn> out;
    for (std::size_t i = 0; i < parts.size(); ++i) {
        if (!fm[i].is_zero()) out.emplace(parts[i], std::move(fm[i]));
    }
    return out;
}

SymFunc to_basis(const SymFunc& f, Basis target) {
    SymFunc out(target, f.degree());
    for (auto& [lam, c] : expand_in(f, target)) out.set_coeff(lam, std::move(c));
    return out;
}

SymFunc omega(const SymFunc& f) {
    SymFunc g(Basis::p, f.degree());
    for (const auto& [mu, c] : expand_in(f, Basis::p)) {
        const bool flip = (mu.size() - mu.length()) % 2 != 0;
        g.set_coeff(mu, flip ? -c : c);
    }
    return to_basis(g, f.basis());
}

SymFunc plethysm_over_qminus1(const SymFunc& f) {
    SymFunc g(Basis::p, f.degree());
    for (const auto& [mu, c] : expand_in(f, Basis::p)) {
        RationalFn scaled = c;
        for (const int r : mu.parts())
            scaled /= RationalFn(LaurentPoly::monomial(1, r) - LaurentPoly(1));
        g.set_coeff(mu, std::move(scaled));
    }
    return to_basis(g, f.basis());
}

SymFunc htilde_t0(const Partition& mu) {
    check_degree(mu.size(), "htilde_t0");
    SymFunc f(Basis::s, mu.size());
    const Partition content = conjugate(mu);
    for (const auto& lam : partitions_of(mu.size())) {
        const LaurentPoly k = cocharge_kostka(lam, content);
        if (!k.is_zero()) f.set_coeff(lam, RationalFn(k));
    }
    return f;
}

SymFunc w_basis_element(const Partition& lam) {
    check_degree(lam.size(), "w_basis_element");
    const SymFunc ht = htilde_t0(lam);
    SymFunc reversed(Basis::s, lam.size());
    for (const auto& [nu, c] : ht.coeffs()) reversed.set_coeff(nu, c.inverted());
    SymFunc w = omega(reversed);
    w *= RationalFn(LaurentPoly::monomial(1, n_prime(lam)));
    return to_basis(w, Basis::m);
}

SymFunc wtilde_basis_element(const Partition& lam) {
    check_degree(lam.size(), "wtilde_basis_element");
    const RationalFn shift{LaurentPoly::monomial(1, n_prime(lam))};
    const SymFunc w = w_basis_element(lam);
    SymFunc wt(Basis::m, lam.size());
    for (const auto& [nu, c] : w.coeffs()) wt.set_coeff(nu, c.inverted() * shift);
    if (wt != to_basis(omega(htilde_t0(lam)), Basis::m))
        throw std::logic_error(
            "wtilde_basis_element: reversal disagrees with omega of htilde_t0");
    return wt;
}

nlohmann::json symfunc_to_json(const SymFunc& f) {
    nlohmann::json coeffs = nlohmann::json::object();
    for (const auto& [lam, c] : f.coeffs()) coeffs[to_string(lam)] = to_string(c);
    return {{"basis", basis_name(f.basis())},
            {"degree", f.degree()},
            {"coeffs", std::move(coeffs)}};
}

namespace {

Coeffs element_in_m(Basis b, const Partition& lam) {
    switch (b) {
    case Basis::m:
        return {{lam, RationalFn(1)}};
    case Basis::e:
    case Basis::h:
    case Basis::p:
        return multiplicative_in_m(b, lam);
    case Basis::s:
        return schur_in_m(lam);
    case Basis::Htilde0: {
        Coeffs out;
        const SymFunc ht = htilde_t0(lam);
        for (const auto& [slam, c] : ht.coeffs()) {
            for (const auto& [nu, k] : schur_in_m(slam)) {
                const auto it = out.try_emplace(nu).first;
                it->second += c * k;
                if (it->second.is_zero()) out.erase(it);
            }
        }
        return out;
    }
    case Basis::W:
        return w_basis_element(lam).coeffs();
    case Basis::Wtilde:
        return wtilde_basis_element(lam).coeffs();
    }
    throw std::invalid_argument("element_in_m: unknown basis");
}

} // namespace

} // namespace qrook
