#include "lgrexc/kclass.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace lgrexc {

KClass::KClass(int n) : n_(n) {
    if (n <= 0) throw std::invalid_argument("KClass: rank must be positive");
}

KClass KClass::sigma(int n, const Weight& label, long long coeff) {
    KClass x(n);
    x.add(label, coeff);
    return x;
}

KClass KClass::structure_sheaf(int n, int t) {
    return sigma(n, Weight(std::vector<int>(static_cast<std::size_t>(n), t)));
}

void KClass::add(const Weight& label, long long coeff) {
    if (coeff == 0) return;
    Weight key = label.normalized();
    if (key.length() > static_cast<std::size_t>(n_))
        throw std::invalid_argument("KClass::add: label exceeds the rank");
    key = key.padded(static_cast<std::size_t>(n_));
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), coeff);
    } else {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

void KClass::add(const KClass& other, long long scale) {
    if (other.n_ != n_) throw std::invalid_argument("KClass::add: rank mismatch");
    for (const auto& [label, coeff] : other.terms_) add(label, coeff * scale);
}

namespace {

struct PairValue {
    BigInt chi;
    long long chi_equivariant;
};

std::shared_mutex pair_cache_mutex;
std::map<std::vector<int>, PairValue> pair_cache;

std::vector<int> pair_key(int n, const Weight& a, const Weight& b) {
    std::vector<int> key;
    key.reserve(2 * static_cast<std::size_t>(n) + 1);
    key.push_back(n);
    for (int i = 0; i < n; ++i) key.push_back(a.part(static_cast<std::size_t>(i)));
    for (int i = 0; i < n; ++i) key.push_back(b.part(static_cast<std::size_t>(i)));
    return key;
}

// chi and its equivariant companion for a pair of basis labels:
// Ext(Sigma^a U*, Sigma^b U*) = H(Sigma^a U (x) Sigma^b U*), summands
// run through tensor_gl(b, -a).
PairValue pair_labels(const Weight& a, const Weight& b, int n) {
    const auto key = pair_key(n, a, b);
    {
        std::shared_lock lock(pair_cache_mutex);
        auto it = pair_cache.find(key);
        if (it != pair_cache.end()) return it->second;
    }
    PairValue v{0, 0};
    const VirtualModule summands = tensor_gl(b, negate(a), n);
    for (const auto& [nu, mult] : summands.terms()) {
        const CohomCell cell = coh_lgr(nu, n);
        if (cell.is_zero()) continue;
        const int sign = (cell.degree % 2 == 0) ? 1 : -1;
        v.chi += sign * mult * dim_sp(cell.weight, n);
        if (cell.weight.is_zero()) v.chi_equivariant += sign * mult;
    }
    {
        std::unique_lock lock(pair_cache_mutex);
        pair_cache.emplace(key, v);
    }
    return v;
}

Weight full_label(const Weight& w, int n) {
    Weight key = w.normalized();
    if (key.length() > static_cast<std::size_t>(n))
        throw std::invalid_argument("euler_pairing: label exceeds the rank");
    return key.padded(static_cast<std::size_t>(n));
}

}  // namespace

BigInt euler_pairing(const Weight& mu, const Weight& nu, int t, int n) {
    return pair_labels(twist(full_label(mu, n), t), full_label(nu, n), n).chi;
}

BigInt euler_pairing(const KClass& a, const KClass& b) {
    if (a.n() != b.n()) throw std::invalid_argument("euler_pairing: rank mismatch");
    BigInt total = 0;
    for (const auto& [la, ca] : a.terms())
        for (const auto& [lb, cb] : b.terms())
            total += ca * cb * pair_labels(la, lb, a.n()).chi;
    return total;
}

long long euler_pairing_equivariant(const Weight& mu, const Weight& nu, int n) {
    return pair_labels(full_label(mu, n), full_label(nu, n), n).chi_equivariant;
}

GramMatrix gram_matrix(int h, int w, int n) {
    if (h < 0 || w < 0 || h + w > n + 1)
        throw std::invalid_argument("gram_matrix: block too large for the rank");
    GramMatrix g;
    g.labels = enumerate_block(h, w);
    const std::size_t m = g.labels.size();
    g.entries.assign(m, std::vector<long long>(m, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t j = 0; j < m; ++j)
            g.entries[i][j] = euler_pairing_equivariant(g.labels[i], g.labels[j], n);
    return g;
}

namespace {

std::vector<Weight> subdiagrams(const Weight& lam) {
    // every diagram contained in lam, sorted by (size, lexicographic)
    std::vector<Weight> out;
    std::vector<int> acc;
    auto rec = [&](auto&& self, std::size_t row) -> void {
        if (row == lam.length()) {
            std::vector<int> p = acc;
            while (!p.empty() && p.back() == 0) p.pop_back();
            out.push_back(Weight(std::move(p)));
            return;
        }
        int hi = lam.part(row);
        if (row > 0) hi = std::min(hi, acc[row - 1]);
        for (int v = 0; v <= hi; ++v) {
            acc.push_back(v);
            self(self, row + 1);
            acc.pop_back();
        }
    };
    rec(rec, 0);
    std::sort(out.begin(), out.end(), [](const Weight& a, const Weight& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

}  // namespace

KClass kclass_E(const Weight& lam, int h, int w, int n) {
    if (h + w > n + 1)
        throw std::invalid_argument("kclass_E: block too large for the rank");
    if (!in_block(lam, h, w))
        throw std::invalid_argument("kclass_E: diagram does not fit the block");

    const std::vector<Weight> sub = subdiagrams(lam.normalized());
    const std::size_t m = sub.size();
    // pairing matrix over {mu <= lam}; lower unitriangular in this order
    std::vector<std::vector<long long>> g(m, std::vector<long long>(m, 0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = 0; j < m; ++j) {
            g[i][j] = euler_pairing_equivariant(sub[i], sub[j], n);
            if (i == j && g[i][j] != 1)
                throw std::logic_error("kclass_E: pairing matrix is not unitriangular");
            if (!includes(sub[j], sub[i]) && g[i][j] != 0)
                throw std::logic_error("kclass_E: pairing matrix is not unitriangular");
        }
    }
    // solve sum_i a_i g[i][j] = delta_{j, m-1} from the top label down
    std::vector<long long> a(m, 0);
    a[m - 1] = 1;
    for (std::size_t jj = m - 1; jj-- > 0;) {
        long long acc = 0;
        for (std::size_t i = jj + 1; i < m; ++i) acc += a[i] * g[i][jj];
        a[jj] = -acc;
    }
    KClass x(n);
    for (std::size_t i = 0; i < m; ++i) x.add(sub[i], a[i]);
    return x;
}

KClass kclass_F(const Weight& lam, int h, int w, int n) {
    return dual_kclass(kclass_E(lam, h, w, n));
}

KClass dual_kclass(const KClass& x) {
    KClass y(x.n());
    for (const auto& [label, coeff] : x.terms()) y.add(negate(label), coeff);
    return y;
}

KClass twist_kclass(const KClass& x, int t) {
    KClass y(x.n());
    for (const auto& [label, coeff] : x.terms()) y.add(twist(label, t), coeff);
    return y;
}

BigInt kclass_rank(const KClass& x) {
    BigInt r = 0;
    for (const auto& [label, coeff] : x.terms()) r += coeff * dim_gl(label, x.n());
    return r;
}

}  // namespace lgrexc
