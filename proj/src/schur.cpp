#include "lgrexc/schur.hpp"

#include <algorithm>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>

namespace lgrexc {

BigInt binomial(int n, int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    BigInt r = 1;
    for (int i = 1; i <= k; ++i) {
        r *= n - k + i;
        r /= i;
    }
    return r;
}

VirtualModule::VirtualModule(Group g, int rank) : group_(g), rank_(rank) {
    if (rank < 0) throw std::invalid_argument("VirtualModule: negative rank");
}

void VirtualModule::add(const Weight& w, long long mult) {
    if (mult == 0) return;
    Weight key = w;
    if (key.length() > static_cast<std::size_t>(rank_)) {
        for (std::size_t i = static_cast<std::size_t>(rank_); i < key.length(); ++i)
            if (key.part(i) != 0)
                throw std::invalid_argument("VirtualModule::add: weight exceeds rank");
        key = Weight(std::vector<int>(key.parts().begin(),
                                      key.parts().begin() + rank_));
    }
    key = key.padded(static_cast<std::size_t>(rank_));
    if (group_ == Group::sp && !key.is_diagram())
        throw std::invalid_argument("VirtualModule::add: Sp weights must be diagrams");
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), mult);
    } else {
        it->second += mult;
        if (it->second == 0) terms_.erase(it);
    }
}

long long VirtualModule::multiplicity(const Weight& w) const {
    auto it = terms_.find(w.normalized().padded(static_cast<std::size_t>(rank_)));
    return it == terms_.end() ? 0 : it->second;
}

namespace {

struct SkewCell {
    int row;
    int col;
};

// Counts semistandard fillings of nu/lam with content mu whose reverse
// reading word is a lattice word. Cells are visited in reverse reading
// order (top to bottom, right to left within a row), which lets the
// lattice condition be checked incrementally.
long long count_lr_tableaux(const Weight& lam, const Weight& mu, const Weight& nu) {
    const int rows = static_cast<int>(nu.length());
    const int vals = static_cast<int>(mu.length());
    std::vector<SkewCell> cells;
    for (int r = 0; r < rows; ++r)
        for (int c = nu.part(static_cast<std::size_t>(r)) - 1;
             c >= lam.part(static_cast<std::size_t>(r)); --c)
            cells.push_back({r, c});

    std::vector<std::vector<int>> fill(static_cast<std::size_t>(rows));
    for (int r = 0; r < rows; ++r)
        fill[static_cast<std::size_t>(r)].assign(
            static_cast<std::size_t>(nu.part(static_cast<std::size_t>(r))), 0);
    std::vector<int> count(static_cast<std::size_t>(vals) + 1, 0);

    long long total = 0;
    auto rec = [&](auto&& self, std::size_t idx) -> void {
        if (idx == cells.size()) {
            ++total;
            return;
        }
        const auto [r, c] = cells[idx];
        int lo = 1, hi = vals;
        if (r > 0 && c >= lam.part(static_cast<std::size_t>(r - 1)))
            lo = std::max(lo, fill[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
        if (c + 1 < nu.part(static_cast<std::size_t>(r)))
            hi = std::min(hi, fill[static_cast<std::size_t>(r)][static_cast<std::size_t>(c + 1)]);
        for (int v = lo; v <= hi; ++v) {
            if (count[static_cast<std::size_t>(v)] >= mu.part(static_cast<std::size_t>(v - 1)))
                continue;  // content exhausted
            if (v > 1 && count[static_cast<std::size_t>(v)] >= count[static_cast<std::size_t>(v - 1)])
                continue;  // lattice condition
            fill[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
            ++count[static_cast<std::size_t>(v)];
            self(self, idx + 1);
            --count[static_cast<std::size_t>(v)];
        }
    };
    rec(rec, 0);
    return total;
}

std::shared_mutex lr_cache_mutex;
std::map<std::vector<int>, long long> lr_cache;

std::vector<int> lr_key(const Weight& lam, const Weight& mu, const Weight& nu) {
    std::vector<int> key;
    key.reserve(lam.length() + mu.length() + nu.length() + 2);
    key.insert(key.end(), lam.parts().begin(), lam.parts().end());
    key.push_back(-1);
    key.insert(key.end(), mu.parts().begin(), mu.parts().end());
    key.push_back(-1);
    key.insert(key.end(), nu.parts().begin(), nu.parts().end());
    return key;
}

}  // namespace

long long lr_coeff(const Weight& lam_in, const Weight& mu_in, const Weight& nu_in) {
    Weight lam = lam_in.normalized();
    Weight mu = mu_in.normalized();
    const Weight nu = nu_in.normalized();
    if (!lam.is_diagram() || !mu.is_diagram() || !nu.is_diagram())
        throw std::invalid_argument("lr_coeff: arguments must be Young diagrams");
    if (nu.size() != lam.size() + mu.size()) return 0;
    if (!includes(lam, nu) || !includes(mu, nu)) return 0;
    if (mu.size() > lam.size()) std::swap(lam, mu);  // fewer skew cells

    const auto key = lr_key(lam, mu, nu);
    {
        std::shared_lock lock(lr_cache_mutex);
        auto it = lr_cache.find(key);
        if (it != lr_cache.end()) return it->second;
    }
    const long long value = count_lr_tableaux(lam, mu, nu);
    {
        std::unique_lock lock(lr_cache_mutex);
        lr_cache.emplace(key, value);
    }
    return value;
}

namespace {

// Enumerates all partitions nu with lam <= nu <= lam + mu_1 rowwise,
// |nu| = |lam| + |mu|, at most max_rows rows.
void product_candidates(const Weight& lam, long long boxes, int mu1, int max_rows,
                        std::vector<int>& acc, long long placed,
                        std::vector<Weight>& out) {
    const int r = static_cast<int>(acc.size());
    if (placed == boxes) {
        std::vector<int> p = acc;
        for (int i = r; i < static_cast<int>(lam.length()); ++i)
            p.push_back(lam.part(static_cast<std::size_t>(i)));
        while (!p.empty() && p.back() == 0) p.pop_back();
        out.push_back(Weight(std::move(p)));
        return;
    }
    if (r >= max_rows) return;
    const int base = lam.part(static_cast<std::size_t>(r));
    int hi = base + mu1;
    if (r > 0) hi = std::min(hi, acc[static_cast<std::size_t>(r - 1)]);
    for (int v = hi; v >= base; --v) {
        const long long extra = v - base;
        if (placed + extra > boxes) continue;
        acc.push_back(v);
        // remaining rows can only shrink budget; prune when even filling
        // every later row to its maximum cannot reach the target
        product_candidates(lam, boxes, mu1, max_rows, acc, placed + extra, out);
        acc.pop_back();
    }
}

}  // namespace

VirtualModule lr_product(const Weight& lam_in, const Weight& mu_in, int k) {
    Weight lam = lam_in.normalized();
    Weight mu = mu_in.normalized();
    if (!lam.is_diagram() || !mu.is_diagram())
        throw std::invalid_argument("lr_product: arguments must be Young diagrams");
    if (mu.size() > lam.size()) std::swap(lam, mu);
    VirtualModule result(Group::gl, k);
    const int max_rows = std::min<int>(k, static_cast<int>(lam.length() + mu.length()));
    if (static_cast<int>(lam.length()) > k) return result;  // Sigma^lam vanishes
    std::vector<Weight> candidates;
    std::vector<int> acc;
    product_candidates(lam, mu.size(), mu.part(0), max_rows, acc, 0, candidates);
    for (const Weight& nu : candidates) {
        const long long c = lr_coeff(lam, mu, nu);
        if (c != 0) result.add(nu, c);
    }
    return result;
}

VirtualModule tensor_gl(const Weight& lam, const Weight& mu, int k) {
    const Weight lp = lam.padded(static_cast<std::size_t>(k));
    const Weight mp = mu.padded(static_cast<std::size_t>(k));
    const int t1 = std::max(0, -lp.part(static_cast<std::size_t>(k - 1)));
    const int t2 = std::max(0, -mp.part(static_cast<std::size_t>(k - 1)));
    const VirtualModule prod = lr_product(twist(lp, t1), twist(mp, t2), k);
    if (t1 == 0 && t2 == 0) return prod;
    VirtualModule result(Group::gl, k);
    for (const auto& [nu, c] : prod.terms()) result.add(twist(nu, -(t1 + t2)), c);
    return result;
}

namespace {

void subdiagrams_of_size(const Weight& bound, long long boxes, std::vector<int>& acc,
                         long long placed, std::vector<Weight>& out) {
    const int r = static_cast<int>(acc.size());
    if (placed == boxes) {
        std::vector<int> p = acc;
        while (!p.empty() && p.back() == 0) p.pop_back();
        out.push_back(Weight(std::move(p)));
        return;
    }
    if (r >= static_cast<int>(bound.length())) return;
    int hi = bound.part(static_cast<std::size_t>(r));
    if (r > 0) hi = std::min(hi, acc[static_cast<std::size_t>(r - 1)]);
    for (int v = std::min<long long>(hi, boxes - placed); v >= 1; --v) {
        acc.push_back(v);
        subdiagrams_of_size(bound, boxes, acc, placed + v, out);
        acc.pop_back();
    }
}

}  // namespace

VirtualModule skew(const Weight& lam_in, const Weight& mu_in, int k) {
    const Weight lam = lam_in.normalized();
    const Weight mu = mu_in.normalized();
    if (!lam.is_diagram() || !mu.is_diagram())
        throw std::invalid_argument("skew: arguments must be Young diagrams");
    if (!includes(mu, lam))
        throw std::invalid_argument("skew: inner diagram must be contained in the outer one");
    VirtualModule result(Group::gl, k);
    std::vector<Weight> nus;
    std::vector<int> acc;
    subdiagrams_of_size(lam, lam.size() - mu.size(), acc, 0, nus);
    for (const Weight& nu : nus) {
        if (static_cast<int>(nu.length()) > k) continue;
        const long long c = lr_coeff(nu, mu, lam);
        if (c != 0) result.add(nu, c);
    }
    return result;
}

BigInt dim_gl(const Weight& lam, int k) {
    const Weight lp = lam.padded(static_cast<std::size_t>(k));
    BigInt num = 1, den = 1;
    for (int i = 0; i < k; ++i) {
        for (int j = i + 1; j < k; ++j) {
            num *= lp.part(static_cast<std::size_t>(i)) - lp.part(static_cast<std::size_t>(j)) + j - i;
            den *= j - i;
        }
    }
    return num / den;
}

BigInt dim_sp(const Weight& lam, int n) {
    if (!lam.is_diagram())
        throw std::invalid_argument("dim_sp: weight must be a Young diagram");
    if (static_cast<int>(lam.normalized().length()) > n)
        throw std::invalid_argument("dim_sp: more rows than the rank allows");
    // l_i = lam_i + n - i + 1 against the staircase m_i = n - i + 1
    std::vector<long long> l(static_cast<std::size_t>(n)), m(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) {
        l[static_cast<std::size_t>(i)] = lam.part(static_cast<std::size_t>(i)) + n - i;
        m[static_cast<std::size_t>(i)] = n - i;
    }
    BigInt num = 1, den = 1;
    for (int i = 0; i < n; ++i) {
        num *= l[static_cast<std::size_t>(i)];
        den *= m[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < n; ++j) {
            num *= (l[static_cast<std::size_t>(i)] - l[static_cast<std::size_t>(j)]) *
                   (l[static_cast<std::size_t>(i)] + l[static_cast<std::size_t>(j)]);
            den *= (m[static_cast<std::size_t>(i)] - m[static_cast<std::size_t>(j)]) *
                   (m[static_cast<std::size_t>(i)] + m[static_cast<std::size_t>(j)]);
        }
    }
    return num / den;
}

Weight fundamental_sp(int i, int n) {
    if (i < 1 || i > n)
        throw std::invalid_argument("fundamental_sp: index out of range");
    return Weight(std::vector<int>(static_cast<std::size_t>(i), 1));
}

VirtualModule tensor_sp_stable(const Weight& lam_in, const Weight& mu_in, int n) {
    const Weight lam = lam_in.normalized();
    const Weight mu = mu_in.normalized();
    if (!lam.is_diagram() || !mu.is_diagram())
        throw std::invalid_argument("tensor_sp_stable: arguments must be Young diagrams");
    if (static_cast<int>(lam.length()) > n || static_cast<int>(mu.length()) > n)
        throw std::invalid_argument("tensor_sp_stable: more rows than the rank allows");
    if (lam.size() + mu.size() > n)
        throw std::domain_error(
            "tensor_sp_stable: |lam| + |mu| > n is outside the stable range");

    // overlap alpha runs over subdiagrams of the componentwise minimum
    std::vector<int> cap;
    for (std::size_t i = 0; i < std::min(lam.length(), mu.length()); ++i)
        cap.push_back(std::min(lam.part(i), mu.part(i)));
    const Weight capw = Weight(std::move(cap)).normalized();

    VirtualModule result(Group::sp, n);
    for (long long a = 0; a <= capw.size(); ++a) {
        std::vector<Weight> alphas;
        std::vector<int> acc;
        subdiagrams_of_size(capw, a, acc, 0, alphas);
        for (const Weight& alpha : alphas) {
            const VirtualModule betas = skew(lam, alpha, n);
            const VirtualModule gammas = skew(mu, alpha, n);
            for (const auto& [beta, cb] : betas.terms()) {
                for (const auto& [gamma, cg] : gammas.terms()) {
                    const VirtualModule nus = lr_product(beta, gamma, n);
                    for (const auto& [nu, cn] : nus.terms())
                        result.add(nu, cb * cg * cn);
                }
            }
        }
    }
    return result;
}

}  // namespace lgrexc
