#include "lgrexc/bbw.hpp"

#include <algorithm>
#include <cstdlib>
#include <functional>
#include <stdexcept>

namespace lgrexc {

Weight rho(int n) {
    std::vector<int> p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = n - i;
    return Weight(std::move(p));
}

CohomCell dotted_sort_A(const std::vector<int>& seq) {
    const int n = static_cast<int>(seq.size());
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (seq[static_cast<std::size_t>(i)] == seq[static_cast<std::size_t>(j)])
                return CohomCell::Zero();
    int inversions = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (seq[static_cast<std::size_t>(i)] < seq[static_cast<std::size_t>(j)])
                ++inversions;
    std::vector<int> sorted = seq;
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    for (int i = 0; i < n; ++i) sorted[static_cast<std::size_t>(i)] -= n - i;
    return CohomCell::nonzero(inversions, Weight(std::move(sorted)));
}

CohomCell dotted_sort_C(const std::vector<int>& seq) {
    const int n = static_cast<int>(seq.size());
    for (int i = 0; i < n; ++i) {
        if (seq[static_cast<std::size_t>(i)] == 0) return CohomCell::Zero();
        for (int j = i + 1; j < n; ++j)
            if (std::abs(seq[static_cast<std::size_t>(i)]) ==
                std::abs(seq[static_cast<std::size_t>(j)]))
                return CohomCell::Zero();
    }
    int length = 0;
    for (int i = 0; i < n; ++i) {
        if (seq[static_cast<std::size_t>(i)] < 0) ++length;
        for (int j = i + 1; j < n; ++j) {
            if (seq[static_cast<std::size_t>(i)] < seq[static_cast<std::size_t>(j)]) ++length;
            if (seq[static_cast<std::size_t>(i)] + seq[static_cast<std::size_t>(j)] < 0) ++length;
        }
    }
    std::vector<int> sorted(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        sorted[static_cast<std::size_t>(i)] = std::abs(seq[static_cast<std::size_t>(i)]);
    std::sort(sorted.begin(), sorted.end(), std::greater<int>());
    for (int i = 0; i < n; ++i) sorted[static_cast<std::size_t>(i)] -= n - i;
    return CohomCell::nonzero(length, Weight(std::move(sorted)));
}

namespace {

std::vector<int> shifted_concat(const Weight& a, const Weight& b, int n) {
    if (static_cast<int>(a.length() + b.length()) != n)
        throw std::invalid_argument("bbw: weight lengths do not add up to the rank");
    std::vector<int> seq(static_cast<std::size_t>(n));
    for (std::size_t i = 0; i < a.length(); ++i)
        seq[i] = a.part(i) + n - static_cast<int>(i);
    for (std::size_t i = 0; i < b.length(); ++i)
        seq[a.length() + i] = b.part(i) + n - static_cast<int>(a.length() + i);
    return seq;
}

}  // namespace

CohomCell coh_gr_relative(const Weight& lam, const Weight& mu, int n) {
    return dotted_sort_A(shifted_concat(lam, mu, n));
}

CohomCell coh_igr(const Weight& alpha, const Weight& beta, int w, int n) {
    if (w <= 0 || w >= n)
        throw std::invalid_argument("coh_igr: need 0 < w < n");
    if (static_cast<int>(alpha.length()) != w ||
        static_cast<int>(beta.length()) != n - w)
        throw std::invalid_argument("coh_igr: weight lengths must be w and n-w");
    if (!beta.is_diagram())
        throw std::invalid_argument("coh_igr: the symplectic weight must be a diagram");
    return dotted_sort_C(shifted_concat(alpha, beta, n));
}

CohomCell coh_lgr(const Weight& lam, int n) {
    if (static_cast<int>(lam.length()) != n)
        throw std::invalid_argument("coh_lgr: weight length must equal the rank");
    std::vector<int> seq(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i)
        seq[static_cast<std::size_t>(i)] = lam.part(static_cast<std::size_t>(i)) + n - i;
    return dotted_sort_C(seq);
}

std::map<int, VirtualModule> coh_lgr_bundle(const Weight& lam, const Weight& mu,
                                            int t, int n) {
    if (!lam.is_diagram() || !mu.is_diagram())
        throw std::invalid_argument("coh_lgr_bundle: arguments must be Young diagrams");
    const VirtualModule summands =
        tensor_gl(mu.padded(static_cast<std::size_t>(n)),
                  negate(lam.padded(static_cast<std::size_t>(n))), n);
    std::map<int, VirtualModule> graded;
    for (const auto& [nu, mult] : summands.terms()) {
        const CohomCell cell = coh_lgr(twist(nu, t), n);
        if (cell.is_zero()) continue;
        auto it = graded.find(cell.degree);
        if (it == graded.end())
            it = graded.emplace(cell.degree, VirtualModule(Group::sp, n)).first;
        it->second.add(cell.weight, mult);
    }
    return graded;
}

}  // namespace lgrexc
