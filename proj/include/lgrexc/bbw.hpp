#pragma once

#include <map>
#include <vector>

#include "lgrexc/schur.hpp"
#include "lgrexc/weight.hpp"

namespace lgrexc {

/// Result of one Borel-Bott-Weil evaluation: either zero cohomology, or
/// a single irreducible in one degree. The Weyl element is not stored;
/// it is determined by the input.
struct CohomCell {
    bool zero = true;
    int degree = 0;
    Weight weight;

    static CohomCell Zero() { return CohomCell{}; }
    static CohomCell nonzero(int degree, Weight weight) {
        return CohomCell{false, degree, std::move(weight)};
    }
    bool is_zero() const { return zero; }
};

/// rho = (n, n-1, ..., 1).
Weight rho(int n);

/// Type A dotted sort. Input is rho + (concatenated weight); output is
/// zero when two entries repeat, otherwise the inversion count as the
/// degree and sort-descending(seq) - rho as the weight.
CohomCell dotted_sort_A(const std::vector<int>& seq);

/// Type C dotted sort. Input is rho + weight; regular means all entries
/// have positive, pairwise distinct absolute values. For regular input
/// the degree counts the pairs i<j with tau_i < tau_j, plus the pairs
/// with tau_i + tau_j < 0, plus the negative entries; the weight is
/// sort-descending(|entries|) - rho.
CohomCell dotted_sort_C(const std::vector<int>& seq);

/// Derived pushforward along Gr(k, V) -> point of Sigma^lam(V/U) (x)
/// Sigma^mu U, as a GL(n) cell: lam has length n-k, mu has length k.
CohomCell coh_gr_relative(const Weight& lam, const Weight& mu, int n);

/// Cohomology on IGr(w, 2n) of Sigma^alpha W* (x) Sp<beta>(Wperp/W), as
/// an Sp(2n) cell: alpha has length w, beta has length n-w, 0 < w < n.
CohomCell coh_igr(const Weight& alpha, const Weight& beta, int w, int n);

/// Cohomology on LGr(n, 2n) of Sigma^lam U*, as an Sp(2n) cell.
CohomCell coh_lgr(const Weight& lam, int n);

/// Full cohomology of Sigma^lam U (x) Sigma^mu U*(t) on LGr(n, 2n):
/// the tensor product decomposes through tensor_gl(mu, -lam), every
/// summand is twisted by t and fed to coh_lgr, and surviving cells are
/// aggregated into Sp(2n) modules indexed by degree. Degrees with no
/// surviving cell are absent.
std::map<int, VirtualModule> coh_lgr_bundle(const Weight& lam, const Weight& mu,
                                            int t, int n);

}  // namespace lgrexc
