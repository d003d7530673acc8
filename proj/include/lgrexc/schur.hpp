#pragma once

#include <map>

#include "lgrexc/numeric.hpp"
#include "lgrexc/weight.hpp"

namespace lgrexc {

enum class Group { gl, sp };

/// Integer combination of irreducible modules of GL(rank) or Sp(2*rank),
/// keyed by dominant highest weights. Zero multiplicities are never
/// stored; keys are padded to the rank length.
class VirtualModule {
public:
    VirtualModule(Group g, int rank);

    Group group() const { return group_; }
    int rank() const { return rank_; }

    void add(const Weight& w, long long mult);
    long long multiplicity(const Weight& w) const;
    bool empty() const { return terms_.empty(); }
    const std::map<Weight, long long>& terms() const { return terms_; }

private:
    Group group_;
    int rank_;
    std::map<Weight, long long> terms_;
};

/// Littlewood-Richardson coefficient c^nu_{lam,mu}, by direct enumeration
/// of LR skew tableaux of shape nu/lam with content mu. Memoized; the
/// cache tolerates concurrent readers and racing writers.
long long lr_coeff(const Weight& lam, const Weight& mu, const Weight& nu);

/// Full product expansion of two Schur functors of a rank-k space.
VirtualModule lr_product(const Weight& lam, const Weight& mu, int k);

/// Tensor product of Schur functors for arbitrary dominant GL(k) weights,
/// reduced to the diagram case by twisting with powers of the determinant.
VirtualModule tensor_gl(const Weight& lam, const Weight& mu, int k);

/// Skew Schur expansion: Sigma^{lam/mu} = sum_nu c^lam_{nu,mu} Sigma^nu.
VirtualModule skew(const Weight& lam, const Weight& mu, int k);

/// Weyl dimension formulas, exact.
BigInt dim_gl(const Weight& lam, int k);
BigInt dim_sp(const Weight& lam, int n);

/// Highest weight of the i-th fundamental representation of Sp(2n):
/// the column of height i. Its dimension is C(2n,i) - C(2n,i-2).
Weight fundamental_sp(int i, int n);

/// Tensor product of Sp(2n) irreducibles via the Newell-Littlewood
/// numbers N^nu = sum c^lam_{ab} c^mu_{ac} c^nu_{bc}, valid only in the
/// stable range |lam| + |mu| <= n. Out of range is a hard error.
VirtualModule tensor_sp_stable(const Weight& lam, const Weight& mu, int n);

}  // namespace lgrexc
