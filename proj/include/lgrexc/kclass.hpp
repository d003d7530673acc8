#pragma once

#include <map>
#include <vector>

#include "lgrexc/bbw.hpp"
#include "lgrexc/numeric.hpp"
#include "lgrexc/weight.hpp"

namespace lgrexc {

/// Formal integer combination of the basis labels [Sigma^mu U*] on
/// LGr(n, 2n), mu any dominant GL(n) weight. No relations are imposed;
/// equality of actual K-theory classes is only ever probed through the
/// Euler pairing. Labels are stored at full length n, without zero
/// coefficients.
class KClass {
public:
    explicit KClass(int n);

    /// [Sigma^label U*] with the given coefficient.
    static KClass sigma(int n, const Weight& label, long long coeff = 1);
    /// [O(t)] = [Sigma^{(t,...,t)} U*].
    static KClass structure_sheaf(int n, int t = 0);

    int n() const { return n_; }
    const std::map<Weight, long long>& terms() const { return terms_; }
    bool empty() const { return terms_.empty(); }

    void add(const Weight& label, long long coeff);
    void add(const KClass& other, long long scale = 1);

    friend bool operator==(const KClass& a, const KClass& b) {
        return a.n_ == b.n_ && a.terms_ == b.terms_;
    }

private:
    int n_;
    std::map<Weight, long long> terms_;
};

/// Euler characteristic of Ext(Sigma^mu U*(t), Sigma^nu U*): the signed
/// sum of dim_sp over the cells of the matching cohomology computation.
BigInt euler_pairing(const Weight& mu, const Weight& nu, int t, int n);

/// Bilinear extension; twists are expected to be baked into the labels.
BigInt euler_pairing(const KClass& a, const KClass& b);

/// Equivariant Euler characteristic of Ext_G(Sigma^mu U*, Sigma^nu U*):
/// only cells with trivial output weight contribute. Vanishes whenever
/// nu is not contained in mu; equals 1 on the diagonal.
long long euler_pairing_equivariant(const Weight& mu, const Weight& nu, int n);

/// The equivariant pairing matrix of the block Y_{h,w}, rows and columns
/// indexed by the block sorted by (size, lexicographic). entries[i][j]
/// pairs labels[i] against labels[j]; lower unitriangular in that order.
struct GramMatrix {
    std::vector<Weight> labels;
    std::vector<std::vector<long long>> entries;
};
GramMatrix gram_matrix(int h, int w, int n);

/// K-class of the Kuznetsov-Polishchuk object E^lam: the unique
/// combination of [Sigma^mu U*] over mu <= lam whose equivariant pairing
/// against every [Sigma^mu U*] with mu <= lam is delta_{mu,lam}. Solved
/// by back-substitution on the unitriangular block pairing matrix; the
/// coefficient of lam itself is 1.
KClass kclass_E(const Weight& lam, int h, int w, int n);

/// [F^lam] = [(E^lam)*]: every label negated.
KClass kclass_F(const Weight& lam, int h, int w, int n);

KClass dual_kclass(const KClass& x);
KClass twist_kclass(const KClass& x, int t);
BigInt kclass_rank(const KClass& x);

}  // namespace lgrexc
