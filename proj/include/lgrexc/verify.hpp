#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lgrexc/certificate.hpp"
#include "lgrexc/weight.hpp"

namespace lgrexc {

struct LemmaBounds {
    int max_entry = 4;  // cap on diagram/weight entries in enumerations
};

/// Names accepted by verify_lemma, in canonical order:
/// gr0, lgr0, igr_van, igr0, igr_eq, igr_kap, q_neg.
std::vector<std::string> lemma_names();

/// Enumerates the hypothesis space of one cohomology classification at
/// rank n within the given bounds, evaluates the matching engine on
/// every case and compares against the stated classification.
Certificate verify_lemma(const std::string& name, int n,
                         const LemmaBounds& bounds = {}, int jobs = 1);

/// Classification of H(IGr(w), Sigma^{mu(-1)} W (x) Sp<lam-bar>(Wperp/W))
/// for every lam in the h x w block with lam_1 = w (h + w = n + 1) and
/// every mu in the w x h block: nonzero exactly when mu^T is one of the
/// truncations lam^(i), with the fundamental weight of V^[nu_i] in
/// degree |lam^(i)| - (w - i).
Certificate verify_prop_main(int n, int h, int w);

/// Strong exceptionality of { Sigma^mu W* : mu in Y_{w,h} } on IGr(w,2n),
/// checked constituent-wise through the isotropic engine.
Certificate verify_igr_ec(int n, int w);

/// The Kuznetsov-Polishchuk collection: labels (lam, i) with lam in the
/// i x (n-i) block, i = 0..n; 2^n objects.
std::vector<std::pair<Weight, int>> kp_collection(int n);
Certificate verify_kp_count(int n);

/// chi-level semiorthogonality of the collection: later blocks pair to
/// zero against earlier ones, and within a block the pairing vanishes
/// unless the source label is contained in the target one. A necessary
/// condition only.
Certificate verify_kp_chi(int n, int jobs = 1);

/// Constituent scan behind exceptionality of the LGr(5,10) Lefschetz
/// collection: all required cohomologies vanish except a single cell of
/// dimension one in degree 5 at ((2,2),(2,2), t=2).
Certificate verify_lefschetz_510(int jobs = 1);

struct ClosureOptions {
    std::vector<Weight> banned_rules;  // staircase shapes excluded (for ablation)
};

/// Saturation run: starting from the collection labels, any staircase
/// complex with all terms but one already generated adds the remaining
/// label. Passes when O(n+1) is reached, every E^lam(n - w(lam) + 1)
/// with h + w <= n + 1 is reached, and the t(lam)-induction replay goes
/// through round by round.
Certificate generation_closure(int n, const ClosureOptions& opts = {});

/// The eleven-step generation ladder for the LGr(5,10) Lefschetz
/// collection: every step's (possibly spliced) complex passes the Euler
/// probe suite, and all of its terms except the step target already sit
/// in the running set of generated objects.
Certificate verify_510_steps(int jobs = 1);

}  // namespace lgrexc
