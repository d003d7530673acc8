#pragma once

#include <string>
#include <vector>

#include "lgrexc/certificate.hpp"
#include "lgrexc/kclass.hpp"
#include "lgrexc/weight.hpp"

namespace lgrexc {

/// One term of a staircase-type complex: a K-class with an integer
/// multiplicity (the dimension of the fundamental-representation tensor
/// factor, 1 when there is none) sitting in a homological position.
/// e_label/e_twist record which twisted E-object the K-class models.
struct StairTerm {
    int position = 0;
    long long multiplicity_dim = 1;
    KClass kclass;
    std::string description;
    Weight e_label;
    int e_twist = 0;
};

struct StairComplex {
    int n = 0;
    std::vector<StairTerm> terms;  // positions strictly increasing, ending at 0
};

/// The Lagrangian staircase complex of a diagram lam in the h x w block
/// with h + w = n + 1 and lam_1 = w, read left to right at positions
/// -(w+1) .. 0:
///
///   0 -> E^{lam'}(-1) -> V^[nu_w] (x) E^{lam^(w)} -> ...
///     -> V^[nu_1] (x) E^{lam^(1)} -> E^lam -> 0.
StairComplex build_staircase(const Weight& lam, int h, int w, int n);

/// Every term twisted by O(t).
StairComplex twist_complex(const StairComplex& c, int t);

/// Alternating sum sum (-1)^position * multiplicity_dim * kclass.
KClass euler_class(const StairComplex& c);

/// Yoneda splice: the rightmost term of c1 must equal the leftmost term
/// of c2 (same K-class, same multiplicity); the shared term disappears
/// and the remaining terms concatenate into one complex.
StairComplex splice(const StairComplex& c1, const StairComplex& c2);

/// All probe labels kappa in Y_{n,n}.
std::vector<Weight> default_probes(int n);

/// Pairs every probe against the Euler class of the complex; exactness
/// forces all pairings to vanish. The check is the K-theoretic necessary
/// condition only, so a clean run reports NECESSARY-CONDITION PASS.
Certificate verify_exactness_probe(const StairComplex& c,
                                   const std::vector<Weight>& probes,
                                   int jobs = 1);

}  // namespace lgrexc
