#include <doctest.h>

#include <random>

#include "lgrexc/kclass.hpp"

using namespace lgrexc;

namespace {

Weight W(std::initializer_list<int> parts) { return Weight(std::vector<int>(parts)); }

Weight random_label(std::mt19937& rng, int n, int lo, int hi) {
    std::uniform_int_distribution<int> entry(lo, hi);
    std::vector<int> parts(static_cast<std::size_t>(n));
    for (int& v : parts) v = entry(rng);
    std::sort(parts.begin(), parts.end(), std::greater<int>());
    return Weight(std::move(parts));
}

}  // namespace

TEST_CASE("structure sheaf pairings") {
    for (int n : {2, 3, 5}) {
        const Weight o = Weight::zero(static_cast<std::size_t>(n));
        CHECK(euler_pairing(o, o, 0, n) == 1);
        for (int t = 1; t <= n; ++t) CHECK(euler_pairing(o, o, t, n) == 0);
    }
    CHECK(euler_pairing(W({1}), W({1}), 0, 5) == 1);  // U* against itself
}

TEST_CASE("equivariant pairing basics") {
    for (int n : {2, 3, 4}) {
        for (const Weight& mu : enumerate_block(2, 2)) {
            if (static_cast<int>(mu.normalized().length()) > n) continue;
            CHECK(euler_pairing_equivariant(mu, mu, n) == 1);
        }
    }
    CHECK(euler_pairing_equivariant(W({1}), W({2}), 3) == 0);
    // vanishes whenever the target label is not inside the source
    CHECK(euler_pairing_equivariant(W({2}), W({2, 1}), 4) == 0);
    CHECK(euler_pairing_equivariant(W({1, 1}), W({2}), 4) == 0);
}

TEST_CASE("gram matrix of small blocks") {
    const GramMatrix g = gram_matrix(1, 1, 3);
    REQUIRE(g.labels.size() == 2);
    CHECK(g.labels[0] == Weight());
    CHECK(g.labels[1] == W({1}));
    CHECK(g.entries[0][0] == 1);
    CHECK(g.entries[1][1] == 1);
    CHECK(g.entries[0][1] == 0);  // (1) not inside 0

    CHECK_THROWS_AS(gram_matrix(3, 3, 4), std::invalid_argument);
}

TEST_CASE("gram matrices are lower unitriangular on every block") {
    for (int n = 1; n <= 3; ++n) {
        for (int h = 0; h <= n + 1; ++h) {
            for (int w = 0; h + w <= n + 1; ++w) {
                const GramMatrix g = gram_matrix(h, w, n);
                for (std::size_t i = 0; i < g.labels.size(); ++i) {
                    CHECK(g.entries[i][i] == 1);
                    for (std::size_t j = 0; j < g.labels.size(); ++j)
                        if (!includes(g.labels[j], g.labels[i]))
                            CHECK(g.entries[i][j] == 0);
                }
            }
        }
    }
}

TEST_CASE("kclass of the trivial and column objects") {
    const KClass o = kclass_E(Weight(), 0, 2, 4);
    CHECK(o.terms().size() == 1);
    CHECK(o.terms().count(Weight::zero(4)) == 1);

    // columns give the exterior powers on the nose
    for (int n : {3, 5}) {
        for (int t = 1; t <= n; ++t) {
            const Weight col(std::vector<int>(static_cast<std::size_t>(t), 1));
            const KClass e = kclass_E(col, t, 1, n);
            CHECK(e.terms().size() == 1);
            CHECK(e.terms().count(col.padded(static_cast<std::size_t>(n))) == 1);
            CHECK(e.terms().at(col.padded(static_cast<std::size_t>(n))) == 1);
        }
    }
}

TEST_CASE("kclass solve satisfies its defining pairing property") {
    for (int n = 2; n <= 4; ++n) {
        for (int h = 0; h <= n + 1; ++h) {
            for (int w = 0; h + w <= n + 1; ++w) {
                for (const Weight& lam : enumerate_block(h, w)) {
                    const KClass e = kclass_E(lam, h, w, n);
                    CHECK(e.terms().at(lam.normalized().padded(
                              static_cast<std::size_t>(n))) == 1);
                    for (const Weight& mu : enumerate_block(h, w)) {
                        if (!includes(mu, lam)) continue;
                        long long chi_g = 0;
                        for (const auto& [label, coeff] : e.terms())
                            chi_g += coeff * euler_pairing_equivariant(label, mu, n);
                        CHECK(chi_g == (mu == lam ? 1 : 0));
                    }
                }
            }
        }
    }
}

TEST_CASE("kclass at rank 2") {
    const KClass e = kclass_E(W({2}), 1, 2, 2);
    CHECK(e.terms().count(W({2, 0})) == 1);
    CHECK(e.terms().at(W({2, 0})) == 1);
    // the support stays inside {mu <= (2)}
    for (const auto& [label, coeff] : e.terms()) CHECK(includes(label, W({2, 0})));
}

TEST_CASE("duals, twists, ranks") {
    const KClass f = kclass_F(Weight(), 0, 3, 3);
    CHECK(f.terms().size() == 1);
    CHECK(f.terms().count(Weight::zero(3)) == 1);

    CHECK(kclass_rank(KClass::sigma(4, W({1}))) == 4);
    CHECK(kclass_rank(KClass::structure_sheaf(4, -7)) == 1);

    const KClass e = kclass_E(W({2, 1}), 2, 2, 4);
    const KClass back = twist_kclass(twist_kclass(e, 3), -3);
    CHECK(back == e);
    CHECK(dual_kclass(dual_kclass(e)) == e);
    CHECK(kclass_rank(dual_kclass(e)) == kclass_rank(e));
}

TEST_CASE("the twisted self-pairing of E^{2,2} on LGr(5,10)") {
    const KClass e = kclass_E(W({2, 2}), 2, 2, 5);
    CHECK(euler_pairing(twist_kclass(e, 2), e) == -1);
    CHECK(euler_pairing(e, e) == 1);  // exceptional
}

TEST_CASE("Serre duality symmetry of the pairing") {
    std::mt19937 rng(2026);
    for (int n : {2, 3, 4}) {
        const int sign = ((n * (n + 1) / 2) % 2 == 0) ? 1 : -1;
        for (int trial = 0; trial < 200; ++trial) {
            const Weight a = random_label(rng, n, -3, 3);
            const Weight b = random_label(rng, n, -3, 3);
            const BigInt lhs = euler_pairing(a, b, 0, n);
            const BigInt rhs =
                euler_pairing(KClass::sigma(n, b),
                              KClass::sigma(n, twist(a, -(n + 1))));
            CHECK(lhs == sign * rhs);
        }
    }
}

TEST_CASE("twist equivariance and bilinearity") {
    std::mt19937 rng(7);
    const int n = 3;
    for (int trial = 0; trial < 50; ++trial) {
        const Weight a = random_label(rng, n, -2, 3);
        const Weight b = random_label(rng, n, -2, 3);
        for (int t : {-2, 1, 4})
            CHECK(euler_pairing(KClass::sigma(n, twist(a, t)),
                                KClass::sigma(n, twist(b, t))) ==
                  euler_pairing(KClass::sigma(n, a), KClass::sigma(n, b)));
    }
    // bilinearity over a two-term class
    KClass x(n);
    x.add(W({1}), 2);
    x.add(W({1, 1}), -1);
    const KClass y = KClass::structure_sheaf(n);
    const BigInt direct = euler_pairing(x, y);
    const BigInt split = 2 * euler_pairing(KClass::sigma(n, W({1})), y) -
                         euler_pairing(KClass::sigma(n, W({1, 1})), y);
    CHECK(direct == split);
}

TEST_CASE("kclass input validation") {
    CHECK_THROWS_AS(kclass_E(W({3}), 1, 2, 4), std::invalid_argument);   // width exceeded
    CHECK_THROWS_AS(kclass_E(W({2}), 3, 3, 4), std::invalid_argument);   // block too large
    CHECK_THROWS_AS(KClass::sigma(2, W({1, 1, 1})), std::invalid_argument);
}
