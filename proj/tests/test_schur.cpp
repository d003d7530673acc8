#include <doctest.h>

#include <map>
#include <random>

#include "lgrexc/schur.hpp"

using namespace lgrexc;

namespace {

Weight W(std::initializer_list<int> parts) { return Weight(std::vector<int>(parts)); }

// ---- independent oracle: Schur polynomials via semistandard tableaux ----
// A polynomial in k variables as a map from exponent vectors to integers.
using Poly = std::map<std::vector<int>, long long>;

void ssyt_rec(const Weight& shape, int k, std::vector<std::vector<int>>& fill, int r,
              int c, Poly& out) {
    if (r == static_cast<int>(shape.length())) {
        std::vector<int> expo(static_cast<std::size_t>(k), 0);
        for (const auto& row : fill)
            for (int v : row) ++expo[static_cast<std::size_t>(v - 1)];
        ++out[expo];
        return;
    }
    if (c == shape.part(static_cast<std::size_t>(r))) {
        ssyt_rec(shape, k, fill, r + 1, 0, out);
        return;
    }
    int lo = 1;
    if (c > 0) lo = std::max(lo, fill[static_cast<std::size_t>(r)][static_cast<std::size_t>(c - 1)]);
    if (r > 0 && c < shape.part(static_cast<std::size_t>(r - 1)))
        lo = std::max(lo, fill[static_cast<std::size_t>(r - 1)][static_cast<std::size_t>(c)] + 1);
    for (int v = lo; v <= k; ++v) {
        fill[static_cast<std::size_t>(r)][static_cast<std::size_t>(c)] = v;
        ssyt_rec(shape, k, fill, r, c + 1, out);
    }
}

Poly schur_poly(const Weight& shape, int k) {
    Poly out;
    if (static_cast<int>(shape.normalized().length()) > k) return out;
    std::vector<std::vector<int>> fill;
    for (std::size_t r = 0; r < shape.length(); ++r)
        fill.push_back(std::vector<int>(static_cast<std::size_t>(shape.part(r)), 0));
    ssyt_rec(shape.normalized(), k, fill, 0, 0, out);
    if (shape.normalized().length() == 0) out[std::vector<int>(static_cast<std::size_t>(k), 0)] = 1;
    return out;
}

Poly multiply(const Poly& a, const Poly& b) {
    Poly out;
    for (const auto& [ea, ca] : a) {
        for (const auto& [eb, cb] : b) {
            std::vector<int> e = ea;
            for (std::size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
            out[e] += ca * cb;
        }
    }
    return out;
}

// Expands a symmetric polynomial in the Schur basis by repeatedly
// subtracting the Schur polynomial of the largest partition monomial.
std::map<Weight, long long> schur_expand(Poly p, int k) {
    std::map<Weight, long long> out;
    while (true) {
        const std::pair<const std::vector<int>, long long>* top = nullptr;
        for (const auto& term : p) {
            if (term.second == 0) continue;
            bool partition = true;
            for (std::size_t i = 0; i + 1 < term.first.size(); ++i)
                if (term.first[i] < term.first[i + 1]) partition = false;
            if (partition && (!top || term.first > top->first)) top = &term;
        }
        if (!top) break;
        const Weight shape = Weight(top->first).normalized();
        const long long coeff = top->second;
        out[shape] += coeff;
        for (const auto& [e, c] : schur_poly(shape, k)) p[e] -= coeff * c;
    }
    return out;
}

std::vector<Weight> small_diagrams(int max_size) {
    std::vector<Weight> out;
    for (const Weight& d : enumerate_block(4, 4))
        if (d.size() <= max_size) out.push_back(d);
    return out;
}

}  // namespace

TEST_CASE("lr coefficients on frozen examples") {
    CHECK(lr_coeff(W({1}), W({2}), W({2, 1})) == 1);
    CHECK(lr_coeff(W({1}), W({1}), W({1, 1, 1})) == 0);  // size mismatch
    CHECK(lr_coeff(W({2, 1}), W({2, 1}), W({3, 2, 1})) == 2);
    CHECK(lr_coeff(W({1}), W({1}), W({2})) == 1);
    CHECK(lr_coeff(W({1}), W({1}), W({1, 1})) == 1);
}

TEST_CASE("lr coefficients are symmetric") {
    std::mt19937 rng(77);
    const auto pool = small_diagrams(4);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int trial = 0; trial < 200; ++trial) {
        const Weight lam = pool[pick(rng)];
        const Weight mu = pool[pick(rng)];
        const VirtualModule product = lr_product(lam, mu, 8);
        for (const auto& [nu, c] : product.terms()) {
            CHECK(lr_coeff(lam, mu, nu) == c);
            CHECK(lr_coeff(mu, lam, nu) == c);
        }
    }
}

TEST_CASE("lr products agree with the Schur polynomial oracle") {
    std::mt19937 rng(19);
    const auto pool = small_diagrams(4);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int trial = 0; trial < 12; ++trial) {
        const Weight lam = pool[pick(rng)];
        const Weight mu = pool[pick(rng)];
        const int k = static_cast<int>(lam.size() + mu.size());
        if (k == 0) continue;
        const auto expanded =
            schur_expand(multiply(schur_poly(lam, k), schur_poly(mu, k)), k);
        const VirtualModule product = lr_product(lam, mu, k);
        CHECK(expanded.size() == product.terms().size());
        for (const auto& [nu, c] : expanded)
            CHECK(product.multiplicity(nu) == c);
    }
}

TEST_CASE("gl tensor products with mixed weights") {
    // vector times dual vector at rank 3
    const VirtualModule t = tensor_gl(W({1, 0, 0}), W({0, 0, -1}), 3);
    CHECK(t.terms().size() == 2);
    CHECK(t.multiplicity(W({1, 0, -1})) == 1);
    CHECK(t.multiplicity(W({0, 0, 0})) == 1);

    // identity object
    const Weight lam = W({3, 1, -2});
    const VirtualModule id = tensor_gl(lam, Weight::zero(3), 3);
    CHECK(id.terms().size() == 1);
    CHECK(id.multiplicity(lam) == 1);
}

TEST_CASE("every summand of Sigma^lam (x) Sigma^mu-dual sits between -mu and lam") {
    std::mt19937 rng(5);
    const auto pool = small_diagrams(4);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    const int k = 5;
    for (int trial = 0; trial < 100; ++trial) {
        const Weight lam = pool[pick(rng)].padded(k);
        const Weight mu = pool[pick(rng)].padded(k);
        const VirtualModule t = tensor_gl(lam, negate(mu), k);
        bool has_diagram_summand = false;
        for (const auto& [nu, c] : t.terms()) {
            CHECK(c > 0);
            CHECK(includes(negate(mu), nu));
            CHECK(includes(nu, lam));
            if (nu.is_diagram()) has_diagram_summand = true;
        }
        // a nonnegative summand forces mu inside lam
        if (has_diagram_summand) CHECK(includes(mu, lam));
        if (includes(mu, lam)) CHECK(has_diagram_summand);
    }
}

TEST_CASE("skew expansion") {
    const VirtualModule s = skew(W({2, 1}), W({1}), 4);
    CHECK(s.terms().size() == 2);
    CHECK(s.multiplicity(W({2})) == 1);
    CHECK(s.multiplicity(W({1, 1})) == 1);

    const VirtualModule full = skew(W({3, 1}), Weight(), 4);
    CHECK(full.terms().size() == 1);
    CHECK(full.multiplicity(W({3, 1})) == 1);

    const VirtualModule triv = skew(W({3, 1}), W({3, 1}), 4);
    CHECK(triv.multiplicity(Weight()) == 1);
    CHECK(triv.terms().size() == 1);

    CHECK_THROWS_AS(skew(W({2}), W({1, 1}), 4), std::invalid_argument);
}

TEST_CASE("gl dimensions") {
    CHECK(dim_gl(W({1}), 7) == 7);
    CHECK(dim_gl(W({1, 1}), 4) == 6);
    CHECK(dim_gl(W({2, 1}), 3) == 8);
    CHECK(dim_gl(Weight(), 5) == 1);
    CHECK(dim_gl(W({0, 0, -1}), 3) == 3);  // dual vector
}

TEST_CASE("dimension identity under tensor decomposition") {
    std::mt19937 rng(23);
    const auto pool = small_diagrams(6);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int k = 2; k <= 6; ++k) {
        for (int trial = 0; trial < 20; ++trial) {
            const Weight lam = pool[pick(rng)];
            const Weight mu = pool[pick(rng)];
            if (lam.size() + mu.size() > 6) continue;
            if (static_cast<int>(lam.normalized().length()) > k ||
                static_cast<int>(mu.normalized().length()) > k)
                continue;
            BigInt total = 0;
            const VirtualModule product = lr_product(lam, mu, k);
            for (const auto& [nu, c] : product.terms())
                total += c * dim_gl(nu, k);
            CHECK(total == dim_gl(lam, k) * dim_gl(mu, k));
        }
    }
}

// character shadow of the filtration of Sigma^lam of an extension:
// dim over rank a+b splits through pairs (mu, lam/mu)
TEST_CASE("extension filtration character identity") {
    for (int a = 1; a <= 4; ++a) {
        for (int b = 1; b <= 4; ++b) {
            for (const Weight& lam : small_diagrams(6)) {
                if (static_cast<int>(lam.normalized().length()) > a + b) continue;
                BigInt total = 0;
                for (long long s = 0; s <= lam.size(); ++s) {
                    for (const Weight& mu : small_diagrams(6)) {
                        if (mu.size() != s || !includes(mu, lam)) continue;
                        BigInt skew_dim = 0;
                        const VirtualModule parts = skew(lam, mu, b);
                        for (const auto& [nu, c] : parts.terms())
                            skew_dim += c * dim_gl(nu, b);
                        if (static_cast<int>(mu.normalized().length()) <= a)
                            total += dim_gl(mu, a) * skew_dim;
                    }
                }
                CHECK(total == dim_gl(lam, a + b));
            }
        }
    }
}

TEST_CASE("sp dimensions") {
    CHECK(dim_sp(W({1}), 5) == 10);
    CHECK(dim_sp(W({1, 1}), 5) == 44);
    CHECK(dim_sp(W({1, 1, 1}), 5) == 110);
    CHECK(dim_sp(Weight(), 4) == 1);
    CHECK_THROWS_AS(dim_sp(W({1, 1, 1}), 2), std::invalid_argument);
    CHECK_THROWS_AS(dim_sp(W({1, -1}), 2), std::invalid_argument);
}

TEST_CASE("fundamental representations") {
    CHECK(fundamental_sp(1, 5) == W({1}));
    CHECK(fundamental_sp(5, 5) == W({1, 1, 1, 1, 1}));
    CHECK(dim_sp(fundamental_sp(5, 5), 5) == 132);
    CHECK(dim_sp(fundamental_sp(2, 5), 5) == 44);
    CHECK_THROWS_AS(fundamental_sp(0, 5), std::invalid_argument);
    CHECK_THROWS_AS(fundamental_sp(6, 5), std::invalid_argument);
    for (int n = 1; n <= 8; ++n)
        for (int i = 1; i <= n; ++i)
            CHECK(dim_sp(fundamental_sp(i, n), n) ==
                  binomial(2 * n, i) - binomial(2 * n, i - 2));
}

TEST_CASE("symplectic stable tensor products") {
    const VirtualModule t = tensor_sp_stable(W({1}), W({1}), 4);
    CHECK(t.terms().size() == 3);
    CHECK(t.multiplicity(W({2})) == 1);
    CHECK(t.multiplicity(W({1, 1})) == 1);
    CHECK(t.multiplicity(Weight()) == 1);
    // dims: (2n)^2 = dim(2) + dim(1,1) + 1
    BigInt total = 0;
    for (const auto& [nu, c] : t.terms()) total += c * dim_sp(nu, 4);
    CHECK(total == 64);

    const VirtualModule id = tensor_sp_stable(W({2, 1}), Weight(), 4);
    CHECK(id.terms().size() == 1);
    CHECK(id.multiplicity(W({2, 1})) == 1);

    const VirtualModule t2 = tensor_sp_stable(W({1}), W({1, 1}), 5);
    CHECK(t2.terms().size() == 3);
    CHECK(t2.multiplicity(W({2, 1})) == 1);
    CHECK(t2.multiplicity(W({1, 1, 1})) == 1);
    CHECK(t2.multiplicity(W({1})) == 1);

    CHECK_THROWS_AS(tensor_sp_stable(W({2, 1}), W({2}), 4), std::domain_error);
}

TEST_CASE("Newell-Littlewood dimension consistency in the stable range") {
    std::mt19937 rng(41);
    const auto pool = small_diagrams(4);
    std::uniform_int_distribution<std::size_t> pick(0, pool.size() - 1);
    for (int trial = 0; trial < 60; ++trial) {
        const Weight lam = pool[pick(rng)];
        const Weight mu = pool[pick(rng)];
        const int n = static_cast<int>(lam.size() + mu.size());
        if (n == 0) continue;
        BigInt total = 0;
        const VirtualModule product = tensor_sp_stable(lam, mu, n);
        for (const auto& [nu, c] : product.terms())
            total += c * dim_sp(nu, n);
        CHECK(total == dim_sp(lam, n) * dim_sp(mu, n));
    }
}
