// Acceptance suite: every release-gating check in one binary, one line of
// output per criterion. All comparisons are exact integer equalities; the
// per-criterion wall-clock budgets are part of the pass condition.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "lgrexc/bbw.hpp"
#include "lgrexc/kclass.hpp"
#include "lgrexc/staircase.hpp"
#include "lgrexc/verify.hpp"

using namespace lgrexc;

namespace {

int jobs() {
    if (const char* env = std::getenv("LGR_EXC_JOBS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    const unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

Weight W(std::initializer_list<int> parts) { return Weight(std::vector<int>(parts)); }

struct Criterion {
    std::string description;
    long long budget_ms;
    std::function<bool(std::string&)> run;
};

bool criterion_truncation_example(std::string& note) {
    const StairData d = staircase_truncations(W({3, 3, 1}), 3, 3);
    const bool ok = d.truncations.size() == 3 && d.truncations[0] == W({2, 2, 1}) &&
                    d.truncations[1] == W({2, 1, 1}) && d.truncations[2] == W({2}) &&
                    d.nus == std::vector<int>{2, 3, 5};
    note = "lambda=(3,3,1), n=5";
    return ok;
}

bool criterion_lemma_suites(std::string& note) {
    int suites = 0;
    for (int n = 1; n <= 5; ++n) {
        for (const std::string& name : lemma_names()) {
            const Certificate cert = verify_lemma(name, n, LemmaBounds{4}, jobs());
            ++suites;
            if (cert.status != Status::pass) {
                note = name + " failed at n=" + std::to_string(n);
                return false;
            }
        }
    }
    note = std::to_string(suites) + " suites, entries <= 4";
    return true;
}

bool criterion_prop_main(std::string& note) {
    int blocks = 0;
    for (int n = 1; n <= 5; ++n) {
        for (int w = 1; w <= n; ++w) {
            const Certificate cert = verify_prop_main(n, n + 1 - w, w);
            ++blocks;
            if (cert.status != Status::pass) {
                note = "failed at n=" + std::to_string(n) + ", w=" + std::to_string(w);
                return false;
            }
        }
    }
    note = std::to_string(blocks) + " blocks";
    return true;
}

bool criterion_lefschetz(std::string& note) {
    const Certificate cert = verify_lefschetz_510(jobs());
    note = "157 triples, one surviving cell";
    return cert.status == Status::pass;
}

bool criterion_kp_count(std::string& note) {
    for (int n = 1; n <= 10; ++n)
        if (verify_kp_count(n).status != Status::pass) {
            note = "failed at n=" + std::to_string(n);
            return false;
        }
    note = "2^n objects for n = 1..10";
    return true;
}

bool criterion_gram(std::string& note) {
    long long entries = 0;
    for (int n = 1; n <= 5; ++n) {
        for (int h = 0; h <= n + 1; ++h) {
            for (int w = 0; h + w <= n + 1; ++w) {
                const GramMatrix g = gram_matrix(h, w, n);
                for (std::size_t i = 0; i < g.labels.size(); ++i) {
                    for (std::size_t j = 0; j < g.labels.size(); ++j) {
                        ++entries;
                        if (i == j && g.entries[i][j] != 1) {
                            note = "diagonal failure in block " + std::to_string(h) +
                                   "x" + std::to_string(w) + " at n=" + std::to_string(n);
                            return false;
                        }
                        if (!includes(g.labels[j], g.labels[i]) && g.entries[i][j] != 0) {
                            note = "triangularity failure in block " + std::to_string(h) +
                                   "x" + std::to_string(w) + " at n=" + std::to_string(n);
                            return false;
                        }
                    }
                }
            }
        }
    }
    note = std::to_string(entries) + " pairings";
    return true;
}

bool criterion_staircase_probes(std::string& note) {
    int complexes = 0;
    for (int n = 1; n <= 4; ++n) {
        const auto probes = default_probes(n);
        for (int w = 1; w <= n; ++w) {
            const int h = n + 1 - w;
            for (const Weight& lam : enumerate_block(h, w)) {
                if (lam.part(0) != w) continue;
                ++complexes;
                const Certificate cert =
                    verify_exactness_probe(build_staircase(lam, h, w, n), probes, jobs());
                if (cert.status != Status::necessary_condition_pass) {
                    note = "failure at n=" + std::to_string(n) + ", lambda=" +
                           to_string(lam);
                    return false;
                }
            }
        }
    }
    // the spliced seven-term ladder at n = 5
    const StairComplex glued =
        splice(twist_complex(build_staircase(W({3, 1, 1}), 3, 3, 5), 1),
               twist_complex(build_staircase(W({2, 2}), 4, 2, 5), 2));
    const Certificate cert = verify_exactness_probe(glued, default_probes(5), jobs());
    if (cert.status != Status::necessary_condition_pass) {
        note = "spliced ladder failed at n=5";
        return false;
    }
    note = std::to_string(complexes) + " staircases (n <= 4) + the n=5 splice";
    return true;
}

bool criterion_serre(std::string& note) {
    std::mt19937 rng(2026);
    long long pairs = 0;
    for (int n : {2, 3, 4}) {
        const int sign = ((n * (n + 1) / 2) % 2 == 0) ? 1 : -1;
        std::uniform_int_distribution<int> entry(-3, 3);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<int> pa(static_cast<std::size_t>(n)), pb(static_cast<std::size_t>(n));
            for (int& v : pa) v = entry(rng);
            for (int& v : pb) v = entry(rng);
            std::sort(pa.begin(), pa.end(), std::greater<int>());
            std::sort(pb.begin(), pb.end(), std::greater<int>());
            const Weight a{pa}, b{pb};
            ++pairs;
            if (euler_pairing(a, b, 0, n) !=
                sign * euler_pairing(KClass::sigma(n, b),
                                     KClass::sigma(n, twist(a, -(n + 1))))) {
                note = "mismatch at n=" + std::to_string(n) + ", a=" + to_string(a) +
                       ", b=" + to_string(b);
                return false;
            }
        }
    }
    note = std::to_string(pairs) + " random label pairs";
    return true;
}

bool criterion_closure(std::string& note) {
    for (int n = 1; n <= 5; ++n) {
        const Certificate cert = generation_closure(n);
        if (cert.status != Status::pass) {
            note = "stalled at n=" + std::to_string(n);
            return false;
        }
    }
    note = "O(n+1) reached for n = 1..5, induction replay ok";
    return true;
}

bool criterion_steps(std::string& note) {
    const Certificate cert = verify_510_steps(jobs());
    note = "11 steps, probes + bookkeeping";
    return cert.status == Status::necessary_condition_pass;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"staircase truncation data for (3,3,1) at n=5", 1000, criterion_truncation_example},
        {"cohomology classification suites, n <= 5, entries <= 4", 60000, criterion_lemma_suites},
        {"truncation pairing classification, all blocks, n <= 5", 60000, criterion_prop_main},
        {"LGr(5,10) Lefschetz exceptionality scan", 300000, criterion_lefschetz},
        {"collection size 2^n for n <= 10", 1000, criterion_kp_count},
        {"block pairing matrices unitriangular, n <= 5", 120000, criterion_gram},
        {"staircase Euler exactness, n <= 4, plus the n=5 splice", 300000, criterion_staircase_probes},
        {"Serre duality symmetry on random labels, n in {2,3,4}", 60000, criterion_serre},
        {"generation closure reaches O(n+1), n <= 5", 600000, criterion_closure},
        {"eleven-step LGr(5,10) generation ladder", 300000, criterion_steps},
    };

    int failures = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        std::string note;
        bool ok = false;
        try {
            ok = criteria[i].run(note);
        } catch (const std::exception& e) {
            ok = false;
            note = std::string("exception: ") + e.what();
        }
        const auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                            std::chrono::steady_clock::now() - start)
                            .count();
        const bool in_budget = ms <= criteria[i].budget_ms;
        if (!in_budget && note.empty()) note = "over budget";
        const bool pass = ok && in_budget;
        if (!pass) ++failures;
        std::printf("[%2zu/%zu] %s  %s (%lld ms, budget %lld ms)%s%s\n", i + 1,
                    criteria.size(), pass ? "PASS" : "FAIL",
                    criteria[i].description.c_str(), static_cast<long long>(ms),
                    criteria[i].budget_ms, note.empty() ? "" : " -- ", note.c_str());
    }
    if (failures) {
        std::printf("%d of %zu criteria failed\n", failures, criteria.size());
        return 1;
    }
    std::printf("all %zu criteria passed\n", criteria.size());
    return 0;
}
