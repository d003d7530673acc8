#include "lgrexc/staircase.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "lgrexc/parallel.hpp"
#include "lgrexc/schur.hpp"

namespace lgrexc {

namespace {

std::string e_name(const Weight& lam, int t) {
    std::ostringstream os;
    const Weight l = lam.normalized();
    if (l.length() == 0)
        os << "O";
    else
        os << "E^{" << to_string(l) << "}";
    if (t != 0) os << "(" << t << ")";
    return os.str();
}

long long to_ll(const BigInt& v) {
    return v.convert_to<long long>();
}

}  // namespace

StairComplex build_staircase(const Weight& lam, int h, int w, int n) {
    if (h + w != n + 1)
        throw std::invalid_argument("build_staircase: need h + w = n + 1");
    const StairData data = staircase_truncations(lam, h, w);  // validates the shape

    StairComplex c;
    c.n = n;
    c.terms.push_back(StairTerm{
        -(w + 1), 1, twist_kclass(kclass_E(data.lambda_prime, h - 1, w + 1, n), -1),
        e_name(data.lambda_prime, -1), data.lambda_prime, -1});
    for (int i = w; i >= 1; --i) {
        const int nu = data.nus[static_cast<std::size_t>(i - 1)];
        const Weight& trunc = data.truncations[static_cast<std::size_t>(i - 1)];
        c.terms.push_back(StairTerm{
            -i, to_ll(dim_sp(fundamental_sp(nu, n), n)), kclass_E(trunc, h, w, n),
            "V^[" + std::to_string(nu) + "] * " + e_name(trunc, 0), trunc, 0});
    }
    c.terms.push_back(StairTerm{0, 1, kclass_E(data.lambda, h, w, n),
                                e_name(data.lambda, 0), data.lambda, 0});
    return c;
}

StairComplex twist_complex(const StairComplex& c, int t) {
    if (t == 0) return c;
    StairComplex out;
    out.n = c.n;
    out.terms.reserve(c.terms.size());
    for (const StairTerm& term : c.terms) {
        StairTerm shifted = term;
        shifted.kclass = twist_kclass(term.kclass, t);
        shifted.e_twist = term.e_twist + t;
        const auto sep = term.description.find(" * ");
        const std::string prefix =
            sep == std::string::npos ? "" : term.description.substr(0, sep + 3);
        shifted.description = prefix + e_name(term.e_label, shifted.e_twist);
        out.terms.push_back(std::move(shifted));
    }
    return out;
}

KClass euler_class(const StairComplex& c) {
    KClass total(c.n);
    for (const StairTerm& term : c.terms) {
        const long long sign = (((term.position % 2) + 2) % 2 == 0) ? 1 : -1;
        total.add(term.kclass, sign * term.multiplicity_dim);
    }
    return total;
}

StairComplex splice(const StairComplex& c1, const StairComplex& c2) {
    if (c1.n != c2.n) throw std::invalid_argument("splice: rank mismatch");
    if (c1.terms.size() < 2 || c2.terms.size() < 2)
        throw std::invalid_argument("splice: complexes too short");
    const StairTerm& tail = c1.terms.back();
    const StairTerm& head = c2.terms.front();
    if (!(tail.kclass == head.kclass) || tail.multiplicity_dim != head.multiplicity_dim)
        throw std::invalid_argument("splice: interface terms do not match");

    StairComplex out;
    out.n = c1.n;
    const int shift = head.position + 1;  // c1's penultimate lands where the shared term sat
    for (std::size_t i = 0; i + 1 < c1.terms.size(); ++i) {
        StairTerm term = c1.terms[i];
        term.position += shift;
        out.terms.push_back(std::move(term));
    }
    for (std::size_t i = 1; i < c2.terms.size(); ++i) out.terms.push_back(c2.terms[i]);
    for (std::size_t i = 0; i + 1 < out.terms.size(); ++i) {
        if (out.terms[i].position >= out.terms[i + 1].position)
            throw std::logic_error("splice: positions failed to interleave");
    }
    return out;
}

std::vector<Weight> default_probes(int n) { return enumerate_block(n, n); }

Certificate verify_exactness_probe(const StairComplex& c,
                                   const std::vector<Weight>& probes, int jobs) {
    return timed_certificate([&] {
        Certificate cert;
        cert.claim = "staircase-euler-exactness";
        cert.parameters["n"] = c.n;
        cert.parameters["terms"] = c.terms.size();
        cert.parameters["probes"] = probes.size();
        {
            std::vector<std::string> names;
            for (const StairTerm& t : c.terms) names.push_back(t.description);
            cert.parameters["complex"] = names;
        }
        const KClass total = euler_class(c);
        std::vector<BigInt> values(probes.size());
        parallel_for(probes.size(), jobs, [&](std::size_t i) {
            values[i] = euler_pairing(KClass::sigma(c.n, probes[i]), total);
        });
        for (std::size_t i = 0; i < probes.size(); ++i) {
            if (values[i] != 0) {
                cert.witnesses.push_back({{"probe", to_string(probes[i])},
                                          {"value", values[i].str()}});
            }
        }
        cert.status = cert.witnesses.empty() ? Status::necessary_condition_pass
                                             : Status::fail;
        return cert;
    });
}

}  // namespace lgrexc
