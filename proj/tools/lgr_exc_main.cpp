#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "lgrexc/json_io.hpp"
#include "lgrexc/verify.hpp"

namespace {

using namespace lgrexc;
using nlohmann::json;

int default_jobs() {
    if (const char* env = std::getenv("LGR_EXC_JOBS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

void emit(const json& j, const std::string& format) {
    if (format == "table") {
        std::cout << j.dump(2) << "\n";  // indented rendering doubles as the table view
    } else {
        std::cout << j.dump() << "\n";
    }
}

void emit_certificates(const std::vector<Certificate>& certs, const std::string& format,
                       const std::string& out_file) {
    json payload;
    if (certs.size() == 1)
        payload = to_json(certs.front());
    else {
        payload = json::array();
        for (const Certificate& c : certs) payload.push_back(to_json(c));
    }
    if (!out_file.empty()) {
        std::ofstream os(out_file);
        os << payload.dump(2) << "\n";
    }
    if (format == "table") {
        for (const Certificate& c : certs)
            std::cout << c.claim << ": " << status_name(c.status) << " ("
                      << c.elapsed_ms << " ms)\n";
    } else {
        emit(payload, format);
    }
}

Weight parse_diagram_arg(const std::string& text) {
    const Weight w = parse_weight(text);
    if (!w.is_diagram())
        throw std::invalid_argument("expected a Young diagram, got '" + text + "'");
    return w;
}

struct BlockChoice {
    int h, w;
};

BlockChoice block_for(const Weight& lam, int n, std::optional<int> h,
                      std::optional<int> w) {
    const DiagramStats s = diagram_stats(lam);
    BlockChoice b{h.value_or(s.h), w.value_or(s.w)};
    if (b.h + b.w > n + 1)
        throw std::invalid_argument("block exceeds h + w <= n + 1");
    return b;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Equivariant cohomology on isotropic and Lagrangian Grassmannians: "
                 "Borel-Bott-Weil cells, Euler pairings, Kuznetsov-Polishchuk "
                 "K-classes, staircase complexes and verification suites"};
    app.require_subcommand(1);
    app.set_help_flag("--help", "Print help");
    std::string format = "json";
    app.add_option("--format", format, "Output format")
        ->check(CLI::IsMember({"json", "table"}));
    int jobs = default_jobs();
    app.add_option("--jobs", jobs, "Worker threads for suites")->check(CLI::PositiveNumber);

    // ---- lr ----------------------------------------------------------
    auto* lr = app.add_subcommand("lr", "Littlewood-Richardson calculus");
    lr->set_help_flag("--help", "Print help");
    lr->fallthrough();
    // let --format/--jobs appear after the subcommand too
    
    std::string lr_lambda, lr_mu, lr_nu;
    int lr_rank = 0, lr_sp_n = 0;
    bool lr_skew = false;
    lr->add_option("--lambda", lr_lambda)->required();
    lr->add_option("--mu", lr_mu)->required();
    lr->add_option("--nu", lr_nu, "Single coefficient c^nu");
    lr->add_option("--rank", lr_rank, "Rank bound for a product expansion");
    lr->add_flag("--skew", lr_skew, "Expand the skew functor lambda/mu");
    lr->add_option("--sp", lr_sp_n, "Symplectic stable product at rank n");

    // ---- bbw ---------------------------------------------------------
    auto* bbw = app.add_subcommand("bbw", "Borel-Bott-Weil cohomology cells");
    bbw->set_help_flag("--help", "Print help");
    bbw->fallthrough();
    std::string bbw_space = "lgr";
    int bbw_n = 0, bbw_k = 0, bbw_w = 0, bbw_t = 0;
    std::string bbw_weight, bbw_alpha, bbw_beta, bbw_lambda, bbw_mu;
    bool bbw_bundle = false;
    bbw->add_option("--space", bbw_space)->check(CLI::IsMember({"gr", "igr", "lgr"}));
    bbw->add_option("--n", bbw_n)->required()->check(CLI::PositiveNumber);
    bbw->add_option("--k", bbw_k, "Subspace dimension (gr)");
    bbw->add_option("--w", bbw_w, "Isotropic dimension (igr)");
    bbw->add_option("--weight", bbw_weight, "Full weight (lgr)");
    bbw->add_option("--alpha", bbw_alpha, "W* weight (igr)");
    bbw->add_option("--beta", bbw_beta, "Symplectic diagram (igr)");
    bbw->add_option("--lambda", bbw_lambda, "V/U weight (gr) or diagram (bundle)");
    bbw->add_option("--mu", bbw_mu, "U weight (gr) or diagram (bundle)");
    bbw->add_option("--t", bbw_t, "Twist (bundle mode)");
    bbw->add_flag("--bundle", bbw_bundle,
                  "Graded cohomology of Sigma^lambda U (x) Sigma^mu U*(t) on lgr");

    // ---- chi ---------------------------------------------------------
    auto* chi = app.add_subcommand("chi", "Euler pairings");
    chi->set_help_flag("--help", "Print help");
    chi->fallthrough();
    int chi_n = 0, chi_t = 0;
    std::string chi_mu, chi_nu;
    bool chi_equivariant = false, chi_e_mu = false, chi_e_nu = false;
    chi->add_option("--n", chi_n)->required()->check(CLI::PositiveNumber);
    chi->add_option("--mu", chi_mu)->required();
    chi->add_option("--nu", chi_nu)->required();
    chi->add_option("--t", chi_t, "Twist applied to the first argument");
    chi->add_flag("--equivariant", chi_equivariant);
    chi->add_flag("--e-mu", chi_e_mu, "Interpret mu as an E-object diagram");
    chi->add_flag("--e-nu", chi_e_nu, "Interpret nu as an E-object diagram");

    // ---- kclass ------------------------------------------------------
    auto* kc = app.add_subcommand("kclass", "K-classes of the exceptional objects");
    kc->set_help_flag("--help", "Print help");
    kc->fallthrough();
    int kc_n = 0, kc_twist = 0;
    std::optional<int> kc_h, kc_w;
    std::string kc_lambda;
    bool kc_dual = false;
    kc->add_option("--n", kc_n)->required()->check(CLI::PositiveNumber);
    kc->add_option("--lambda", kc_lambda)->required();
    kc->add_option("--h", kc_h, "Block height (default: rows of lambda)");
    kc->add_option("--w", kc_w, "Block width (default: width of lambda)");
    kc->add_option("--twist", kc_twist);
    kc->add_flag("--dual", kc_dual, "Emit [F^lambda] instead of [E^lambda]");

    // ---- staircase ---------------------------------------------------
    auto* st = app.add_subcommand("staircase", "Staircase complexes");
    st->set_help_flag("--help", "Print help");
    st->fallthrough();
    int st_n = 0, st_twist = 0, st_then_twist = 0;
    std::optional<int> st_h, st_w;
    std::string st_lambda, st_then;
    bool st_verify = false;
    st->add_option("--n", st_n)->required()->check(CLI::PositiveNumber);
    st->add_option("--lambda", st_lambda)->required();
    st->add_option("--h", st_h);
    st->add_option("--w", st_w);
    st->add_option("--twist", st_twist);
    st->add_option("--then", st_then, "Second diagram: splice this staircase on the right");
    st->add_option("--then-twist", st_then_twist);
    st->add_flag("--verify", st_verify, "Run the Euler probe suite");

    // ---- verify ------------------------------------------------------
    auto* vf = app.add_subcommand("verify", "Verification suites");
    vf->set_help_flag("--help", "Print help");
    vf->fallthrough();
    std::vector<std::string> vf_suites;
    int vf_n = 0, vf_max_entry = 4;
    std::optional<int> vf_h, vf_w;
    std::string vf_out;
    vf->add_option("--suite", vf_suites, "Suite selectors")->required()->delimiter(',');
    vf->add_option("--n", vf_n);
    vf->add_option("--h", vf_h);
    vf->add_option("--w", vf_w);
    vf->add_option("--max-entry", vf_max_entry, "Entry bound for lemma enumerations");
    vf->add_option("--out", vf_out, "Also write certificates to a file");

    // ---- enumerate ---------------------------------------------------
    auto* en = app.add_subcommand("enumerate", "Diagram utilities");
    en->set_help_flag("--help", "Print help");
    en->fallthrough();
    std::optional<int> en_h, en_w, en_dim_gl, en_dim_sp;
    std::string en_lambda, en_word;
    bool en_stats = false, en_transpose = false, en_to_word = false;
    en->add_option("--h", en_h);
    en->add_option("--w", en_w);
    en->add_option("--lambda", en_lambda);
    en->add_option("--word", en_word, "Binary word to decode");
    en->add_flag("--stats", en_stats, "Report (h, w, t) of a diagram");
    en->add_flag("--transpose", en_transpose);
    en->add_flag("--to-word", en_to_word, "Encode lambda as a binary word (needs --h/--w)");
    en->add_option("--dim-gl", en_dim_gl, "Weyl dimension at GL rank k");
    en->add_option("--dim-sp", en_dim_sp, "Weyl dimension at Sp rank n");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);  // --help
        app.exit(e);
        return 2;
    }

    try {
        if (lr->parsed()) {
            if (lr_skew && lr_sp_n > 0)
                throw std::invalid_argument("--skew and --sp are mutually exclusive");
            const Weight lam = parse_diagram_arg(lr_lambda);
            const Weight mu = parse_diagram_arg(lr_mu);
            if (!lr_nu.empty()) {
                emit({{"lambda", lr_lambda}, {"mu", lr_mu}, {"nu", lr_nu},
                      {"value", lr_coeff(lam, mu, parse_diagram_arg(lr_nu))}},
                     format);
            } else {
                VirtualModule vm(Group::gl, 1);
                if (lr_sp_n > 0)
                    vm = tensor_sp_stable(lam, mu, lr_sp_n);
                else if (lr_skew)
                    vm = skew(lam, mu, lr_rank > 0 ? lr_rank : static_cast<int>(lam.length()));
                else {
                    const int k = lr_rank > 0
                                      ? lr_rank
                                      : static_cast<int>(lam.length() + mu.length());
                    vm = lr_product(lam, mu, k);
                }
                json terms = json::object();
                for (const auto& [nu, c] : vm.terms())
                    terms[to_string(nu.normalized())] = c;
                emit({{"terms", terms}}, format);
            }
        } else if (bbw->parsed()) {
            if (bbw_bundle) {
                const auto graded = coh_lgr_bundle(parse_diagram_arg(bbw_lambda),
                                                   parse_diagram_arg(bbw_mu), bbw_t, bbw_n);
                emit(to_json(graded, bbw_n), format);
            } else if (bbw_space == "lgr") {
                const Weight w = parse_weight(bbw_weight).padded(
                    static_cast<std::size_t>(bbw_n));
                emit(to_json(coh_lgr(w, bbw_n), bbw_n, Group::sp), format);
            } else if (bbw_space == "igr") {
                const Weight alpha = parse_weight(bbw_alpha);
                const Weight beta = bbw_beta.empty()
                                        ? Weight::zero(static_cast<std::size_t>(bbw_n - bbw_w))
                                        : parse_weight(bbw_beta).padded(
                                              static_cast<std::size_t>(bbw_n - bbw_w));
                emit(to_json(coh_igr(alpha.padded(static_cast<std::size_t>(bbw_w)), beta,
                                     bbw_w, bbw_n),
                             bbw_n, Group::sp),
                     format);
            } else {
                const Weight lam = parse_weight(bbw_lambda);
                const Weight mu = bbw_mu.empty()
                                      ? Weight::zero(static_cast<std::size_t>(bbw_k))
                                      : parse_weight(bbw_mu).padded(
                                            static_cast<std::size_t>(bbw_k));
                emit(to_json(coh_gr_relative(
                                 lam.padded(static_cast<std::size_t>(bbw_n - bbw_k)), mu,
                                 bbw_n),
                             bbw_n, Group::gl),
                     format);
            }
        } else if (chi->parsed()) {
            if (chi_equivariant) {
                if (chi_e_mu || chi_e_nu || chi_t != 0)
                    throw std::invalid_argument(
                        "--equivariant pairs plain labels without twists");
                emit({{"chi_equivariant",
                       euler_pairing_equivariant(parse_weight(chi_mu),
                                                 parse_weight(chi_nu), chi_n)}},
                     format);
            } else {
                auto as_kclass = [&](const std::string& text, bool e_object) {
                    if (!e_object) return KClass::sigma(chi_n, parse_weight(text));
                    const Weight lam = parse_diagram_arg(text);
                    const BlockChoice b = block_for(lam, chi_n, std::nullopt, std::nullopt);
                    return kclass_E(lam, b.h, b.w, chi_n);
                };
                const KClass a = twist_kclass(as_kclass(chi_mu, chi_e_mu), chi_t);
                const KClass b = as_kclass(chi_nu, chi_e_nu);
                emit({{"chi", big_to_json(euler_pairing(a, b))}}, format);
            }
        } else if (kc->parsed()) {
            const Weight lam = parse_diagram_arg(kc_lambda);
            const BlockChoice b = block_for(lam, kc_n, kc_h, kc_w);
            KClass x = kc_dual ? kclass_F(lam, b.h, b.w, kc_n)
                               : kclass_E(lam, b.h, b.w, kc_n);
            if (kc_twist != 0) x = twist_kclass(x, kc_twist);
            json j = to_json(x);
            emit({{"kclass", j}, {"rank", big_to_json(kclass_rank(x))}}, format);
        } else if (st->parsed()) {
            const Weight lam = parse_diagram_arg(st_lambda);
            const int w = st_w.value_or(lam.part(0));
            const int h = st_h.value_or(st_n + 1 - w);
            StairComplex c = twist_complex(build_staircase(lam, h, w, st_n), st_twist);
            if (!st_then.empty()) {
                const Weight lam2 = parse_diagram_arg(st_then);
                const int w2 = lam2.part(0);
                c = splice(c, twist_complex(build_staircase(lam2, st_n + 1 - w2, w2, st_n),
                                            st_then_twist));
            }
            if (st_verify) {
                const Certificate cert =
                    verify_exactness_probe(c, default_probes(st_n), jobs);
                emit_certificates({cert}, format, "");
                return cert.ok() ? 0 : 1;
            }
            emit(to_json(c), format);
        } else if (vf->parsed()) {
            std::vector<Certificate> certs;
            for (const std::string& suite : vf_suites) {
                const auto lemmas = lemma_names();
                if (std::find(lemmas.begin(), lemmas.end(), suite) != lemmas.end()) {
                    if (vf_n <= 0) throw std::invalid_argument("--n required for " + suite);
                    certs.push_back(
                        verify_lemma(suite, vf_n, LemmaBounds{vf_max_entry}, jobs));
                } else if (suite == "lemmas") {
                    if (vf_n <= 0) throw std::invalid_argument("--n required for lemmas");
                    for (const std::string& name : lemmas)
                        certs.push_back(
                            verify_lemma(name, vf_n, LemmaBounds{vf_max_entry}, jobs));
                } else if (suite == "prop_main") {
                    if (vf_n <= 0) throw std::invalid_argument("--n required for prop_main");
                    if (vf_h && vf_w) {
                        certs.push_back(verify_prop_main(vf_n, *vf_h, *vf_w));
                    } else {
                        for (int w = 1; w <= vf_n; ++w)
                            certs.push_back(verify_prop_main(vf_n, vf_n + 1 - w, w));
                    }
                } else if (suite == "igr_ec") {
                    if (vf_n <= 0) throw std::invalid_argument("--n required for igr_ec");
                    if (vf_w) {
                        certs.push_back(verify_igr_ec(vf_n, *vf_w));
                    } else {
                        for (int w = 1; w < vf_n; ++w)
                            certs.push_back(verify_igr_ec(vf_n, w));
                    }
                } else if (suite == "kp_count") {
                    if (vf_n <= 0) throw std::invalid_argument("--n required for kp_count");
                    certs.push_back(verify_kp_count(vf_n));
                } else if (suite == "kp_chi") {
                    if (vf_n <= 0) throw std::invalid_argument("--n required for kp_chi");
                    certs.push_back(verify_kp_chi(vf_n, jobs));
                } else if (suite == "lefschetz510") {
                    certs.push_back(verify_lefschetz_510(jobs));
                } else if (suite == "closure") {
                    if (vf_n <= 0) throw std::invalid_argument("--n required for closure");
                    certs.push_back(generation_closure(vf_n));
                } else if (suite == "steps510") {
                    certs.push_back(verify_510_steps(jobs));
                } else {
                    throw std::invalid_argument("unknown suite '" + suite + "'");
                }
            }
            emit_certificates(certs, format, vf_out);
            for (const Certificate& c : certs)
                if (!c.ok()) return 1;
        } else if (en->parsed()) {
            if (!en_word.empty()) {
                emit({{"diagram", to_string(word_to_diagram(en_word))}}, format);
            } else if (!en_lambda.empty()) {
                const Weight lam = parse_diagram_arg(en_lambda);
                json j;
                if (en_to_word) {
                    if (!en_h || !en_w)
                        throw std::invalid_argument("--to-word needs --h and --w");
                    j["word"] = diagram_to_word(lam, *en_h, *en_w);
                }
                if (en_transpose) j["transpose"] = to_string(transpose(lam));
                if (en_stats) {
                    const DiagramStats s = diagram_stats(lam);
                    j["stats"] = {{"h", s.h}, {"w", s.w}, {"t", s.t}};
                }
                if (en_dim_gl) j["dim_gl"] = big_to_json(dim_gl(lam, *en_dim_gl));
                if (en_dim_sp) j["dim_sp"] = big_to_json(dim_sp(lam, *en_dim_sp));
                if (j.empty()) j = {{"size", lam.size()}};
                emit(j, format);
            } else if (en_h && en_w) {
                json diagrams = json::array();
                for (const Weight& d : enumerate_block(*en_h, *en_w))
                    diagrams.push_back(to_string(d));
                emit({{"count", diagrams.size()}, {"diagrams", diagrams}}, format);
            } else {
                throw std::invalid_argument("enumerate needs --h/--w, --lambda or --word");
            }
        }
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
