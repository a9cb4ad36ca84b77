// Command-line front end: parse forests, characters and Laurent values,
// run the structure maps and flows, and drive the verification suites.
//
// Exit codes: 0 success, 1 failed checks or infeasible solve, 2 bad usage
// or syntax errors in any of the input grammars.

#include "hopfrg/charfile.hpp"
#include "hopfrg/errors.hpp"
#include "hopfrg/renorm.hpp"
#include "hopfrg/suites.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

using namespace hopfrg;

namespace {

struct Context {
    std::vector<std::string> def_strings;
    std::vector<std::string> char_files;
    std::vector<std::string> extra_params;
    std::string t_symbol = "t";
    std::string s_symbol = "s";
    std::string output = "text";
    int jobs = 1; // suites run single-threaded; accepted for compatibility

    ParamSet params() const {
        ParamSet p;
        p.declare(t_symbol);
        p.declare(s_symbol);
        for (const auto& name : extra_params) p.declare(name);
        return p;
    }

    std::map<std::string, CharDef> load_defs() const {
        std::map<std::string, CharDef> defs;
        const ParamSet p = params();
        for (const auto& path : char_files) {
            std::ifstream in(path);
            if (!in) throw DomainError("cannot open character file '" + path + "'");
            std::stringstream buf;
            buf << in.rdbuf();
            for (CharDef& def : parse_char_file(buf.str(), p)) {
                const std::string name = def.name;
                if (!defs.emplace(name, std::move(def)).second)
                    throw DomainError("duplicate character name '" + name + "'");
            }
        }
        for (const auto& text : def_strings) {
            CharDef def = parse_char_def(text, p);
            const std::string name = def.name;
            if (!defs.emplace(name, std::move(def)).second)
                throw DomainError("duplicate character name '" + name + "'");
        }
        return defs;
    }

    CharDef lookup(const std::string& name) const {
        auto defs = load_defs();
        auto it = defs.find(name);
        if (it == defs.end()) throw DomainError("unknown character '" + name + "'");
        return it->second;
    }
};

Alg parse_alg(const std::string& s) {
    if (s == "H") return Alg::H;
    if (s == "K") return Alg::K;
    throw CLI::ValidationError("--alg/--on must be H or K");
}

int default_max_degree() {
    if (const char* env = std::getenv("HOPFRG_MAX_DEGREE")) {
        try {
            return std::max(0, std::stoi(env));
        } catch (...) {
            throw DomainError("HOPFRG_MAX_DEGREE must be an integer");
        }
    }
    return 4;
}

void print_report(const Report& rep, const Context& ctx) {
    std::cout << render_report(rep, ctx.output == "tsv");
    std::cerr << "elapsed_ms: " << rep.elapsed_ms << "\n";
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact Hopf-algebra combinatorics on rooted forests:\n"
                 "coproducts, Birkhoff decomposition, flows and beta functions"};
    app.require_subcommand(1);
    app.fallthrough();

    Context ctx;
    app.add_option("--def", ctx.def_strings,
                   "inline character: \"NAME[ on H|K]: <forest>=<value>; ...\"");
    app.add_option("--char", ctx.char_files, "character definition file");
    app.add_option("--param", ctx.extra_params, "declare an extra formal parameter name");
    app.add_option("--t-symbol", ctx.t_symbol, "name of the flow parameter (default t)");
    app.add_option("--s-symbol", ctx.s_symbol, "name of the second flow parameter (default s)");
    app.add_option("--output", ctx.output, "text|tsv")->check(CLI::IsMember({"text", "tsv"}));
    app.add_option("--jobs", ctx.jobs, "reserved; suites run single-threaded")
        ->check(CLI::PositiveNumber);

    std::string forest_arg, alg_name_arg = "H";
    std::string phi_name, psi_name, alpha_name, chi_name, beta_name;
    std::string suite_name, method_name = "all";
    int max_degree = default_max_degree();
    int k_max_degree = -1;
    int max_vertices = 4;
    bool trees_only = false, k_forests = false, infinitesimal_action = false;
    std::uint64_t seed = 42;

    auto* coprod = app.add_subcommand("coprod", "Connes-Kreimer coproduct of a forest");
    coprod->add_option("forest", forest_arg)->required();

    auto* kcoprod = app.add_subcommand("kcoprod", "extraction-contraction coproduct (K)");
    kcoprod->add_option("forest", forest_arg)->required();

    auto* antipode_cmd = app.add_subcommand("antipode", "antipode of a forest");
    antipode_cmd->add_option("forest", forest_arg)->required();
    antipode_cmd->add_option("--alg", alg_name_arg, "H (default) or K");

    auto* coact = app.add_subcommand("coact", "coaction of H into K # H");
    coact->add_option("forest", forest_arg)->required();

    auto* enumerate_cmd = app.add_subcommand("enumerate", "canonical forests up to a size");
    enumerate_cmd->add_option("--max-vertices", max_vertices);
    enumerate_cmd->add_flag("--trees-only", trees_only);
    enumerate_cmd->add_flag("--k-forests", k_forests, "K-basis forests; bound counts edges");

    auto* convolve_cmd = app.add_subcommand("convolve", "(PHI * PSI)(forest)");
    convolve_cmd->add_option("phi", phi_name)->required();
    convolve_cmd->add_option("psi", psi_name)->required();
    convolve_cmd->add_option("forest", forest_arg)->required();
    convolve_cmd->add_option("--on", alg_name_arg, "H (default) or K");

    auto* inverse_cmd = app.add_subcommand("inverse", "convolution inverse value");
    inverse_cmd->add_option("phi", phi_name)->required();
    inverse_cmd->add_option("forest", forest_arg)->required();
    inverse_cmd->add_option("--on", alg_name_arg, "H (default) or K");

    auto* birkhoff_cmd = app.add_subcommand("birkhoff", "Birkhoff decomposition values");
    birkhoff_cmd->add_option("phi", phi_name)->required();
    birkhoff_cmd->add_option("forest", forest_arg)->required();

    auto* baction_cmd = app.add_subcommand("baction", "(BETA ⋆ PHI)(forest) via the coaction");
    baction_cmd->add_option("beta", beta_name)->required();
    baction_cmd->add_option("phi", phi_name)->required();
    baction_cmd->add_option("forest", forest_arg)->required();
    baction_cmd->add_flag("--infinitesimal", infinitesimal_action,
                          "treat BETA as an infinitesimal character");

    auto* rtilde_cmd = app.add_subcommand("rtilde", "gamma with alpha ⋆ phi = phi * gamma");
    rtilde_cmd->add_option("--phi", phi_name)->required();
    rtilde_cmd->add_option("--alpha", alpha_name)->required();
    rtilde_cmd->add_option("forest", forest_arg)->required();

    auto* flow_cmd = app.add_subcommand("flow", "phi_t = exp*(t z alpha) ⋆ phi");
    flow_cmd->add_option("--phi", phi_name)->required();
    flow_cmd->add_option("--alpha", alpha_name)->required();
    flow_cmd->add_option("forest", forest_arg)->required();

    auto* rg_cmd = app.add_subcommand("rg", "renormalization group value F_t(forest)");
    rg_cmd->add_option("--phi", phi_name)->required();
    rg_cmd->add_option("--alpha", alpha_name)->required();
    rg_cmd->add_option("--max-degree", max_degree, "locality is verified to this degree first");
    rg_cmd->add_option("forest", forest_arg)->required();

    auto* beta_cmd = app.add_subcommand("beta", "beta function value at a forest");
    beta_cmd->add_option("--phi", phi_name)->required();
    beta_cmd->add_option("--alpha", alpha_name)->required();
    beta_cmd->add_option("--method", method_name, "generator|residue|counterterm|all");
    beta_cmd->add_option("--max-degree", max_degree, "locality is verified to this degree first");
    beta_cmd->add_option("forest", forest_arg)->required();

    auto* locality_cmd = app.add_subcommand("locality", "is the counterterm flow-independent?");
    locality_cmd->add_option("--phi", phi_name)->required();
    locality_cmd->add_option("--alpha", alpha_name)->required();
    locality_cmd->add_option("--max-degree", max_degree);

    auto* construct_cmd =
        app.add_subcommand("construct-local", "solve z*rtilde(phi) = chi for counterterm phi");
    construct_cmd->add_option("--alpha", alpha_name)->required();
    construct_cmd->add_option("--chi", chi_name)->required();
    construct_cmd->add_option("--max-degree", max_degree);

    auto* verify_cmd = app.add_subcommand("verify", "run a property suite");
    verify_cmd->add_option("--suite", suite_name)->required();
    verify_cmd->add_option("--max-degree", max_degree);
    verify_cmd->add_option("--k-max-degree", k_max_degree, "edge bound for K (default degree-2)");
    verify_cmd->add_option("--seed", seed);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (*coprod) {
            std::cout << delta(Alg::H, parse_forest(forest_arg)).render() << "\n";
        } else if (*kcoprod) {
            std::cout << delta(Alg::K, parse_forest(forest_arg)).render() << "\n";
        } else if (*antipode_cmd) {
            const Alg tag = parse_alg(alg_name_arg);
            std::cout << antipode(tag, parse_forest(forest_arg)).render() << "\n";
        } else if (*coact) {
            std::cout << coaction(parse_forest(forest_arg)).render() << "\n";
        } else if (*enumerate_cmd) {
            if (k_forests) {
                for (const Forest& f : enumerate_k_forests(max_vertices))
                    std::cout << f.render() << "\n";
            } else {
                for (const Forest& f : enumerate_forests(max_vertices)) {
                    if (trees_only && !f.is_single_tree()) continue;
                    std::cout << f.render() << "\n";
                }
            }
        } else if (*convolve_cmd) {
            const Alg tag = parse_alg(alg_name_arg);
            const Character phi = as_character(ctx.lookup(phi_name), tag);
            const Character psi = as_character(ctx.lookup(psi_name), tag);
            std::cout << convolve(phi.map(), psi.map())(parse_forest(forest_arg)).render() << "\n";
        } else if (*inverse_cmd) {
            const Alg tag = parse_alg(alg_name_arg);
            const Character phi = as_character(ctx.lookup(phi_name), tag);
            std::cout << conv_inverse(phi)(parse_forest(forest_arg)).render() << "\n";
        } else if (*birkhoff_cmd) {
            const Character phi = as_character(ctx.lookup(phi_name), Alg::H);
            const BirkhoffPair bp = birkhoff(phi);
            const Forest f = parse_forest(forest_arg);
            std::cout << "minus = " << bp.minus(f).render() << "\n";
            std::cout << "plus = " << bp.plus(f).render() << "\n";
        } else if (*baction_cmd) {
            const Character phi = as_character(ctx.lookup(phi_name), Alg::H);
            const CharDef beta_def = ctx.lookup(beta_name);
            const LinMap beta_map = infinitesimal_action ? as_infchar(beta_def, Alg::K).map()
                                                         : as_character(beta_def, Alg::K).map();
            std::cout << star_action(beta_map, phi.map())(parse_forest(forest_arg)).render()
                      << "\n";
        } else if (*rtilde_cmd) {
            const Character phi = as_character(ctx.lookup(phi_name), Alg::H);
            const InfChar alpha = as_infchar(ctx.lookup(alpha_name), Alg::K);
            std::cout << r_tilde(phi, alpha)(parse_forest(forest_arg)).render() << "\n";
        } else if (*flow_cmd) {
            const Character phi = as_character(ctx.lookup(phi_name), Alg::H);
            const InfChar alpha = as_infchar(ctx.lookup(alpha_name), Alg::K);
            std::cout << flow(phi, alpha, ctx.t_symbol).character(parse_forest(forest_arg)).render()
                      << "\n";
        } else if (*rg_cmd || *beta_cmd) {
            const Character phi = as_character(ctx.lookup(phi_name), Alg::H);
            const InfChar alpha = as_infchar(ctx.lookup(alpha_name), Alg::K);
            Report loc = locality_check(phi, alpha, max_degree, ctx.t_symbol);
            if (!loc.ok()) {
                print_report(loc, ctx);
                return 1;
            }
            const Forest f = parse_forest(forest_arg);
            if (*rg_cmd) {
                std::cout << rg_flow(phi, alpha, ctx.t_symbol).character(f).render() << "\n";
            } else if (method_name == "all") {
                const LaurentPoly gen = beta(phi, alpha, BetaMethod::generator, ctx.t_symbol)(f);
                const LaurentPoly res = beta(phi, alpha, BetaMethod::residue, ctx.t_symbol)(f);
                const LaurentPoly ct = beta(phi, alpha, BetaMethod::counterterm, ctx.t_symbol)(f);
                std::cout << "generator = " << gen.render() << "\n";
                std::cout << "residue = " << res.render() << "\n";
                std::cout << "counterterm = " << ct.render() << "\n";
                if (!(gen == res) || !(res == ct)) {
                    std::cout << "beta methods disagree\n";
                    return 1;
                }
            } else {
                BetaMethod m;
                if (method_name == "generator")
                    m = BetaMethod::generator;
                else if (method_name == "residue")
                    m = BetaMethod::residue;
                else if (method_name == "counterterm")
                    m = BetaMethod::counterterm;
                else
                    throw DomainError("unknown beta method '" + method_name + "'");
                std::cout << beta(phi, alpha, m, ctx.t_symbol)(f).render() << "\n";
            }
        } else if (*locality_cmd) {
            const Character phi = as_character(ctx.lookup(phi_name), Alg::H);
            const InfChar alpha = as_infchar(ctx.lookup(alpha_name), Alg::K);
            const Report rep = locality_check(phi, alpha, max_degree, ctx.t_symbol);
            print_report(rep, ctx);
            return rep.ok() ? 0 : 1;
        } else if (*construct_cmd) {
            const InfChar alpha = as_infchar(ctx.lookup(alpha_name), Alg::K);
            const InfChar chi = as_infchar(ctx.lookup(chi_name), Alg::H);
            const LocalSolveResult res = construct_local_minus(alpha, chi, max_degree);
            if (!res.feasible) {
                std::cout << "infeasible at degree " << res.failed_degree << ": " << res.detail
                          << "\n";
                return 1;
            }
            CharDef out;
            out.name = "phi";
            out.tag = Alg::H;
            if (res.phi.generators()) out.values = *res.phi.generators();
            std::cout << render_char_def(out);
            std::cout << "locality-failures: " << res.locality.failures.size() << "\n";
            return res.locality.ok() ? 0 : 1;
        } else if (*verify_cmd) {
            SuiteOptions opts;
            opts.max_degree = max_degree;
            opts.k_max_degree = k_max_degree;
            opts.seed = seed;
            const Report rep = run_suite(suite_name, opts);
            print_report(rep, ctx);
            return rep.ok() ? 0 : 1;
        }
    } catch (const ParseError& e) {
        std::cerr << "syntax error: " << e.what() << "\n";
        return 2;
    } catch (const PoleAtZero& e) {
        std::cerr << "PoleAtZero: " << e.what() << "\n";
        return 1;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 0;
}
