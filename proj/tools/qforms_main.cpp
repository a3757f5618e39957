// Command line surface for the exact q-series engine: series expansion,
// identity verification suites, ODE solutions, relation discovery, the
// triangular-number series and the lattice-count parity check.
//
// Exit codes: 0 success, 1 verification failure, 2 usage/config error.

#include "qforms/combinatorics.hpp"
#include "qforms/diffring.hpp"
#include "qforms/discovery.hpp"
#include "qforms/forms.hpp"
#include "qforms/json_io.hpp"
#include "qforms/solutions.hpp"
#include "qforms/suites.hpp"
#include "qforms/triangular.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <string>

namespace {

using qforms::Json;

struct RunConfig {
    long order = 100;
    std::string order_source = "default";  // "default", "env" or "flag"
    bool json = false;
    unsigned jobs = 0;  // 0 = auto
};

Json meta_json(const RunConfig& cfg) {
    Json m;
    m["order"] = cfg.order;
    m["order_source"] = cfg.order_source;
    m["jobs"] = cfg.jobs;
    return m;
}

void echo_env_order(const RunConfig& cfg) {
    if (!cfg.json && cfg.order_source == "env")
        std::cerr << "# order " << cfg.order << " (from QFORMS_ORDER)\n";
}

int emit(const RunConfig& cfg, Json payload, const std::string& human) {
    echo_env_order(cfg);
    if (cfg.json) {
        Json out;
        out["meta"] = meta_json(cfg);
        out.update(payload);
        std::cout << out.dump() << "\n";
    } else {
        std::cout << human << "\n";
    }
    return 0;
}

int cmd_expand(const RunConfig& cfg, const std::string& name) {
    qforms::LaurentSeries s = qforms::make_series_by_name(name, cfg.order);
    Json series = qforms::series_to_json(s);
    Json payload;
    payload["series"] = series;
    return emit(cfg, payload, series.dump());
}

int cmd_verify(const RunConfig& cfg, const std::string& suite, bool mutate) {
    qforms::SuiteOptions opt;
    opt.order = cfg.order;
    opt.mutate = mutate;
    std::vector<qforms::Check> checks = qforms::make_suite(suite, opt);
    std::vector<qforms::Verdict> verdicts = qforms::run_checks(checks, cfg.jobs);
    std::size_t passed = 0;
    for (const auto& v : verdicts)
        if (v.pass) ++passed;
    bool all = passed == verdicts.size();

    echo_env_order(cfg);
    if (cfg.json) {
        Json out;
        out["meta"] = meta_json(cfg);
        out["suite"] = suite;
        Json list = Json::array();
        for (const auto& v : verdicts) list.push_back(qforms::verdict_to_json(v));
        out["verdicts"] = std::move(list);
        out["pass"] = all;
        std::cout << out.dump() << "\n";
    } else {
        for (const auto& v : verdicts) {
            if (v.pass) {
                std::cout << "PASS " << v.name << "\n";
            } else {
                std::cout << "FAIL " << v.name;
                if (!v.detail.empty()) std::cout << " (" << v.detail << ")";
                std::cout << "\n";
            }
        }
        std::cout << "suite " << suite << ": " << passed << "/" << verdicts.size()
                  << " checks passed\n";
    }
    return all ? 0 : 1;
}

int cmd_solve(const RunConfig& cfg, int weight, const std::string& method,
              std::string basis) {
    if (basis.empty()) basis = method == "orthogonal" ? "eQ" : "eD";
    qforms::WeightedPoly in_eq;
    qforms::EDPoly in_ed;
    if (method == "orthogonal") {
        in_eq = qforms::modular_solution_F(weight);
        in_ed = qforms::modular_solution_F_ed(weight);
    } else {
        in_ed = qforms::hypergeometric_solution(weight);
        in_eq = qforms::ed_to_weighted(in_ed);
    }
    qforms::LaurentSeries f = qforms::eval_poly(in_eq, cfg.order);
    qforms::LaurentSeries residual = qforms::ode_residual(f, weight, cfg.order);
    bool ok = !qforms::first_nonzero(residual, 0, cfg.order).has_value();

    Json payload;
    payload["weight"] = weight;
    payload["method"] = method;
    payload["basis"] = basis;
    payload["poly"] = basis == "eQ" ? qforms::poly_to_json(in_eq)
                                    : qforms::ed_poly_to_json(in_ed);
    payload["residual_ok"] = ok;
    payload["checked_to"] = cfg.order;

    std::string human = (basis == "eQ" ? in_eq.str() : in_ed.str()) +
                        (ok ? "\nresidual vanishes below order " +
                                  std::to_string(cfg.order)
                            : "\nRESIDUAL DOES NOT VANISH");
    int rc = emit(cfg, payload, human);
    return rc == 0 && ok ? 0 : 1;
}

int cmd_discover(const RunConfig& cfg, int weight, int max_weight) {
    if (max_weight == 0) max_weight = weight;
    if (max_weight < weight)
        throw std::invalid_argument("discover: --max-weight below --weight");
    Json relations = Json::array();
    std::string human;
    for (int k = weight; k <= max_weight; k += 2) {
        long basis_size = static_cast<long>(qforms::monomial_basis(k).size());
        long verify_order = std::max(cfg.order, basis_size + 10);
        qforms::Relation rel = qforms::solve_relation(k, 0, verify_order);
        relations.push_back(qforms::relation_to_json(rel));
        if (!human.empty()) human += "\n";
        human += rel.str() + "   [verified to order " +
                 std::to_string(rel.verified_to) + "]";
    }
    Json payload;
    payload["relations"] = std::move(relations);
    return emit(cfg, payload, human);
}

int cmd_triangular(const RunConfig& cfg, unsigned k) {
    qforms::WeightedPoly g = qforms::g2k_poly(k);
    qforms::Verdict v = qforms::verify_theorem4(k, cfg.order);
    Json payload;
    payload["k"] = k;
    payload["g"] = qforms::poly_to_json(g);
    payload["verdict"] = qforms::verdict_to_json(v);
    std::string human = "g_" + std::to_string(2 * k) + " = " + g.str() + "\n" +
                        (v.pass ? "PASS " : "FAIL ") + v.name +
                        (v.detail.empty() ? "" : " (" + v.detail + ")");
    int rc = emit(cfg, payload, human);
    return rc == 0 && v.pass ? 0 : 1;
}

int cmd_combinatorial(const RunConfig& cfg, long max_n, bool emit_counts) {
    qforms::Verdict v1 = qforms::verify_theorem5(max_n);
    qforms::Verdict v2 = qforms::verify_parity_corollary(max_n);
    bool ok = v1.pass && v2.pass;

    echo_env_order(cfg);
    if (cfg.json) {
        Json out;
        out["meta"] = meta_json(cfg);
        out["max_n"] = max_n;
        out["verdicts"] = Json::array({qforms::verdict_to_json(v1),
                                       qforms::verdict_to_json(v2)});
        if (emit_counts) {
            Json counts = Json::array();
            for (long n = 1; n <= max_n; ++n) {
                qforms::LatticeCount c = qforms::enumerate_AB(n);
                Json jc;
                jc["n"] = c.n;
                jc["countA"] = c.countA;
                jc["countB"] = c.countB;
                counts.push_back(std::move(jc));
            }
            out["counts"] = std::move(counts);
        }
        out["pass"] = ok;
        std::cout << out.dump() << "\n";
    } else {
        if (emit_counts)
            for (long n = 1; n <= max_n; ++n) {
                qforms::LatticeCount c = qforms::enumerate_AB(n);
                std::cout << "{\"n\":" << c.n << ",\"countA\":" << c.countA
                          << ",\"countB\":" << c.countB << "}\n";
            }
        for (const auto& v : {v1, v2}) {
            std::cout << (v.pass ? "PASS " : "FAIL ") << v.name;
            if (!v.detail.empty()) std::cout << " (" << v.detail << ")";
            std::cout << "\n";
        }
    }
    return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    RunConfig cfg;

    if (const char* env = std::getenv("QFORMS_ORDER")) {
        try {
            std::size_t pos = 0;
            cfg.order = std::stol(env, &pos);
            if (pos != std::string(env).size()) throw std::invalid_argument(env);
            cfg.order_source = "env";
        } catch (const std::exception&) {
            std::cerr << "error: QFORMS_ORDER is not an integer: " << env << "\n";
            return 2;
        }
    }

    CLI::App app{"exact q-series engine for level-1 and level-2 Eisenstein series"};
    app.require_subcommand(1);
    bool order_given = false;
    app.add_option("--order", cfg.order, "series truncation order (default 100)")
        ->each([&](const std::string&) { order_given = true; });
    app.add_flag("--json", cfg.json, "emit one JSON object on stdout");
    app.add_option("--jobs", cfg.jobs, "worker threads, 0 = auto");

    std::string expand_name;
    CLI::App* expand = app.add_subcommand("expand", "expand a named series");
    expand
        ->add_option("name", expand_name,
                     "one of P, Q, R, scriptP, e, scriptQ, E1:k, E2:k, psi, D, j2, "
                     "Psi:r:s, Phi:r:s")
        ->required();

    std::string suite;
    bool mutate = false;
    CLI::App* verify = app.add_subcommand("verify", "run an identity suite");
    verify->add_option("--suite", suite, "diffeq|table1|ode|triangular|combinatorial|all")
        ->required()
        ->check(CLI::IsMember(qforms::suite_names()));
    verify->add_flag("--mutate", mutate,
                     "inject one bad coefficient (negative control; must fail)");

    int solve_weight = 0;
    std::string method;
    std::string basis;
    CLI::App* solve = app.add_subcommand("solve", "solve the weight-k equation");
    solve->add_option("--weight", solve_weight, "even weight k")->required();
    solve->add_option("--method", method, "orthogonal|hypergeometric")
        ->required()
        ->check(CLI::IsMember({"orthogonal", "hypergeometric"}));
    solve->add_option("--basis", basis, "eQ|eD (default: the method's own basis)")
        ->check(CLI::IsMember({"eQ", "eD"}));

    int discover_weight = 0;
    int discover_max = 0;
    CLI::App* discover = app.add_subcommand("discover", "discover eisenstein relations");
    discover->add_option("--weight", discover_weight, "even weight k >= 4")->required();
    discover->add_option("--max-weight", discover_max, "discover k..K");

    unsigned tri_k = 0;
    CLI::App* triangular = app.add_subcommand("triangular", "triangular-number series");
    triangular->add_option("--k", tri_k, "index k of T_2k")->required();

    long max_n = 10000;
    bool emit_counts = false;
    CLI::App* combinatorial =
        app.add_subcommand("combinatorial", "convolution identity and parity check");
    combinatorial->add_option("--max-n", max_n, "check all n <= max-n (default 10000)");
    combinatorial->add_flag("--emit-counts", emit_counts, "emit per-n lattice counts");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    if (order_given) cfg.order_source = "flag";
    if (cfg.order < 8) {
        std::cerr << "error: --order must be at least 8\n";
        return 2;
    }

    try {
        if (*expand) return cmd_expand(cfg, expand_name);
        if (*verify) return cmd_verify(cfg, suite, mutate);
        if (*solve) return cmd_solve(cfg, solve_weight, method, basis);
        if (*discover) return cmd_discover(cfg, discover_weight, discover_max);
        if (*triangular) return cmd_triangular(cfg, tri_k);
        if (*combinatorial) return cmd_combinatorial(cfg, max_n, emit_counts);
    } catch (const qforms::DiscoveryError& ex) {
        std::cerr << "verification failure: " << ex.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::domain_error& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 2;
    } catch (const std::exception& ex) {
        std::cerr << "error: " << ex.what() << "\n";
        return 1;
    }
    return 2;
}
