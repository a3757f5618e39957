#include "qforms/suites.hpp"

#include "qforms/combinatorics.hpp"
#include "qforms/diffring.hpp"
#include "qforms/discovery.hpp"
#include "qforms/forms.hpp"
#include "qforms/parallel.hpp"
#include "qforms/solutions.hpp"
#include "qforms/triangular.hpp"

#include <stdexcept>

namespace qforms {

namespace {

using SeriesPair = std::pair<LaurentSeries, LaurentSeries>;

Check series_check(std::string name, long lo, long hi,
                   std::function<SeriesPair()> sides) {
    return Check{name, [name, lo, hi, sides = std::move(sides)]() {
                     Verdict v;
                     v.name = name;
                     auto [lhs, rhs] = sides();
                     auto diff = first_difference(lhs, rhs, lo, hi);
                     v.pass = !diff.has_value();
                     v.first_difference = diff;
                     if (diff)
                         v.detail = "first differing exponent " + std::to_string(*diff);
                     return v;
                 }};
}

LaurentSeries plus_q(const LaurentSeries& f) {
    return f + LaurentSeries::monomial(Rational(1), 1, f.order());
}

}  // namespace

std::vector<Check> suite_diffeq(const SuiteOptions& opt) {
    const long n = opt.order;
    const bool mutate = opt.mutate;
    std::vector<Check> checks;
    checks.push_back(series_check("Theta(P) = (P^2 - Q)/12", 0, n, [n, mutate] {
        LaurentSeries p = series_P(n);
        if (mutate) p = plus_q(p);
        return SeriesPair{theta(p), (p * p - series_Q(n)) / Rational(12)};
    }));
    checks.push_back(series_check("Theta(Q) = (PQ - R)/3", 0, n, [n] {
        return SeriesPair{theta(series_Q(n)),
                          (series_P(n) * series_Q(n) - series_R(n)) / Rational(3)};
    }));
    checks.push_back(series_check("Theta(R) = (PR - Q^2)/2", 0, n, [n] {
        LaurentSeries q = series_Q(n);
        return SeriesPair{theta(series_R(n)),
                          (series_P(n) * series_R(n) - q * q) / Rational(2)};
    }));
    checks.push_back(series_check("Theta(scriptP) = (scriptP^2 - scriptQ)/4", 0, n, [n] {
        LaurentSeries p = series_scriptP(n);
        return SeriesPair{theta(p), (p * p - series_scriptQ(n)) / Rational(4)};
    }));
    checks.push_back(series_check("Theta(e) = (e scriptP - scriptQ)/2", 0, n, [n] {
        return SeriesPair{theta(series_e(n)),
                          (series_e(n) * series_scriptP(n) - series_scriptQ(n)) /
                              Rational(2)};
    }));
    checks.push_back(series_check("Theta(scriptQ) = scriptP scriptQ - e scriptQ", 0, n, [n] {
        LaurentSeries q = series_scriptQ(n);
        return SeriesPair{theta(q),
                          series_scriptP(n) * q - series_e(n) * q};
    }));
    checks.push_back(series_check("P = 3 scriptP - 2 e", 0, n, [n] {
        return SeriesPair{series_P(n),
                          Rational(3) * series_scriptP(n) - Rational(2) * series_e(n)};
    }));
    checks.push_back(series_check("e equals its odd-index Lambert form", 0, n, [n] {
        return SeriesPair{series_e(n), series_e_odd_form(n)};
    }));
    return checks;
}

std::vector<Check> suite_table1(const SuiteOptions& opt) {
    const long n = opt.order;
    std::vector<Check> checks;
    for (std::size_t i = 0; i < table1().size(); ++i) {
        const Relation& row = table1()[i];
        bool mutate_row = opt.mutate && row.k == 8;
        checks.push_back(series_check(
            "table1 k=" + std::to_string(row.k) + ": " + row.str(), 0, n,
            [n, i, mutate_row] {
                Relation row = table1()[i];
                if (mutate_row)
                    row.rhs += WeightedPoly::monomial(Monomial{0, 0, 2}, Rational(1));
                return SeriesPair{relation_lhs_series(row, n),
                                  relation_rhs_series(row, n)};
            }));
    }
    for (const Relation& row : table1()) {
        int k = row.k;
        long verify_order = std::max<long>(n, 32);
        checks.push_back({"rediscover k=" + std::to_string(k), [k, verify_order] {
                              Verdict v;
                              v.name = "rediscover k=" + std::to_string(k);
                              Relation found = solve_relation(k, 0, verify_order);
                              const Relation& expected = table1()[static_cast<std::size_t>(
                                  (k - 4) / 2)];
                              bool match = found.lhs_constant == expected.lhs_constant &&
                                           found.lhs_psi_coeff == expected.lhs_psi_coeff &&
                                           found.rhs == expected.rhs;
                              v.pass = match;
                              if (!match)
                                  v.detail = "solved form " + found.str() +
                                             " does not match " + expected.str();
                              return v;
                          }});
    }
    return checks;
}

std::vector<Check> suite_ode(const SuiteOptions& opt) {
    const long n = opt.order;
    std::vector<Check> checks;
    checks.push_back(series_check("theta_2(e) = -scriptQ/2", 0, n, [n] {
        return SeriesPair{serre_theta(series_e(n), 2, n),
                          Rational(-1, 2) * series_scriptQ(n)};
    }));
    checks.push_back(series_check("theta_4(scriptQ) = -e scriptQ", 0, n, [n] {
        return SeriesPair{serre_theta(series_scriptQ(n), 4, n),
                          -(series_e(n) * series_scriptQ(n))};
    }));
    checks.push_back(series_check("theta_4(D) = 0", 0, n, [n] {
        return SeriesPair{serre_theta(series_D(n), 4, n), LaurentSeries::zero(n)};
    }));
    for (int k = 2; k <= 40; k += 2) {
        bool mutate_here = opt.mutate && k == 2;
        checks.push_back(series_check(
            "orthogonal solution solves the weight-" + std::to_string(k) + " equation",
            0, n, [n, k, mutate_here] {
                LaurentSeries f = eval_poly(modular_solution_F(k), n);
                if (mutate_here) f = f + LaurentSeries::constant(Rational(1), n);
                return SeriesPair{ode_residual(f, k, n), LaurentSeries::zero(n)};
            }));
    }
    for (int k = 4; k <= 40; k += 2) {
        checks.push_back(series_check(
            "hypergeometric solution solves the weight-" + std::to_string(k) + " equation",
            0, n, [n, k] {
                LaurentSeries f = eval_poly(hypergeometric_solution_weighted(k), n);
                return SeriesPair{ode_residual(f, k, n), LaurentSeries::zero(n)};
            }));
    }
    for (int k = 4; k <= 38; k += 2) {
        checks.push_back({"F_" + std::to_string(k + 2) + " = e F_" + std::to_string(k) +
                              " + lambda D F_" + std::to_string(k - 2),
                          [k] {
                              Verdict v;
                              v.name = "F_" + std::to_string(k + 2) + " = e F_" +
                                       std::to_string(k) + " + lambda D F_" +
                                       std::to_string(k - 2);
                              WeightedPoly d = (pow(WeightedPoly::gen_e(), 2) -
                                                WeightedPoly::gen_scriptQ()) /
                                               Rational(64);
                              WeightedPoly rhs =
                                  WeightedPoly::gen_e() * modular_solution_F(k) +
                                  lambda_n((k - 2) / 2) * (d * modular_solution_F(k - 2));
                              v.pass = modular_solution_F(k + 2) == rhs;
                              if (!v.pass) v.detail = "polynomial identity fails";
                              return v;
                          }});
    }
    for (int k = 4; k <= 38; k += 2) {
        checks.push_back(series_check(
            "(k/4) e F_k + theta_k(F_k) = -((k+1)/2) lambda D F_(k-2), k=" +
                std::to_string(k),
            0, n, [n, k] {
                LaurentSeries fk = eval_poly(modular_solution_F(k), n);
                LaurentSeries fkm2 = eval_poly(modular_solution_F(k - 2), n);
                LaurentSeries lhs = Rational(k, 4) * (series_e(n) * fk) +
                                    serre_theta(fk, k, n);
                LaurentSeries rhs = Rational(-(k + 1), 2) * lambda_n((k - 2) / 2) *
                                    (series_D(n) * fkm2);
                return SeriesPair{truncate(lhs, n), truncate(rhs, n)};
            }));
    }
    return checks;
}

std::vector<Check> suite_triangular(const SuiteOptions& opt) {
    const long n = opt.order;
    std::vector<Check> checks;
    for (unsigned k = 1; k <= 8; ++k) {
        bool mutate_here = opt.mutate && k == 1;
        checks.push_back({"T_" + std::to_string(2 * k) + " = g_" + std::to_string(2 * k) +
                              " * psi",
                          [n, k, mutate_here] {
                              if (!mutate_here) return verify_theorem4(k, n);
                              LaurentSeries bump =
                                  LaurentSeries::monomial(Rational(1), 1, n);
                              return verify_theorem4(k, n, &bump);
                          }});
    }
    for (unsigned k = 1; k <= 6; ++k) {
        checks.push_back(series_check(
            "8 Theta(T_" + std::to_string(2 * k) + ") = T_" + std::to_string(2 * k + 2) +
                " - T_" + std::to_string(2 * k),
            0, n, [n, k] {
                LaurentSeries t = t2k_series(k, n).series;
                return SeriesPair{Rational(8) * theta(t),
                                  t2k_series(k + 1, n).series - t};
            }));
    }
    checks.push_back(series_check("8 Theta(psi) = T_2 - psi", 0, n, [n] {
        return SeriesPair{Rational(8) * theta(series_psi(n)),
                          t2k_series(1, n).series - series_psi(n)};
    }));
    checks.push_back(series_check("T_2 = scriptP psi", 0, n, [n] {
        return SeriesPair{t2k_series(1, n).series,
                          series_scriptP(n) * series_psi(n)};
    }));
    checks.push_back(series_check("T_4 = (3 scriptP^2 - 2 scriptQ) psi", 0, n, [n] {
        WeightedPoly g = Rational(3) * pow(WeightedPoly::gen_scriptP(), 2) -
                         Rational(2) * WeightedPoly::gen_scriptQ();
        return SeriesPair{t2k_series(2, n).series,
                          eval_poly(g, n) * series_psi(n)};
    }));
    checks.push_back({"psi theta-sum form equals its product form",
                      [n] {
                          Verdict v;
                          v.name = "psi theta-sum form equals its product form";
                          auto diff = first_difference(series_psi(n),
                                                       series_psi_product(n), 0, n);
                          v.pass = !diff.has_value();
                          v.first_difference = diff;
                          if (diff)
                              v.detail = "first differing exponent " + std::to_string(*diff);
                          return v;
                      }});
    return checks;
}

std::vector<Check> suite_combinatorial(const SuiteOptions& opt) {
    std::vector<Check> checks;
    long max_n = opt.combinatorial_max_n;
    long parity_n = opt.parity_max_n;
    bool mutate = opt.mutate;
    checks.push_back({"triangular convolution of wt", [max_n, mutate] {
                          return verify_theorem5(max_n,
                                                 mutate ? Rational(0) : Rational(1, 8));
                      }});
    checks.push_back({"parity of lattice counts A and B",
                      [parity_n] { return verify_parity_corollary(parity_n); }});
    return checks;
}

std::vector<Check> make_suite(const std::string& name, const SuiteOptions& opt) {
    if (name == "diffeq") return suite_diffeq(opt);
    if (name == "table1") return suite_table1(opt);
    if (name == "ode") return suite_ode(opt);
    if (name == "triangular") return suite_triangular(opt);
    if (name == "combinatorial") return suite_combinatorial(opt);
    if (name == "all") {
        std::vector<Check> all;
        for (const std::string& s :
             {"diffeq", "table1", "ode", "triangular", "combinatorial"}) {
            std::vector<Check> part = make_suite(s, opt);
            for (auto& c : part) {
                c.name = s + ": " + c.name;
                all.push_back(std::move(c));
            }
        }
        return all;
    }
    throw std::invalid_argument("unknown suite '" + name + "'");
}

std::vector<std::string> suite_names() {
    return {"diffeq", "table1", "ode", "triangular", "combinatorial", "all"};
}

std::vector<Verdict> run_checks(const std::vector<Check>& checks, unsigned jobs) {
    std::vector<Verdict> results(checks.size());
    parallel_for_indexed(checks.size(), jobs, [&](std::size_t i) {
        try {
            results[i] = checks[i].run();
        } catch (const std::exception& ex) {
            results[i] = Verdict{checks[i].name, false, std::nullopt,
                                 std::string("exception: ") + ex.what()};
        }
    });
    return results;
}

}  // namespace qforms
