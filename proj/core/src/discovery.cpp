#include "qforms/discovery.hpp"

#include "qforms/diffring.hpp"
#include "qforms/forms.hpp"
#include "qforms/numbers.hpp"

#include <sstream>

namespace qforms {

namespace linalg {

SolveOutcome solve_exact(std::vector<std::vector<Rational>> a, std::vector<Rational> b) {
    std::size_t rows = a.size();
    std::size_t cols = rows == 0 ? 0 : a[0].size();
    if (b.size() != rows)
        throw std::invalid_argument("solve_exact: matrix and rhs sizes disagree");
    for (const auto& row : a)
        if (row.size() != cols)
            throw std::invalid_argument("solve_exact: ragged matrix");

    std::size_t pivot_row = 0;
    std::vector<std::size_t> pivot_of_col(cols, 0);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < cols && pivot_row < rows; ++col) {
        std::size_t best = pivot_row;
        bool found = false;
        for (std::size_t r = pivot_row; r < rows; ++r) {
            if (a[r][col].is_zero()) continue;
            if (!found || mpz_cmpabs(a[r][col].numerator().get_mpz_t(),
                                     a[best][col].numerator().get_mpz_t()) > 0) {
                best = r;
                found = true;
            }
        }
        if (!found) continue;
        std::swap(a[pivot_row], a[best]);
        std::swap(b[pivot_row], b[best]);
        Rational inv = a[pivot_row][col].inverse();
        for (std::size_t r = pivot_row + 1; r < rows; ++r) {
            if (a[r][col].is_zero()) continue;
            Rational factor = a[r][col] * inv;
            for (std::size_t c = col; c < cols; ++c) a[r][c] -= factor * a[pivot_row][c];
            b[r] -= factor * b[pivot_row];
        }
        pivot_of_col[col] = pivot_row;
        ++pivot_row;
        ++rank;
    }

    SolveOutcome out;
    if (rank < cols) {
        out.status = SolveStatus::rank_deficient;
        // an inconsistent residual row outranks plain deficiency
        for (std::size_t r = rank; r < rows; ++r) {
            bool all_zero = true;
            for (std::size_t c = 0; c < cols; ++c)
                if (!a[r][c].is_zero()) { all_zero = false; break; }
            if (all_zero && !b[r].is_zero()) {
                out.status = SolveStatus::inconsistent;
                break;
            }
        }
        return out;
    }
    for (std::size_t r = rank; r < rows; ++r)
        if (!b[r].is_zero()) {
            out.status = SolveStatus::inconsistent;
            return out;
        }

    out.solution.assign(cols, Rational(0));
    for (std::size_t ci = cols; ci-- > 0;) {
        std::size_t pr = pivot_of_col[ci];
        Rational acc = b[pr];
        for (std::size_t c = ci + 1; c < cols; ++c) acc -= a[pr][c] * out.solution[c];
        out.solution[ci] = acc / a[pr][ci];
    }
    return out;
}

}  // namespace linalg

std::vector<std::pair<int, int>> monomial_basis(int k) {
    if (k < 4 || k % 2 != 0)
        throw std::domain_error("monomial_basis: weight must be even and >= 4");
    std::vector<std::pair<int, int>> basis;
    for (int n = 1; 4 * n <= k; ++n) basis.emplace_back((k - 4 * n) / 2, n);
    return basis;
}

std::string Relation::str() const {
    std::ostringstream os;
    os << lhs_constant.get_str();
    if (sgn(lhs_psi_coeff) >= 0) os << " + " << lhs_psi_coeff.get_str();
    else os << " - " << Integer(-lhs_psi_coeff).get_str();
    os << "*Psi_{0," << (k - 1) << "} = " << rhs.str();
    return os.str();
}

namespace {

WeightedPoly basis_poly(int m, int n, const Rational& c) {
    return WeightedPoly::monomial(Monomial{0, m, n}, c);
}

}  // namespace

Relation solve_relation(int k, long solve_order, long verify_order) {
    std::vector<std::pair<int, int>> basis = monomial_basis(k);
    long nb = static_cast<long>(basis.size());
    if (solve_order == 0) solve_order = nb + 8;
    if (verify_order == 0) verify_order = std::max<long>(100, solve_order + 1);
    if (solve_order <= nb + 1)
        throw std::invalid_argument("solve_relation: solve_order must exceed basis size + 1");
    if (verify_order <= solve_order)
        throw std::invalid_argument("solve_relation: verify_order must exceed solve_order");

    LaurentSeries target = eisenstein_level2(k, solve_order);
    std::vector<LaurentSeries> columns;
    columns.reserve(basis.size());
    for (const auto& [m, n] : basis)
        columns.push_back(eval_poly(basis_poly(m, n, Rational(1)), solve_order));

    std::vector<std::vector<Rational>> a;
    std::vector<Rational> b;
    a.reserve(static_cast<std::size_t>(solve_order));
    for (long j = 0; j < solve_order; ++j) {
        std::vector<Rational> row;
        row.reserve(columns.size());
        for (const auto& col : columns) row.push_back(col.coeff(j));
        a.push_back(std::move(row));
        b.push_back(target.coeff(j));
    }

    linalg::SolveOutcome outcome = linalg::solve_exact(std::move(a), std::move(b));
    if (outcome.status == linalg::SolveStatus::rank_deficient)
        throw DiscoveryError(DiscoveryError::Kind::basis_deficiency,
                             "solve_relation: basis deficiency at weight " +
                                 std::to_string(k));
    if (outcome.status == linalg::SolveStatus::inconsistent)
        throw DiscoveryError(DiscoveryError::Kind::verification_failure,
                             "solve_relation: no exact solution at weight " +
                                 std::to_string(k));

    // Clear denominators: the smallest positive integer multiplier that makes
    // the prefactor and every coefficient integral.
    Rational prefactor = Rational(2 * k) /
                         ((Rational(1) - Rational(2).pow(k)) * bernoulli(k));
    Integer mult = prefactor.denominator();
    for (const Rational& alpha : outcome.solution)
        mpz_lcm(mult.get_mpz_t(), mult.get_mpz_t(), alpha.denominator().get_mpz_t());

    Relation rel;
    rel.k = k;
    rel.lhs_constant = mult;
    rel.lhs_psi_coeff = (-Rational(mult) * prefactor).numerator();
    for (std::size_t i = 0; i < basis.size(); ++i)
        rel.rhs += basis_poly(basis[i].first, basis[i].second,
                              Rational(mult) * outcome.solution[i]);

    // both sides at q^0: the constant forces the coefficient sum to mult
    Rational rhs_constant_sum(0);
    for (const auto& [m, c] : rel.rhs.terms()) rhs_constant_sum += c;
    if (rhs_constant_sum != Rational(mult))
        throw DiscoveryError(DiscoveryError::Kind::verification_failure,
                             "solve_relation: constant-term consistency check failed at weight " +
                                 std::to_string(k));

    auto diff = first_difference(relation_lhs_series(rel, verify_order),
                                 relation_rhs_series(rel, verify_order), 0, verify_order);
    if (diff)
        throw DiscoveryError(DiscoveryError::Kind::verification_failure,
                             "solve_relation: residual at weight " + std::to_string(k) +
                                 ", first differing exponent " + std::to_string(*diff));
    rel.verified_to = verify_order;
    return rel;
}

LaurentSeries relation_lhs_series(const Relation& rel, long order) {
    return LaurentSeries::constant(Rational(rel.lhs_constant), order) +
           Rational(rel.lhs_psi_coeff) *
               psi_double_sum(0, static_cast<unsigned>(rel.k - 1), order);
}

LaurentSeries relation_rhs_series(const Relation& rel, long order) {
    return eval_poly(rel.rhs, order);
}

const std::vector<Relation>& table1() {
    static const std::vector<Relation> rows = [] {
        auto make = [](int k, long c0, long c1,
                       std::vector<std::pair<std::pair<int, int>, long>> rhs) {
            Relation r;
            r.k = k;
            r.lhs_constant = c0;
            r.lhs_psi_coeff = c1;
            for (const auto& [mn, c] : rhs)
                r.rhs += basis_poly(mn.first, mn.second, Rational(c));
            return r;
        };
        std::vector<Relation> t;
        t.push_back(make(4, 1, -16, {{{0, 1}, 1}}));
        t.push_back(make(6, 1, 8, {{{1, 1}, 1}}));
        t.push_back(make(8, 17, -32, {{{2, 1}, 8}, {{0, 2}, 9}}));
        t.push_back(make(10, 31, 8, {{{3, 1}, 4}, {{1, 2}, 27}}));
        t.push_back(make(12, 691, -16, {{{4, 1}, 16}, {{2, 2}, 486}, {{0, 3}, 189}}));
        t.push_back(make(14, 5461, 8, {{{5, 1}, 16}, {{3, 2}, 2016}, {{1, 3}, 3429}}));
        t.push_back(make(16, 929569, -64,
                         {{{6, 1}, 256}, {{4, 2}, 130464}, {{2, 3}, 667872}, {{0, 4}, 130977}}));
        return t;
    }();
    return rows;
}

}  // namespace qforms
