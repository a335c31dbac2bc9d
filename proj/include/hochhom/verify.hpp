#ifndef HOCHHOM_VERIFY_HPP
#define HOCHHOM_VERIFY_HPP

#include "hochhom/homalg.hpp"

#include <sstream>
#include <string>
#include <vector>

namespace hochhom {

struct SuiteCase {
    std::string description;
    std::string expected;
    std::string computed;
    bool pass = false;
    std::string note;
};

struct SuiteReport {
    std::string suite;
    std::vector<SuiteCase> cases;
    bool budget_overflow = false;

    bool pass() const {
        for (const auto& c : cases)
            if (!c.pass) return false;
        return true;
    }
};

namespace detail {

inline std::string dims_str(const std::vector<std::int64_t>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

template <typename Fn>
inline void run_case(SuiteReport& report, std::string description, Fn&& fn) {
    SuiteCase c;
    c.description = std::move(description);
    try {
        fn(c);
    } catch (const Error& e) {
        c.pass = false;
        c.note = std::string(error_kind_name(e.kind())) + ": " + e.what();
        if (e.kind() == ErrorKind::BudgetExceeded) report.budget_overflow = true;
    }
    report.cases.push_back(std::move(c));
}

} // namespace detail

/// Low-degree identification: H_0 = A, zero strictly between 0 and d, and
/// H_d = Omega^1 with the Omega^1 dimension certified by both constructions.
inline SuiteReport suite_low_degree(const std::vector<FDAlgebra>& algebras,
                                    const std::vector<int>& d_values,
                                    std::int64_t budget = kDefaultBudget) {
    SuiteReport rep;
    rep.suite = "low-degree";
    for (const auto& a : algebras) {
        Omega1Pair omega = omega1_pair(a);
        for (int d : d_values) {
            detail::run_case(rep, a.name + ", d=" + std::to_string(d), [&](SuiteCase& c) {
                if (!omega.isomorphic) {
                    c.note = "omega1 constructions disagree";
                    return;
                }
                const int N = d + 2;
                HomologyTable t = homology(sphere(d, N + 1), a, N, /*normalized=*/true, budget);
                std::vector<std::int64_t> expected(d + 1, 0), computed(d + 1, 0);
                expected[0] = a.dim;
                expected[d] = omega.kernel.module.dim;
                for (int q = 0; q <= d; ++q) computed[q] = t.dims[q];
                c.expected = detail::dims_str(expected);
                c.computed = detail::dims_str(computed);
                c.pass = (expected == computed);
            });
        }
    }
    return rep;
}

/// Localization on Artinian algebras: localized homology modules match the
/// homology of the localized algebra, degreewise up to N-1. Refuses
/// disconnected K (the two-points counterexample).
inline SuiteReport suite_localization(const FinSimpSet& k, const FDAlgebra& a, const MultSystem& s,
                                      int N, std::int64_t budget = kDefaultBudget) {
    if (!is_connected(k))
        throw Error(ErrorKind::HypothesisViolation,
                    "localization suite requires a connected pointed simplicial set "
                    "(two points is the standard counterexample)");
    SuiteReport rep;
    rep.suite = "localization";
    Localization loc = localize(a, s);
    HomologyModules hm = homology_with_modules(k, a, N, budget);
    HomologyTable ht = loc.algebra.dim > 0
                           ? homology(k, loc.algebra, N, /*normalized=*/false, budget)
                           : HomologyTable{};
    for (int q = 0; q <= N - 1; ++q) {
        detail::run_case(rep, k.name + ", " + a.name + ", degree " + std::to_string(q),
                         [&](SuiteCase& c) {
                             std::int64_t lhs = localize_module(a, hm.modules[q], s, loc).dim;
                             std::int64_t rhs = loc.algebra.dim > 0 ? ht.dims[q] : 0;
                             c.expected = std::to_string(rhs);
                             c.computed = std::to_string(lhs);
                             c.pass = (lhs == rhs);
                             if (loc.zero) c.note = "s nilpotent: localization is the zero ring";
                         });
    }
    return rep;
}

/// Hodge dimensions per weight for free polynomial algebras with weight-1
/// variables: computed graded homology equals the closed-form prediction.
inline SuiteReport suite_smooth_hodge(int m, int d, int w_max, int n_max,
                                      std::int64_t budget = kDefaultBudget) {
    SuiteReport rep;
    rep.suite = "smooth-hodge";
    GradedAlgebra g = graded_poly(std::vector<int>(m, 1));
    g.name = "poly(" + std::to_string(m) + ")";
    const int N = n_max + 1;
    FinSimpSet k = sphere(d, N + 1);
    for (int w = 0; w <= w_max; ++w) {
        detail::run_case(rep,
                         "m=" + std::to_string(m) + ", d=" + std::to_string(d) +
                             ", weight " + std::to_string(w),
                         [&](SuiteCase& c) {
                             HomologyTable t = graded_homology(k, g, w, N, budget);
                             std::vector<std::int64_t> expected, computed;
                             for (int n = 0; n <= n_max; ++n) {
                                 expected.push_back(
                                     (n % d == 0) ? smooth_hodge_predicted_dim(m, d, n / d, w) : 0);
                                 computed.push_back(t.dims[n]);
                             }
                             c.expected = detail::dims_str(expected);
                             c.computed = detail::dims_str(computed);
                             c.pass = (expected == computed);
                         });
    }
    return rep;
}

/// Registered weakly-equivalent pairs for the homotopy-invariance suite.
struct HomotopyPair {
    std::string name;
    FinSimpSet first;
    FinSimpSet second;
};

inline HomotopyPair pair_point_simplex(int n, int trunc) {
    return {"point ~ simplex(" + std::to_string(n) + ")", point(trunc), standard_simplex(n, trunc)};
}

inline HomotopyPair pair_circle_boundary(int trunc) {
    return {"sphere(1) ~ boundary(2)", sphere(1, trunc), boundary_simplex(2, trunc)};
}

/// Wedge-expansion pair: a sphere wedge against a levelwise-isomorphic copy
/// built in the opposite order.
inline HomotopyPair pair_wedge_commute(int d, int trunc) {
    return {"wedge(sphere(" + std::to_string(d) + "),point) ~ sphere(" + std::to_string(d) + ")",
            wedge(sphere(d, trunc), point(trunc)), sphere(d, trunc)};
}

/// Weak equivalence invariance: registered pairs have degreewise equal
/// homology dimensions for q <= N-1.
inline SuiteReport suite_homotopy_invariance(const std::vector<HomotopyPair>& pairs,
                                             const std::vector<FDAlgebra>& algebras, int N,
                                             std::int64_t budget = kDefaultBudget) {
    SuiteReport rep;
    rep.suite = "homotopy-invariance";
    for (const auto& p : pairs)
        for (const auto& a : algebras)
            detail::run_case(rep, p.name + ", " + a.name, [&](SuiteCase& c) {
                HomologyTable t1 = homology(p.first, a, N, /*normalized=*/false, budget);
                HomologyTable t2 = homology(p.second, a, N, /*normalized=*/false, budget);
                c.expected = detail::dims_str(t1.dims);
                c.computed = detail::dims_str(t2.dims);
                c.pass = (t1.dims == t2.dims);
            });
    return rep;
}

/// Affine Hodge/degeneration comparison: E_2
/// anti-diagonal sums against the cohomology, plus the semisimple Hodge shape.
inline SuiteReport suite_hodge_cohomology(int d, const FDAlgebra& a, const FDModule& m, int n_max,
                                          std::int64_t budget = kDefaultBudget) {
    SuiteReport rep;
    rep.suite = "hodge-cohomology";
    FinSimpSet k = sphere(d, n_max + 2);
    DegenerationReport dr;
    bool have_report = false;
    detail::run_case(rep, "degeneration at E_2: sphere(" + std::to_string(d) + "), " + a.name,
                     [&](SuiteCase& c) {
                         dr = degeneration_check(k, a, m, n_max, n_max, budget);
                         have_report = true;
                         c.expected = detail::dims_str(dr.rhs) + " (E2 sums)";
                         c.computed = detail::dims_str(dr.lhs) + " (cohomology)";
                         c.pass = dr.degenerate;
                         std::string ext_note = "Ext rows:";
                         for (std::size_t q = 0; q < dr.ext_rows.size(); ++q)
                             ext_note += " H_" + std::to_string(q) + detail::dims_str(dr.ext_rows[q]);
                         if (!dr.sane)
                             c.note = "lhs exceeds rhs: internal error; " + ext_note;
                         else if (!dr.degenerate)
                             c.note = "nonzero higher differentials certified; " + ext_note;
                         else
                             c.note = ext_note;
                     });
    if (have_report && is_semisimple(a)) {
        detail::run_case(rep, "semisimple Hodge shape, " + a.name, [&](SuiteCase& c) {
            std::vector<std::int64_t> expected(n_max + 1, 0), computed(n_max + 1, 0);
            for (int n = 0; n <= n_max; ++n) {
                computed[n] = dr.lhs[n];
                if (n % d == 0) expected[n] = dr.ext_rows[n][0]; // dim Hom_A(H_{jd}, M)
            }
            c.expected = detail::dims_str(expected);
            c.computed = detail::dims_str(computed);
            c.pass = (expected == computed);
        });
    }
    return rep;
}

} // namespace hochhom

#endif
