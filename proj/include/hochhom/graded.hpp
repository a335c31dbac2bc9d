#ifndef HOCHHOM_GRADED_HPP
#define HOCHHOM_GRADED_HPP

#include "hochhom/algebra.hpp"

#include <string>
#include <vector>

namespace hochhom {

/// Monomial as an exponent vector, one entry per variable.
using Monomial = std::vector<int>;

/// Weight-graded polynomial algebra with a monomial ideal: Q[x_1..x_m]/(rels),
/// each variable carrying a positive weight.
struct GradedAlgebra {
    std::string name;
    std::vector<int> weights;          // positive
    std::vector<Monomial> relations;   // generators of the monomial ideal

    int vars() const { return static_cast<int>(weights.size()); }

    bool in_ideal(const Monomial& m) const {
        for (const auto& r : relations) {
            bool divides = true;
            for (int v = 0; v < vars(); ++v)
                if (m[v] < r[v]) {
                    divides = false;
                    break;
                }
            if (divides) return true;
        }
        return false;
    }

    int weight_of(const Monomial& m) const {
        int w = 0;
        for (int v = 0; v < vars(); ++v) w += m[v] * weights[v];
        return w;
    }

    /// Product inside the quotient; nullopt when it falls into the ideal.
    std::optional<Monomial> product(const Monomial& u, const Monomial& v) const {
        Monomial p(vars());
        for (int i = 0; i < vars(); ++i) p[i] = u[i] + v[i];
        if (in_ideal(p)) return std::nullopt;
        return p;
    }
};

inline GradedAlgebra graded_poly(std::vector<int> weights, std::vector<Monomial> relations = {}) {
    for (int w : weights)
        if (w <= 0) throw Error(ErrorKind::InvalidArgument, "graded_poly: weights must be positive");
    for (auto& r : relations)
        if (static_cast<int>(r.size()) != static_cast<int>(weights.size()))
            throw Error(ErrorKind::InvalidArgument, "graded_poly: relation arity mismatch");
    GradedAlgebra g;
    g.name = "graded_poly(" + std::to_string(weights.size()) + " vars)";
    g.weights = std::move(weights);
    g.relations = std::move(relations);
    return g;
}

/// All monomials of total weight w outside the ideal, lexicographic in the
/// exponent vector (the fixed monomial order).
inline std::vector<Monomial> graded_weight_basis(const GradedAlgebra& g, int w) {
    std::vector<Monomial> out;
    Monomial cur(g.vars(), 0);
    auto rec = [&](auto&& self, int var, int remaining) -> void {
        if (var == g.vars()) {
            if (remaining == 0 && !g.in_ideal(cur)) out.push_back(cur);
            return;
        }
        for (int e = 0; e * g.weights[var] <= remaining; ++e) {
            cur[var] = e;
            self(self, var + 1, remaining - e * g.weights[var]);
        }
        cur[var] = 0;
    };
    if (w >= 0) rec(rec, 0, w);
    return out;
}

/// Total-dimension-finite graded algebras convert to structure constants
/// (basis: all monomials outside the ideal, by weight then lex). Finite
/// dimension requires every pure variable power to die in the ideal; the
/// surviving exponents then bound the maximal weight.
inline FDAlgebra graded_to_fd(const GradedAlgebra& g, int exponent_cap = 1 << 12) {
    int max_weight = 0;
    for (int v = 0; v < g.vars(); ++v) {
        int c = -1;
        for (int e = 1; e <= exponent_cap; ++e) {
            Monomial probe(g.vars(), 0);
            probe[v] = e;
            if (g.in_ideal(probe)) {
                c = e;
                break;
            }
        }
        if (c < 0)
            throw Error(ErrorKind::InvalidArgument, "graded_to_fd: algebra is not finite-dimensional");
        max_weight += (c - 1) * g.weights[v];
    }
    std::vector<Monomial> basis;
    for (int w = 0; w <= max_weight; ++w)
        for (auto& m : graded_weight_basis(g, w)) basis.push_back(std::move(m));
    FDAlgebra a;
    a.name = g.name;
    a.dim = static_cast<Coord>(basis.size());
    std::map<Monomial, Coord> index;
    for (Coord i = 0; i < a.dim; ++i) index[basis[i]] = i;
    a.mult.assign(a.dim, std::vector<std::vector<Rat>>(a.dim, std::vector<Rat>(a.dim, Rat(0))));
    for (Coord i = 0; i < a.dim; ++i)
        for (Coord j = 0; j < a.dim; ++j)
            if (auto p = g.product(basis[i], basis[j])) {
                auto it = index.find(*p);
                if (it == index.end())
                    throw Error(ErrorKind::InvalidArgument, "graded_to_fd: weight cap too small");
                a.mult[i][j][it->second] = 1;
            }
    a.unit = to_dense(unit_vec(0), a.dim);
    return a;
}

namespace detail {
inline long long binom(long long n, long long k) {
    if (k < 0 || n < 0 || k > n) return 0;
    long long r = 1;
    for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
    return r;
}
} // namespace detail

/// Closed-form weight-w dimension of H_{jd}(S^d, Q[x_1..x_m]) for weight-1
/// variables: Omega^j (d odd) or Sym^j Omega^1 (d even) is free with
/// C(m,j) resp. C(m+j-1,j) generators of weight j.
inline std::int64_t smooth_hodge_predicted_dim(int m, int d, int j, int w) {
    if (m < 0 || j < 0 || w < 0) return 0;
    const bool odd = (d % 2 != 0);
    long long generators = odd ? detail::binom(m, j) : detail::binom(m + j - 1, j);
    if (w < j) return 0;
    return generators * detail::binom(w - j + m - 1, m - 1);
}

} // namespace hochhom

#endif
