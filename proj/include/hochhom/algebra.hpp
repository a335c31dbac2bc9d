#ifndef HOCHHOM_ALGEBRA_HPP
#define HOCHHOM_ALGEBRA_HPP

#include "hochhom/linalg.hpp"
#include "hochhom/matrix.hpp"

#include <string>
#include <vector>

namespace hochhom {

/// Commutative unital algebra over Q by structure constants.
/// mult[i][j] is the coordinate vector of e_i * e_j.
struct FDAlgebra {
    std::string name;
    Coord dim = 0;
    std::vector<std::vector<std::vector<Rat>>> mult;
    std::vector<Rat> unit;
};

/// Finite-dimensional module: one action matrix per algebra basis element.
struct FDModule {
    Coord dim = 0;
    std::vector<RatMatrix> action;
};

/// The multiplicative system {1, s, s^2, ...} generated by one element.
struct MultSystem {
    std::vector<Rat> generator;
};

inline std::vector<Rat> multiply(const FDAlgebra& a, const std::vector<Rat>& u,
                                 const std::vector<Rat>& v) {
    if (static_cast<Coord>(u.size()) != a.dim || static_cast<Coord>(v.size()) != a.dim)
        throw Error(ErrorKind::DimensionMismatch, "multiply: vector length != algebra dimension");
    std::vector<Rat> out(a.dim, Rat(0));
    for (Coord i = 0; i < a.dim; ++i) {
        if (u[i] == 0) continue;
        for (Coord j = 0; j < a.dim; ++j) {
            if (v[j] == 0) continue;
            const Rat f = u[i] * v[j];
            const auto& prod = a.mult[i][j];
            for (Coord k = 0; k < a.dim; ++k)
                if (prod[k] != 0) out[k] += f * prod[k];
        }
    }
    return out;
}

/// Commutativity, associativity (all triples) and the unit law.
inline void check_algebra(const FDAlgebra& a) {
    if (static_cast<Coord>(a.mult.size()) != a.dim || static_cast<Coord>(a.unit.size()) != a.dim)
        throw Error(ErrorKind::InvalidArgument, "algebra tables have wrong shape");
    for (Coord i = 0; i < a.dim; ++i) {
        if (static_cast<Coord>(a.mult[i].size()) != a.dim)
            throw Error(ErrorKind::InvalidArgument, "algebra tables have wrong shape");
        for (Coord j = 0; j < a.dim; ++j) {
            if (static_cast<Coord>(a.mult[i][j].size()) != a.dim)
                throw Error(ErrorKind::InvalidArgument, "algebra tables have wrong shape");
            if (a.mult[i][j] != a.mult[j][i])
                throw Error(ErrorKind::InvalidArgument, "algebra is not commutative");
        }
    }
    auto basis = [&](Coord i) {
        std::vector<Rat> e(a.dim, Rat(0));
        e[i] = 1;
        return e;
    };
    for (Coord i = 0; i < a.dim; ++i) {
        if (multiply(a, a.unit, basis(i)) != basis(i))
            throw Error(ErrorKind::InvalidArgument, "unit law fails");
        for (Coord j = 0; j < a.dim; ++j)
            for (Coord k = 0; k < a.dim; ++k)
                if (multiply(a, a.mult[i][j], basis(k)) != multiply(a, basis(i), a.mult[j][k]))
                    throw Error(ErrorKind::InvalidArgument, "algebra is not associative");
    }
}

inline std::vector<Rat> basis_vec(Coord dim, Coord i) {
    std::vector<Rat> e(dim, Rat(0));
    e[i] = 1;
    return e;
}

inline RatVec to_sparse(const std::vector<Rat>& v) {
    RatVec out;
    for (Coord i = 0; i < static_cast<Coord>(v.size()); ++i)
        if (v[i] != 0) out.emplace_back(i, v[i]);
    return out;
}

inline std::vector<Rat> to_dense(const RatVec& v, Coord dim) {
    std::vector<Rat> out(dim, Rat(0));
    for (const auto& [i, q] : v) out[i] = q;
    return out;
}

/// A as a module over itself.
inline FDModule regular_module(const FDAlgebra& a) {
    FDModule m;
    m.dim = a.dim;
    for (Coord i = 0; i < a.dim; ++i) {
        std::vector<RatVec> cols(a.dim);
        for (Coord s = 0; s < a.dim; ++s) cols[s] = to_sparse(a.mult[i][s]);
        m.action.push_back(RatMatrix::from_columns(a.dim, std::move(cols)));
    }
    return m;
}

inline void check_module(const FDAlgebra& a, const FDModule& m) {
    if (static_cast<Coord>(m.action.size()) != a.dim)
        throw Error(ErrorKind::InvalidArgument, "module needs one action matrix per algebra basis element");
    RatMatrix unit_act = RatMatrix::zero(m.dim, m.dim);
    for (Coord i = 0; i < a.dim; ++i)
        if (a.unit[i] != 0) unit_act = unit_act.plus(m.action[i].scaled(a.unit[i]));
    if (!(unit_act == RatMatrix::identity(m.dim)))
        throw Error(ErrorKind::InvalidArgument, "module: unit does not act as identity");
    for (Coord i = 0; i < a.dim; ++i)
        for (Coord j = 0; j < a.dim; ++j) {
            RatMatrix lhs = m.action[i].compose(m.action[j]);
            RatMatrix rhs = RatMatrix::zero(m.dim, m.dim);
            for (Coord k = 0; k < a.dim; ++k)
                if (a.mult[i][j][k] != 0) rhs = rhs.plus(m.action[k].scaled(a.mult[i][j][k]));
            if (!(lhs == rhs))
                throw Error(ErrorKind::InvalidArgument, "module: action is not a representation");
        }
}

/// Action of an algebra element (coordinate vector) on a module.
inline RatMatrix module_action(const FDModule& m, const std::vector<Rat>& a_elt) {
    RatMatrix out = RatMatrix::zero(m.dim, m.dim);
    for (Coord i = 0; i < static_cast<Coord>(a_elt.size()); ++i)
        if (a_elt[i] != 0) out = out.plus(m.action[i].scaled(a_elt[i]));
    return out;
}

// ---------------------------------------------------------------------------
// presets

inline FDAlgebra ground_field() {
    FDAlgebra a;
    a.name = "ground_field";
    a.dim = 1;
    a.mult = {{{Rat(1)}}};
    a.unit = {Rat(1)};
    return a;
}

/// Q[x]/(x^n), basis 1, x, ..., x^{n-1}.
inline FDAlgebra truncated_poly(int n) {
    if (n < 1) throw Error(ErrorKind::InvalidArgument, "truncated_poly: n must be >= 1");
    FDAlgebra a;
    a.name = "truncated_poly(" + std::to_string(n) + ")";
    a.dim = n;
    a.mult.assign(n, std::vector<std::vector<Rat>>(n, std::vector<Rat>(n, Rat(0))));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (i + j < n) a.mult[i][j][i + j] = 1;
    a.unit = to_dense(unit_vec(0), n);
    return a;
}

/// Q[x]/(x^2 - x) = Q x Q, basis 1, x.
inline FDAlgebra split_pair() {
    FDAlgebra a;
    a.name = "split_pair";
    a.dim = 2;
    a.mult.assign(2, std::vector<std::vector<Rat>>(2, std::vector<Rat>(2, Rat(0))));
    a.mult[0][0][0] = 1;
    a.mult[0][1][1] = a.mult[1][0][1] = 1;
    a.mult[1][1][1] = 1;
    a.unit = to_dense(unit_vec(0), 2);
    return a;
}

// ---------------------------------------------------------------------------
// quotient module machinery

/// Quotient of Q^ambient by a subspace, with the induced action of the listed
/// operators; also returns the projection in complement coordinates.
struct QuotientModule {
    FDModule module;
    RatMatrix projection;            // ambient -> quotient
    std::vector<Coord> complement;   // surviving coordinates
};

inline QuotientModule quotient_by(Coord ambient, const std::vector<RatVec>& sub,
                                  const std::vector<RatMatrix>& operators) {
    SpanBuilder sb(ambient);
    for (const auto& v : sub) sb.insert(v);
    std::vector<Coord> comp;
    std::map<Coord, Coord> comp_index;
    for (Coord i = 0; i < ambient; ++i)
        if (!sb.is_pivot(i)) {
            comp_index[i] = static_cast<Coord>(comp.size());
            comp.push_back(i);
        }
    const Coord qdim = static_cast<Coord>(comp.size());
    auto project = [&](const RatVec& v) {
        RatVec w = sb.reduce(v);
        RatVec out;
        for (const auto& [i, q] : w) out.emplace_back(comp_index.at(i), q);
        return out;
    };
    std::vector<RatVec> pcols(ambient);
    for (Coord i = 0; i < ambient; ++i) pcols[i] = project(unit_vec(i));
    RatMatrix proj = RatMatrix::from_columns(qdim, std::move(pcols));

    QuotientModule out;
    out.complement = comp;
    out.projection = proj;
    out.module.dim = qdim;
    for (const auto& op : operators) {
        std::vector<RatVec> cols(qdim);
        for (Coord c = 0; c < qdim; ++c) cols[c] = proj.apply(op.apply(unit_vec(comp[c])));
        out.module.action.push_back(RatMatrix::from_columns(qdim, std::move(cols)));
    }
    return out;
}

// ---------------------------------------------------------------------------
// Kaehler differentials, both constructions

struct Omega1 {
    FDModule module;
    RatMatrix derivation; // matrix of d : A -> module, one column per algebra basis element
};

/// ker(mu)/ker(mu)^2 for the multiplication mu : A (x) A -> A, with the
/// derivation a -> [1 (x) a - a (x) 1].
inline Omega1 omega1_kernel(const FDAlgebra& a) {
    const Coord n = a.dim;
    const Coord nn = n * n;
    // mu columns indexed by (i,j) -> i*n+j
    std::vector<RatVec> mu_cols(nn);
    for (Coord i = 0; i < n; ++i)
        for (Coord j = 0; j < n; ++j) mu_cols[i * n + j] = to_sparse(a.mult[i][j]);
    RatMatrix mu = RatMatrix::from_columns(n, std::move(mu_cols));
    Subspace K = kernel_basis(mu);

    // product on A (x) A componentwise
    auto tensor_mul = [&](const RatVec& u, const RatVec& v) {
        RatVec out;
        for (const auto& [uc, uq] : u)
            for (const auto& [vc, vq] : v) {
                Coord i = uc / n, j = uc % n, k = vc / n, l = vc % n;
                const Rat f = uq * vq;
                const auto& p1 = a.mult[i][k];
                const auto& p2 = a.mult[j][l];
                for (Coord p = 0; p < n; ++p) {
                    if (p1[p] == 0) continue;
                    for (Coord q = 0; q < n; ++q)
                        if (p2[q] != 0) out.emplace_back(p * n + q, f * p1[p] * p2[q]);
                }
            }
        sort_and_combine(out);
        return out;
    };

    std::vector<RatVec> ksq;
    for (std::size_t i = 0; i < K.basis.size(); ++i)
        for (std::size_t j = i; j < K.basis.size(); ++j)
            ksq.push_back(tensor_mul(K.basis[i], K.basis[j]));

    // operators: left factor multiplication by e_t
    std::vector<RatMatrix> ops;
    for (Coord t = 0; t < n; ++t) {
        std::vector<RatVec> cols(nn);
        for (Coord i = 0; i < n; ++i)
            for (Coord j = 0; j < n; ++j) {
                RatVec col;
                for (Coord p = 0; p < n; ++p)
                    if (a.mult[t][i][p] != 0) col.emplace_back(p * n + j, a.mult[t][i][p]);
                cols[i * n + j] = std::move(col);
            }
        ops.push_back(RatMatrix::from_columns(nn, std::move(cols)));
    }

    // the quotient (A(x)A)/K^2 restricted to classes of K: compute complements
    // inside K by extending K^2 with K's basis
    SpanBuilder sq(nn);
    for (const auto& v : ksq) sq.insert(v);
    std::vector<RatVec> reps;
    for (const auto& v : K.basis)
        if (sq.insert(v)) reps.push_back(v);

    // coordinates: classes of reps; express e_t.rep and derivation images in
    // (reps | ksq) and keep the rep coefficients
    std::vector<RatVec> solve_cols = reps;
    {
        SpanBuilder tmp(nn);
        for (const auto& v : ksq)
            if (tmp.insert(v)) solve_cols.push_back(v);
    }
    const Coord qdim = static_cast<Coord>(reps.size());
    auto coords = [&](const RatVec& v) {
        auto sol = express_in_span(solve_cols, nn, v);
        if (!sol)
            throw Error(ErrorKind::InvalidArgument, "omega1_kernel: vector not in ker(mu)");
        RatVec out;
        for (Coord c = 0; c < qdim; ++c)
            if ((*sol)[c] != 0) out.emplace_back(c, (*sol)[c]);
        return out;
    };

    Omega1 out;
    out.module.dim = qdim;
    for (Coord t = 0; t < n; ++t) {
        std::vector<RatVec> cols(qdim);
        for (Coord c = 0; c < qdim; ++c) cols[c] = coords(ops[t].apply(reps[c]));
        out.module.action.push_back(RatMatrix::from_columns(qdim, std::move(cols)));
    }
    std::vector<RatVec> dcols(n);
    for (Coord t = 0; t < n; ++t) {
        // 1 (x) e_t - e_t (x) 1
        RatVec v;
        for (Coord u = 0; u < n; ++u) {
            if (a.unit[u] == 0) continue;
            v.emplace_back(u * n + t, a.unit[u]);
            v.emplace_back(t * n + u, -a.unit[u]);
        }
        sort_and_combine(v);
        dcols[t] = coords(v);
    }
    out.derivation = RatMatrix::from_columns(qdim, std::move(dcols));
    return out;
}

namespace detail {

/// Free A-module on symbols d(e_i) modulo the Leibniz relations; the quotient
/// bookkeeping is kept so the canonical comparison can reuse it.
inline std::pair<Omega1, QuotientModule> omega1_leibniz_full(const FDAlgebra& a) {
    const Coord n = a.dim;
    const Coord fdim = n * n; // coordinate (symbol s, coefficient k) -> s*n+k
    // relation d(e_i e_j) - e_i d(e_j) - e_j d(e_i)
    std::vector<RatVec> rels;
    for (Coord i = 0; i < n; ++i)
        for (Coord j = i; j < n; ++j) {
            RatVec r;
            for (Coord k = 0; k < n; ++k) {
                if (a.mult[i][j][k] == 0) continue;
                for (Coord u = 0; u < n; ++u)
                    if (a.unit[u] != 0) r.emplace_back(k * n + u, a.mult[i][j][k] * a.unit[u]);
            }
            r.emplace_back(j * n + i, Rat(-1));
            r.emplace_back(i * n + j, Rat(-1));
            sort_and_combine(r);
            rels.push_back(std::move(r));
        }
    // A-module closure: e_l . relations
    std::vector<RatMatrix> ops;
    for (Coord l = 0; l < n; ++l) {
        std::vector<RatVec> cols(fdim);
        for (Coord s = 0; s < n; ++s)
            for (Coord k = 0; k < n; ++k) {
                RatVec col;
                for (Coord p = 0; p < n; ++p)
                    if (a.mult[l][k][p] != 0) col.emplace_back(s * n + p, a.mult[l][k][p]);
                cols[s * n + k] = std::move(col);
            }
        ops.push_back(RatMatrix::from_columns(fdim, std::move(cols)));
    }
    std::vector<RatVec> closure;
    for (const auto& r : rels)
        for (Coord l = 0; l < n; ++l) closure.push_back(ops[l].apply(r));

    QuotientModule q = quotient_by(fdim, closure, ops);
    Omega1 out;
    out.module = q.module;
    std::vector<RatVec> dcols(n);
    for (Coord t = 0; t < n; ++t) {
        RatVec v;
        for (Coord u = 0; u < n; ++u)
            if (a.unit[u] != 0) v.emplace_back(t * n + u, a.unit[u]);
        dcols[t] = q.projection.apply(v);
    }
    out.derivation = RatMatrix::from_columns(q.module.dim, std::move(dcols));
    return {out, q};
}

} // namespace detail

inline Omega1 omega1_leibniz(const FDAlgebra& a) { return detail::omega1_leibniz_full(a).first; }

/// Both constructions plus the canonical comparison map between them (the
/// universal property applied to the derivation a -> [1(x)a - a(x)1]).
struct Omega1Pair {
    Omega1 leibniz;
    Omega1 kernel;
    RatMatrix comparison; // Leibniz module -> kernel module
    bool isomorphic = false;
};

inline Omega1Pair omega1_pair(const FDAlgebra& a) {
    const Coord n = a.dim;
    Omega1Pair out;
    out.kernel = omega1_kernel(a);
    auto [leib, q] = detail::omega1_leibniz_full(a);
    out.leibniz = leib;

    // comparison: free coordinate (s,k) = e_k d(e_s) maps to e_k . dK(e_s);
    // each quotient basis element is the class of its complement coordinate.
    std::vector<RatVec> cols(q.module.dim);
    for (Coord c = 0; c < q.module.dim; ++c) {
        Coord coordinate = q.complement[c];
        Coord s = coordinate / n, k = coordinate % n;
        cols[c] = module_action(out.kernel.module, basis_vec(n, k))
                      .apply(out.kernel.derivation.column(s));
    }
    out.comparison = RatMatrix::from_columns(out.kernel.module.dim, std::move(cols));
    out.isomorphic = (out.leibniz.module.dim == out.kernel.module.dim) &&
                     (rank(out.comparison) == out.leibniz.module.dim);
    return out;
}

// ---------------------------------------------------------------------------
// localization (Artinian: stabilized image of multiplication by s)

struct Localization {
    FDAlgebra algebra;       // A_s
    RatMatrix structure_map; // A -> A_s in the chosen basis of the stable image
    std::vector<RatVec> stable_basis; // basis of the stable image inside A
    bool zero = false;       // s nilpotent
};

inline Localization localize(const FDAlgebra& a, const MultSystem& s) {
    const Coord n = a.dim;
    if (static_cast<Coord>(s.generator.size()) != n)
        throw Error(ErrorKind::DimensionMismatch, "localize: generator length != dim");
    // multiplication operator L_s
    std::vector<RatVec> cols(n);
    for (Coord j = 0; j < n; ++j) cols[j] = to_sparse(multiply(a, s.generator, to_dense(unit_vec(j), n)));
    RatMatrix Ls = RatMatrix::from_columns(n, std::move(cols));
    // stabilize the image of L_s^k
    RatMatrix P = RatMatrix::identity(n);
    Subspace V{n, {}};
    for (Coord k = 0; k <= n; ++k) {
        P = Ls.compose(P);
        Subspace W = image_basis(P);
        if (k > 0 && W.dim() == V.dim()) break;
        V = W;
    }
    Localization out;
    out.stable_basis = V.basis;
    if (V.dim() == 0) {
        out.zero = true;
        out.algebra.name = a.name + "_loc(zero)";
        out.algebra.dim = 0;
        out.structure_map = RatMatrix::zero(0, n);
        return out;
    }
    const Coord d = V.dim();
    auto in_V = [&](const RatVec& v) {
        auto sol = express_in_span(V.basis, n, v);
        if (!sol) throw Error(ErrorKind::InvalidArgument, "localize: product left the stable image");
        RatVec w;
        for (Coord c = 0; c < d; ++c)
            if ((*sol)[c] != 0) w.emplace_back(c, (*sol)[c]);
        return w;
    };
    // find the idempotent unit e in V: e . b_i = b_i for all i
    // unknowns: coefficients of e over V basis
    {
        std::vector<RatVec> sys_cols(d);
        RatVec target;
        for (Coord jcol = 0; jcol < d; ++jcol) sys_cols[jcol] = {};
        for (Coord i = 0; i < d; ++i) {
            std::vector<Rat> bi = to_dense(V.basis[i], n);
            for (Coord j = 0; j < d; ++j) {
                std::vector<Rat> bj = to_dense(V.basis[j], n);
                RatVec prod = to_sparse(multiply(a, bj, bi));
                for (const auto& [r, qv] : prod) sys_cols[j].emplace_back(i * n + r, qv);
            }
            for (const auto& [r, qv] : V.basis[i]) target.emplace_back(i * n + r, qv);
        }
        for (auto& cvec : sys_cols) sort_and_combine(cvec);
        sort_and_combine(target);
        auto sol = express_in_span(sys_cols, d * n, target);
        if (!sol) throw Error(ErrorKind::InvalidArgument, "localize: no unit in the stable image");
        std::vector<Rat> e(n, Rat(0));
        for (Coord j = 0; j < d; ++j)
            if ((*sol)[j] != 0) {
                std::vector<Rat> bj = to_dense(V.basis[j], n);
                for (Coord r = 0; r < n; ++r) e[r] += (*sol)[j] * bj[r];
            }
        out.algebra.unit = to_dense(in_V(to_sparse(e)), d);
    }
    out.algebra.name = a.name + "_loc";
    out.algebra.dim = d;
    out.algebra.mult.assign(d, std::vector<std::vector<Rat>>(d));
    for (Coord i = 0; i < d; ++i)
        for (Coord j = 0; j < d; ++j)
            out.algebra.mult[i][j] = to_dense(
                in_V(to_sparse(multiply(a, to_dense(V.basis[i], n), to_dense(V.basis[j], n)))), d);
    // structure map a -> e*a (projection onto the stable factor)
    std::vector<Rat> e_dense(n, Rat(0));
    {
        // unit written back in A coordinates
        for (Coord j = 0; j < d; ++j) {
            if (out.algebra.unit[j] == 0) continue;
            std::vector<Rat> bj = to_dense(V.basis[j], n);
            for (Coord r = 0; r < n; ++r) e_dense[r] += out.algebra.unit[j] * bj[r];
        }
    }
    std::vector<RatVec> smap(n);
    for (Coord j = 0; j < n; ++j)
        smap[j] = in_V(to_sparse(multiply(a, e_dense, to_dense(unit_vec(j), n))));
    out.structure_map = RatMatrix::from_columns(d, std::move(smap));
    check_algebra(out.algebra);
    return out;
}

/// Stabilized image of the s-action on a module, as a module over localize(a,s).
inline FDModule localize_module(const FDAlgebra& a, const FDModule& m, const MultSystem& s,
                                const Localization& loc) {
    RatMatrix Ms = module_action(m, s.generator);
    RatMatrix P = RatMatrix::identity(m.dim);
    Subspace W{m.dim, {}};
    for (Coord k = 0; k <= m.dim; ++k) {
        P = Ms.compose(P);
        Subspace X = image_basis(P);
        if (k > 0 && X.dim() == W.dim()) break;
        W = X;
    }
    FDModule out;
    out.dim = W.dim();
    if (loc.zero || out.dim == 0) {
        out.dim = 0;
        out.action.assign(std::max<Coord>(loc.algebra.dim, 0), RatMatrix::zero(0, 0));
        return out;
    }
    auto in_W = [&](const RatVec& v) {
        auto sol = express_in_span(W.basis, m.dim, v);
        if (!sol) throw Error(ErrorKind::InvalidArgument, "localize_module: action left the stable image");
        RatVec w;
        for (Coord c = 0; c < out.dim; ++c)
            if ((*sol)[c] != 0) w.emplace_back(c, (*sol)[c]);
        return w;
    };
    for (Coord j = 0; j < loc.algebra.dim; ++j) {
        // action of the j-th basis vector of A_s, i.e. of its representative in A
        std::vector<Rat> rep(a.dim, Rat(0));
        for (const auto& [r, qv] : loc.stable_basis[j]) rep[r] = qv;
        RatMatrix op = module_action(m, rep);
        std::vector<RatVec> cols(out.dim);
        for (Coord c = 0; c < out.dim; ++c) cols[c] = in_W(op.apply(W.basis[c]));
        out.action.push_back(RatMatrix::from_columns(out.dim, std::move(cols)));
    }
    return out;
}

// ---------------------------------------------------------------------------
// symmetric and exterior powers over A

namespace detail {

struct TensorOverA {
    Coord dim = 0;
    std::vector<RatMatrix> action;     // of algebra basis elements
    RatMatrix flatten;                 // M^{(x)Q j} -> this
    std::vector<std::vector<Coord>> tuples; // surviving coordinate tuples
};

inline TensorOverA tensor_power_over_A(const FDAlgebra& a, const FDModule& m, int j) {
    TensorOverA t;
    if (j == 0) {
        t.dim = a.dim;
        t.action = regular_module(a).action;
        t.flatten = RatMatrix::identity(1); // unused for j = 0
        t.tuples = {{}};
        return t;
    }
    // j = 1 seed
    t.dim = m.dim;
    t.action = m.action;
    t.flatten = RatMatrix::identity(m.dim);
    t.tuples.clear();
    for (Coord i = 0; i < m.dim; ++i) t.tuples.push_back({i});
    for (int step = 2; step <= j; ++step) {
        const Coord big = t.dim * m.dim; // coordinate (c, v) -> c*m.dim + v
        // balancing relations (a t) (x) v - t (x) (a v)
        std::vector<RatVec> rels;
        for (Coord l = 0; l < a.dim; ++l) {
            const RatMatrix& at = t.action[l];
            const RatMatrix& av = m.action[l];
            for (Coord c = 0; c < t.dim; ++c)
                for (Coord v = 0; v < m.dim; ++v) {
                    RatVec r;
                    for (const auto& [cc, qv] : at.column(c)) r.emplace_back(cc * m.dim + v, qv);
                    for (const auto& [vv, qv] : av.column(v)) r.emplace_back(c * m.dim + vv, -qv);
                    sort_and_combine(r);
                    if (!r.empty()) rels.push_back(std::move(r));
                }
        }
        std::vector<RatMatrix> ops;
        for (Coord l = 0; l < a.dim; ++l) {
            std::vector<RatVec> cols(big);
            for (Coord c = 0; c < t.dim; ++c)
                for (Coord v = 0; v < m.dim; ++v) {
                    RatVec col;
                    for (const auto& [vv, qv] : m.action[l].column(v))
                        col.emplace_back(c * m.dim + vv, qv);
                    cols[c * m.dim + v] = std::move(col);
                }
            ops.push_back(RatMatrix::from_columns(big, std::move(cols)));
        }
        QuotientModule q = quotient_by(big, rels, ops);
        // new flatten: M^{(x) step} -> quotient
        const Coord prev_cols = t.flatten.cols();
        std::vector<RatVec> fcols(prev_cols * m.dim);
        for (Coord f = 0; f < prev_cols; ++f) {
            const RatVec& img = t.flatten.column(f);
            for (Coord v = 0; v < m.dim; ++v) {
                RatVec lifted;
                for (const auto& [c, qv] : img) lifted.emplace_back(c * m.dim + v, qv);
                fcols[f * m.dim + v] = q.projection.apply(lifted);
            }
        }
        TensorOverA next;
        next.dim = q.module.dim;
        next.action = q.module.action;
        next.flatten = RatMatrix::from_columns(q.module.dim, std::move(fcols));
        for (Coord c = 0; c < q.module.dim; ++c) {
            Coord coordinate = q.complement[c];
            auto tup = t.tuples[coordinate / m.dim];
            tup.push_back(coordinate % m.dim);
            next.tuples.push_back(std::move(tup));
        }
        t = std::move(next);
    }
    return t;
}

inline std::vector<std::vector<int>> permutations_of(int j) {
    std::vector<int> p(j);
    for (int i = 0; i < j; ++i) p[i] = i;
    std::vector<std::vector<int>> out;
    do out.push_back(p);
    while (std::next_permutation(p.begin(), p.end()));
    return out;
}

inline int permutation_sign(std::vector<int> p) {
    int sign = 1;
    for (std::size_t i = 0; i < p.size(); ++i)
        while (p[i] != static_cast<int>(i)) {
            std::swap(p[i], p[p[i]]);
            sign = -sign;
        }
    return sign;
}

inline FDModule symmetrize(const FDAlgebra& a, const FDModule& m, int j, bool alternating) {
    if (j < 0) throw Error(ErrorKind::InvalidArgument, "power: negative exponent");
    if (j == 0) return regular_module(a);
    if (j == 1) return m;
    TensorOverA t = tensor_power_over_A(a, m, j);
    // the symmetrizer / antisymmetrizer idempotent on the coequalizer
    RatMatrix P = RatMatrix::zero(t.dim, t.dim);
    const auto perms = permutations_of(j);
    Rat inv_fact(1, static_cast<long long>(perms.size()));
    for (const auto& sigma : perms) {
        // sigma sends basis tuple (t_1..t_j) to the flatten column of the
        // permuted tuple
        std::vector<RatVec> cols(t.dim);
        for (Coord c = 0; c < t.dim; ++c) {
            const auto& tup = t.tuples[c];
            Coord flat = 0;
            for (int pos = 0; pos < j; ++pos) flat = flat * m.dim + tup[sigma[pos]];
            cols[c] = t.flatten.column(flat);
        }
        RatMatrix sm = RatMatrix::from_columns(t.dim, std::move(cols));
        int sgn = alternating ? permutation_sign(sigma) : 1;
        P = P.plus(sm.scaled(sgn > 0 ? inv_fact : -inv_fact));
    }
    Subspace img = image_basis(P);
    FDModule out;
    out.dim = img.dim();
    auto coords = [&](const RatVec& v) {
        auto sol = express_in_span(img.basis, t.dim, v);
        if (!sol) throw Error(ErrorKind::InvalidArgument, "power: action left the image");
        RatVec w;
        for (Coord c = 0; c < out.dim; ++c)
            if ((*sol)[c] != 0) w.emplace_back(c, (*sol)[c]);
        return w;
    };
    for (Coord l = 0; l < a.dim; ++l) {
        std::vector<RatVec> cols(out.dim);
        for (Coord c = 0; c < out.dim; ++c) cols[c] = coords(t.action[l].apply(img.basis[c]));
        out.action.push_back(RatMatrix::from_columns(out.dim, std::move(cols)));
    }
    return out;
}

} // namespace detail

inline FDModule sym_power(const FDAlgebra& a, const FDModule& m, int j) {
    return detail::symmetrize(a, m, j, false);
}

inline FDModule ext_power(const FDAlgebra& a, const FDModule& m, int j) {
    return detail::symmetrize(a, m, j, true);
}

// ---------------------------------------------------------------------------
// radical and residue module

/// Nilradical of a finite-dimensional commutative Q-algebra: the kernel of the
/// trace form (a,b) -> tr(L_{ab}).
inline Subspace nilradical(const FDAlgebra& a) {
    const Coord n = a.dim;
    // L_i as dense column data: L_i e_s = mult[i][s]
    std::vector<std::vector<Rat>> gram(n, std::vector<Rat>(n, Rat(0)));
    for (Coord i = 0; i < n; ++i)
        for (Coord j = 0; j < n; ++j) {
            // tr(L_{e_i e_j}) = sum_s (e_i e_j e_s)_s
            std::vector<Rat> prod = a.mult[i][j];
            Rat tr(0);
            for (Coord s = 0; s < n; ++s) {
                std::vector<Rat> v = multiply(a, prod, to_dense(unit_vec(s), n));
                tr += v[s];
            }
            gram[i][j] = tr;
        }
    return kernel_basis(RatMatrix::from_rows(gram));
}

/// A / nilradical as an A-module (the residue module; equals Q for local A).
inline FDModule residue_module(const FDAlgebra& a) {
    Subspace rad = nilradical(a);
    QuotientModule q = quotient_by(a.dim, rad.basis, regular_module(a).action);
    return q.module;
}

inline bool is_semisimple(const FDAlgebra& a) { return nilradical(a).dim() == 0; }

} // namespace hochhom

#endif
