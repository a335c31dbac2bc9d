#ifndef HOCHHOM_HOMALG_HPP
#define HOCHHOM_HOMALG_HPP

#include "hochhom/algebra.hpp"
#include "hochhom/hochschild.hpp"

#include <string>
#include <vector>

namespace hochhom {

/// Free resolution ... -> A^{r_1} -> A^{r_0} -> M -> 0, maps stored as
/// Q-matrices of the underlying linear maps (slot-major coordinates: the
/// coordinate s*dim(A)+u is e_u in slot s).
struct FreeResolution {
    std::vector<Coord> ranks;        // r_0 .. r_L
    std::vector<RatMatrix> maps;     // maps[p] : A^{r_{p+1}} -> A^{r_p}
    RatMatrix augmentation;          // A^{r_0} -> M
    std::vector<std::vector<RatVec>> generator_images; // images of unit generators per step
    bool exhausted = false;          // kernel hit zero before the length bound
};

namespace detail {

/// Action matrices of the algebra basis on the free module A^r.
inline std::vector<RatMatrix> free_module_action(const FDAlgebra& a, Coord r) {
    std::vector<RatMatrix> out;
    for (Coord i = 0; i < a.dim; ++i) {
        std::vector<RatVec> cols(r * a.dim);
        for (Coord s = 0; s < r; ++s)
            for (Coord u = 0; u < a.dim; ++u) {
                RatVec col;
                for (Coord p = 0; p < a.dim; ++p)
                    if (a.mult[i][u][p] != 0) col.emplace_back(s * a.dim + p, a.mult[i][u][p]);
                cols[s * a.dim + u] = std::move(col);
            }
        out.push_back(RatMatrix::from_columns(r * a.dim, std::move(cols)));
    }
    return out;
}

/// Greedy minimal generating set of the submodule spanned by `vectors`:
/// radical multiples never help (Nakayama), new vectors are kept only when
/// they fall outside the submodule generated so far.
inline std::vector<RatVec> minimal_generators(const FDAlgebra& a,
                                              const std::vector<RatMatrix>& action, Coord ambient,
                                              const std::vector<RatVec>& vectors,
                                              const std::vector<RatVec>& radical_basis) {
    SpanBuilder sb(ambient);
    for (const auto& r : radical_basis)
        for (const auto& v : vectors) {
            RatMatrix op = RatMatrix::zero(ambient, ambient);
            // r is an algebra element in coordinates; act with it
            RatVec image;
            for (const auto& [i, q] : r) image = vec_add_scaled(image, q, action[i].apply(v));
            sb.insert(image);
        }
    std::vector<RatVec> gens;
    for (const auto& v : vectors) {
        if (sb.contains(v)) continue;
        gens.push_back(v);
        for (Coord i = 0; i < a.dim; ++i) sb.insert(action[i].apply(v));
        // absorb radical multiples of the enlarged submodule lazily: products
        // e_i . v already include them since the radical is spanned by algebra
        // elements
    }
    return gens;
}

} // namespace detail

/// Free resolution of M with minimal-by-radical generator choices, truncated
/// at length L (or earlier when the kernel vanishes).
inline FreeResolution free_resolution(const FDAlgebra& a, const FDModule& m, int L) {
    FreeResolution res;
    Subspace rad = nilradical(a);

    // generators of M itself
    std::vector<RatVec> basis_list;
    for (Coord i = 0; i < m.dim; ++i) basis_list.push_back(unit_vec(i));
    std::vector<RatVec> gens =
        detail::minimal_generators(a, m.action, m.dim, basis_list, rad.basis);
    res.ranks.push_back(static_cast<Coord>(gens.size()));
    res.generator_images.push_back(gens);
    {
        const Coord r0 = res.ranks[0];
        std::vector<RatVec> cols(r0 * a.dim);
        for (Coord s = 0; s < r0; ++s)
            for (Coord u = 0; u < a.dim; ++u)
                cols[s * a.dim + u] = module_action(m, basis_vec(a.dim, u)).apply(gens[s]);
        res.augmentation = RatMatrix::from_columns(m.dim, std::move(cols));
    }

    RatMatrix current = res.augmentation;
    std::vector<RatMatrix> cur_action = detail::free_module_action(a, res.ranks[0]);
    for (int p = 1; p <= L; ++p) {
        Subspace ker = kernel_basis(current);
        if (ker.dim() == 0) {
            res.exhausted = true;
            break;
        }
        std::vector<RatVec> step_gens = detail::minimal_generators(
            a, cur_action, ker.ambient_dim, ker.basis, rad.basis);
        const Coord r = static_cast<Coord>(step_gens.size());
        res.ranks.push_back(r);
        res.generator_images.push_back(step_gens);
        std::vector<RatVec> cols(r * a.dim);
        for (Coord s = 0; s < r; ++s)
            for (Coord u = 0; u < a.dim; ++u) {
                RatVec img;
                const RatVec& base = step_gens[s];
                // e_u . gen_s in the free module
                img = cur_action[u].apply(base);
                cols[s * a.dim + u] = std::move(img);
            }
        RatMatrix step = RatMatrix::from_columns(ker.ambient_dim, std::move(cols));
        res.maps.push_back(step);
        current = step;
        cur_action = detail::free_module_action(a, r);
    }
    return res;
}

/// dims of Ext^p_A(M, N) for 0 <= p <= p_max.
struct ExtTable {
    std::vector<std::int64_t> dims;
};

/// Direct dimension of Hom_A(M, N) (the intertwiner equations); used as the
/// independent oracle for Ext^0.
inline std::int64_t hom_dim(const FDAlgebra& a, const FDModule& m, const FDModule& n) {
    // unknowns T : dimN x dimM, column-major index c*dimN + r... use m-col major
    const Coord unknowns = m.dim * n.dim;
    std::vector<RatVec> rows;
    for (Coord j = 0; j < a.dim; ++j) {
        // T . action_M(e_j) - action_N(e_j) . T = 0, entry (r, c)
        const RatMatrix& AM = m.action[j];
        const RatMatrix& AN = n.action[j];
        for (Coord r = 0; r < n.dim; ++r)
            for (Coord c = 0; c < m.dim; ++c) {
                RatVec row;
                for (const auto& [k, q] : AM.column(c)) row.emplace_back(k * n.dim + r, q);
                for (Coord k = 0; k < n.dim; ++k) {
                    Rat q = AN.entry(r, k);
                    if (q != 0) row.emplace_back(c * n.dim + k, -q);
                }
                sort_and_combine(row);
                if (!row.empty()) rows.push_back(std::move(row));
            }
    }
    RatMatrix constraint = RatMatrix::from_columns(unknowns, std::move(rows)).transpose();
    return unknowns - rank(constraint);
}

/// Ext via Hom_A(resolution, N): Hom_A(A^{r_p}, N) = N^{r_p}, the dual
/// differentials act by the A-valued entries of the resolution maps.
inline ExtTable ext(const FDAlgebra& a, const FDModule& m, const FDModule& n, int p_max) {
    FreeResolution res = free_resolution(a, m, p_max + 1);
    const int steps = static_cast<int>(res.maps.size());
    // delta^p : N^{r_{p-1}} -> N^{r_p}
    std::vector<RatMatrix> deltas;
    for (int p = 1; p <= steps; ++p) {
        const Coord r_lo = res.ranks[p - 1];
        const Coord r_hi = res.ranks[p];
        std::vector<RatVec> cols(r_lo * n.dim);
        for (Coord t = 0; t < r_lo; ++t)
            for (Coord z = 0; z < n.dim; ++z) {
                RatVec col;
                for (Coord s = 0; s < r_hi; ++s) {
                    // a_{ts} = slot-t block of the image of generator s
                    // generator s = sum_u unit[u] e_{s,u}
                    std::vector<Rat> a_ts(a.dim, Rat(0));
                    for (Coord u = 0; u < a.dim; ++u) {
                        if (a.unit[u] == 0) continue;
                        const RatVec& img = res.maps[p - 1].column(s * a.dim + u);
                        for (const auto& [idx, q] : img)
                            if (idx / a.dim == t) a_ts[idx % a.dim] += a.unit[u] * q;
                    }
                    RatVec acted = module_action(n, a_ts).apply(unit_vec(z));
                    for (const auto& [rz, q] : acted) col.emplace_back(s * n.dim + rz, q);
                }
                sort_and_combine(col);
                cols[t * n.dim + z] = std::move(col);
            }
        deltas.push_back(RatMatrix::from_columns(r_hi * n.dim, std::move(cols)));
    }
    ExtTable out;
    for (int p = 0; p <= p_max; ++p) {
        if (p > steps) {
            // resolution exhausted: kernel vanished, higher Ext is zero
            out.dims.push_back(0);
            continue;
        }
        Coord dim_p = res.ranks[p] * n.dim;
        std::int64_t rk_in = (p >= 1) ? rank(deltas[p - 1]) : 0;
        std::int64_t rk_out = (p < steps) ? rank(deltas[p]) : 0;
        if (p == steps && !res.exhausted)
            throw Error(ErrorKind::InvalidArgument, "ext: resolution shorter than requested degree");
        out.dims.push_back(dim_p - rk_in - rk_out);
    }
    return out;
}

/// Per-degree comparison dim H^n(K,A,M) vs sum_{p+q=n} dim Ext^p_A(H_q(K,A), M).
struct DegenerationReport {
    std::vector<std::int64_t> lhs;                 // cohomology dims, 0..n_max
    std::vector<std::int64_t> rhs;                 // E_2 anti-diagonal sums
    std::vector<std::vector<std::int64_t>> ext_rows; // ext_rows[q] = Ext^*(H_q, M)
    std::vector<std::int64_t> homology_dims;
    bool degenerate = false;   // lhs == rhs through n_max
    bool sane = true;          // lhs <= rhs everywhere (must hold)
};

inline DegenerationReport degeneration_check(const FinSimpSet& k, const FDAlgebra& a,
                                             const FDModule& m, int n_max, int p_max,
                                             std::int64_t budget = kDefaultBudget) {
    if (p_max < n_max)
        throw Error(ErrorKind::InvalidArgument, "degeneration_check: need p_max >= n_max");
    DegenerationReport rep;
    rep.lhs = cohomology(k, a, m, n_max + 1, budget).dims;
    rep.lhs.resize(n_max + 1);
    HomologyModules hm = homology_with_modules(k, a, n_max + 1, budget);
    rep.homology_dims = hm.table.dims;
    for (int q = 0; q <= n_max; ++q) {
        if (hm.modules[q].dim == 0) {
            rep.ext_rows.push_back(std::vector<std::int64_t>(p_max + 1, 0));
            continue;
        }
        rep.ext_rows.push_back(ext(a, hm.modules[q], m, p_max).dims);
    }
    rep.rhs.assign(n_max + 1, 0);
    for (int n = 0; n <= n_max; ++n)
        for (int q = 0; q <= n; ++q) rep.rhs[n] += rep.ext_rows[q][n - q];
    rep.degenerate = (rep.lhs == rep.rhs);
    for (int n = 0; n <= n_max; ++n)
        if (rep.lhs[n] > rep.rhs[n]) rep.sane = false;
    return rep;
}

} // namespace hochhom

#endif
