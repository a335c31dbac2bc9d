#ifndef HOCHHOM_HOCHSCHILD_HPP
#define HOCHHOM_HOCHSCHILD_HPP

#include "hochhom/algebra.hpp"
#include "hochhom/chain_complex.hpp"
#include "hochhom/graded.hpp"
#include "hochhom/simplicial.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hochhom {

inline constexpr std::int64_t kDefaultBudget = 5'000'000;

/// A map of finite sets {0..domain_size-1} -> {0..codomain_size-1}.
struct FinSetMap {
    Coord domain_size = 0;
    Coord codomain_size = 0;
    std::vector<Coord> map;
};

namespace detail {

/// dim^exp, guarded against the budget (and int64 overflow) as it grows.
inline Coord checked_pow(Coord dim, Coord exp, std::int64_t budget, const char* what) {
    unsigned __int128 size = 1;
    for (Coord i = 0; i < exp; ++i) {
        size *= static_cast<unsigned __int128>(std::max<Coord>(dim, 0));
        if (size > static_cast<unsigned __int128>(budget)) throw Error(ErrorKind::BudgetExceeded, what);
    }
    return static_cast<Coord>(size);
}

} // namespace detail

/// Lexicographic indexing of the basis of A^{(x) n}; the first factor is the
/// most significant digit.
class TensorIndexer {
public:
    TensorIndexer(Coord dim, Coord factors, std::int64_t budget = kDefaultBudget)
        : dim_(dim), factors_(factors) {
        size_ = detail::checked_pow(dim, factors, budget,
                                    "size-budget overflow: tensor power too large");
    }

    Coord size() const { return size_; }
    Coord factors() const { return factors_; }

    Coord flat(const std::vector<int>& tuple) const {
        Coord f = 0;
        for (int t : tuple) f = f * dim_ + t;
        return f;
    }

    std::vector<int> tuple(Coord flat) const {
        std::vector<int> out(factors_);
        for (Coord i = factors_; i-- > 0;) {
            out[i] = static_cast<int>(flat % dim_);
            flat /= dim_;
        }
        return out;
    }

private:
    Coord dim_, factors_, size_;
};

namespace detail {

/// Expand a pure tensor of dense algebra vectors into the flat sparse basis.
inline RatVec expand_tensor(const std::vector<std::vector<Rat>>& factors, Coord dim) {
    std::vector<std::pair<Coord, Rat>> acc = {{0, Rat(1)}};
    for (const auto& f : factors) {
        std::vector<std::pair<Coord, Rat>> next;
        next.reserve(acc.size() * 2);
        for (const auto& [base, coef] : acc)
            for (Coord b = 0; b < dim; ++b)
                if (f[b] != 0) next.emplace_back(base * dim + b, coef * f[b]);
        acc = std::move(next);
        if (acc.empty()) break;
    }
    sort_and_combine(acc);
    return acc;
}

/// Odometer over basis tuples in flat (lexicographic) order.
template <typename Fn>
inline void for_each_tuple(Coord dim, Coord factors, Fn&& fn) {
    std::vector<int> tuple(factors, 0);
    Coord total = 1;
    for (Coord i = 0; i < factors; ++i) total *= dim;
    for (Coord flat = 0; flat < total; ++flat) {
        fn(flat, tuple);
        for (Coord i = factors; i-- > 0;) {
            if (++tuple[i] < dim) break;
            tuple[i] = 0;
        }
    }
}

} // namespace detail

/// Matrix of f_* : A^{(x) domain} -> A^{(x) codomain}: multiply entries along
/// fibers, empty fibers contribute the unit.
inline RatMatrix loday_map(const FinSetMap& f, const FDAlgebra& a,
                           std::int64_t budget = kDefaultBudget) {
    if (static_cast<Coord>(f.map.size()) != f.domain_size)
        throw Error(ErrorKind::InvalidArgument, "loday_map: map is not total");
    TensorIndexer src(a.dim, f.domain_size, budget);
    TensorIndexer tgt(a.dim, f.codomain_size, budget);
    std::vector<RatVec> cols(src.size());
    detail::for_each_tuple(a.dim, f.domain_size, [&](Coord flat, const std::vector<int>& tuple) {
        std::vector<std::vector<Rat>> fibers(f.codomain_size, a.unit);
        for (Coord p = 0; p < f.domain_size; ++p)
            fibers[f.map[p]] = multiply(a, fibers[f.map[p]], basis_vec(a.dim, tuple[p]));
        cols[flat] = detail::expand_tensor(fibers, a.dim);
    });
    return RatMatrix::from_columns(tgt.size(), std::move(cols));
}

namespace detail {

inline void check_levels(const FinSimpSet& k, int N) {
    if (k.trunc_level() < N + 1)
        throw Error(ErrorKind::TruncationTooShallow,
                    "chain complex to degree " + std::to_string(N) + " needs truncation level " +
                        std::to_string(N + 1));
}

inline void check_budget(const FinSimpSet& k, const FDAlgebra& a, int N, std::int64_t budget) {
    std::int64_t total = 0;
    for (int n = 0; n <= N; ++n) {
        total += checked_pow(a.dim, k.level_sizes[n], budget,
                             "size-budget overflow: complex too large");
        if (total > budget)
            throw Error(ErrorKind::BudgetExceeded, "size-budget overflow: complex too large");
    }
}

/// d_n = sum_i (-1)^i (d_i)_* assembled in one pass over the domain tuples.
/// Fiber products are built entry by entry with an early bail-out when a
/// product dies (for truncated algebras almost every term does).
inline RatMatrix loday_differential(const FinSimpSet& k, const FDAlgebra& a, int n,
                                    std::int64_t budget) {
    const Coord s = k.level_sizes[n];
    const Coord t = k.level_sizes[n - 1];
    TensorIndexer src(a.dim, s, budget);
    TensorIndexer tgt(a.dim, t, budget);

    // fiber membership per face is tuple-independent
    std::vector<std::vector<std::vector<Coord>>> members(n + 1);
    for (int i = 0; i <= n; ++i) {
        members[i].assign(t, {});
        for (Coord p = 0; p < s; ++p) members[i][k.faces[n][i][p]].push_back(p);
    }

    std::vector<std::vector<Rat>> fibers(t);
    std::vector<Rat> temp(a.dim);
    std::vector<RatVec> cols(src.size());
    detail::for_each_tuple(a.dim, s, [&](Coord flat, const std::vector<int>& tuple) {
        RatVec col;
        for (int i = 0; i <= n; ++i) {
            bool dead = false;
            for (Coord j = 0; j < t && !dead; ++j) {
                auto& acc = fibers[j];
                const auto& mem = members[i][j];
                if (mem.empty()) {
                    acc = a.unit;
                    continue;
                }
                acc.assign(a.dim, Rat(0));
                acc[tuple[mem[0]]] = 1;
                for (std::size_t z = 1; z < mem.size(); ++z) {
                    const int b = tuple[mem[z]];
                    bool nonzero = false;
                    for (Coord y = 0; y < a.dim; ++y) temp[y] = 0;
                    for (Coord x = 0; x < a.dim; ++x) {
                        if (acc[x] == 0) continue;
                        const auto& prod = a.mult[x][b];
                        for (Coord y = 0; y < a.dim; ++y)
                            if (prod[y] != 0) {
                                temp[y] += acc[x] * prod[y];
                                nonzero = true;
                            }
                    }
                    acc.swap(temp);
                    if (!nonzero) {
                        // a fiber product vanished; the whole face term is zero
                        dead = true;
                        break;
                    }
                }
            }
            if (dead) continue;
            RatVec term = expand_tensor(fibers, a.dim);
            col = vec_add_scaled(col, (i % 2 == 0) ? Rat(1) : Rat(-1), term);
        }
        cols[flat] = std::move(col);
    });
    return RatMatrix::from_columns(tgt.size(), std::move(cols));
}

} // namespace detail

/// C(K, A) up to degree N: C_n = A^{(x)|K_n|}, d_n the alternating sum of the
/// Loday face maps.
inline ChainComplex chain_complex(const FinSimpSet& k, const FDAlgebra& a, int N,
                                  std::int64_t budget = kDefaultBudget) {
    detail::check_levels(k, N);
    detail::check_budget(k, a, N, budget);
    std::vector<Coord> dims(N + 1);
    for (int n = 0; n <= N; ++n) dims[n] = TensorIndexer(a.dim, k.level_sizes[n], budget).size();
    std::vector<RatMatrix> diffs;
    for (int n = 1; n <= N; ++n) diffs.push_back(detail::loday_differential(k, a, n, budget));
    return ChainComplex(std::move(dims), std::move(diffs));
}

/// The degenerate subcomplex D_n = sum_i image((s_i)_*), echelonized.
inline std::vector<Subspace> degenerate_subcomplex(const FinSimpSet& k, const FDAlgebra& a, int N,
                                                   std::int64_t budget = kDefaultBudget) {
    std::vector<Subspace> out;
    for (int n = 0; n <= N; ++n) {
        Coord ambient = TensorIndexer(a.dim, k.level_sizes[n], budget).size();
        SpanBuilder sb(ambient);
        if (n >= 1)
            for (int i = 0; i < n; ++i) {
                FinSetMap si{k.level_sizes[n - 1], k.level_sizes[n], k.degens[n - 1][i]};
                RatMatrix m = loday_map(si, a, budget);
                for (Coord j = 0; j < m.cols(); ++j) sb.insert(m.column(j));
            }
        out.push_back(Subspace{ambient, sb.basis()});
    }
    return out;
}

/// Dold-Kan style normalization: the quotient of C(K, A) by the degenerate
/// subcomplex. Same homology as the raw complex.
inline ChainComplex normalized_complex(const FinSimpSet& k, const FDAlgebra& a, int N,
                                       std::int64_t budget = kDefaultBudget) {
    ChainComplex raw = chain_complex(k, a, N, budget);
    return quotient_complex(raw, degenerate_subcomplex(k, a, N, budget));
}

/// Per-degree homology dimensions and chosen cycle representatives. Degree N
/// itself misses incoming boundaries from level N+1, so only its cycle count
/// is reported, flagged as uncertified.
struct HomologyTable {
    std::string space;
    std::string algebra;
    int levels_used = 0;              // N
    int certified_through = -1;       // N - 1
    bool normalized = false;
    std::optional<int> weight;
    std::vector<std::int64_t> dims;   // degrees 0..N-1
    std::vector<std::vector<RatVec>> representatives;
    std::int64_t uncertified_top_cycles = 0; // dim ker(d_N), no boundaries removed
};

inline HomologyTable homology_of(const ChainComplex& c, int N) {
    HomologyTable t;
    t.levels_used = N;
    t.certified_through = N - 1;
    for (int q = 0; q <= N - 1; ++q) {
        HomologySpot h = c.homology_at(q);
        t.dims.push_back(h.dim);
        t.representatives.push_back(std::move(h.representatives));
    }
    t.uncertified_top_cycles = c.dim(N) - rank(c.differential(N));
    return t;
}

/// Higher Hochschild homology H_q(K, A) for q <= N-1.
inline HomologyTable homology(const FinSimpSet& k, const FDAlgebra& a, int N, bool use_normalized,
                              std::int64_t budget = kDefaultBudget) {
    ChainComplex c = use_normalized ? normalized_complex(k, a, N, budget)
                                    : chain_complex(k, a, N, budget);
    HomologyTable t = homology_of(c, N);
    t.space = k.name;
    t.algebra = a.name;
    t.normalized = use_normalized;
    return t;
}

// ---------------------------------------------------------------------------
// basepoint module structure on homology

/// Multiplication by e_j on the basepoint tensor factor of C_n.
inline RatMatrix basepoint_action(const FinSimpSet& k, const FDAlgebra& a, int n, Coord j,
                                  std::int64_t budget = kDefaultBudget) {
    const Coord s = k.level_sizes[n];
    const Coord bp = k.basepoint_at(n);
    TensorIndexer idx(a.dim, s, budget);
    std::vector<RatVec> cols(idx.size());
    detail::for_each_tuple(a.dim, s, [&](Coord flat, const std::vector<int>& tuple) {
        const auto& prod = a.mult[j][tuple[bp]];
        RatVec col;
        // flat index with the basepoint digit replaced
        Coord place = 1;
        for (Coord p = s - 1; p > bp; --p) place *= a.dim;
        Coord base = flat - Coord(tuple[bp]) * place;
        for (Coord b = 0; b < a.dim; ++b)
            if (prod[b] != 0) col.emplace_back(base + b * place, prod[b]);
        sort_and_combine(col);
        cols[flat] = std::move(col);
    });
    return RatMatrix::from_columns(idx.size(), std::move(cols));
}

/// Homology of the raw complex together with its A-module structure via the
/// basepoint factor.
struct HomologyModules {
    HomologyTable table;
    std::vector<FDModule> modules; // one per degree 0..N-1
};

inline HomologyModules homology_with_modules(const FinSimpSet& k, const FDAlgebra& a, int N,
                                             std::int64_t budget = kDefaultBudget) {
    ChainComplex c = chain_complex(k, a, N, budget);
    HomologyModules out;
    out.table = homology_of(c, N);
    out.table.space = k.name;
    out.table.algebra = a.name;
    for (int q = 0; q <= N - 1; ++q) {
        const auto& reps = out.table.representatives[q];
        const Coord hdim = static_cast<Coord>(reps.size());
        // boundary space echelon basis for coordinates
        SpanBuilder sb(c.dim(q));
        RatMatrix din = c.differential(q + 1);
        for (Coord col = 0; col < din.cols(); ++col) sb.insert(din.column(col));
        std::vector<RatVec> solve_cols = reps;
        for (auto& b : sb.basis()) solve_cols.push_back(b);
        FDModule m;
        m.dim = hdim;
        for (Coord j = 0; j < a.dim; ++j) {
            RatMatrix u = basepoint_action(k, a, q, j, budget);
            std::vector<RatVec> cols(hdim);
            for (Coord r = 0; r < hdim; ++r) {
                auto sol = express_in_span(solve_cols, c.dim(q), u.apply(reps[r]));
                if (!sol)
                    throw Error(ErrorKind::InvalidArgument,
                                "homology module: action left the cycle space");
                RatVec col;
                for (Coord i = 0; i < hdim; ++i)
                    if ((*sol)[i] != 0) col.emplace_back(i, (*sol)[i]);
                cols[r] = std::move(col);
            }
            m.action.push_back(RatMatrix::from_columns(hdim, std::move(cols)));
        }
        out.modules.push_back(std::move(m));
    }
    return out;
}

/// The H_0 witness for connected K: the basepoint inclusion A -> C_0 descends
/// to an algebra isomorphism A -> H_0(K, A).
inline bool h0_algebra_witness(const FinSimpSet& k, const FDAlgebra& a, int N,
                               std::int64_t budget = kDefaultBudget) {
    ChainComplex c = chain_complex(k, a, std::max(N, 1), budget);
    const Coord c0 = c.dim(0);
    const Coord bp = k.basepoint_at(0);
    const Coord s = k.level_sizes[0];
    auto include = [&](Coord j) {
        std::vector<std::vector<Rat>> fibers(s, a.unit);
        fibers[bp] = basis_vec(a.dim, j);
        return detail::expand_tensor(fibers, a.dim);
    };
    // boundaries
    SpanBuilder sb(c0);
    RatMatrix d1 = c.differential(1);
    for (Coord col = 0; col < d1.cols(); ++col) sb.insert(d1.column(col));
    // classes of the unit vectors must be independent and dim H_0 = dim A
    std::int64_t h0 = c0 - sb.rank();
    if (h0 != a.dim) return false;
    SpanBuilder with_imgs = sb;
    for (Coord j = 0; j < a.dim; ++j)
        if (!with_imgs.insert(include(j))) return false;
    // multiplicativity mod boundaries: phi(e_i e_j) = phi(e_i) * phi(e_j)
    auto tensor_mul = [&](const RatVec& u, const RatVec& v) {
        TensorIndexer idx(a.dim, s, budget);
        RatVec out;
        for (const auto& [uc, uq] : u)
            for (const auto& [vc, vq] : v) {
                auto tu = idx.tuple(uc), tv = idx.tuple(vc);
                std::vector<std::vector<Rat>> fibers(s);
                for (Coord p = 0; p < s; ++p) fibers[p] = a.mult[tu[p]][tv[p]];
                out = vec_add_scaled(out, uq * vq, detail::expand_tensor(fibers, a.dim));
            }
        sort_and_combine(out);
        return out;
    };
    for (Coord i = 0; i < a.dim; ++i)
        for (Coord j = 0; j < a.dim; ++j) {
            RatVec lhs;
            for (Coord t = 0; t < a.dim; ++t)
                if (a.mult[i][j][t] != 0) lhs = vec_add_scaled(lhs, a.mult[i][j][t], include(t));
            RatVec rhs = tensor_mul(include(i), include(j));
            RatVec diff = vec_add_scaled(lhs, Rat(-1), rhs);
            if (!sb.contains(diff)) return false;
        }
    return true;
}

// ---------------------------------------------------------------------------
// per-weight graded complexes

namespace detail {

struct GradedLevelBasis {
    std::vector<std::vector<int>> tuples;      // global monomial ids per factor
    std::map<std::vector<int>, Coord> index;
};

struct MonomialTable {
    std::vector<Monomial> monos;   // global id -> exponents, by weight then lex
    std::vector<int> weight_of;
    std::map<Monomial, int> id_of;
};

inline MonomialTable monomial_table(const GradedAlgebra& g, int wmax) {
    MonomialTable t;
    for (int w = 0; w <= wmax; ++w)
        for (auto& m : graded_weight_basis(g, w)) {
            t.id_of[m] = static_cast<int>(t.monos.size());
            t.weight_of.push_back(w);
            t.monos.push_back(m);
        }
    return t;
}

inline GradedLevelBasis enumerate_weight_tuples(const MonomialTable& mt, Coord factors, int w,
                                                std::int64_t budget, std::int64_t& running_total) {
    GradedLevelBasis out;
    std::vector<int> cur(factors, 0);
    // ids of weight zero come first; recursion assigns ids with weights summing to w
    auto rec = [&](auto&& self, Coord pos, int remaining) -> void {
        if (pos == factors) {
            if (remaining == 0) {
                out.index[cur] = static_cast<Coord>(out.tuples.size());
                out.tuples.push_back(cur);
                if (++running_total > budget)
                    throw Error(ErrorKind::BudgetExceeded, "size-budget overflow: graded complex too large");
            }
            return;
        }
        for (int id = 0; id < static_cast<int>(mt.monos.size()); ++id) {
            if (mt.weight_of[id] > remaining) break; // ids sorted by weight
            cur[pos] = id;
            self(self, pos + 1, remaining - mt.weight_of[id]);
        }
        cur[pos] = 0;
    };
    rec(rec, 0, w);
    return out;
}

} // namespace detail

/// The weight-w subcomplex of C(K, A) for a graded algebra: degree-n basis is
/// the monomial tuples of total weight w, differentials restrict the Loday
/// face maps (grading is preserved).
inline ChainComplex graded_chain_complex(const FinSimpSet& k, const GradedAlgebra& g, int w, int N,
                                         std::int64_t budget = kDefaultBudget) {
    detail::check_levels(k, N);
    auto mt = detail::monomial_table(g, w);
    std::int64_t running_total = 0;
    std::vector<detail::GradedLevelBasis> levels;
    for (int n = 0; n <= N; ++n)
        levels.push_back(detail::enumerate_weight_tuples(mt, k.level_sizes[n], w, budget, running_total));
    std::vector<Coord> dims;
    for (auto& l : levels) dims.push_back(static_cast<Coord>(l.tuples.size()));
    std::vector<RatMatrix> diffs;
    for (int n = 1; n <= N; ++n) {
        std::vector<RatVec> cols(levels[n].tuples.size());
        const Coord s = k.level_sizes[n];
        const Coord t = k.level_sizes[n - 1];
        for (Coord c = 0; c < static_cast<Coord>(levels[n].tuples.size()); ++c) {
            const auto& tuple = levels[n].tuples[c];
            RatVec col;
            for (int i = 0; i <= n; ++i) {
                const auto& face = k.faces[n][i];
                std::vector<Monomial> prod(t, Monomial(g.vars(), 0));
                bool dead = false;
                for (Coord p = 0; p < s && !dead; ++p) {
                    auto r = g.product(prod[face[p]], mt.monos[tuple[p]]);
                    if (!r)
                        dead = true;
                    else
                        prod[face[p]] = std::move(*r);
                }
                if (dead) continue;
                std::vector<int> img(t);
                for (Coord p = 0; p < t; ++p) img[p] = mt.id_of.at(prod[p]);
                auto it = levels[n - 1].index.find(img);
                if (it == levels[n - 1].index.end())
                    throw Error(ErrorKind::InvalidArgument, "graded complex: weight not preserved");
                col.emplace_back(it->second, (i % 2 == 0) ? Rat(1) : Rat(-1));
            }
            sort_and_combine(col);
            cols[c] = std::move(col);
        }
        diffs.push_back(RatMatrix::from_columns(dims[n - 1], std::move(cols)));
    }
    return ChainComplex(std::move(dims), std::move(diffs));
}

inline HomologyTable graded_homology(const FinSimpSet& k, const GradedAlgebra& g, int w, int N,
                                     std::int64_t budget = kDefaultBudget) {
    ChainComplex c = graded_chain_complex(k, g, w, N, budget);
    HomologyTable t = homology_of(c, N);
    t.space = k.name;
    t.algebra = g.name;
    t.weight = w;
    return t;
}

// ---------------------------------------------------------------------------
// cochain complexes Hom_A(C(K,A), M) and cohomology

/// Cohomologically graded complex: deltas[n] : C^n -> C^{n+1}.
struct CochainComplex {
    std::vector<Coord> dims;
    std::vector<RatMatrix> deltas;

    HomologySpot cohomology_at(int q) const {
        RatMatrix d_in = (q >= 1) ? deltas[q - 1] : RatMatrix::zero(dims[0], 0);
        RatMatrix d_out = (q < static_cast<int>(deltas.size()))
                              ? deltas[q]
                              : RatMatrix::zero(0, dims[q]);
        return subquotient_homology(d_in, d_out);
    }
};

/// Degree-n space of A-linear maps C_n -> M (A acting through the basepoint
/// factor), found as the solution space of the A-linearity conditions; the
/// codifferential is (-1)^{n+1} (pre-composition with d_{n+1}).
inline CochainComplex cochain_complex(const FinSimpSet& k, const FDAlgebra& a, const FDModule& m,
                                      int N, std::int64_t budget = kDefaultBudget) {
    detail::check_levels(k, N);
    detail::check_budget(k, a, N, budget);
    ChainComplex c = chain_complex(k, a, N, budget);

    // per level: basis of the solution space, with its free coordinates
    struct Level {
        std::vector<RatVec> basis; // vectors in Hom_k(C_n, M): coordinate t*dimM + r
        std::vector<Coord> free;   // free coordinate of each basis vector
    };
    std::vector<Level> levels;
    for (int n = 0; n <= N; ++n) {
        const Coord cn = c.dim(n);
        const Coord unknowns = cn * m.dim;
        // constraints: phi(e_j .bp t) = e_j . phi(t)
        std::vector<RatVec> rows;
        for (Coord j = 0; j < a.dim; ++j) {
            RatMatrix act = basepoint_action(k, a, n, j, budget);
            for (Coord t = 0; t < cn; ++t)
                for (Coord r = 0; r < m.dim; ++r) {
                    RatVec row;
                    for (const auto& [tp, qv] : act.column(t)) row.emplace_back(tp * m.dim + r, qv);
                    for (const auto& [rr, qv] : m.action[j].column(r))
                        row.emplace_back(t * m.dim + rr, -qv);
                    sort_and_combine(row);
                    if (!row.empty()) rows.push_back(std::move(row));
                }
        }
        RatMatrix constraint = RatMatrix::from_columns(unknowns, std::move(rows)).transpose();
        RowEchelon re(constraint);
        Level lvl;
        lvl.free = re.free_cols();
        lvl.basis = re.kernel_basis();
        levels.push_back(std::move(lvl));
    }

    CochainComplex out;
    for (auto& l : levels) out.dims.push_back(static_cast<Coord>(l.basis.size()));
    for (int n = 0; n < N; ++n) {
        const RatMatrix d = c.differential(n + 1);
        const Rat sign = (n % 2 == 0) ? Rat(-1) : Rat(1); // (-1)^{n+1}
        std::vector<RatVec> cols;
        cols.reserve(levels[n].basis.size());
        for (const auto& phi : levels[n].basis) {
            // psi(t') = phi(d t')
            RatVec psi;
            for (Coord tp = 0; tp < d.cols(); ++tp) {
                for (const auto& [t, qv] : d.column(tp)) {
                    // add qv * phi(t) at block tp
                    for (Coord r = 0; r < m.dim; ++r) {
                        Rat val = vec_entry(phi, t * m.dim + r);
                        if (val != 0) psi.emplace_back(tp * m.dim + r, qv * val);
                    }
                }
            }
            sort_and_combine(psi);
            // coordinates on the level-(n+1) basis via free coordinates
            RatVec col;
            for (Coord b = 0; b < static_cast<Coord>(levels[n + 1].basis.size()); ++b) {
                Coord f = levels[n + 1].free[b];
                Rat denom = vec_entry(levels[n + 1].basis[b], f);
                Rat val = vec_entry(psi, f);
                if (val != 0) col.emplace_back(b, sign * val / denom);
            }
            cols.push_back(std::move(col));
        }
        out.deltas.push_back(
            RatMatrix::from_columns(static_cast<Coord>(levels[n + 1].basis.size()), std::move(cols)));
    }
    // delta o delta = 0
    for (int n = 0; n + 1 < static_cast<int>(out.deltas.size()); ++n)
        for (Coord j = 0; j < out.deltas[n].cols(); ++j)
            if (!out.deltas[n + 1].apply(out.deltas[n].column(j)).empty())
                throw Error(ErrorKind::CompositionNonzero, "cochain complex: delta o delta != 0");
    return out;
}

/// H^q(K, A, M) for q <= N-1 (the affine rendering of the scheme-level
/// definition on Spec A).
inline HomologyTable cohomology(const FinSimpSet& k, const FDAlgebra& a, const FDModule& m, int N,
                                std::int64_t budget = kDefaultBudget) {
    CochainComplex cc = cochain_complex(k, a, m, N, budget);
    HomologyTable t;
    t.space = k.name;
    t.algebra = a.name;
    t.levels_used = N;
    t.certified_through = N - 1;
    for (int q = 0; q <= N - 1; ++q) {
        HomologySpot h = cc.cohomology_at(q);
        t.dims.push_back(h.dim);
        t.representatives.push_back(std::move(h.representatives));
    }
    // degree N: cochains modulo coboundaries, the outgoing map is unavailable
    t.uncertified_top_cycles = cc.dims[N] - (N >= 1 ? rank(cc.deltas[N - 1]) : 0);
    return t;
}

} // namespace hochhom

#endif
