#ifndef HOCHHOM_SIMPLICIAL_HPP
#define HOCHHOM_SIMPLICIAL_HPP

#include "hochhom/errors.hpp"
#include "hochhom/sparse.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <vector>

namespace hochhom {

/// Finite pointed simplicial set, truncated at a level bound. Simplices are
/// indices into each level; faces[n][i] and degens[n][i] are total maps stored
/// as index tables. Index tables, basepoint and labels are fixed at build time.
struct FinSimpSet {
    std::string name;
    std::vector<Coord> level_sizes;                        // 0..trunc_level
    std::vector<std::vector<std::vector<Coord>>> faces;    // faces[n][i], n >= 1, 0 <= i <= n
    std::vector<std::vector<std::vector<Coord>>> degens;   // degens[n][i], n < trunc, 0 <= i <= n
    Coord basepoint = 0;                                   // vertex index
    std::vector<std::vector<std::string>> labels;          // canonical simplex ids

    std::int64_t trunc_level() const { return static_cast<std::int64_t>(level_sizes.size()) - 1; }

    Coord face(std::int64_t n, std::int64_t i, Coord x) const { return faces[n][i][x]; }
    Coord degeneracy(std::int64_t n, std::int64_t i, Coord x) const { return degens[n][i][x]; }

    /// The iterated degeneracy of the basepoint at a level.
    Coord basepoint_at(std::int64_t n) const {
        Coord x = basepoint;
        for (std::int64_t m = 0; m < n; ++m) x = degens[m][0][x];
        return x;
    }
};

struct ValidationReport {
    bool ok = true;
    std::string first_failure;
};

/// Per-level flags: true when the simplex is an image of some degeneracy map.
inline std::vector<std::vector<bool>> degenerate_table(const FinSimpSet& k) {
    std::vector<std::vector<bool>> deg(k.level_sizes.size());
    for (std::size_t n = 0; n < k.level_sizes.size(); ++n)
        deg[n].assign(k.level_sizes[n], false);
    for (std::size_t n = 0; n + 1 < k.level_sizes.size(); ++n)
        for (const auto& s : k.degens[n])
            for (Coord y : s) deg[n + 1][y] = true;
    return deg;
}

/// Nondegenerate simplex counts per level.
inline std::vector<Coord> nondegenerate_counts(const FinSimpSet& k) {
    auto deg = degenerate_table(k);
    std::vector<Coord> out;
    for (const auto& lev : deg)
        out.push_back(static_cast<Coord>(std::count(lev.begin(), lev.end(), false)));
    return out;
}

/// Exhaustive check of the simplicial identities and pointedness within the
/// truncation. Stops at the first violated identity.
inline ValidationReport validate(const FinSimpSet& k) {
    auto fail = [](std::string msg) { return ValidationReport{false, std::move(msg)}; };
    const std::int64_t N = k.trunc_level();
    if (N < 0) return fail("empty simplicial set");
    if (k.basepoint < 0 || k.basepoint >= k.level_sizes[0]) return fail("basepoint out of range");
    if (static_cast<std::int64_t>(k.faces.size()) != N + 1) return fail("face table has wrong depth");
    if (static_cast<std::int64_t>(k.degens.size()) < N) return fail("degeneracy table has wrong depth");
    for (std::int64_t n = 1; n <= N; ++n) {
        if (static_cast<std::int64_t>(k.faces[n].size()) != n + 1) return fail("face count wrong at level " + std::to_string(n));
        for (std::int64_t i = 0; i <= n; ++i) {
            if (static_cast<Coord>(k.faces[n][i].size()) != k.level_sizes[n]) return fail("face map not total");
            for (Coord y : k.faces[n][i])
                if (y < 0 || y >= k.level_sizes[n - 1]) return fail("face map out of range");
        }
    }
    for (std::int64_t n = 0; n < N; ++n) {
        if (static_cast<std::int64_t>(k.degens[n].size()) != n + 1) return fail("degeneracy count wrong at level " + std::to_string(n));
        for (std::int64_t i = 0; i <= n; ++i) {
            if (static_cast<Coord>(k.degens[n][i].size()) != k.level_sizes[n]) return fail("degeneracy map not total");
            for (Coord y : k.degens[n][i])
                if (y < 0 || y >= k.level_sizes[n + 1]) return fail("degeneracy map out of range");
        }
    }
    auto id = [&](std::int64_t n, Coord x) { return k.labels.empty() ? std::to_string(x) : k.labels[n][x]; };
    // d_i d_j = d_{j-1} d_i  (i < j)
    for (std::int64_t n = 2; n <= N; ++n)
        for (std::int64_t j = 1; j <= n; ++j)
            for (std::int64_t i = 0; i < j; ++i)
                for (Coord x = 0; x < k.level_sizes[n]; ++x)
                    if (k.face(n - 1, i, k.face(n, j, x)) != k.face(n - 1, j - 1, k.face(n, i, x)))
                        return fail("d_" + std::to_string(i) + " d_" + std::to_string(j) +
                                    " != d_" + std::to_string(j - 1) + " d_" + std::to_string(i) +
                                    " at level " + std::to_string(n) + ", simplex " + id(n, x));
    // s_i s_j = s_{j+1} s_i  (i <= j)
    for (std::int64_t n = 0; n + 2 <= N; ++n)
        for (std::int64_t j = 0; j <= n; ++j)
            for (std::int64_t i = 0; i <= j; ++i)
                for (Coord x = 0; x < k.level_sizes[n]; ++x)
                    if (k.degeneracy(n + 1, i, k.degeneracy(n, j, x)) !=
                        k.degeneracy(n + 1, j + 1, k.degeneracy(n, i, x)))
                        return fail("s_i s_j identity fails at level " + std::to_string(n) +
                                    ", simplex " + id(n, x));
    // d_i s_j interchange
    for (std::int64_t n = 0; n + 1 <= N; ++n)
        for (std::int64_t j = 0; j <= n; ++j)
            for (std::int64_t i = 0; i <= n + 1; ++i)
                for (Coord x = 0; x < k.level_sizes[n]; ++x) {
                    Coord lhs = k.face(n + 1, i, k.degeneracy(n, j, x));
                    Coord rhs;
                    if (i < j)
                        rhs = (n >= 1) ? k.degeneracy(n - 1, j - 1, k.face(n, i, x)) : lhs;
                    else if (i == j || i == j + 1)
                        rhs = x;
                    else
                        rhs = (n >= 1) ? k.degeneracy(n - 1, j, k.face(n, i - 1, x)) : lhs;
                    if (lhs != rhs)
                        return fail("d_" + std::to_string(i) + " s_" + std::to_string(j) +
                                    " identity fails at level " + std::to_string(n) + ", simplex " +
                                    id(n, x));
                }
    return {};
}

namespace detail {

inline std::string seq_label(const std::vector<int>& seq) {
    std::string s;
    for (std::size_t i = 0; i < seq.size(); ++i) {
        if (i) s += '.';
        s += std::to_string(seq[i]);
    }
    return s;
}

/// Monotone sequences of length len over {0..d}, lexicographic.
inline std::vector<std::vector<int>> monotone_sequences(int len, int d) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    auto rec = [&](auto&& self, int pos, int minv) -> void {
        if (pos == len) {
            out.push_back(cur);
            return;
        }
        for (int v = minv; v <= d; ++v) {
            cur.push_back(v);
            self(self, pos + 1, v);
            cur.pop_back();
        }
    };
    rec(rec, 0, 0);
    return out;
}

inline bool is_surjective(const std::vector<int>& seq, int d) {
    std::vector<bool> hit(d + 1, false);
    for (int v : seq) hit[v] = true;
    return std::all_of(hit.begin(), hit.end(), [](bool b) { return b; });
}

struct SeqTables {
    std::vector<std::vector<std::vector<int>>> levels;
    std::vector<Coord> index_of(const std::vector<std::vector<int>>& lev) const;
};

/// Build a simplicial set from per-level monotone-sequence lists (faces drop an
/// entry, degeneracies repeat one), with an optional quotient step handled by
/// the callers.
inline FinSimpSet from_sequences(std::string name, int N,
                                 const std::vector<std::vector<std::vector<int>>>& levels,
                                 const std::vector<int>& basepoint_seq) {
    FinSimpSet k;
    k.name = std::move(name);
    k.level_sizes.resize(N + 1);
    k.labels.resize(N + 1);
    std::vector<std::vector<std::vector<int>>> sorted = levels;
    for (int n = 0; n <= N; ++n) {
        k.level_sizes[n] = static_cast<Coord>(sorted[n].size());
        for (const auto& s : sorted[n]) k.labels[n].push_back(seq_label(s));
    }
    auto find = [&](int n, const std::vector<int>& s) -> Coord {
        auto it = std::lower_bound(sorted[n].begin(), sorted[n].end(), s);
        if (it == sorted[n].end() || *it != s)
            throw Error(ErrorKind::InvalidArgument, "simplex closure violated in constructor");
        return static_cast<Coord>(it - sorted[n].begin());
    };
    k.faces.resize(N + 1);
    for (int n = 1; n <= N; ++n) {
        k.faces[n].resize(n + 1);
        for (int i = 0; i <= n; ++i) {
            auto& f = k.faces[n][i];
            f.reserve(sorted[n].size());
            for (const auto& s : sorted[n]) {
                std::vector<int> t = s;
                t.erase(t.begin() + i);
                f.push_back(find(n - 1, t));
            }
        }
    }
    k.degens.resize(N);
    for (int n = 0; n < N; ++n) {
        k.degens[n].resize(n + 1);
        for (int i = 0; i <= n; ++i) {
            auto& g = k.degens[n][i];
            g.reserve(sorted[n].size());
            for (const auto& s : sorted[n]) {
                std::vector<int> t = s;
                t.insert(t.begin() + i, s[i]);
                g.push_back(find(n + 1, t));
            }
        }
    }
    k.basepoint = find(0, basepoint_seq);
    return k;
}

} // namespace detail

/// The standard d-simplex: level n is all monotone maps [n] -> [d].
inline FinSimpSet standard_simplex(int d, int N) {
    if (d < 0 || N < 0) throw Error(ErrorKind::InvalidArgument, "standard_simplex: negative argument");
    std::vector<std::vector<std::vector<int>>> levels(N + 1);
    for (int n = 0; n <= N; ++n) levels[n] = detail::monotone_sequences(n + 1, d);
    return detail::from_sequences("simplex(" + std::to_string(d) + ")", N, levels, {0});
}

/// The boundary of the d-simplex: the non-surjective monotone maps.
inline FinSimpSet boundary_simplex(int d, int N) {
    if (d < 1) throw Error(ErrorKind::InvalidArgument, "boundary_simplex: d must be >= 1");
    std::vector<std::vector<std::vector<int>>> levels(N + 1);
    for (int n = 0; n <= N; ++n)
        for (const auto& s : detail::monotone_sequences(n + 1, d))
            if (!detail::is_surjective(s, d)) levels[n].push_back(s);
    return detail::from_sequences("boundary(" + std::to_string(d) + ")", N, levels, {0});
}

/// The point.
inline FinSimpSet point(int N) {
    FinSimpSet k;
    k.name = "point";
    k.level_sizes.assign(N + 1, 1);
    k.labels.assign(N + 1, {"*"});
    k.faces.resize(N + 1);
    for (int n = 1; n <= N; ++n) k.faces[n].assign(n + 1, {0});
    k.degens.resize(N);
    for (int n = 0; n < N; ++n) k.degens[n].assign(n + 1, {0});
    k.basepoint = 0;
    return k;
}

/// The d-sphere as the quotient Delta^d / boundary: level n is the basepoint
/// plus the monotone surjections [n] ->> [d]; faces drop to the basepoint when
/// surjectivity is lost.
inline FinSimpSet sphere(int d, int N) {
    if (d < 1) throw Error(ErrorKind::InvalidArgument, "sphere: d must be >= 1");
    FinSimpSet k;
    k.name = "sphere(" + std::to_string(d) + ")";
    std::vector<std::vector<std::vector<int>>> surj(N + 1);
    for (int n = 0; n <= N; ++n)
        for (const auto& s : detail::monotone_sequences(n + 1, d))
            if (detail::is_surjective(s, d)) surj[n].push_back(s);
    k.level_sizes.resize(N + 1);
    k.labels.resize(N + 1);
    for (int n = 0; n <= N; ++n) {
        k.level_sizes[n] = 1 + static_cast<Coord>(surj[n].size());
        k.labels[n].push_back("*");
        for (const auto& s : surj[n]) k.labels[n].push_back(detail::seq_label(s));
    }
    auto find = [&](int n, const std::vector<int>& s) -> Coord {
        if (!detail::is_surjective(s, d)) return 0;
        auto it = std::lower_bound(surj[n].begin(), surj[n].end(), s);
        return 1 + static_cast<Coord>(it - surj[n].begin());
    };
    k.faces.resize(N + 1);
    for (int n = 1; n <= N; ++n) {
        k.faces[n].resize(n + 1);
        for (int i = 0; i <= n; ++i) {
            auto& f = k.faces[n][i];
            f.push_back(0); // basepoint
            for (const auto& s : surj[n]) {
                std::vector<int> t = s;
                t.erase(t.begin() + i);
                f.push_back(find(n - 1, t));
            }
        }
    }
    k.degens.resize(N);
    for (int n = 0; n < N; ++n) {
        k.degens[n].resize(n + 1);
        for (int i = 0; i <= n; ++i) {
            auto& g = k.degens[n][i];
            g.push_back(0);
            for (const auto& s : surj[n]) {
                std::vector<int> t = s;
                t.insert(t.begin() + i, s[i]);
                g.push_back(find(n + 1, t)); // degeneracies preserve surjectivity
            }
        }
    }
    k.basepoint = 0;
    return k;
}

/// Wedge: disjoint union with the basepoint degeneracy chains identified
/// levelwise. Index 0 at each level is the shared chain.
inline FinSimpSet wedge(const FinSimpSet& a, const FinSimpSet& b) {
    if (a.trunc_level() != b.trunc_level())
        throw Error(ErrorKind::DimensionMismatch, "wedge: truncation levels differ");
    const std::int64_t N = a.trunc_level();
    FinSimpSet k;
    k.name = "wedge(" + a.name + "," + b.name + ")";
    std::vector<Coord> abase(N + 1), bbase(N + 1);
    for (std::int64_t n = 0; n <= N; ++n) {
        abase[n] = a.basepoint_at(n);
        bbase[n] = b.basepoint_at(n);
    }
    // relabeling: shared chain first, then a's and b's non-chain simplices
    std::vector<std::vector<Coord>> amap(N + 1), bmap(N + 1);
    k.level_sizes.resize(N + 1);
    k.labels.resize(N + 1);
    for (std::int64_t n = 0; n <= N; ++n) {
        amap[n].assign(a.level_sizes[n], -1);
        bmap[n].assign(b.level_sizes[n], -1);
        Coord next = 0;
        k.labels[n].push_back("*");
        amap[n][abase[n]] = bmap[n][bbase[n]] = next++;
        for (Coord x = 0; x < a.level_sizes[n]; ++x)
            if (x != abase[n]) {
                amap[n][x] = next++;
                k.labels[n].push_back("l." + (a.labels.empty() ? std::to_string(x) : a.labels[n][x]));
            }
        for (Coord x = 0; x < b.level_sizes[n]; ++x)
            if (x != bbase[n]) {
                bmap[n][x] = next++;
                k.labels[n].push_back("r." + (b.labels.empty() ? std::to_string(x) : b.labels[n][x]));
            }
        k.level_sizes[n] = next;
    }
    k.faces.resize(N + 1);
    for (std::int64_t n = 1; n <= N; ++n) {
        k.faces[n].resize(n + 1);
        for (std::int64_t i = 0; i <= n; ++i) {
            auto& f = k.faces[n][i];
            f.assign(k.level_sizes[n], 0);
            for (Coord x = 0; x < a.level_sizes[n]; ++x) f[amap[n][x]] = amap[n - 1][a.face(n, i, x)];
            for (Coord x = 0; x < b.level_sizes[n]; ++x) f[bmap[n][x]] = bmap[n - 1][b.face(n, i, x)];
        }
    }
    k.degens.resize(N);
    for (std::int64_t n = 0; n < N; ++n) {
        k.degens[n].resize(n + 1);
        for (std::int64_t i = 0; i <= n; ++i) {
            auto& g = k.degens[n][i];
            g.assign(k.level_sizes[n], 0);
            for (Coord x = 0; x < a.level_sizes[n]; ++x) g[amap[n][x]] = amap[n + 1][a.degeneracy(n, i, x)];
            for (Coord x = 0; x < b.level_sizes[n]; ++x) g[bmap[n][x]] = bmap[n + 1][b.degeneracy(n, i, x)];
        }
    }
    k.basepoint = 0;
    return k;
}

namespace detail {

/// Level of the nondegenerate core of each simplex (Eilenberg-Zilber: every
/// simplex is an iterated degeneracy of a unique nondegenerate one).
inline std::vector<std::vector<std::int64_t>> core_levels(const FinSimpSet& k) {
    const std::int64_t N = k.trunc_level();
    std::vector<std::vector<std::int64_t>> core(N + 1);
    core[0].assign(k.level_sizes[0], 0);
    for (std::int64_t n = 1; n <= N; ++n) {
        core[n].assign(k.level_sizes[n], -1);
        for (std::int64_t i = 0; i < n; ++i)
            for (Coord y = 0; y < k.level_sizes[n - 1]; ++y) {
                Coord x = k.degens[n - 1][i][y];
                if (core[n][x] < 0) core[n][x] = core[n - 1][y];
            }
        for (Coord x = 0; x < k.level_sizes[n]; ++x)
            if (core[n][x] < 0) core[n][x] = n; // nondegenerate
    }
    return core;
}

} // namespace detail

/// The simplicial subset generated by the nondegenerate simplices of dimension
/// at most n.
inline FinSimpSet skeleton(const FinSimpSet& k, std::int64_t n) {
    const std::int64_t N = k.trunc_level();
    if (n > N) throw Error(ErrorKind::InvalidArgument, "skeleton: bound exceeds truncation");
    auto core = detail::core_levels(k);
    FinSimpSet out;
    out.name = "skeleton(" + k.name + "," + std::to_string(n) + ")";
    std::vector<std::vector<Coord>> map(N + 1);
    out.level_sizes.resize(N + 1);
    out.labels.resize(N + 1);
    for (std::int64_t m = 0; m <= N; ++m) {
        map[m].assign(k.level_sizes[m], -1);
        Coord next = 0;
        for (Coord x = 0; x < k.level_sizes[m]; ++x)
            if (core[m][x] <= n) {
                map[m][x] = next++;
                out.labels[m].push_back(k.labels.empty() ? std::to_string(x) : k.labels[m][x]);
            }
        out.level_sizes[m] = next;
    }
    out.faces.resize(N + 1);
    for (std::int64_t m = 1; m <= N; ++m) {
        out.faces[m].resize(m + 1);
        for (std::int64_t i = 0; i <= m; ++i) {
            auto& f = out.faces[m][i];
            f.assign(out.level_sizes[m], -1);
            for (Coord x = 0; x < k.level_sizes[m]; ++x)
                if (map[m][x] >= 0) {
                    Coord y = map[m - 1][k.face(m, i, x)];
                    if (y < 0)
                        throw Error(ErrorKind::InvalidArgument, "skeleton: face left the subset");
                    f[map[m][x]] = y;
                }
        }
    }
    out.degens.resize(N);
    for (std::int64_t m = 0; m < N; ++m) {
        out.degens[m].resize(m + 1);
        for (std::int64_t i = 0; i <= m; ++i) {
            auto& g = out.degens[m][i];
            g.assign(out.level_sizes[m], -1);
            for (Coord x = 0; x < k.level_sizes[m]; ++x)
                if (map[m][x] >= 0) g[map[m][x]] = map[m + 1][k.degeneracy(m, i, x)];
        }
    }
    out.basepoint = map[0][k.basepoint];
    if (out.basepoint < 0) throw Error(ErrorKind::InvalidArgument, "skeleton: basepoint not in subset");
    return out;
}

/// Connectivity of the vertex graph along nondegenerate 1-simplices.
inline bool is_connected(const FinSimpSet& k) {
    const Coord nv = k.level_sizes[0];
    if (nv <= 1) return nv == 1;
    std::vector<Coord> parent(nv);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](Coord x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    if (k.trunc_level() >= 1) {
        auto deg = degenerate_table(k);
        for (Coord e = 0; e < k.level_sizes[1]; ++e) {
            if (deg[1][e]) continue;
            Coord u = find(k.face(1, 0, e)), v = find(k.face(1, 1, e));
            if (u != v) parent[u] = v;
        }
    }
    Coord root = find(0);
    for (Coord v = 1; v < nv; ++v)
        if (find(v) != root) return false;
    return true;
}

} // namespace hochhom

#endif
