// Acceptance suite: one criterion per invocation (or "all"), one PASS/FAIL
// line per criterion, exit 0 only when every executed criterion passes.

#include "hochhom/hochhom.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

using namespace hochhom;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> details;

    void require(bool ok, const std::string& what) {
        details.push_back(std::string(ok ? "ok: " : "FAIL: ") + what);
        pass = pass && ok;
    }
};

std::string dims_str(const std::vector<std::int64_t>& v) {
    std::ostringstream os;
    os << "(";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << ")";
    return os.str();
}

FDAlgebra qxy_surface() { return graded_to_fd(graded_poly({1, 1}, {{2, 0}, {1, 1}, {0, 2}})); }

// 1. Low-degree theorem with both Omega^1 constructions as the oracle.
Outcome criterion1() {
    Outcome out;
    std::vector<FDAlgebra> corpus = {ground_field(), truncated_poly(2), truncated_poly(3),
                                     split_pair()};
    std::vector<std::int64_t> omega_expected = {0, 1, 2, 0};
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        Omega1Pair p = omega1_pair(corpus[i]);
        out.require(p.isomorphic && p.kernel.module.dim == omega_expected[i],
                    corpus[i].name + ": both Omega^1 constructions give dim " +
                        std::to_string(omega_expected[i]));
    }
    SuiteReport rep = suite_low_degree(corpus, {1, 2, 3});
    for (const auto& c : rep.cases)
        out.require(c.pass, c.description + " expected " + c.expected + " computed " + c.computed);
    return out;
}

// 2. Omega^1 agreement on the extended corpus.
Outcome criterion2() {
    Outcome out;
    std::vector<FDAlgebra> corpus = {ground_field(),     truncated_poly(2), truncated_poly(3),
                                     truncated_poly(4),  split_pair(),      qxy_surface()};
    for (const auto& a : corpus) {
        Omega1Pair p = omega1_pair(a);
        out.require(p.leibniz.module.dim == p.kernel.module.dim,
                    a.name + ": dims agree (" + std::to_string(p.leibniz.module.dim) + ")");
        out.require(p.isomorphic, a.name + ": explicit A-linear isomorphism found");
    }
    return out;
}

// 3. Localization theorem on Artinian split_pair, plus the disconnected guard.
Outcome criterion3() {
    Outcome out;
    MultSystem s{basis_vec(2, 1)};
    Localization loc = localize(split_pair(), s);
    out.require(loc.algebra.dim == 1, "A_s has dimension 1 (A_s = Q)");
    struct Case {
        std::string name;
        FinSimpSet k;
    };
    std::vector<Case> spaces;
    spaces.push_back({"sphere(1)", sphere(1, 5)});
    spaces.push_back({"sphere(2)", sphere(2, 5)});
    spaces.push_back({"wedge(sphere(1),sphere(1))", wedge(sphere(1, 5), sphere(1, 5))});
    for (auto& c : spaces) {
        SuiteReport rep = suite_localization(c.k, split_pair(), s, 4);
        out.require(rep.pass(), c.name + ": localized homology = homology of A_s, q <= 3");
    }
    bool guarded = false;
    try {
        suite_localization(boundary_simplex(1, 5), split_pair(), s, 4);
    } catch (const Error& e) {
        guarded = (e.kind() == ErrorKind::HypothesisViolation);
    }
    out.require(guarded, "two points (boundary(1)) rejected by the connectedness guard");
    return out;
}

// 4. Smooth Hodge dimensions per weight.
Outcome criterion4() {
    Outcome out;
    struct Block {
        int m, d, w_max, n_max;
    };
    for (auto [m, d, w_max, n_max] : {Block{1, 1, 3, 3}, Block{1, 2, 3, 5}, Block{2, 1, 2, 3}}) {
        SuiteReport rep = suite_smooth_hodge(m, d, w_max, n_max);
        for (const auto& c : rep.cases)
            out.require(c.pass, c.description + " expected " + c.expected + " computed " + c.computed);
    }
    return out;
}

// 5. Homotopy invariance as stated: (point, simplex(3)) and (sphere(1),
// boundary(2)) over Q[x]/(x^2) up to degree 3, plus raw-vs-normalized
// agreement across the corpus.
Outcome criterion5() {
    Outcome out;
    auto x2 = truncated_poly(2);
    std::vector<HomotopyPair> pairs = {pair_point_simplex(3, 5), pair_circle_boundary(5)};
    SuiteReport rep = suite_homotopy_invariance(pairs, {x2}, 4);
    for (const auto& c : rep.cases) {
        std::string line = c.description;
        if (!c.expected.empty()) line += " expected " + c.expected + " computed " + c.computed;
        if (!c.note.empty()) line += " [" + c.note + "]";
        out.require(c.pass, line);
    }
    // raw vs normalized across the corpus
    struct Case {
        std::string name;
        FinSimpSet k;
        FDAlgebra a;
        int N;
    };
    std::vector<Case> corpus;
    corpus.push_back({"sphere(1)/ground", sphere(1, 4), ground_field(), 3});
    corpus.push_back({"sphere(1)/x2", sphere(1, 4), x2, 3});
    corpus.push_back({"sphere(1)/x3", sphere(1, 4), truncated_poly(3), 3});
    corpus.push_back({"sphere(1)/split", sphere(1, 4), split_pair(), 3});
    corpus.push_back({"sphere(2)/x2", sphere(2, 4), x2, 3});
    corpus.push_back({"sphere(2)/split", sphere(2, 4), split_pair(), 3});
    corpus.push_back({"wedge(S1,S1)/x2", wedge(sphere(1, 4), sphere(1, 4)), x2, 3});
    corpus.push_back({"boundary(2)/x2", boundary_simplex(2, 4), x2, 3});
    corpus.push_back({"point/x3", point(4), truncated_poly(3), 3});
    for (auto& c : corpus) {
        auto raw = homology(c.k, c.a, c.N, false).dims;
        auto norm = homology(c.k, c.a, c.N, true).dims;
        out.require(raw == norm,
                    c.name + ": raw " + dims_str(raw) + " = normalized " + dims_str(norm));
    }
    return out;
}

// 6. Cohomology and degeneration, both cases as stated.
Outcome criterion6() {
    Outcome out;
    auto x2 = truncated_poly(2);
    auto res = residue_module(x2);
    // independent Ext table check (periodic resolution)
    ExtTable t = ext(x2, res, res, 3);
    out.require(t.dims == std::vector<std::int64_t>{1, 1, 1, 1},
                "Ext_{Q[x]/(x^2)}(Q,Q) = (1,1,1,1) from the periodic resolution");
    FreeResolution fr = free_resolution(x2, res, 4);
    out.require(fr.ranks == std::vector<Coord>{1, 1, 1, 1, 1},
                "periodic rank-1 resolution realized");
    DegenerationReport d1 = degeneration_check(sphere(1, 5), x2, res, 3, 3);
    out.require(d1.sane, "spectral inequality lhs <= rhs holds");
    out.require(d1.lhs == d1.rhs, "d=1, A=Q[x]/(x^2), M=Q: dim H^n = sum Ext^p(H_q, Q) for n <= 3"
                                  " — computed lhs " + dims_str(d1.lhs) + ", rhs " + dims_str(d1.rhs));
    auto sp = split_pair();
    auto t2 = cohomology(sphere(2, 6), sp, regular_module(sp), 5);
    out.require(t2.dims == std::vector<std::int64_t>{2, 0, 0, 0, 0},
                "d=2, A=QxQ, M=A: cohomology = (2,0,0,0,0), computed " + dims_str(t2.dims));
    DegenerationReport d2 = degeneration_check(sphere(2, 6), sp, regular_module(sp), 4, 4);
    out.require(d2.degenerate, "d=2 semisimple case degenerates at E_2");
    return out;
}

// 7. Structural properties.
Outcome criterion7() {
    Outcome out;
    // d o d = 0 on every generated complex: construction already throws if the
    // invariant fails, so building the corpus is the check.
    bool built = true;
    std::string which;
    try {
        auto x2 = truncated_poly(2);
        auto x3 = truncated_poly(3);
        which = "chain complexes";
        chain_complex(sphere(1, 4), x3, 3);
        chain_complex(sphere(2, 4), x2, 3);
        chain_complex(wedge(sphere(1, 4), sphere(2, 4)), x2, 3);
        chain_complex(boundary_simplex(2, 4), x2, 3);
        chain_complex(standard_simplex(1, 4), x3, 3);
        which = "normalized complexes";
        normalized_complex(sphere(2, 4), x3, 3);
        normalized_complex(point(4), x3, 3);
        which = "graded complexes";
        graded_chain_complex(sphere(1, 4), graded_poly({1}), 2, 3);
        graded_chain_complex(sphere(2, 5), graded_poly({1, 1}), 2, 4);
        which = "cochain complexes";
        cochain_complex(sphere(1, 4), x2, residue_module(x2), 3);
        cochain_complex(sphere(2, 4), split_pair(), regular_module(split_pair()), 3);
    } catch (const Error& e) {
        built = false;
        which += std::string(": ") + e.what();
    }
    out.require(built, built ? "d o d = 0 holds for every generated complex"
                             : "complex construction failed at " + which);

    for (const auto& k :
         {point(4), standard_simplex(2, 4), standard_simplex(3, 4), boundary_simplex(2, 4),
          boundary_simplex(3, 4), sphere(1, 4), sphere(2, 4), sphere(3, 4),
          wedge(sphere(1, 4), sphere(1, 4)), skeleton(standard_simplex(3, 4), 2)}) {
        auto rep = validate(k);
        out.require(rep.ok, k.name + " validates" + (rep.ok ? "" : ": " + rep.first_failure));
    }

    auto choose = [](long long n, long long k) {
        if (k < 0 || k > n) return 0LL;
        long long r = 1;
        for (long long i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return r;
    };
    bool counts_ok = true;
    for (int d = 1; d <= 3 && counts_ok; ++d) {
        auto k = sphere(d, 6);
        for (int n = 0; n <= 6; ++n)
            if (k.level_sizes[n] != 1 + choose(n, d)) counts_ok = false;
    }
    out.require(counts_ok, "sphere level counts match 1 + C(n,d) for d <= 3, n <= 6");

    bool euler_ok = true;
    std::string euler_what;
    for (int w = 0; w <= 3 && euler_ok; ++w) {
        for (int d = 1; d <= 2 && euler_ok; ++d) {
            auto c = graded_chain_complex(sphere(d, 5), graded_poly({1}), w, 4);
            Int chi_h = 0;
            for (int q = 0; q <= 4; ++q) {
                auto h = c.homology_at(q);
                chi_h += (q % 2 ? -Int(h.dim) : Int(h.dim));
            }
            if (c.euler_characteristic() != chi_h) {
                euler_ok = false;
                euler_what = "sphere(" + std::to_string(d) + ") weight " + std::to_string(w);
            }
        }
    }
    auto cxy = graded_chain_complex(sphere(1, 5), graded_poly({1, 1}, {{2, 0}}), 2, 4);
    Int chi_h = 0;
    for (int q = 0; q <= 4; ++q) {
        auto h = cxy.homology_at(q);
        chi_h += (q % 2 ? -Int(h.dim) : Int(h.dim));
    }
    if (cxy.euler_characteristic() != chi_h) euler_ok = false;
    out.require(euler_ok, "Euler characteristics match on all graded complexes" +
                              (euler_what.empty() ? "" : " (" + euler_what + ")"));
    return out;
}

struct Criterion {
    int number;
    std::string title;
    double budget_seconds;
    std::function<Outcome()> fn;
};

} // namespace

int main(int argc, char** argv) {
    std::vector<Criterion> criteria = {
        {1, "low-degree theorem (H_0 = A, gap, H_d = Omega^1)", 60, criterion1},
        {2, "Omega^1 oracle agreement (kernel vs Leibniz)", 5, criterion2},
        {3, "localization theorem on Artinian algebras", 30, criterion3},
        {4, "smooth Hodge dimensions per weight", 300, criterion4},
        {5, "homotopy invariance and raw/normalized agreement", 60, criterion5},
        {6, "cohomology and E_2 degeneration", 120, criterion6},
        {7, "structural properties", 30, criterion7},
    };

    std::string which = (argc > 1) ? argv[1] : "all";
    bool verbose = (argc > 2 && std::string(argv[2]) == "-v") || which == "all";
    bool all_pass = true;
    for (const auto& c : criteria) {
        if (which != "all" && which != std::to_string(c.number)) continue;
        auto t0 = std::chrono::steady_clock::now();
        Outcome o = c.fn();
        double secs =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        bool in_time = secs < c.budget_seconds;
        bool pass = o.pass && in_time;
        all_pass = all_pass && pass;
        std::ostringstream line;
        line << "criterion " << c.number << ": " << (pass ? "PASS" : "FAIL") << " — " << c.title
             << " [" << static_cast<int>(secs * 1000) << " ms]";
        if (!in_time) line << " (exceeded " << c.budget_seconds << " s budget)";
        std::cout << line.str() << "\n";
        if (verbose || !pass)
            for (const auto& d : o.details)
                if (d.rfind("FAIL", 0) == 0 || verbose) std::cout << "    " << d << "\n";
    }
    return all_pass ? 0 : 1;
}
