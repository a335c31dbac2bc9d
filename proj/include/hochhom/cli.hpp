#ifndef HOCHHOM_CLI_HPP
#define HOCHHOM_CLI_HPP

#include "hochhom/report.hpp"

#include <cctype>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

namespace hochhom {

/// Exit statuses of the batch front door (the machine contract).
enum ExitStatus : int {
    kExitPass = 0,
    kExitSuiteFailure = 1,
    kExitInputError = 2,
    kExitBudgetOverflow = 3,
};

struct JobConfig {
    std::string command; // homology | cohomology | graded-homology | ext | verify
    Json algebra_spec;
    std::string space_expr;
    int N = 0;
    std::optional<int> weight;
    Json module_spec;       // cohomology / ext
    Json coefficients_spec; // ext
    std::string suite;
    std::string corpus = "default";
    bool use_normalized = false;
    std::int64_t budget = kDefaultBudget;
    std::string output_path;
    std::string format = "json";
};

struct ParseResult {
    std::optional<JobConfig> config;
    std::vector<std::string> errors; // each "path: message"
    bool budget_exceeded = false;
};

namespace cli_detail {

inline std::optional<Rat> json_to_rat(const Json& j) {
    if (j.is_number_integer()) return Rat(j.get<long long>());
    if (j.is_string()) {
        try {
            return rat_from_string(j.get<std::string>());
        } catch (...) {
            return std::nullopt;
        }
    }
    return std::nullopt;
}

struct AlgebraSpec {
    std::optional<FDAlgebra> fd;
    std::optional<GradedAlgebra> graded;
};

inline std::optional<int> preset_arg(const std::string& s, const std::string& name) {
    if (s.rfind(name + "(", 0) != 0 || s.back() != ')') return std::nullopt;
    try {
        return std::stoi(s.substr(name.size() + 1, s.size() - name.size() - 2));
    } catch (...) {
        return std::nullopt;
    }
}

inline AlgebraSpec parse_algebra(const Json& j, std::vector<std::string>& errors,
                                 const std::string& path) {
    AlgebraSpec out;
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "ground_field") {
            out.fd = ground_field();
            out.graded = graded_poly({}); // weight components: {1} at w=0
            out.graded->name = "ground_field";
        } else if (s == "split_pair") {
            out.fd = split_pair();
        } else if (auto n = preset_arg(s, "truncated_poly")) {
            if (*n < 1) {
                errors.push_back(path + ": truncated_poly needs n >= 1");
                return out;
            }
            out.fd = truncated_poly(*n);
            out.graded = graded_poly({1}, {{*n}});
            out.graded->name = out.fd->name;
        } else if (auto m = preset_arg(s, "poly")) {
            if (*m < 1) {
                errors.push_back(path + ": poly needs m >= 1");
                return out;
            }
            out.graded = graded_poly(std::vector<int>(*m, 1));
            out.graded->name = "poly(" + std::to_string(*m) + ")";
        } else {
            errors.push_back(path + ": unknown algebra preset '" + s + "'");
        }
        return out;
    }
    if (!j.is_object() || !j.contains("type") || !j["type"].is_string()) {
        errors.push_back(path + ": expected a preset name or an object with a 'type'");
        return out;
    }
    const std::string type = j["type"].get<std::string>();
    if (type == "structure_constants") {
        FDAlgebra a;
        if (!j.contains("dim") || !j["dim"].is_number_integer() || j["dim"].get<int>() < 0) {
            errors.push_back(path + ".dim: required non-negative integer");
            return out;
        }
        a.dim = j["dim"].get<int>();
        a.name = "structure_constants(" + std::to_string(a.dim) + ")";
        auto vec_of = [&](const Json& v, const std::string& p) {
            std::vector<Rat> outv;
            if (!v.is_array() || static_cast<Coord>(v.size()) != a.dim) {
                errors.push_back(p + ": expected an array of length dim");
                return outv;
            }
            for (const auto& e : v) {
                auto q = json_to_rat(e);
                if (!q) {
                    errors.push_back(p + ": entries must be integers or 'p/q' strings");
                    return std::vector<Rat>{};
                }
                outv.push_back(*q);
            }
            return outv;
        };
        if (!j.contains("mult") || !j["mult"].is_array() ||
            static_cast<Coord>(j["mult"].size()) != a.dim) {
            errors.push_back(path + ".mult: expected dim x dim x dim nested arrays");
            return out;
        }
        for (Coord i = 0; i < a.dim; ++i) {
            const auto& row = j["mult"][i];
            if (!row.is_array() || static_cast<Coord>(row.size()) != a.dim) {
                errors.push_back(path + ".mult: expected dim x dim x dim nested arrays");
                return out;
            }
            std::vector<std::vector<Rat>> mrow;
            for (Coord jj = 0; jj < a.dim; ++jj)
                mrow.push_back(vec_of(row[jj], path + ".mult[" + std::to_string(i) + "][" +
                                                     std::to_string(jj) + "]"));
            a.mult.push_back(std::move(mrow));
        }
        if (!j.contains("unit")) {
            errors.push_back(path + ".unit: required");
            return out;
        }
        a.unit = vec_of(j["unit"], path + ".unit");
        if (!errors.empty()) return out;
        try {
            check_algebra(a);
        } catch (const Error& e) {
            errors.push_back(path + ": " + e.what());
            return out;
        }
        out.fd = std::move(a);
        return out;
    }
    if (type == "graded_poly") {
        if (!j.contains("vars") || !j["vars"].is_array() || j["vars"].empty()) {
            errors.push_back(path + ".vars: required non-empty array of positive weights");
            return out;
        }
        std::vector<int> weights;
        for (const auto& w : j["vars"]) {
            if (!w.is_number_integer() || w.get<int>() <= 0) {
                errors.push_back(path + ".vars: weights must be positive integers");
                return out;
            }
            weights.push_back(w.get<int>());
        }
        std::vector<Monomial> rels;
        if (j.contains("monomial_relations")) {
            if (!j["monomial_relations"].is_array()) {
                errors.push_back(path + ".monomial_relations: expected an array of exponent vectors");
                return out;
            }
            for (const auto& r : j["monomial_relations"]) {
                if (!r.is_array() || r.size() != weights.size()) {
                    errors.push_back(path + ".monomial_relations: each relation needs one exponent per variable");
                    return out;
                }
                Monomial m;
                for (const auto& e : r) {
                    if (!e.is_number_integer() || e.get<int>() < 0) {
                        errors.push_back(path + ".monomial_relations: exponents must be non-negative");
                        return out;
                    }
                    m.push_back(e.get<int>());
                }
                rels.push_back(std::move(m));
            }
        }
        out.graded = graded_poly(weights, rels);
        return out;
    }
    errors.push_back(path + ".type: unknown algebra type '" + type + "'");
    return out;
}

inline std::optional<FDModule> parse_module(const Json& j, const FDAlgebra& a,
                                            std::vector<std::string>& errors,
                                            const std::string& path) {
    if (j.is_null()) return regular_module(a);
    if (j.is_string()) {
        const std::string s = j.get<std::string>();
        if (s == "algebra") return regular_module(a);
        if (s == "residue") return residue_module(a);
        errors.push_back(path + ": unknown module preset '" + s + "'");
        return std::nullopt;
    }
    if (j.is_object() && j.contains("dim") && j.contains("action")) {
        FDModule m;
        m.dim = j["dim"].get<int>();
        if (!j["action"].is_array() || static_cast<Coord>(j["action"].size()) != a.dim) {
            errors.push_back(path + ".action: one matrix per algebra basis element");
            return std::nullopt;
        }
        for (const auto& mat : j["action"]) {
            std::vector<std::vector<Rat>> rows;
            for (const auto& r : mat) {
                std::vector<Rat> row;
                for (const auto& e : r) {
                    auto q = json_to_rat(e);
                    if (!q) {
                        errors.push_back(path + ".action: entries must be integers or 'p/q'");
                        return std::nullopt;
                    }
                    row.push_back(*q);
                }
                rows.push_back(std::move(row));
            }
            m.action.push_back(RatMatrix::from_rows(rows));
        }
        try {
            check_module(a, m);
        } catch (const Error& e) {
            errors.push_back(path + ": " + e.what());
            return std::nullopt;
        }
        return m;
    }
    errors.push_back(path + ": expected 'algebra', 'residue' or {dim, action}");
    return std::nullopt;
}

// ---- space expressions: point | simplex(d) | boundary(d) | sphere(d) |
//      wedge(e1,e2) | skeleton(e,n)

struct SpaceParser {
    std::string s;
    std::size_t pos = 0;
    int trunc;

    void skip_ws() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool eat(char c) {
        skip_ws();
        if (pos < s.size() && s[pos] == c) {
            ++pos;
            return true;
        }
        return false;
    }
    std::string ident() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_'))
            ++pos;
        return s.substr(start, pos - start);
    }
    int integer() {
        skip_ws();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) throw Error(ErrorKind::Parse, "space expression: expected an integer");
        return std::stoi(s.substr(start, pos - start));
    }

    FinSimpSet parse() {
        FinSimpSet k = expr();
        skip_ws();
        if (pos != s.size())
            throw Error(ErrorKind::Parse, "space expression: trailing input at '" + s.substr(pos) + "'");
        return k;
    }

    FinSimpSet expr() {
        std::string name = ident();
        if (name == "point") return point(trunc);
        if (name == "simplex" || name == "boundary" || name == "sphere") {
            if (!eat('(')) throw Error(ErrorKind::Parse, "space expression: expected '('");
            int d = integer();
            if (!eat(')')) throw Error(ErrorKind::Parse, "space expression: expected ')'");
            if (name == "simplex") return standard_simplex(d, trunc);
            if (name == "boundary") return boundary_simplex(d, trunc);
            return sphere(d, trunc);
        }
        if (name == "wedge") {
            if (!eat('(')) throw Error(ErrorKind::Parse, "space expression: expected '('");
            FinSimpSet a = expr();
            if (!eat(',')) throw Error(ErrorKind::Parse, "space expression: expected ','");
            FinSimpSet b = expr();
            if (!eat(')')) throw Error(ErrorKind::Parse, "space expression: expected ')'");
            return wedge(a, b);
        }
        if (name == "skeleton") {
            if (!eat('(')) throw Error(ErrorKind::Parse, "space expression: expected '('");
            FinSimpSet a = expr();
            if (!eat(',')) throw Error(ErrorKind::Parse, "space expression: expected ','");
            int n = integer();
            if (!eat(')')) throw Error(ErrorKind::Parse, "space expression: expected ')'");
            return skeleton(a, n);
        }
        throw Error(ErrorKind::Parse, "space expression: unknown constructor '" + name + "'");
    }
};

inline FinSimpSet parse_space(const std::string& expr, int trunc) {
    SpaceParser p{expr, 0, trunc};
    return p.parse();
}

} // namespace cli_detail

inline ParseResult parse_config(const Json& doc) {
    ParseResult out;
    JobConfig cfg;
    auto& errors = out.errors;
    if (!doc.is_object()) {
        errors.push_back(": config must be a JSON object");
        return out;
    }
    if (!doc.contains("command") || !doc["command"].is_string()) {
        errors.push_back("command: required string");
        return out;
    }
    cfg.command = doc["command"].get<std::string>();
    const bool needs_space =
        cfg.command == "homology" || cfg.command == "cohomology" || cfg.command == "graded-homology";
    const bool needs_algebra = needs_space || cfg.command == "ext";
    if (cfg.command != "homology" && cfg.command != "cohomology" &&
        cfg.command != "graded-homology" && cfg.command != "ext" && cfg.command != "verify") {
        errors.push_back("command: unknown command '" + cfg.command + "'");
        return out;
    }
    if (doc.contains("budget")) {
        if (!doc["budget"].is_number_integer() || doc["budget"].get<std::int64_t>() <= 0)
            errors.push_back("budget: must be a positive integer");
        else
            cfg.budget = doc["budget"].get<std::int64_t>();
    } else if (const char* env = std::getenv("HOCHHOM_BUDGET")) {
        try {
            cfg.budget = std::stoll(env);
        } catch (...) {
            errors.push_back("budget: HOCHHOM_BUDGET is not an integer");
        }
        if (cfg.budget <= 0) errors.push_back("budget: HOCHHOM_BUDGET must be positive");
    }
    if (doc.contains("output")) {
        if (!doc["output"].is_string())
            errors.push_back("output: must be a string path");
        else
            cfg.output_path = doc["output"].get<std::string>();
    }
    if (doc.contains("format")) {
        cfg.format = doc["format"].is_string() ? doc["format"].get<std::string>() : "";
        if (cfg.format != "json" && cfg.format != "text")
            errors.push_back("format: must be 'json' or 'text'");
    }
    if (doc.contains("normalized")) {
        if (!doc["normalized"].is_boolean())
            errors.push_back("normalized: must be a boolean");
        else
            cfg.use_normalized = doc["normalized"].get<bool>();
    }

    if (needs_algebra) {
        if (!doc.contains("algebra"))
            errors.push_back("algebra: required");
        else
            cfg.algebra_spec = doc["algebra"];
    }
    if (needs_space) {
        if (!doc.contains("space") || !doc["space"].is_string())
            errors.push_back("space: required string expression");
        else
            cfg.space_expr = doc["space"].get<std::string>();
        if (!doc.contains("N") || !doc["N"].is_number_integer() || doc["N"].get<int>() < 1)
            errors.push_back("N: required integer >= 1");
        else
            cfg.N = doc["N"].get<int>();
    }
    if (cfg.command == "graded-homology") {
        if (!doc.contains("weight") || !doc["weight"].is_number_integer() ||
            doc["weight"].get<int>() < 0)
            errors.push_back("weight: required integer >= 0");
        else
            cfg.weight = doc["weight"].get<int>();
    }
    if (cfg.command == "cohomology" || cfg.command == "ext") {
        if (doc.contains("module")) cfg.module_spec = doc["module"];
    }
    if (cfg.command == "ext") {
        if (doc.contains("coefficients")) cfg.coefficients_spec = doc["coefficients"];
        if (!doc.contains("N") || !doc["N"].is_number_integer() || doc["N"].get<int>() < 0)
            errors.push_back("N: required integer >= 0 (Ext degree bound)");
        else
            cfg.N = doc["N"].get<int>();
    }
    if (cfg.command == "verify") {
        if (!doc.contains("suite") || !doc["suite"].is_string())
            errors.push_back("suite: required string");
        else
            cfg.suite = doc["suite"].get<std::string>();
        static const std::vector<std::string> known = {
            "low-degree", "localization", "smooth-hodge", "homotopy-invariance", "hodge-cohomology"};
        if (!cfg.suite.empty() &&
            std::find(known.begin(), known.end(), cfg.suite) == known.end())
            errors.push_back("suite: unknown suite '" + cfg.suite + "'");
        if (doc.contains("corpus")) {
            cfg.corpus = doc["corpus"].is_string() ? doc["corpus"].get<std::string>() : "";
            if (cfg.corpus != "default") errors.push_back("corpus: unknown corpus preset");
        }
        if (doc.contains("space") && doc["space"].is_string())
            cfg.space_expr = doc["space"].get<std::string>();
        if (doc.contains("N") && doc["N"].is_number_integer()) cfg.N = doc["N"].get<int>();
    }
    if (!errors.empty()) return out;

    // static budget pre-check where the sizes are known from the config alone
    if (needs_space && doc.contains("algebra")) {
        std::vector<std::string> scratch;
        auto alg = cli_detail::parse_algebra(cfg.algebra_spec, scratch, "algebra");
        if (scratch.empty() && alg.fd && cfg.command != "graded-homology") {
            try {
                FinSimpSet k = cli_detail::parse_space(cfg.space_expr, cfg.N + 1);
                detail::check_budget(k, *alg.fd, cfg.N, cfg.budget);
            } catch (const Error& e) {
                if (e.kind() == ErrorKind::BudgetExceeded) {
                    out.budget_exceeded = true;
                    errors.push_back("budget: " + std::string(e.what()));
                    return out;
                }
                // other construction errors surface at run time
            }
        }
    }
    out.config = std::move(cfg);
    return out;
}

struct RunResult {
    int exit_code = kExitPass;
    Json report;
    std::string text;
};

namespace cli_detail {

inline int exit_for(const Error& e) {
    switch (e.kind()) {
        case ErrorKind::BudgetExceeded: return kExitBudgetOverflow;
        default: return kExitInputError;
    }
}

inline SuiteReport merge(std::vector<SuiteReport> reports) {
    SuiteReport merged = reports.front();
    for (std::size_t i = 1; i < reports.size(); ++i) {
        for (auto& c : reports[i].cases) merged.cases.push_back(std::move(c));
        merged.budget_overflow = merged.budget_overflow || reports[i].budget_overflow;
    }
    return merged;
}

inline std::vector<FDAlgebra> default_fd_corpus() {
    return {ground_field(), truncated_poly(2), truncated_poly(3), split_pair()};
}

inline SuiteReport run_suite(const JobConfig& cfg) {
    const std::int64_t B = cfg.budget;
    if (cfg.suite == "low-degree") return suite_low_degree(default_fd_corpus(), {1, 2, 3}, B);
    if (cfg.suite == "localization") {
        const int N = cfg.N > 0 ? cfg.N : 4;
        MultSystem s{basis_vec(2, 1)}; // x in Q[x]/(x^2-x)
        if (!cfg.space_expr.empty()) {
            FinSimpSet k = parse_space(cfg.space_expr, N + 1);
            return suite_localization(k, split_pair(), s, N, B);
        }
        std::vector<SuiteReport> reports;
        reports.push_back(suite_localization(sphere(1, N + 1), split_pair(), s, N, B));
        reports.push_back(suite_localization(sphere(2, N + 1), split_pair(), s, N, B));
        reports.push_back(
            suite_localization(wedge(sphere(1, N + 1), sphere(1, N + 1)), split_pair(), s, N, B));
        return merge(std::move(reports));
    }
    if (cfg.suite == "smooth-hodge") {
        std::vector<SuiteReport> reports;
        reports.push_back(suite_smooth_hodge(1, 1, 3, 3, B));
        reports.push_back(suite_smooth_hodge(1, 2, 3, 5, B));
        reports.push_back(suite_smooth_hodge(2, 1, 2, 3, B));
        return merge(std::move(reports));
    }
    if (cfg.suite == "homotopy-invariance") {
        const int N = cfg.N > 0 ? cfg.N : 4;
        std::vector<HomotopyPair> pairs;
        pairs.push_back(pair_circle_boundary(N + 1));
        pairs.push_back(pair_wedge_commute(1, N + 1));
        pairs.push_back(pair_point_simplex(3, N + 1));
        return suite_homotopy_invariance(pairs, {truncated_poly(2)}, N, B);
    }
    if (cfg.suite == "hodge-cohomology") {
        std::vector<SuiteReport> reports;
        auto dual = truncated_poly(2);
        reports.push_back(suite_hodge_cohomology(1, dual, residue_module(dual), 3, B));
        auto sp = split_pair();
        reports.push_back(suite_hodge_cohomology(2, sp, regular_module(sp), 4, B));
        return merge(std::move(reports));
    }
    throw Error(ErrorKind::InvalidArgument, "unknown suite");
}

} // namespace cli_detail

/// Execute a parsed job. The report JSON (when produced) echoes the inputs and
/// is byte-stable across runs except for the timing field.
inline RunResult run(const JobConfig& cfg) {
    RunResult out;
    Json inputs;
    inputs["command"] = cfg.command;
    try {
        if (cfg.command == "verify") {
            SuiteReport rep = cli_detail::run_suite(cfg);
            inputs["suite"] = cfg.suite;
            inputs["corpus"] = cfg.corpus;
            out.report["inputs"] = inputs;
            out.report["result"] = to_json(rep);
            out.text = suite_text(rep);
            out.exit_code = rep.budget_overflow ? kExitBudgetOverflow
                            : rep.pass()        ? kExitPass
                                                : kExitSuiteFailure;
            return out;
        }

        std::vector<std::string> errors;
        auto alg = cli_detail::parse_algebra(cfg.algebra_spec, errors, "algebra");
        if (!errors.empty()) throw Error(ErrorKind::Parse, errors.front());

        if (cfg.command == "ext") {
            if (!alg.fd) {
                if (!alg.graded) throw Error(ErrorKind::Parse, "algebra: unusable spec");
                alg.fd = graded_to_fd(*alg.graded);
            }
            auto m = cli_detail::parse_module(cfg.module_spec, *alg.fd, errors, "module");
            auto n = cli_detail::parse_module(cfg.coefficients_spec, *alg.fd, errors, "coefficients");
            if (!errors.empty()) throw Error(ErrorKind::Parse, errors.front());
            ExtTable t = ext(*alg.fd, *m, *n, cfg.N);
            inputs["algebra"] = cfg.algebra_spec;
            inputs["module"] = cfg.module_spec;
            inputs["coefficients"] = cfg.coefficients_spec;
            inputs["p_max"] = cfg.N;
            out.report["inputs"] = inputs;
            out.report["result"] = to_json(t);
            out.text = "Ext dims: " + to_json(t)["dims"].dump() + "\n";
            return out;
        }

        inputs["algebra"] = cfg.algebra_spec;
        inputs["space"] = cfg.space_expr;
        inputs["N"] = cfg.N;
        inputs["budget"] = cfg.budget;
        FinSimpSet k = cli_detail::parse_space(cfg.space_expr, cfg.N + 1);

        HomologyTable t;
        if (cfg.command == "graded-homology") {
            if (!alg.graded)
                throw Error(ErrorKind::Parse, "algebra: graded-homology needs a graded algebra");
            inputs["weight"] = *cfg.weight;
            t = graded_homology(k, *alg.graded, *cfg.weight, cfg.N, cfg.budget);
        } else if (cfg.command == "homology") {
            if (!alg.fd) {
                if (!alg.graded) throw Error(ErrorKind::Parse, "algebra: unusable spec");
                alg.fd = graded_to_fd(*alg.graded);
            }
            inputs["normalized"] = cfg.use_normalized;
            t = homology(k, *alg.fd, cfg.N, cfg.use_normalized, cfg.budget);
        } else { // cohomology
            if (!alg.fd) {
                if (!alg.graded) throw Error(ErrorKind::Parse, "algebra: unusable spec");
                alg.fd = graded_to_fd(*alg.graded);
            }
            std::vector<std::string> merrors;
            auto m = cli_detail::parse_module(cfg.module_spec, *alg.fd, merrors, "module");
            if (!merrors.empty()) throw Error(ErrorKind::Parse, merrors.front());
            t = cohomology(k, *alg.fd, *m, cfg.N, cfg.budget);
        }
        out.report["inputs"] = inputs;
        out.report["result"] = to_json(t);
        out.text = cfg.command + " dims " + detail::dims_str(t.dims) + " (certified through degree " +
                   std::to_string(t.certified_through) + ")\n";
        return out;
    } catch (const Error& e) {
        out.exit_code = cli_detail::exit_for(e);
        out.text = std::string(error_kind_name(e.kind())) + ": " + e.what() + "\n";
        return out;
    }
}

} // namespace hochhom

#endif
