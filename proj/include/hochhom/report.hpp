#ifndef HOCHHOM_REPORT_HPP
#define HOCHHOM_REPORT_HPP

#include "hochhom/homalg.hpp"
#include "hochhom/verify.hpp"

#include <json.hpp>

#include <string>

namespace hochhom {

using Json = nlohmann::json;

inline Json to_json(const HomologyTable& t) {
    Json j;
    j["space"] = t.space;
    j["algebra"] = t.algebra;
    j["levels_used"] = t.levels_used;
    j["certified_through"] = t.certified_through;
    j["normalized"] = t.normalized;
    if (t.weight) j["weight"] = *t.weight;
    j["dims"] = t.dims;
    j["uncertified_top_cycles"] = t.uncertified_top_cycles;
    return j;
}

inline Json to_json(const ExtTable& t) {
    Json j;
    j["dims"] = t.dims;
    return j;
}

inline Json to_json(const DegenerationReport& r) {
    Json j;
    j["cohomology_dims"] = r.lhs;
    j["e2_sums"] = r.rhs;
    j["homology_dims"] = r.homology_dims;
    j["ext_rows"] = r.ext_rows;
    j["degenerate"] = r.degenerate;
    j["sane"] = r.sane;
    return j;
}

inline Json to_json(const SuiteReport& r) {
    Json j;
    j["suite"] = r.suite;
    j["pass"] = r.pass();
    if (r.budget_overflow) j["budget_overflow"] = true;
    Json cases = Json::array();
    for (const auto& c : r.cases) {
        Json jc;
        jc["description"] = c.description;
        jc["expected"] = c.expected;
        jc["computed"] = c.computed;
        jc["pass"] = c.pass;
        if (!c.note.empty()) jc["note"] = c.note;
        cases.push_back(jc);
    }
    j["cases"] = cases;
    return j;
}

inline std::string suite_text(const SuiteReport& r) {
    std::string out = "suite " + r.suite + ": " + (r.pass() ? "PASS" : "FAIL") + "\n";
    for (const auto& c : r.cases) {
        out += "  [" + std::string(c.pass ? "ok" : "FAIL") + "] " + c.description;
        if (!c.expected.empty()) out += "  expected " + c.expected + "  computed " + c.computed;
        if (!c.note.empty()) out += "  (" + c.note + ")";
        out += "\n";
    }
    return out;
}

} // namespace hochhom

#endif
