#include "hochhom/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <iostream>

namespace {

int finish(hochhom::RunResult result, const std::string& out_path, const std::string& format,
           double elapsed_ms) {
    std::cerr << result.text;
    if (result.exit_code == hochhom::kExitPass || result.exit_code == hochhom::kExitSuiteFailure) {
        result.report["timing_ms"] = elapsed_ms;
        std::ofstream out(out_path);
        if (!out) {
            std::cerr << "cannot write report to " << out_path << "\n";
            return hochhom::kExitInputError;
        }
        if (format == "text")
            out << result.text;
        else
            out << result.report.dump(2) << "\n";
        std::cerr << "report written to " << out_path << "\n";
    }
    return result.exit_code;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"hochhom: higher Hochschild homology of simplicial sets, exactly over Q"};
    app.require_subcommand(0, 1);

    std::string config_path;
    app.add_option("config", config_path, "path to a JSON job config");

    auto* verify = app.add_subcommand("verify", "run a named verification suite");
    std::string suite, corpus = "default", out_path;
    verify->add_option("suite", suite, "low-degree | localization | smooth-hodge | "
                                       "homotopy-invariance | hodge-cohomology")
        ->required();
    verify->add_option("--corpus", corpus, "corpus preset (default)");
    verify->add_option("--out", out_path, "report path");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : hochhom::kExitInputError;
    }

    hochhom::Json doc;
    if (verify->parsed()) {
        doc["command"] = "verify";
        doc["suite"] = suite;
        doc["corpus"] = corpus;
        if (!out_path.empty()) doc["output"] = out_path;
    } else {
        if (config_path.empty()) {
            std::cerr << app.help();
            return hochhom::kExitInputError;
        }
        std::ifstream in(config_path);
        if (!in) {
            std::cerr << "cannot open config " << config_path << "\n";
            return hochhom::kExitInputError;
        }
        doc = hochhom::Json::parse(in, nullptr, /*allow_exceptions=*/false);
        if (doc.is_discarded()) {
            std::cerr << "malformed JSON in " << config_path << "\n";
            return hochhom::kExitInputError;
        }
    }

    hochhom::ParseResult parsed = hochhom::parse_config(doc);
    if (!parsed.config) {
        for (const auto& e : parsed.errors) std::cerr << "config error: " << e << "\n";
        return parsed.budget_exceeded ? hochhom::kExitBudgetOverflow : hochhom::kExitInputError;
    }

    auto t0 = std::chrono::steady_clock::now();
    hochhom::RunResult result = hochhom::run(*parsed.config);
    double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();

    std::string path = parsed.config->output_path;
    if (path.empty()) path = parsed.config->command + "-report.json";
    return finish(std::move(result), path, parsed.config->format, ms);
}
