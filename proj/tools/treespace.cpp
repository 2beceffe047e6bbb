// Command-line front end: builds tree-space and partition-nerve complexes,
// verifies their structure, and prints character and extension reports.
//
// Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "treespace/parallel.hpp"
#include "treespace/reports.hpp"

namespace {

/// Text-mode tree listings come out one encoding per line, the import format.
std::string render_tree_lines(const nlohmann::ordered_json& report) {
    std::ostringstream os;
    os << "space: " << report.at("space").get<std::string>() << "\n";
    os << "n: " << report.at("n").dump() << "\n";
    for (const auto& level : report.at("simplices"))
        for (const auto& enc : level) os << enc.get<std::string>() << "\n";
    return os.str();
}

int write_report(const treespace::RunConfig& cfg, const nlohmann::ordered_json& report,
                 const std::string& out_path) {
    std::string text;
    if (cfg.format == "json")
        text = treespace::render_json(report);
    else if (cfg.command == "enumerate" && cfg.list_items && report.contains("simplices"))
        text = render_tree_lines(report);
    else
        text = treespace::render_text(report);
    if (out_path.empty()) {
        std::cout << text;
    } else {
        std::ofstream out(out_path, std::ios::binary);
        if (!out) {
            std::cerr << "cannot write " << out_path << "\n";
            return 1;
        }
        out << text;
    }
    return treespace::report_passed(report) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"tree-space complexes, their homology, and the Lie module reports"};
    app.require_subcommand(1);

    treespace::RunConfig cfg;
    cfg.jobs = treespace::default_jobs();
    std::string out_path;

    auto add_common = [&](CLI::App* cmd, bool with_space) {
        cmd->add_option("--n", cfg.n, "number of non-root labels");
        if (with_space)
            cmd->add_option("--space", cfg.space, "tree-space or partition-nerve")
                ->check(CLI::IsMember({"tree-space", "partition-nerve"}));
        cmd->add_option("--format", cfg.format, "json or text")
            ->check(CLI::IsMember({"json", "text"}));
        cmd->add_option("--seed", cfg.seed, "seed for randomized checks");
        cmd->add_option("--jobs", cfg.jobs, "worker threads (default: TREESPACE_JOBS or 1)");
        cmd->add_option("--out", out_path, "write the report to a file instead of stdout");
    };

    CLI::App* enumerate = app.add_subcommand("enumerate", "count simplices per degree");
    add_common(enumerate, true);
    enumerate->add_flag("--list", cfg.list_items, "include the simplex listing");

    CLI::App* verify = app.add_subcommand("verify", "run structural verifications");
    add_common(verify, false);
    verify->add_option("--depth", cfg.depth, "quick or full")
        ->check(CLI::IsMember({"quick", "full"}));
    verify->add_option("--complex-file", cfg.complex_file,
                       "validate a complex dump instead of building one");

    CLI::App* character = app.add_subcommand("character", "character tables by cycle type");
    add_common(character, false);
    character->add_option("--module", cfg.module, "lie, superlie, hatlie or homology")
        ->check(CLI::IsMember({"lie", "superlie", "hatlie", "homology"}));

    CLI::App* whitehouse =
        app.add_subcommand("whitehouse", "extension sequence: characters and integral exactness");
    add_common(whitehouse, false);

    CLI::App* cycle = app.add_subcommand("cycle", "export the fundamental cycle");
    add_common(cycle, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        cfg.command = app.get_subcommands().front()->get_name();
        treespace::check_config(cfg);
        nlohmann::ordered_json report;
        if (cfg.command == "enumerate")
            report = treespace::report_enumerate(cfg);
        else if (cfg.command == "verify")
            report = treespace::report_verify(cfg);
        else if (cfg.command == "character")
            report = treespace::report_character(cfg);
        else if (cfg.command == "whitehouse")
            report = treespace::report_whitehouse(cfg);
        else
            report = treespace::report_cycle(cfg);
        return write_report(cfg, report, out_path);
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "verification error: " << e.what() << "\n";
        return 1;
    }
}
