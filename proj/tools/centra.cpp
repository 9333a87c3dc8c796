// centra: compute centralizer-counting invariants of finite groups and run
// the verification suite over the built-in catalog.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or build error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"

#include "centra/constructions.hpp"
#include "centra/reporting.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitVerificationFailure = 1;
constexpr int kExitUsage = 2;

int default_jobs() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

int env_order_cap(int fallback) {
    const char* raw = std::getenv("CENTRA_ORDER_CAP");
    if (!raw) return fallback;
    try {
        int value = std::stoi(raw);
        return value >= 2 ? value : fallback;
    } catch (const std::exception&) {
        return fallback;
    }
}

int emit(const std::string& rendered, const std::string& output_path) {
    if (output_path.empty()) {
        std::cout << rendered;
        return kExitOk;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot open output file: " << output_path << "\n";
        return kExitUsage;
    }
    out << rendered;
    return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"finite-group centralizer invariants and verification suite"};
    app.require_subcommand(1);
    app.fallthrough(); // global flags may follow the subcommand

    std::string format_name = "text";
    std::string output_path;
    int order_cap = env_order_cap(600);
    int jobs = default_jobs();

    app.add_option("--format", format_name, "output format: json, text or csv")
        ->capture_default_str();
    app.add_option("--output,-o", output_path, "write the report to a file instead of stdout");
    app.add_option("--order-cap", order_cap,
                   "skip catalog groups above this order (env CENTRA_ORDER_CAP)")
        ->capture_default_str();
    app.add_option("--jobs,-j", jobs, "number of concurrent verifier workers")
        ->capture_default_str();

    auto* compute = app.add_subcommand("compute", "invariant profile for each group spec");
    std::vector<std::string> specs;
    compute->add_option("spec", specs, "group specs, e.g. \"D(10)\" or \"prod(S(3),C(2))\"")
        ->required();

    auto* verify = app.add_subcommand("verify", "run the verification suite");
    std::vector<std::string> theorem_ids;
    verify->add_option("--theorems", theorem_ids, "verifier ids to run (default: all)")
        ->delimiter(',');
    bool list_theorems = false;
    verify->add_flag("--list", list_theorems, "list verifier ids and exit");

    auto* experiment =
        app.add_subcommand("experiment", "pair-centralizer distinctness over simple groups");
    auto* catalog_cmd = app.add_subcommand("catalog", "list the built-in group catalog");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    if (order_cap < 2) {
        std::cerr << "--order-cap must be at least 2\n";
        return kExitUsage;
    }
    if (jobs < 1) {
        std::cerr << "--jobs must be at least 1\n";
        return kExitUsage;
    }

    centra::OutputFormat format;
    try {
        format = centra::parse_format(format_name);
    } catch (const centra::group_error& e) {
        std::cerr << e.what() << "\n";
        return kExitUsage;
    }

    try {
        if (compute->parsed()) {
            std::vector<centra::CentProfile> profiles;
            for (const std::string& text : specs) {
                try {
                    centra::Group g = centra::build_spec(text);
                    profiles.push_back(centra::cent_profile(g, text));
                } catch (const centra::group_error& e) {
                    std::cerr << "spec \"" << text << "\": " << e.what() << "\n";
                    return kExitUsage;
                }
            }
            return emit(centra::render_profiles(profiles, format), output_path);
        }

        if (verify->parsed()) {
            if (list_theorems) {
                for (const std::string& id : centra::all_theorem_ids()) std::cout << id << "\n";
                return kExitOk;
            }
            centra::SuiteConfig config;
            config.theorem_ids = theorem_ids;
            config.order_cap = order_cap;
            config.jobs = jobs;
            std::vector<centra::TheoremReport> reports;
            try {
                reports = centra::run_suite(config);
            } catch (const centra::group_error& e) {
                std::cerr << e.what() << "\n";
                return kExitUsage;
            }
            int rc = emit(centra::render_suite_reports(reports, format), output_path);
            if (rc != kExitOk) return rc;
            for (const auto& r : reports)
                if (r.failed > 0) return kExitVerificationFailure;
            return kExitOk;
        }

        if (experiment->parsed()) {
            centra::BuiltCatalog catalog = centra::build_catalog(order_cap, jobs);
            centra::ConjectureReport report = centra::conjecture_experiment(catalog);
            return emit(centra::render_conjecture(report, format), output_path);
        }

        if (catalog_cmd->parsed()) {
            std::vector<centra::CatalogRow> rows;
            for (const auto& entry : centra::default_catalog())
                rows.push_back({entry.name, entry.spec_text, entry.order, entry.notes});
            return emit(centra::render_catalog(rows, format), output_path);
        }
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
