#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "gedanken/classifier.hpp"
#include "gedanken/config.hpp"
#include "gedanken/consistency.hpp"
#include "gedanken/sweep.hpp"
#include <json.hpp>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;       // unreadable/malformed input, bad flags
constexpr int kExitValidation = 2;  // scenario invariant violations
constexpr int kExitTheorem = 3;     // theorem failure / missing witness

int run_classify(const std::string& config_path) {
    gedanken::sweep::GridSpec grid = gedanken::config::parse_config_file(config_path);
    gedanken::ValidationReport v = gedanken::validate(grid.base);
    if (!v.ok()) {
        for (const auto& violation : v.violations)
            std::cerr << "validation: " << violation << "\n";
        return kExitValidation;
    }
    auto report = gedanken::classifier::classify(grid.base, grid.slack, grid.bob_sigma);
    std::cout << gedanken::classifier::to_json(report) << "\n";
    return kExitOk;
}

int run_sweep(const std::string& config_path, const std::string& output_path,
              int threads) {
    gedanken::sweep::GridSpec grid = gedanken::config::parse_config_file(config_path);
    std::vector<gedanken::sweep::Row> rows;
    try {
        rows = gedanken::sweep::run(grid, threads);
    } catch (const gedanken::classifier::ValidationError& e) {
        std::cerr << "validation: " << e.what() << "\n";
        return kExitValidation;
    }
    std::ofstream out(output_path, std::ios::binary);
    if (!out) {
        std::cerr << "cannot write '" << output_path << "'\n";
        return kExitUsage;
    }
    gedanken::sweep::write_csv(out, grid, rows);
    out.flush();
    if (!out) {
        std::cerr << "short write to '" << output_path << "'\n";
        return kExitUsage;
    }
    std::cout << "rows=" << rows.size() << " file=" << output_path << "\n";
    return kExitOk;
}

int run_theorems(const std::string& field_choice, long trials, std::uint64_t seed,
                 const std::string& drop_choice, int multipole) {
    using gedanken::FieldKind;
    using gedanken::consistency::Ingredient;

    std::vector<FieldKind> fields;
    if (field_choice == "em" || field_choice == "both")
        fields.push_back(FieldKind::Electromagnetic);
    if (field_choice == "gr" || field_choice == "both")
        fields.push_back(FieldKind::Gravitational);

    std::vector<Ingredient> drops;
    if (drop_choice == "vacuum-fluctuations")
        drops = {Ingredient::VacuumFluctuations};
    else if (drop_choice == "quantized-radiation")
        drops = {Ingredient::QuantizedRadiation};
    else
        drops = {Ingredient::VacuumFluctuations, Ingredient::QuantizedRadiation};

    bool all_ok = true;
    nlohmann::json theorem_reports = nlohmann::json::array();
    nlohmann::json witness_reports = nlohmann::json::array();
    for (FieldKind field : fields) {
        auto report =
            gedanken::consistency::no_paradox_theorem(field, multipole, trials, seed);
        all_ok = all_ok && report.passed();
        theorem_reports.push_back(
            nlohmann::json::parse(gedanken::consistency::to_json(report)));
        for (Ingredient drop : drops) {
            auto witness = gedanken::consistency::counterfactual_probe(field, drop);
            all_ok = all_ok && witness.demonstrates_paradox();
            witness_reports.push_back(
                nlohmann::json::parse(gedanken::consistency::to_json(witness)));
        }
    }

    nlohmann::json summary{
        {"trials", trials},
        {"seed", seed},
        {"theorems", theorem_reports},
        {"witnesses", witness_reports},
        {"passed", all_ok},
    };
    std::cout << summary.dump(2) << "\n";
    if (!all_ok) {
        std::cerr << "theorem failure; see counterexample in the report above\n";
        return kExitTheorem;
    }
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{
        "Order-of-magnitude analyzer for the two-party superposition "
        "protocol: outcome classification, phase-diagram sweeps, and "
        "causality/complementarity consistency theorems. Numbers are in "
        "Planck units unless tagged value@unit (m, s, kg, C)."};
    app.require_subcommand(1);

    std::string classify_config;
    CLI::App* classify =
        app.add_subcommand("classify", "Classify one scenario config as JSON");
    classify->add_option("config", classify_config, "scenario config file")
        ->required();

    std::string sweep_config;
    std::string sweep_output;
    int sweep_threads = 1;
    CLI::App* sweep =
        app.add_subcommand("sweep", "Evaluate a grid config into a phase-diagram CSV");
    sweep->add_option("config", sweep_config, "grid config file")->required();
    sweep->add_option("-o,--output", sweep_output, "output CSV path")->required();
    sweep->add_option("--threads", sweep_threads, "worker thread count")
        ->check(CLI::Range(1, 256));

    std::string theorems_field = "both";
    long theorems_trials = 100000;
    std::uint64_t theorems_seed = 20260817;
    std::string theorems_drop;
    int theorems_multipole = 0;
    CLI::App* theorems = app.add_subcommand(
        "theorems", "Run the no-paradox theorems and counterfactual probes");
    theorems->add_option("--field", theorems_field, "field kind")
        ->check(CLI::IsMember({"em", "gr", "both"}));
    theorems->add_option("--trials", theorems_trials, "random trials per theorem")
        ->check(CLI::Range(1L, 1000000000L));
    theorems->add_option("--seed", theorems_seed, "RNG seed");
    theorems->add_option("--drop", theorems_drop,
                         "probe only this dropped ingredient")
        ->check(CLI::IsMember({"vacuum-fluctuations", "quantized-radiation"}));
    theorems->add_option("--multipole", theorems_multipole,
                         "source multipole order (0 = leading for the field)")
        ->check(CLI::Range(0, 6));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitUsage;
    }

    try {
        if (classify->parsed()) return run_classify(classify_config);
        if (sweep->parsed()) return run_sweep(sweep_config, sweep_output, sweep_threads);
        return run_theorems(theorems_field, theorems_trials, theorems_seed,
                            theorems_drop, theorems_multipole);
    } catch (const gedanken::config::ConfigError& e) {
        std::cerr << "config: " << e.what() << "\n";
        return kExitUsage;
    } catch (const gedanken::sweep::GridError& e) {
        std::cerr << "grid: " << e.what() << "\n";
        return kExitUsage;
    } catch (const gedanken::classifier::ValidationError& e) {
        std::cerr << "validation: " << e.what() << "\n";
        return kExitValidation;
    } catch (const gedanken::classifier::UnsupportedConfiguration& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kExitValidation;
    } catch (const gedanken::DimensionError& e) {
        std::cerr << "dimension: " << e.what() << "\n";
        return kExitUsage;
    } catch (const gedanken::DomainError& e) {
        std::cerr << "domain: " << e.what() << "\n";
        return kExitValidation;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitUsage;
    }
}
