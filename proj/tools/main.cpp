#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "hcnsim/experiment_io.hpp"

namespace {

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw IoError("cannot read config file " + path);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

struct Overrides {
    long trials = 0;
    long long seed = -1;
    std::string scheme;
    unsigned threads = 0;
};

void add_override_flags(CLI::App* cmd, Overrides& ov) {
    cmd->add_option("--trials", ov.trials, "Override the trial count");
    cmd->add_option("--seed", ov.seed, "Override the base random seed");
    cmd->add_option("--scheme", ov.scheme,
                    "Override the scheme selection {conventional|proposed|both}");
    cmd->add_option("--threads", ov.threads, "Worker thread count (0 = hardware)");
}

hcnsim::RunConfig load_config(const std::string& path, const Overrides& ov) {
    hcnsim::RunConfig config = hcnsim::parse_config(read_file(path));
    if (ov.trials != 0) {
        if (ov.trials < 1) throw hcnsim::ConfigError("trials must be a positive integer");
        config.base.trials = ov.trials;
    }
    if (ov.seed >= 0) config.base.seed = static_cast<std::uint64_t>(ov.seed);
    if (!ov.scheme.empty()) config.schemes = hcnsim::parse_scheme_selection(ov.scheme);
    return config;
}

void write_rows(std::ostream& out, const std::vector<hcnsim::SweepRow>& rows) {
    out << hcnsim::kCsvHeader << '\n';
    for (const auto& row : rows) out << hcnsim::csv_row(row) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"K-tier downlink network simulator: power-normalized association analysis"};
    app.require_subcommand(1);

    std::string sweep_config;
    std::string sweep_out;
    Overrides sweep_ov;
    CLI::App* sweep_cmd = app.add_subcommand("sweep", "Run a parameter sweep and write CSV");
    sweep_cmd->add_option("config-file", sweep_config, "JSON run configuration")->required();
    sweep_cmd->add_option("--out", sweep_out, "Output CSV path")->required();
    add_override_flags(sweep_cmd, sweep_ov);

    std::string single_config;
    Overrides single_ov;
    CLI::App* single_cmd =
        app.add_subcommand("single", "Run the configured experiment once and print CSV");
    single_cmd->add_option("config-file", single_config, "JSON run configuration")->required();
    add_override_flags(single_cmd, single_ov);

    CLI::App* validate_cmd =
        app.add_subcommand("validate", "Run the built-in self-check suite");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) return app.exit(e);
        std::cerr << "error: usage: " << e.what() << '\n';
        return 2;
    }

    try {
        if (app.got_subcommand(validate_cmd)) {
            const int failures = hcnsim::run_validation(std::cout);
            if (failures != 0) {
                std::cerr << "error: validation: " << failures << " check(s) failed" << '\n';
                return 1;
            }
            return 0;
        }
        if (app.got_subcommand(sweep_cmd)) {
            const hcnsim::RunConfig config = load_config(sweep_config, sweep_ov);
            if (!config.sweep)
                throw hcnsim::ConfigError("sweep requires a sweep section in the config");
            std::ofstream out(sweep_out, std::ios::binary | std::ios::trunc);
            if (!out) throw IoError("cannot write output file " + sweep_out);
            const auto rows = hcnsim::run_sweep(config, sweep_ov.threads);
            write_rows(out, rows);
            if (!out.flush()) throw IoError("failed writing output file " + sweep_out);
            std::cout << "wrote " << rows.size() << " rows to " << sweep_out << '\n';
            return 0;
        }
        const hcnsim::RunConfig config = load_config(single_config, single_ov);
        write_rows(std::cout, hcnsim::run_single(config, single_ov.threads));
        return 0;
    } catch (const hcnsim::ConfigError& e) {
        std::cerr << "error: config: " << e.what() << '\n';
        return 1;
    } catch (const IoError& e) {
        std::cerr << "error: io: " << e.what() << '\n';
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: run: " << e.what() << '\n';
        return 1;
    }
}
