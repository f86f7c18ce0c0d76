#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "mimetic/config.hpp"
#include "mimetic/runner.hpp"

namespace {

int run_command(const std::string& config_path, const std::string& out_dir,
                bool quiet) {
    std::ifstream in(config_path);
    if (!in) {
        std::cerr << "i/o error: cannot open " << config_path << "\n";
        return 3;
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    if (!in.good() && !in.eof()) {
        std::cerr << "i/o error: cannot read " << config_path << "\n";
        return 3;
    }

    mimetic::RunConfig rc;
    try {
        rc = mimetic::parse_config(buf.str());
    } catch (const std::invalid_argument& e) {
        std::cerr << "invalid configuration: " << e.what() << "\n";
        return 1;
    }
    for (const std::string& w : rc.warnings) std::cerr << "warning: " << w << "\n";

    return mimetic::run_scenario(rc, out_dir, quiet);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Staggered-time integrators with discrete conservation ledgers"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = "out";
    bool quiet = false;

    CLI::App* run = app.add_subcommand("run", "Run the scenario described by a JSON config");
    run->add_option("config", config_path, "Path to the config file")->required();
    run->add_option("--out", out_dir, "Output directory for ledger.csv and snapshots");
    run->add_flag("--quiet", quiet, "Suppress the drift summary on stdout");

    CLI11_PARSE(app, argc, argv);

    return run_command(config_path, out_dir, quiet);
}
