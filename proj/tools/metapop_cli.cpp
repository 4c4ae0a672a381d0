/*
* Copyright (C) 2026 The metapop-nsfd Authors
*
* Licensed under the Apache License, Version 2.0 (the "License");
* you may not use this file except in compliance with the License.
* You may obtain a copy of the License at
*
*     http://www.apache.org/licenses/LICENSE-2.0
*
* Unless required by applicable law or agreed to in writing, software
* distributed under the License is distributed on an "AS IS" BASIS,
* WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
* See the License for the specific language governing permissions and
* limitations under the License.
*/
#include "metapop/metapop.h"

#include "CLI11.hpp"

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

namespace
{

constexpr int exit_ok = 0;
constexpr int exit_verification_failed = 1;
constexpr int exit_invalid = 2;

struct Options {
    std::string config;
    std::string preset;
    std::string out;
    std::optional<std::size_t> steps;
    std::optional<double> h;
    std::string scheme;
    std::string suite = "all";
    bool json = false;
};

class CliError : public std::runtime_error
{
public:
    using std::runtime_error::runtime_error;
};

void check(metapop_status st)
{
    if (st != METAPOP_OK) {
        throw CliError(std::string(metapop_status_string(st)) + ": " + metapop_last_error());
    }
}

struct ConfigHandle {
    metapop_config* ptr = nullptr;
    ~ConfigHandle()
    {
        metapop_config_free(ptr);
    }
};

struct OwnedString {
    char* ptr = nullptr;
    ~OwnedString()
    {
        metapop_string_free(ptr);
    }
};

void load(const Options& opt, bool compare, ConfigHandle& cfg)
{
    if (opt.config.empty() == opt.preset.empty()) {
        throw CliError("exactly one of --config and --preset is required");
    }
    check(opt.config.empty() ? metapop_config_from_preset(opt.preset.c_str(), &cfg.ptr)
                             : metapop_config_from_file(opt.config.c_str(), &cfg.ptr));
    if (opt.steps) {
        check(metapop_config_set(cfg.ptr, "steps", std::to_string(*opt.steps).c_str()));
    }
    if (opt.h) {
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", *opt.h);
        check(metapop_config_set(cfg.ptr, "h", buf));
    }
    if (!opt.scheme.empty()) {
        check(metapop_config_set(cfg.ptr, compare ? "compare.schemes" : "scheme", opt.scheme.c_str()));
    }
}

metapop_format format_of(const Options& opt)
{
    return opt.json ? METAPOP_FORMAT_JSON : METAPOP_FORMAT_TEXT;
}

int cmd_analyze(const Options& opt)
{
    ConfigHandle cfg;
    load(opt, false, cfg);
    OwnedString out;
    check(metapop_analyze(cfg.ptr, format_of(opt), &out.ptr));
    std::cout << out.ptr;
    return exit_ok;
}

int cmd_simulate(const Options& opt)
{
    ConfigHandle cfg;
    load(opt, false, cfg);
    OwnedString out;
    check(metapop_simulate(cfg.ptr, opt.out.empty() ? nullptr : opt.out.c_str(), format_of(opt), &out.ptr));
    std::cout << out.ptr;
    return exit_ok;
}

int cmd_compare(const Options& opt)
{
    ConfigHandle cfg;
    load(opt, true, cfg);
    OwnedString out;
    check(metapop_compare(cfg.ptr, opt.out.empty() ? nullptr : opt.out.c_str(), format_of(opt), &out.ptr));
    std::cout << out.ptr;
    return exit_ok;
}

int cmd_verify(const Options& opt)
{
    int passed = 0;
    OwnedString out;
    check(metapop_verify(opt.suite.c_str(), format_of(opt), &passed, &out.ptr));
    std::cout << out.ptr;
    return passed ? exit_ok : exit_verification_failed;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Nonstandard finite difference schemes for metapopulation models", "metapop-cli"};
    app.set_help_flag("--help", "Print this help message and exit");
    app.set_version_flag("--version", metapop_version());
    app.require_subcommand(1);
    app.fallthrough();

    Options opt;
    std::string presets;
    for (std::size_t k = 0; k < metapop_preset_count(); ++k) {
        presets += (k ? ", " : "") + std::string(metapop_preset_name(k));
    }
    app.add_option("--config", opt.config, "Experiment configuration file");
    app.add_option("--preset", opt.preset, "Built-in experiment: " + presets);
    app.add_option("--out", opt.out, "Output directory for CSV files");
    app.add_option("--steps", opt.steps, "Number of steps");
    app.add_option("--h", opt.h, "Step size");
    app.add_option("--scheme", opt.scheme, "nsfd, euler, rk2 or rk4; compare takes a comma list");
    app.add_flag("--json", opt.json, "Machine-readable output");

    auto* analyze = app.add_subcommand("analyze", "Equilibria, thresholds, step bounds and classification");
    auto* simulate = app.add_subcommand("simulate", "Write one CSV trajectory per initial state");
    auto* compare = app.add_subcommand("compare", "Run several schemes side by side and summarize violations");
    auto* verify = app.add_subcommand("verify", "Run the verification suite");
    std::string suites;
    for (std::size_t k = 0; k < metapop_suite_count(); ++k) {
        suites += (k ? ", " : "") + std::string(metapop_suite_name(k));
    }
    verify->add_option("suite", opt.suite, "One of: " + suites)->capture_default_str();

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::Success& e) {
        return app.exit(e);
    }
    catch (const CLI::ParseError& e) {
        app.exit(e);
        return exit_invalid;
    }

    try {
        if (*analyze) {
            return cmd_analyze(opt);
        }
        if (*simulate) {
            return cmd_simulate(opt);
        }
        if (*compare) {
            return cmd_compare(opt);
        }
        if (*verify) {
            return cmd_verify(opt);
        }
    }
    catch (const std::exception& e) {
        std::cerr << "metapop: error: " << e.what() << '\n';
        return exit_invalid;
    }
    return exit_invalid;
}
