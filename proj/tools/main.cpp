#include "tps/cli.hpp"
#include "tps/errors.hpp"
#include "tps/multi_exponent.hpp"

#include <CLI11.hpp>

#include <cstdint>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

tps::MultiExponent parse_csv(const std::string& text) {
    std::vector<std::int64_t> entries;
    std::istringstream is(text);
    std::string token;
    while (std::getline(is, token, ',')) {
        try {
            entries.push_back(std::stoll(token));
        } catch (const std::exception&) {
            throw tps::input_error("not an integer list: " + text);
        }
    }
    if (entries.empty()) throw tps::input_error("empty integer list");
    return tps::MultiExponent(entries);
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multi-index Poincare series of affine toric varieties and toric\n"
                 "blow-up constellations, with built-in cross-validation suites."};

    std::string mode;
    std::string input;
    std::string box_arg;
    std::string v_arg;
    bool json = false;
    std::uint64_t seed = 42;
    std::int64_t cap = 20;

    app.add_option("--mode", mode, "constellation | semigroup | fibers | verify")
        ->required()
        ->check(CLI::IsMember({"constellation", "semigroup", "fibers", "verify"}));
    app.add_option("--input", input, "input JSON file (replay file in verify mode)");
    app.add_option("--box", box_arg, "truncation box, comma separated (v1,...,vr)");
    app.add_option("--v", v_arg, "query value vector, comma separated");
    app.add_flag("--json", json, "emit canonical JSON instead of text");
    app.add_option("--seed", seed, "seed for randomized verification");
    app.add_option("--cap", cap, "stratification support cap (default 20)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return tps::exit_code::input;
    }

    tps::JobConfig cfg;
    if (mode == "constellation") cfg.mode = tps::JobConfig::Mode::constellation;
    else if (mode == "semigroup") cfg.mode = tps::JobConfig::Mode::semigroup;
    else if (mode == "fibers") cfg.mode = tps::JobConfig::Mode::fibers;
    else cfg.mode = tps::JobConfig::Mode::verify;
    cfg.input_path = input;
    cfg.json_output = json;
    cfg.seed = seed;
    cfg.cap = cap;
    try {
        if (!box_arg.empty()) cfg.box = parse_csv(box_arg);
        if (!v_arg.empty()) cfg.query_v = parse_csv(v_arg);
    } catch (const tps::input_error& e) {
        std::cerr << "error: " << e.what() << '\n';
        return tps::exit_code::input;
    }

    return tps::run_job(cfg, std::cout, std::cerr);
}
