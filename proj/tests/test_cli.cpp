#include "tps/cli.hpp"

#include "tps/json_io.hpp"
#include "tps/verify.hpp"

#include <doctest.h>

#include <sstream>
#include <string>

using namespace tps;

namespace {

std::string data_path(const std::string& name) {
    return std::string(TPS_TEST_DATA_DIR) + "/" + name;
}

struct JobOutcome {
    int code = 0;
    std::string out;
    std::string err;
};

JobOutcome run(const JobConfig& cfg) {
    std::ostringstream out, err;
    const int code = run_job(cfg, out, err);
    return {code, out.str(), err.str()};
}

JobConfig constellation_job(const std::string& file) {
    JobConfig cfg;
    cfg.mode = JobConfig::Mode::constellation;
    cfg.input_path = data_path(file);
    return cfg;
}

} // namespace

TEST_CASE("constellation mode reports the blow-up example") {
    JobConfig cfg = constellation_job("example_constellation.json");
    cfg.box = MultiExponent{2, 4, 4, 6, 8};
    const JobOutcome result = run(cfg);
    CHECK(result.code == exit_code::ok);
    CHECK(result.out.find("1 1 1 1\n1 2 2 2\n2 1 2 2\n1 3 3 3\n2 3 4 4") != std::string::npos);
    CHECK(result.out.find(
              "poincare series: 1/((1-t^(1,1,2,1,2))(1-t^(1,2,1,3,3))(1-t^(1,2,2,3,4))^2)") !=
          std::string::npos);
    CHECK(result.out.find("degenerate: yes") != std::string::npos);
    CHECK(result.out.find("regular: yes") != std::string::npos);
    CHECK(result.out.find("2 1 2 2 3 4\n") != std::string::npos); // N((1,2,2,3,4)) = 2

    // byte-identical reruns
    CHECK(run(cfg).out == result.out);
}

TEST_CASE("constellation mode emits canonical json") {
    JobConfig cfg = constellation_job("example_constellation.json");
    cfg.json_output = true;
    const JobOutcome result = run(cfg);
    CHECK(result.code == exit_code::ok);
    const auto doc = nlohmann::json::parse(result.out);
    CHECK(doc.at("report").at("k") == 2);
    CHECK(doc.at("report").at("degenerate") == true);
    CHECK(doc.at("poincare_factored").size() == 3);
    CHECK(run(cfg).out == result.out);
}

TEST_CASE("a single point gives the squared geometric factor") {
    const JobOutcome result = run(constellation_job("single_point.json"));
    CHECK(result.code == exit_code::ok);
    CHECK(result.out.find("poincare series: 1/((1-t^(1))^2)") != std::string::npos);
    CHECK(result.out.find("degenerate: yes") != std::string::npos);
}

TEST_CASE("constellation mode rejects bad inputs with exit 2") {
    const JobOutcome bad = run(constellation_job("bad_sibling_weights.json"));
    CHECK(bad.code == exit_code::input);
    CHECK(bad.err.find("points 1 and 2") != std::string::npos);

    const JobOutcome missing = run(constellation_job("no_such_file.json"));
    CHECK(missing.code == exit_code::input);

    JobConfig wrong_box = constellation_job("example_constellation.json");
    wrong_box.box = MultiExponent{1, 2};
    CHECK(run(wrong_box).code == exit_code::input);
}

TEST_CASE("semigroup mode cross-validates both series") {
    JobConfig cfg;
    cfg.mode = JobConfig::Mode::semigroup;
    cfg.input_path = data_path("semigroup_23.json");
    cfg.box = MultiExponent{8};
    const JobOutcome result = run(cfg);
    CHECK(result.code == exit_code::ok);
    CHECK(result.out.find("diff: empty") != std::string::npos);
    CHECK(run(cfg).out == result.out);
}

TEST_CASE("semigroup mode accepts a constellation file") {
    JobConfig cfg;
    cfg.mode = JobConfig::Mode::semigroup;
    cfg.input_path = data_path("example_constellation.json");
    cfg.box = MultiExponent{2, 4, 4, 6, 8};
    const JobOutcome result = run(cfg);
    CHECK(result.code == exit_code::ok);
    CHECK(result.out.find("diff: empty") != std::string::npos);
}

TEST_CASE("semigroup mode requires a box") {
    JobConfig cfg;
    cfg.mode = JobConfig::Mode::semigroup;
    cfg.input_path = data_path("semigroup_23.json");
    CHECK(run(cfg).code == exit_code::input);
}

TEST_CASE("the r cap maps to exit 4") {
    JobConfig cfg;
    cfg.mode = JobConfig::Mode::semigroup;
    cfg.input_path = data_path("semigroup_r17.json");
    cfg.box = MultiExponent(std::vector<std::int64_t>(17, 2));
    const JobOutcome result = run(cfg);
    CHECK(result.code == exit_code::resource);
    CHECK(result.err.find("r <= 16") != std::string::npos);
}

TEST_CASE("fibers mode reports the continued example") {
    JobConfig cfg;
    cfg.mode = JobConfig::Mode::fibers;
    cfg.input_path = data_path("example_constellation.json");
    cfg.query_v = ValueVector{6, 11, 10, 14, 18};
    const JobOutcome result = run(cfg);
    CHECK(result.code == exit_code::ok);
    CHECK(result.out.find("N(v) = 0") != std::string::npos);
    CHECK(result.out.find("(14,0,0,0)") != std::string::npos);
    CHECK(run(cfg).out == result.out);

    cfg.json_output = true;
    const auto doc = nlohmann::json::parse(run(cfg).out);
    CHECK(doc.at("N") == 0);
    CHECK(doc.at("chi_PF") == 0);
    CHECK(doc.at("realizable") == true);
    CHECK(doc.at("lambda").at("5").size() == 1);
    CHECK(doc.at("pairs").size() == 10);
}

TEST_CASE("fibers mode requires a query vector") {
    JobConfig cfg;
    cfg.mode = JobConfig::Mode::fibers;
    cfg.input_path = data_path("example_constellation.json");
    CHECK(run(cfg).code == exit_code::input);
    cfg.query_v = ValueVector{1, 1};
    CHECK(run(cfg).code == exit_code::input); // wrong rank
}

TEST_CASE("fiber query on a plain semigroup file") {
    JobConfig cfg;
    cfg.mode = JobConfig::Mode::fibers;
    cfg.input_path = data_path("free2.json");
    cfg.query_v = ValueVector{2};
    const JobOutcome result = run(cfg);
    CHECK(result.code == exit_code::ok);
    CHECK(result.out.find("N(v) = 3") != std::string::npos);
}

TEST_CASE("verify mode replays a serialized instance from disk") {
    JobConfig cfg;
    cfg.mode = JobConfig::Mode::verify;
    cfg.input_path = data_path("replay_constellation.json");
    const JobOutcome result = run(cfg);
    CHECK(result.code == exit_code::ok);
    CHECK(result.out.find("replaying constellation instance") != std::string::npos);
    CHECK(run(cfg).out == result.out);
}

TEST_CASE("verification report is deterministic and replayable") {
    VerifyOptions options;
    options.seed = 202;
    options.constellation_count = 4;
    options.semigroup_count = 3;
    options.series_count = 4;
    const VerifyReport a = run_verification(options);
    const VerifyReport b = run_verification(options);
    CHECK(a.ok());
    CHECK(a.total_checks() == b.total_checks());
    CHECK(a.total_failures() == 0);

    // replaying one instance reruns exactly its battery
    Rng gen(777);
    const Constellation c = random_constellation(gen);
    const TruncationBox box = random_constellation_box(gen, c);
    Json instance;
    instance["kind"] = "constellation";
    instance["subseed"] = 777;
    instance["box"] = exponent_to_json(box.bounds());
    instance["constellation"] = constellation_to_json(c);
    const VerifyReport first = run_replay(instance, VerifyOptions{});
    const VerifyReport second = run_replay(instance, VerifyOptions{});
    CHECK(first.total_checks() == second.total_checks());
    CHECK(first.total_failures() == 0);
    CHECK(second.total_failures() == 0);
}
