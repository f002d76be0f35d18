#ifndef TPS_CLI_HPP
#define TPS_CLI_HPP

#include "tps/multi_exponent.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

namespace tps {

namespace exit_code {
constexpr int ok = 0;
constexpr int disagreement = 1;  // a mathematical identity failed
constexpr int input = 2;         // parse or validation failure
constexpr int internal = 3;      // structural claim violated
constexpr int resource = 4;      // configured cap exceeded
} // namespace exit_code

struct JobConfig {
    enum class Mode { constellation, semigroup, fibers, verify };

    Mode mode = Mode::constellation;
    std::string input_path;
    std::optional<MultiExponent> box;    // --box, validated per mode
    std::optional<ValueVector> query_v;  // --v, fibers mode
    bool json_output = false;
    std::uint64_t seed = 42;
    std::int64_t cap = 20;
    std::string replay_path = "tps_verify_failure.json";
};

/// Dispatches on mode and maps exceptions to the exit-code contract.
int run_job(const JobConfig& cfg, std::ostream& out, std::ostream& err);

int run_constellation(const JobConfig& cfg, std::ostream& out, std::ostream& err);
int run_semigroup(const JobConfig& cfg, std::ostream& out, std::ostream& err);
int run_fibers(const JobConfig& cfg, std::ostream& out, std::ostream& err);
int run_verify(const JobConfig& cfg, std::ostream& out, std::ostream& err);

} // namespace tps

#endif
