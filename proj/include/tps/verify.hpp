#ifndef TPS_VERIFY_HPP
#define TPS_VERIFY_HPP

#include "tps/constellation.hpp"
#include "tps/json_io.hpp"
#include "tps/semigroup.hpp"

#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <vector>

namespace tps {

/// Deterministic RNG: mt19937_64 plus modulo sampling, so the same seed
/// produces the same stream on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform-ish integer in [lo, hi], inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = static_cast<std::uint64_t>(hi - lo + 1);
        return lo + static_cast<std::int64_t>(next() % span);
    }

private:
    std::mt19937_64 engine_;
};

Constellation random_constellation(Rng& rng, std::int64_t max_dimension = 5,
                                   std::int64_t max_points = 8);

/// d <= 3, at most 5 generators with entries <= 3, r <= 3; always valid.
SemigroupSpec random_semigroup(Rng& rng);

struct SuiteResult {
    std::string name;
    std::int64_t checks = 0;
    std::int64_t failures = 0;
    std::vector<std::string> notes; // first few failure descriptions
    Json replay;                    // failing instance, set on first failure

    SuiteResult() = default;
    explicit SuiteResult(std::string suite_name) : name(std::move(suite_name)) {}
};

struct VerifyOptions {
    std::uint64_t seed = 42;
    std::int64_t constellation_count = 50;
    std::int64_t semigroup_count = 20;
    std::int64_t series_count = 40;
    std::int64_t chi_cap = 20;
};

struct VerifyReport {
    SuiteResult series_laws{"series-ring-laws"};
    SuiteResult series_expansion{"series-expansion-inverse"};
    SuiteResult cone_regularity{"cone-regularity"};
    SuiteResult matrix_invariants{"matrix-invariants"};
    SuiteResult oracle_N{"oracle-N-equivalence"};
    SuiteResult transform_roundtrip{"transform-roundtrip"};
    SuiteResult fiber_chi{"fiber-chi"};
    SuiteResult lambda_splitting{"lambda-splitting"};
    SuiteResult pushforward_definitional{"pushforward-definitional"};
    SuiteResult single_valuation_dims{"single-valuation-dims"};
    bool binomial_lambda2_exercised = false;

    std::vector<std::reference_wrapper<const SuiteResult>> suites() const;
    bool ok() const;
    std::int64_t total_checks() const;
    std::int64_t total_failures() const;
};

VerifyReport run_verification(const VerifyOptions& options);

/// Re-runs the checks for one serialized failing instance (the replay JSON
/// written by a verification run).
VerifyReport run_replay(const nlohmann::json& instance, const VerifyOptions& options);

/// Per-instance check batteries, also driven directly by the acceptance
/// suite. Results accumulate into the report's suites; exceptions are
/// recorded as failures, never rethrown.
void verify_constellation_instance(const Constellation& c, const TruncationBox& box,
                                   std::uint64_t subseed, std::int64_t chi_cap,
                                   VerifyReport& report);
void verify_semigroup_instance(const SemigroupSpec& spec, const TruncationBox& box,
                               std::uint64_t subseed, VerifyReport& report);
void verify_series_instance(std::uint64_t subseed, VerifyReport& report);

TruncationBox random_constellation_box(Rng& rng, const Constellation& c);
TruncationBox random_semigroup_box(Rng& rng, const SemigroupSpec& spec);

} // namespace tps

#endif
