#include "tps/cli.hpp"

#include "tps/constellation.hpp"
#include "tps/errors.hpp"
#include "tps/fibers.hpp"
#include "tps/json_io.hpp"
#include "tps/semigroup.hpp"
#include "tps/series.hpp"
#include "tps/verify.hpp"

#include <fstream>
#include <ostream>

namespace tps {

namespace {

/// Accepts either a constellation document ("points") or a semigroup
/// document ("generators"); constellations are bridged through N^d.
SemigroupSpec load_semigroup_like(const std::string& path) {
    const std::string text = read_file(path);
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw input_error(std::string("JSON parse failure: ") + e.what());
    }
    if (doc.contains("points")) return to_semigroup_spec(require_constellation(text));
    return semigroup_from_json(doc);
}

TruncationBox required_box(const JobConfig& cfg, std::size_t rank, const char* what) {
    if (!cfg.box) throw input_error(std::string("--box is required for ") + what);
    if (cfg.box->size() != rank)
        throw input_error("--box has " + std::to_string(cfg.box->size()) +
                          " entries, expected " + std::to_string(rank));
    return TruncationBox(*cfg.box);
}

void print_series(std::ostream& out, const TruncatedSeries& s) { out << s.to_text(); }

} // namespace

int run_constellation(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.input_path.empty()) throw input_error("--input is required");
    const ConstellationParseResult parsed = parse_constellation(read_file(cfg.input_path));
    if (!parsed.ok()) {
        for (const auto& v : parsed.violations) err << "error: " << v << '\n';
        return exit_code::input;
    }
    const Constellation& c = *parsed.constellation;
    const ValuationMatrix m = valuation_matrix(c);
    const DegeneracyReport report = degeneracy_report(m, c);
    const RegularityCertificate cert = regularity_check(m);
    const FactoredRationalSeries factored = poincare_factored(m, report);

    std::optional<TruncatedSeries> expansion;
    if (cfg.box) {
        const TruncationBox box = required_box(cfg, m.rows(), "series expansion");
        expansion = expand_factored(factored, box);
    }

    if (cfg.json_output) {
        Json doc;
        doc["dimension"] = c.dimension;
        doc["points"] = c.point_count();
        doc["matrix"] = m.entries;
        doc["report"] = degeneracy_to_json(report, cert);
        doc["poincare_factored"] = factored_to_json(factored);
        if (expansion) doc["expansion"] = series_to_json(*expansion);
        out << doc.dump(2) << '\n';
        return exit_code::ok;
    }

    out << "constellation: dimension " << c.dimension << ", " << c.point_count()
        << " point" << (c.point_count() == 1 ? "" : "s") << '\n';
    out << "valuation matrix:\n";
    for (const auto& row : m.entries) {
        for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
        out << '\n';
    }
    out << "distinct columns (s=" << report.distinct_columns.size() << "):";
    for (const auto& col : report.distinct_columns) out << ' ' << col.to_string();
    out << '\n';
    if (report.repeated_column)
        out << "repeated column: " << report.repeated_column->to_string() << " (k="
            << report.multiplicity_k << ")\n";
    else
        out << "repeated column: none\n";
    out << "distinct weights: " << report.distinct_weight_count << '\n';
    out << "degenerate: " << (report.degenerate ? "yes" : "no") << '\n';
    out << "regular: " << (cert.regular ? "yes" : "no") << " (elementary divisors:";
    for (const auto& d : cert.elementary_divisors) out << ' ' << d;
    out << ")\n";
    out << "poincare series: " << factored.to_text() << '\n';
    if (expansion) {
        out << "expansion:\n";
        print_series(out, *expansion);
    }
    return exit_code::ok;
}

int run_semigroup(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.input_path.empty()) throw input_error("--input is required");
    const SemigroupSpec spec = load_semigroup_like(cfg.input_path);
    const ValidationReport validation = validate(spec);
    if (!validation.ok) {
        for (const auto& issue : validation.issues) err << "error: " << issue << '\n';
        return exit_code::input;
    }
    const TruncationBox box = required_box(cfg, spec.valuation_count(), "semigroup mode");
    const TruncatedSeries push = pushforward_Q(spec, box);
    const TruncatedSeries definitional = poincare_by_definition(spec, box);
    const std::vector<MultiExponent> disagreements = push.diff(definitional);

    if (cfg.json_output) {
        Json doc;
        doc["semigroup"] = semigroup_to_json(spec);
        doc["pushforward"] = series_to_json(push);
        doc["definitional"] = series_to_json(definitional);
        Json diff = Json::array();
        for (const auto& v : disagreements) diff.push_back(exponent_to_json(v));
        doc["diff"] = std::move(diff);
        out << doc.dump(2) << '\n';
    } else {
        out << "semigroup: dimension " << spec.dimension << ", " << spec.generators.size()
            << " generators, " << spec.valuation_count() << " valuation"
            << (spec.valuation_count() == 1 ? "" : "s") << '\n';
        out << "pushforward series:\n";
        print_series(out, push);
        out << "definitional series:\n";
        print_series(out, definitional);
        if (disagreements.empty()) {
            out << "diff: empty\n";
        } else {
            out << "diff:";
            for (const auto& v : disagreements) out << ' ' << v.to_string();
            out << '\n';
        }
    }
    return disagreements.empty() ? exit_code::ok : exit_code::disagreement;
}

int run_fibers(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
    (void)err;
    if (cfg.input_path.empty()) throw input_error("--input is required");
    if (!cfg.query_v) throw input_error("--v is required for fibers mode");
    const SemigroupSpec spec = load_semigroup_like(cfg.input_path);
    require_valid(spec);
    if (cfg.query_v->size() != spec.valuation_count())
        throw input_error("--v has " + std::to_string(cfg.query_v->size()) +
                          " entries, expected " + std::to_string(spec.valuation_count()));
    const ValueVector v = *cfg.query_v;

    const SupportSet support = monomial_support(spec, v);
    const std::int64_t n_count = count_N(spec, v);
    const ChiResult chi = chi_PF(spec, v, cfg.cap);
    const bool realizable =
        !support.monomials.empty() && nu_of_support(support) == v;

    std::optional<LambdaFamily> family;
    if (realizable) family = lambda_sets(support);

    struct PairReport {
        std::int64_t a, b;
        bool no_common_min;
        bool splitting;
        std::vector<std::int64_t> witness;
    };
    std::vector<PairReport> pairs;
    if (family) {
        const std::int64_t r = static_cast<std::int64_t>(spec.valuation_count());
        for (std::int64_t a = 1; a <= r; ++a)
            for (std::int64_t b = a + 1; b <= r; ++b) {
                const SplitResult split = splitting_subset_exists(*family, a, b);
                pairs.push_back(
                    {a, b, no_common_minimum(support, a, b), split.exists, split.witness});
            }
    }

    if (cfg.json_output) {
        Json doc;
        doc["v"] = exponent_to_json(v);
        Json members = Json::array();
        for (const auto& e : support.monomials) {
            Json member;
            member["exponent"] = exponent_to_json(e.exponent);
            member["values"] = exponent_to_json(e.values);
            members.push_back(std::move(member));
        }
        doc["support"] = std::move(members);
        doc["realizable"] = realizable;
        if (family) {
            Json lambda;
            for (std::size_t j = 0; j < family->sets.size(); ++j) {
                Json set = Json::array();
                for (std::size_t i : family->sets[j])
                    set.push_back(exponent_to_json(family->monomials[i].exponent));
                lambda[std::to_string(j + 1)] = std::move(set);
            }
            doc["lambda"] = std::move(lambda);
        } else {
            doc["lambda"] = nullptr;
        }
        doc["chi_PF"] = chi.chi;
        doc["stratified"] = chi.stratified;
        doc["N"] = n_count;
        Json pair_json = Json::array();
        for (const auto& p : pairs) {
            Json entry;
            entry["a"] = p.a;
            entry["b"] = p.b;
            entry["no_common_minimum"] = p.no_common_min;
            entry["splitting"] = p.splitting;
            Json witness = Json::array();
            for (std::int64_t j : p.witness) witness.push_back(j);
            entry["witness_D"] = std::move(witness);
            pair_json.push_back(std::move(entry));
        }
        doc["pairs"] = std::move(pair_json);
        out << doc.dump(2) << '\n';
        return exit_code::ok;
    }

    out << "fiber query v = " << v.to_string() << '\n';
    out << "support (" << support.monomials.size() << " monomial"
        << (support.monomials.size() == 1 ? "" : "s") << "):\n";
    for (const auto& e : support.monomials)
        out << "  " << e.exponent.to_string() << " values " << e.values.to_string() << '\n';
    out << "realizable as a function value: " << (realizable ? "yes" : "no") << '\n';
    out << "N(v) = " << n_count << '\n';
    out << "chi_PF = " << chi.chi << (chi.stratified ? " (stratified)" : " (via N, support over cap)")
        << '\n';
    if (family) {
        out << "lambda sets:\n";
        for (std::size_t j = 0; j < family->sets.size(); ++j) {
            out << "  " << (j + 1) << ":";
            for (std::size_t i : family->sets[j])
                out << ' ' << family->monomials[i].exponent.to_string();
            out << '\n';
        }
        out << "pairs:\n";
        for (const auto& p : pairs) {
            out << "  (" << p.a << "," << p.b << "): no-common-min=" << (p.no_common_min ? "yes" : "no")
                << " splitting=" << (p.splitting ? "yes" : "no");
            if (p.splitting) {
                out << " D={";
                for (std::size_t i = 0; i < p.witness.size(); ++i)
                    out << (i ? "," : "") << p.witness[i];
                out << '}';
            }
            out << '\n';
        }
    }
    return exit_code::ok;
}

namespace {

int report_verification(const VerifyReport& report, const JobConfig& cfg, std::ostream& out,
                        bool full_run) {
    std::string replay_written;
    if (!report.ok()) {
        for (const SuiteResult& s : report.suites()) {
            if (s.replay.is_null()) continue;
            std::ofstream replay(cfg.replay_path);
            replay << s.replay.dump(2) << '\n';
            replay_written = cfg.replay_path;
            break;
        }
    }

    if (cfg.json_output) {
        Json doc;
        doc["seed"] = cfg.seed;
        Json suites = Json::array();
        for (const SuiteResult& s : report.suites()) {
            Json suite;
            suite["name"] = s.name;
            suite["checks"] = s.checks;
            suite["failures"] = s.failures;
            Json notes = Json::array();
            for (const auto& n : s.notes) notes.push_back(n);
            suite["notes"] = std::move(notes);
            suites.push_back(std::move(suite));
        }
        doc["suites"] = std::move(suites);
        doc["binomial_lambda2_exercised"] = report.binomial_lambda2_exercised;
        doc["ok"] = report.ok();
        doc["replay_written"] = replay_written.empty() ? Json(nullptr) : Json(replay_written);
        out << doc.dump(2) << '\n';
    } else {
        out << "verification seed " << cfg.seed << '\n';
        for (const SuiteResult& s : report.suites()) {
            out << (s.failures ? "FAIL " : "ok   ") << s.name << ": " << s.checks << " checks";
            if (s.failures) out << ", " << s.failures << " failures";
            out << '\n';
            for (const auto& n : s.notes) out << "     - " << n << '\n';
        }
        if (full_run)
            out << "binomial case (lambda >= 2) exercised: "
                << (report.binomial_lambda2_exercised ? "yes" : "NO") << '\n';
        out << (report.ok() ? "all suites passed" : "verification FAILED") << " ("
            << report.total_checks() << " checks, " << report.total_failures() << " failures)\n";
        if (!replay_written.empty())
            out << "replay instance written to " << replay_written << '\n';
    }
    return report.ok() ? exit_code::ok : exit_code::disagreement;
}

} // namespace

int run_verify(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
    (void)err;
    if (!cfg.input_path.empty()) {
        nlohmann::json instance;
        try {
            instance = nlohmann::json::parse(read_file(cfg.input_path));
        } catch (const nlohmann::json::exception& e) {
            throw input_error(std::string("JSON parse failure: ") + e.what());
        }
        VerifyOptions options;
        options.seed = cfg.seed;
        options.chi_cap = cfg.cap;
        const VerifyReport report = run_replay(instance, options);
        out << "replaying " << instance.at("kind").get<std::string>() << " instance (subseed "
            << instance.at("subseed").get<std::uint64_t>() << ")\n";
        return report_verification(report, cfg, out, false);
    }
    VerifyOptions options;
    options.seed = cfg.seed;
    options.chi_cap = cfg.cap;
    const VerifyReport report = run_verification(options);
    return report_verification(report, cfg, out, true);
}

int run_job(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        switch (cfg.mode) {
        case JobConfig::Mode::constellation: return run_constellation(cfg, out, err);
        case JobConfig::Mode::semigroup: return run_semigroup(cfg, out, err);
        case JobConfig::Mode::fibers: return run_fibers(cfg, out, err);
        case JobConfig::Mode::verify: return run_verify(cfg, out, err);
        }
        throw input_error("unknown mode");
    } catch (const input_error& e) {
        err << "error: " << e.what() << '\n';
        return exit_code::input;
    } catch (const resource_limit& e) {
        err << "resource limit: " << e.what() << '\n';
        return exit_code::resource;
    } catch (const structural_violation& e) {
        err << "internal assertion: " << e.what() << '\n';
        return exit_code::internal;
    }
}

} // namespace tps
