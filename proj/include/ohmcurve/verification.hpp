#ifndef OHMCURVE_VERIFICATION_HPP
#define OHMCURVE_VERIFICATION_HPP

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "ohmcurve/graph.hpp"
#include "ohmcurve/rational.hpp"

namespace ohmcurve {

// Outcome of one theorem suite over one population. violations and
// equality_witnesses hold graph6 strings, sorted and deduplicated; a suite
// passes iff violations is empty. Records are deterministic: the same inputs
// produce byte-identical JSON apart from elapsed_seconds.
struct VerificationRecord {
    std::string theorem_id;
    int n = 0;
    std::uint64_t population = 0;
    std::string population_source; // "enumeration", "stream" or "construction"
    std::vector<std::string> violations;
    std::vector<std::string> equality_witnesses;
    Rational extremal_value;
    double elapsed_seconds = 0.0;
    bool pass() const { return violations.empty(); }
};

nlohmann::ordered_json record_to_json(const VerificationRecord& record,
                                      bool include_elapsed = true);

struct SweepOptions {
    // Default mode screens every graph with the floating-point kernel and
    // recomputes exactly whenever a value lands within 1e-6 of a decision
    // boundary; exact_only skips the screen. Both modes yield identical
    // records.
    bool exact_only = false;
    // 1 runs the serial reference sweep; 0 uses all hardware threads; any
    // other value sets the thread count for the chunked parallel sweep.
    int jobs = 0;
};

// Each suite sweeps every labeled graph on n vertices (3 <= n <=
// enumeration_cap()) or, in the overloads taking a population vector, exactly
// the graphs supplied.
//
//   eccentricity_bound                max_u Omega(u) <= (n^2-1)/6 on
//                                     2-connected graphs, equality only for
//                                     cycles; extremal_value is the largest
//                                     eccentricity seen.
//   constant_curvature_two_connected  resistance-regular => 2-connected, over
//                                     connected graphs; extremal_value is the
//                                     least constant curvature among
//                                     resistance-regular graphs, witnesses
//                                     attain it.
//   curvature_sandwich                6/(n^2-1) <= K_G <= n/(2n-2) on
//                                     resistance-regular graphs, equalities
//                                     only for C_n / K_n, plus the coarse
//                                     bound K_G > 1/(n(n-1)); extremal_value
//                                     is the least K_G, witnesses attain
//                                     either end.
//   kirchhoff_sandwich                n-1 <= Kf on connected graphs (equality
//                                     only K_n) and Kf <= (n^3-n)/12 on
//                                     2-connected graphs (equality only C_n);
//                                     extremal_value is the largest Kf among
//                                     2-connected graphs, witnesses attain
//                                     either end.
VerificationRecord verify_eccentricity_bound(int n, const SweepOptions& options = {});
VerificationRecord verify_constant_curvature_two_connected(int n,
                                                           const SweepOptions& options = {});
VerificationRecord verify_curvature_sandwich(int n, const SweepOptions& options = {});
VerificationRecord verify_kirchhoff_sandwich(int n, const SweepOptions& options = {});

VerificationRecord verify_eccentricity_bound(const std::vector<Graph>& population, int n,
                                             const SweepOptions& options = {});
VerificationRecord verify_constant_curvature_two_connected(const std::vector<Graph>& population,
                                                           int n,
                                                           const SweepOptions& options = {});
VerificationRecord verify_curvature_sandwich(const std::vector<Graph>& population, int n,
                                             const SweepOptions& options = {});
VerificationRecord verify_kirchhoff_sandwich(const std::vector<Graph>& population, int n,
                                             const SweepOptions& options = {});

// analyze(C_n) and analyze(K_n) must reproduce the closed forms exactly for
// every n in 3..n_max. population_source is "construction"; extremal_value
// is 1 when every family member matched and 0 otherwise.
VerificationRecord verify_closed_forms(int n_max);

enum class Suite { eccentricity, two_connected, curvature, kirchhoff, closed_forms };

// CLI spellings: eccentricity, two-connected, curvature, kirchhoff,
// closed-forms, all. Throws std::invalid_argument on anything else.
std::vector<Suite> expand_suites(std::string_view name);
std::string_view suite_name(Suite suite);

struct SuiteRequest {
    std::vector<Suite> suites;
    int n_lo = 3;
    int n_hi = 7;
    // When set, suites run over these graphs (grouped by order) instead of
    // enumerating; closed_forms is skipped with a warning.
    std::optional<std::vector<Graph>> stream;
    SweepOptions options;
};

// Runs suites in request order, n ascending within each; emits one record per
// (suite, n). Skipped combinations (n < 3, or closed_forms in stream mode)
// are reported to *warnings when given. on_record, when set, is invoked as
// each record completes, ahead of the collected return value.
std::vector<VerificationRecord> run_suites(
    const SuiteRequest& request, std::ostream* warnings = nullptr,
    const std::function<void(const VerificationRecord&)>& on_record = nullptr);

} // namespace ohmcurve

#endif
