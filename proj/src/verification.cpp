#include "ohmcurve/verification.hpp"

#include <algorithm>
#include <chrono>
#include <map>
#include <ostream>
#include <stdexcept>
#include <utility>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "ohmcurve/enumeration.hpp"
#include "ohmcurve/graph6.hpp"
#include "ohmcurve/resistance.hpp"

namespace ohmcurve {
namespace {

// The float kernel is good to ~1e-9 on graphs this small; anything within
// kMargin of a decision boundary is recomputed exactly, so screened sweeps
// and exact-only sweeps produce identical records.
constexpr double kMargin = 1e-6;
constexpr std::size_t kPruneThreshold = 4096;
constexpr std::uint64_t kChunkMasks = std::uint64_t{1} << 14;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    }
};

void sort_unique(std::vector<std::string>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
}

void append(std::vector<std::string>& into, std::vector<std::string>&& from) {
    into.insert(into.end(), std::make_move_iterator(from.begin()),
                std::make_move_iterator(from.end()));
}

VerificationRecord assemble(std::string theorem_id, int n, std::uint64_t population,
                            std::string source, std::vector<std::string> violations,
                            std::vector<std::string> witnesses, Rational extremal,
                            double elapsed) {
    VerificationRecord rec;
    rec.theorem_id = std::move(theorem_id);
    rec.n = n;
    rec.population = population;
    rec.population_source = std::move(source);
    sort_unique(violations);
    sort_unique(witnesses);
    rec.violations = std::move(violations);
    rec.equality_witnesses = std::move(witnesses);
    rec.extremal_value = std::move(extremal);
    rec.elapsed_seconds = elapsed;
    return rec;
}

// --- suite accumulators ----------------------------------------------------
//
// One accumulator instance per chunk; chunks merge in index order, so sweeps
// are deterministic. Screening buffers candidate graphs and defers the exact
// arithmetic to finalize(); the buffered set may depend on chunk boundaries,
// but it always contains every graph whose exact value could influence the
// record, so the finalized record does not.

// max_u Omega(u) <= (n^2-1)/6 over 2-connected graphs, equality iff C_n.
struct EccAcc {
    Rational bound;
    double bound_f;
    std::uint64_t population = 0;
    std::vector<std::string> violations, witnesses;
    Rational extremal{0};
    bool extremal_set = false;
    double float_best = 0;
    struct Cand {
        Graph g;
        double value;
    };
    std::vector<Cand> cands;

    explicit EccAcc(int n)
        : bound(static_cast<long>(n) * n - 1, 6), bound_f(bound.to_double()) {}

    void consider(const Graph& g, bool exact_only) {
        if (!is_two_connected(g)) return;
        ++population;
        if (exact_only) {
            apply_exact(g);
            return;
        }
        const FloatSummary fs = float_resistance_summary(g);
        const double m = fs.ecc_max;
        // float_best starts at 0 < any eccentricity, so the first 2-connected
        // graph is always buffered and the running maximum never escapes.
        if (m > bound_f - kMargin || m > float_best - kMargin) {
            cands.push_back({g, m});
            if (m > float_best) float_best = m;
            prune();
        }
    }

    void apply_exact(const Graph& g) {
        const ExactSummary s = exact_resistance_summary(g);
        const Rational me = *std::max_element(s.ecc.begin(), s.ecc.end());
        if (me > bound) violations.push_back(encode_graph6(g));
        if (me == bound) {
            witnesses.push_back(encode_graph6(g));
            if (!classify(g).is_cycle) violations.push_back(encode_graph6(g));
        }
        if (!extremal_set || me > extremal) {
            extremal = me;
            extremal_set = true;
        }
    }

    void prune() {
        if (cands.size() < kPruneThreshold) return;
        std::erase_if(cands, [&](const Cand& c) {
            return c.value <= bound_f - kMargin && c.value <= float_best - kMargin;
        });
    }

    void merge(EccAcc&& o) {
        population += o.population;
        append(violations, std::move(o.violations));
        append(witnesses, std::move(o.witnesses));
        if (o.extremal_set && (!extremal_set || o.extremal > extremal)) {
            extremal = o.extremal;
            extremal_set = true;
        }
        float_best = std::max(float_best, o.float_best);
        cands.insert(cands.end(), std::make_move_iterator(o.cands.begin()),
                     std::make_move_iterator(o.cands.end()));
        prune();
    }

    VerificationRecord finalize(int n, std::string source, double elapsed) {
        for (const Cand& c : cands) apply_exact(c.g);
        cands.clear();
        return assemble("eccentricity_bound", n, population, std::move(source),
                        std::move(violations), std::move(witnesses),
                        extremal_set ? extremal : Rational(0), elapsed);
    }
};

// resistance-regular => 2-connected, over connected graphs.
struct RegAcc {
    std::uint64_t population = 0;
    std::vector<std::string> violations, witnesses;
    Rational min_k{0};
    bool min_set = false;
    std::vector<Graph> cands;

    explicit RegAcc(int) {}

    void consider(const Graph& g, bool exact_only) {
        if (!is_connected(g)) return;
        ++population;
        if (exact_only) {
            apply_exact(g);
            return;
        }
        const FloatSummary fs = float_resistance_summary(g);
        if (fs.ecc_max - fs.ecc_min < kMargin) cands.push_back(g);
    }

    void apply_exact(const Graph& g) {
        const ExactSummary s = exact_resistance_summary(g);
        if (!s.regular) return;
        if (!is_two_connected(g)) violations.push_back(encode_graph6(g));
        const Rational k = s.ecc.front().reciprocal();
        if (!min_set || k < min_k) {
            min_k = k;
            min_set = true;
            witnesses.clear();
            witnesses.push_back(encode_graph6(g));
        } else if (k == min_k) {
            witnesses.push_back(encode_graph6(g));
        }
    }

    void merge(RegAcc&& o) {
        population += o.population;
        append(violations, std::move(o.violations));
        if (o.min_set) {
            if (!min_set || o.min_k < min_k) {
                min_k = o.min_k;
                min_set = true;
                witnesses = std::move(o.witnesses);
            } else if (o.min_k == min_k) {
                append(witnesses, std::move(o.witnesses));
            }
        }
        cands.insert(cands.end(), std::make_move_iterator(o.cands.begin()),
                     std::make_move_iterator(o.cands.end()));
    }

    VerificationRecord finalize(int n, std::string source, double elapsed) {
        for (const Graph& g : cands) apply_exact(g);
        cands.clear();
        return assemble("constant_curvature_two_connected", n, population, std::move(source),
                        std::move(violations), std::move(witnesses),
                        min_set ? min_k : Rational(0), elapsed);
    }
};

// 6/(n^2-1) <= K_G <= n/(2n-2) over resistance-regular graphs, equalities iff
// C_n / K_n, plus the coarse bound K_G > 1/(n(n-1)).
struct CurvAcc {
    Rational lower, upper, coarse;
    std::uint64_t population = 0;
    std::vector<std::string> violations, witnesses;
    Rational min_k{0};
    bool min_set = false;
    std::vector<Graph> cands;

    explicit CurvAcc(int n)
        : lower(6, static_cast<long>(n) * n - 1),
          upper(n, 2 * n - 2),
          coarse(1, static_cast<long>(n) * (n - 1)) {}

    void consider(const Graph& g, bool exact_only) {
        if (!is_connected(g)) return;
        if (exact_only) {
            apply_exact(g);
            return;
        }
        const FloatSummary fs = float_resistance_summary(g);
        if (fs.ecc_max - fs.ecc_min < kMargin) cands.push_back(g);
    }

    void apply_exact(const Graph& g) {
        const ExactSummary s = exact_resistance_summary(g);
        if (!s.regular) return;
        ++population;
        const Rational k = s.ecc.front().reciprocal();
        if (k < lower || k > upper || k <= coarse) violations.push_back(encode_graph6(g));
        const Classification cls = classify(g);
        if (k == lower) {
            witnesses.push_back(encode_graph6(g));
            if (!cls.is_cycle) violations.push_back(encode_graph6(g));
        }
        if (k == upper) {
            witnesses.push_back(encode_graph6(g));
            if (!cls.is_complete) violations.push_back(encode_graph6(g));
        }
        if (!min_set || k < min_k) {
            min_k = k;
            min_set = true;
        }
    }

    void merge(CurvAcc&& o) {
        population += o.population;
        append(violations, std::move(o.violations));
        append(witnesses, std::move(o.witnesses));
        if (o.min_set && (!min_set || o.min_k < min_k)) {
            min_k = o.min_k;
            min_set = true;
        }
        cands.insert(cands.end(), std::make_move_iterator(o.cands.begin()),
                     std::make_move_iterator(o.cands.end()));
    }

    VerificationRecord finalize(int n, std::string source, double elapsed) {
        for (const Graph& g : cands) apply_exact(g);
        cands.clear();
        return assemble("curvature_sandwich", n, population, std::move(source),
                        std::move(violations), std::move(witnesses),
                        min_set ? min_k : Rational(0), elapsed);
    }
};

// n-1 <= Kf over connected graphs (equality iff K_n) and Kf <= (n^3-n)/12
// over 2-connected graphs (equality iff C_n).
struct KfAcc {
    Rational low, high;
    double low_f, high_f;
    std::uint64_t population = 0;
    std::vector<std::string> violations, witnesses;
    Rational max_kf{0};
    bool max_set = false;
    double float_best = 0;
    bool float_best_set = false;
    struct Cand {
        Graph g;
        double kf;
        bool two_conn;
    };
    std::vector<Cand> cands;

    explicit KfAcc(int n)
        : low(n - 1),
          high(static_cast<long>(n) * n * n - n, 12),
          low_f(low.to_double()),
          high_f(high.to_double()) {}

    void consider(const Graph& g, bool exact_only) {
        if (!is_connected(g)) return;
        ++population;
        const bool tc = is_two_connected(g);
        if (exact_only) {
            apply_exact(g, tc);
            return;
        }
        const FloatSummary fs = float_resistance_summary(g);
        const bool near_regular = fs.ecc_max - fs.ecc_min < kMargin;
        const bool cand = fs.kf < low_f + kMargin ||
                          (tc && (fs.kf > high_f - kMargin || !float_best_set ||
                                  fs.kf > float_best - kMargin)) ||
                          (near_regular && fs.kf > high_f - kMargin);
        if (cand) {
            cands.push_back({g, fs.kf, tc});
            if (tc && (!float_best_set || fs.kf > float_best)) {
                float_best = fs.kf;
                float_best_set = true;
            }
            prune();
        }
    }

    void apply_exact(const Graph& g, bool tc) {
        const ExactSummary s = exact_resistance_summary(g);
        if (s.kf < low) violations.push_back(encode_graph6(g));
        if (s.kf == low) {
            witnesses.push_back(encode_graph6(g));
            if (!classify(g).is_complete) violations.push_back(encode_graph6(g));
        }
        if (tc) {
            if (s.kf > high) violations.push_back(encode_graph6(g));
            if (s.kf == high) {
                witnesses.push_back(encode_graph6(g));
                if (!classify(g).is_cycle) violations.push_back(encode_graph6(g));
            }
            if (!max_set || s.kf > max_kf) {
                max_kf = s.kf;
                max_set = true;
            }
        } else if (s.regular && s.kf > high) {
            violations.push_back(encode_graph6(g));
        }
    }

    void prune() {
        if (cands.size() < kPruneThreshold) return;
        std::erase_if(cands, [&](const Cand& c) {
            if (c.kf < low_f + kMargin || c.kf > high_f - kMargin) return false;
            return !(c.two_conn && (!float_best_set || c.kf > float_best - kMargin));
        });
    }

    void merge(KfAcc&& o) {
        population += o.population;
        append(violations, std::move(o.violations));
        append(witnesses, std::move(o.witnesses));
        if (o.max_set && (!max_set || o.max_kf > max_kf)) {
            max_kf = o.max_kf;
            max_set = true;
        }
        if (o.float_best_set && (!float_best_set || o.float_best > float_best)) {
            float_best = o.float_best;
            float_best_set = true;
        }
        cands.insert(cands.end(), std::make_move_iterator(o.cands.begin()),
                     std::make_move_iterator(o.cands.end()));
        prune();
    }

    VerificationRecord finalize(int n, std::string source, double elapsed) {
        for (const Cand& c : cands) apply_exact(c.g, c.two_conn);
        cands.clear();
        return assemble("kirchhoff_sandwich", n, population, std::move(source),
                        std::move(violations), std::move(witnesses),
                        max_set ? max_kf : Rational(0), elapsed);
    }
};

// --- sweep drivers ----------------------------------------------------------

int default_threads() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void check_enumeration_order(int n) {
    if (n < 3)
        throw std::invalid_argument("verification suites need n >= 3, got n = " +
                                    std::to_string(n));
    const int cap = enumeration_cap();
    if (n > cap)
        throw std::invalid_argument(
            "n = " + std::to_string(n) + " exceeds the enumeration cap of " +
            std::to_string(cap) +
            "; raise OHMCURVE_CAP (max " + std::to_string(kMaxEnumerationCap) +
            ") or supply an explicit graph stream");
}

template <class Acc>
void sweep_all_masks(int n, const SweepOptions& options, Acc& acc) {
    const std::uint64_t total = labeled_graph_count(n);
    if (options.jobs == 1) {
        // Serial reference path: one accumulator, masks in increasing order.
        for (std::uint64_t mask = 0; mask < total; ++mask)
            acc.consider(graph_from_mask(n, mask), options.exact_only);
        return;
    }
    const std::uint64_t nchunks = (total + kChunkMasks - 1) / kChunkMasks;
    std::vector<Acc> parts(static_cast<std::size_t>(nchunks), acc);
    [[maybe_unused]] const int threads =
        options.jobs == 0 ? default_threads() : options.jobs;
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(threads)
#endif
    for (long long c = 0; c < static_cast<long long>(nchunks); ++c) {
        Acc& part = parts[static_cast<std::size_t>(c)];
        const std::uint64_t lo = static_cast<std::uint64_t>(c) * kChunkMasks;
        const std::uint64_t hi = std::min(total, lo + kChunkMasks);
        for (std::uint64_t mask = lo; mask < hi; ++mask)
            part.consider(graph_from_mask(n, mask), options.exact_only);
    }
    for (Acc& part : parts) acc.merge(std::move(part));
}

template <class Acc>
VerificationRecord run_enumeration(int n, const SweepOptions& options) {
    check_enumeration_order(n);
    const Timer timer;
    Acc acc(n);
    sweep_all_masks(n, options, acc);
    return acc.finalize(n, "enumeration", timer.seconds());
}

template <class Acc>
VerificationRecord run_stream(const std::vector<Graph>& population, int n,
                              const SweepOptions& options) {
    if (n < 3)
        throw std::invalid_argument("verification suites need n >= 3, got n = " +
                                    std::to_string(n));
    const Timer timer;
    Acc acc(n);
    for (const Graph& g : population) {
        if (g.vertex_count() != n)
            throw std::invalid_argument("stream population mixes graph orders");
        acc.consider(g, options.exact_only);
    }
    return acc.finalize(n, "stream", timer.seconds());
}

} // namespace

nlohmann::ordered_json record_to_json(const VerificationRecord& record, bool include_elapsed) {
    nlohmann::ordered_json j;
    j["theorem_id"] = record.theorem_id;
    j["n"] = record.n;
    j["population"] = record.population;
    j["population_source"] = record.population_source;
    j["violations"] = record.violations;
    j["equality_witnesses"] = record.equality_witnesses;
    j["extremal_value"] = record.extremal_value.str();
    if (include_elapsed) j["elapsed_seconds"] = record.elapsed_seconds;
    return j;
}

VerificationRecord verify_eccentricity_bound(int n, const SweepOptions& options) {
    return run_enumeration<EccAcc>(n, options);
}
VerificationRecord verify_constant_curvature_two_connected(int n, const SweepOptions& options) {
    return run_enumeration<RegAcc>(n, options);
}
VerificationRecord verify_curvature_sandwich(int n, const SweepOptions& options) {
    return run_enumeration<CurvAcc>(n, options);
}
VerificationRecord verify_kirchhoff_sandwich(int n, const SweepOptions& options) {
    return run_enumeration<KfAcc>(n, options);
}

VerificationRecord verify_eccentricity_bound(const std::vector<Graph>& population, int n,
                                             const SweepOptions& options) {
    return run_stream<EccAcc>(population, n, options);
}
VerificationRecord verify_constant_curvature_two_connected(const std::vector<Graph>& population,
                                                           int n, const SweepOptions& options) {
    return run_stream<RegAcc>(population, n, options);
}
VerificationRecord verify_curvature_sandwich(const std::vector<Graph>& population, int n,
                                             const SweepOptions& options) {
    return run_stream<CurvAcc>(population, n, options);
}
VerificationRecord verify_kirchhoff_sandwich(const std::vector<Graph>& population, int n,
                                             const SweepOptions& options) {
    return run_stream<KfAcc>(population, n, options);
}

VerificationRecord verify_closed_forms(int n_max) {
    if (n_max < 3)
        throw std::invalid_argument("verify_closed_forms: n_max must be at least 3");
    const Timer timer;
    std::vector<std::string> violations;
    for (int n = 3; n <= n_max; ++n) {
        const Graph cycle = cycle_graph(n);
        const ResistanceReport rep = analyze(cycle);
        const CycleClosedForms f = cycle_closed_forms(n);
        bool ok = rep.resistance_regular && rep.kf == f.kirchhoff &&
                  rep.constant_curvature && *rep.constant_curvature == f.curvature;
        for (int u = 0; ok && u < n; ++u) {
            if (rep.ecc[static_cast<std::size_t>(u)] != f.eccentricity) ok = false;
            for (int v = 0; ok && v < n; ++v) {
                const int gap = u < v ? v - u : u - v;
                const int dist = std::min(gap, n - gap);
                if (rep.r(u, v) != f.pair_resistance(dist)) ok = false;
            }
        }
        if (!ok) violations.push_back(encode_graph6(cycle));

        const Graph complete = complete_graph(n);
        const ResistanceReport repk = analyze(complete);
        const CompleteClosedForms fk = complete_closed_forms(n);
        ok = repk.resistance_regular && repk.kf == fk.kirchhoff &&
             repk.constant_curvature && *repk.constant_curvature == fk.curvature;
        for (int u = 0; ok && u < n; ++u)
            for (int v = 0; ok && v < n; ++v)
                if (u != v && repk.r(u, v) != fk.pair_resistance) ok = false;
        if (!ok) violations.push_back(encode_graph6(complete));
    }
    const Rational all_matched(violations.empty() ? 1 : 0);
    return assemble("closed_forms", n_max, 2 * static_cast<std::uint64_t>(n_max - 2),
                    "construction", std::move(violations), {}, all_matched, timer.seconds());
}

std::vector<Suite> expand_suites(std::string_view name) {
    if (name == "all")
        return {Suite::eccentricity, Suite::two_connected, Suite::curvature, Suite::kirchhoff,
                Suite::closed_forms};
    if (name == "eccentricity") return {Suite::eccentricity};
    if (name == "two-connected") return {Suite::two_connected};
    if (name == "curvature") return {Suite::curvature};
    if (name == "kirchhoff") return {Suite::kirchhoff};
    if (name == "closed-forms") return {Suite::closed_forms};
    throw std::invalid_argument(
        "unknown suite '" + std::string(name) +
        "' (expected eccentricity, two-connected, curvature, kirchhoff, closed-forms or all)");
}

std::string_view suite_name(Suite suite) {
    switch (suite) {
        case Suite::eccentricity: return "eccentricity";
        case Suite::two_connected: return "two-connected";
        case Suite::curvature: return "curvature";
        case Suite::kirchhoff: return "kirchhoff";
        case Suite::closed_forms: return "closed-forms";
    }
    return "?";
}

std::vector<VerificationRecord> run_suites(
    const SuiteRequest& request, std::ostream* warnings,
    const std::function<void(const VerificationRecord&)>& on_record) {
    const auto warn = [&](const std::string& msg) {
        if (warnings) *warnings << "warning: " << msg << '\n';
    };
    std::vector<VerificationRecord> out;
    const auto emit = [&](VerificationRecord record) {
        if (on_record) on_record(record);
        out.push_back(std::move(record));
    };
    if (request.stream) {
        std::map<int, std::vector<Graph>> by_order;
        std::size_t skipped = 0;
        for (const Graph& g : *request.stream) {
            if (g.vertex_count() < 3) {
                ++skipped;
                continue;
            }
            by_order[g.vertex_count()].push_back(g);
        }
        if (skipped > 0)
            warn(std::to_string(skipped) +
                 " streamed graph(s) on fewer than 3 vertices skipped");
        for (const Suite suite : request.suites) {
            if (suite == Suite::closed_forms) {
                warn("closed-forms verifies constructed families and ignores streamed graphs");
                continue;
            }
            for (const auto& [n, graphs] : by_order) {
                switch (suite) {
                    case Suite::eccentricity:
                        emit(verify_eccentricity_bound(graphs, n, request.options));
                        break;
                    case Suite::two_connected:
                        emit(verify_constant_curvature_two_connected(graphs, n, request.options));
                        break;
                    case Suite::curvature:
                        emit(verify_curvature_sandwich(graphs, n, request.options));
                        break;
                    case Suite::kirchhoff:
                        emit(verify_kirchhoff_sandwich(graphs, n, request.options));
                        break;
                    case Suite::closed_forms: break;
                }
            }
        }
        return out;
    }
    if (request.n_lo > request.n_hi)
        throw std::invalid_argument("run_suites: empty order range");
    for (const Suite suite : request.suites) {
        if (suite == Suite::closed_forms) {
            if (request.n_hi < 3) {
                warn("closed-forms skipped: needs n >= 3");
                continue;
            }
            emit(verify_closed_forms(request.n_hi));
            continue;
        }
        for (int n = request.n_lo; n <= request.n_hi; ++n) {
            if (n < 3) {
                warn("suite " + std::string(suite_name(suite)) + " skipped for n = " +
                     std::to_string(n) + " (needs n >= 3)");
                continue;
            }
            switch (suite) {
                case Suite::eccentricity:
                    emit(verify_eccentricity_bound(n, request.options));
                    break;
                case Suite::two_connected:
                    emit(verify_constant_curvature_two_connected(n, request.options));
                    break;
                case Suite::curvature:
                    emit(verify_curvature_sandwich(n, request.options));
                    break;
                case Suite::kirchhoff:
                    emit(verify_kirchhoff_sandwich(n, request.options));
                    break;
                case Suite::closed_forms: break;
            }
        }
    }
    return out;
}

} // namespace ohmcurve
