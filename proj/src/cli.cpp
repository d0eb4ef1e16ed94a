#include "ohmcurve/cli.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <memory>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ohmcurve/enumeration.hpp"
#include "ohmcurve/errors.hpp"
#include "ohmcurve/graph6.hpp"
#include "ohmcurve/resistance.hpp"
#include "ohmcurve/verification.hpp"

namespace ohmcurve {
namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

struct OrderRange {
    int lo = 0;
    int hi = 0;
};

// "N" or "A..B".
OrderRange parse_order_range(const std::string& text) {
    const auto parse_int = [&](std::string_view part) {
        int value = 0;
        const auto [ptr, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
        if (ec != std::errc() || ptr != part.data() + part.size())
            throw std::invalid_argument("--n: expected an integer or A..B range, got '" + text +
                                        "'");
        return value;
    };
    const std::size_t dots = text.find("..");
    OrderRange r;
    if (dots == std::string::npos) {
        r.lo = r.hi = parse_int(text);
        return r;
    }
    r.lo = parse_int(std::string_view(text).substr(0, dots));
    r.hi = parse_int(std::string_view(text).substr(dots + 2));
    if (r.lo > r.hi)
        throw std::invalid_argument("--n: empty range '" + text + "'");
    return r;
}

// Resolves INPUT/--output against stdin/stdout; keeps file streams alive.
struct IoStreams {
    std::istream* in = nullptr;
    std::ostream* out = nullptr;
    std::ifstream in_file;
    std::ofstream out_file;

    void open_input(const std::string& path, std::istream& fallback) {
        if (path.empty() || path == "-") {
            in = &fallback;
            return;
        }
        in_file.open(path);
        if (!in_file)
            throw std::invalid_argument("cannot open input file: " + path);
        in = &in_file;
    }

    void open_output(const std::string& path, std::ostream& fallback) {
        if (path.empty() || path == "-") {
            out = &fallback;
            return;
        }
        out_file.open(path);
        if (!out_file)
            throw std::invalid_argument("cannot open output file: " + path);
        out = &out_file;
    }
};

int cmd_analyze(const std::string& input, const std::string& format, const std::string& output,
                std::istream& fallback_in, std::ostream& fallback_out, std::ostream& err) {
    IoStreams io;
    io.open_input(input, fallback_in);
    io.open_output(output, fallback_out);
    if (format == "edgelist") {
        std::ostringstream buffer;
        buffer << io.in->rdbuf();
        const std::string text = buffer.str();
        if (std::all_of(text.begin(), text.end(),
                        [](unsigned char c) { return std::isspace(c) != 0; }))
            return kExitOk;
        const Graph g = parse_edge_list(text);
        *io.out << report_to_json(analyze(g)).dump() << '\n';
        return kExitOk;
    }
    Graph6LineStream stream(*io.in);
    while (true) {
        std::optional<Graph> g;
        try {
            g = stream.next();
            if (!g) break;
            *io.out << report_to_json(analyze(*g)).dump() << '\n';
        } catch (const std::exception& e) {
            err << "error: line " << stream.line_number() << ": " << e.what() << '\n';
            return kExitUsage;
        }
    }
    return kExitOk;
}

int cmd_verify(const std::string& input, const std::string& suite, const std::string& n_text,
               bool exact_only, int jobs, const std::string& output, std::istream& fallback_in,
               std::ostream& fallback_out, std::ostream& err) {
    SuiteRequest req;
    req.suites = expand_suites(suite);
    req.options.exact_only = exact_only;
    req.options.jobs = jobs;
    const bool have_stream = !input.empty();
    if (have_stream) {
        if (!n_text.empty())
            err << "warning: --n is ignored when a graph stream is supplied\n";
        IoStreams io;
        io.open_input(input, fallback_in);
        std::vector<Graph> graphs;
        Graph6LineStream stream(*io.in);
        while (auto g = stream.next()) graphs.push_back(std::move(*g));
        if (graphs.empty()) err << "warning: graph stream is empty; nothing to verify\n";
        req.stream = std::move(graphs);
    } else {
        if (n_text.empty())
            throw std::invalid_argument(
                "verify needs --n N (or A..B) to enumerate, or a graph6 stream as INPUT");
        const OrderRange range = parse_order_range(n_text);
        req.n_lo = range.lo;
        req.n_hi = range.hi;
    }
    IoStreams io;
    io.open_output(output, fallback_out);
    bool all_pass = true;
    run_suites(req, &err, [&](const VerificationRecord& rec) {
        *io.out << record_to_json(rec).dump() << '\n';
        io.out->flush();
        all_pass = all_pass && rec.pass();
    });
    return all_pass ? kExitOk : kExitViolation;
}

int cmd_enumerate(const std::string& n_text, const std::string& filter_name,
                  const std::string& output, std::ostream& fallback_out) {
    const OrderRange range = parse_order_range(n_text);
    if (range.lo != range.hi)
        throw std::invalid_argument("enumerate takes a single order, not a range");
    GraphFilter filter;
    if (filter_name == "connected")
        filter.connectivity = Connectivity::connected;
    else if (filter_name == "two_connected")
        filter.connectivity = Connectivity::two_connected;
    else if (filter_name != "any")
        throw std::invalid_argument("--filter: expected any, connected or two_connected");
    IoStreams io;
    io.open_output(output, fallback_out);
    LabeledGraphStream stream(range.lo, filter);
    while (auto g = stream.next()) *io.out << encode_graph6(*g) << '\n';
    return kExitOk;
}

int cmd_closed_forms(const std::string& n_text, const std::string& output,
                     std::ostream& fallback_out) {
    const OrderRange range = parse_order_range(n_text);
    IoStreams io;
    io.open_output(output, fallback_out);
    const VerificationRecord rec = verify_closed_forms(range.hi);
    *io.out << record_to_json(rec).dump() << '\n';
    return rec.pass() ? kExitOk : kExitViolation;
}

} // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
            std::ostream& err) {
    CLI::App app{"ohmcurve: exact resistance distances, Kirchhoff index and resistance "
                 "curvature, with exhaustive extremal-theorem verification"};
    app.require_subcommand(1);

    std::string input, output, format = "graph6", suite = "all", n_text, filter = "any";
    bool exact_only = false;
    int jobs = 0;

    CLI::App* analyze_cmd = app.add_subcommand(
        "analyze", "Emit one JSON resistance report per input graph (NDJSON)");
    analyze_cmd->add_option("INPUT", input, "input path; '-' or omitted reads stdin");
    analyze_cmd->add_option("--format", format, "input format")
        ->check(CLI::IsMember({"graph6", "edgelist"}))
        ->capture_default_str();
    analyze_cmd->add_option("--output", output, "write to PATH instead of stdout");

    CLI::App* verify_cmd = app.add_subcommand(
        "verify", "Run theorem suites over enumerated or streamed graphs (NDJSON records)");
    verify_cmd->add_option("INPUT", input,
                           "optional graph6 stream as the population; '-' reads stdin");
    verify_cmd->add_option("--suite", suite,
                           "eccentricity, two-connected, curvature, kirchhoff, closed-forms "
                           "or all")
        ->capture_default_str();
    verify_cmd->add_option("--n", n_text, "order N or range A..B to enumerate");
    verify_cmd->add_flag("--exact-only", exact_only,
                         "skip the float screen; compute every graph exactly");
    verify_cmd->add_option("--jobs", jobs,
                           "worker threads (0 = hardware default, 1 = serial reference)")
        ->capture_default_str();
    verify_cmd->add_option("--output", output, "write to PATH instead of stdout");

    CLI::App* enumerate_cmd =
        app.add_subcommand("enumerate", "Emit labeled graphs on n vertices as graph6 lines");
    enumerate_cmd->add_option("--n", n_text, "graph order")->required();
    enumerate_cmd->add_option("--filter", filter, "any, connected or two_connected")
        ->capture_default_str();
    enumerate_cmd->add_option("--output", output, "write to PATH instead of stdout");

    CLI::App* closed_cmd = app.add_subcommand(
        "closed-forms", "Check analyze(C_n)/analyze(K_n) against the closed forms up to n");
    closed_cmd->add_option("--n", n_text, "largest order to check (N or A..B uses B)")
        ->capture_default_str();
    closed_cmd->add_option("--output", output, "write to PATH instead of stdout");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*analyze_cmd) return cmd_analyze(input, format, output, in, out, err);
        if (*verify_cmd)
            return cmd_verify(input, suite, n_text, exact_only, jobs, output, in, out, err);
        if (*enumerate_cmd) return cmd_enumerate(n_text, filter, output, out);
        if (*closed_cmd)
            return cmd_closed_forms(n_text.empty() ? "50" : n_text, output, out);
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

} // namespace ohmcurve
