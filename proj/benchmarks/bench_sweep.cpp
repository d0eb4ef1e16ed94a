// Timings for the three implementation choices that matter: serial vs
// chunked sweeps, float screening vs exact-only, and the per-graph kernels.
#include <chrono>
#include <cstdint>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <string>
#include <vector>

#include "ohmcurve/enumeration.hpp"
#include "ohmcurve/graph.hpp"
#include "ohmcurve/resistance.hpp"
#include "ohmcurve/verification.hpp"

using namespace ohmcurve;

namespace {

double seconds(const std::function<void()>& fn) {
    const auto start = std::chrono::steady_clock::now();
    fn();
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

void row(const std::string& label, double secs, double baseline) {
    std::cout << "  " << std::left << std::setw(34) << label << std::right << std::setw(9)
              << std::fixed << std::setprecision(3) << secs << " s";
    if (baseline > 0.0)
        std::cout << "   (" << std::setprecision(2) << baseline / secs << "x vs baseline)";
    std::cout << '\n';
}

} // namespace

int main(int argc, char** argv) {
    const int n = argc > 1 ? std::stoi(argv[1]) : 6;
    std::cout << "sweep: kirchhoff_sandwich over all labeled graphs, n = " << n << '\n';

    const double serial_exact =
        seconds([&] { verify_kirchhoff_sandwich(n, {true, 1}); });
    row("serial, exact-only (baseline)", serial_exact, 0.0);
    row("serial, screened", seconds([&] { verify_kirchhoff_sandwich(n, {false, 1}); }),
        serial_exact);
    row("chunked, exact-only", seconds([&] { verify_kirchhoff_sandwich(n, {true, 0}); }),
        serial_exact);
    row("chunked, screened", seconds([&] { verify_kirchhoff_sandwich(n, {false, 0}); }),
        serial_exact);

    std::cout << "\nper-graph kernels, random connected graphs, n = 10\n";
    std::mt19937 rng(7);
    std::vector<Graph> graphs;
    for (int k = 0; k < 200; ++k) {
        Graph g(10);
        for (int v = 1; v < 10; ++v) g.add_edge(v, static_cast<int>(rng() % v));
        for (int e = 0; e < 8; ++e) {
            const int u = static_cast<int>(rng() % 10), v = static_cast<int>(rng() % 10);
            if (u != v && !g.has_edge(u, v)) g.add_edge(u, v);
        }
        graphs.push_back(std::move(g));
    }
    const double exact = seconds([&] {
        for (const Graph& g : graphs) exact_resistance_summary(g);
    });
    row("exact summaries, 200 graphs", exact, 0.0);
    row("float summaries, 200 graphs", seconds([&] {
            for (const Graph& g : graphs) float_resistance_summary(g);
        }),
        exact);
    return 0;
}
