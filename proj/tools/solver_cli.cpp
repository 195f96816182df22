#include <cstdlib>
#include <iostream>

#include "CLI11.hpp"
#include "trichain/harness.hpp"

namespace {

using namespace trichain;

unsigned threadsDefault() {
    if (const char* env = std::getenv("SOLVER_THREADS")) {
        try {
            const int n = std::stoi(env);
            if (n >= 1) return static_cast<unsigned>(n);
        } catch (...) {
            // fall through to the hardware default
        }
    }
    return defaultWorkerCount();
}

int runSolveCommand(const std::string& file, const std::string& strategy, const std::string& mode,
                    const std::string& parallel, unsigned threads, const std::string& format,
                    bool verify, unsigned repeats, bool noRrc) {
    SystemFile sys;
    try {
        sys = loadSystem(file);
    } catch (const SystemParseError& e) {
        std::cerr << "error: " << file << ":" << e.line << ":" << e.column << ": " << e.what()
                  << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    SolveConfig cfg;
    cfg.strategy = strategy == "bubble" ? Strategy::Bubble : Strategy::Level;
    cfg.mode = mode == "kalkbrener" ? Mode::Kalkbrener : Mode::LazardWu;
    cfg.parallel = parallel == "c" ? Parallel::C : parallel == "cf" ? Parallel::CF : Parallel::S;
    cfg.workers = threads;
    cfg.removeRedundant = !noRrc;

    try {
        std::unique_ptr<WorkerPool> pool;
        if (cfg.parallel != Parallel::S) pool = std::make_unique<WorkerPool>(threads);

        SolveReport report;
        std::vector<double> times;
        for (unsigned i = 0; i < std::max(1u, repeats); ++i) {
            report = runSolve(sys, cfg, verify, pool.get());
            times.push_back(report.wallTimeMs);
        }
        std::sort(times.begin(), times.end());
        report.wallTimeMs = times[times.size() / 2];

        if (format == "json")
            std::cout << reportToJson(report) << "\n";
        else
            std::cout << reportToText(report);
        if (verify && report.checks && !report.checks->passed()) return 3;
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return 1;
    }
}

int runBenchCommand(const std::vector<std::string>& paths, unsigned threads, unsigned repeats,
                    const std::string& format) {
    std::vector<SystemFile> systems;
    try {
        for (const auto& p : paths) {
            if (std::filesystem::is_directory(p)) {
                std::vector<std::filesystem::path> files;
                for (const auto& entry : std::filesystem::directory_iterator(p))
                    if (entry.path().extension() == ".sys") files.push_back(entry.path());
                std::sort(files.begin(), files.end());
                for (const auto& f : files) systems.push_back(loadSystem(f));
            } else {
                systems.push_back(loadSystem(p));
            }
        }
    } catch (const SystemParseError& e) {
        std::cerr << "error: " << e.what() << " (line " << e.line << ")\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    if (systems.empty()) {
        std::cerr << "error: no systems found\n";
        return 2;
    }
    try {
        const auto rows = runBenchmark(systems, std::max(1u, repeats), threads);
        if (format == "json")
            std::cout << benchToJson(rows) << "\n";
        else
            std::cout << benchToText(rows);
        return 0;
    } catch (const std::exception& e) {
        std::cerr << "solver failure: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Triangular decomposition of polynomial systems by regular chains"};
    app.require_subcommand(1);

    std::string file, strategy = "level", mode = "lazard-wu", parallel = "s", format = "text";
    unsigned threads = threadsDefault(), repeats = 1;
    bool verify = false, noRrc = false;

    auto* solve = app.add_subcommand("solve", "solve one system file");
    solve->add_option("file", file, "system file (.sys)")->required();
    solve->add_option("--strategy", strategy)->check(CLI::IsMember({"level", "bubble"}));
    solve->add_option("--mode", mode)->check(CLI::IsMember({"lazard-wu", "kalkbrener"}));
    solve->add_option("--parallel", parallel)->check(CLI::IsMember({"s", "c", "cf"}));
    solve->add_option("--threads", threads, "worker count");
    solve->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));
    solve->add_flag("--verify", verify, "run the verification oracle");
    solve->add_option("--repeats", repeats, "solve repeatedly, report the median time");
    solve->add_flag("--debug-no-rrc", noRrc, "skip redundant-component removal");

    std::vector<std::string> benchPaths;
    unsigned benchThreads = threadsDefault(), benchRepeats = 3;
    std::string benchFormat = "text";
    auto* bench = app.add_subcommand("bench", "run the configuration matrix");
    bench->add_option("paths", benchPaths, "system files or directories")->required();
    bench->add_option("--threads", benchThreads, "worker count");
    bench->add_option("--repeats", benchRepeats, "repeats per timing (median)");
    bench->add_option("--format", benchFormat)->check(CLI::IsMember({"text", "json"}));

    CLI11_PARSE(app, argc, argv);

    if (solve->parsed())
        return runSolveCommand(file, strategy, mode, parallel, threads, format, verify, repeats,
                               noRrc);
    return runBenchCommand(benchPaths, benchThreads, benchRepeats, benchFormat);
}
