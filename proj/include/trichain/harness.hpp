#ifndef TRICHAIN_HARNESS_HPP
#define TRICHAIN_HARNESS_HPP

#include <filesystem>
#include <optional>

#include "trichain/decompose.hpp"

namespace trichain {

struct SystemFile {
    std::string name;
    OrderPtr order;
    std::vector<Polynomial> polynomials;
    std::vector<std::vector<Polynomial>> expected;  // chains, bottom-first
    bool hasExpected = false;
};

struct SystemParseError : std::runtime_error {
    SystemParseError(const std::string& msg, std::size_t line, std::size_t column)
        : std::runtime_error(msg), line(line), column(column) {}
    std::size_t line;
    std::size_t column;
};

/// Loads a system file: `vars: v1 > v2 > ...`, one polynomial per line,
/// '#' comments, optional trailing `expected:` block of `{p; p; ...}`
/// chains. Throws SystemParseError / std::runtime_error.
SystemFile loadSystem(const std::filesystem::path& path);

/// Verification breakdown; verdict is true only if every enabled check
/// passed (pointOracle stays unset when not applicable).
struct CheckResults {
    bool validator = false;
    bool prem = false;
    bool irredundant = false;
    std::optional<bool> pointOracle;

    bool passed() const {
        return validator && prem && irredundant && pointOracle.value_or(true);
    }
};

/// A rational point, indexed by variable position.
using Point = std::vector<Rational>;

/// Back-substitution enumeration of a zero-dimensional chain whose
/// members split completely over Q; nullopt when that fails. Points keep
/// every initial nonzero (quasi-component membership).
std::optional<std::vector<Point>> enumerateChainPoints(const RegularChain& T);

/// Checks (1) chain validator, (2) prem(f, T) = 0 for all f, T,
/// (3) pairwise heuristic irredundancy, (4) exact solution-set equality
/// against the brute-force oracle on zero-dimensional rational systems.
CheckResults verifyDecomposition(const SystemFile& sys, const Decomposition& D);

struct SolveReport {
    std::string system;
    SolveConfig config;
    Decomposition decomposition;
    double wallTimeMs = 0.0;
    std::optional<CheckResults> checks;

    /// Canonically sorted member texts per component (top member first).
    std::vector<std::vector<std::string>> componentTexts() const;
};

/// Runs one strategy/mode/parallel configuration, timing the solve only.
SolveReport runSolve(const SystemFile& sys, const SolveConfig& cfg, bool verify,
                     WorkerPool* pool);

/// JSON form with the fixed key order: system, strategy, mode, parallel,
/// threads, components, wallTimeMs, verified, checks.
std::string reportToJson(const SolveReport& report);
std::string reportToText(const SolveReport& report);

struct BenchRow {
    std::string system;
    Strategy strategy = Strategy::Level;
    Mode mode = Mode::LazardWu;
    double serialMs = 0.0;
    double speedupC = 0.0;
    double speedupCF = 0.0;
};

/// Full configuration matrix over the given systems; speedup = serial
/// median / configuration median over `repeats` runs each.
std::vector<BenchRow> runBenchmark(const std::vector<SystemFile>& systems, unsigned repeats,
                                   unsigned workers);
std::string benchToText(const std::vector<BenchRow>& rows);
std::string benchToJson(const std::vector<BenchRow>& rows);

}  // namespace trichain

#endif
