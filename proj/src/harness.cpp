#include "trichain/harness.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include "json.hpp"

namespace trichain {

namespace {

std::string trim(const std::string& s) {
    std::size_t a = 0, b = s.size();
    while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
    while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
    return s.substr(a, b - a);
}

std::string stripComment(const std::string& line) {
    const auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

std::vector<Polynomial> parseChainLine(const std::string& text, const OrderPtr& order,
                                       std::size_t lineNo) {
    std::string body = trim(text);
    if (body.size() < 2 || body.front() != '{' || body.back() != '}')
        throw SystemParseError("expected '{p; p; ...}' chain", lineNo, 1);
    body = body.substr(1, body.size() - 2);
    std::vector<Polynomial> members;
    std::size_t start = 0;
    while (start <= body.size()) {
        const auto semi = body.find(';', start);
        const std::string piece =
            trim(semi == std::string::npos ? body.substr(start) : body.substr(start, semi - start));
        if (!piece.empty()) {
            try {
                members.push_back(canonical(parse(piece, order)));
            } catch (const ParseError& e) {
                throw SystemParseError(std::string("chain member: ") + e.what(), lineNo,
                                       e.pos + 1);
            }
        }
        if (semi == std::string::npos) break;
        start = semi + 1;
    }
    // accept members written top-first or bottom-first; store bottom-first
    std::sort(members.begin(), members.end(), [](const Polynomial& a, const Polynomial& b) {
        return lessThan(*a.mainVariable(), *b.mainVariable());
    });
    return members;
}

}  // namespace

SystemFile loadSystem(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open system file: " + path.string());
    SystemFile sys;
    sys.name = path.stem().string();

    std::string line;
    std::size_t lineNo = 0;
    bool sawVars = false;
    bool inExpected = false;
    while (std::getline(in, line)) {
        ++lineNo;
        const std::string body = trim(stripComment(line));
        if (body.empty()) continue;
        if (!sawVars) {
            if (body.rfind("vars:", 0) != 0)
                throw SystemParseError("first line must be 'vars: v1 > v2 > ...'", lineNo, 1);
            std::vector<std::string> names;
            std::string rest = body.substr(5);
            std::size_t start = 0;
            while (start <= rest.size()) {
                const auto gt = rest.find('>', start);
                const std::string piece =
                    trim(gt == std::string::npos ? rest.substr(start) : rest.substr(start, gt - start));
                if (!piece.empty()) names.push_back(piece);
                if (gt == std::string::npos) break;
                start = gt + 1;
            }
            if (names.empty()) throw SystemParseError("no variables declared", lineNo, 1);
            try {
                sys.order = VariableOrder::make(std::move(names));
            } catch (const std::invalid_argument& e) {
                throw SystemParseError(e.what(), lineNo, 1);
            }
            sawVars = true;
            continue;
        }
        if (body == "expected:") {
            inExpected = true;
            sys.hasExpected = true;
            continue;
        }
        if (inExpected) {
            sys.expected.push_back(parseChainLine(body, sys.order, lineNo));
            continue;
        }
        try {
            sys.polynomials.push_back(parse(body, sys.order));
        } catch (const ParseError& e) {
            throw SystemParseError(e.what(), lineNo, e.pos + 1);
        }
    }
    if (!sawVars) throw SystemParseError("missing 'vars:' line", lineNo, 1);
    return sys;
}

// ---- point enumeration ---------------------------------------------------

std::optional<std::vector<Point>> enumerateChainPoints(const RegularChain& T) {
    if (T.dimension() != 0) return std::nullopt;
    std::vector<std::map<std::uint32_t, Rational>> partials(1);
    for (const auto& m : T.members()) {
        const Variable v = *m.mainVariable();
        const int d = m.degreeIn(v);
        std::vector<std::map<std::uint32_t, Rational>> next;
        for (const auto& pt : partials) {
            const Polynomial init =
                m.coefficientOf(v, static_cast<unsigned>(d)).evaluate(pt);
            if (init.isZero()) continue;  // outside the quasi-component
            const Polynomial pm = m.evaluate(pt);
            if (!isUnivariateIn(pm, v)) return std::nullopt;
            const auto roots = rationalRoots(pm, v);
            if (roots.size() != static_cast<std::size_t>(d)) return std::nullopt;
            for (const auto& r : roots) {
                auto ext = pt;
                ext.emplace(v.pos, r);
                next.push_back(std::move(ext));
            }
        }
        partials = std::move(next);
    }
    std::vector<Point> points;
    points.reserve(partials.size());
    for (const auto& pt : partials) {
        Point p(T.order()->size(), Rational(0));
        for (const auto& [pos, val] : pt) p[pos] = val;
        points.push_back(std::move(p));
    }
    return points;
}

namespace {

bool pointSatisfies(const Polynomial& f, const Point& p) {
    std::map<std::uint32_t, Rational> bind;
    for (std::uint32_t i = 0; i < p.size(); ++i) bind.emplace(i, p[i]);
    return f.evaluate(bind).isZero();
}

int comparePoints(const Point& a, const Point& b) {
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
    }
    return 0;
}

std::optional<bool> pointOracleCheck(const SystemFile& sys, const Decomposition& D) {
    bool anyZeroDim = false;
    bool allEnumerable = !D.components.empty();
    std::vector<Point> enumerated;
    for (const auto& T : D.components) {
        if (T.dimension() != 0) {
            allEnumerable = false;
            continue;
        }
        anyZeroDim = true;
        const auto pts = enumerateChainPoints(T);
        if (!pts) {
            allEnumerable = false;
            continue;
        }
        // soundness: every enumerated point solves the input system
        for (const auto& p : *pts) {
            for (const auto& f : sys.polynomials) {
                if (!pointSatisfies(f, p)) return false;
            }
        }
        enumerated.insert(enumerated.end(), pts->begin(), pts->end());
    }
    if (D.components.empty()) return true;  // inconsistent system: nothing to check
    if (!anyZeroDim) return std::nullopt;
    if (!allEnumerable) return true;  // soundness only; equality needs full enumeration

    // completeness over the grid spanned by the enumerated coordinates
    const std::size_t n = sys.order->size();
    std::vector<std::vector<Rational>> values(n);
    for (const auto& p : enumerated) {
        for (std::size_t i = 0; i < n; ++i) {
            if (std::find(values[i].begin(), values[i].end(), p[i]) == values[i].end())
                values[i].push_back(p[i]);
        }
    }
    std::size_t gridSize = 1;
    for (const auto& vs : values) {
        if (vs.empty()) return true;  // no solutions at all
        gridSize *= vs.size();
        if (gridSize > 200000) return true;  // grid too large; soundness already checked
    }
    std::sort(enumerated.begin(), enumerated.end(),
              [](const Point& a, const Point& b) { return comparePoints(a, b) < 0; });
    enumerated.erase(std::unique(enumerated.begin(), enumerated.end(),
                                 [](const Point& a, const Point& b) {
                                     return comparePoints(a, b) == 0;
                                 }),
                     enumerated.end());

    std::vector<std::size_t> idx(n, 0);
    Point candidate(n, Rational(0));
    std::size_t count = 0;
    for (;;) {
        for (std::size_t i = 0; i < n; ++i) candidate[i] = values[i][idx[i]];
        const bool solves = std::all_of(sys.polynomials.begin(), sys.polynomials.end(),
                                        [&](const Polynomial& f) { return pointSatisfies(f, candidate); });
        const bool found = std::binary_search(
            enumerated.begin(), enumerated.end(), candidate,
            [](const Point& a, const Point& b) { return comparePoints(a, b) < 0; });
        if (solves != found) return false;
        if (found) ++count;
        std::size_t i = 0;
        while (i < n && ++idx[i] == values[i].size()) idx[i++] = 0;
        if (i == n) break;
    }
    return count == enumerated.size();
}

}  // namespace

CheckResults verifyDecomposition(const SystemFile& sys, const Decomposition& D) {
    CheckResults out;
    out.validator = std::all_of(D.components.begin(), D.components.end(),
                                [](const RegularChain& T) { return validateChain(T).ok; });
    out.prem = true;
    for (const auto& T : D.components) {
        for (const auto& f : sys.polynomials) {
            if (!pseudoRemainderByChain(f, T).isZero()) {
                out.prem = false;
                break;
            }
        }
        if (!out.prem) break;
    }
    out.irredundant = true;
    for (std::size_t i = 0; i < D.components.size() && out.irredundant; ++i) {
        for (std::size_t j = 0; j < D.components.size(); ++j) {
            if (i == j) continue;
            if (!isNotIncluded(D.components[i], D.components[j])) {
                out.irredundant = false;
                break;
            }
        }
    }
    out.pointOracle = pointOracleCheck(sys, D);
    return out;
}

// ---- reports ---------------------------------------------------------------

std::vector<std::vector<std::string>> SolveReport::componentTexts() const {
    std::vector<RegularChain> sorted = decomposition.components;
    std::sort(sorted.begin(), sorted.end(), [](const RegularChain& a, const RegularChain& b) {
        return RegularChain::compare(a, b) < 0;
    });
    std::vector<std::vector<std::string>> out;
    out.reserve(sorted.size());
    for (const auto& T : sorted) out.push_back(T.memberTexts());
    return out;
}

SolveReport runSolve(const SystemFile& sys, const SolveConfig& cfg, bool verify,
                     WorkerPool* pool) {
    SolveReport report;
    report.system = sys.name;
    report.config = cfg;

    const auto t0 = std::chrono::steady_clock::now();
    report.decomposition = cfg.strategy == Strategy::Bubble
                               ? triangularizeBubble(sys.order, sys.polynomials, cfg, pool)
                               : triangularizeLevel(sys.order, sys.polynomials, cfg, pool);
    const auto t1 = std::chrono::steady_clock::now();
    report.wallTimeMs = std::chrono::duration<double, std::milli>(t1 - t0).count();
    if (verify) report.checks = verifyDecomposition(sys, report.decomposition);
    return report;
}

std::string reportToJson(const SolveReport& report) {
    nlohmann::ordered_json j;
    j["system"] = report.system;
    j["strategy"] = toString(report.config.strategy);
    j["mode"] = toString(report.config.mode);
    j["parallel"] = toString(report.config.parallel);
    j["threads"] = report.config.workers;
    j["components"] = report.componentTexts();
    j["wallTimeMs"] = report.wallTimeMs;
    if (report.checks) {
        j["verified"] = report.checks->passed();
        nlohmann::ordered_json checks;
        checks["validator"] = report.checks->validator;
        checks["prem"] = report.checks->prem;
        checks["irredundant"] = report.checks->irredundant;
        if (report.checks->pointOracle)
            checks["pointOracle"] = *report.checks->pointOracle;
        else
            checks["pointOracle"] = nullptr;
        j["checks"] = std::move(checks);
    } else {
        j["verified"] = nullptr;
        j["checks"] = nullptr;
    }
    return j.dump(2);
}

std::string reportToText(const SolveReport& report) {
    std::ostringstream os;
    os << "system: " << report.system << "\n";
    os << "config: " << toString(report.config.strategy) << " " << toString(report.config.mode)
       << " " << toString(report.config.parallel) << " threads=" << report.config.workers << "\n";
    const auto comps = report.componentTexts();
    os << "components (" << comps.size() << "):\n";
    for (const auto& c : comps) {
        os << "  {";
        for (std::size_t i = 0; i < c.size(); ++i) {
            os << c[i];
            if (i + 1 < c.size()) os << "; ";
        }
        os << "}\n";
    }
    os << "wallTimeMs: " << report.wallTimeMs << "\n";
    if (report.checks) {
        os << "verified: " << (report.checks->passed() ? "yes" : "NO") << " (validator "
           << (report.checks->validator ? "ok" : "FAIL") << ", prem "
           << (report.checks->prem ? "ok" : "FAIL") << ", irredundant "
           << (report.checks->irredundant ? "ok" : "FAIL") << ", pointOracle ";
        if (report.checks->pointOracle)
            os << (*report.checks->pointOracle ? "ok" : "FAIL");
        else
            os << "skipped";
        os << ")\n";
    }
    return os.str();
}

// ---- benchmark --------------------------------------------------------------

namespace {

double medianSolveMs(const SystemFile& sys, const SolveConfig& cfg, unsigned repeats,
                     WorkerPool* pool) {
    std::vector<double> times;
    times.reserve(repeats);
    for (unsigned i = 0; i < repeats; ++i)
        times.push_back(runSolve(sys, cfg, false, pool).wallTimeMs);
    std::sort(times.begin(), times.end());
    return times[times.size() / 2];
}

}  // namespace

std::vector<BenchRow> runBenchmark(const std::vector<SystemFile>& systems, unsigned repeats,
                                   unsigned workers) {
    std::vector<BenchRow> rows;
    WorkerPool pool(workers);
    for (const auto& sys : systems) {
        for (const Strategy strategy : {Strategy::Level, Strategy::Bubble}) {
            for (const Mode mode : {Mode::LazardWu, Mode::Kalkbrener}) {
                BenchRow row;
                row.system = sys.name;
                row.strategy = strategy;
                row.mode = mode;
                SolveConfig cfg;
                cfg.strategy = strategy;
                cfg.mode = mode;
                cfg.workers = workers;

                cfg.parallel = Parallel::S;
                row.serialMs = medianSolveMs(sys, cfg, repeats, nullptr);
                cfg.parallel = Parallel::C;
                const double cMs = medianSolveMs(sys, cfg, repeats, &pool);
                cfg.parallel = Parallel::CF;
                const double cfMs = medianSolveMs(sys, cfg, repeats, &pool);
                row.speedupC = cMs > 0 ? row.serialMs / cMs : 0.0;
                row.speedupCF = cfMs > 0 ? row.serialMs / cfMs : 0.0;
                rows.push_back(std::move(row));
            }
        }
    }
    return rows;
}

std::string benchToText(const std::vector<BenchRow>& rows) {
    std::ostringstream os;
    os << "system                    strategy  mode        serial(ms)      C    C+F\n";
    for (const auto& r : rows) {
        std::ostringstream serial;
        serial.setf(std::ios::fixed);
        serial.precision(3);
        serial << r.serialMs;
        os << r.system;
        for (std::size_t i = r.system.size(); i < 26; ++i) os << ' ';
        std::string strat = toString(r.strategy);
        os << strat;
        for (std::size_t i = strat.size(); i < 10; ++i) os << ' ';
        std::string mode = toString(r.mode);
        os << mode;
        for (std::size_t i = mode.size(); i < 12; ++i) os << ' ';
        std::string st = serial.str();
        for (std::size_t i = st.size(); i < 10; ++i) os << ' ';
        os << st;
        auto speed = [&](double v) {
            std::ostringstream s;
            s.setf(std::ios::fixed);
            s.precision(2);
            s << v;
            std::string t = s.str();
            for (std::size_t i = t.size(); i < 7; ++i) os << ' ';
            os << t;
        };
        speed(r.speedupC);
        speed(r.speedupCF);
        os << "\n";
    }
    return os.str();
}

std::string benchToJson(const std::vector<BenchRow>& rows) {
    nlohmann::ordered_json arr = nlohmann::ordered_json::array();
    for (const auto& r : rows) {
        nlohmann::ordered_json j;
        j["system"] = r.system;
        j["strategy"] = toString(r.strategy);
        j["mode"] = toString(r.mode);
        j["serialMs"] = r.serialMs;
        j["speedupC"] = r.speedupC;
        j["speedupCF"] = r.speedupCF;
        arr.push_back(std::move(j));
    }
    return arr.dump(2);
}

}  // namespace trichain
