#include "trichain/decompose.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <stdexcept>

namespace trichain {

namespace {

struct SelectionKey {
    int degree;
    std::int64_t varRank;  // smaller = chosen earlier; constants first
    std::string text;
};

SelectionKey keyOf(const Polynomial& p) {
    SelectionKey k;
    k.degree = p.isZero() ? -1 : p.totalDegree();
    const auto mv = p.mainVariable();
    // ascending main variable: the least variable (largest pos) first
    k.varRank = mv ? -static_cast<std::int64_t>(mv->pos) : std::numeric_limits<std::int64_t>::min();
    k.text = p.format();
    return k;
}

bool keyLess(const SelectionKey& a, const SelectionKey& b) {
    if (a.degree != b.degree) return a.degree < b.degree;
    if (a.varRank != b.varRank) return a.varRank < b.varRank;
    return a.text < b.text;
}

}  // namespace

const Polynomial& chooseNextPolynomial(const std::vector<Polynomial>& F) {
    if (F.empty()) throw std::invalid_argument("chooseNextPolynomial: empty set");
    const Polynomial* best = &F.front();
    SelectionKey bestKey = keyOf(*best);
    for (std::size_t i = 1; i < F.size(); ++i) {
        SelectionKey k = keyOf(F[i]);
        if (keyLess(k, bestKey)) {
            best = &F[i];
            bestKey = std::move(k);
        }
    }
    return *best;
}

std::vector<Polynomial> solveOrder(std::vector<Polynomial> F) {
    std::erase_if(F, [](const Polynomial& p) { return p.isZero(); });
    std::vector<Polynomial> out;
    out.reserve(F.size());
    while (!F.empty()) {
        const Polynomial& next = chooseNextPolynomial(F);
        const std::size_t idx = static_cast<std::size_t>(&next - F.data());
        out.push_back(F[idx]);
        F.erase(F.begin() + static_cast<std::ptrdiff_t>(idx));
    }
    return out;
}

bool isNotIncluded(const RegularChain& T1, const RegularChain& T2) {
    if (!T1.order()->sameAs(*T2.order()))
        throw std::invalid_argument("isNotIncluded: variable order mismatch");
    if (T1.dimension() > T2.dimension()) return true;
    for (const auto& p : T2.members()) {
        if (!pseudoRemainderByChain(p, T1).isZero()) return true;
        // an initial of T2 that vanishes on W(T1) keeps W(T1) out of W(T2)
        if (pseudoRemainderByChain(p.initial(), T1).isZero()) return true;
    }
    return false;
}

std::vector<RegularChain> mergeIrredundantLists(const std::vector<RegularChain>& L1,
                                                const std::vector<RegularChain>& L2,
                                                const SolveConfig& cfg, WorkerPool* pool) {
    std::vector<char> keep1(L1.size(), 0);
    parallelForGrainOne(pool, cfg, L1.size(), [&](std::size_t i) {
        keep1[i] = std::all_of(L2.begin(), L2.end(), [&](const RegularChain& t2) {
            return isNotIncluded(L1[i], t2);
        });
    });
    std::vector<RegularChain> kept1;
    for (std::size_t i = 0; i < L1.size(); ++i)
        if (keep1[i]) kept1.push_back(L1[i]);

    std::vector<char> keep2(L2.size(), 0);
    parallelForGrainOne(pool, cfg, L2.size(), [&](std::size_t i) {
        keep2[i] = std::all_of(kept1.begin(), kept1.end(), [&](const RegularChain& t1) {
            return isNotIncluded(L2[i], t1);
        });
    });
    std::vector<RegularChain> out = kept1;
    for (std::size_t i = 0; i < L2.size(); ++i)
        if (keep2[i]) out.push_back(L2[i]);
    return out;
}

std::vector<RegularChain> removeRedundantComponents(std::vector<RegularChain> chains,
                                                    const SolveConfig& cfg, WorkerPool* pool) {
    if (chains.size() <= 1) return chains;
    const std::size_t half = (chains.size() + 1) / 2;
    std::vector<RegularChain> left(chains.begin(), chains.begin() + static_cast<std::ptrdiff_t>(half));
    std::vector<RegularChain> right(chains.begin() + static_cast<std::ptrdiff_t>(half), chains.end());
    auto [a, b] = forkJoin2(
        pool, cfg, [&] { return removeRedundantComponents(std::move(left), cfg, pool); },
        [&] { return removeRedundantComponents(std::move(right), cfg, pool); });
    return mergeIrredundantLists(a, b, cfg, pool);
}

namespace {

bool pruneByHeight(const SolveConfig& cfg, const RegularChain& c, std::size_t m) {
    return cfg.mode == Mode::Kalkbrener && c.height() > m;
}

// Shared state of one Bubble level: producers from the previous level
// stream into the channel; the last finisher completes it.
struct BubbleLevel {
    explicit BubbleLevel(OrderPtr order) : probe(RegularChain::empty(std::move(order))) {}
    GeneratorChannel<RegularChain> ch;
    std::atomic<std::size_t> pending{1};
    RegularChain probe;  // default element for consumption loops

    void done() {
        if (pending.fetch_sub(1) == 1) ch.setComplete();
    }
};

void spawnCoarse(const SolveConfig& cfg, WorkerPool* pool, std::function<void()> fn) {
    if (cfg.coarseAsync() && pool != nullptr) {
        submitOrInline(pool, std::move(fn));
    } else {
        fn();
    }
}

}  // namespace

Decomposition triangularizeBubble(const OrderPtr& order, const std::vector<Polynomial>& F,
                                  const SolveConfig& cfg, WorkerPool* pool) {
    const auto polys = solveOrder(F);
    const std::size_t m = polys.size();
    KernelContext ctx{cfg, pool};

    auto upstream = std::make_shared<BubbleLevel>(order);
    upstream->ch.generateObject(RegularChain::empty(order));
    upstream->ch.setComplete();

    for (const auto& f : polys) {
        auto lvl = std::make_shared<BubbleLevel>(order);
        auto coordinator = [upstream, lvl, f, ctx, cfg, pool, m] {
            try {
                RegularChain t = RegularChain::empty(upstream->probe.order());
                while (upstream->ch.getNextObject(t)) {
                    if (pruneByHeight(cfg, t, m)) continue;
                    lvl->pending.fetch_add(1);
                    auto producer = [lvl, f, t, ctx] {
                        try {
                            intersect(f, t, ctx, lvl->ch);
                        } catch (...) {
                            lvl->ch.fail(std::current_exception());
                        }
                        lvl->done();
                    };
                    spawnCoarse(cfg, pool, std::move(producer));
                }
            } catch (...) {
                lvl->ch.fail(std::current_exception());
            }
            lvl->done();
        };
        spawnCoarse(cfg, pool, std::move(coordinator));
        upstream = lvl;
    }

    std::vector<RegularChain> comps;
    RegularChain t = RegularChain::empty(order);
    while (upstream->ch.getNextObject(t)) {
        if (!pruneByHeight(cfg, t, m)) comps.push_back(std::move(t));
    }
    if (cfg.removeRedundant) comps = removeRedundantComponents(std::move(comps), cfg, pool);
    return Decomposition{std::move(comps), cfg};
}

Decomposition triangularizeLevel(const OrderPtr& order, const std::vector<Polynomial>& F,
                                 const SolveConfig& cfg, WorkerPool* pool) {
    const auto polys = solveOrder(F);
    const std::size_t m = polys.size();
    KernelContext ctx{cfg, pool};

    std::vector<RegularChain> comps{RegularChain::empty(order)};
    for (const auto& f : polys) {
        std::vector<RegularChain> next;
        std::mutex mu;
        parallelForGrainOne(pool, cfg, comps.size(), [&](std::size_t i) {
            auto chains = intersectAll(f, comps[i], ctx);
            std::lock_guard<std::mutex> lk(mu);
            for (auto& c : chains)
                if (!pruneByHeight(cfg, c, m)) next.push_back(std::move(c));
        });
        if (cfg.removeRedundant) next = removeRedundantComponents(std::move(next), cfg, pool);
        comps = std::move(next);
    }
    return Decomposition{std::move(comps), cfg};
}

}  // namespace trichain
