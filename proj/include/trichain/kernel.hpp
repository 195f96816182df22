#ifndef TRICHAIN_KERNEL_HPP
#define TRICHAIN_KERNEL_HPP

#include "trichain/concurrent.hpp"
#include "trichain/regular_chain.hpp"

namespace trichain {

enum class RegStatus { Zero, Regular };

struct RegBranch {
    RegularChain chain;
    RegStatus status = RegStatus::Regular;
};

struct GCDBranch {
    Polynomial gcd;
    RegularChain chain;
};

/// Execution context threaded through the kernel: solver configuration
/// plus the shared worker pool (null in serial runs). Fine-grained
/// parallelism submits nested producers to the pool; otherwise they run
/// inline, preserving the serial emission order.
struct KernelContext {
    SolveConfig cfg{};
    WorkerPool* pool = nullptr;

    bool fineAsync() const { return cfg.fineAsync() && pool != nullptr; }
};

/// Streams regular chains T_1..T_e approximating W(T) ∩ V(p):
/// prem(p, T_i) = 0 for all i and W(T) ∩ V(p) ⊆ ∪ W(T_i) ⊆ cl(W(T)) ∩ V(p).
/// p = 0 streams exactly [T]; a nonzero constant p streams nothing.
void intersect(const Polynomial& p, const RegularChain& T, KernelContext ctx,
               GeneratorChannel<RegularChain>& out);

/// Streams branches covering W(T): on zero branches prem(h, T_j) = 0, on
/// regular branches iteratedResultant(h, T_j) != 0.
void regularize(const Polynomial& h, const RegularChain& T, KernelContext ctx,
                GeneratorChannel<RegBranch>& out);

/// Streams (g_j, T_j) splitting T so that g_j is a gcd of p and q modulo
/// T_j w.r.t. v. T must not involve v or anything above it.
void regularGCD(const Polynomial& p, const Polynomial& q, Variable v, const RegularChain& T,
                KernelContext ctx, GeneratorChannel<GCDBranch>& out);

// Collectors, mainly for tests and the Level driver.
std::vector<RegularChain> intersectAll(const Polynomial& p, const RegularChain& T,
                                       KernelContext ctx);
std::vector<RegBranch> regularizeAll(const Polynomial& h, const RegularChain& T,
                                     KernelContext ctx);
std::vector<GCDBranch> regularGCDAll(const Polynomial& p, const Polynomial& q, Variable v,
                                     const RegularChain& T, KernelContext ctx);

}  // namespace trichain

#endif
