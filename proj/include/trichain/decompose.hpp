#ifndef TRICHAIN_DECOMPOSE_HPP
#define TRICHAIN_DECOMPOSE_HPP

#include "trichain/kernel.hpp"

namespace trichain {

/// A unit of coarse-grained work: the equations still to intersect and
/// the partial chain they run against.
struct Task {
    std::vector<Polynomial> remaining;
    RegularChain chain;
};

struct Decomposition {
    std::vector<RegularChain> components;
    SolveConfig config;
};

/// Deterministic selection rule: minimal (total degree, then main
/// variable ascending, then canonical text). F must be nonempty.
const Polynomial& chooseNextPolynomial(const std::vector<Polynomial>& F);

/// Full processing order for a solve: zeros dropped, then repeated
/// application of chooseNextPolynomial.
std::vector<Polynomial> solveOrder(std::vector<Polynomial> F);

/// Barrier-free strategy: chains stream through per-intersect producer
/// tasks; redundant components are removed once, on the final stream.
Decomposition triangularizeBubble(const OrderPtr& order, const std::vector<Polynomial>& F,
                                  const SolveConfig& cfg, WorkerPool* pool);

/// Barrier strategy: one polynomial per level, a parallel-for over the
/// surviving chains, and redundancy removal after every level.
Decomposition triangularizeLevel(const OrderPtr& order, const std::vector<Polynomial>& F,
                                 const SolveConfig& cfg, WorkerPool* pool);

/// Divide-and-conquer removal of redundant components (fork-join in the
/// parallel configurations).
std::vector<RegularChain> removeRedundantComponents(std::vector<RegularChain> chains,
                                                    const SolveConfig& cfg, WorkerPool* pool);

/// Merges two internally irredundant lists into one: keeps the members
/// of L1 not included in any member of L2, then the members of L2 not
/// included in any survivor of L1.
std::vector<RegularChain> mergeIrredundantLists(const std::vector<RegularChain>& L1,
                                                const std::vector<RegularChain>& L2,
                                                const SolveConfig& cfg, WorkerPool* pool);

/// Heuristic inclusion test, sound in one direction: true means
/// W(T1) ⊄ W(T2) certainly; false means inclusion holds or is unknown.
bool isNotIncluded(const RegularChain& T1, const RegularChain& T2);

}  // namespace trichain

#endif
