#include "trichain/kernel.hpp"

#include <functional>
#include <stdexcept>

namespace trichain {

namespace {

using ChainSink = std::function<void(RegularChain)>;
using BranchSink = std::function<void(RegularChain, RegStatus)>;

// Reduces each v-coefficient of r by the chain; the v-structure (and the
// degree in v, when the leading coefficient is regular) is preserved.
Polynomial reduceCoefficientwise(const Polynomial& r, Variable v, const RegularChain& B) {
    if (B.height() == 0 || r.isZero()) return r;
    Polynomial out(r.order());
    const Polynomial vp = Polynomial::variable(r.order(), v);
    const auto coeffs = r.coefficientsIn(v);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
        if (coeffs[k].isZero()) continue;
        const Polynomial red = pseudoRemainderByChain(coeffs[k], B);
        if (red.isZero()) continue;
        out = out + red * vp.pow(static_cast<unsigned>(k));
    }
    return out;
}

void regularizeInto(const Polynomial& h, const RegularChain& T, KernelContext ctx,
                    const BranchSink& sink);
void intersectInto(const Polynomial& p, const RegularChain& T, KernelContext ctx,
                   const ChainSink& sink);
void regularGCDInto(const Polynomial& p, const Polynomial& q, Variable v, const RegularChain& T,
                    KernelContext ctx, const std::function<void(GCDBranch)>& sink);

// Consumes a nested regularize stream, asynchronously under fine-grained
// parallelism and inline otherwise.
void forEachRegularizeBranch(const Polynomial& h, const RegularChain& T, KernelContext ctx,
                             const BranchSink& sink) {
    if (!ctx.fineAsync()) {
        regularizeInto(h, T, ctx, sink);
        return;
    }
    Generator<RegBranch> gen(ctx.pool, true, [h, T, ctx](GeneratorChannel<RegBranch>& ch) {
        regularize(h, T, ctx, ch);
    });
    RegBranch b{RegularChain::empty(T.order()), RegStatus::Regular};
    while (gen.next(b)) sink(std::move(b.chain), b.status);
}

void forEachIntersectChain(const Polynomial& p, const RegularChain& T, KernelContext ctx,
                           const ChainSink& sink) {
    if (!ctx.fineAsync()) {
        intersectInto(p, T, ctx, sink);
        return;
    }
    Generator<RegularChain> gen(ctx.pool, true, [p, T, ctx](GeneratorChannel<RegularChain>& ch) {
        intersect(p, T, ctx, ch);
    });
    RegularChain c = RegularChain::empty(T.order());
    while (gen.next(c)) sink(std::move(c));
}

void forEachGCDBranch(const Polynomial& p, const Polynomial& q, Variable v,
                      const RegularChain& T, KernelContext ctx,
                      const std::function<void(GCDBranch)>& sink) {
    if (!ctx.fineAsync()) {
        regularGCDInto(p, q, v, T, ctx, sink);
        return;
    }
    Generator<GCDBranch> gen(ctx.pool, true,
                             [p, q, v, T, ctx](GeneratorChannel<GCDBranch>& ch) {
                                 regularGCD(p, q, v, T, ctx, ch);
                             });
    GCDBranch b{Polynomial(T.order()), RegularChain::empty(T.order())};
    while (gen.next(b)) sink(std::move(b));
}

// ---- CleanChain: re-attach upper members over a refined lower chain ----
//
// Re-reduces each member, re-establishes regularity of its initial by
// splitting when needed, and drops branches where a member degenerates
// (those carry no quasi-component points of the parent chain).
void attachUppers(const RegularChain& base, const std::vector<Polynomial>& uppers,
                  std::size_t from, KernelContext ctx, const ChainSink& sink) {
    if (from == uppers.size()) {
        sink(base);
        return;
    }
    const Polynomial& u = uppers[from];
    const Variable w = *u.mainVariable();
    const int d = u.degreeIn(w);
    Polynomial uu = reduceCoefficientwise(u, w, base);
    if (uu.degreeIn(w) != d) return;  // initial vanished: degenerate branch
    const Polynomial init = uu.coefficientOf(w, static_cast<unsigned>(d));
    if (init.isConstant()) {
        attachUppers(base.extended(uu), uppers, from + 1, ctx, sink);
        return;
    }
    forEachRegularizeBranch(init, base, ctx, [&](RegularChain B, RegStatus st) {
        if (st != RegStatus::Regular) return;  // degenerate over this piece
        const Polynomial ub = reduceCoefficientwise(uu, w, B);
        if (ub.degreeIn(w) != d) return;
        attachUppers(B.extended(ub), uppers, from + 1, ctx, sink);
    });
}

// ---- rational-root refinement of freshly built chains ------------------
//
// Members that reduce to univariate rational polynomials over the part
// below are split into one linear factor per rational root plus the
// root-free cofactor (roots ascending, cofactor last). Upper members are
// re-reduced along the way; branches where one degenerates are dropped.
void refineInto(const RegularChain& chain, std::size_t from, const RegularChain& built,
                const ChainSink& sink) {
    const auto& ms = chain.members();
    if (from == ms.size()) {
        sink(built);
        return;
    }
    const Polynomial& m = ms[from];
    const Variable v = *m.mainVariable();
    const int d = m.degreeIn(v);
    Polynomial mm = reduceCoefficientwise(m, v, built);
    if (mm.degreeIn(v) != d) return;  // degenerate over the refined base
    if (isUnivariateIn(mm, v)) {
        const Polynomial sf = squarefreePart(mm, v);
        const auto roots = rationalRoots(sf, v);
        Polynomial cofactor = sf;
        const Polynomial vp = Polynomial::variable(chain.order(), v);
        for (const auto& r : roots) {
            const Polynomial lin = vp - Polynomial::constant(chain.order(), r);
            cofactor = exactDivide(cofactor, lin);
            refineInto(chain, from + 1, built.extended(lin), sink);
        }
        if (cofactor.degreeIn(v) >= 1)
            refineInto(chain, from + 1, built.extended(canonical(cofactor)), sink);
    } else {
        refineInto(chain, from + 1, built.extended(canonical(mm)), sink);
    }
}

void emitRefined(const RegularChain& chain, const ChainSink& sink) {
    refineInto(chain, 0, RegularChain::empty(chain.order()), sink);
}

// ---- regularize ---------------------------------------------------------

// D5 split of the modulus at v against a reduced polynomial r whose
// initial is regular below. Emits zero branches first for each split, in
// ascending canonical order of the bottom factor.
void gcdSplit(const Polynomial& r, Variable v, const RegularChain& T, KernelContext ctx,
              const BranchSink& sink) {
    const Polynomial tv = *T.memberWithMain(v);
    const RegularChain lower = T.lowerPart(v);
    const std::vector<Polynomial> uppers = T.upperMembers(v);

    // Bottom univariate modulus: extended Euclid and exact division.
    if (lower.height() == 0 && isUnivariateIn(tv, v) && isUnivariateIn(r, v)) {
        const Polynomial g = canonical(extendedEuclid(tv, r, v).g);
        if (g.isConstant()) {
            sink(T, RegStatus::Regular);
            return;
        }
        if (g.degreeIn(v) == tv.degreeIn(v)) {
            sink(T, RegStatus::Zero);
            return;
        }
        const Polynomial cofactor = canonical(exactDivide(tv, g));
        attachUppers(lower.extended(g), uppers, 0, ctx,
                     [&](RegularChain X) { sink(std::move(X), RegStatus::Zero); });
        attachUppers(lower.extended(cofactor), uppers, 0, ctx, [&](RegularChain X) {
            regularizeInto(r, X, ctx, sink);
        });
        return;
    }

    forEachGCDBranch(tv, r, v, lower, ctx, [&](GCDBranch br) {
        const RegularChain& C = br.chain;
        const int dg = br.gcd.isConstant() ? 0 : br.gcd.degreeIn(v);
        const Polynomial tvC = canonical(reduceCoefficientwise(tv, v, C));
        if (dg == 0) {
            attachUppers(C.extended(tvC), uppers, 0, ctx,
                         [&](RegularChain X) { sink(std::move(X), RegStatus::Regular); });
            return;
        }
        if (dg == tvC.degreeIn(v)) {
            attachUppers(C.extended(tvC), uppers, 0, ctx,
                         [&](RegularChain X) { sink(std::move(X), RegStatus::Zero); });
            return;
        }
        // modulus splits: gcd part (r vanishes) and its cofactor
        const Polynomial g = canonical(br.gcd);
        Polynomial q = pseudoDivide(tvC, g, v).quotient;
        q = canonical(primitivePartIn(reduceCoefficientwise(q, v, C), v));
        attachUppers(C.extended(g), uppers, 0, ctx,
                     [&](RegularChain X) { sink(std::move(X), RegStatus::Zero); });
        attachUppers(C.extended(q), uppers, 0, ctx, [&](RegularChain X) {
            regularizeInto(r, X, ctx, sink);
        });
    });
}

void regularizeInto(const Polynomial& h, const RegularChain& T, KernelContext ctx,
                    const BranchSink& sink) {
    const Polynomial r = pseudoRemainderByChain(h, T);
    if (r.isZero()) {
        sink(T, RegStatus::Zero);
        return;
    }
    if (r.isConstant()) {
        sink(T, RegStatus::Regular);
        return;
    }
    const Variable v = *r.mainVariable();
    const Polynomial init = r.initial();
    if (!T.isAlgebraic(v)) {
        // free main variable: r is regular wherever its initial is
        if (init.isConstant()) {
            sink(T, RegStatus::Regular);
            return;
        }
        forEachRegularizeBranch(init, T, ctx, [&](RegularChain B, RegStatus st) {
            if (st == RegStatus::Regular) {
                sink(std::move(B), RegStatus::Regular);
            } else {
                regularizeInto(r.reductum(v), B, ctx, sink);
            }
        });
        return;
    }
    if (init.isConstant()) {
        gcdSplit(r, v, T, ctx, sink);
        return;
    }
    forEachRegularizeBranch(init, T, ctx, [&](RegularChain B, RegStatus st) {
        if (st == RegStatus::Zero) {
            regularizeInto(r.reductum(v), B, ctx, sink);
        } else {
            const Polynomial rr = reduceCoefficientwise(r, v, B);
            if (rr.isZero()) {
                sink(std::move(B), RegStatus::Zero);
            } else if (rr.isConstant()) {
                sink(std::move(B), RegStatus::Regular);
            } else {
                gcdSplit(rr, v, B, ctx, sink);
            }
        }
    });
}

// ---- regularGCD ----------------------------------------------------------

void gcdScan(const std::vector<Polynomial>& S, const Polynomial& q, Variable v, std::size_t j,
             const RegularChain& C, KernelContext ctx,
             const std::function<void(GCDBranch)>& sink) {
    const std::size_t dq = S.size() - 1;
    if (j >= dq) {
        // every proper subresultant vanished: q divides p modulo C
        Polynomial g = canonical(primitivePartIn(reduceCoefficientwise(q, v, C), v));
        sink(GCDBranch{std::move(g), C});
        return;
    }
    const Polynomial Sj = reduceCoefficientwise(S[j], v, C);
    if (Sj.isZero()) {
        gcdScan(S, q, v, j + 1, C, ctx, sink);
        return;
    }
    const int d = Sj.degreeIn(v) == kDegreeOfZero ? 0 : Sj.degreeIn(v);
    const Polynomial lc = Sj.coefficientOf(v, static_cast<unsigned>(d));
    forEachRegularizeBranch(lc, C, ctx, [&](RegularChain B, RegStatus st) {
        if (st == RegStatus::Zero) {
            gcdScan(S, q, v, j, B, ctx, sink);  // leading term dies; rescan
            return;
        }
        Polynomial g = reduceCoefficientwise(Sj, v, B);
        if (g.degreeIn(v) >= 1) g = primitivePartIn(g, v);
        sink(GCDBranch{canonical(g), std::move(B)});
    });
}

void regularGCDInto(const Polynomial& p, const Polynomial& q, Variable v, const RegularChain& T,
                    KernelContext ctx, const std::function<void(GCDBranch)>& sink) {
    if (!p.mainVariable() || !q.mainVariable() || !(*p.mainVariable() == v) ||
        !(*q.mainVariable() == v))
        throw std::invalid_argument("regularGCD: arguments must have main variable v");
    if (T.isAlgebraic(v) || !T.upperMembers(v).empty())
        throw std::invalid_argument("regularGCD: chain must lie below v");
    const Polynomial* a = &p;
    const Polynomial* b = &q;
    if (a->degreeIn(v) < b->degreeIn(v)) std::swap(a, b);
    const auto S = subresultantChain(*a, *b, v);
    gcdScan(S, *b, v, 0, T, ctx, sink);
}

// ---- intersect -----------------------------------------------------------

void intersectMain(const Polynomial& r, const RegularChain& T, KernelContext ctx,
                   const ChainSink& sink) {
    const Variable v = *r.mainVariable();
    const int d = r.degreeIn(v);
    const Polynomial h = r.coefficientOf(v, static_cast<unsigned>(d));

    // the "h = 0" side of the case distinction: h and the reductum vanish
    if (!h.isConstant()) {
        forEachIntersectChain(h, T, ctx, [&](RegularChain C) {
            forEachIntersectChain(r.reductum(v), C, ctx,
                                  [&](RegularChain D) { sink(std::move(D)); });
        });
    }

    // the generic side: h regular
    forEachRegularizeBranch(h, T, ctx, [&](RegularChain B, RegStatus st) {
        if (st != RegStatus::Regular) return;
        const Polynomial rb = reduceCoefficientwise(r, v, B);
        if (rb.isZero()) {
            sink(std::move(B));
            return;
        }
        if (rb.isConstant()) return;
        if (B.isAlgebraic(v)) {
            const Polynomial tv = *B.memberWithMain(v);
            const RegularChain lower = B.lowerPart(v);
            const std::vector<Polynomial> uppers = B.upperMembers(v);
            forEachGCDBranch(tv, rb, v, lower, ctx, [&](GCDBranch br) {
                if (br.gcd.isConstant() || br.gcd.degreeIn(v) < 1) return;  // coprime: no zeros
                attachUppers(br.chain.extended(br.gcd), uppers, 0, ctx,
                             [&](RegularChain X) { emitRefined(X, sink); });
            });
        } else {
            Polynomial q = canonical(primitivePartIn(rb, v));
            if (isUnivariateIn(q, v)) q = squarefreePart(q, v);
            const RegularChain lower = B.lowerPart(v);
            const std::vector<Polynomial> uppers = B.upperMembers(v);
            attachUppers(lower.extended(q), uppers, 0, ctx,
                         [&](RegularChain X) { emitRefined(X, sink); });
        }
    });
}

void intersectInto(const Polynomial& p, const RegularChain& T, KernelContext ctx,
                   const ChainSink& sink) {
    const Polynomial r = pseudoRemainderByChain(p, T);
    if (r.isZero()) {
        sink(T);  // W(T) ⊆ V(p): pass the chain through untouched
        return;
    }
    if (r.isConstant()) return;
    intersectMain(r, T, ctx, sink);
}

}  // namespace

void intersect(const Polynomial& p, const RegularChain& T, KernelContext ctx,
               GeneratorChannel<RegularChain>& out) {
    intersectInto(p, T, ctx, [&out](RegularChain c) { out.generateObject(std::move(c)); });
}

void regularize(const Polynomial& h, const RegularChain& T, KernelContext ctx,
                GeneratorChannel<RegBranch>& out) {
    regularizeInto(h, T, ctx, [&out](RegularChain c, RegStatus st) {
        out.generateObject(RegBranch{std::move(c), st});
    });
}

void regularGCD(const Polynomial& p, const Polynomial& q, Variable v, const RegularChain& T,
                KernelContext ctx, GeneratorChannel<GCDBranch>& out) {
    regularGCDInto(p, q, v, T, ctx,
                   [&out](GCDBranch b) { out.generateObject(std::move(b)); });
}

std::vector<RegularChain> intersectAll(const Polynomial& p, const RegularChain& T,
                                       KernelContext ctx) {
    std::vector<RegularChain> out;
    intersectInto(p, T, ctx, [&out](RegularChain c) { out.push_back(std::move(c)); });
    return out;
}

std::vector<RegBranch> regularizeAll(const Polynomial& h, const RegularChain& T,
                                     KernelContext ctx) {
    std::vector<RegBranch> out;
    regularizeInto(h, T, ctx,
                   [&out](RegularChain c, RegStatus st) { out.push_back(RegBranch{std::move(c), st}); });
    return out;
}

std::vector<GCDBranch> regularGCDAll(const Polynomial& p, const Polynomial& q, Variable v,
                                     const RegularChain& T, KernelContext ctx) {
    std::vector<GCDBranch> out;
    regularGCDInto(p, q, v, T, ctx, [&out](GCDBranch b) { out.push_back(std::move(b)); });
    return out;
}

}  // namespace trichain
