#pragma once

/**
 * @file certificate.hpp
 * @brief Machine-checkable construction certificates for witnesses.
 *
 * A certificate is a tree of blocks. Every leaf expands to a sub-witness
 * (positive values, product 1, declared sub-sum); composition concatenates
 * children, adding counts and sums. expand_certificate re-derives the full
 * witness from the certificate alone and re-checks every leaf invariant, so
 * a verified expansion is a proof of membership for (count, sum).
 */

#include <string>
#include <variant>
#include <vector>

#include "cubic.hpp"
#include "cycle.hpp"
#include "errors.hpp"
#include "rat.hpp"
#include "witness.hpp"

namespace ratsum {

struct Block;

/// k copies of 1: count k, sum k.
struct OnesBlock {
    long long count = 0;
};

/// The fixed quadruple (2, 1/2, 2, 1/2): count 4, sum 5.
struct PaperQuadBlock {};

/// A cubic solution expanded through the x^2/(yz) transform: count 3,
/// sum block_sum (which must equal the solution's m).
struct CubicTripleBlock {
    Rat block_sum;
    CubicSolution solution;
};

/// A k-cycle tuple expanded to its ratio witness: count k, sum tuple.n.
struct CycleBlock {
    CycleTuple tuple;
};

/// Concatenation of children: counts and sums add.
struct ComposeBlock {
    std::vector<Block> children;
};

struct Block {
    std::variant<OnesBlock, PaperQuadBlock, CubicTripleBlock, CycleBlock, ComposeBlock> node;
};

struct Certificate {
    Block root;
};

inline Block make_ones(long long count) { return Block{OnesBlock{count}}; }
inline Block make_paper_quad() { return Block{PaperQuadBlock{}}; }
inline Block make_cubic_triple(const CubicSolution& s) { return Block{CubicTripleBlock{s.m, s}}; }
inline Block make_cycle(const CycleTuple& t) { return Block{CycleBlock{t}}; }
inline Block make_compose(std::vector<Block> children) {
    return Block{ComposeBlock{std::move(children)}};
}

namespace detail {

struct Expansion {
    long long count = 0;
    Rat sum;
    std::vector<Rat> values;
};

inline Expansion expand_block(const Block& b);

struct ExpandVisitor {
    Expansion operator()(const OnesBlock& o) const {
        if (o.count < 1) throw invalid_block_error("ones: count must be positive");
        Expansion e;
        e.count = o.count;
        e.sum = Rat(static_cast<long>(o.count));
        e.values.assign(static_cast<std::size_t>(o.count), Rat(1));
        return e;
    }
    Expansion operator()(const PaperQuadBlock&) const {
        Expansion e;
        e.count = 4;
        e.sum = Rat(5);
        e.values = {Rat(2), Rat(1, 2), Rat(2), Rat(1, 2)};
        return e;
    }
    Expansion operator()(const CubicTripleBlock& c) const {
        if (!satisfies_cubic(c.solution))
            throw invalid_block_error("cubic_triple: values do not solve x^3+y^3+z^3 = m xyz");
        if (c.block_sum != c.solution.m)
            throw invalid_block_error("cubic_triple: declared block sum " + c.block_sum.str() +
                                      " differs from solution m = " + c.solution.m.str());
        const Witness w = lemma_transform(c.solution);
        return {3, w.m, w.values};
    }
    Expansion operator()(const CycleBlock& c) const {
        if (!cycle_identity_holds(c.tuple))
            throw invalid_block_error("cycle: ratio sum does not equal the declared target");
        const Witness w = cycle_to_witness(c.tuple);
        return {w.n, w.m, w.values};
    }
    Expansion operator()(const ComposeBlock& c) const {
        if (c.children.empty()) throw invalid_block_error("compose: no children");
        Expansion e;
        e.sum = Rat(0);
        for (const Block& child : c.children) {
            Expansion part = expand_block(child);
            e.count += part.count;
            e.sum += part.sum;
            e.values.insert(e.values.end(), part.values.begin(), part.values.end());
        }
        return e;
    }
};

inline Expansion expand_block(const Block& b) { return std::visit(ExpandVisitor{}, b.node); }

} // namespace detail

/// Expands the tree, re-checking every leaf. The result always passes
/// verify_witness; a final check guards against internal errors.
inline Witness expand_certificate(const Certificate& c) {
    detail::Expansion e = detail::expand_block(c.root);
    Witness w;
    w.n = e.count;
    w.m = e.sum;
    w.values = std::move(e.values);
    if (auto r = verify_witness(w); !r)
        throw invalid_block_error("certificate expansion failed verification: " + r.diagnostic);
    return w;
}

} // namespace ratsum
