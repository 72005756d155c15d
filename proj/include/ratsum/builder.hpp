#pragma once

/**
 * @file builder.hpp
 * @brief Witness construction for n >= 9 and membership answers for all n.
 *
 * build_witness reduces (n, m) to the nine-term problem for M = m - n + 9
 * and dispatches: a curated table1 row, else M - 15 = a^2 + b^2 + c^2 with
 * three quadratic-family triples, else 2M - 99 = a^2 + b^2 + c^2 with three
 * quartic-family triples (half-integer block sums; the total is integral).
 * The parity argument in three_squares.hpp guarantees one branch applies,
 * and n - 9 ones pad the count.
 *
 * answer_membership settles small n by characterization (n <= 2), the
 * Bondarenko square criterion and searches (n = 3), and composition chains
 * over curated tables and cycle searches (4 <= n <= 8). Bounded searches
 * that come up empty yield Unknown, never No.
 */

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>

#include "certificate.hpp"
#include "cubic.hpp"
#include "cycle.hpp"
#include "registry.hpp"
#include "three_squares.hpp"
#include "witness.hpp"

namespace ratsum {

struct BuiltWitness {
    Witness witness;
    Certificate certificate;
};

enum class Verdict { yes, no, unknown };

enum class Reason {
    amgm_bound,          // m < n: impossible, sum of positives with product 1 is >= n
    a2_characterization, // A_1 = {1}, A_2 = {2}
    bondarenko_square,   // n = 3, m = 4k^2 with 3 not dividing k
    constructed,         // closed-form construction (theorem machinery, ones, quadruple)
    registry,            // realized from a curated table entry
    search,              // found by a bounded search, or (for Unknown) exhausted by one
    conjectured_open     // (n, m) = (4, 8)
};

inline std::string reason_tag(Reason r) {
    switch (r) {
        case Reason::amgm_bound: return "amgm-bound";
        case Reason::a2_characterization: return "a2-characterization";
        case Reason::bondarenko_square: return "bondarenko-square";
        case Reason::constructed: return "constructed";
        case Reason::registry: return "registry";
        case Reason::search: return "search";
        case Reason::conjectured_open: return "conjectured not in A_4";
    }
    return "unknown-reason";
}

struct MembershipAnswer {
    Verdict verdict = Verdict::unknown;
    Reason reason = Reason::search;
    std::optional<Witness> witness;         // present iff verdict == yes
    std::optional<Certificate> certificate; // present iff verdict == yes
};

struct MembershipOptions {
    long long cubic_search_ymax = 40;   // live n = 3 search bound
    long long four_cycle_prefix = 500;  // prefix bound for the n = 4 cycle search
};

namespace detail {

/// Branch blocks for the nine-term core of m = M, flattened child list.
inline std::vector<Block> nine_term_blocks(long long M, const Registry& reg) {
    if (auto it = reg.table1.find(M); it != reg.table1.end()) {
        Block b = realize_table1_row(reg, M);
        if (auto* comp = std::get_if<ComposeBlock>(&b.node)) return std::move(comp->children);
        return {std::move(b)};
    }
    if (M >= 15 && classify(M - 15).representable) {
        const ThreeSquares d = decompose(M - 15);
        return {make_cubic_triple(family_f1(d.a)), make_cubic_triple(family_f1(d.b)),
                make_cubic_triple(family_f1(d.c))};
    }
    if (M >= 50 && classify(2 * M - 99).representable) {
        const ThreeSquares d = decompose(2 * M - 99);
        return {make_cubic_triple(family_f2(d.a)), make_cubic_triple(family_f2(d.b)),
                make_cubic_triple(family_f2(d.c))};
    }
    throw std::logic_error("build_witness: no branch applies at M = " + std::to_string(M) +
                           "; parity coverage violated");
}

} // namespace detail

/// Witness and certificate for n values summing to m, for any m >= n >= 9.
inline BuiltWitness build_witness(long long n, long long m,
                                  const Registry& reg = embedded_registry()) {
    if (n < 9) throw std::invalid_argument("build_witness: requires n >= 9");
    if (m < n) throw std::invalid_argument("build_witness: requires m >= n (AM-GM bound)");
    if (m - n > 2000000000LL)
        throw std::invalid_argument("build_witness: m - n beyond supported scale (2e9)");

    const long long M = m - n + 9;
    std::vector<Block> children = detail::nine_term_blocks(M, reg);
    if (n > 9) children.push_back(make_ones(n - 9));

    Certificate cert;
    cert.root = children.size() == 1 ? std::move(children.front())
                                     : make_compose(std::move(children));
    Witness w = expand_certificate(cert);
    if (w.n != n || w.m != Rat(static_cast<long>(m)))
        throw std::logic_error("build_witness: expansion does not match target");
    return {std::move(w), std::move(cert)};
}

/// Expands one curated nine-term row directly.
inline BuiltWitness table1_expand(long long m, const Registry& reg = embedded_registry()) {
    Certificate cert;
    cert.root = realize_table1_row(reg, m);
    Witness w = expand_certificate(cert);
    if (w.n != 9 || w.m != Rat(static_cast<long>(m)))
        throw std::logic_error("table1_expand: row for m = " + std::to_string(m) +
                               " expands to the wrong totals");
    return {std::move(w), std::move(cert)};
}

namespace detail {

using BlockReason = std::pair<Block, Reason>;

/// Certificate block for m in A_3, or nullopt (not found / provably absent;
/// the caller distinguishes those two cases itself).
inline std::optional<BlockReason> a3_block(long long m, const Registry& reg,
                                           const MembershipOptions& opts) {
    if (m < 3) return std::nullopt;
    if (m == 3) return BlockReason{make_ones(3), Reason::constructed};
    if (auto it = reg.cubic.find(m); it != reg.cubic.end())
        return BlockReason{make_cubic_triple(it->second), Reason::registry};
    if (a3_nonmember(m)) return std::nullopt;
    const auto found = search_cubic(m, opts.cubic_search_ymax);
    if (!found.empty()) return BlockReason{make_cubic_triple(found.front()), Reason::search};
    return std::nullopt;
}

inline std::optional<BlockReason> a4_block(long long m, const Registry& reg,
                                           const MembershipOptions& opts) {
    if (m < 4) return std::nullopt;
    if (m == 4) return BlockReason{make_ones(4), Reason::constructed};
    if (m == 5) return BlockReason{make_paper_quad(), Reason::constructed};
    if (m == 8) return std::nullopt; // conjectured open; never claimed via search
    if (auto sub = a3_block(m - 1, reg, opts))
        return BlockReason{make_compose({std::move(sub->first), make_ones(1)}), sub->second};
    if (auto t = find_four_cycle(m, opts.four_cycle_prefix))
        return BlockReason{make_cycle(*t), Reason::search};
    return std::nullopt;
}

inline std::optional<BlockReason> a5_block(long long m, const Registry& reg,
                                           const MembershipOptions& opts) {
    if (m < 5) return std::nullopt;
    if (m == 5) return BlockReason{make_ones(5), Reason::constructed};
    if (auto it = reg.table2.find(m); it != reg.table2.end())
        return BlockReason{make_cycle(it->second), Reason::registry};
    if (auto sub = a3_block(m - 2, reg, opts))
        return BlockReason{make_compose({std::move(sub->first), make_ones(2)}), sub->second};
    if (auto sub = a4_block(m - 1, reg, opts))
        return BlockReason{make_compose({std::move(sub->first), make_ones(1)}), sub->second};
    return std::nullopt;
}

/// n in [3, 8]: composition chains over the helpers above, padding with ones.
inline std::optional<BlockReason> small_n_block(long long n, long long m, const Registry& reg,
                                                const MembershipOptions& opts) {
    switch (n) {
        case 3: return a3_block(m, reg, opts);
        case 4: return a4_block(m, reg, opts);
        case 5: return a5_block(m, reg, opts);
        default: break;
    }
    if (m == n) return BlockReason{make_ones(n), Reason::constructed};
    if (auto sub = small_n_block(n - 1, m - 1, reg, opts))
        return BlockReason{make_compose({std::move(sub->first), make_ones(1)}), sub->second};
    return std::nullopt;
}

inline MembershipAnswer yes_answer(Block root, Reason reason, long long n, long long m) {
    Certificate cert;
    cert.root = std::move(root);
    Witness w = expand_certificate(cert);
    if (w.n != n || w.m != Rat(static_cast<long>(m)))
        throw std::logic_error("answer_membership: certificate does not match target");
    MembershipAnswer a;
    a.verdict = Verdict::yes;
    a.reason = reason;
    a.witness = std::move(w);
    a.certificate = std::move(cert);
    return a;
}

} // namespace detail

/// Is m in A_n? Yes answers always carry a verified witness + certificate.
/// No answers cite a proof; bounded searches that fail yield Unknown.
inline MembershipAnswer answer_membership(long long n, long long m,
                                          const Registry& reg = embedded_registry(),
                                          const MembershipOptions& opts = {}) {
    if (n < 1 || m < 1)
        throw std::invalid_argument("answer_membership: n and m must be positive");

    if (m < n) return {Verdict::no, Reason::amgm_bound, std::nullopt, std::nullopt};
    if (m == n) return detail::yes_answer(make_ones(n), Reason::constructed, n, m);

    // m > n from here on.
    if (n <= 2) return {Verdict::no, Reason::a2_characterization, std::nullopt, std::nullopt};

    if (n >= 9) {
        BuiltWitness b = build_witness(n, m, reg);
        MembershipAnswer a;
        a.verdict = Verdict::yes;
        a.reason = Reason::constructed;
        a.witness = std::move(b.witness);
        a.certificate = std::move(b.certificate);
        return a;
    }

    if (n == 3 && a3_nonmember(m))
        return {Verdict::no, Reason::bondarenko_square, std::nullopt, std::nullopt};
    if (n == 4 && m == 8)
        return {Verdict::unknown, Reason::conjectured_open, std::nullopt, std::nullopt};

    if (auto blk = detail::small_n_block(n, m, reg, opts))
        return detail::yes_answer(std::move(blk->first), blk->second, n, m);

    return {Verdict::unknown, Reason::search, std::nullopt, std::nullopt};
}

} // namespace ratsum
