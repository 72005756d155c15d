#pragma once

/**
 * @file registry.hpp
 * @brief Curated solution tables: the nine-term base cases (table1), the
 *        five-cycle witnesses for n <= 100 (table2), known cubic solutions
 *        with provenance, and the fallback realization for the m = 30 row.
 *
 * A table1 row partitions m into blocks (s, c): a sub-witness of count c
 * summing to s. Realizations: (s, 3) is a cubic triple for m = s, (5, 4) is
 * the fixed quadruple, and (s, s) is s ones. Counts always total 9.
 *
 * Every registry, embedded or loaded, is re-verified before use.
 */

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "certificate.hpp"
#include "cubic.hpp"
#include "cycle.hpp"
#include "errors.hpp"

namespace ratsum {

struct Table1Row {
    long long m = 0;
    std::vector<std::pair<long long, long long>> blocks; // (sum, count)
};

struct Registry {
    std::string version;
    std::map<long long, CubicSolution> cubic; // integer m -> solution
    std::map<long long, Table1Row> table1;
    std::map<long long, CycleTuple> table2; // n -> five-cycle
    std::optional<CycleTuple> fallback30;   // five-cycle summing to 25
};

/// Arithmetic consistency of every entry. Realizability of table1 blocks
/// against the cubic map is deferred to expansion time, so a registry may
/// omit a triple as long as nothing expands through it.
inline void verify_registry(const Registry& r) {
    if (r.version.empty()) throw verification_error("registry: empty version tag");
    for (const auto& [m, s] : r.cubic) {
        if (!s.m.is_integer() || s.m != Rat(static_cast<long>(m)))
            throw verification_error("registry: cubic entry keyed " + std::to_string(m) +
                                     " declares m = " + s.m.str());
        if (!satisfies_cubic(s))
            throw verification_error("registry: cubic entry for m = " + std::to_string(m) +
                                     " fails the cubic");
    }
    for (const auto& [m, row] : r.table1) {
        if (row.m != m) throw verification_error("registry: table1 row key/m mismatch");
        long long sums = 0, counts = 0;
        for (const auto& [s, c] : row.blocks) {
            if (s < 1 || c < 1)
                throw verification_error("registry: table1 block with nonpositive entry");
            if (c == 4 && s != 5)
                throw verification_error("registry: quadruple block must sum to 5");
            if (c != 3 && c != 4 && s != c)
                throw verification_error("registry: block (" + std::to_string(s) + ", " +
                                         std::to_string(c) + ") has no realization");
            sums += s;
            counts += c;
        }
        if (sums != m || counts != 9)
            throw verification_error("registry: table1 row " + std::to_string(m) +
                                     " totals (" + std::to_string(sums) + ", " +
                                     std::to_string(counts) + "), expected (m, 9)");
    }
    for (const auto& [n, t] : r.table2) {
        if (t.k != 5 || t.n != n || !cycle_identity_holds(t))
            throw verification_error("registry: table2 row for n = " + std::to_string(n) +
                                     " fails the cycle identity");
    }
    if (r.fallback30) {
        const CycleTuple& f = *r.fallback30;
        if (f.k != 5 || f.n != 25 || !cycle_identity_holds(f))
            throw verification_error("registry: fallback cycle must be a five-cycle summing to 25");
    }
}

/// Realizes one table1 row as a certificate block. Triple blocks need the
/// cubic map entry; the m = 30 row falls back to fallback cycle + quadruple
/// when the m = 10 triple is absent.
inline Block realize_table1_row(const Registry& r, long long m) {
    const auto it = r.table1.find(m);
    if (it == r.table1.end())
        throw std::invalid_argument("table1: no row for m = " + std::to_string(m));
    const Table1Row& row = it->second;

    const bool triples_available = [&] {
        for (const auto& [s, c] : row.blocks)
            if (c == 3 && !r.cubic.count(s)) return false;
        return true;
    }();
    if (!triples_available) {
        if (m == 30 && r.fallback30) // (25, 5) cycle + (5, 4) quadruple
            return make_compose({make_cycle(*r.fallback30), make_paper_quad()});
        throw missing_registry_error("table1: row " + std::to_string(m) +
                                     " needs a cubic triple the registry lacks");
    }

    std::vector<Block> blocks;
    blocks.reserve(row.blocks.size());
    for (const auto& [s, c] : row.blocks) {
        if (c == 3)
            blocks.push_back(make_cubic_triple(r.cubic.at(s)));
        else if (c == 4)
            blocks.push_back(make_paper_quad());
        else
            blocks.push_back(make_ones(c));
    }
    if (blocks.size() == 1) return blocks.front();
    return make_compose(std::move(blocks));
}

inline Registry make_embedded_registry() {
    Registry r;
    r.version = "1";

    {
        CubicSolution one;
        one.x = one.y = one.z = Rat(1);
        one.m = Rat(3);
        one.provenance = {CubicSource::registry, -1};
        r.cubic.emplace(3, one);
    }
    for (long long a = 0; a <= 50; ++a) r.cubic.emplace(a * a + 5, family_f1(a));
    for (long long a = 1; a <= 49; a += 2) // odd a gives integer m = (a^2 + 33)/2
        r.cubic.emplace((a * a + 33) / 2, family_f2(a));
    {
        // Minimal solution of x^3 + y^3 + z^3 = 10 xyz; not on either family.
        CubicSolution s;
        s.x = Rat(5);
        s.y = Rat(7);
        s.z = Rat(18);
        s.m = Rat(10);
        s.provenance = {CubicSource::search, -1};
        r.cubic.emplace(10, s);
    }

    const auto row = [&r](long long m, std::vector<std::pair<long long, long long>> blocks) {
        r.table1.emplace(m, Table1Row{m, std::move(blocks)});
    };
    row(9, {{9, 9}});
    row(10, {{5, 4}, {5, 5}});
    row(11, {{5, 3}, {6, 6}});
    row(12, {{6, 3}, {6, 6}});
    row(13, {{6, 3}, {5, 4}, {2, 2}});
    row(14, {{6, 3}, {5, 3}, {3, 3}});
    row(22, {{14, 3}, {5, 3}, {3, 3}});
    row(30, {{10, 3}, {10, 3}, {10, 3}});
    row(38, {{30, 3}, {5, 3}, {3, 3}});
    row(43, {{30, 3}, {10, 3}, {3, 3}});
    row(46, {{30, 3}, {10, 3}, {6, 3}});

    const auto t2 = [&r](long long n, std::vector<long long> b) {
        r.table2.emplace(n, CycleTuple{5, n, std::move(b)});
    };
    t2(9, {1, 2, 4, 18, 3});
    t2(17, {1, 2, 25, 45, 30});
    t2(25, {1, 3, 5, 100, 30});
    t2(33, {1, 4, 108, 150, 90});
    t2(35, {1, 2, 56, 18, 84});
    t2(41, {1, 3, 108, 150, 90});
    t2(45, {1, 3, 4, 162, 9});
    t2(47, {1, 3, 128, 144, 6});
    t2(49, {1, 3, 25, 4, 150});
    t2(54, {1, 2, 100, 180, 6});
    t2(57, {1, 3, 160, 24, 10});
    t2(59, {1, 3, 160, 24, 60});
    t2(60, {1, 28, 4, 126, 3});
    t2(61, {1, 18, 14, 3, 126});
    t2(65, {1, 2, 116, 18, 87});
    t2(66, {1, 2, 126, 48, 28});
    t2(67, {1, 38, 12, 2, 57});
    t2(70, {1, 2, 132, 18, 33});
    t2(73, {1, 7, 3, 196, 42});
    t2(75, {1, 32, 4, 169, 104});
    t2(79, {1, 17, 90, 3, 170});
    t2(80, {1, 6, 2, 147, 14});
    t2(81, {1, 45, 156, 4, 130});
    t2(82, {1, 35, 3, 140, 30});
    t2(84, {1, 72, 66, 4, 44});
    t2(86, {1, 48, 4, 150, 60});
    t2(87, {1, 20, 3, 200, 30});
    t2(88, {1, 25, 2, 125, 50});
    t2(89, {1, 60, 34, 3, 85});
    t2(90, {1, 75, 10, 147, 14});
    t2(93, {1, 2, 180, 12, 10});
    t2(95, {1, 42, 15, 2, 105});
    t2(96, {1, 63, 6, 196, 42});
    t2(97, {1, 80, 12, 200, 30});
    t2(100, {1, 78, 9, 192, 104});

    r.fallback30 = CycleTuple{5, 25, {1, 3, 5, 100, 30}};
    return r;
}

inline std::optional<CubicSolution> registry_lookup(long long m, const Registry& r) {
    const auto it = r.cubic.find(m);
    if (it == r.cubic.end()) return std::nullopt;
    return it->second;
}

/// The compiled-in registry, verified once on first use.
inline const Registry& embedded_registry() {
    static const Registry r = [] {
        Registry x = make_embedded_registry();
        verify_registry(x);
        return x;
    }();
    return r;
}

} // namespace ratsum
