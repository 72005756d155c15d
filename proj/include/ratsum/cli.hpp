#pragma once

/**
 * @file cli.hpp
 * @brief Command-line front end, exposed as a function for direct testing.
 *
 * Exit codes: 0 success (for `member`: yes), 1 verification failure or a
 * no answer, 2 invalid input or unknown answer, 3 internal invariant
 * violation. Output is deterministic byte-for-byte except the elapsed
 * field of search summaries.
 */

#include <chrono>
#include <cstdio>
#include <ostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "builder.hpp"
#include "json_io.hpp"
#include "ratsum.hpp"

namespace ratsum {

namespace detail {

inline std::string format_elapsed(double seconds) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.1f", seconds);
    return buf;
}

inline std::string verdict_word(Verdict v) {
    switch (v) {
        case Verdict::yes: return "yes";
        case Verdict::no: return "no";
        case Verdict::unknown: return "unknown";
    }
    return "unknown";
}

} // namespace detail

inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"witnesses for n positive rationals with product 1 and integer sum m"};
    app.require_subcommand(1);

    std::string registry_path;
    app.add_option("--registry", registry_path,
                   "registry JSON file overriding the embedded tables");
    const auto registry = [&registry_path]() -> Registry {
        if (registry_path.empty()) return embedded_registry();
        return load_registry(registry_path);
    };

    int code = 0;

    auto* witness_cmd = app.add_subcommand("witness", "construct a witness for (n, m), n >= 9");
    long long w_n = 0, w_m = 0;
    std::string w_json;
    witness_cmd->add_option("--n", w_n, "number of values")->required();
    witness_cmd->add_option("--m", w_m, "target integer sum")->required();
    witness_cmd->add_option("--json", w_json, "also write witness + certificate JSON here");
    witness_cmd->callback([&] {
        const Registry reg = registry();
        const BuiltWitness b = build_witness(w_n, w_m, reg);
        for (const Rat& v : b.witness.values) out << v.str() << "\n";
        out << "certificate: " << certificate_to_string(b.certificate) << "\n";
        if (!w_json.empty()) save_certificate(b.witness, b.certificate, w_json);
    });

    auto* member_cmd = app.add_subcommand("member", "decide whether m is in A_n");
    long long mem_n = 0, mem_m = 0;
    bool mem_json = false;
    long long mem_ymax = 40, mem_prefix = 500;
    member_cmd->add_option("--n", mem_n, "number of values")->required();
    member_cmd->add_option("--m", mem_m, "target integer sum")->required();
    member_cmd->add_option("--ymax", mem_ymax, "bound for the live cubic search (n = 3)");
    member_cmd->add_option("--prefix", mem_prefix, "prefix bound for the 4-cycle search (n = 4)");
    member_cmd->add_flag("--json", mem_json, "print the answer as JSON");
    member_cmd->callback([&] {
        const Registry reg = registry();
        MembershipOptions opts;
        opts.cubic_search_ymax = mem_ymax;
        opts.four_cycle_prefix = mem_prefix;
        const MembershipAnswer a = answer_membership(mem_n, mem_m, reg, opts);
        if (mem_json) {
            nlohmann::json doc{{"n", mem_n},
                               {"m", mem_m},
                               {"verdict", detail::verdict_word(a.verdict)},
                               {"reason", reason_tag(a.reason)}};
            if (a.witness) doc["witness"] = witness_to_json(*a.witness);
            if (a.certificate) doc["certificate"] = certificate_to_json(*a.certificate);
            out << doc.dump() << "\n";
        } else {
            out << detail::verdict_word(a.verdict) << " (" << reason_tag(a.reason) << ")\n";
            if (a.witness) {
                for (const Rat& v : a.witness->values) out << v.str() << "\n";
                out << "certificate: " << certificate_to_string(*a.certificate) << "\n";
            }
        }
        code = a.verdict == Verdict::yes ? 0 : a.verdict == Verdict::no ? 1 : 2;
    });

    auto* ts_cmd = app.add_subcommand("threesquares", "three-square classification of N");
    long long ts_n = 0;
    bool ts_json = false;
    ts_cmd->add_option("N", ts_n, "nonnegative integer")->required();
    ts_cmd->add_flag("--json", ts_json, "print the result as JSON");
    ts_cmd->callback([&] {
        const LegendreClass cls = classify(ts_n);
        if (cls.representable) {
            const ThreeSquares d = decompose(ts_n);
            if (ts_json)
                out << nlohmann::json{{"N", ts_n},
                                      {"representable", true},
                                      {"a", d.a},
                                      {"b", d.b},
                                      {"c", d.c}}
                           .dump()
                    << "\n";
            else
                out << d.a << " " << d.b << " " << d.c << "\n";
        } else {
            if (ts_json)
                out << nlohmann::json{{"N", ts_n},
                                      {"representable", false},
                                      {"k", cls.k},
                                      {"t", cls.t}}
                           .dump()
                    << "\n";
            else
                out << "excluded 4^k(8t+7) k=" << cls.k << " t=" << cls.t << "\n";
        }
    });

    auto* cubic_cmd = app.add_subcommand("cubic", "solutions of x^3 + y^3 + z^3 = m xyz");
    cubic_cmd->require_subcommand(1);

    auto* fam_cmd = cubic_cmd->add_subcommand("family", "closed-form family member");
    std::string fam_name;
    long long fam_a = 0;
    bool fam_json = false;
    fam_cmd->add_option("--family", fam_name, "f1 (quadratic) or f2 (quartic)")->required();
    fam_cmd->add_option("--param", fam_a, "family parameter a >= 0")->required();
    fam_cmd->add_flag("--json", fam_json, "print the solution as JSON");
    fam_cmd->callback([&] {
        CubicSolution s;
        if (fam_name == "f1")
            s = family_f1(fam_a);
        else if (fam_name == "f2")
            s = family_f2(fam_a);
        else
            throw std::invalid_argument("cubic family: --family must be f1 or f2");
        if (fam_json)
            out << detail::cubic_solution_to_json(s).dump() << "\n";
        else
            out << s.x.str() << " " << s.y.str() << " " << s.z.str() << " " << s.m.str() << "\n";
    });

    auto* csearch_cmd = cubic_cmd->add_subcommand("search", "exhaustive integer solutions");
    long long cs_m = 0, cs_ymax = 0;
    int cs_workers = 1;
    bool cs_json = false;
    csearch_cmd->add_option("--m", cs_m, "coefficient m")->required();
    csearch_cmd->add_option("--ymax", cs_ymax, "bound on x <= y")->required();
    csearch_cmd->add_option("--workers", cs_workers, "worker threads");
    csearch_cmd->add_flag("--json", cs_json, "print solutions as JSON");
    csearch_cmd->callback([&] {
        const auto found = search_cubic(cs_m, cs_ymax, cs_workers);
        if (cs_json) {
            nlohmann::json sols = nlohmann::json::array();
            for (const CubicSolution& s : found)
                sols.push_back({s.x.str(), s.y.str(), s.z.str()});
            out << nlohmann::json{{"m", cs_m}, {"ymax", cs_ymax}, {"solutions", std::move(sols)}}
                       .dump()
                << "\n";
        } else {
            for (const CubicSolution& s : found)
                out << s.x.str() << " " << s.y.str() << " " << s.z.str() << "\n";
            out << "solutions=" << found.size() << "\n";
        }
    });

    auto* ct_cmd = cubic_cmd->add_subcommand("transform", "product-1 triple from a solution");
    std::string ct_x, ct_y, ct_z;
    bool ct_json = false;
    ct_cmd->add_option("--x", ct_x, "rational x")->required();
    ct_cmd->add_option("--y", ct_y, "rational y")->required();
    ct_cmd->add_option("--z", ct_z, "rational z")->required();
    ct_cmd->add_flag("--json", ct_json, "print the witness as JSON");
    ct_cmd->callback([&] {
        CubicSolution s;
        s.x = Rat::parse(ct_x);
        s.y = Rat::parse(ct_y);
        s.z = Rat::parse(ct_z);
        if (!s.x.is_positive() || !s.y.is_positive() || !s.z.is_positive())
            throw std::invalid_argument("cubic transform: values must be positive");
        const Rat xyz = s.x * s.y * s.z;
        s.m = (s.x * s.x * s.x + s.y * s.y * s.y + s.z * s.z * s.z) / xyz;
        const Witness w = lemma_transform(s);
        if (ct_json) {
            out << nlohmann::json{{"m", w.m.str()}, {"witness", witness_to_json(w)}}.dump()
                << "\n";
        } else {
            out << "m = " << w.m.str() << "\n";
            for (const Rat& v : w.values) out << v.str() << "\n";
        }
    });

    auto* cycle_cmd = app.add_subcommand("cycle", "cyclic ratio witness searches");
    cycle_cmd->require_subcommand(1);

    auto* cyc_search = cycle_cmd->add_subcommand("search", "box scan for k-cycles");
    long long cy_k = 4, cy_n = 0, cy_b1max = 0, cy_bmax = 0;
    int cy_workers = 1;
    std::string cy_resume;
    bool cy_json = false;
    cyc_search->add_option("--k", cy_k, "cycle length, 4 or 5")->required();
    cyc_search->add_option("--n", cy_n, "target sum")->required();
    cyc_search->add_option("--b1max", cy_b1max, "bound on b1")->required();
    cyc_search->add_option("--bmax", cy_bmax, "bound on the remaining entries")->required();
    cyc_search->add_option("--workers", cy_workers, "worker threads");
    cyc_search->add_option("--resume", cy_resume, "checkpoint file to resume from / write to");
    cyc_search->add_flag("--json", cy_json, "print the result as JSON");
    cyc_search->callback([&] {
        if (cy_k != 4 && cy_k != 5)
            throw std::invalid_argument("cycle search: --k must be 4 or 5");
        ScanOptions opts;
        opts.workers = cy_workers;
        opts.checkpoint_path = cy_resume;
        const auto t0 = std::chrono::steady_clock::now();
        const CycleScanResult res = cy_k == 4 ? search_four_cycle(cy_n, cy_b1max, cy_bmax, opts)
                                              : search_five_cycle(cy_n, cy_b1max, cy_bmax, opts);
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (cy_json) {
            nlohmann::json sols = nlohmann::json::array();
            for (const CycleTuple& t : res.solutions) sols.push_back(t.b);
            out << nlohmann::json{{"k", cy_k},
                                  {"n", cy_n},
                                  {"b1max", cy_b1max},
                                  {"bmax", cy_bmax},
                                  {"solutions", std::move(sols)},
                                  {"scanned", res.scanned},
                                  {"elapsed", secs}}
                       .dump()
                << "\n";
        } else {
            for (const CycleTuple& t : res.solutions) {
                for (std::size_t i = 0; i < t.b.size(); ++i) out << (i ? " " : "") << t.b[i];
                out << "\n";
            }
            out << "solutions=" << res.solutions.size() << " scanned=" << res.scanned
                << " elapsed=" << detail::format_elapsed(secs) << "\n";
        }
    });

    auto* cyc_verify = cycle_cmd->add_subcommand("verify-table2", "recheck the curated 5-cycles");
    bool cv_json = false;
    cyc_verify->add_flag("--json", cv_json, "print the tally as JSON");
    cyc_verify->callback([&] {
        const Registry reg = registry();
        long long ok = 0;
        const long long total = static_cast<long long>(reg.table2.size());
        nlohmann::json rows = nlohmann::json::array();
        for (const auto& [n, t] : reg.table2) {
            const bool pass = cycle_identity_holds(t) && verify_witness(cycle_to_witness(t)).ok;
            if (pass) ++ok;
            if (cv_json) {
                rows.push_back({{"n", n}, {"b", t.b}, {"pass", pass}});
            } else {
                out << "n=" << n << " (";
                for (std::size_t i = 0; i < t.b.size(); ++i) out << (i ? "," : "") << t.b[i];
                out << ") " << (pass ? "pass" : "fail") << "\n";
            }
        }
        if (cv_json)
            out << nlohmann::json{{"rows", std::move(rows)}, {"ok", ok}, {"total", total}}.dump()
                << "\n";
        else
            out << "table2: " << ok << "/" << total << " ok\n";
        if (ok != total) code = 1;
    });

    auto* tables_cmd = app.add_subcommand("tables", "curated table operations");
    tables_cmd->require_subcommand(1);
    auto* tcheck = tables_cmd->add_subcommand("check", "expand and verify every curated row");
    bool tc_json = false;
    tcheck->add_flag("--json", tc_json, "print the tally as JSON");
    tcheck->callback([&] {
        const Registry reg = registry();
        long long ok1 = 0;
        const long long total1 = static_cast<long long>(reg.table1.size());
        for (const auto& [m, row] : reg.table1) {
            try {
                const BuiltWitness b = table1_expand(m, reg);
                if (verify_witness(b.witness).ok)
                    ++ok1;
                else
                    err << "table1 row " << m << " fails verification\n";
            } catch (const std::exception& e) {
                err << "table1 row " << m << ": " << e.what() << "\n";
            }
        }
        long long ok2 = 0;
        const long long total2 = static_cast<long long>(reg.table2.size());
        for (const auto& [n, t] : reg.table2) {
            if (cycle_identity_holds(t) && verify_witness(cycle_to_witness(t)).ok)
                ++ok2;
            else
                err << "table2 row for n = " << n << " fails verification\n";
        }
        if (tc_json)
            out << nlohmann::json{{"table1", {{"ok", ok1}, {"total", total1}}},
                                  {"table2", {{"ok", ok2}, {"total", total2}}}}
                       .dump()
                << "\n";
        else
            out << "table1: " << ok1 << "/" << total1 << " ok, table2: " << ok2 << "/" << total2
                << " ok\n";
        if (ok1 != total1 || ok2 != total2) code = 1;
    });

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("ratsum");
    for (const std::string& a : args) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
        return code;
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const parse_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const schema_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const verification_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const invalid_block_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const missing_registry_error& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::invalid_argument& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::logic_error& e) {
        err << "internal error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

} // namespace ratsum
