#include <catch2/catch_amalgamated.hpp>

#include <cstdio>
#include <fstream>
#include <sstream>

#include <ratsum/cli.hpp>

namespace {

struct CliResult {
    int code = 0;
    std::string out;
    std::string err;
};

CliResult run(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = ratsum::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempFile {
    std::string path;
    explicit TempFile(std::string p) : path(std::move(p)) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("witness command prints values then the certificate") {
    const auto r = run({"witness", "--n", "9", "--m", "22"});
    CHECK(r.code == 0);
    CHECK(r.err.empty());
    const std::string values = "4/91\n169/14\n49/26\n4\n1/2\n1/2\n1\n1\n1\ncertificate: ";
    CHECK(r.out.rfind(values, 0) == 0);
    CHECK(r.out.find("\"kind\":\"compose\"") != std::string::npos);
    CHECK(r.out.back() == '\n');
}

TEST_CASE("witness command writes a loadable JSON document") {
    TempFile tmp("cli_witness.json");
    const auto r = run({"witness", "--n", "12", "--m", "20", "--json", tmp.path});
    CHECK(r.code == 0);
    const auto [w, cert] = ratsum::load_certificate(tmp.path);
    CHECK(w.n == 12);
    CHECK(w.m == ratsum::Rat(20));
}

TEST_CASE("witness command rejects bad input with exit 2") {
    const auto small = run({"witness", "--n", "8", "--m", "10"});
    CHECK(small.code == 2);
    CHECK(small.err.find("error:") != std::string::npos);

    const auto amgm = run({"witness", "--n", "9", "--m", "8"});
    CHECK(amgm.code == 2);

    const auto missing = run({"witness", "--n", "9"});
    CHECK(missing.code == 2);
}

TEST_CASE("member command exit codes map verdicts") {
    const auto yes = run({"member", "--n", "9", "--m", "17"});
    CHECK(yes.code == 0);
    CHECK(yes.out.substr(0, 18) == "yes (constructed)\n");
    CHECK(yes.out.find("certificate: ") != std::string::npos);

    const auto reg = run({"member", "--n", "5", "--m", "9"});
    CHECK(reg.code == 0);
    CHECK(reg.out.substr(0, 15) == "yes (registry)\n");
    CHECK(reg.out.find("9/2\n") != std::string::npos);

    const auto no = run({"member", "--n", "3", "--m", "4"});
    CHECK(no.code == 1);
    CHECK(no.out == "no (bondarenko-square)\n");

    const auto amgm = run({"member", "--n", "9", "--m", "8"});
    CHECK(amgm.code == 1);
    CHECK(amgm.out == "no (amgm-bound)\n");

    const auto a2 = run({"member", "--n", "2", "--m", "3"});
    CHECK(a2.code == 1);
    CHECK(a2.out == "no (a2-characterization)\n");

    const auto open = run({"member", "--n", "4", "--m", "8"});
    CHECK(open.code == 2);
    CHECK(open.out == "unknown (conjectured not in A_4)\n");
}

TEST_CASE("member --json emits a machine-readable answer") {
    const auto r = run({"member", "--n", "5", "--m", "9", "--json"});
    CHECK(r.code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc.at("verdict") == "yes");
    CHECK(doc.at("reason") == "registry");
    CHECK(doc.at("witness").at("values").size() == 5);
    CHECK(doc.at("certificate").at("kind") == "cycle");

    const auto no = run({"member", "--n", "3", "--m", "16", "--json"});
    CHECK(no.code == 1);
    const auto nodoc = nlohmann::json::parse(no.out);
    CHECK(nodoc.at("verdict") == "no");
    CHECK_FALSE(nodoc.contains("witness"));
}

TEST_CASE("threesquares output") {
    const auto yes = run({"threesquares", "35"});
    CHECK(yes.code == 0);
    CHECK(yes.out == "1 3 5\n");

    const auto no = run({"threesquares", "7"});
    CHECK(no.code == 0);
    CHECK(no.out == "excluded 4^k(8t+7) k=0 t=0\n");

    const auto no28 = run({"threesquares", "28"});
    CHECK(no28.out == "excluded 4^k(8t+7) k=1 t=0\n");

    const auto j = run({"threesquares", "35", "--json"});
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc.at("representable") == true);
    CHECK(doc.at("a") == 1);
    CHECK(doc.at("c") == 5);

    const auto neg = run({"threesquares", "--", "-3"});
    CHECK(neg.code == 2);
}

TEST_CASE("cubic family and transform") {
    const auto f1 = run({"cubic", "family", "--family", "f1", "--param", "3"});
    CHECK(f1.code == 0);
    CHECK(f1.out == "2 13 7 14\n");

    const auto f2 = run({"cubic", "family", "--family", "f2", "--param", "0"});
    CHECK(f2.out == "147/4 147/16 147/16 33/2\n");

    const auto bad = run({"cubic", "family", "--family", "f3", "--param", "1"});
    CHECK(bad.code == 2);

    const auto tr = run({"cubic", "transform", "--x", "2", "--y", "13", "--z", "7"});
    CHECK(tr.code == 0);
    CHECK(tr.out == "m = 14\n4/91\n169/14\n49/26\n");

    const auto halves = run({"cubic", "transform", "--x", "147/4", "--y", "147/16", "--z", "147/16"});
    CHECK(halves.out.substr(0, 9) == "m = 33/2\n");

    const auto neg = run({"cubic", "transform", "--x", "-2", "--y", "1", "--z", "1"});
    CHECK(neg.code == 2);
}

TEST_CASE("cubic search lists sorted solutions with a tally") {
    const auto r = run({"cubic", "search", "--m", "9", "--ymax", "20"});
    CHECK(r.code == 0);
    CHECK(r.out.find("2 3 7\n") != std::string::npos);
    CHECK(r.out.find("solutions=") != std::string::npos);

    const auto j = run({"cubic", "search", "--m", "5", "--ymax", "10", "--json"});
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc.at("m") == 5);
    const auto& sols = doc.at("solutions");
    const bool has112 = std::any_of(sols.begin(), sols.end(), [](const nlohmann::json& s) {
        return s == nlohmann::json{"1", "1", "2"};
    });
    CHECK(has112);
}

TEST_CASE("cycle search prints tuples and a summary line") {
    const auto r = run({"cycle", "search", "--k", "5", "--n", "9", "--b1max", "1", "--bmax", "20"});
    CHECK(r.code == 0);
    CHECK(r.out.find("1 2 4 18 3\n") != std::string::npos);
    CHECK(r.out.find("solutions=") != std::string::npos);
    CHECK(r.out.find(" scanned=") != std::string::npos);
    CHECK(r.out.find(" elapsed=") != std::string::npos);

    const auto badk = run({"cycle", "search", "--k", "3", "--n", "5", "--b1max", "1", "--bmax", "2"});
    CHECK(badk.code == 2);

    const auto j = run({"cycle", "search", "--k", "4", "--n", "5", "--b1max", "2", "--bmax", "2",
                        "--json"});
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc.at("k") == 4);
    const auto& sols = doc.at("solutions");
    const bool has1212 = std::any_of(sols.begin(), sols.end(), [](const nlohmann::json& s) {
        return s == nlohmann::json{1, 2, 1, 2};
    });
    CHECK(has1212);
    CHECK(doc.at("scanned").get<long long>() > 0);
}

TEST_CASE("cycle search resume writes and honors checkpoints") {
    TempFile tmp("cli_resume.ckpt");
    const auto first =
        run({"cycle", "search", "--k", "4", "--n", "5", "--b1max", "3", "--bmax", "6", "--resume",
             tmp.path});
    CHECK(first.code == 0);

    const auto second =
        run({"cycle", "search", "--k", "4", "--n", "5", "--b1max", "3", "--bmax", "6", "--resume",
             tmp.path});
    CHECK(second.code == 0);
    // identical tuples, and the replay does not rescan
    const auto strip_summary = [](const std::string& s) {
        return s.substr(0, s.rfind("solutions="));
    };
    CHECK(strip_summary(first.out) == strip_summary(second.out));

    const auto clash =
        run({"cycle", "search", "--k", "4", "--n", "6", "--b1max", "3", "--bmax", "6", "--resume",
             tmp.path});
    CHECK(clash.code == 1);
    CHECK(clash.err.find("error:") != std::string::npos);
}

TEST_CASE("verify-table2 reports each row and a tally") {
    const auto r = run({"cycle", "verify-table2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("n=9 (1,2,4,18,3) pass\n") != std::string::npos);
    CHECK(r.out.find("n=100 (1,78,9,192,104) pass\n") != std::string::npos);
    CHECK(r.out.find("table2: 35/35 ok\n") != std::string::npos);
    CHECK(r.out.find("fail") == std::string::npos);

    const auto j = run({"cycle", "verify-table2", "--json"});
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc.at("ok") == 35);
    CHECK(doc.at("total") == 35);
    CHECK(doc.at("rows").size() == 35);
}

TEST_CASE("tables check tallies both tables") {
    const auto r = run({"tables", "check"});
    CHECK(r.code == 0);
    CHECK(r.out == "table1: 11/11 ok, table2: 35/35 ok\n");
    CHECK(r.err.empty());

    const auto j = run({"tables", "check", "--json"});
    const auto doc = nlohmann::json::parse(j.out);
    CHECK(doc.at("table1").at("ok") == 11);
    CHECK(doc.at("table2").at("total") == 35);
}

TEST_CASE("a registry override changes what the commands see") {
    TempFile tmp("cli_registry.json");

    // a registry stripped of its m = 10 triple leaves rows 43 and 46 unrealizable,
    // while row 30 still works through the fallback cycle
    ratsum::Registry reg = ratsum::make_embedded_registry();
    reg.cubic.erase(10);
    ratsum::save_registry(reg, tmp.path);

    const auto r = run({"--registry", tmp.path, "tables", "check"});
    CHECK(r.code == 1);
    CHECK(r.out == "table1: 9/11 ok, table2: 35/35 ok\n");
    CHECK(r.err.find("table1 row 43") != std::string::npos);
    CHECK(r.err.find("table1 row 46") != std::string::npos);

    const auto w = run({"--registry", tmp.path, "witness", "--n", "9", "--m", "30"});
    CHECK(w.code == 0);
    CHECK(w.out.find("\"kind\":\"cycle\"") != std::string::npos);

    const auto missing = run({"--registry", "no_such_registry.json", "tables", "check"});
    CHECK(missing.code == 2);
    CHECK(missing.err.find("error:") != std::string::npos);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
    CHECK(run({"witness", "--n", "nine", "--m", "9"}).code == 2);

    const auto help = run({"--help"});
    CHECK(help.code == 0);
    CHECK(help.out.find("witness") != std::string::npos);
}
