#include "doctest.h"

#include "json.hpp"

#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct RunResult {
    int rc;
    std::string out;
};

// Run the installed binary, capture stdout; stderr goes to /dev/null so the
// expected error paths stay quiet in the test log.
RunResult run(const std::string& args, const std::string& env = "") {
    const std::string cmd =
        (env.empty() ? "" : "env " + env + " ") + ES_CLI_BIN + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    char buf[4096];
    std::size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
    const int status = pclose(pipe);
    REQUIRE(WIFEXITED(status));
    return {WEXITSTATUS(status), out};
}

std::string slurp(const fs::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("es_cli_" + std::to_string(::getpid()) + "_" +
                                            std::to_string(reinterpret_cast<std::uintptr_t>(this)));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("cli: solve") {
    auto r = run("solve 23");
    CHECK(r.rc == 0);
    CHECK(r.out == "p = 23  route = 2mod3\n(8, 23, 184)\n");

    r = run("solve 1009 --form duv");
    CHECK(r.rc == 0);
    CHECK(r.out ==
          "p = 1009  duv-form solutions: 2\n"
          "(253, 88792, 2042216)  [d=11, u=23, v=8072, n=8]\n"
          "(253, 92828, 1021108)  [d=23, u=11, v=4036, n=4]\n");

    r = run("solve 193 --form duv");
    CHECK(r.rc == 3);
    CHECK(r.out.find("complete search") != std::string::npos);

    r = run("solve 7 --form pair");
    CHECK(r.rc == 0);
    CHECK(r.out.find("x=y: (4, 4, 14)") != std::string::npos);
    CHECK(r.out.find("y=z: (2, 28, 28)") != std::string::npos);

    r = run("solve 29 --form gcd");
    CHECK(r.rc == 0);
    CHECK(r.out.find("n = 8: (8, 80, 2320)") != std::string::npos);
    CHECK(r.out.find("n = 11: (11, 22, 638)") != std::string::npos);

    r = run("solve 13 --form pair");
    CHECK(r.rc == 3);

    r = run("solve 73 --form duv --t-max 2");
    CHECK(r.rc == 0);
    CHECK(r.out.find("t = 1, w = 20") != std::string::npos);
    r = run("solve 73 --form duv --t-max 0");
    CHECK(r.rc == 3);

    SUBCASE("json") {
        r = run("solve 1009 --form duv --json");
        CHECK(r.rc == 0);
        const json j = json::parse(r.out);
        CHECK(j["p"] == 1009);
        REQUIRE(j["solutions"].size() == 2);
        CHECK(j["solutions"][0]["witness"]["d"] == 11);
        CHECK(j["solutions"][0]["triple"]["z"] == 2042216);

        const json any = json::parse(run("solve 23 --json").out);
        CHECK(any["route"] == "2mod3");
        CHECK(any["triple"]["x"] == 8);
    }

    SUBCASE("csv") {
        r = run("solve 1009 --form duv --csv");
        CHECK(r.rc == 0);
        CHECK(r.out ==
              "d,u,v,n,x,y,z\n"
              "11,23,8072,8,253,88792,2042216\n"
              "23,11,4036,4,253,92828,1021108\n");
    }

    SUBCASE("input validation") {
        CHECK(run("solve 10").rc == 2);            // composite without --composite
        CHECK(run("solve 10 --composite").rc == 0);
        CHECK(run("solve 10 --composite --form duv").rc == 2);
        CHECK(run("solve 7 --t-max 3").rc == 2);   // --t-max needs --form duv
        CHECK(run("solve 7 --form duv --t-max 3").rc == 2);  // p not 1 mod 4
        CHECK(run("solve 0").rc == 2);
        CHECK(run("solve -7").rc == 2);
        CHECK(run("solve notanumber").rc == 2);
        CHECK(run("solve 23 --form bogus").rc == 2);
        CHECK(run("solve 23 --json --csv").rc == 2);
    }
}

TEST_CASE("cli: enumerate") {
    auto r = run("enumerate 5");
    CHECK(r.rc == 0);
    CHECK(r.out == "(2, 4, 20)\n(2, 5, 10)\ncount = 2  truncated = no\n");

    r = run("enumerate 2");
    CHECK(r.out == "(1, 2, 2)\ncount = 1  truncated = no\n");

    r = run("enumerate 12 --cap 5");
    CHECK(r.rc == 0);
    CHECK(r.out.find("truncated = yes") != std::string::npos);

    const json j = json::parse(run("enumerate 12 --json").out);
    CHECK(j["n"] == 12);
    CHECK(j["count"] == 21);
    CHECK(j["truncated"] == false);
    CHECK(j["triples"].size() == 21);

    r = run("enumerate 5 --csv");
    CHECK(r.out == "x,y,z\n2,4,20\n2,5,10\n");

    CHECK(run("enumerate 0").rc == 2);
    CHECK(run("enumerate 200000").rc == 2);  // beyond the default oracle bound
}

TEST_CASE("cli: ES_MAX_ORACLE_N") {
    CHECK(run("enumerate 100").rc == 0);
    CHECK(run("enumerate 100", "ES_MAX_ORACLE_N=50").rc == 2);
    CHECK(run("enumerate 50", "ES_MAX_ORACLE_N=50").rc == 0);
    // raising the bound works; solve --composite only needs the first solution
    CHECK(run("solve 149993 --composite", "ES_MAX_ORACLE_N=150000").rc == 0);
    CHECK(run("solve 149993 --composite").rc == 2);  // default bound blocks it
    CHECK(run("enumerate 5", "ES_MAX_ORACLE_N=abc").rc == 2);
    CHECK(run("enumerate 5", "ES_MAX_ORACLE_N=0").rc == 2);
    CHECK(run("solve 101 --composite", "ES_MAX_ORACLE_N=50").rc == 2);
}

TEST_CASE("cli: discover") {
    auto r = run("discover 1009");
    CHECK(r.rc == 0);
    CHECK(r.out ==
          "1009 ≡ 307 (mod 351)  [d=11, n=8]  obstruction: holds\n"
          "1009 ≡ 275 (mod 367)  [d=23, n=4]  obstruction: holds\n");

    r = run("discover 193");
    CHECK(r.rc == 0);
    CHECK(r.out.empty());

    const json j = json::parse(run("discover 23 --json").out);
    CHECK(j["classes"].size() == 5);
    CHECK(j["classes"][0]["q"] == 3);
    CHECK(j["classes"][0]["qr_obstruction_ok"] == true);

    CHECK(run("discover 12").rc == 2);
}

TEST_CASE("cli: verify") {
    auto r = run("verify 1009 253 88792 2042216");
    CHECK(r.rc == 0);
    CHECK(r.out.find("valid: 4/1009") != std::string::npos);
    CHECK(r.out.find("type: II") != std::string::npos);
    CHECK(r.out.find("duv: d=11, u=23, v=8072, n=8") != std::string::npos);

    // input order does not matter
    r = run("verify 1009 2042216 253 88792");
    CHECK(r.rc == 0);
    CHECK(r.out.find("valid: 4/1009 = 1/253") != std::string::npos);

    r = run("verify 35617 8095 126867754 634338770");
    CHECK(r.rc == 1);
    CHECK(r.out.find("invalid") != std::string::npos);

    r = run("verify 35617 8905 126867754 634338770");
    CHECK(r.rc == 0);
    CHECK(r.out.find("duv: d=1781, u=5, v=71234, n=2") != std::string::npos);

    const json j = json::parse(run("verify 5 2 4 20 --json").out);
    CHECK(j["valid"] == true);
    CHECK(j["type"] == "I");
    CHECK(j["gcd_form"] == true);
    CHECK(j["duv"].is_null());

    const json bad = json::parse(run("verify 5 2 4 21 --json").out);
    CHECK(bad["valid"] == false);

    CHECK(run("verify 5 2 4").rc == 2);      // missing argument
    CHECK(run("verify 5 2 4 0").rc == 2);    // zero denominator
    CHECK(run("verify 12 4 13 156").rc == 0);
    CHECK(run("verify 12 4 13 156 --csv").out.find("true,other") != std::string::npos);
}

TEST_CASE("cli: census") {
    TempDir tmp;
    const auto out = (tmp.path / "c.jsonl").string();

    auto r = run("census 2 100 --out " + out + " --duv --exists");
    CHECK(r.rc == 0);
    CHECK(r.out.find("census [2, 100]: 25 primes, 25 written") != std::string::npos);
    CHECK(r.out.find("x=y: 13  y=z: 13") != std::string::npos);
    CHECK(r.out.find("duv-less: none") != std::string::npos);
    CHECK(r.out.find("all Egyptian of order 3: yes") != std::string::npos);

    SUBCASE("jsonl content matches the pair-flag rule") {
        std::ifstream in(out);
        std::string line;
        std::size_t lines = 0;
        while (std::getline(in, line)) {
            const json rec = json::parse(line);
            ++lines;
            CHECK(rec["v"] == 1);
            CHECK(rec["xy"] == (rec["p"].get<unsigned long long>() % 4 == 3));
            CHECK(rec["xy"] == rec["yz"]);
        }
        CHECK(lines == 25);
    }

    SUBCASE("duv-less primes are reported") {
        const auto out2 = (tmp.path / "d.jsonl").string();
        r = run("census 2 4369 --out " + out2 + " --duv");
        CHECK(r.rc == 0);
        CHECK(r.out.find("duv-less: 193, 2521") != std::string::npos);
    }

    SUBCASE("shards do not change the file") {
        const auto a = (tmp.path / "a.jsonl").string();
        const auto b = (tmp.path / "b.jsonl").string();
        CHECK(run("census 2 600 --out " + a + " --duv --gcd").rc == 0);
        CHECK(run("census 2 600 --out " + b + " --duv --gcd --shards 7").rc == 0);
        CHECK(slurp(a) == slurp(b));
    }

    SUBCASE("resume") {
        const auto full = slurp(out);
        std::size_t pos = 0;
        for (int i = 0; i < 10; ++i) pos = full.find('\n', pos) + 1;
        std::ofstream(out, std::ios::binary) << full.substr(0, pos);

        r = run("census 2 100 --out " + out + " --duv --exists --resume");
        CHECK(r.rc == 0);
        CHECK(r.out.find("resumed after p = 29") != std::string::npos);
        CHECK(slurp(out) == full);

        CHECK(run("census 2 100 --out " + out + " --gcd --resume").rc == 5);
        CHECK(run("census 2 101 --out " + out + " --duv --exists --resume").rc == 5);
    }

    SUBCASE("summary formats") {
        const json j = json::parse(
            run("census 2 100 --out " + out + " --duv --json").out);
        CHECK(j["primes"] == 25);
        CHECK(j["written"] == 25);
        CHECK(j["duvless"].empty());
        CHECK(j["routes"].is_null());

        r = run("census 2 100 --out " + out + " --csv");
        CHECK(r.out.find("lo,hi,primes,written,xy,yz,mordell_hard,duvless\n") == 0);
    }

    SUBCASE("errors") {
        CHECK(run("census 2 100 --duv").rc == 2);  // --out is required
        CHECK(run("census 100 2 --out " + out).rc == 2);
        CHECK(run("census 2 100 --out /nonexistent_dir/x.jsonl").rc == 4);
        CHECK(run("census 2 20000000 --out " + out + " --duv").rc == 2);  // over the duv bound
        CHECK(run("census 2 100 --out " + out + " --shards 0").rc == 2);
    }
}

TEST_CASE("cli: misc exit codes") {
    CHECK(run("").rc == 2);          // subcommand required
    CHECK(run("badcmd").rc == 2);
    CHECK(run("--help").rc == 0);
    CHECK(run("solve --help").rc == 0);
    CHECK(run("enumerate 5 --bogus-flag").rc == 2);
}
