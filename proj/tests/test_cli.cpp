#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#ifndef QGL_CLI_PATH
#define QGL_CLI_PATH "qgl"
#endif

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

std::string slurp(const std::string& path) {
    std::ifstream in(path);
    return std::string((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
}

RunResult run_cli(const std::string& args) {
    const std::string out_path = "/tmp/qgl_cli_out.txt";
    const std::string err_path = "/tmp/qgl_cli_err.txt";
    const std::string cmd =
        std::string(QGL_CLI_PATH) + " " + args + " >" + out_path + " 2>" + err_path;
    const int status = std::system(cmd.c_str());
    RunResult r;
    r.code = WEXITSTATUS(status);
    r.out = slurp(out_path);
    r.err = slurp(err_path);
    return r;
}

} // namespace

TEST_CASE("exit codes: success and usage errors") {
    CHECK(run_cli("verify determinant --n 2 --q 2").code == 0);
    CHECK(run_cli("nf \"E[2,2]*E[1,1]\"").code == 0);
    // parse error with offset on stderr
    {
        const RunResult r = run_cli("nf \"E[1,3]\"");
        CHECK(r.code == 2);
        CHECK(r.err.find("offset") != std::string::npos);
        CHECK(r.out.empty());
    }
    CHECK(run_cli("verify no-such-suite --q 2").code == 2);
    CHECK(run_cli("verify green --q 4").code == 2);      // non-prime q
    CHECK(run_cli("sc --kind h --q 2 \"[[[1,0],[0,0]]]\"").code == 2); // wrong arity
    CHECK(run_cli("antipode --i 1 --j 2 --dd").code == 2);             // no DD localization
    CHECK(run_cli("bogus-subcommand").code == 2);
    CHECK(run_cli("verify green --q 2 --d 9").code == 2); // guard exceeded
}

TEST_CASE("pinned command outputs") {
    // a at e_11 (d=1): q - 1 = 1 at q=2
    CHECK(run_cli("sc --kind a --q 2 \"[[[1,0],[0,0]]]\"").out ==
          "{\"kind\":\"a\",\"q\":2,\"value\":1}\n");
    const RunResult nf = run_cli("nf \"E[2,2]*E[1,1]\"");
    CHECK(nf.out.find("\"word\":[[1,1],[2,2]]") != std::string::npos);
    CHECK(nf.out.find("\"word\":[[1,2],[2,1]]") != std::string::npos);
    CHECK(nf.out.find("\"-2\":\"-1/1\"") != std::string::npos); // v - v^-1 coefficient
    const RunResult ver = run_cli("verify determinant --n 2 --q 2");
    CHECK(ver.out.find("\"suite\":\"determinant\"") != std::string::npos);
    CHECK(ver.out.find("\"failures\":[]") != std::string::npos);
    // multi-q runs are arrays
    CHECK(run_cli("verify determinant --n 2 --q 2,3").out.substr(0, 1) == "[");
    // geometric product and coproduct commands
    const RunResult mul = run_cli("mul \"E[2,1]\" \"E[1,2]\" --kind dot --q 2");
    CHECK(mul.code == 0);
    CHECK(mul.out.find("\"matrix\":[[0,1],[1,0]]") != std::string::npos);
    const RunResult dl = run_cli("delta \"E[1,1]\" --kind plain --q 2");
    CHECK(dl.code == 0);
    CHECK(dl.out.find("\"left\":[[0,1],[0,0]]") != std::string::npos);
    const RunResult ddmul = run_cli("mul --dd \"c[2,2]\" \"c[1,1]\" --kind bullet --q 2");
    CHECK(ddmul.code == 0);
    const RunResult orb = run_cli("orbits --n 2 --d 1 --q 3");
    CHECK(orb.code == 0);
    CHECK(orb.out.find("\"stabilizer_order\":2") != std::string::npos);
}

TEST_CASE("cold and warm cache runs are byte-identical") {
    const std::string dir = "/tmp/qgl_cli_cache";
    (void)!std::system(("rm -rf " + dir + " && mkdir -p " + dir).c_str());
    const std::string args = "verify green --n 2 --d 3 --q 2,3 --stats --cache-dir " + dir;
    const RunResult cold = run_cli(args);
    CHECK(cold.code == 0);
    CHECK(slurp(dir + "/structconst.jsonl").size() > 0);
    const RunResult warm = run_cli(args);
    CHECK(warm.code == 0);
    CHECK(cold.out == warm.out);
    // other suites share the same cache and stay deterministic as well
    for (const std::string suite : {"mult-h", "relations-circ", "relations-dot", "coassoc",
                                    "pbw", "newpbw", "twist-iso", "tau"}) {
        const std::string args2 =
            "verify " + suite + " --n 2 --d 3 --q 2,3 --cache-dir " + dir;
        const RunResult cold2 = run_cli(args2);
        const RunResult warm2 = run_cli(args2);
        CHECK(cold2.code == 0);
        CHECK(cold2.out == warm2.out);
    }
    // the warm run computes nothing new
    CHECK(warm.err.find("computed=0") != std::string::npos);
    CHECK(cold.err.find("computed=0") == std::string::npos);

    // config file supplies defaults; env var overrides the cache directory
    const std::string cfg = "/tmp/qgl_cli_cfg.json";
    {
        std::ofstream out(cfg);
        out << "{\"n\":2,\"q\":[2,3],\"model\":\"frt\"}";
    }
    const RunResult via_cfg =
        run_cli("verify green --d 3 --config " + cfg + " --stats --cache-dir " + dir);
    CHECK(via_cfg.code == 0);
    CHECK(via_cfg.out == cold.out);
    const std::string dir2 = "/tmp/qgl_cli_cache_env";
    (void)!std::system(("rm -rf " + dir2 + " && mkdir -p " + dir2).c_str());
    const int env_code = std::system(("QGL_CACHE_DIR=" + dir2 + " " + QGL_CLI_PATH +
                                      " verify green --n 2 --d 2 --q 2 >/dev/null 2>&1")
                                         .c_str());
    CHECK(WEXITSTATUS(env_code) == 0);
    CHECK(slurp(dir2 + "/structconst.jsonl").size() > 0);

    // corrupted cache line is reported with its line number
    {
        std::ofstream out(dir + "/structconst.jsonl", std::ios::app);
        out << "{broken\n";
    }
    const RunResult bad = run_cli(args);
    CHECK(bad.code == 2);
    CHECK(bad.err.find("line") != std::string::npos);
}
