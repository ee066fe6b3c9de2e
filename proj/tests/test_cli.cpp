#include <doctest.h>

#include <unistd.h>

#include <array>
#include <cstdio>
#include <string>

#include <json.hpp>

namespace {

using nlohmann::json;

struct RunResult {
    int exit_code;
    std::string out;
};

// Runs the CLI with stderr discarded and returns exit code plus stdout.
RunResult run(const std::string& args, const std::string& stdin_text = "") {
    std::string cmd;
    if (!stdin_text.empty()) {
        char path[] = "/tmp/mbtd-cli-XXXXXX";
        int fd = mkstemp(path);
        REQUIRE(fd >= 0);
        REQUIRE(write(fd, stdin_text.data(), stdin_text.size()) ==
                static_cast<ssize_t>(stdin_text.size()));
        close(fd);
        cmd = std::string(MBTD_CLI_PATH) + " " + args + " < " + path + " 2>/dev/null";
    } else {
        cmd = std::string(MBTD_CLI_PATH) + " " + args + " 2>/dev/null < /dev/null";
    }
    std::FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string out;
    std::array<char, 4096> buf;
    std::size_t got;
    while ((got = std::fread(buf.data(), 1, buf.size(), pipe)) > 0)
        out.append(buf.data(), got);
    int status = pclose(pipe);
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

const std::string kC4 = "4\n0 1\n1 2\n2 3\n0 3\n";

}  // namespace

TEST_CASE("solve emits a JSON record") {
    RunResult r = run("solve --input - --game mbtd --scored dominator --start dominator", kC4);
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["value"] == 2);
    CHECK(j["game"] == "mbtd");
    CHECK(j["scored"] == "dominator");
    CHECK(j["start"] == "dominator");
    CHECK(j["optimal_first_moves"] == json::array({0, 1, 2, 3}));
    CHECK(j["nodes"].get<std::uint64_t>() > 0);
}

TEST_CASE("infinite values serialize as a string") {
    RunResult r = run("solve --input - --game mbtd", "4\n0 1\n1 2\n2 3\n");
    CHECK(r.exit_code == 0);
    json j = json::parse(r.out);
    CHECK(j["value"] == "infinity");
    CHECK(j["optimal_first_moves"] == json::array());
}

TEST_CASE("outcome classification") {
    RunResult r = run("outcome --input - --game mbtd", kC4);
    CHECK(r.exit_code == 0);
    CHECK(json::parse(r.out)["outcome"] == "D");
    r = run("outcome --input - --game mbtd", "3\n0 1\n1 2\n0 2\n");
    CHECK(json::parse(r.out)["outcome"] == "N");
}

TEST_CASE("construct emits a parseable edge list with landmarks") {
    RunResult r = run("construct --family G2l --l 3");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("# u=6") != std::string::npos);
    CHECK(r.out.find("# v=7") != std::string::npos);
    CHECK(r.out.find("\n8\n") != std::string::npos);
    // Family names are case- and separator-insensitive; only the echoed
    // header line differs.
    auto after_header = [](const std::string& s) { return s.substr(s.find('\n') + 1); };
    CHECK(after_header(run("construct --family g_2l --l 3").out) == after_header(r.out));
    CHECK(run("construct --family cycle --n 5").exit_code == 0);
}

TEST_CASE("verify succeeds on a theorem grid") {
    RunResult r = run("verify --theorem 2.1 --max-l 2");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
    RunResult j = run("verify --theorem 2.1 --max-l 2 --json");
    json report = json::parse(j.out);
    CHECK(report["pass"] == true);
    CHECK(report["theorem"] == "2.1");
}

TEST_CASE("props runs clean at a small cap") {
    RunResult r = run("props --cap 4 --samples 5");
    CHECK(r.exit_code == 0);
    CHECK(r.out.find("PASS") != std::string::npos);
}

TEST_CASE("usage and parse failures exit 2") {
    CHECK(run("solve --input - --game tictactoe", kC4).exit_code == 2);
    CHECK(run("frobnicate").exit_code == 2);
    CHECK(run("solve --input -", "not a graph\n").exit_code == 2);
    CHECK(run("construct --family NoSuchFamily --l 3").exit_code == 2);
    CHECK(run("verify --theorem 9.9").exit_code == 2);
    CHECK(run("solve --input /nonexistent/file").exit_code == 2);
}

TEST_CASE("resource limits exit 3") {
    // Above the declared order cap.
    std::string p20 = "20\n";
    for (int i = 0; i + 1 < 20; ++i)
        p20 += std::to_string(i) + " " + std::to_string(i + 1) + "\n";
    CHECK(run("solve --input - --solve-cap 16", p20).exit_code == 3);
    // Zero-second budget on a nontrivial instance.
    RunResult r = run("solve --input - --budget-secs 0", kC4);
    CHECK(r.exit_code == 0);  // 0 means unlimited
}
