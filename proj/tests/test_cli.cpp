// Golden runs of the installed command line tool: spawns the real binary and
// checks output bytes and exit codes.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

namespace {

struct RunResult {
    int exit_code;
    std::string output;
};

RunResult run(const std::string& args) {
    std::string cmd = std::string(HYBRIDMAT_CLI_PATH) + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    REQUIRE(pipe != nullptr);
    std::string output;
    char buf[4096];
    while (std::size_t got = fread(buf, 1, sizeof buf, pipe)) output.append(buf, got);
    int status = pclose(pipe);
    return {WEXITSTATUS(status), output};
}

std::string data(const std::string& name) { return std::string(HYBRIDMAT_DATA_DIR) + "/" + name; }

std::string temp_file(const std::string& name, const std::string& contents) {
    std::string path = std::string("cli_test_") + name;
    std::ofstream out(path);
    out << contents;
    return path;
}

} // namespace

TEST_CASE("eval renders the vector instance") {
    RunResult text = run("eval " + data("vector_add.json") + " --format text");
    CHECK(text.exit_code == 0);
    CHECK(text.output == " 32\n213\n215\n217\n305\n");

    RunResult json = run("eval " + data("vector_add.json"));
    CHECK(json.exit_code == 0);
    CHECK(json.output.find("\"rows\": 5") != std::string::npos);
    CHECK(json.output.find("\"213\"") != std::string::npos);

    // identical invocations produce identical bytes
    CHECK(run("eval " + data("vector_add.json")).output == json.output);
}

TEST_CASE("eval of the worked multiplication instance") {
    RunResult text = run("eval " + data("qr_mul.json") + " --format text");
    CHECK(text.exit_code == 0);
    CHECK(text.output.substr(0, 25) == "1002 1278 1380 1454 1500\n");
}

TEST_CASE("check against the built-in dense reference") {
    RunResult res = run("check " + data("qr_mul.json"));
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("\"identical\": true") != std::string::npos);
    CHECK(res.output.find("\"mismatch_count\": 0") != std::string::npos);
}

TEST_CASE("check against an expectation file") {
    RunResult eval = run("eval " + data("vector_add.json"));
    std::string good = temp_file("expect_good.json", eval.output);
    CHECK(run("check " + data("vector_add.json") + " --expect " + good).exit_code == 0);

    std::string corrupted = eval.output;
    auto pos = corrupted.find("\"213\"");
    REQUIRE(pos != std::string::npos);
    corrupted.replace(pos, 5, "\"999\"");
    std::string bad = temp_file("expect_bad.json", corrupted);
    RunResult res = run("check " + data("vector_add.json") + " --expect " + bad);
    CHECK(res.exit_code == 1);
    CHECK(res.output.find("\"identical\": false") != std::string::npos);
    CHECK(res.output.find("\"mismatch_count\": 1") != std::string::npos);

    // a tolerance covering the corruption turns the check green
    CHECK(run("check " + data("vector_add.json") + " --expect " + bad + " --tolerance 786")
              .exit_code == 0);

    std::remove(good.c_str());
    std::remove(bad.c_str());
}

TEST_CASE("sweep mode aggregates combinations") {
    RunResult res = run("check " + data("seeded_add.json") + " --sweep q=0..5,s=0..5");
    CHECK(res.exit_code == 0);
    CHECK(res.output.find("\"combinations\": 36") != std::string::npos);
    CHECK(res.output.find("\"all_passed\": true") != std::string::npos);

    // a combination that breaks validation is reported as a failure
    RunResult invalid = run("check " + data("seeded_add.json") + " --sweep q=5..6");
    CHECK(invalid.exit_code == 1);
    CHECK(invalid.output.find("\"all_passed\": false") != std::string::npos);
}

TEST_CASE("fuzz exit codes") {
    CHECK(run("fuzz --n 0").exit_code == 0);
    RunResult res = run("fuzz --n 200 --seed 42 --max-dim 6");
    CHECK(res.exit_code == 0);
    CHECK(res.output == "OK 200 instances\n");
}

TEST_CASE("malformed input exits 2") {
    std::string bad = temp_file("malformed.json", "{ nope");
    CHECK(run("eval " + bad).exit_code == 2);
    CHECK(run("check " + bad).exit_code == 2);
    std::remove(bad.c_str());

    std::string invalid = temp_file("invalid.json", R"({
      "operation": "add",
      "lhs": {"rows": "n", "cols": "n", "blocks": [{"at": [1,1], "entries": [[1]]}]},
      "rhs": {"rows": "n", "cols": "n", "blocks": [{"at": [1,1], "entries": [[1]]}]},
      "env": {"n": 2}
    })");
    CHECK(run("eval " + invalid).exit_code == 2);
    std::remove(invalid.c_str());

    CHECK(run("eval does_not_exist.json").exit_code == 2);
}
