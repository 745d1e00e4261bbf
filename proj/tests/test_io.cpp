#include <catch2/catch_amalgamated.hpp>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "euleredit/io.hpp"
#include "euleredit/sampler.hpp"

using namespace euleredit;

namespace {

std::filesystem::path scratch_dir() {
    static const std::filesystem::path dir = [] {
        auto d = std::filesystem::temp_directory_path() /
                 ("euleredit_tests_" + std::to_string(::getpid()));
        std::filesystem::create_directories(d);
        return d;
    }();
    return dir;
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void spit(const std::filesystem::path& p, const std::string& content) {
    std::ofstream out(p);
    out << content;
}

struct CliResult {
    int status = -1;
    std::string out;
    std::string err;
};

CliResult run_cli(const std::string& args) {
    const char* bin = std::getenv("EULEREDIT_BIN");
    REQUIRE(bin != nullptr);
    static int counter = 0;
    const auto out_path = scratch_dir() / ("out" + std::to_string(counter));
    const auto err_path = scratch_dir() / ("err" + std::to_string(counter));
    ++counter;
    const std::string cmd = std::string(bin) + " " + args + " >" + out_path.string() + " 2>" +
                            err_path.string();
    const int rc = std::system(cmd.c_str());
    CliResult result;
    result.status = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    result.out = slurp(out_path);
    result.err = slurp(err_path);
    return result;
}

std::string strip_comments(const std::string& text) {
    std::istringstream in(text);
    std::string line, body;
    while (std::getline(in, line)) {
        if (!line.empty() && line[0] == '#') continue;
        body += line;
        body += '\n';
    }
    return body;
}

}  // namespace

TEST_CASE("edge list round trip", "[io]") {
    const Graph g = sample_gnp(17, 0.4, Seed{404});
    std::ostringstream out;
    write_edge_list(out, g);
    std::istringstream in(out.str());
    CHECK(read_edge_list(in) == g);
}

TEST_CASE("edge list tolerates comments and whitespace", "[io]") {
    std::istringstream in("# a graph\n\n  3   2\n0 1\n# chord\n 1  2 \n");
    const Graph g = read_edge_list(in, "inline");
    CHECK(g == Graph(3, {Edge(0, 1), Edge(1, 2)}));
}

TEST_CASE("edge list parse errors carry line numbers", "[io]") {
    auto expect_error = [](const std::string& text, int line, const std::string& needle) {
        std::istringstream in(text);
        try {
            read_edge_list(in, "bad.el");
            FAIL("expected ParseError for: " << text);
        } catch (const ParseError& e) {
            CHECK(e.line() == line);
            CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring(needle));
            CHECK_THAT(e.what(), Catch::Matchers::ContainsSubstring("bad.el:" +
                                                                    std::to_string(line)));
        }
    };
    expect_error("", 0, "missing header");
    expect_error("3\n", 1, "header");
    expect_error("3 2\n1 0\n1 2\n", 2, "u < v");
    expect_error("3 2\n0 1\n1 5\n", 3, "out of range");
    expect_error("3 2\n0 1\n", 2, "expected 2 edges");
    expect_error("3 1\n0 1\n1 2\n", 3, "unexpected data");
    expect_error("3 2\n0 1\n0 1\n", 3, "duplicate");
    expect_error("3 2\n0 x\n1 2\n", 2, "integer");
}

TEST_CASE("plan round trip", "[io]") {
    EditPlan plan;
    plan.mode = EditMode::Edit;
    plan.ops = {add_op(0, 2), remove_op(1, 3), add_op(2, 4)};
    plan.lower_bound = 1;
    std::ostringstream out;
    write_plan(out, plan);
    std::istringstream in(out.str());
    CHECK(read_plan(in) == plan.ops);
}

TEST_CASE("plan parse errors", "[io]") {
    std::istringstream bad_verb("TOGGLE 0 1\n");
    CHECK_THROWS_AS(read_plan(bad_verb), ParseError);
    std::istringstream bad_order("ADD 2 1\n");
    CHECK_THROWS_AS(read_plan(bad_order), ParseError);
    std::istringstream short_line("ADD 2\n");
    CHECK_THROWS_AS(read_plan(short_line), ParseError);
}

TEST_CASE("missing files surface with path context", "[io]") {
    CHECK_THROWS_WITH(load_edge_list("/nonexistent/graph.el"),
                      Catch::Matchers::ContainsSubstring("/nonexistent/graph.el"));
}

TEST_CASE("cli sample writes canonical files deterministically", "[cli]") {
    const auto f1 = scratch_dir() / "s1.el";
    const auto f2 = scratch_dir() / "s2.el";
    const CliResult r1 = run_cli("sample --n 12 --p 0.5 --seed 0x2a --out " + f1.string());
    const CliResult r2 = run_cli("sample --n 12 --p 0.5 --seed 42 --out " + f2.string());
    CHECK(r1.status == 0);
    CHECK(r2.status == 0);
    CHECK(slurp(f1) == slurp(f2));  // hex and decimal spell the same seed
    const Graph g = load_edge_list(f1.string());
    CHECK(g.vertex_count() == 12);
    CHECK(g == sample_gnp(12, 0.5, Seed{42}));
}

TEST_CASE("cli eulerize prints the plan", "[cli]") {
    const auto path3 = scratch_dir() / "path3.el";
    spit(path3, "3 2\n0 1\n1 2\n");
    const CliResult r = run_cli("eulerize --in " + path3.string() + " --mode edit");
    CHECK(r.status == 0);
    CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("ADD 0 2"));
}

TEST_CASE("cli eulerize plan verifies", "[cli]") {
    const auto in = scratch_dir() / "g.el";
    const auto plan = scratch_dir() / "g.plan";
    {
        std::ofstream out(in);
        write_edge_list(out, sample_gnp(14, 0.5, Seed{3}));
    }
    const CliResult r1 = run_cli("eulerize --in " + in.string() + " --mode edit --plan-out " +
                                 plan.string());
    REQUIRE(r1.status == 0);
    const CliResult r2 = run_cli("verify --in " + in.string() + " --plan " + plan.string());
    CHECK(r2.status == 0);
    CHECK_THAT(r2.out, Catch::Matchers::ContainsSubstring("eulerian: true"));
}

TEST_CASE("cli oracle reports infeasibility", "[cli]") {
    const auto k4 = scratch_dir() / "k4.el";
    spit(k4, "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    const CliResult r = run_cli("oracle --in " + k4.string() + " --mode extend");
    CHECK(r.status == 1);
    CHECK_THAT(r.out, Catch::Matchers::ContainsSubstring("INFEASIBLE"));
}

TEST_CASE("cli circuit output and errors", "[cli]") {
    const auto k4 = scratch_dir() / "k4b.el";
    spit(k4, "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    const CliResult bad = run_cli("circuit --in " + k4.string());
    CHECK(bad.status == 1);
    CHECK_THAT(bad.err,
               Catch::Matchers::ContainsSubstring("not Eulerian: odd-degree vertices 0 1 2 3"));

    const auto k5 = scratch_dir() / "k5.el";
    {
        std::ofstream out(k5);
        write_edge_list(out, Graph::complete(5));
    }
    const CliResult good = run_cli("circuit --in " + k5.string());
    CHECK(good.status == 0);
    std::istringstream walk(good.out);
    int v = 0, count = 0;
    while (walk >> v) ++count;
    CHECK(count == 10);
}

TEST_CASE("cli experiment writes csv and honors workers", "[cli]") {
    const auto c1 = scratch_dir() / "ind1.csv";
    const auto c4 = scratch_dir() / "ind4.csv";
    const CliResult r1 = run_cli(
        "experiment independence --n 12 --p 0.5 --b 2 --trials 400 --seed 9 --workers 1 --csv " +
        c1.string());
    const CliResult r4 = run_cli(
        "experiment independence --n 12 --p 0.5 --b 2 --trials 400 --seed 9 --workers 4 --csv " +
        c4.string());
    CHECK(r1.status == 0);
    CHECK(r4.status == 0);
    CHECK(strip_comments(slurp(c1)) == strip_comments(slurp(c4)));
    CHECK_THAT(slurp(c1), Catch::Matchers::ContainsSubstring(
                              "n,p,b,trials,joint_hat,product_hat,deviation,stderr"));
}

TEST_CASE("cli moments accepts a comma list of sizes", "[cli]") {
    const auto csv = scratch_dir() / "mom.csv";
    const CliResult r = run_cli(
        "experiment moments --n 10,20 --p 0.5 --q 2 --trials 50 --seed 5 --csv " + csv.string());
    REQUIRE(r.status == 0);
    const std::string body = strip_comments(slurp(csv));
    CHECK_THAT(body, Catch::Matchers::StartsWith("n,p,q,trials,mu_hat,moment_q,ratio\n10,"));
    CHECK_THAT(body, Catch::Matchers::ContainsSubstring("\n20,"));
}

TEST_CASE("cli usage errors exit 2", "[cli]") {
    CHECK(run_cli("eulerize --in /nonexistent.el --mode edit").status == 2);
    CHECK(run_cli("sample --n 5 --p 1.5").status == 2);
    CHECK(run_cli("sample --n 5 --p 0.5 --bogus-flag").status == 2);
    CHECK(run_cli("frobnicate").status == 2);
    const auto k4 = scratch_dir() / "k4c.el";
    spit(k4, "4 6\n0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n");
    CHECK(run_cli("eulerize --in " + k4.string() + " --mode squash").status == 2);
}
