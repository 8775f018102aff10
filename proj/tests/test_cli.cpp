#include "doctest.h"

#include <filesystem>
#include <random>
#include <sstream>
#include <string>

#include "cli.hpp"
#include "flowfw/decompose.hpp"
#include "flowfw/io.hpp"

using namespace flowfw;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("flowfw_cli_test_" + std::to_string(std::random_device{}()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string operator/(const std::string& name) const { return (path / name).string(); }
};

int run(const std::vector<std::string>& args, std::string* out_text = nullptr, std::string* err_text = nullptr) {
    std::ostringstream out, err;
    const int code = cli::run(args, out, err);
    if (out_text) *out_text = out.str();
    if (err_text) *err_text = err.str();
    return code;
}

const std::string kFigure1 = FLOWFW_DATA_DIR "/figure1.graph";
const std::string kFigure1Truth = FLOWFW_DATA_DIR "/figure1.truth";

std::string strip_time_column(const std::string& report) {
    std::istringstream in(report);
    std::string out;
    for (std::string line; std::getline(in, line);) {
        out += line.substr(0, line.rfind('\t')) + '\n';
    }
    return out;
}

}  // namespace

TEST_CASE("decompose ls-int on the splice graph yields an exact integral decomposition") {
    TempDir tmp;
    std::string out;
    REQUIRE(run({"decompose", "--input", kFigure1, "--loss", "ls-int", "--verify", "--output", tmp / "f.paths"}, &out) == 0);
    CHECK(out.find("EarlyExactMatch") != std::string::npos);
    auto g = io::parse_graph_file(io::read_file(kFigure1));
    auto secs = io::parse_truth_file(io::read_file(tmp / "f.paths"));
    REQUIRE(secs.size() == 1);
    CHECK(secs[0].annotations.at("termination") == "EarlyExactMatch");
    auto d = io::to_decomposition(g[0].graph, secs[0]);
    CHECK(exact_match(d, g[0].flow));
    CHECK(d.has_integer_weights());
}

TEST_CASE("decompose with each loss") {
    TempDir tmp;
    for (std::string loss : {"ls", "poisson"}) {
        CHECK(run({"decompose", "--input", kFigure1, "--loss", loss, "--verify", "--jobs", "2", "--output",
                   tmp / (loss + ".paths")}) == 0);
        CHECK(fs::file_size(tmp / (loss + ".paths")) > 0);
    }
    CHECK(run({"decompose", "--input", kFigure1, "--loss", "poisson", "--poisson-scale", "maxedge", "--output",
               tmp / "p.paths"}) == 0);
}

TEST_CASE("evaluate the truth against itself gives zero errors") {
    TempDir tmp;
    std::string out;
    REQUIRE(run({"evaluate", "--solution", kFigure1Truth, "--truth", kFigure1Truth, "--graph", kFigure1,
                 "--report", tmp / "r.tsv"}) == 0);
    auto report = io::read_file(tmp / "r.tsv");
    CHECK(report.find("0\tfigure1\t0\t0\t0\t2\tNA\n") != std::string::npos);
    CHECK(report.find("# mean\tfigure1\t0\t0\t0\t2\tNA") != std::string::npos);
}

TEST_CASE("evaluate several solutions reports best counts") {
    TempDir tmp;
    REQUIRE(run({"decompose", "--input", kFigure1, "--loss", "ls-int", "--output", tmp / "fwc.paths"}) == 0);
    REQUIRE(run({"decompose", "--input", kFigure1, "--loss", "poisson", "--output", tmp / "fwp.paths"}) == 0);
    std::string out;
    REQUIRE(run({"evaluate", "--solution", tmp / "fwc.paths", "--solution", tmp / "fwp.paths", "--truth",
                 kFigure1Truth, "--graph", kFigure1, "--path-error", "one-sided"}, &out) == 0);
    CHECK(out.find("# best\tfwc\t1\t1\t1") != std::string::npos);
    CHECK(out.find("0\tfwc\t3\t0\t0\t3\t") != std::string::npos);
}

TEST_CASE("perturb is deterministic") {
    TempDir tmp;
    REQUIRE(run({"perturb", "--input", kFigure1, "--dist", "poisson", "--seed", "7", "--output", tmp / "a.graph"}) == 0);
    REQUIRE(run({"perturb", "--input", kFigure1, "--dist", "poisson", "--seed", "7", "--output", tmp / "b.graph"}) == 0);
    CHECK(io::read_file(tmp / "a.graph") == io::read_file(tmp / "b.graph"));
    REQUIRE(run({"perturb", "--input", kFigure1, "--dist", "binomial", "--seed", "7", "--output", tmp / "c.graph"}) == 0);
    auto noisy = io::parse_graph_file(io::read_file(tmp / "c.graph"));
    REQUIRE(noisy.size() == 1);
    CHECK(noisy[0].id == "0");
}

TEST_CASE("bench is deterministic across worker counts") {
    TempDir tmp;
    fs::create_directories(tmp / "suite");
    REQUIRE(run({"generate", "--count", "12", "--seed", "3", "--max-nodes", "12", "--output-graph",
                 tmp / "suite/synth.graph", "--output-truth", tmp / "suite/synth.truth"}) == 0);
    fs::copy_file(kFigure1, tmp / "suite/figure1.graph");
    fs::copy_file(kFigure1Truth, tmp / "suite/figure1.truth");
    REQUIRE(run({"bench", "--input", tmp / "suite", "--losses", "ls,ls-int,poisson", "--jobs", "1", "--report",
                 tmp / "serial.tsv"}) == 0);
    REQUIRE(run({"bench", "--input", tmp / "suite", "--losses", "ls,ls-int,poisson", "--jobs", "4", "--report",
                 tmp / "parallel.tsv"}) == 0);
    const auto serial = io::read_file(tmp / "serial.tsv");
    CHECK(strip_time_column(serial) == strip_time_column(io::read_file(tmp / "parallel.tsv")));
    CHECK(serial.find("figure1/0\tls-int\t") != std::string::npos);
    CHECK(serial.find("synth/11\tpoisson\t") != std::string::npos);
    // figure1 rows sort before synth rows, numeric ids in numeric order.
    CHECK(serial.find("synth/2\t") < serial.find("synth/10\t"));
}

TEST_CASE("argument and instance errors map to exit codes") {
    TempDir tmp;
    std::string err;
    CHECK(run({}, nullptr, &err) == cli::kExitUsage);
    CHECK(run({"decompose", "--input", kFigure1, "--loss", "nope", "--output", tmp / "x"}) == cli::kExitUsage);
    CHECK(run({"decompose", "--output", tmp / "x"}) == cli::kExitUsage);

    io::write_file(tmp / "bad.graph", "# graph a\n2\n0 1 0\n# graph b\n2\n0 1 3\n");
    CHECK(run({"decompose", "--input", tmp / "bad.graph", "--output", tmp / "bad.paths"}, nullptr, &err) ==
          cli::kExitInstanceError);
    CHECK(err.find("graph a") != std::string::npos);
    // The healthy section is still written.
    CHECK(io::read_file(tmp / "bad.paths").find("# graph b") != std::string::npos);

    io::write_file(tmp / "broken.graph", "# graph a\n2\n0 5 1\n");
    CHECK(run({"decompose", "--input", tmp / "broken.graph", "--output", tmp / "y"}, nullptr, &err) ==
          cli::kExitInstanceError);
    CHECK(err.find("line 3") != std::string::npos);
}
