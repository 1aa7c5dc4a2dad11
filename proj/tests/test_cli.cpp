#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

#include "../tools/cli.hpp"
#include "sfkit/io.hpp"

using namespace sfkit;

namespace {

struct CliResult {
    int status;
    std::string out, err;
};

CliResult cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int status = run_cli(args, out, err);
    return {status, out.str(), err.str()};
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/sfkit_test_" + name) {}
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("cli layout / verify / classify") {
    TempFile flower("layout.flower"), svg("layout.svg");
    CliResult r = cli({"layout", "--n", "6", "--u", "1,1,1", "--out", flower.path, "--svg", svg.path});
    CHECK(r.status == 0);
    CHECK(r.out.find("n = 6") != std::string::npos);
    CHECK(r.out.find("u =") != std::string::npos);

    FlowerFile f = read_flower_file_path(flower.path);
    CHECK(f.n == 6);
    CHECK(f.cls == "univalent");
    CHECK(slurp(svg.path).rfind("<svg", 0) == 0);

    CliResult v = cli({"label", "verify", "--file", flower.path});
    CHECK(v.status == 0);
    CHECK(v.out == "valid\n");

    CliResult bad = cli({"label", "verify", "--n", "6", "--s", "0,0,0,0,0,0.1"});
    CHECK(bad.status == 2);
    CHECK(bad.out.rfind("fails", 0) == 0);

    CliResult c = cli({"classify", "--file", flower.path});
    CHECK(c.status == 0);
    CHECK(c.out == "univalent\n");

    CliResult comp = cli({"label", "complete", "--n", "6", "--u", "1,2,0.6"});
    CHECK(comp.status == 0);
    CHECK(comp.out.find("0.59999999999999") != std::string::npos);

    CliResult parse_fail = cli({"layout", "--n", "6"});
    CHECK(parse_fail.status == 1);
}

TEST_CASE("cli families and pack") {
    CliResult u = cli({"family", "uniform", "--n", "6"});
    CHECK(u.status == 0);
    CHECK(u.out.rfind("s = ", 0) == 0);

    CliResult sb = cli({"family", "soccerball"});
    CHECK(sb.status == 0);
    CHECK(sb.out.find("s' = ") != std::string::npos);

    CliResult ring = cli({"family", "ring", "--n", "8"});
    CHECK(ring.status == 0);

    CliResult doyle = cli({"family", "doyle", "--a", "2", "--b", "3"});
    CHECK(doyle.status == 0);
    auto pos = doyle.out.find("center_radius = ");
    REQUIRE(pos != std::string::npos);
    CHECK(std::abs(std::stod(doyle.out.substr(pos + 16)) - 1.0) < 1e-9);

    CliResult rep = cli({"pack", "--complex", "soccerball", "--labels", "auto:unbranched", "--report"});
    CHECK(rep.status == 0);
    CHECK(rep.out.find("angle_sum") != std::string::npos);
    CHECK(rep.out.find("edge ") != std::string::npos);

    CliResult pack = cli({"pack", "--complex", "soccerball", "--labels", "auto:unbranched"});
    CHECK(pack.status == 0);
    CHECK(pack.out.find("max_holonomy = ") != std::string::npos);
    // The reported maximum is tiny for a genuine packing label.
    std::istringstream ss(pack.out.substr(pack.out.find("max_holonomy = ") + 15));
    double h;
    ss >> h;
    CHECK(h < 1e-6);
}

TEST_CASE("cli determinism under a fixed seed") {
    TempFile f1("r1.flower"), s1("r1.svg"), f2("r2.flower"), s2("r2.svg");
    CliResult a = cli({"random-flower", "--n", "9", "--seed", "42", "--out", f1.path, "--svg", s1.path});
    CliResult b = cli({"random-flower", "--n", "9", "--seed", "42", "--out", f2.path, "--svg", s2.path});
    CHECK(a.status == 0);
    CHECK(b.status == 0);
    CHECK(a.out == b.out);
    CHECK(slurp(f1.path) == slurp(f2.path));
    CHECK(slurp(s1.path) == slurp(s2.path));

    CliResult c = cli({"random-flower", "--n", "9", "--seed", "43"});
    CHECK(c.out != a.out);

    // Render is reproducible from the written file.
    TempFile s3("r3.svg"), s4("r4.svg");
    CHECK(cli({"render", "--file", f1.path, "--svg", s3.path}).status == 0);
    CHECK(cli({"render", "--file", f1.path, "--svg", s4.path}).status == 0);
    CHECK(slurp(s3.path) == slurp(s4.path));
}
