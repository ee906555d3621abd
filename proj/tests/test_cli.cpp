#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "../tools/commands.hpp"
#include "../tools/output.hpp"

using namespace dslv::cli;

namespace {

std::filesystem::path scratch(const std::string& name) {
    const auto dir = std::filesystem::temp_directory_path() / "dslv_cli_tests";
    std::filesystem::create_directories(dir);
    return dir / name;
}

int invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "dslv");
    std::vector<const char*> argv;
    for (auto& a : args) argv.push_back(a.c_str());
    return run(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p, std::ios::binary);
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Non-comment, non-header CSV lines.
std::vector<std::string> data_lines(const std::string& csv) {
    std::vector<std::string> out;
    std::istringstream in(csv);
    std::string line;
    bool header = true;
    while (std::getline(in, line)) {
        if (line.starts_with("#")) continue;
        if (header) {
            header = false;
            continue;
        }
        out.push_back(line);
    }
    return out;
}

} // namespace

TEST_CASE("number formatting and CSV quoting") {
    CHECK(format_number(1.0) == "1");
    CHECK(format_number(-0.5) == "-0.5");
    CHECK(format_number(-0.0) == "0");
    CHECK(format_number(0.1) == "0.10000000000000001");
    CHECK(format_number(2.0 - std::sqrt(2.0)) == "0.58578643762690485");
    CHECK(csv_field("plain") == "plain");
    CHECK(csv_field("a,b") == "\"a,b\"");
    CHECK(csv_field("say \"hi\"") == "\"say \"\"hi\"\"\"");
    CsvTable t({"n", "value"});
    t.add_comment("k", Json{{"x", 1}});
    t.add_row({"0", "1"});
    CHECK(t.str() == "# k: {\"x\":1}\nn,value\n0,1\n");
}

TEST_CASE("solve") {
    const auto out = scratch("solve_x.csv");
    REQUIRE(invoke({"solve", "--a", "1", "--b", "3", "--h", "1", "--lambda", "2", "--q", "const:0", "--init", "x",
                    "--out", out.string()}) == kSuccess);
    const auto text = slurp(out);
    CHECK(text.starts_with("# manifest: {\"tool\":\"dslv\""));
    CHECK(data_lines(text) == std::vector<std::string>{"0,-1", "1,1", "2,1", "3,-1", "4,-1"});

    REQUIRE(invoke({"solve", "--b", "3", "--lambda", "2", "--q", "const:0", "--init", "y", "--out", out.string()}) ==
            kSuccess);
    CHECK(data_lines(slurp(out)) == std::vector<std::string>{"0,1", "1,0", "2,-1", "3,0", "4,1"});

    const auto js = scratch("solve.json");
    REQUIRE(invoke({"solve", "--b", "3", "--lambda", "2", "--q", "const:0", "--format", "json", "--out", js.string()}) ==
            kSuccess);
    const auto doc = Json::parse(slurp(js));
    CHECK(doc["schema_version"] == 1);
    CHECK(doc["manifest"]["command"] == "solve");
    CHECK(doc["rows"].size() == 5);
    CHECK(doc["rows"][1]["value"] == 1.0);
    CHECK(doc["rows"][3]["value"] == -1.0);

    CHECK(invoke({"solve", "--b", "3", "--q", "const:0"}) == kUsage);
    CHECK(invoke({"solve", "--b", "3", "--lambda", "2", "--q", "nope:1"}) == kUsage);
    CHECK(invoke({"solve", "--b", "3", "--lambda", "2", "--q", "const:0", "--p", "const:-1"}) == kUsage);
    CHECK(invoke({"solve", "--b", "3", "--lambda", "2", "--q", "const:0", "--init", "z"}) == kUsage);
    CHECK(invoke({"frobnicate"}) == kUsage);
    CHECK(invoke({"solve", "--help"}) == kSuccess);
}

TEST_CASE("repr-check") {
    const auto out = scratch("repr.json");
    REQUIRE(invoke({"repr-check", "--trials", "5", "--format", "json", "--out", out.string()}) == kSuccess);
    const auto doc = Json::parse(slurp(out));
    CHECK(doc["summary"]["status"] == "PASS");
    CHECK(doc["rows"].size() == 5 * 4 * 4);

    REQUIRE(invoke({"repr-check", "--trials", "1", "--q", "const:0", "--format", "json", "--out", out.string()}) ==
            kSuccess);
    CHECK(Json::parse(slurp(out))["summary"]["max_deviation"].get<double>() <= 1e-12);

    CHECK(invoke({"repr-check", "--lambda-set", "1,4", "--out", out.string()}) == kUsage);
    CHECK(invoke({"repr-check", "--trials", "2", "--tol", "1e-30", "--out", out.string()}) == kCheckFailed);
}

TEST_CASE("eigen") {
    const auto out = scratch("eigen.csv");
    REQUIRE(invoke({"eigen", "--b", "3", "--q", "const:0", "--method", "both", "--tol", "1e-12", "--out",
                    out.string()}) == kSuccess);
    const auto text = slurp(out);
    CHECK(text.find("# cross_validation: ") != std::string::npos);
    const auto rows = data_lines(text);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].starts_with("0,0.585786437627"));
    CHECK(rows[1].starts_with("1,2") == true);
    CHECK(rows[2].starts_with("2,3.41421356237"));

    const auto js = scratch("eigen.json");
    REQUIRE(invoke({"eigen", "--b", "2", "--q", "const:0", "--vectors", "--format", "json", "--out", js.string()}) ==
            kSuccess);
    const auto doc = Json::parse(slurp(js));
    REQUIRE(doc["eigenvalues"].size() == 2);
    CHECK(std::abs(doc["eigenvalues"][0]["lambda"].get<double>() - 1.0) < 1e-10);
    CHECK(std::abs(doc["eigenvalues"][1]["lambda"].get<double>() - 3.0) < 1e-10);
    CHECK(doc["eigenvalues"][1]["vector"].size() == 2);
    CHECK(doc["cross_validation"]["max_orthogonality"].get<double>() <= 1e-8);

    REQUIRE(invoke({"eigen", "--b", "12", "--q", "random:3,-1,1", "--method", "sturm", "--tol", "1e-12", "--out",
                    out.string()}) == kSuccess);
    const auto r12 = data_lines(slurp(out));
    REQUIRE(r12.size() == 12);
    double prev = -1e300;
    for (const auto& line : r12) {
        const double v = std::stod(line.substr(line.find(',') + 1));
        CHECK(v > prev);
        prev = v;
    }

    CHECK(invoke({"eigen", "--b", "3", "--q", "const:0", "--method", "qr"}) == kUsage);
    CHECK(invoke({"eigen", "--b", "3", "--q", "const:0", "--tol", "0", "--out", out.string()}) == kUsage);
}

TEST_CASE("identity-check") {
    const auto out = scratch("ident.json");
    REQUIRE(invoke({"identity-check", "--which", "all", "--trials", "20", "--format", "json", "--out", out.string()}) ==
            kSuccess);
    const auto doc = Json::parse(slurp(out));
    CHECK(doc["summary"]["casoratian"]["status"] == "PASS");
    CHECK(doc["summary"]["sbp"]["status"] == "PASS");
    CHECK(doc["summary"]["telescope"]["status"] == "PASS");
    CHECK(doc["rows"].size() == 60);

    REQUIRE(invoke({"identity-check", "--which", "casoratian", "--trials", "1", "--tol", "1e-12", "--format", "json",
                    "--out", out.string()}) == kSuccess);
    CHECK(Json::parse(slurp(out))["summary"]["casoratian"]["max_error"].get<double>() <= 1e-12);

    CHECK(invoke({"identity-check", "--which", "all", "--trials", "0"}) == kUsage);
    CHECK(invoke({"identity-check", "--which", "nothing"}) == kUsage);
}

TEST_CASE("scan") {
    const auto out = scratch("scan.csv");
    REQUIRE(invoke({"scan", "--mode", "y-bound", "--lambda-grid", "2,5", "--q-family", "const:0", "--out",
                    out.string()}) == kSuccess);
    const auto rows = data_lines(slurp(out));
    REQUIRE(rows.size() == 2);
    CHECK(rows[0].starts_with("2,const:0,1,1,"));
    CHECK(rows[0].ends_with(",false,true"));
    CHECK(rows[1].starts_with("5,const:0,inf,inf,"));
    CHECK(rows[1].ends_with(",true,false"));

    const auto summary = Json::parse(slurp(out.string() + ".summary.json"));
    CHECK(summary["pass"] == 1);
    CHECK(summary["fail"] == 1);
    CHECK(summary["manifest"]["command"] == "scan");

    const auto h = scratch("h.json");
    REQUIRE(invoke({"scan", "--mode", "h-growth", "--lambda-grid", "2", "--h-grid", "100,10000", "--q-family",
                    "const:0", "--format", "json", "--out", h.string()}) == kSuccess);
    const auto doc = Json::parse(slurp(h));
    REQUIRE(doc["rows"].size() == 2);
    CHECK(doc["rows"][0]["ratio"] == 1.0);
    CHECK(doc["rows"][1]["ratio"] == 1.0);
    CHECK(doc["rows"][0]["pass"] == true);

    CHECK(invoke({"scan", "--mode", "sideways", "--lambda-grid", "2"}) == kUsage);
    CHECK(invoke({"scan", "--mode", "y-bound", "--lambda-grid", "2,x", "--out", out.string()}) == kUsage);
    CHECK(invoke({"scan", "--mode", "h-growth", "--lambda-grid", "2", "--h-grid", "0.5", "--out", out.string()}) ==
          kUsage);
}

TEST_CASE("outputs are reproducible and independent of --jobs") {
    const auto a = scratch("rep_a.csv"), b = scratch("rep_b.csv");
    const std::vector<std::string> base{"scan", "--mode", "h-growth", "--lambda-grid", "0.5,1.5,3", "--q-family",
                                        "random:5,-0.05,0.05", "--q-family", "decay:1", "--N", "2000"};
    auto with = [&](const std::filesystem::path& p, const char* jobs) {
        auto v = base;
        v.insert(v.end(), {"--jobs", jobs, "--out", p.string()});
        return v;
    };
    REQUIRE(invoke(with(a, "1")) == kSuccess);
    REQUIRE(invoke(with(b, "4")) == kSuccess);
    CHECK(slurp(a) == slurp(b));
    CHECK(slurp(a.string() + ".summary.json") == slurp(b.string() + ".summary.json"));
}
