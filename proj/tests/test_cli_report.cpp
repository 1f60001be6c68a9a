#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <regex>
#include <sstream>

#include "nullcone/cli.hpp"
#include "test_util.hpp"

using namespace nullcone;
namespace fs = std::filesystem;

namespace {

std::string tmp(const std::string& name) { return (fs::path(NULLCONE_TEST_TMP) / name).string(); }

std::string slurp(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

struct Run {
    int code;
    std::string out, err;
};

Run run(cli::RunConfig cfg) {
    std::ostringstream out, err;
    int code = cli::run(cfg, out, err);
    return {code, out.str(), err.str()};
}

cli::RunConfig config(std::string command, std::string input) {
    cli::RunConfig c;
    c.command = std::move(command);
    c.input = std::move(input);
    return c;
}

std::size_t count(const std::string& hay, const std::string& needle) {
    std::size_t n = 0;
    for (auto pos = hay.find(needle); pos != std::string::npos; pos = hay.find(needle, pos + 1)) ++n;
    return n;
}

}  // namespace

TEST(Report, JsonRoundTrip) {
    for (const char* spec : {"sl3-forms:4", "g2-adjoint", "gl2-ex3:2,-1", "sl2-forms:2,3,3,4,5"}) {
        auto p = test::cat(spec);
        Report r = make_report(stratify(p));
        json j = to_json(r);
        Report back = report_from_json(json::parse(j.dump()));
        EXPECT_EQ(back, r) << spec;
        EXPECT_EQ(to_json(back).dump(), j.dump());
    }
}

TEST(Report, JsonSchema) {
    auto j = to_json(make_report(stratify(test::cat("sl3-forms:4"))));
    EXPECT_EQ(j["nullcone"]["dim"], 11);
    EXPECT_EQ(j["candidates"].size(), 12u);
    EXPECT_EQ(j["strata"].size(), 11u);
    const auto& s = j["strata"][0];
    for (const char* key : {"l", "dim", "open_in_V", "support_V_l", "support_V_l_plus", "levi_roots",
                            "parabolic_roots", "generic_rep"})
        EXPECT_TRUE(s.contains(key)) << key;
    EXPECT_TRUE(j["candidates"][0]["l"][0].is_string());
    EXPECT_TRUE(j["candidates"][0]["tree"].contains("children"));
}

TEST(Cli, StratifyG2Text) {
    auto r = run(config("stratify", "g2-adjoint"));
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("6 candidates"), std::string::npos);
    EXPECT_NE(r.out.find("4 strata"), std::string::npos);
}

TEST(Cli, JsonOutputIsDeterministic) {
    auto c = config("stratify", "sl3-forms:4");
    c.json_path = tmp("sl3_a.json");
    ASSERT_EQ(run(c).code, 0);
    c.json_path = tmp("sl3_b.json");
    c.threads = 3;
    ASSERT_EQ(run(c).code, 0);
    const auto a = slurp(tmp("sl3_a.json")), b = slurp(tmp("sl3_b.json"));
    EXPECT_EQ(a, b);
    EXPECT_EQ(json::parse(a)["nullcone"]["dim"], 11);
}

TEST(Cli, ExitCodes) {
    {
        std::ofstream f(tmp("bad_gram.json"));
        f << R"({"gram": [[1, 2], [2, 1]], "roots": [], "weights": [{"v": [1, 0], "mult": 1}]})";
    }
    auto r = run(config("stratify", tmp("bad_gram.json")));
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("gram not positive definite at minor 2"), std::string::npos);

    EXPECT_EQ(run(config("stratify", "no-such-thing")).code, 1);
    EXPECT_EQ(run(config("frobnicate", "g2-adjoint")).code, 1);

    auto svg3 = config("stratify", "adjoint:A3");
    svg3.svg_path = tmp("a3.svg");
    r = run(svg3);
    EXPECT_EQ(r.code, 1);
    EXPECT_NE(r.err.find("rank"), std::string::npos);

    auto capped = config("stratify", "adjoint:A2");
    capped.orbit_cap = 2;
    EXPECT_EQ(run(capped).code, 2);

    auto unwritable = config("stratify", "sl2-forms:1");
    unwritable.json_path = tmp("missing_dir/x.json");
    EXPECT_EQ(run(unwritable).code, 2);

    EXPECT_EQ(run(config("verify", "g2-adjoint")).code, 0);
    EXPECT_EQ(run(config("catalog-list", "")).code, 0);
}

TEST(Cli, ProblemFileInput) {
    auto p = catalog::from_spec("gl2-ex3:2,-1");
    {
        std::ofstream f(tmp("ex3.json"));
        f << problem_to_json(p).dump(2);
    }
    auto r = run(config("stratify", tmp("ex3.json")));
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("3 strata"), std::string::npos);

    Problem back = problem_from_json(problem_to_json(p));
    EXPECT_EQ(back.gram, p.gram);
    EXPECT_EQ(back.roots, p.roots);
    EXPECT_THROW(problem_from_json(json::parse(R"({"gram": [[1]], "roots": []})")), InputError);
    EXPECT_THROW(problem_from_json(json::parse(R"({"gram": [["x"]], "roots": [], "weights": []})")),
                 InputError);
}

TEST(Cli, OtherCommands) {
    auto r = run(config("candidates", "sl2-forms:2,3,3,4,5"));
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("5 candidates"), std::string::npos);
    r = run(config("tree", "gl2-ex3:2,1"));
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("[-]"), std::string::npos);
    auto v = config("stratify", "sl3-forms:3");
    v.verify = true;
    v.fast = true;
    r = run(v);
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("verify: OK"), std::string::npos);
    r = run(config("catalog-list", ""));
    EXPECT_NE(r.out.find("sl3-forms"), std::string::npos);
}

TEST(Svg, Sl3Forms4) {
    auto p = test::cat("sl3-forms:4");
    auto doc = render_svg(p, make_report(stratify(p)));
    EXPECT_EQ(count(doc, "class=\"weight\""), 15u);
    EXPECT_EQ(count(doc, "class=\"root\""), 6u);
    EXPECT_EQ(count(doc, "class=\"candidate "), 12u);
    EXPECT_EQ(count(doc, "class=\"candidate excluded\""), 1u);
    EXPECT_EQ(doc, render_svg(p, make_report(stratify(p))));
}

TEST(Svg, RankOneAndTorus) {
    auto p = test::cat("sl2-forms:2,3,3,4,5");
    auto doc = render_svg(p, make_report(stratify(p)));
    EXPECT_EQ(count(doc, "class=\"weight\""), 11u);
    EXPECT_EQ(count(doc, "class=\"mult\""), 11u);
    EXPECT_NE(doc.find(">3</text>"), std::string::npos);  // multiplicity of weight 1
    EXPECT_EQ(count(doc, "class=\"candidate "), 5u);

    for (const char* spec : {"torus:1,2", "torus:3"}) {
        auto t = test::cat(spec);
        auto d = render_svg(t, make_report(stratify(t)));
        EXPECT_EQ(count(d, "class=\"weight\""), 1u) << spec;
        EXPECT_EQ(count(d, "class=\"candidate "), 1u) << spec;
    }
    auto a3 = test::cat("adjoint:A3");
    EXPECT_THROW(render_svg(a3, Report{}), InputError);
}
