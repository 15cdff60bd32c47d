#include <doctest.h>

#include <string>

#include "fibrecoin/report.hpp"
#include "fibrecoin/verify.hpp"

using namespace fibrecoin;

namespace {
constexpr auto T = BundleSpace::Torus;
constexpr auto K = BundleSpace::Klein;

std::string error_of(const std::string& text)
{
    try {
        parse_specs(text);
    } catch (const InputError& e) {
        return e.what();
    }
    return {};
}
}  // namespace

TEST_CASE("line input")
{
    const auto parsed = parse_specs("# pairs\nK K 4 1\n\n  K K 0 0   # second\n");
    REQUIRE(parsed.specs.size() == 2);
    CHECK(parsed.specs[0] == MapSpec{K, K, 4, 1});
    CHECK(parsed.specs[1] == MapSpec{K, K, 0, 0});
    CHECK(parsed.warnings.empty());

    const auto reduced = parse_specs("T K 0 5\nK K 2 -1\n");
    CHECK(reduced.specs[0].r == 1);
    CHECK(reduced.specs[1].r == 1);
    REQUIRE(reduced.warnings.size() == 1);
    CHECK(reduced.warnings[0].find("line 1") != std::string::npos);
}

TEST_CASE("line input errors name the line and field")
{
    CHECK(error_of("K K 1 0\nK X 1 0\n").find("line 2: field CODOMAIN") != std::string::npos);
    CHECK(error_of("T T 1.5 0\n").find("field q") != std::string::npos);
    CHECK(error_of("T T 1\n").find("got 3 fields") != std::string::npos);
    CHECK(error_of("K T 2 0\n").find("fibre degree 0") != std::string::npos);
}

TEST_CASE("JSON input")
{
    const auto one = parse_specs(R"({"domain":"K","codomain":"K","q":4,"r":1})");
    CHECK(one.specs == std::vector<MapSpec>{{K, K, 4, 1}});

    const auto pair = parse_specs(R"([{"f1":{"domain":"T","codomain":"T","q":6,"r":4},
                                       "f2":{"domain":"T","codomain":"T","q":0,"r":0}}])");
    CHECK(pair.specs == std::vector<MapSpec>{{T, T, 6, 4}, {T, T, 0, 0}});

    CHECK(error_of(R"({"domain":"K","codomain":"K","q":4})").find("missing field r") != std::string::npos);
    CHECK(error_of(R"([{"domain":"K","codomain":"K","q":"4","r":0}])").find("entry 0: field q") !=
          std::string::npos);
    CHECK(error_of("{ not json").find("JSON input") != std::string::npos);
}

TEST_CASE("pairing")
{
    const std::vector<MapSpec> specs{{K, K, 4, 1}, {K, K, 0, 0}};
    const auto pairs = make_pairs(specs, false);
    REQUIRE(pairs.size() == 1);
    CHECK(pairs[0].q() == 4);
    CHECK(pairs[0].r() == 1);

    const auto roots = make_pairs(specs, true);
    CHECK(roots.size() == 2);
    CHECK(roots[1].q() == 0);

    CHECK_THROWS_AS(make_pairs({{K, K, 1, 0}}, false), InputError);
    CHECK_THROWS_AS(make_pairs({{K, K, 1, 0}, {T, T, 1, 0}}, false), InputError);
}

TEST_CASE("reports")
{
    const Report kk = build_report(MapPair::from_difference(K, K, 4, 1));
    CHECK(kk.consistent());
    CHECK(kk.invariants == InvariantReport{Cardinality::finite(2), 2, 2, 2, false});
    CHECK(kk.omega_group == "Z+Z2+Z2");
    CHECK(kk.omega_c1 == 4);
    CHECK(kk.omega_c2 == 0);
    CHECK(kk.omega_c3 == 0);
    CHECK(kk.diagram.wraps == std::vector<std::int64_t>{2, 2});
    CHECK(render_text(kk).find("nielsen       2") != std::string::npos);

    const Report tt = build_report(MapPair::from_difference(T, T, 0, 0), 5);
    CHECK(tt.consistent());
    CHECK(tt.invariants.loose);
    CHECK(tt.diagram.circles == 0);
    CHECK(tt.diagram.degenerate);

    const Report tk = build_report(MapPair::from_difference(T, K, 0, 0), 5);
    CHECK(tk.consistent());
    CHECK(tk.diagram.vertical == 1);
    CHECK(tk.invariants.mcc == 1);
}

TEST_CASE("report JSON roundtrip")
{
    for (auto [d, c] : {std::pair{T, T}, std::pair{K, K}, std::pair{K, T}, std::pair{T, K}}) {
        const std::int64_t qmax = d == c ? 6 : 0;
        for (std::int64_t q = -qmax; q <= qmax; ++q)
            for (std::int64_t r = (c == K ? 0 : -4); r <= (c == K ? 1 : 4); ++r) {
                const Report rep = build_report(MapPair::from_difference(d, c, q, r), 20);
                CHECK(report_from_json(nlohmann::json::parse(to_json(rep).dump())) == rep);
            }
    }
    CHECK_THROWS_AS(report_from_json(nlohmann::json::parse(R"({"q": 1})")), InputError);
}

TEST_CASE("tables")
{
    const auto rows = build_table(K, K, 1, 6, 0, 1);
    CHECK(rows.size() == 12);
    CHECK(rows[0].q == 1);
    CHECK(rows[0].invariants.nielsen == 1);
    CHECK(rows.back().invariants.nielsen == 3);

    CHECK(build_table(K, T, -5, 5, -2, 2).size() == 5);
    CHECK(build_table(T, K, 0, 0, -9, 9).size() == 2);
    CHECK_THROWS_AS(build_table(T, T, -200, 200, -200, 200), InputError);
    CHECK_THROWS_AS(build_table(T, T, 2, 1, 0, 0), InputError);
    CHECK_THROWS_AS(build_table(K, T, 1, 5, 0, 0), InputError);
    CHECK_THROWS_AS(build_table(K, K, 1, 5, 2, 7), InputError);

    const auto json = table_to_json(T, K, build_table(T, K, 0, 0, 0, 1));
    CHECK(json["group"] == "0+Z2+Z2");
    CHECK(json["rows"][0]["omega"][0] == "trivial");
    CHECK(json["rows"][0]["reidemeister"] == "inf");

    CHECK(parse_combo("KT") == std::pair{K, T});
    CHECK(parse_combo("T,K") == std::pair{T, K});
    CHECK_THROWS_AS(parse_combo("KKK"), InputError);
    CHECK_THROWS_AS(parse_combo("KX"), InputError);
}

TEST_CASE("verification on a small grid")
{
    VerifyOptions opt;
    opt.qmax = 8;
    opt.rmax = 8;
    opt.window = 20;
    const auto summary = run_verification(opt);
    CHECK(summary.ok());
    for (const auto& c : summary.checks) {
        CHECK_MESSAGE(c.failed == 0, c.name);
        CHECK_MESSAGE(c.passed > 0, c.name);
    }

    opt.parallel = false;
    const auto serial = run_verification(opt);
    REQUIRE(serial.checks.size() == summary.checks.size());
    for (std::size_t i = 0; i < serial.checks.size(); ++i)
        CHECK(serial.checks[i].passed == summary.checks[i].passed);

    opt.fault = Fault::NielsenOddQ;
    const auto broken = run_verification(opt);
    CHECK_FALSE(broken.ok());
    CHECK(summary_to_json(broken)["ok"] == false);

    opt.window = 0;
    CHECK_THROWS_AS(run_verification(opt), InputError);
    opt.window = 5;
    opt.qmax = -1;
    CHECK_THROWS_AS(run_verification(opt), InputError);
}
