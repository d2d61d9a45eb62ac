#include <doctest.h>

#include <fstream>
#include <sstream>

#include "corrclass/runner.hpp"

using namespace corrclass;

namespace {

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    REQUIRE(in.good());
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

std::string scenario_path(const char* name) {
    return std::string(SCENARIO_DIR) + "/" + name;
}

}  // namespace

TEST_CASE("a single space declaration parses") {
    const dsl::Scenario s = dsl::parse_scenario("space X = P(1,2);");
    REQUIRE(s.decls.size() == 1);
    CHECK(s.decls[0].kind == dsl::Declaration::Kind::Space);
    CHECK(s.decls[0].name == "X");
    CHECK(s.decls[0].dims == std::vector<int>{1, 2});
    CHECK(s.directives.empty());
}

TEST_CASE("morphism assignment syntax parses both forms") {
    const dsl::Scenario s = dsl::parse_scenario(
        "morphism f: P(1,2) -> P(2,3) { t1 <- s2, t2 <- const }");
    REQUIRE(s.decls.size() == 1);
    const auto& d = s.decls[0];
    REQUIRE(d.assigns.size() == 2);
    CHECK(d.assigns[0].target_factor == 1);
    CHECK(d.assigns[0].source_factor == 2);
    CHECK(d.assigns[1].target_factor == 2);
    CHECK(d.assigns[1].source_factor == 0);
}

TEST_CASE("lexical and syntax errors carry positions") {
    try {
        dsl::parse_scenario("space X = P(1,;\n");
        FAIL("expected a parse error");
    } catch (const dsl::ParseError& e) {
        CHECK(e.pos.line == 1);
        CHECK(std::string(e.what()).find("expected an integer") != std::string::npos);
    }
    try {
        dsl::parse_scenario("space X = P(1);\nfrobnicate;\n");
        FAIL("expected a parse error");
    } catch (const dsl::ParseError& e) {
        CHECK(e.pos.line == 2);
    }
}

TEST_CASE("unknown names surface as resolution errors naming the identifier") {
    const dsl::Scenario s = dsl::parse_scenario(
        "space X = P(1);\n"
        "morphism p: X -> P() {}\n"
        "corr a : P() <- X -> P() { left p, right nope }\n");
    try {
        elaborate(s);
        FAIL("expected a resolution error");
    } catch (const dsl::ParseError& e) {
        CHECK(std::string(e.what()).find("nope") != std::string::npos);
        CHECK(e.pos.line == 3);
    }
}

TEST_CASE("duplicate declarations are rejected") {
    const dsl::Scenario s = dsl::parse_scenario("space X = P(1);\nspace X = P(2);\n");
    CHECK_THROWS_AS(elaborate(s), dsl::ParseError);
}

TEST_CASE("type mismatches in spans are rejected with positions") {
    const dsl::Scenario s = dsl::parse_scenario(
        "space X = P(1);\n"
        "space Y = P(2);\n"
        "morphism p: X -> P() {}\n"
        "corr a : Y <- X -> P() { left p, right p }\n");
    CHECK_THROWS_AS(elaborate(s), dsl::ParseError);
}

TEST_CASE("the demo scenario parses and pretty-prints to the golden file") {
    const std::string text = slurp(scenario_path("demo.ccs"));
    const std::string golden = slurp(scenario_path("demo_golden.ccs"));
    const dsl::Scenario parsed = dsl::parse_scenario(text);
    CHECK(dsl::print_scenario(parsed) == golden);
    // parse(print(parse(x))) == parse(x): printing the golden text again is
    // a fixed point.
    const dsl::Scenario reparsed = dsl::parse_scenario(golden);
    CHECK(dsl::print_scenario(reparsed) == golden);
}

TEST_CASE("round-trip idempotence on generated scenarios") {
    for (std::uint64_t seed : {1ull, 2ull, 99ull}) {
        const std::string text = random_scenario(seed, 4, 2);
        const std::string printed = dsl::print_scenario(dsl::parse_scenario(text));
        CHECK(dsl::print_scenario(dsl::parse_scenario(printed)) == printed);
    }
}

TEST_CASE("random scenarios are deterministic in the seed") {
    CHECK(random_scenario(7, 4, 2) == random_scenario(7, 4, 2));
    CHECK(random_scenario(7, 4, 2) != random_scenario(8, 4, 2));
}

TEST_CASE("random scenarios contain exactly the requested number of pairs") {
    const dsl::Scenario s = dsl::parse_scenario(random_scenario(3, 4, 5));
    long pairs = 0;
    for (const auto& d : s.decls)
        if (d.kind == dsl::Declaration::Kind::Corr && d.name.ends_with("_a")) ++pairs;
    CHECK(pairs == 5);
}

TEST_CASE("dimension-0 scenarios are point-only with 1x1 operators") {
    const dsl::Scenario s = dsl::parse_scenario(random_scenario(11, 0, 2));
    const Model m = elaborate(s);
    CHECK_FALSE(m.corrs.empty());
    for (const auto& [name, corr] : m.corrs) {
        CHECK(corr.apex().is_point());
        CHECK(corr.source().is_point());
        CHECK(corr.target().is_point());
        CHECK(corr_operator(FunctorId::G0, CorrSum::of(corr)).matrix().size() == 1);
    }
    const Report r = run_suites(s, 11);
    CHECK(r.pass());
}

TEST_CASE("generated scenarios pass their own battery") {
    const dsl::Scenario s = dsl::parse_scenario(random_scenario(5, 4, 1));
    const Report r = run_suites(s, 5);
    for (const SuiteResult& suite : r.suites) {
        INFO(suite.name);
        CHECK(suite.pass());
    }
}

TEST_CASE("report JSON is byte-stable for a fixed seed") {
    const dsl::Scenario s = dsl::parse_scenario(slurp(scenario_path("demo.ccs")));
    const std::string a = report_json(run_suites(s, 42));
    const std::string b = report_json(run_suites(s, 42));
    CHECK(a == b);
    CHECK(a.find("\"schema\": 1") != std::string::npos);
    CHECK(a.find("\"seed\": 42") != std::string::npos);
    // A different seed changes the generated batteries but stays valid.
    const std::string c = report_json(run_suites(s, 43));
    CHECK(c.find("\"pass\": true") != std::string::npos);
}

TEST_CASE("an empty scenario yields an empty passing report") {
    const dsl::Scenario s = dsl::parse_scenario("");
    const Report r = run_suites(s, 1);
    CHECK(r.pass());
    CHECK(r.suites.empty());
    CHECK(r.total_cases() == 0);
}

TEST_CASE("the negative-control scenario fails with exactly one witnessed failure") {
    const dsl::Scenario s = dsl::parse_scenario(slurp(scenario_path("negative.ccs")));
    const Report r = run_suites(s, 1);
    CHECK_FALSE(r.pass());
    long failures = 0;
    std::string witness;
    for (const SuiteResult& suite : r.suites) {
        failures += static_cast<long>(suite.failures.size());
        if (!suite.failures.empty()) witness = suite.failures.front();
    }
    CHECK(failures == 1);
    CHECK_FALSE(witness.empty());
}

TEST_CASE("directive precondition violations are structured failures") {
    // Composing non-composable correspondences in a check must not crash.
    const dsl::Scenario s = dsl::parse_scenario(
        "space X = P(1);\n"
        "space Y = P(2);\n"
        "morphism p: X -> P() {}\n"
        "morphism q: Y -> P() {}\n"
        "corr a : P() <- X -> P() { left p, right p }\n"
        "corr b : P() <- Y -> P() { left q, right q }\n"
        "morphism ix: X -> X { t1 <- s1 }\n"
        "morphism iy: Y -> Y { t1 <- s1 }\n"
        "corr ca : X <- X -> X { left ix, right ix }\n"
        "corr cb : Y <- Y -> Y { left iy, right iy }\n"
        "check functoriality G0 ca cb;\n");
    const Report r = run_suites(s, 1);
    CHECK_FALSE(r.pass());
    REQUIRE(r.suites.size() == 1);
    REQUIRE(r.suites[0].failures.size() == 1);
    CHECK(r.suites[0].failures[0].find("precondition violation") != std::string::npos);
}

TEST_CASE("suite filtering selects directives by name substring") {
    const dsl::Scenario s = dsl::parse_scenario(slurp(scenario_path("demo.ccs")));
    const Report r = run_suites(s, 1, {"hrr"});
    REQUIRE(r.suites.size() == 1);
    CHECK(r.suites[0].name.find("hrr") != std::string::npos);
}

TEST_CASE("eval serializes declarations") {
    const dsl::Scenario s = dsl::parse_scenario(slurp(scenario_path("demo.ccs")));
    CHECK(eval_expr(s, "X") == "P(1)\n");
    CHECK(eval_expr(s, "E").find("ch: ") != std::string::npos);
    CHECK(eval_expr(s, "E").find("K (O-basis): ") != std::string::npos);
    CHECK(eval_expr(s, "a").find("<-") != std::string::npos);
    CHECK(eval_expr(s, "zz").find("kind pro-smooth") != std::string::npos);
    CHECK(eval_expr(s, "phi").find("2*ind(") != std::string::npos);
    CHECK_THROWS_AS((void)eval_expr(s, "missing"), dsl::ParseError);
}

TEST_CASE("mutated scenario text never crashes the parser") {
    const std::string base = slurp(scenario_path("demo.ccs"));
    Rng rng(1234);
    for (int i = 0; i < 300; ++i) {
        std::string text = base;
        // Random single-character mutations: deletions, flips, insertions.
        for (int m = 0, edits = rng.uniform(1, 5); m < edits; ++m) {
            if (text.empty()) break;
            const std::size_t at =
                static_cast<std::size_t>(rng.uniform(0, static_cast<int>(text.size()) - 1));
            switch (rng.uniform(0, 2)) {
                case 0: text.erase(at, 1); break;
                case 1: text[at] = static_cast<char>(rng.uniform(32, 126)); break;
                default:
                    text.insert(at, 1, static_cast<char>(rng.uniform(32, 126)));
                    break;
            }
        }
        try {
            const dsl::Scenario s = dsl::parse_scenario(text);
            (void)elaborate(s);  // may throw ParseError; must not crash
        } catch (const dsl::ParseError&) {
            // expected for most mutations
        }
    }
    CHECK(true);
}

TEST_CASE("duplicate morphism target assignments are rejected") {
    const dsl::Scenario s = dsl::parse_scenario(
        "morphism f: P(1,1) -> P(1) { t1 <- s1, t1 <- s2 }");
    CHECK_THROWS_AS(elaborate(s), dsl::ParseError);
}

TEST_CASE("bicycle DSL operations elaborate to the engine results") {
    const dsl::Scenario s = dsl::parse_scenario(slurp(scenario_path("demo.ccs")));
    const Model m = elaborate(s);
    const Bicycle& ba = m.bicycles.at("ba");
    const Bicycle& bb = m.bicycles.at("bb");
    CHECK(m.bicycles.at("bt") == bicycle_product(BicycleProduct::Tensor, ba, bb));
    CHECK(m.bicycles.at("bw") == bicycle_product(BicycleProduct::Whitney, ba, bb));
    CHECK(m.bicycles.at("bp") ==
          bicycle_push(PushSide::LeftProper, m.morphisms.at("i"), ba));
    CHECK(m.corrs.at("c") == corr_compose(m.corrs.at("a"), m.corrs.at("b")));
}
