// Acceptance gate: every numbered criterion below is checked exactly (all
// arithmetic is rational; tolerance is zero everywhere) and reported as
// one PASS/FAIL line. The process exits nonzero when any criterion fails.

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "corrclass/runner.hpp"

using namespace corrclass;

namespace {

int g_failures = 0;

void report(int criterion, const std::string& label, bool pass, const std::string& detail = "") {
    std::cout << (pass ? "PASS" : "FAIL") << " criterion " << criterion << ": " << label;
    if (!detail.empty()) std::cout << " [" << detail << "]";
    std::cout << "\n";
    if (!pass) ++g_failures;
}

struct Timed {
    SuiteResult result;
    double seconds;
};

template <typename F>
Timed timed(F f) {
    const auto t0 = std::chrono::steady_clock::now();
    SuiteResult r = f();
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return Timed{std::move(r), s};
}

std::string summary(const Timed& t) {
    std::ostringstream os;
    os << t.result.passes << "/" << t.result.cases << " in " << t.seconds << "s";
    if (!t.result.pass()) os << "; first witness: " << t.result.failures.front();
    return os.str();
}

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int run_cli(const std::string& binary, const std::string& args) {
    const std::string cmd = binary + " " + args + " > /dev/null 2>&1";
    const int status = std::system(cmd.c_str());
    return WEXITSTATUS(status);
}

}  // namespace

int main(int argc, char** argv) {
    const std::string scenario_dir = argc > 1 ? argv[1] : "scenarios";
    const std::string cli = argc > 2 ? argv[2] : "";
    const std::uint64_t seed = 20260810;

    // 1. Hirzebruch-Riemann-Roch desk check, exact and under one second.
    {
        const Timed t = timed([] { return suite_hrr(); });
        report(1, "HRR desk check (0<=n<=4, -3<=d<=5, integral = chi = binomial)",
               t.result.pass() && t.seconds < 1.0, summary(t));
    }

    // 2. T_y specializations at y = -1/0/1 on 200 random root lists.
    {
        const Timed t = timed([&] { return suite_specializations(seed, 200, 6); });
        report(2, "Hirzebruch specializations to Chern/Todd/L", t.result.pass(), summary(t));
    }

    // 3. Covariance of all six functors on 100 random composable pairs,
    //    total dimension <= 6, exact matrix equality, under 30 s.
    {
        const Timed t = timed([&] { return suite_covariance(seed, 100, 6); });
        report(3, "covariance of G0/HTodd/F/HChern/K0V/HHirz under composition",
               t.result.pass() && t.seconds < 30.0, summary(t));
    }

    // 4. Naturality of the three transformations on the same suite.
    {
        const Timed t = timed([&] { return suite_naturality(seed, 100, 6); });
        report(4, "naturality of td_bfm, mac_chern, hirzebruch_ty", t.result.pass(), summary(t));
    }

    // 5. The bicycle battery on 50 random bicycles, under 60 s.
    {
        const Timed t = timed([&] { return suite_bicycle(seed, 50, 4); });
        report(5, "bicycle products, grades, covariance, td naturality, push/pull squares",
               t.result.pass() && t.seconds < 60.0, summary(t));
    }

    // 6. The zigzag battery (pro-smooth and pro-lci covariance,
    //    naturality, agreement with composed correspondences).
    {
        const Timed t = timed([&] { return suite_zigzag(seed, 30, 6); });
        report(6, "zigzag covariance under juxtaposition and cross-validation",
               t.result.pass(), summary(t));
    }

    // 7. The smooth-category battery: pullback-dot contravariance and
    //    isomorphism invariance of the smooth operators.
    {
        const Timed t = timed([&] { return suite_smooth(seed, 50, 6); });
        report(7, "smooth pullback functoriality and isomorphism invariance",
               t.result.pass(), summary(t));
    }

    // 8. Base change and projection formulas in Chow, K and constructible
    //    theories on the fiber squares of suites 3-6.
    {
        const Timed t = timed([&] { return suite_base_change(seed, 100, 50, 30, 6); });
        report(8, "base change and projection formulas in all three theories",
               t.result.pass(), summary(t));
    }

    // 9. Negative controls: the twist-free and Koszul-free corruptions
    //    must each fail with a reported witness.
    {
        const Timed t = timed([] { return suite_negative_controls(); });
        report(9, "negative controls detect the dropped twist and dropped Koszul factor",
               t.result.pass(), summary(t));
    }

    // 10. CLI contract: golden-file round trip, byte-stable JSON, exit
    //     codes 0/1/2.
    {
        bool pass = true;
        std::string detail;
        try {
            const std::string demo = slurp(scenario_dir + "/demo.ccs");
            const std::string golden = slurp(scenario_dir + "/demo_golden.ccs");
            const dsl::Scenario parsed = dsl::parse_scenario(demo);
            if (dsl::print_scenario(parsed) != golden) {
                pass = false;
                detail = "golden-file mismatch";
            }
            if (pass && dsl::print_scenario(dsl::parse_scenario(golden)) != golden) {
                pass = false;
                detail = "pretty-printer is not idempotent";
            }
            if (pass) {
                const std::string a = report_json(run_suites(parsed, 7));
                const std::string b = report_json(run_suites(parsed, 7));
                if (a != b) {
                    pass = false;
                    detail = "JSON not byte-stable for a fixed seed";
                }
            }
            if (pass && !cli.empty()) {
                const int demo_code = run_cli(cli, "check " + scenario_dir + "/demo.ccs");
                const int fail_code = run_cli(cli, "check " + scenario_dir + "/negative.ccs");
                const int usage_code = run_cli(cli, "check " + scenario_dir + "/malformed.ccs");
                if (demo_code != 0 || fail_code != 1 || usage_code != 2) {
                    pass = false;
                    std::ostringstream os;
                    os << "exit codes: demo=" << demo_code << " negative=" << fail_code
                       << " malformed=" << usage_code << " (want 0/1/2)";
                    detail = os.str();
                }
                if (pass) {
                    // Byte stability through the real binary as well.
                    const std::string base = cli + " check " + scenario_dir +
                                             "/demo.ccs --seed 7 --format json > ";
                    const int r1 =
                        std::system((base + "/tmp/corrclass_j1.json 2>/dev/null").c_str());
                    const int r2 =
                        std::system((base + "/tmp/corrclass_j2.json 2>/dev/null").c_str());
                    if (WEXITSTATUS(r1) != 0 || WEXITSTATUS(r2) != 0 ||
                        slurp("/tmp/corrclass_j1.json") != slurp("/tmp/corrclass_j2.json") ||
                        slurp("/tmp/corrclass_j1.json").empty()) {
                        pass = false;
                        detail = "CLI JSON output not byte-stable";
                    }
                }
            } else if (cli.empty()) {
                detail = "cli binary not provided; exit codes untested";
            }
        } catch (const std::exception& e) {
            pass = false;
            detail = e.what();
        }
        report(10, "CLI golden round-trip, byte-stable JSON, exit-code contract", pass, detail);
    }

    std::cout << (g_failures == 0 ? "ACCEPTANCE PASS" : "ACCEPTANCE FAIL") << " ("
              << (10 - g_failures) << "/10 criteria)\n";
    return g_failures == 0 ? 0 : 1;
}
