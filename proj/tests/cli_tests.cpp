// End-to-end checks of the installed CLI surface: spawns the real binary,
// parses its stdout payloads, and verifies exit codes.

#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>

#include <json.hpp>

using nlohmann::json;

namespace {

int g_failures = 0;

#define CLI_CHECK(cond, what)                                      \
    do {                                                           \
        if (!(cond)) {                                             \
            std::fprintf(stderr, "FAILED: %s (%s)\n", what, #cond); \
            ++g_failures;                                          \
        }                                                          \
    } while (0)

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    const std::string cmd = std::string(CLI_BINARY) + " " + args + " 2>/dev/null";
    RunResult r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) return r;
    std::array<char, 4096> buf{};
    while (std::fgets(buf.data(), buf.size(), pipe)) r.out += buf.data();
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void write_poly(const std::string& path, const std::string& body) {
    std::ofstream f(path);
    f << body;
}

} // namespace

int main() {
    // verify-kt: payload fields and the documented constant
    {
        RunResult r = run("verify-kt --t 1 --tol 1e-6");
        CLI_CHECK(r.exit_code == 0, "verify-kt exit");
        const json j = json::parse(r.out);
        CLI_CHECK(std::fabs(j["kt"].get<double>() - 2.0 * M_PI) < 1e-5, "kt value");
        CLI_CHECK(std::fabs(j["reference"].get<double>() - 2.0 * M_PI) < 1e-12, "kt reference");
        CLI_CHECK(j["ok"].get<bool>(), "kt ok");
        CLI_CHECK(j["argv"].is_array(), "argv echoed");
        CLI_CHECK(j["command"].get<std::string>() == "verify-kt", "command echoed");
    }

    // norm: the sqrt(2) case through a file
    {
        write_poly("/tmp/two_three.json",
                   "{\"coeffs\":[{\"n\":2,\"re\":1.0,\"im\":0.0},{\"n\":3,\"re\":1.0,\"im\":0.0}]}");
        RunResult r = run("norm --space hp --p 2 --inner even --input /tmp/two_three.json");
        CLI_CHECK(r.exit_code == 0, "norm exit");
        const json j = json::parse(r.out);
        CLI_CHECK(std::fabs(j["value"].get<double>() - std::sqrt(2.0)) < 1e-12, "norm value");
        CLI_CHECK(std::fabs(j["value"].get<double>() - 1.414214) < 1e-6, "norm value digits");
    }

    // rl on a constant: documented precondition failure, exit 2
    {
        write_poly("/tmp/const.json", "{\"coeffs\":[{\"n\":1,\"re\":1.0,\"im\":0.0}]}");
        RunResult r = run("rl --t 1 --input /tmp/const.json");
        CLI_CHECK(r.exit_code == 2, "rl precondition exit code");
    }

    // rl semigroup across the file boundary: t then t' equals t + t'
    {
        write_poly("/tmp/f.json",
                   "{\"coeffs\":[{\"n\":2,\"re\":1.0,\"im\":0.5},{\"n\":6,\"re\":-0.25,\"im\":0.0}]}");
        RunResult a = run("rl --t 0.4 --input /tmp/f.json --output /tmp/f_a.json");
        CLI_CHECK(a.exit_code == 0, "rl stage 1 exit");
        RunResult b = run("rl --t 0.6 --input /tmp/f_a.json");
        CLI_CHECK(b.exit_code == 0, "rl stage 2 exit");
        RunResult c = run("rl --t 1.0 --input /tmp/f.json");
        CLI_CHECK(c.exit_code == 0, "rl direct exit");
        const json jb = json::parse(b.out), jc = json::parse(c.out);
        CLI_CHECK(jb["coeffs"].size() == jc["coeffs"].size(), "rl chain support");
        for (std::size_t i = 0; i < jb["coeffs"].size(); ++i) {
            const double d = std::fabs(jb["coeffs"][i]["re"].get<double>() -
                                       jc["coeffs"][i]["re"].get<double>()) +
                             std::fabs(jb["coeffs"][i]["im"].get<double>() -
                                       jc["coeffs"][i]["im"].get<double>());
            CLI_CHECK(d < 1e-13, "rl chain coefficients");
        }
    }

    // stdin input
    {
        RunResult r = run("norm --space hp --p 2 --inner even --input - "
                          "< /tmp/two_three.json");
        CLI_CHECK(r.exit_code == 0, "stdin norm exit");
        const json j = json::parse(r.out);
        CLI_CHECK(std::fabs(j["value"].get<double>() - std::sqrt(2.0)) < 1e-12, "stdin value");
    }

    // delta-norm
    {
        RunResult r = run("delta-norm --sigma 1.0 --space h2 --tol 1e-8");
        CLI_CHECK(r.exit_code == 0, "delta-norm exit");
        const json j = json::parse(r.out);
        CLI_CHECK(std::fabs(j["value"].get<double>() - 1.2825498) < 1e-6, "delta-norm value");
        CLI_CHECK(j["tail_bound"].get<double>() >= 0.0, "delta-norm tail bound");
    }

    // zeta-power payload
    {
        RunResult r = run("zeta-power --m 2 --N 12");
        CLI_CHECK(r.exit_code == 0, "zeta-power exit");
        const json j = json::parse(r.out);
        bool found = false;
        for (const auto& c : j["coeffs"])
            if (c["n"].get<int>() == 12) {
                found = true;
                CLI_CHECK(c["re"].get<double>() == 6.0, "d(12) = 6");
            }
        CLI_CHECK(found, "coefficient at 12 present");
    }

    // check-conditions on a power measure
    {
        RunResult r = run("check-conditions --measure "
                          "\"{\\\"kind\\\":\\\"power\\\",\\\"beta\\\":0.5}\" "
                          "--q-exponent 0.5 --p 2 --t 1");
        CLI_CHECK(r.exit_code == 0, "check-conditions exit");
        const json j = json::parse(r.out);
        CLI_CHECK(j["h_condition"]["satisfied"].get<bool>(), "H satisfied for power");
        CLI_CHECK(j["d_condition"]["satisfied"].get<bool>(), "D satisfied for power");
    }

    // fit: fast norm-equivalence run
    {
        RunResult r = run("fit --experiment norm-equivalence --alpha 0 --p 2 --t 1 --seed 3");
        CLI_CHECK(r.exit_code == 0, "fit exit");
        const json j = json::parse(r.out);
        CLI_CHECK(j["spread_pass"].get<bool>(), "fit spread");
        CLI_CHECK(j["envelope_pass"].get<bool>(), "fit envelope");
    }

    // tolerance-unattained maps to exit 3
    {
        RunResult r = run("verify-kt --t 0.05 --tol 1e-12");
        CLI_CHECK(r.exit_code == 3, "kt tolerance exit code");
    }

    // saturation maps to exit 4
    {
        RunResult r = run("fit --experiment zeta-power --m 1 --N 2000 "
                          "--grid 0.05:0.5:8 --slope-tol 1e-5");
        CLI_CHECK(r.exit_code == 4, "saturation exit code");
    }

    // unknown subcommand / bad flags map to exit 2
    {
        CLI_CHECK(run("frobnicate").exit_code == 2, "unknown subcommand");
        CLI_CHECK(run("norm --space xyz --input /tmp/two_three.json").exit_code == 2,
                  "bad space");
    }

    if (g_failures == 0) std::printf("cli_tests: all checks passed\n");
    return g_failures;
}
