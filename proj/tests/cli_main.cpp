// Integration tests for the command-line tool: spawn the binary (path in
// argv[1]), capture stdout, check outputs, exit codes, and that JSON mode
// round-trips byte for byte.

#include <json.hpp>

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

namespace {

using json = nlohmann::ordered_json;

std::string g_binary;
int g_failures = 0;

struct RunResult {
    int exit_code = -1;
    std::string out;
};

RunResult run(const std::string& args) {
    std::string cmd = g_binary + " " + args + " 2>/dev/null";
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) {
        std::cerr << "cannot spawn: " << cmd << "\n";
        std::exit(2);
    }
    RunResult r;
    char buf[4096];
    size_t n;
    while ((n = fread(buf, 1, sizeof buf, pipe)) > 0)
        r.out.append(buf, n);
    int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    return r;
}

void check(bool ok, const std::string& what) {
    if (!ok) {
        ++g_failures;
        std::cerr << "[FAIL] " << what << "\n";
    }
}

bool contains(const std::string& haystack, const std::string& needle) {
    return haystack.find(needle) != std::string::npos;
}

} // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::cerr << "usage: cli-tests <path-to-binary>\n";
        return 2;
    }
    g_binary = argv[1];

    // the h^1 spike across a twist range, CSV mode
    {
        RunResult r = run("cohomology --variety palatini --t 0 --i 1 --range 0..6 --format csv");
        check(r.exit_code == 0, "cohomology exits 0");
        check(contains(r.out, "i,k,lo,hi\n"), "csv header");
        check(contains(r.out, "1,2,1,1\n"), "spike row k=2");
        check(contains(r.out, "1,3,0,0\n"), "zero row k=3");
        check(!contains(r.out, "1,1,1"), "no spurious spike at k=1");
    }

    // JSON mode round-trips byte for byte
    {
        RunResult r = run("cohomology --variety palatini --t 0 --i 1 --range 0..6 --format json");
        check(r.exit_code == 0, "cohomology json exits 0");
        json parsed = json::parse(r.out);
        check(parsed.dump(2) + "\n" == r.out, "json round-trip identity");
        check(parsed["version"] == "0.1.0", "version field");
        check(parsed["command"] == "cohomology", "command echoed");
        bool spike_ok = false;
        for (const auto& cell : parsed["results"])
            if (cell["k"] == 2 && cell["i"] == 1)
                spike_ok = cell["value"] == 1;
        check(spike_ok, "json spike value");
        // determinism: identical invocation, identical bytes
        RunResult again = run("cohomology --variety palatini --t 0 --i 1 --range 0..6 --format json");
        check(again.out == r.out, "byte-identical reruns");
    }

    // catalog
    {
        RunResult r = run("catalog list --format json");
        check(r.exit_code == 0, "catalog list exits 0");
        json parsed = json::parse(r.out);
        check(parsed["results"].size() == 5, "five catalog entries");

        RunResult segre = run("catalog show segre --format json");
        check(segre.exit_code == 0, "catalog show exits 0");
        json sj = json::parse(segre.out);
        check(sj["results"]["degree"] == 3, "segre degree");
        check(sj["results"]["regularity"] == 2, "segre regularity");

        RunResult scroll = run("catalog show palatini --t 0 --format json");
        json pj = json::parse(scroll.out);
        check(pj["results"]["degree"] == 7, "scroll degree");
        check(pj["results"]["regularity"] == 4, "scroll regularity");
        check(pj["results"]["first_normal_from"] == 3, "scroll normality threshold");
        check(pj["results"]["sectional_genus"] == 4, "scroll sectional genus");
    }

    // regularity and normality
    {
        RunResult r = run("regularity --variety ci --N 5 --degrees 2,2 --format json");
        json parsed = json::parse(r.out);
        check(parsed["results"]["regularity"] == 3, "ci regularity");
        check(parsed["results"]["first_normal_from"].is_null(), "ci is normal in every twist");

        RunResult n = run("normality --variety palatini --t 0 --range 0..6 --format json");
        json nj = json::parse(n.out);
        check(nj["results"]["first_normal_from"] == 3, "normality threshold");
        bool failing_row = false;
        for (const auto& row : nj["results"]["rows"])
            if (row["k"] == 2)
                failing_row = row["normal"] == false;
        check(failing_row, "k=2 is not normal");
    }

    // chern
    {
        RunResult r = run("chern --omega-n 5 --twist 2+t --at 1 --format json");
        json parsed = json::parse(r.out);
        check(parsed["results"]["dependency_locus_degree"] == "10*t^2 + 16*t + 7",
              "family degree polynomial");
        check(parsed["results"]["specialized_degree"] == 33, "degree at t=1");
        RunResult v = run("chern --variety palatini --t 0 --format json");
        json vj = json::parse(v.out);
        check(vj["results"]["specialized_degree"] == 7, "degree at t=0");
    }

    // betti
    {
        RunResult r = run("betti --koszul 2,2 --N 5 --format json");
        json parsed = json::parse(r.out);
        check(parsed["results"]["regularity"] == 3, "koszul regularity");
        RunResult table = run("betti --koszul 2,2 --N 5");
        check(contains(table.out, "regularity: 3"), "table shows regularity");
        check(contains(table.out, "2:  2  ."), "Macaulay layout row");
    }

    // quadric
    {
        RunResult r = run("quadric --n 3 --rank 4 --a 3 --b 2 --format json");
        json parsed = json::parse(r.out);
        check(parsed["results"]["classification"] == "linked-to-linear", "classification");
        check(parsed["results"]["degree"] == 5, "degree");
        check(parsed["results"]["depth_at_vertex"] == 3, "depth");
        check(parsed["results"]["regularity"] == 3, "regularity");
    }

    // liaison
    {
        RunResult r = run("liaison-check --x1 skew-lines --x2 skew-lines --ci 2,2 --format json");
        json parsed = json::parse(r.out);
        check(r.exit_code == 0, "liaison-check exits 0");
        check(parsed["results"]["holds"] == true, "self-linkage duality holds");
    }

    // verify-bound
    {
        RunResult r = run("verify-bound --setting threefold-p5 --format json");
        json parsed = json::parse(r.out);
        check(parsed["results"]["bound"] == "d - 3", "bound");
        check(parsed["axioms"].size() == 4, "axiom list");
        RunResult text = run("verify-bound --setting threefold-p5 --global");
        check(contains(text.out, "reg <= d - 3"), "bound line");
        check(contains(text.out, "kodaira-vanishing"), "axiom listed");
        check(contains(text.out, "verified"), "global comparison verified");
    }

    // an explicit cohomological index range
    {
        RunResult r = run("cohomology --variety segre --i-range 1..3 --range -2..4 --format csv");
        check(r.exit_code == 0, "i-range exits 0");
        check(!contains(r.out, "\n0,"), "row i=0 excluded by i-range");
        check(contains(r.out, "3,-2,"), "row i=3 included by i-range");
        RunResult conflict = run("cohomology --variety segre --i 1 --i-range 1..2 --range 0..1");
        check(conflict.exit_code == 2, "--i and --i-range conflict is a usage error");
    }

    // uncertain values surface as intervals, never as numbers
    {
        RunResult r = run("cohomology --variety palatini --t 0 --i 4 --range -4..-4");
        check(contains(r.out, ".."), "interval rendered as lo..hi");
        RunResult j = run("cohomology --variety palatini --t 0 --i 4 --range -4..-4 --format json");
        json parsed = json::parse(j.out);
        const auto& value = parsed["results"][0]["value"];
        check(value.is_object() && value.contains("lo") && value.contains("hi"),
              "interval rendered as {lo, hi} in json");
    }

    // exit codes: domain errors are 1, usage errors are 2
    {
        RunResult domain = run("quadric --n 3 --rank 4 --a 4 --b 2");
        check(domain.exit_code == 1, "precondition violation exits 1");
        RunResult usage = run("cohomology --no-such-flag");
        check(usage.exit_code == 2, "unknown flag exits 2");
        RunResult missing = run("cohomology");
        check(missing.exit_code == 2, "missing required option exits 2");
        RunResult unknown = run("cohomology --variety nonsense");
        check(unknown.exit_code == 1, "unknown variety exits 1");
    }

    if (g_failures != 0) {
        std::cerr << g_failures << " CLI checks failed\n";
        return 1;
    }
    std::cout << "all CLI checks passed\n";
    return 0;
}
