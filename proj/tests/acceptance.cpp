// Acceptance runner: one PASS/FAIL line per criterion, each backed by full-scale suites.

#include <binowords/verify.hpp>

#include <chrono>
#include <cstdio>
#include <iostream>
#include <string>
#include <vector>

using namespace binowords;

namespace {

struct Criterion {
    int id;
    std::string title;
    std::vector<std::string> suites;
};

const std::vector<Criterion> criteria = {
    {1, "Thue-Morse factor complexity equals its closed form, n <= 512", {"tm-factor"}},
    {2, "Thue-Morse j-binomial complexity equals its closed form, j <= 3, n <= 128", {"tm-binomial"}},
    {3, "phi^k(0) ~_k phi^k(1) and not ~_{k+1}, k <= 7", {"ochsenschlager"}},
    {4, "Sturmian 2-binomial complexity is n + 1, n <= 200", {"sturmian-2bin"}},
    {5, "phi^k(fib), phi^k(pd) share the j-binomial complexities of Thue-Morse, j <= k <= 3", {"tm-property"}},
    {6, "(k+1)-binomial formula from abelian Rauzy graphs equals brute force", {"kplus1-formula"}},
    {7, "closed forms for phi^k of a Sturmian word, k <= 2", {"sturmian-closed-forms"}},
    {8, "b1 < b2 < b3 < b4 = p witnesses on phi^2(fib)", {"prec-chain"}},
    {9, "binomial chain and weight spread of the word h", {"word-h"}},
    {10, "Parikh-collinear classification, characterization and rank-2 growth", {"classify", "pc-characterization", "rank2-growth"}},
    {11,
     "property suites",
     {"cancellation", "w35", "transfer", "diff-powers", "sum-constantPvect", "g-function", "coefficients-of-images", "michel",
      "image-coefficient", "boundaries", "walnut-facts", "2bin-same-class", "prefix-suffix-relation", "kplus1-prefix-suffix",
      "unique-image", "decode-roundtrip", "constructions"}},
    {12, "period-doubling 2-, 3- and 4-binomial experiment", {"period-doubling"}},
};

} // namespace

int main(int argc, char** argv) {
    const bool verbose = argc > 1 && std::string(argv[1]) == "-v";
    const auto start = std::chrono::steady_clock::now();
    int failed = 0;
    for (const auto& c : criteria) {
        bool ok = true;
        std::string failures;
        double seconds = 0;
        for (const auto& name : c.suites) {
            const auto report = run_suite(name, Scale::full);
            seconds += report.seconds;
            if (verbose) std::cerr << report.text();
            if (report.passed()) continue;
            ok = false;
            for (const auto& check : report.checks)
                if (!check.passed) failures += "\n    " + name + ": " + check.name + (check.detail.empty() ? "" : " -- " + check.detail);
        }
        failed += !ok;
        std::printf("%s criterion %d: %s (%.2f s)%s\n", ok ? "PASS" : "FAIL", c.id, c.title.c_str(), seconds, failures.c_str());
        std::fflush(stdout);
    }
    const double total = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("%zu criteria, %d failed, %.1f s\n", criteria.size(), failed, total);
    return failed ? 1 : 0;
}
