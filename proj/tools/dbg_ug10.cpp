// Probe: run check_ugaglia at n=2,3 (symbolic) and n=4 (pointwise).
#include <chrono>
#include <cstdio>

#include "stokescluster/compare.hpp"
#include "stokescluster/ugaglia.hpp"

using namespace sc;

static void run(int n, CompareMode mode, int points) {
    auto t0 = std::chrono::steady_clock::now();
    Comparer cmp(mode, points, 1);
    std::vector<CheckItem> items;
    std::map<std::string, std::string> conv;
    check_ugaglia(n, cmp, items, conv, 0);
    auto t1 = std::chrono::steady_clock::now();
    double ms = std::chrono::duration<double, std::milli>(t1 - t0).count();
    int fails = 0;
    for (const auto& it : items)
        if (!it.ok) ++fails;
    std::printf("== n=%d mode=%s points=%d: %zu items, %d fail, %.0f ms\n", n,
                mode == CompareMode::Symbolic ? "symbolic" : "pointwise", points, items.size(),
                fails, ms);
    for (const auto& it : items)
        std::printf("   %-28s %s %s\n", it.name.c_str(), it.ok ? "ok" : "FAIL",
                    it.residual.c_str());
    for (const auto& [k, v] : conv) std::printf("   conv %s = %s\n", k.c_str(), v.c_str());
    std::fflush(stdout);
}

int main(int argc, char** argv) {
    int which = argc > 1 ? std::atoi(argv[1]) : 0;
    if (which == 0 || which == 2) run(2, CompareMode::Symbolic, 0);
    if (which == 0 || which == 3) run(3, CompareMode::Symbolic, 0);
    if (which == 0 || which == 4) run(4, CompareMode::Pointwise, 20);
    return 0;
}
