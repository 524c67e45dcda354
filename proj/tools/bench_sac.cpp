// Compares the serial singleton-arc-consistency closure against the
// round-based parallel one on a spread of generated instances, checking
// that both produce the same closure.
#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "sacpat/instances.hpp"
#include "sacpat/propagate.hpp"

namespace
{
    template <typename F>
    double time_ms(F&& f)
    {
        auto t0 = std::chrono::steady_clock::now();
        f();
        auto t1 = std::chrono::steady_clock::now();
        return std::chrono::duration<double, std::milli>(t1 - t0).count();
    }
}

int main(int argc, char** argv)
{
    int jobs = argc > 1 ? std::atoi(argv[1]) : 0;
    std::printf("%-28s %10s %10s %8s\n", "instance", "serial ms", "parallel ms",
                "speedup");

    struct Case
    {
        const char* name;
        sacpat::Instance instance;
    };
    std::vector<Case> cases;
    cases.push_back({"kcol(20,5)", sacpat::gen_kcoloring(20, 5)});
    cases.push_back({"gadget(310 vars)", sacpat::gen_implication_gadget()});
    for (std::uint64_t seed : {1ULL, 2ULL, 3ULL})
    {
        sacpat::GenParams p;
        p.n_vars = 40;
        p.domain_size = 8;
        p.constraint_density = 0.3;
        p.tightness = 0.25;
        p.seed = seed;
        cases.push_back({"random(40,8,.3,.25)", sacpat::gen_random(p)});
    }

    bool all_equal = true;
    for (const auto& c : cases)
    {
        sacpat::Instance serial_out, parallel_out;
        double serial = time_ms([&] { serial_out = sacpat::enforce_sac(c.instance); });
        double parallel =
            time_ms([&] { parallel_out = sacpat::enforce_sac_parallel(c.instance, jobs); });
        bool equal = serial_out == parallel_out;
        all_equal = all_equal && equal;
        std::printf("%-28s %10.2f %10.2f %7.2fx%s\n", c.name, serial, parallel,
                    parallel > 0 ? serial / parallel : 0.0, equal ? "" : "  MISMATCH");
    }
    if (!all_equal)
    {
        std::fprintf(stderr, "closures differ between serial and parallel\n");
        return 1;
    }
    return 0;
}
