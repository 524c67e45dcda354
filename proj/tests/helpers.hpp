#pragma once

// Independent reference implementations used to cross-check the library:
// a brute-force enumerator and propagation fixpoints computed with a
// schedule unrelated to the library's canonical one.

#include <optional>
#include <vector>

#include "sacpat/instances.hpp"
#include "sacpat/model.hpp"

namespace testing_support
{
    // Exhaustive enumeration over the full assignment space.
    inline std::optional<sacpat::Assignment> brute_force(const sacpat::Instance& I)
    {
        int n = I.num_vars();
        sacpat::Assignment s;
        std::vector<int> idx(n, 0);
        for (int x = 0; x < n; ++x)
            if (I.domain(x).empty())
                return std::nullopt;
        for (;;)
        {
            for (int x = 0; x < n; ++x)
                s[x] = I.domain(x)[idx[x]];
            if (sacpat::verify_solution(I, s))
                return s;
            int x = n - 1;
            while (x >= 0 && idx[x] + 1 == static_cast<int>(I.domain(x).size()))
                idx[x--] = 0;
            if (x < 0)
                return std::nullopt;
            ++idx[x];
        }
    }

    // Arc consistency by repeated full sweeps in reverse pair order —
    // deliberately a different schedule from the library's queue.
    inline sacpat::Instance naive_ac(sacpat::Instance I)
    {
        bool changed = true;
        while (changed)
        {
            changed = false;
            for (int x = I.num_vars() - 1; x >= 0; --x)
                for (int y = I.num_vars() - 1; y >= 0; --y)
                {
                    if (x == y)
                        continue;
                    for (sacpat::Value b : std::vector<sacpat::Value>(I.domain(y)))
                    {
                        bool supported = false;
                        for (sacpat::Value a : I.domain(x))
                            if (I.allowed(x, a, y, b))
                            {
                                supported = true;
                                break;
                            }
                        if (!supported)
                        {
                            I.remove_value(y, b);
                            changed = true;
                        }
                    }
                }
        }
        return I;
    }

    // Singleton arc consistency via naive_ac, scanning values descending.
    inline sacpat::Instance naive_sac(sacpat::Instance I)
    {
        I = naive_ac(std::move(I));
        bool changed = true;
        while (changed && !I.has_empty_domain())
        {
            changed = false;
            for (int x = I.num_vars() - 1; x >= 0 && !changed; --x)
                for (sacpat::Value v : std::vector<sacpat::Value>(I.domain(x)))
                {
                    sacpat::Instance probe = I;
                    probe.assign(x, v);
                    if (!naive_ac(std::move(probe)).has_empty_domain())
                        continue;
                    I.remove_value(x, v);
                    I = naive_ac(std::move(I));
                    changed = true;
                    break;
                }
        }
        if (I.has_empty_domain())
            for (int x = 0; x < I.num_vars(); ++x)
                for (sacpat::Value v : std::vector<sacpat::Value>(I.domain(x)))
                    I.remove_value(x, v);
        return I;
    }

    inline sacpat::Instance random_instance(std::uint64_t seed, int n = 5, int d = 3,
                                            double density = 0.5, double tightness = 0.4)
    {
        sacpat::GenParams p;
        p.n_vars = n;
        p.domain_size = d;
        p.constraint_density = density;
        p.tightness = tightness;
        p.seed = seed;
        return sacpat::gen_random(p);
    }
}
