#pragma once

#include <cstdint>
#include <optional>

#include "sacpat/model.hpp"
#include "sacpat/pattern.hpp"

namespace sacpat
{
    struct GenParams
    {
        int n_vars = 0;
        int domain_size = 1;
        double constraint_density = 0.0;
        double tightness = 0.0;
        std::uint64_t seed = 0;
    };

    // n variables with domains {1..q} and pairwise inequality.
    Instance gen_kcoloring(int n, int q);

    // Dual encoding of 3-colouring K4: x1..x4 over {1,2,3}, y1..y3 over
    // {1,2,3,4}, and (x_i = j) => (y_j = i) for all i,j. Unsatisfiable but
    // singleton arc consistent.
    Instance gen_i34();

    // Five variables over {1,2,3,4} with (x_i = j-1) <=> (x_j = i) for all
    // i < j. Unsatisfiable but singleton arc consistent.
    Instance gen_i5();

    // Replaces R(x,y) by a chain x - u1 - ... - uk - y of fresh variables
    // with domain D(x), equalities along the chain and the original
    // relation between uk and y. R(x,y) must have a stored entry.
    Instance gen_pad_equality(const Instance& I, int x, int y, int k);

    // Replacement of 3-colouring K4 by implication chains over Boolean
    // variables, so that every constraint has at most one forbidden pair.
    // 310 variables; unsatisfiable but singleton arc consistent. With
    // `biconditional`, (x_i = a) is made equivalent to its first chain
    // variable instead of merely implying it.
    Instance gen_implication_gadget(bool biconditional = false);

    // Seeded random instance: each variable pair is constrained with
    // probability constraint_density, and each value pair of a constrained
    // pair is forbidden independently with probability tightness. Uses a
    // splitmix64 generator, so output is platform-independent: pairs are
    // visited in lexicographic order, one draw per pair plus one draw per
    // value pair of the constrained pairs.
    Instance gen_random(const GenParams& params);

    // Rejection-samples gen_random (bumping the seed by one per attempt)
    // until the instance avoids P; nullopt after max_tries attempts.
    std::optional<Instance> gen_pattern_free(const Pattern& P, const GenParams& params,
                                             int max_tries);

    namespace detail
    {
        std::uint64_t splitmix64(std::uint64_t& state);
        double next_fraction(std::uint64_t& state);
    }
}
