#include <doctest.h>

#include "helpers.hpp"
#include "sacpat/instances.hpp"
#include "sacpat/propagate.hpp"

using namespace sacpat;

TEST_CASE("round-based closure equals the serial closure")
{
    for (std::uint64_t seed = 0; seed < 60; ++seed)
    {
        Instance I = testing_support::random_instance(seed, 6, 3, 0.5, 0.4);
        Instance serial = enforce_sac(I);
        for (int jobs : {0, 1, 2, 4})
            CHECK(enforce_sac_parallel(I, jobs) == serial);
    }
}

TEST_CASE("both closures agree on the hard instances")
{
    for (const Instance& I : {gen_kcoloring(4, 3), gen_i34(), gen_i5()})
        CHECK(enforce_sac_parallel(I, 2) == I);
}

TEST_CASE("inconsistent inputs normalize to all-empty domains in both")
{
    Instance K = gen_kcoloring(3, 2);
    Instance serial = enforce_sac(K);
    Instance parallel = enforce_sac_parallel(K, 2);
    CHECK(serial == parallel);
    for (int x = 0; x < 3; ++x)
    {
        CHECK(serial.domain(x).empty());
        CHECK(parallel.domain(x).empty());
    }
}
