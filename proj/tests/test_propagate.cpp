#include <doctest.h>

#include "helpers.hpp"
#include "sacpat/instances.hpp"
#include "sacpat/propagate.hpp"

using namespace sacpat;

namespace
{
    // x in {1}, y,z in {1,2}, R(x,y)={(1,1)}, R(y,z)={(1,1),(2,2)}.
    Instance chain_instance()
    {
        Instance I({{1}, {1, 2}, {1, 2}});
        I.set_allowed(0, 1, {{1, 1}});
        I.set_allowed(1, 2, {{1, 1}, {2, 2}});
        return I;
    }
}

TEST_CASE("revise removes exactly the unsupported values")
{
    Instance I({{1}, {1, 2}});
    I.set_allowed(0, 1, {{1, 1}});
    CHECK(revise(I, 0, 1) == std::vector<Value>{2});
    CHECK(I.domain(1) == std::vector<Value>{1});

    Instance T({{1, 2}, {1, 2}});
    CHECK(revise(T, 0, 1).empty());

    Instance I5 = gen_i5();
    CHECK(revise(I5, 0, 1).empty());
}

TEST_CASE("arc consistency follows the canonical schedule")
{
    auto [J, trace] = enforce_ac(chain_instance());
    Trace expected;
    expected.steps = {{0, 1, {2}}, {1, 2, {2}}};
    CHECK(trace == expected);
    CHECK(J.domain(0) == std::vector<Value>{1});
    CHECK(J.domain(1) == std::vector<Value>{1});
    CHECK(J.domain(2) == std::vector<Value>{1});
    CHECK(format_trace(trace) == "0 -> 1 : {2}\n1 -> 2 : {2}\n");
}

TEST_CASE("arc consistency is idempotent with an empty trace at a fixpoint")
{
    auto [J, trace] = enforce_ac(gen_i34());
    CHECK(trace.steps.empty());
    CHECK(J == gen_i34());
    auto [K, second] = enforce_ac(J);
    CHECK(second.steps.empty());
    CHECK(K == J);
}

TEST_CASE("arc-consistency closure agrees with an unrelated schedule")
{
    for (std::uint64_t seed = 0; seed < 100; ++seed)
    {
        Instance I = testing_support::random_instance(seed);
        CHECK(enforce_ac(I).first == testing_support::naive_ac(I));
    }
}

TEST_CASE("singleton probes")
{
    CHECK(singleton_probe(gen_i5(), 0, 1).survived);
    CHECK(!singleton_probe(gen_kcoloring(3, 2), 0, 1).survived);

    Instance T({{1, 2}, {1, 2}});
    ProbeResult r = singleton_probe(T, 0, 1);
    CHECK(r.survived);
    CHECK(r.trace.steps.empty());
    CHECK_THROWS_AS(singleton_probe(T, 0, 3), ModelError);
}

TEST_CASE("singleton-arc-consistency closure")
{
    CHECK(enforce_sac(gen_i34()) == gen_i34());

    Instance wiped = enforce_sac(gen_kcoloring(3, 2));
    for (int x = 0; x < 3; ++x)
        CHECK(wiped.domain(x).empty());

    Instance I5 = enforce_sac(gen_i5());
    CHECK(enforce_sac(I5) == I5);
}

TEST_CASE("closure agrees with an unrelated schedule")
{
    for (std::uint64_t seed = 0; seed < 100; ++seed)
    {
        Instance I = testing_support::random_instance(seed);
        CHECK(enforce_sac(I) == testing_support::naive_sac(I));
    }
}

TEST_CASE("singleton-consistency test")
{
    CHECK(is_sac(gen_i5()));
    CHECK(is_sac(gen_kcoloring(4, 3)));
    Instance empty_domain({{1}, {}});
    CHECK(!is_sac(empty_domain));
}

TEST_CASE("trace variable sets")
{
    auto [s_empty, inner_empty] = trace_sets(Trace{}, 3);
    CHECK(s_empty == std::set<int>{3});
    CHECK(inner_empty.empty());

    Trace two;
    two.steps = {{0, 1, {2}}, {1, 2, {2}}};
    auto [s, inner] = trace_sets(two, 0);
    CHECK(s == std::set<int>{0, 1, 2});
    CHECK(inner == std::set<int>{0, 1});

    Trace one;
    one.steps = {{0, 1, {2}}};
    CHECK(trace_sets(one, 0).second == std::set<int>{0});
}
