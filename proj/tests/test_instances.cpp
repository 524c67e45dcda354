#include <doctest.h>

#include "helpers.hpp"
#include "sacpat/catalog.hpp"
#include "sacpat/instances.hpp"
#include "sacpat/match.hpp"
#include "sacpat/propagate.hpp"
#include "sacpat/solve.hpp"

using namespace sacpat;

TEST_CASE("complete-graph colouring structure")
{
    Instance K = gen_kcoloring(4, 3);
    int constraints = 0;
    for (int x = 0; x < 4; ++x)
        for (int y = x + 1; y < 4; ++y)
        {
            ++constraints;
            CHECK(K.forbidden_pairs(x, y) ==
                  std::set<std::pair<Value, Value>>{{1, 1}, {2, 2}, {3, 3}});
        }
    CHECK(constraints == 6);

    Instance one = gen_kcoloring(1, 1);
    CHECK(one.num_vars() == 1);
    CHECK(testing_support::brute_force(one).has_value());

    CHECK(is_sac(K));
    CHECK(!oracle_solve(K).sat);
}

TEST_CASE("dual colouring encoding structure")
{
    Instance I = gen_i34();
    CHECK(I.num_vars() == 7);
    for (int x = 0; x < 4; ++x)
        CHECK(I.domain(x) == std::vector<Value>{1, 2, 3});
    for (int y = 4; y < 7; ++y)
        CHECK(I.domain(y) == std::vector<Value>{1, 2, 3, 4});
    for (int x = 0; x < 4; ++x)
        for (int y = 4; y < 7; ++y)
            CHECK(I.forbidden_pairs(x, y).size() == 3);
    CHECK(is_sac(I));
    CHECK(!oracle_solve(I).sat);
}

TEST_CASE("cyclic encoding structure")
{
    Instance I = gen_i5();
    CHECK(I.num_vars() == 5);
    int nontrivial = 0;
    for (int x = 0; x < 5; ++x)
        for (int y = x + 1; y < 5; ++y)
            if (!I.is_trivial(x, y))
                ++nontrivial;
    CHECK(nontrivial == 10);
    CHECK(I.forbidden_pairs(0, 1) ==
          std::set<std::pair<Value, Value>>{
              {1, 2}, {1, 3}, {1, 4}, {2, 1}, {3, 1}, {4, 1}});
    CHECK(is_sac(I));
    CHECK(!oracle_solve(I).sat);
}

TEST_CASE("equality padding")
{
    Instance K = gen_kcoloring(3, 3);
    Instance P = gen_pad_equality(K, 0, 1, 1);
    CHECK(P.num_vars() == 4);
    CHECK(P.is_trivial(0, 1));
    CHECK(!P.is_trivial(0, 3));
    CHECK(!P.is_trivial(3, 1));

    for (std::uint64_t seed = 0; seed < 100; ++seed)
    {
        Instance I = testing_support::random_instance(seed, 5, 3, 0.8, 0.4);
        if (!I.has_relation_entry(0, 1))
            continue;
        Instance J = gen_pad_equality(I, 0, 1, 2);
        CHECK(testing_support::brute_force(I).has_value() ==
              testing_support::brute_force(J).has_value());
    }

    Instance A = gen_kcoloring(4, 3);
    for (int x = 0; x < 4; ++x)
        for (int y = x + 1; y < 4; ++y)
            A = gen_pad_equality(A, x, y, 3);
    CHECK(is_sac(A));
    CHECK(!oracle_solve(A).sat);
}

TEST_CASE("implication-chain replacement of the colouring")
{
    Instance G = gen_implication_gadget();
    CHECK(G.num_vars() == 310);
    for (int x = 4; x < 310; ++x)
        CHECK(G.domain(x) == std::vector<Value>{0, 1});
    CHECK(!oracle_solve(G).sat);

    Instance B = gen_implication_gadget(true);
    CHECK(B.num_vars() == 310);
    CHECK(!oracle_solve(B).sat);
}

TEST_CASE("random generation is deterministic and parameter-faithful")
{
    GenParams p;
    p.n_vars = 6;
    p.domain_size = 3;
    p.constraint_density = 0.5;
    p.tightness = 0.4;
    p.seed = 42;
    CHECK(gen_random(p) == gen_random(p));
    CHECK(serialize_instance(gen_random(p)) == serialize_instance(gen_random(p)));

    p.constraint_density = 0.0;
    Instance loose = gen_random(p);
    for (int x = 0; x < 6; ++x)
        for (int y = x + 1; y < 6; ++y)
            CHECK(loose.is_trivial(x, y));

    p.constraint_density = 1.0;
    p.tightness = 1.0;
    CHECK(!testing_support::brute_force(gen_random(p)).has_value());
}

TEST_CASE("pattern-avoiding rejection sampling")
{
    GenParams p;
    p.n_vars = 5;
    p.domain_size = 3;
    p.constraint_density = 0.0;
    p.tightness = 0.0;
    p.seed = 1;
    auto I = gen_pattern_free(get_pattern("Q1").pattern, p, 1);
    REQUIRE(I);

    p.constraint_density = 0.5;
    p.tightness = 0.4;
    for (const char* name : {"Q1", "R8", "T4"})
        for (std::uint64_t seed = 0; seed < 30; ++seed)
        {
            p.seed = seed * 1000;
            auto J = gen_pattern_free(get_pattern(name).pattern, p, 200);
            REQUIRE(J);
            CHECK(!occurs(get_pattern(name).pattern, *J));
        }
}
