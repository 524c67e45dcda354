#include "sacpat/instances.hpp"

#include "sacpat/match.hpp"

namespace sacpat
{
    Instance gen_kcoloring(int n, int q)
    {
        if (n < 1 || q < 1)
            throw ModelError("colouring generator needs n >= 1 and q >= 1");
        std::vector<Value> dom;
        for (Value v = 1; v <= q; ++v)
            dom.push_back(v);
        Instance I(std::vector<std::vector<Value>>(n, dom));
        for (int x = 0; x < n; ++x)
        {
            for (int y = x + 1; y < n; ++y)
            {
                std::vector<std::pair<Value, Value>> diagonal;
                for (Value v = 1; v <= q; ++v)
                    diagonal.emplace_back(v, v);
                I.set_forbidden(x, y, diagonal);
            }
        }
        return I;
    }

    Instance gen_i34()
    {
        std::vector<std::vector<Value>> domains;
        for (int i = 0; i < 4; ++i)
            domains.push_back({1, 2, 3});
        for (int j = 0; j < 3; ++j)
            domains.push_back({1, 2, 3, 4});
        Instance I(std::move(domains));
        // (x_i = j) => (y_j = i): forbid (j, b) for every b != i.
        for (int i = 1; i <= 4; ++i)
        {
            for (int j = 1; j <= 3; ++j)
            {
                std::vector<std::pair<Value, Value>> forbidden;
                for (Value b = 1; b <= 4; ++b)
                    if (b != i)
                        forbidden.emplace_back(j, b);
                I.set_forbidden(i - 1, 3 + j, forbidden);
            }
        }
        return I;
    }

    Instance gen_i5()
    {
        Instance I(std::vector<std::vector<Value>>(5, {1, 2, 3, 4}));
        // (x_i = j-1) <=> (x_j = i) for 1 <= i < j <= 5.
        for (int i = 1; i <= 5; ++i)
        {
            for (int j = i + 1; j <= 5; ++j)
            {
                std::vector<std::pair<Value, Value>> forbidden;
                for (Value b = 1; b <= 4; ++b)
                    if (b != i)
                        forbidden.emplace_back(j - 1, b);
                for (Value a = 1; a <= 4; ++a)
                    if (a != j - 1)
                        forbidden.emplace_back(a, i);
                I.set_forbidden(i - 1, j - 1, forbidden);
            }
        }
        return I;
    }

    Instance gen_pad_equality(const Instance& I, int x, int y, int k)
    {
        if (k < 1)
            throw ModelError("padding needs k >= 1");
        if (!I.has_relation_entry(x, y))
            throw ModelError("padding needs a stored relation entry");
        int n = I.num_vars();
        std::vector<std::vector<Value>> domains;
        for (int v = 0; v < n; ++v)
            domains.push_back(I.domain(v));
        for (int i = 0; i < k; ++i)
            domains.push_back(I.domain(x));
        Instance J(std::move(domains));
        for (const auto& [key, rel] : I.relation_entries())
        {
            if (key == std::make_pair(std::min(x, y), std::max(x, y)))
                continue;
            J.set_allowed(key.first, key.second,
                          std::vector<std::pair<Value, Value>>(rel.begin(), rel.end()));
        }
        std::vector<std::pair<Value, Value>> equality;
        for (Value v : I.domain(x))
            equality.emplace_back(v, v);
        J.set_allowed(x, n, equality);
        for (int i = 0; i + 1 < k; ++i)
            J.set_allowed(n + i, n + i + 1, equality);
        std::vector<std::pair<Value, Value>> last;
        for (Value a : I.domain(x))
            for (Value b : I.domain(y))
                if (I.allowed(x, a, y, b))
                    last.emplace_back(a, b);
        J.set_allowed(n + k - 1, y, last);
        return J;
    }

    Instance gen_implication_gadget(bool biconditional)
    {
        // Layout: x1..x4 (vars 0..3, domains {1,2,3}); then for each i in
        // 1..4 and colour a in 1..3 a chain of 21 Booleans; then for each
        // pair i<j and colour a three Booleans y1..y3.
        auto chain_var = [](int i, int a, int r)
        { return 4 + ((i - 1) * 3 + (a - 1)) * 21 + r; };
        int pair_base = 4 + 4 * 3 * 21;
        std::vector<std::vector<Value>> domains(4, std::vector<Value>{1, 2, 3});
        domains.resize(310, std::vector<Value>{0, 1});
        Instance I(std::move(domains));
        for (int i = 1; i <= 4; ++i)
        {
            for (int a = 1; a <= 3; ++a)
            {
                // (x_i = a) => chain head true; optionally also the converse.
                std::vector<std::pair<Value, Value>> forbidden{{a, 0}};
                if (biconditional)
                    for (Value b = 1; b <= 3; ++b)
                        if (b != a)
                            forbidden.emplace_back(b, 1);
                I.set_forbidden(i - 1, chain_var(i, a, 0), forbidden);
                for (int r = 0; r < 20; ++r)
                    I.set_forbidden(chain_var(i, a, r), chain_var(i, a, r + 1), {{1, 0}});
            }
        }
        int pair_index = 0;
        for (int i = 1; i <= 4; ++i)
        {
            for (int j = i + 1; j <= 4; ++j, ++pair_index)
            {
                for (int a = 1; a <= 3; ++a)
                {
                    int y1 = pair_base + (pair_index * 3 + (a - 1)) * 3;
                    I.set_forbidden(chain_var(i, a, 4 * j), y1, {{1, 0}});
                    I.set_forbidden(y1, y1 + 1, {{1, 0}});
                    I.set_forbidden(y1 + 1, y1 + 2, {{1, 0}});
                    // y3 => not x_{ja}^{4i}
                    I.set_forbidden(y1 + 2, chain_var(j, a, 4 * i), {{1, 1}});
                }
            }
        }
        return I;
    }

    namespace detail
    {
        std::uint64_t splitmix64(std::uint64_t& state)
        {
            state += 0x9E3779B97F4A7C15ULL;
            std::uint64_t z = state;
            z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
            z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
            return z ^ (z >> 31);
        }

        double next_fraction(std::uint64_t& state)
        {
            return static_cast<double>(splitmix64(state) >> 11) * 0x1.0p-53;
        }
    }

    Instance gen_random(const GenParams& params)
    {
        if (params.n_vars < 0 || params.domain_size < 1 ||
            params.constraint_density < 0.0 || params.constraint_density > 1.0 ||
            params.tightness < 0.0 || params.tightness > 1.0)
            throw ModelError("invalid generator parameters");
        std::vector<Value> dom;
        for (Value v = 1; v <= params.domain_size; ++v)
            dom.push_back(v);
        Instance I(std::vector<std::vector<Value>>(params.n_vars, dom));
        std::uint64_t state = params.seed;
        for (int x = 0; x < params.n_vars; ++x)
        {
            for (int y = x + 1; y < params.n_vars; ++y)
            {
                if (detail::next_fraction(state) >= params.constraint_density)
                    continue;
                std::vector<std::pair<Value, Value>> forbidden;
                for (Value a = 1; a <= params.domain_size; ++a)
                    for (Value b = 1; b <= params.domain_size; ++b)
                        if (detail::next_fraction(state) < params.tightness)
                            forbidden.emplace_back(a, b);
                I.set_forbidden(x, y, forbidden);
            }
        }
        return I;
    }

    std::optional<Instance> gen_pattern_free(const Pattern& P, const GenParams& params,
                                             int max_tries)
    {
        GenParams attempt = params;
        for (int t = 0; t < max_tries; ++t)
        {
            Instance I = gen_random(attempt);
            if (!occurs(P, I))
                return I;
            attempt.seed += 1;
        }
        return std::nullopt;
    }
}
