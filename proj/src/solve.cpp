#include "sacpat/solve.hpp"

#include <algorithm>
#include <functional>

#include "sacpat/catalog.hpp"
#include "sacpat/match.hpp"
#include "sacpat/propagate.hpp"
#include "sacpat/transform.hpp"

namespace sacpat
{
    namespace
    {
        void require_absent(const std::string& pattern_name, const Instance& I)
        {
            if (occurs(get_pattern(pattern_name).pattern, I))
                throw PreconditionError("pattern " + pattern_name +
                                        " occurs in the input instance");
        }

        std::vector<int> complement(int n, const std::set<int>& drop)
        {
            std::vector<int> keep;
            for (int x = 0; x < n; ++x)
                if (!drop.count(x))
                    keep.push_back(x);
            return keep;
        }

        std::vector<int> map_orig(const std::vector<int>& orig, const std::vector<int>& keep)
        {
            std::vector<int> result;
            for (int x : keep)
                result.push_back(orig[x]);
            return result;
        }

        bool is_forest(const Instance& I)
        {
            auto adj = I.constraint_graph();
            std::vector<int> parent(I.num_vars(), -2);
            for (int root = 0; root < I.num_vars(); ++root)
            {
                if (parent[root] != -2)
                    continue;
                parent[root] = -1;
                std::vector<int> stack{root};
                while (!stack.empty())
                {
                    int u = stack.back();
                    stack.pop_back();
                    for (int v : adj[u])
                    {
                        if (v == parent[u])
                            continue;
                        if (parent[v] != -2)
                            return false;
                        parent[v] = u;
                        stack.push_back(v);
                    }
                }
            }
            return true;
        }

        std::optional<Value> first_support(const Instance& I, int x, Value a, int y)
        {
            for (Value b : I.domain(y))
                if (I.allowed(x, a, y, b))
                    return b;
            return std::nullopt;
        }

        bool oracle_search(Instance& J, long long& nodes, Assignment& out)
        {
            ++nodes;
            int best = -1;
            size_t best_size = SIZE_MAX;
            for (int x = 0; x < J.num_vars(); ++x)
            {
                size_t size = J.domain(x).size();
                if (size >= 2 && size < best_size)
                {
                    best = x;
                    best_size = size;
                }
            }
            if (best < 0)
            {
                // Arc consistency over singleton domains means pairwise
                // compatibility, so the assignment is a solution.
                out.clear();
                for (int x = 0; x < J.num_vars(); ++x)
                    out[x] = J.domain(x).front();
                return true;
            }
            for (Value v : std::vector<Value>(J.domain(best)))
            {
                Instance K = J;
                K.assign(best, v);
                if (detail::ac_restore(K, best, nullptr, true) &&
                    oracle_search(K, nodes, out))
                    return true;
            }
            return false;
        }
    }

    SolveReport oracle_solve(const Instance& I)
    {
        SolveReport report;
        report.method = "oracle";
        auto [J, trace] = enforce_ac(I);
        if (J.has_empty_domain())
            return report;
        Assignment cert;
        if (oracle_search(J, report.stats.nodes, cert))
        {
            report.sat = true;
            report.certificate = std::move(cert);
        }
        return report;
    }

    SolveReport sac_construct(const Instance& I)
    {
        if (!is_sac(I))
            throw PreconditionError("construction needs a singleton-arc-consistent input");
        SolveReport report;
        report.method = "sac-construct";
        Instance J = I;
        Assignment cert;
        for (int x = 0; x < I.num_vars(); ++x)
        {
            bool found = false;
            for (Value v : std::vector<Value>(J.domain(x)))
            {
                Instance K = J;
                K.assign(x, v);
                K = enforce_sac(K);
                if (!K.has_empty_domain())
                {
                    J = std::move(K);
                    cert[x] = v;
                    found = true;
                    break;
                }
            }
            if (!found)
                return report; // not sat-constructible from here
        }
        report.sat = true;
        report.certificate = std::move(cert);
        return report;
    }

    SolveReport solve_acyclic(const Instance& I)
    {
        if (I.has_empty_domain())
            throw PreconditionError("acyclic solver needs non-empty domains");
        if (!is_forest(I))
            throw PreconditionError("acyclic solver needs a forest constraint graph");
        SolveReport report;
        report.method = "acyclic";
        auto adj = I.constraint_graph();
        Assignment cert;
        std::vector<bool> done(I.num_vars(), false);
        for (int root = 0; root < I.num_vars(); ++root)
        {
            if (done[root])
                continue;
            if (I.domain(root).empty())
                throw PreconditionError("acyclic solver needs non-empty domains");
            cert[root] = I.domain(root).front();
            done[root] = true;
            std::vector<int> queue{root};
            for (size_t head = 0; head < queue.size(); ++head)
            {
                int u = queue[head];
                for (int v : adj[u])
                {
                    if (done[v])
                        continue;
                    auto support = first_support(I, u, cert[u], v);
                    if (!support)
                        throw PreconditionError("acyclic solver needs an arc-consistent input");
                    cert[v] = *support;
                    done[v] = true;
                    queue.push_back(v);
                }
            }
        }
        report.sat = true;
        report.certificate = std::move(cert);
        return report;
    }

    SolveReport solve_by_sac(const Instance& I, const std::string& pattern_name)
    {
        require_absent(pattern_name, I);
        SolveReport report;
        report.method = "sac-" + pattern_name;
        Instance J = enforce_sac(I);
        if (J.has_empty_domain())
            return report;
        SolveReport inner = sac_construct(J);
        if (!inner.sat)
            throw StructureError("closure survived but construction failed for " +
                                 pattern_name + "-free instance");
        report.sat = true;
        report.certificate = std::move(inner.certificate);
        return report;
    }

    SolveReport solve_t3(const Instance& I)
    {
        require_absent("T3", I);
        SolveReport report;
        report.method = "t3";
        Instance J = enforce_sac(I);
        if (J.has_empty_domain())
            return report;
        // Removing substitutable values from the closure leaves an
        // instance in which the one-extra-point variant cannot occur.
        auto [K, log] = ns_eliminate(J);
        K = enforce_sac(K);
        if (K.has_empty_domain())
            throw StructureError("substitution removal lost satisfiability");
        if (occurs(get_pattern("T4").pattern, K))
            throw StructureError("substitution-free closure still contains T4");
        SolveReport inner = sac_construct(K);
        if (!inner.sat)
            throw StructureError("construction failed on T4-free closure");
        if (!verify_solution(I, *inner.certificate))
            throw StructureError("t3 certificate does not verify");
        report.sat = true;
        report.certificate = std::move(inner.certificate);
        return report;
    }

    SolveReport solve_q1(const Instance& I)
    {
        require_absent("Q1", I);
        SolveReport report;
        report.method = "q1";
        Instance J0 = enforce_sac(I);
        if (J0.has_empty_domain())
            return report;
        // Trace-extraction rounds: probing the first value of the first
        // variable either shows it compatible with everything (retire the
        // variable) or yields a propagation trace whose source variables
        // can be retired without changing satisfiability.
        Instance J = J0;
        std::vector<int> orig(J.num_vars());
        for (int x = 0; x < J.num_vars(); ++x)
            orig[x] = x;
        while (J.num_vars() > 0)
        {
            auto probe = singleton_probe(J, 0, J.domain(0).front());
            if (!probe.survived)
                throw StructureError("probe wiped out on a closed instance");
            auto [all, inner] = trace_sets(probe.trace, 0);
            std::set<int> drop = inner.empty() ? std::set<int>{0} : inner;
            report.stats.rounds.push_back({});
            for (int x : drop)
                report.stats.rounds.back().push_back(orig[x]);
            auto keep = complement(J.num_vars(), drop);
            orig = map_orig(orig, keep);
            J = enforce_sac(J.project(keep));
            if (J.has_empty_domain() && J.num_vars() > 0)
                throw StructureError("variable retirement lost satisfiability");
        }
        SolveReport inner = sac_construct(J0);
        if (!inner.sat || !verify_solution(I, *inner.certificate))
            throw StructureError("q1 certificate construction failed");
        report.sat = true;
        report.certificate = std::move(inner.certificate);
        return report;
    }

    SolveReport solve_r8(const Instance& I)
    {
        require_absent("R8", I);
        SolveReport report;
        report.method = "r8";
        Instance J0 = enforce_sac(I);
        if (J0.has_empty_domain())
            return report;
        Assignment cert;
        // Each round probes the first value of the first variable, removes
        // substitutable values from the probed instance, solves the
        // (acyclic) part around the trace variables directly and recurses
        // on the remainder; crossing constraints are trivial over the
        // reduced domains, so the two parts combine.
        std::function<void(const Instance&, const std::vector<int>&)> extract =
            [&](const Instance& J, const std::vector<int>& orig)
        {
            if (J.num_vars() == 0)
                return;
            auto probe = singleton_probe(J, 0, J.domain(0).front());
            if (!probe.survived)
                throw StructureError("probe wiped out on a closed instance");
            auto [trace_vars, inner_vars] = trace_sets(probe.trace, 0);
            auto [K, log] = ns_eliminate(*probe.reduced);
            std::set<int> part = trace_vars;
            for (int y : trace_vars)
                for (int z = 0; z < K.num_vars(); ++z)
                    if (z != y && !K.is_trivial(y, z))
                        part.insert(z);
            std::vector<int> part_list(part.begin(), part.end());
            SolveReport local;
            try
            {
                local = solve_acyclic(K.project(part_list));
            }
            catch (const PreconditionError& e)
            {
                throw StructureError(std::string("trace region not acyclic: ") + e.what());
            }
            report.stats.rounds.push_back({});
            for (size_t i = 0; i < part_list.size(); ++i)
            {
                cert[orig[part_list[i]]] = local.certificate->at(static_cast<int>(i));
                report.stats.rounds.back().push_back(orig[part_list[i]]);
            }
            auto keep = complement(K.num_vars(), part);
            Instance rest = enforce_sac(K.project(keep));
            if (rest.has_empty_domain() && rest.num_vars() > 0)
                throw StructureError("remainder lost satisfiability");
            extract(rest, map_orig(orig, keep));
        };
        std::vector<int> orig(J0.num_vars());
        for (int x = 0; x < J0.num_vars(); ++x)
            orig[x] = x;
        extract(J0, orig);
        if (!verify_solution(I, cert))
            throw StructureError("r8 certificate does not verify");
        report.sat = true;
        report.certificate = std::move(cert);
        return report;
    }

    SolveReport solve_r7m(const Instance& I)
    {
        require_absent("R7-", I);
        SolveReport report;
        report.method = "r7m";
        Instance J0 = enforce_sac(I);
        if (J0.has_empty_domain())
            return report;
        const Pattern& mhat = get_pattern("Mhat").pattern;
        const Pattern& v2 = get_pattern("V2").pattern;
        Assignment cert;
        // Rounds probe the meet value of a double-negative (or, failing
        // that, single-negative) meet point; all constraints touching the
        // trace variables are then trivial except possibly the one between
        // the two wing variables, so the trace region can be assigned
        // after the remainder is solved recursively.
        std::function<void(const Instance&, const std::vector<int>&)> extract =
            [&](const Instance& J, const std::vector<int>& orig)
        {
            if (J.num_vars() == 0)
                return;
            // Both patterns list the middle variable second and its meet
            // point last, so the witness indices coincide.
            auto witness = occurs(mhat, J);
            if (!witness)
                witness = occurs(v2, J);
            if (!witness)
            {
                SolveReport local = sac_construct(J);
                if (!local.sat)
                    throw StructureError("construction failed on meet-point-free closure");
                for (const auto& [x, v] : *local.certificate)
                    cert[orig[x]] = v;
                return;
            }
            int mid = witness->var_map[1];
            Value meet = witness->point_map[1][2];
            int wing1 = witness->var_map[0];
            int wing2 = witness->var_map[2];
            auto probe = singleton_probe(J, mid, meet);
            if (!probe.survived)
                throw StructureError("probe wiped out on a closed instance");
            const Instance& K = *probe.reduced;
            auto [trace_vars, inner_vars] = trace_sets(probe.trace, mid);
            // Structural guarantee: only the wing constraint may stay
            // non-trivial among constraints touching the trace variables.
            for (int y : trace_vars)
                for (int z = 0; z < K.num_vars(); ++z)
                    if (z != y && !K.is_trivial(y, z) &&
                        !(std::min(y, z) == std::min(wing1, wing2) &&
                          std::max(y, z) == std::max(wing1, wing2)))
                        throw StructureError("unexpected non-trivial constraint at a "
                                             "trace variable");
            report.stats.rounds.push_back({});
            for (int x : trace_vars)
                report.stats.rounds.back().push_back(orig[x]);
            auto keep = complement(K.num_vars(), trace_vars);
            Instance rest = enforce_sac(J.project(keep));
            if (rest.has_empty_domain() && rest.num_vars() > 0)
                throw StructureError("remainder lost satisfiability");
            extract(rest, map_orig(orig, keep));
            // Assign the trace region inside the probed instance, pinning
            // the already-solved remainder.
            Instance pinned = K;
            for (size_t i = 0; i < keep.size(); ++i)
            {
                Value v = cert.at(orig[keep[i]]);
                if (!pinned.in_domain(keep[i], v))
                    throw StructureError("remainder value left the probed domain");
                pinned.assign(keep[i], v);
            }
            auto [pinned_ac, t] = enforce_ac(pinned);
            if (pinned_ac.has_empty_domain())
                throw StructureError("trace region has no compatible assignment");
            std::set<int> assigned;
            if (trace_vars.count(wing1) && trace_vars.count(wing2))
            {
                // The one possibly non-trivial internal constraint: pick a
                // compatible pair first.
                Value a = pinned_ac.domain(wing1).front();
                auto support = first_support(pinned_ac, wing1, a, wing2);
                if (!support)
                    throw StructureError("wing constraint lost arc consistency");
                cert[orig[wing1]] = a;
                cert[orig[wing2]] = *support;
                assigned.insert(wing1);
                assigned.insert(wing2);
            }
            for (int x : trace_vars)
                if (!assigned.count(x))
                    cert[orig[x]] = pinned_ac.domain(x).front();
        };
        std::vector<int> orig(J0.num_vars());
        for (int x = 0; x < J0.num_vars(); ++x)
            orig[x] = x;
        extract(J0, orig);
        if (!verify_solution(I, cert))
            throw StructureError("r7m certificate does not verify");
        report.sat = true;
        report.certificate = std::move(cert);
        return report;
    }

    SolveReport vminus_construct(const Instance& I)
    {
        if (!is_sac(I))
            throw PreconditionError("construction needs a singleton-arc-consistent input");
        const Pattern& vminus = get_pattern("V-").pattern;
        for (int x = 0; x < I.num_vars(); ++x)
            if (I.degree(x) >= 3)
                for (Value v : I.domain(x))
                    if (occurs_at(vminus, PointRef{0, 0}, I, x, v))
                        throw PreconditionError(
                            "a two-conflict value sits at a variable of degree >= 3");
        SolveReport report;
        report.method = "vminus-construct";
        Instance J = I;
        std::vector<int> orig(J.num_vars());
        for (int x = 0; x < J.num_vars(); ++x)
            orig[x] = x;
        Assignment cert;
        while (J.num_vars() > 0)
        {
            int start = -1;
            for (int x = 0; x < J.num_vars() && start < 0; ++x)
                if (J.degree(x) >= 3)
                    start = x;
            if (start >= 0)
            {
                // Independent chain: follow conflicts of the latest value
                // into fresh variables, taking a support each time. The
                // chain is compatible with everything outside it.
                std::vector<std::pair<int, Value>> chain{{start, J.domain(start).front()}};
                std::set<int> in_chain{start};
                for (;;)
                {
                    auto [x, a] = chain.back();
                    int next = -1;
                    for (int y = 0; y < J.num_vars() && next < 0; ++y)
                    {
                        if (in_chain.count(y))
                            continue;
                        for (Value b : J.domain(y))
                        {
                            if (!J.allowed(x, a, y, b))
                            {
                                next = y;
                                break;
                            }
                        }
                    }
                    if (next < 0)
                        break;
                    auto support = first_support(J, x, a, next);
                    if (!support)
                        throw StructureError("chain extension lost arc consistency");
                    chain.emplace_back(next, *support);
                    in_chain.insert(next);
                }
                for (size_t i = 0; i < chain.size(); ++i)
                    for (size_t j = i + 1; j < chain.size(); ++j)
                        if (!J.allowed(chain[i].first, chain[i].second, chain[j].first,
                                       chain[j].second))
                            throw StructureError("chain values are not pairwise compatible");
                for (const auto& [x, a] : chain)
                    for (int y = 0; y < J.num_vars(); ++y)
                        if (!in_chain.count(y))
                            for (Value b : J.domain(y))
                                if (!J.allowed(x, a, y, b))
                                    throw StructureError("chain is not independent");
                for (const auto& [x, a] : chain)
                    cert[orig[x]] = a;
                auto keep = complement(J.num_vars(), in_chain);
                orig = map_orig(orig, keep);
                J = enforce_sac(J.project(keep));
                if (J.has_empty_domain() && J.num_vars() > 0)
                    throw StructureError("chain removal lost satisfiability");
                continue;
            }
            // Only degrees <= 2 remain: every component is a path or a
            // cycle, solvable left to right after one probe.
            auto adj = J.constraint_graph();
            std::vector<bool> seen(J.num_vars(), false);
            for (int root = 0; root < J.num_vars(); ++root)
            {
                if (seen[root])
                    continue;
                std::vector<int> comp{root};
                seen[root] = true;
                for (size_t head = 0; head < comp.size(); ++head)
                    for (int v : adj[comp[head]])
                        if (!seen[v])
                        {
                            seen[v] = true;
                            comp.push_back(v);
                        }
                std::sort(comp.begin(), comp.end());
                Instance sub = J.project(comp);
                int edges = 0;
                for (size_t i = 0; i < comp.size(); ++i)
                    edges += sub.degree(static_cast<int>(i));
                edges /= 2;
                Assignment local;
                if (edges < static_cast<int>(comp.size()))
                {
                    SolveReport tree = solve_acyclic(sub);
                    local = *tree.certificate;
                }
                else
                {
                    // A cycle: after probing one value, every remaining
                    // value of the component is compatible with it, so a
                    // walk along the cycle closes consistently.
                    auto probe = singleton_probe(sub, 0, sub.domain(0).front());
                    if (!probe.survived)
                        throw StructureError("cycle probe wiped out on a closed instance");
                    const Instance& R = *probe.reduced;
                    // Walk the cycle along the pre-probe topology; in the
                    // probed instance constraints may have become trivial.
                    auto sub_adj = sub.constraint_graph();
                    local[0] = R.domain(0).front();
                    int prev = 0;
                    int cur = *sub_adj[0].begin();
                    while (cur != 0)
                    {
                        auto support = first_support(R, prev, local[prev], cur);
                        if (!support)
                            throw StructureError("cycle walk lost arc consistency");
                        local[cur] = *support;
                        int succ = -1;
                        for (int v : sub_adj[cur])
                            if (v != prev)
                                succ = v;
                        prev = cur;
                        cur = succ;
                    }
                    if (!verify_solution(sub, local))
                        throw StructureError("cycle assignment does not verify");
                }
                for (size_t i = 0; i < comp.size(); ++i)
                    cert[orig[comp[i]]] = local.at(static_cast<int>(i));
            }
            break;
        }
        if (!verify_solution(I, cert))
            throw StructureError("independent-chain certificate does not verify");
        report.sat = true;
        report.certificate = std::move(cert);
        return report;
    }

    SolveReport solve_q2(const Instance& I)
    {
        require_absent("Q2", I);
        SolveReport report;
        report.method = "q2";
        Instance J = enforce_sac(I);
        if (J.has_empty_domain())
            return report;
        // Merging mergeable value pairs cannot introduce the pattern (no
        // point of it carries two positive edges) and leaves two-conflict
        // values only at variables of degree <= 2.
        auto [K, log] = btp_merge_fixpoint(J);
        SolveReport inner = vminus_construct(K);
        Assignment cert = expand_merges(J, log, *inner.certificate);
        if (!verify_solution(I, cert))
            throw StructureError("q2 certificate does not verify");
        report.sat = true;
        report.certificate = std::move(cert);
        return report;
    }

    namespace
    {
        // One repair step of the constraint-deletion route: I is singleton
        // arc consistent, avoids the deletable pattern, and s solves I
        // without the constraint on (x,y).
        Assignment repair_r5(const Instance& I, Assignment s, int x, int y)
        {
            Value a = s.at(x);
            Value b = s.at(y);
            if (I.allowed(x, a, y, b))
                return s;
            std::optional<Value> c = first_support(I, y, b, x);
            if (!c)
                throw StructureError("deleted-constraint repair found no support");
            int w = -1;
            for (int z = 0; z < I.num_vars() && w < 0; ++z)
                if (z != x && z != y && !I.allowed(x, *c, z, s.at(z)))
                    w = z;
            if (w < 0)
            {
                s[x] = *c;
                return s;
            }
            auto probe = singleton_probe(I, x, a);
            if (!probe.survived)
                throw StructureError("probe wiped out on a closed instance");
            const Instance& R = *probe.reduced;
            if (R.domain(y).empty())
                throw StructureError("repair probe emptied a domain");
            Value d = R.domain(y).front();
            std::optional<Value> g = first_support(R, y, d, w);
            if (!g)
                throw StructureError("repair found no support for the conflict variable");
            s[y] = d;
            if (!I.allowed(y, d, w, s.at(w)))
                s[w] = *g;
            return s;
        }
    }

    SolveReport solve_r5(const Instance& I, bool repair)
    {
        require_absent("R5", I);
        SolveReport report;
        report.method = repair ? "r5-repair" : "r5";
        Instance J = enforce_sac(I);
        if (J.has_empty_domain())
            return report;
        if (!repair)
        {
            SolveReport inner = sac_construct(J);
            if (!inner.sat)
                throw StructureError("construction failed on closed instance");
            report.sat = true;
            report.certificate = std::move(inner.certificate);
            return report;
        }
        // Deleting constraints preserves satisfiability on this class, so
        // strip them all, read off a trivial solution, and repair the
        // deletions in reverse order.
        std::vector<std::pair<Instance, std::pair<int, int>>> deletions;
        Instance K = J;
        for (;;)
        {
            int dx = -1;
            int dy = -1;
            for (int p = 0; p < K.num_vars() && dx < 0; ++p)
                for (int q = p + 1; q < K.num_vars(); ++q)
                    if (!K.is_trivial(p, q))
                    {
                        dx = p;
                        dy = q;
                        break;
                    }
            if (dx < 0)
                break;
            deletions.emplace_back(K, std::make_pair(dx, dy));
            K.delete_relation(dx, dy);
        }
        Assignment s;
        for (int p = 0; p < K.num_vars(); ++p)
            s[p] = K.domain(p).front();
        for (size_t i = deletions.size(); i-- > 0;)
        {
            const auto& [stage, pair] = deletions[i];
            s = repair_r5(stage, std::move(s), pair.first, pair.second);
            if (!verify_solution(stage, s))
                throw StructureError("repair step produced a non-solution");
        }
        if (!verify_solution(I, s))
            throw StructureError("repaired certificate does not verify");
        report.sat = true;
        report.certificate = std::move(s);
        return report;
    }

    SolveReport auto_solve(const Instance& I)
    {
        struct Choice
        {
            const char* pattern;
            std::function<SolveReport(const Instance&)> run;
        };
        const std::vector<Choice> choices{
            {"Q1", [](const Instance& J) { return solve_q1(J); }},
            {"R8", [](const Instance& J) { return solve_r8(J); }},
            {"R7-", [](const Instance& J) { return solve_r7m(J); }},
            {"Q2", [](const Instance& J) { return solve_q2(J); }},
            {"R5", [](const Instance& J) { return solve_r5(J); }},
            {"T3", [](const Instance& J) { return solve_t3(J); }},
            {"T2", [](const Instance& J) { return solve_by_sac(J, "T2"); }},
            {"T4", [](const Instance& J) { return solve_by_sac(J, "T4"); }},
            {"T5", [](const Instance& J) { return solve_by_sac(J, "T5"); }},
        };
        for (const auto& choice : choices)
            if (!occurs(get_pattern(choice.pattern).pattern, I))
                return choice.run(I);
        return oracle_solve(I);
    }

    ClassifyReport classify(const Instance& I)
    {
        ClassifyReport report;
        for (const auto& entry : catalog())
            report.occurrence.emplace_back(entry.name,
                                           occurs(entry.pattern, I).has_value());
        auto absent = [&](const std::string& name)
        {
            for (const auto& [pattern, present] : report.occurrence)
                if (pattern == name)
                    return !present;
            return false;
        };
        const std::vector<std::pair<std::string, std::string>> solvers{
            {"q1", "Q1"},     {"r8", "R8"},         {"r7m", "R7-"},
            {"q2", "Q2"},     {"r5", "R5"},         {"t3", "T3"},
            {"sac-t2", "T2"}, {"sac-t4", "T4"},     {"sac-t5", "T5"},
        };
        for (const auto& [solver, pattern] : solvers)
            if (absent(pattern))
                report.applicable.push_back(solver);
        report.applicable.push_back("oracle");
        return report;
    }
}
