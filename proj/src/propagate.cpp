#include "sacpat/propagate.hpp"

#include <algorithm>
#include <deque>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace sacpat
{
    std::string format_trace(const Trace& trace)
    {
        std::ostringstream out;
        for (const auto& step : trace.steps)
        {
            out << step.source << " -> " << step.target << " : {";
            for (size_t i = 0; i < step.removed.size(); ++i)
            {
                if (i)
                    out << ',';
                out << step.removed[i];
            }
            out << "}\n";
        }
        return out.str();
    }

    std::vector<Value> revise(Instance& I, int x, int y)
    {
        std::vector<Value> removed;
        for (Value b : std::vector<Value>(I.domain(y)))
        {
            bool supported = false;
            for (Value a : I.domain(x))
            {
                if (I.allowed(x, a, y, b))
                {
                    supported = true;
                    break;
                }
            }
            if (!supported)
            {
                I.remove_value(y, b);
                removed.push_back(b);
            }
        }
        return removed;
    }

    namespace
    {
        bool ac_fixpoint(Instance& I, std::deque<std::pair<int, int>> queue, Trace* trace,
                         bool abort_on_wipeout)
        {
            while (!queue.empty())
            {
                auto [x, y] = queue.front();
                queue.pop_front();
                auto removed = revise(I, x, y);
                if (removed.empty())
                    continue;
                if (trace)
                    trace->steps.push_back(TraceStep{x, y, std::move(removed)});
                if (abort_on_wipeout && I.domain(y).empty())
                    return false;
                for (int z = 0; z < I.num_vars(); ++z)
                    if (z != y && z != x)
                        queue.emplace_back(y, z);
            }
            return true;
        }

        std::deque<std::pair<int, int>> full_queue(const Instance& I)
        {
            std::deque<std::pair<int, int>> queue;
            for (int x = 0; x < I.num_vars(); ++x)
                for (int y = 0; y < I.num_vars(); ++y)
                    if (x != y)
                        queue.emplace_back(x, y);
            return queue;
        }
    }

    namespace detail
    {
        bool ac_restore(Instance& I, int changed, Trace* trace, bool abort_on_wipeout)
        {
            std::deque<std::pair<int, int>> queue;
            for (int z = 0; z < I.num_vars(); ++z)
                if (z != changed)
                    queue.emplace_back(changed, z);
            return ac_fixpoint(I, std::move(queue), trace, abort_on_wipeout);
        }
    }

    std::pair<Instance, Trace> enforce_ac(const Instance& I)
    {
        Instance J = I;
        Trace trace;
        ac_fixpoint(J, full_queue(J), &trace, false);
        return {std::move(J), std::move(trace)};
    }

    ProbeResult singleton_probe(const Instance& I, int x, Value v)
    {
        if (!I.in_domain(x, v))
            throw ModelError("probe value not in the domain");
        ProbeResult result;
        Instance J = I;
        J.assign(x, v);
        if (detail::ac_restore(J, x, &result.trace, true))
        {
            result.survived = true;
            result.reduced = std::move(J);
        }
        return result;
    }

    namespace
    {
        // Canonical inconsistent closure: every domain empty, no relations.
        Instance wiped_out(const Instance& I)
        {
            Instance J = I;
            for (int x = 0; x < J.num_vars(); ++x)
                for (Value v : std::vector<Value>(J.domain(x)))
                    J.remove_value(x, v);
            return J;
        }
    }

    Instance enforce_sac(const Instance& I)
    {
        auto [J, trace] = enforce_ac(I);
        if (J.has_empty_domain())
            return wiped_out(I);
        bool changed = true;
        while (changed)
        {
            changed = false;
            for (int x = 0; x < J.num_vars() && !changed; ++x)
            {
                for (Value v : std::vector<Value>(J.domain(x)))
                {
                    if (singleton_probe(J, x, v).survived)
                        continue;
                    J.remove_value(x, v);
                    if (!detail::ac_restore(J, x, nullptr, true))
                        return wiped_out(I);
                    changed = true;
                    break;
                }
            }
        }
        return J;
    }

    Instance enforce_sac_parallel(const Instance& I, int jobs)
    {
        auto [J, trace] = enforce_ac(I);
        if (J.has_empty_domain())
            return wiped_out(I);
        for (;;)
        {
            std::vector<std::pair<int, Value>> values;
            for (int x = 0; x < J.num_vars(); ++x)
                for (Value v : J.domain(x))
                    values.emplace_back(x, v);
            std::vector<char> wiped(values.size(), 0);
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) num_threads(jobs > 0 ? jobs : omp_get_max_threads())
#endif
            for (long long i = 0; i < static_cast<long long>(values.size()); ++i)
            {
                auto [x, v] = values[i];
                if (!singleton_probe(J, x, v).survived)
                    wiped[i] = 1;
            }
            if (std::find(wiped.begin(), wiped.end(), 1) == wiped.end())
                return J;
            for (size_t i = 0; i < values.size(); ++i)
                if (wiped[i])
                    J.remove_value(values[i].first, values[i].second);
            auto [K, t] = enforce_ac(J);
            J = std::move(K);
            if (J.has_empty_domain())
                return wiped_out(I);
        }
    }

    bool is_sac(const Instance& I)
    {
        if (I.has_empty_domain())
            return false;
        for (int x = 0; x < I.num_vars(); ++x)
            for (Value v : I.domain(x))
                if (!singleton_probe(I, x, v).survived)
                    return false;
        return true;
    }

    std::pair<std::set<int>, std::set<int>> trace_sets(const Trace& trace, int x)
    {
        std::set<int> all{x};
        std::set<int> inner;
        for (const auto& step : trace.steps)
        {
            all.insert(step.target);
            inner.insert(step.source);
        }
        return {std::move(all), std::move(inner)};
    }
}
