#pragma once

#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sacpat/model.hpp"

namespace sacpat
{
    // One propagation step: enforcing support at `source` removed the
    // listed values (ascending) from the domain of `target`.
    struct TraceStep
    {
        int source = 0;
        int target = 0;
        std::vector<Value> removed;

        bool operator==(const TraceStep&) const = default;
    };

    struct Trace
    {
        std::vector<TraceStep> steps;

        bool operator==(const Trace&) const = default;
    };

    // Lines of the form "<source> -> <target> : {v1,v2,...}".
    std::string format_trace(const Trace& trace);

    // Removes values of y without a support in D(x); returns them ascending.
    std::vector<Value> revise(Instance& I, int x, int y);

    // Arc consistency closure with the canonical schedule: the initial
    // queue holds all directed pairs in lexicographic order and is served
    // FIFO; a change at y re-enqueues (y,z) for all z other than the source
    // in index order. The trace records the non-empty revisions in order.
    std::pair<Instance, Trace> enforce_ac(const Instance& I);

    struct ProbeResult
    {
        bool survived = false;
        std::optional<Instance> reduced; // present iff survived
        Trace trace;                     // partial on wipeout
    };

    // Restricts D(x) to {v} and restores arc consistency, aborting at the
    // first empty domain. Expects an arc-consistent input and v in D(x).
    ProbeResult singleton_probe(const Instance& I, int x, Value v);

    // Singleton arc consistency closure: canonical scan over (x,v) in
    // lexicographic order, removing each value whose probe wipes out,
    // restoring arc consistency and restarting the scan after any removal.
    // The result is SAC; an inconsistent input yields all domains empty.
    Instance enforce_sac(const Instance& I);

    // Same closure computed in rounds, probing all values of one round
    // concurrently; `jobs` <= 0 uses the OpenMP default.
    Instance enforce_sac_parallel(const Instance& I, int jobs = 0);

    // True iff no domain is empty and every singleton probe survives.
    bool is_sac(const Instance& I);

    // From a probe trace rooted at x: the variable set S (x plus all
    // targets) and the inner set (all sources).
    std::pair<std::set<int>, std::set<int>> trace_sets(const Trace& trace, int x);

    namespace detail
    {
        // Restores arc consistency assuming only `changed` lost values;
        // returns false on wipeout if abort_on_wipeout is set.
        bool ac_restore(Instance& I, int changed, Trace* trace, bool abort_on_wipeout);
    }
}
