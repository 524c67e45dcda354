#pragma once

#include <utility>
#include <vector>

#include "sacpat/model.hpp"

namespace sacpat
{
    // A satisfiability-preserving rewrite applied to an instance.
    struct TransformRecord
    {
        enum class Kind
        {
            ns_removed,         // value a removed at var, substitutable by b
            merged,             // values a,b at var replaced by fresh value c
            constraint_deleted  // relation entry (var, var2) dropped
        };

        Kind kind = Kind::ns_removed;
        int var = 0;
        int var2 = 0;
        Value a = 0;
        Value b = 0;
        Value c = 0;

        bool operator==(const TransformRecord&) const = default;
    };

    struct TransformLog
    {
        std::vector<TransformRecord> records;
    };

    // True iff value b supports everything a supports at x (so a can be
    // removed: b substitutes for a in any solution).
    bool is_ns(const Instance& I, int x, Value a, Value b);

    // True iff merging a and b at x leaves no broken triangle: no values
    // c,d at two other variables with one of a,b compatible with c, the
    // other with d, c compatible with d, and the two crossing pairs
    // forbidden.
    bool btp_mergeable(const Instance& I, int x, Value a, Value b);

    // Removes neighbourhood-substitutable values to a fixpoint, scanning
    // (x,a,b) lexicographically and keeping the smaller value of a mutually
    // substitutable pair. Arc consistency is preserved.
    std::pair<Instance, TransformLog> ns_eliminate(const Instance& I);

    // Replaces a,b at x by the fresh value max(D(x))+1, compatible with
    // exactly what a or b was compatible with.
    std::pair<Instance, TransformRecord> btp_merge(const Instance& I, int x, Value a, Value b);

    // Merges the first mergeable pair (x ascending, then value pairs in
    // lexicographic order) until none remains.
    std::pair<Instance, TransformLog> btp_merge_fixpoint(const Instance& I);

    std::pair<Instance, TransformRecord> delete_constraint(const Instance& I, int x, int y);

    // Replays a log from its starting instance (for tests).
    Instance replay(const Instance& start, const TransformLog& log);

    // Translates a solution of the transformed instance back through the
    // merge records: a merged value is replaced by whichever original value
    // satisfies all constraints at the corresponding intermediate stage.
    Assignment expand_merges(const Instance& start, const TransformLog& log, Assignment s);
}
