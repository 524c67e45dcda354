#pragma once

#include <optional>
#include <vector>

#include "sacpat/model.hpp"
#include "sacpat/pattern.hpp"

namespace sacpat
{
    // Witness of a pattern occurrence: var_map sends pattern variables to
    // target variables (injectively), point_map sends each point to a value
    // of the image variable (instance targets) or to a point index of the
    // image variable (pattern targets).
    struct OccurrenceWitness
    {
        std::vector<int> var_map;
        std::vector<std::vector<int>> point_map;
    };

    // First occurrence of P in I in canonical search order, if any. With
    // strict_points, distinct points of one pattern variable must map to
    // distinct values.
    std::optional<OccurrenceWitness> occurs(const Pattern& P, const Instance& I,
                                            bool strict_points = false);

    // Occurrence that maps the given anchor point of P to value v of
    // variable x of I.
    std::optional<OccurrenceWitness> occurs_at(const Pattern& P, PointRef anchor,
                                               const Instance& I, int x, Value v,
                                               bool strict_points = false);

    // Occurrence of P in the pattern Q (edge labels must match exactly;
    // unspecified target pairs do not support any edge).
    std::optional<OccurrenceWitness> occurs_in_pattern(const Pattern& P, const Pattern& Q,
                                                       bool strict_points = false);

    bool witness_is_valid(const Pattern& P, const Instance& I, const OccurrenceWitness& w,
                          bool strict_points = false);

    // Same-variable point pairs (p < q) whose merge is label-consistent: no
    // third point sees one positively and the other negatively.
    std::vector<std::pair<PointRef, PointRef>> mergeable_pairs(const Pattern& P);

    // Points with at most one positive and no negative incident edge.
    std::vector<PointRef> dangling_points(const Pattern& P);

    // Merges two points of one variable; the point with the smaller index
    // survives, keeping its name and the union of both edge sets.
    Pattern merge_points(const Pattern& P, PointRef p, PointRef q);

    // Deletes one point (dropping its edges); point-less variables remain.
    Pattern delete_point(const Pattern& P, PointRef p);

    // Fixpoint of deleting the first dangling point, else merging the first
    // mergeable pair; point-less variables are dropped at the end.
    Pattern reduce(const Pattern& P);

    bool is_irreducible(const Pattern& P);

    // True iff every variable pair carrying a positive edge also carries a
    // negative edge.
    bool is_monotone(const Pattern& P);
}
