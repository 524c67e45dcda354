#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "sacpat/model.hpp"

namespace sacpat
{
    enum class Sign
    {
        positive,
        negative
    };

    // A point of a pattern, identified by its variable and the point's
    // position within that variable's point list.
    struct PointRef
    {
        int var = 0;
        int point = 0;

        auto operator<=>(const PointRef&) const = default;
    };

    // A pattern is a partial binary CSP: variables carrying named points,
    // and point pairs across distinct variables labelled positive (allowed)
    // or negative (forbidden). Unlabelled pairs are unspecified.
    class Pattern
    {
    public:
        Pattern() = default;
        explicit Pattern(std::vector<std::vector<std::string>> points);

        int num_vars() const { return static_cast<int>(points_.size()); }
        int num_points(int x) const;
        int total_points() const;
        const std::string& point_name(int x, int p) const;

        // Looks a point up by name; names are expected to be unique across
        // the whole pattern (returns the first match otherwise).
        std::optional<PointRef> find_point(const std::string& name) const;

        std::optional<Sign> sign(PointRef p, PointRef q) const;

        // Labels the pair {p,q}. Same-variable pairs and conflicting
        // relabelling are errors; repeating the same label is idempotent.
        void set_edge(PointRef p, PointRef q, Sign s);

        struct Edge
        {
            PointRef p; // p.var < q.var
            PointRef q;
            Sign sign;
        };

        // All edges, sorted by (p.var, q.var, p.point, q.point).
        std::vector<Edge> edges() const;

        int positive_edge_count() const;
        int negative_edge_count() const;

        // Structural equality including point names.
        bool operator==(const Pattern& other) const;

    private:
        std::vector<std::vector<std::string>> points_;
        // Keys are ((x,p),(y,q)) with x < y.
        std::map<std::pair<std::pair<int, int>, std::pair<int, int>>, Sign> edges_;
    };

    Pattern parse_pattern(const std::string& text);
    std::string serialize_pattern(const Pattern& P);
}
