#include "sacpat/match.hpp"

#include <algorithm>

namespace sacpat
{
    namespace
    {
        // Shared backtracking search over pattern variables. The target
        // adapter supplies candidate images for points of a target variable
        // and checks one labelled pattern edge against the target.
        template <typename Target>
        class Searcher
        {
        public:
            Searcher(const Pattern& P, const Target& target, bool strict_points)
                : P_(P), target_(target), strict_(strict_points),
                  var_map_(P.num_vars(), -1), point_map_(P.num_vars())
            {
                for (int x = 0; x < P_.num_vars(); ++x)
                    point_map_[x].assign(P_.num_points(x), -1);
                // Pattern variables in descending point count, ties by index.
                for (int x = 0; x < P_.num_vars(); ++x)
                    order_.push_back(x);
                std::stable_sort(order_.begin(), order_.end(),
                                 [this](int a, int b)
                                 { return P_.num_points(a) > P_.num_points(b); });
            }

            // Pins the anchor point before searching and moves its variable
            // to the front of the search order.
            void pin(PointRef anchor, int target_var, int target_image)
            {
                pinned_ = anchor;
                pinned_var_image_ = target_var;
                pinned_point_image_ = target_image;
                auto it = std::find(order_.begin(), order_.end(), anchor.var);
                order_.erase(it);
                order_.insert(order_.begin(), anchor.var);
            }

            std::optional<OccurrenceWitness> run()
            {
                if (search_var(0))
                    return OccurrenceWitness{var_map_, point_map_};
                return std::nullopt;
            }

        private:
            bool search_var(size_t pos)
            {
                if (pos == order_.size())
                    return true;
                int x = order_[pos];
                if (pinned_ && pinned_->var == x)
                {
                    if (used_.count(pinned_var_image_))
                        return false;
                    var_map_[x] = pinned_var_image_;
                    used_.insert(pinned_var_image_);
                    if (search_point(pos, x, 0))
                        return true;
                    used_.erase(pinned_var_image_);
                    var_map_[x] = -1;
                    return false;
                }
                for (int tv = 0; tv < target_.num_vars(); ++tv)
                {
                    if (used_.count(tv))
                        continue;
                    var_map_[x] = tv;
                    used_.insert(tv);
                    if (search_point(pos, x, 0))
                        return true;
                    used_.erase(tv);
                    var_map_[x] = -1;
                }
                return false;
            }

            bool search_point(size_t pos, int x, int p)
            {
                if (p == P_.num_points(x))
                    return search_var(pos + 1);
                if (pinned_ && pinned_->var == x && pinned_->point == p)
                {
                    if (!target_.has_image(var_map_[x], pinned_point_image_))
                        return false;
                    return try_image(pos, x, p, pinned_point_image_);
                }
                for (int image : target_.images(var_map_[x]))
                    if (try_image(pos, x, p, image))
                        return true;
                return false;
            }

            bool try_image(size_t pos, int x, int p, int image)
            {
                if (strict_)
                    for (int q = 0; q < p; ++q)
                        if (point_map_[x][q] == image)
                            return false;
                // Only edges into already-placed variables can be checked;
                // remaining ones are checked when their variable is placed.
                for (size_t prev = 0; prev <= pos; ++prev)
                {
                    int y = order_[prev];
                    if (y == x)
                        continue;
                    for (int q = 0; q < P_.num_points(y); ++q)
                    {
                        if (point_map_[y][q] < 0)
                            continue;
                        auto s = P_.sign(PointRef{x, p}, PointRef{y, q});
                        if (!s)
                            continue;
                        if (!target_.edge_ok(var_map_[x], image, var_map_[y],
                                             point_map_[y][q], *s))
                            return false;
                    }
                }
                point_map_[x][p] = image;
                if (search_point(pos, x, p + 1))
                    return true;
                point_map_[x][p] = -1;
                return false;
            }

            const Pattern& P_;
            const Target& target_;
            bool strict_;
            std::vector<int> order_;
            std::vector<int> var_map_;
            std::vector<std::vector<int>> point_map_;
            std::set<int> used_;
            std::optional<PointRef> pinned_;
            int pinned_var_image_ = -1;
            int pinned_point_image_ = -1;
        };

        struct InstanceTarget
        {
            const Instance& I;

            int num_vars() const { return I.num_vars(); }

            const std::vector<Value>& images(int tv) const { return I.domain(tv); }

            bool has_image(int tv, Value v) const { return I.in_domain(tv, v); }

            bool edge_ok(int tx, Value a, int ty, Value b, Sign s) const
            {
                return I.allowed(tx, a, ty, b) == (s == Sign::positive);
            }
        };

        struct PatternTarget
        {
            const Pattern& Q;
            std::vector<std::vector<int>> indices;

            explicit PatternTarget(const Pattern& q) : Q(q), indices(q.num_vars())
            {
                for (int x = 0; x < q.num_vars(); ++x)
                    for (int p = 0; p < q.num_points(x); ++p)
                        indices[x].push_back(p);
            }

            int num_vars() const { return Q.num_vars(); }

            const std::vector<int>& images(int tv) const { return indices[tv]; }

            bool has_image(int tv, int p) const { return p >= 0 && p < Q.num_points(tv); }

            bool edge_ok(int tx, int p, int ty, int q, Sign s) const
            {
                auto ts = Q.sign(PointRef{tx, p}, PointRef{ty, q});
                return ts && *ts == s;
            }
        };
    }

    std::optional<OccurrenceWitness> occurs(const Pattern& P, const Instance& I,
                                            bool strict_points)
    {
        InstanceTarget target{I};
        Searcher<InstanceTarget> search(P, target, strict_points);
        return search.run();
    }

    std::optional<OccurrenceWitness> occurs_at(const Pattern& P, PointRef anchor,
                                               const Instance& I, int x, Value v,
                                               bool strict_points)
    {
        if (anchor.var < 0 || anchor.var >= P.num_vars() || anchor.point < 0 ||
            anchor.point >= P.num_points(anchor.var))
            throw ModelError("anchor point out of range");
        InstanceTarget target{I};
        Searcher<InstanceTarget> search(P, target, strict_points);
        search.pin(anchor, x, v);
        return search.run();
    }

    std::optional<OccurrenceWitness> occurs_in_pattern(const Pattern& P, const Pattern& Q,
                                                       bool strict_points)
    {
        PatternTarget target(Q);
        Searcher<PatternTarget> search(P, target, strict_points);
        return search.run();
    }

    bool witness_is_valid(const Pattern& P, const Instance& I, const OccurrenceWitness& w,
                          bool strict_points)
    {
        if (static_cast<int>(w.var_map.size()) != P.num_vars() ||
            static_cast<int>(w.point_map.size()) != P.num_vars())
            return false;
        std::set<int> used;
        for (int x = 0; x < P.num_vars(); ++x)
        {
            int tv = w.var_map[x];
            if (tv < 0 || tv >= I.num_vars() || !used.insert(tv).second)
                return false;
            if (static_cast<int>(w.point_map[x].size()) != P.num_points(x))
                return false;
            for (int p = 0; p < P.num_points(x); ++p)
            {
                if (!I.in_domain(tv, w.point_map[x][p]))
                    return false;
                if (strict_points)
                    for (int q = 0; q < p; ++q)
                        if (w.point_map[x][q] == w.point_map[x][p])
                            return false;
            }
        }
        for (const auto& e : P.edges())
        {
            bool allowed = I.allowed(w.var_map[e.p.var], w.point_map[e.p.var][e.p.point],
                                     w.var_map[e.q.var], w.point_map[e.q.var][e.q.point]);
            if (allowed != (e.sign == Sign::positive))
                return false;
        }
        return true;
    }

    std::vector<std::pair<PointRef, PointRef>> mergeable_pairs(const Pattern& P)
    {
        std::vector<std::pair<PointRef, PointRef>> result;
        for (int x = 0; x < P.num_vars(); ++x)
        {
            for (int p = 0; p < P.num_points(x); ++p)
            {
                for (int q = p + 1; q < P.num_points(x); ++q)
                {
                    bool conflict = false;
                    for (int y = 0; y < P.num_vars() && !conflict; ++y)
                    {
                        if (y == x)
                            continue;
                        for (int r = 0; r < P.num_points(y); ++r)
                        {
                            auto sp = P.sign(PointRef{x, p}, PointRef{y, r});
                            auto sq = P.sign(PointRef{x, q}, PointRef{y, r});
                            if (sp && sq && *sp != *sq)
                            {
                                conflict = true;
                                break;
                            }
                        }
                    }
                    if (!conflict)
                        result.emplace_back(PointRef{x, p}, PointRef{x, q});
                }
            }
        }
        return result;
    }

    std::vector<PointRef> dangling_points(const Pattern& P)
    {
        std::vector<PointRef> result;
        for (int x = 0; x < P.num_vars(); ++x)
        {
            for (int p = 0; p < P.num_points(x); ++p)
            {
                int positives = 0;
                int negatives = 0;
                for (const auto& e : P.edges())
                {
                    if ((e.p == PointRef{x, p}) || (e.q == PointRef{x, p}))
                        (e.sign == Sign::positive ? positives : negatives) += 1;
                }
                if (negatives == 0 && positives <= 1)
                    result.push_back(PointRef{x, p});
            }
        }
        return result;
    }

    namespace
    {
        // Rebuilds a pattern after remapping points; a negative image drops
        // the point, and edges whose endpoints collide after remapping are
        // unioned (conflicts throw via set_edge).
        Pattern rebuild(const Pattern& P, const std::vector<std::vector<int>>& image)
        {
            std::vector<std::vector<std::string>> points(P.num_vars());
            for (int x = 0; x < P.num_vars(); ++x)
            {
                for (int p = 0; p < P.num_points(x); ++p)
                {
                    if (image[x][p] == static_cast<int>(points[x].size()))
                        points[x].push_back(P.point_name(x, p));
                }
            }
            Pattern result(std::move(points));
            for (const auto& e : P.edges())
            {
                int np = image[e.p.var][e.p.point];
                int nq = image[e.q.var][e.q.point];
                if (np < 0 || nq < 0)
                    continue;
                result.set_edge(PointRef{e.p.var, np}, PointRef{e.q.var, nq}, e.sign);
            }
            return result;
        }

        std::vector<std::vector<int>> identity_image(const Pattern& P)
        {
            std::vector<std::vector<int>> image(P.num_vars());
            for (int x = 0; x < P.num_vars(); ++x)
                for (int p = 0; p < P.num_points(x); ++p)
                    image[x].push_back(p);
            return image;
        }
    }

    Pattern merge_points(const Pattern& P, PointRef p, PointRef q)
    {
        if (p.var != q.var || p == q)
            throw ModelError("merge needs two distinct points of one variable");
        if (q.point < p.point)
            std::swap(p, q); // the smaller point identifier survives
        auto image = identity_image(P);
        int next = 0;
        for (int r = 0; r < P.num_points(p.var); ++r)
            image[p.var][r] = (r == q.point) ? -2 : next++;
        image[q.var][q.point] = image[p.var][p.point];
        return rebuild(P, image);
    }

    Pattern delete_point(const Pattern& P, PointRef p)
    {
        auto image = identity_image(P);
        int next = 0;
        for (int r = 0; r < P.num_points(p.var); ++r)
            image[p.var][r] = (r == p.point) ? -1 : next++;
        return rebuild(P, image);
    }

    Pattern reduce(const Pattern& P)
    {
        Pattern current = P;
        for (;;)
        {
            auto dangling = dangling_points(current);
            if (!dangling.empty())
            {
                current = delete_point(current, dangling.front());
                continue;
            }
            auto mergeable = mergeable_pairs(current);
            if (!mergeable.empty())
            {
                current = merge_points(current, mergeable.front().first,
                                       mergeable.front().second);
                continue;
            }
            break;
        }
        std::vector<std::vector<std::string>> points;
        std::vector<int> var_image(current.num_vars(), -1);
        for (int x = 0; x < current.num_vars(); ++x)
        {
            if (current.num_points(x) == 0)
                continue;
            var_image[x] = static_cast<int>(points.size());
            std::vector<std::string> names;
            for (int p = 0; p < current.num_points(x); ++p)
                names.push_back(current.point_name(x, p));
            points.push_back(std::move(names));
        }
        Pattern result(std::move(points));
        for (const auto& e : current.edges())
            result.set_edge(PointRef{var_image[e.p.var], e.p.point},
                            PointRef{var_image[e.q.var], e.q.point}, e.sign);
        return result;
    }

    bool is_irreducible(const Pattern& P)
    {
        return dangling_points(P).empty() && mergeable_pairs(P).empty();
    }

    bool is_monotone(const Pattern& P)
    {
        std::set<std::pair<int, int>> has_positive;
        std::set<std::pair<int, int>> has_negative;
        for (const auto& e : P.edges())
        {
            std::pair<int, int> key{e.p.var, e.q.var};
            (e.sign == Sign::positive ? has_positive : has_negative).insert(key);
        }
        return std::all_of(has_positive.begin(), has_positive.end(),
                           [&](const auto& key) { return has_negative.count(key) != 0; });
    }
}
