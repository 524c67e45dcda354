#include "sacpat/pattern.hpp"

#include <algorithm>
#include <sstream>

namespace sacpat
{
    namespace
    {
        using EdgeKey = std::pair<std::pair<int, int>, std::pair<int, int>>;

        EdgeKey make_key(PointRef p, PointRef q)
        {
            std::pair<int, int> a{p.var, p.point};
            std::pair<int, int> b{q.var, q.point};
            return p.var < q.var ? EdgeKey{a, b} : EdgeKey{b, a};
        }
    }

    Pattern::Pattern(std::vector<std::vector<std::string>> points)
        : points_(std::move(points))
    {
    }

    int Pattern::num_points(int x) const
    {
        if (x < 0 || x >= num_vars())
            throw ModelError("pattern variable index out of range");
        return static_cast<int>(points_[x].size());
    }

    int Pattern::total_points() const
    {
        int total = 0;
        for (const auto& ps : points_)
            total += static_cast<int>(ps.size());
        return total;
    }

    const std::string& Pattern::point_name(int x, int p) const
    {
        if (x < 0 || x >= num_vars() || p < 0 || p >= num_points(x))
            throw ModelError("pattern point out of range");
        return points_[x][p];
    }

    std::optional<PointRef> Pattern::find_point(const std::string& name) const
    {
        for (int x = 0; x < num_vars(); ++x)
            for (int p = 0; p < num_points(x); ++p)
                if (points_[x][p] == name)
                    return PointRef{x, p};
        return std::nullopt;
    }

    std::optional<Sign> Pattern::sign(PointRef p, PointRef q) const
    {
        auto it = edges_.find(make_key(p, q));
        if (it == edges_.end())
            return std::nullopt;
        return it->second;
    }

    void Pattern::set_edge(PointRef p, PointRef q, Sign s)
    {
        if (p.var < 0 || p.var >= num_vars() || p.point < 0 || p.point >= num_points(p.var) ||
            q.var < 0 || q.var >= num_vars() || q.point < 0 || q.point >= num_points(q.var))
            throw ModelError("pattern edge endpoint out of range");
        if (p.var == q.var)
            throw ModelError("pattern edge within a single variable");
        auto key = make_key(p, q);
        auto it = edges_.find(key);
        if (it != edges_.end() && it->second != s)
            throw ModelError("conflicting labels on one pattern edge");
        edges_[key] = s;
    }

    std::vector<Pattern::Edge> Pattern::edges() const
    {
        std::vector<Edge> result;
        result.reserve(edges_.size());
        for (const auto& [key, s] : edges_)
            result.push_back(Edge{PointRef{key.first.first, key.first.second},
                                  PointRef{key.second.first, key.second.second}, s});
        return result;
    }

    int Pattern::positive_edge_count() const
    {
        return static_cast<int>(std::count_if(edges_.begin(), edges_.end(),
                                              [](const auto& e)
                                              { return e.second == Sign::positive; }));
    }

    int Pattern::negative_edge_count() const
    {
        return static_cast<int>(edges_.size()) - positive_edge_count();
    }

    bool Pattern::operator==(const Pattern& other) const
    {
        return points_ == other.points_ && edges_ == other.edges_;
    }

    namespace
    {
        // Parses "x.name" into a pattern point.
        PointRef parse_point_token(const Pattern& P, const std::string& token, int line)
        {
            auto dot = token.find('.');
            if (dot == std::string::npos)
                throw ParseError(line, "expected point '<var>.<name>', got '" + token + "'");
            int var = 0;
            try
            {
                size_t pos = 0;
                var = std::stoi(token.substr(0, dot), &pos);
                if (pos != dot)
                    throw std::invalid_argument("");
            }
            catch (const std::exception&)
            {
                throw ParseError(line, "expected point '<var>.<name>', got '" + token + "'");
            }
            if (var < 0 || var >= P.num_vars())
                throw ParseError(line, "point on undeclared variable in '" + token + "'");
            std::string name = token.substr(dot + 1);
            for (int p = 0; p < P.num_points(var); ++p)
                if (P.point_name(var, p) == name)
                    return PointRef{var, p};
            throw ParseError(line, "unknown point '" + token + "'");
        }
    }

    Pattern parse_pattern(const std::string& text)
    {
        std::istringstream in(text);
        std::string line;
        int number = 0;
        bool header_seen = false;
        std::vector<std::vector<std::string>> points;
        std::vector<std::tuple<int, std::string, std::string, std::string>> edge_lines;
        while (std::getline(in, line))
        {
            ++number;
            auto hash = line.find('#');
            if (hash != std::string::npos)
                line.resize(hash);
            std::istringstream ls(line);
            std::vector<std::string> tok;
            std::string t;
            while (ls >> t)
                tok.push_back(t);
            if (tok.empty())
                continue;
            if (!header_seen)
            {
                if (tok.size() != 2 || tok[0] != "pat" || tok[1] != "1")
                    throw ParseError(number, "expected header 'pat 1'");
                header_seen = true;
                continue;
            }
            if (tok[0] == "var")
            {
                if (tok.size() < 2)
                    throw ParseError(number, "var line needs a variable id");
                int id = 0;
                try
                {
                    id = std::stoi(tok[1]);
                }
                catch (const std::exception&)
                {
                    throw ParseError(number, "expected variable id, got '" + tok[1] + "'");
                }
                if (id != static_cast<int>(points.size()))
                    throw ParseError(number, "variable ids must be 0..n-1 in order");
                points.emplace_back(tok.begin() + 2, tok.end());
            }
            else if (tok[0] == "pos" || tok[0] == "neg")
            {
                if (tok.size() != 3)
                    throw ParseError(number, "edge line needs exactly two points");
                edge_lines.emplace_back(number, tok[0], tok[1], tok[2]);
            }
            else
            {
                throw ParseError(number, "expected 'var', 'pos' or 'neg', got '" + tok[0] + "'");
            }
        }
        if (!header_seen)
            throw ParseError(1, "empty document");
        Pattern P(std::move(points));
        for (const auto& [ln, kind, pt, qt] : edge_lines)
        {
            PointRef p = parse_point_token(P, pt, ln);
            PointRef q = parse_point_token(P, qt, ln);
            try
            {
                P.set_edge(p, q, kind == "pos" ? Sign::positive : Sign::negative);
            }
            catch (const ModelError& e)
            {
                throw ParseError(ln, e.what());
            }
        }
        return P;
    }

    std::string serialize_pattern(const Pattern& P)
    {
        std::ostringstream out;
        out << "pat 1\n";
        for (int x = 0; x < P.num_vars(); ++x)
        {
            out << "var " << x;
            for (int p = 0; p < P.num_points(x); ++p)
                out << ' ' << P.point_name(x, p);
            out << '\n';
        }
        for (const auto& e : P.edges())
        {
            out << (e.sign == Sign::positive ? "pos " : "neg ")
                << e.p.var << '.' << P.point_name(e.p.var, e.p.point) << ' '
                << e.q.var << '.' << P.point_name(e.q.var, e.q.point) << '\n';
        }
        return out.str();
    }
}
