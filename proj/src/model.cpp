#include "sacpat/model.hpp"

#include <algorithm>
#include <sstream>

namespace sacpat
{
    namespace
    {
        std::pair<int, int> ordered(int x, int y)
        {
            return x < y ? std::make_pair(x, y) : std::make_pair(y, x);
        }

        std::pair<Value, Value> orient(int x, int y, Value a, Value b)
        {
            return x < y ? std::make_pair(a, b) : std::make_pair(b, a);
        }
    }

    Instance::Instance(std::vector<std::vector<Value>> domains)
        : domains_(std::move(domains))
    {
        for (auto& d : domains_)
        {
            std::sort(d.begin(), d.end());
            d.erase(std::unique(d.begin(), d.end()), d.end());
        }
    }

    void Instance::check_var(int x) const
    {
        if (x < 0 || x >= num_vars())
            throw ModelError("variable index " + std::to_string(x) + " out of range");
    }

    void Instance::check_pair_vars(int x, int y) const
    {
        check_var(x);
        check_var(y);
        if (x == y)
            throw ModelError("constraint on a single variable " + std::to_string(x));
    }

    const std::vector<Value>& Instance::domain(int x) const
    {
        check_var(x);
        return domains_[x];
    }

    bool Instance::in_domain(int x, Value v) const
    {
        check_var(x);
        return std::binary_search(domains_[x].begin(), domains_[x].end(), v);
    }

    bool Instance::has_empty_domain() const
    {
        return std::any_of(domains_.begin(), domains_.end(),
                           [](const auto& d) { return d.empty(); });
    }

    int Instance::total_domain_size() const
    {
        int total = 0;
        for (const auto& d : domains_)
            total += static_cast<int>(d.size());
        return total;
    }

    bool Instance::allowed(int x, Value a, int y, Value b) const
    {
        check_pair_vars(x, y);
        auto it = rels_.find(ordered(x, y));
        if (it == rels_.end())
            return true;
        return it->second.count(orient(x, y, a, b)) != 0;
    }

    bool Instance::has_relation_entry(int x, int y) const
    {
        check_pair_vars(x, y);
        return rels_.count(ordered(x, y)) != 0;
    }

    bool Instance::is_trivial(int x, int y) const
    {
        check_pair_vars(x, y);
        auto it = rels_.find(ordered(x, y));
        if (it == rels_.end())
            return true;
        auto [lo, hi] = ordered(x, y);
        return it->second.size() >=
               domains_[lo].size() * domains_[hi].size();
    }

    void Instance::set_allowed(int x, int y,
                               const std::vector<std::pair<Value, Value>>& pairs)
    {
        check_pair_vars(x, y);
        std::set<std::pair<Value, Value>> rel;
        for (auto [a, b] : pairs)
        {
            if (!in_domain(x, a) || !in_domain(y, b))
                throw ModelError("relation pair outside the domain product");
            rel.insert(orient(x, y, a, b));
        }
        rels_[ordered(x, y)] = std::move(rel);
    }

    void Instance::set_forbidden(int x, int y,
                                 const std::vector<std::pair<Value, Value>>& pairs)
    {
        check_pair_vars(x, y);
        std::set<std::pair<Value, Value>> rel;
        auto [lo, hi] = ordered(x, y);
        for (Value a : domains_[lo])
            for (Value b : domains_[hi])
                rel.emplace(a, b);
        for (auto [a, b] : pairs)
        {
            if (!in_domain(x, a) || !in_domain(y, b))
                throw ModelError("relation pair outside the domain product");
            rel.erase(orient(x, y, a, b));
        }
        rels_[ordered(x, y)] = std::move(rel);
    }

    void Instance::forbid_pair(int x, int y, Value a, Value b)
    {
        check_pair_vars(x, y);
        if (!in_domain(x, a) || !in_domain(y, b))
            throw ModelError("relation pair outside the domain product");
        auto key = ordered(x, y);
        if (!rels_.count(key))
        {
            auto [lo, hi] = key;
            std::set<std::pair<Value, Value>> rel;
            for (Value u : domains_[lo])
                for (Value v : domains_[hi])
                    rel.emplace(u, v);
            rels_[key] = std::move(rel);
        }
        rels_[key].erase(orient(x, y, a, b));
    }

    void Instance::delete_relation(int x, int y)
    {
        check_pair_vars(x, y);
        rels_.erase(ordered(x, y));
    }

    void Instance::remove_value(int x, Value v)
    {
        check_var(x);
        auto& d = domains_[x];
        auto it = std::lower_bound(d.begin(), d.end(), v);
        if (it == d.end() || *it != v)
            throw ModelError("value " + std::to_string(v) + " not in domain of variable " +
                             std::to_string(x));
        d.erase(it);
        for (auto& [key, rel] : rels_)
        {
            if (key.first != x && key.second != x)
                continue;
            bool first = key.first == x;
            for (auto pit = rel.begin(); pit != rel.end();)
            {
                if ((first ? pit->first : pit->second) == v)
                    pit = rel.erase(pit);
                else
                    ++pit;
            }
        }
    }

    void Instance::assign(int x, Value v)
    {
        check_var(x);
        if (!in_domain(x, v))
            throw ModelError("cannot assign value outside the domain");
        for (Value u : std::vector<Value>(domains_[x]))
            if (u != v)
                remove_value(x, u);
    }

    Instance Instance::project(const std::vector<int>& keep) const
    {
        std::vector<int> index_of(num_vars(), -1);
        std::vector<std::vector<Value>> doms;
        doms.reserve(keep.size());
        int prev = -1;
        for (int x : keep)
        {
            check_var(x);
            if (x <= prev)
                throw ModelError("projection variable list must be sorted and distinct");
            prev = x;
            index_of[x] = static_cast<int>(doms.size());
            doms.push_back(domains_[x]);
        }
        Instance result(std::move(doms));
        for (const auto& [key, rel] : rels_)
        {
            int nx = index_of[key.first];
            int ny = index_of[key.second];
            if (nx < 0 || ny < 0)
                continue;
            result.rels_[{nx, ny}] = rel;
        }
        return result;
    }

    std::vector<std::set<int>> Instance::constraint_graph() const
    {
        std::vector<std::set<int>> adj(num_vars());
        for (const auto& [key, rel] : rels_)
        {
            if (is_trivial(key.first, key.second))
                continue;
            adj[key.first].insert(key.second);
            adj[key.second].insert(key.first);
        }
        return adj;
    }

    int Instance::degree(int x) const
    {
        check_var(x);
        int deg = 0;
        for (int y = 0; y < num_vars(); ++y)
            if (y != x && !is_trivial(x, y))
                ++deg;
        return deg;
    }

    std::set<std::pair<Value, Value>> Instance::allowed_pairs(int x, int y) const
    {
        check_pair_vars(x, y);
        std::set<std::pair<Value, Value>> result;
        for (Value a : domains_[x])
            for (Value b : domains_[y])
                if (allowed(x, a, y, b))
                    result.emplace(a, b);
        return result;
    }

    std::set<std::pair<Value, Value>> Instance::forbidden_pairs(int x, int y) const
    {
        check_pair_vars(x, y);
        std::set<std::pair<Value, Value>> result;
        for (Value a : domains_[x])
            for (Value b : domains_[y])
                if (!allowed(x, a, y, b))
                    result.emplace(a, b);
        return result;
    }

    bool Instance::operator==(const Instance& other) const
    {
        if (domains_ != other.domains_)
            return false;
        for (int x = 0; x < num_vars(); ++x)
            for (int y = x + 1; y < num_vars(); ++y)
                if (allowed_pairs(x, y) != other.allowed_pairs(x, y))
                    return false;
        return true;
    }

    bool verify_solution(const Instance& I, const Assignment& s)
    {
        for (int x = 0; x < I.num_vars(); ++x)
        {
            auto it = s.find(x);
            if (it == s.end() || !I.in_domain(x, it->second))
                return false;
        }
        for (int x = 0; x < I.num_vars(); ++x)
            for (int y = x + 1; y < I.num_vars(); ++y)
                if (!I.allowed(x, s.at(x), y, s.at(y)))
                    return false;
        return true;
    }

    namespace
    {
        // Strips comments and splits a document into (line number, tokens).
        std::vector<std::pair<int, std::vector<std::string>>> tokenize(const std::string& text)
        {
            std::vector<std::pair<int, std::vector<std::string>>> lines;
            std::istringstream in(text);
            std::string line;
            int number = 0;
            while (std::getline(in, line))
            {
                ++number;
                auto hash = line.find('#');
                if (hash != std::string::npos)
                    line.resize(hash);
                std::istringstream ls(line);
                std::vector<std::string> tokens;
                std::string token;
                while (ls >> token)
                    tokens.push_back(token);
                if (!tokens.empty())
                    lines.emplace_back(number, std::move(tokens));
            }
            return lines;
        }

        int parse_int(const std::string& token, int line, const std::string& what)
        {
            size_t pos = 0;
            int value = 0;
            try
            {
                value = std::stoi(token, &pos);
            }
            catch (const std::exception&)
            {
                throw ParseError(line, "expected " + what + ", got '" + token + "'");
            }
            if (pos != token.size())
                throw ParseError(line, "expected " + what + ", got '" + token + "'");
            return value;
        }

        std::pair<Value, Value> parse_value_pair(const std::string& token, int line)
        {
            if (token.size() < 5 || token.front() != '(' || token.back() != ')')
                throw ParseError(line, "expected value pair '(a,b)', got '" + token + "'");
            auto comma = token.find(',');
            if (comma == std::string::npos)
                throw ParseError(line, "expected value pair '(a,b)', got '" + token + "'");
            Value a = parse_int(token.substr(1, comma - 1), line, "value");
            Value b = parse_int(token.substr(comma + 1, token.size() - comma - 2), line, "value");
            return {a, b};
        }
    }

    Instance parse_instance(const std::string& text)
    {
        auto lines = tokenize(text);
        if (lines.empty())
            throw ParseError(1, "empty document");
        size_t i = 0;
        {
            auto& [ln, tok] = lines[i];
            if (tok.size() != 2 || tok[0] != "bcsp" || tok[1] != "1")
                throw ParseError(ln, "expected header 'bcsp 1'");
            ++i;
        }
        std::vector<std::vector<Value>> domains;
        while (i < lines.size() && lines[i].second[0] == "var")
        {
            auto& [ln, tok] = lines[i];
            if (tok.size() < 2)
                throw ParseError(ln, "var line needs a variable id");
            int id = parse_int(tok[1], ln, "variable id");
            if (id != static_cast<int>(domains.size()))
                throw ParseError(ln, "variable ids must be 0..n-1 in order; got " +
                                         std::to_string(id));
            std::vector<Value> dom;
            for (size_t t = 2; t < tok.size(); ++t)
                dom.push_back(parse_int(tok[t], ln, "domain value"));
            std::sort(dom.begin(), dom.end());
            if (std::adjacent_find(dom.begin(), dom.end()) != dom.end())
                throw ParseError(ln, "duplicate domain value");
            domains.push_back(std::move(dom));
            ++i;
        }
        Instance I(std::move(domains));
        std::set<std::pair<int, int>> seen;
        for (; i < lines.size(); ++i)
        {
            auto& [ln, tok] = lines[i];
            if (tok[0] == "var")
                throw ParseError(ln, "var lines must precede con lines");
            if (tok[0] != "con")
                throw ParseError(ln, "expected 'con', got '" + tok[0] + "'");
            if (tok.size() < 4)
                throw ParseError(ln, "con line needs two variables and a mode");
            int x = parse_int(tok[1], ln, "variable id");
            int y = parse_int(tok[2], ln, "variable id");
            if (x < 0 || x >= I.num_vars() || y < 0 || y >= I.num_vars())
                throw ParseError(ln, "constraint on undeclared variable");
            if (x == y)
                throw ParseError(ln, "constraint on a single variable");
            auto key = x < y ? std::make_pair(x, y) : std::make_pair(y, x);
            if (!seen.insert(key).second)
                throw ParseError(ln, "duplicate constraint on variables " +
                                         std::to_string(key.first) + "," +
                                         std::to_string(key.second));
            const std::string& mode = tok[3];
            if (mode != "forbid" && mode != "allow")
                throw ParseError(ln, "expected 'forbid' or 'allow', got '" + mode + "'");
            std::vector<std::pair<Value, Value>> pairs;
            for (size_t t = 4; t < tok.size(); ++t)
            {
                auto [a, b] = parse_value_pair(tok[t], ln);
                if (!I.in_domain(x, a) || !I.in_domain(y, b))
                    throw ParseError(ln, "relation pair outside the domain product");
                pairs.emplace_back(a, b);
            }
            try
            {
                if (mode == "forbid")
                    I.set_forbidden(x, y, pairs);
                else
                    I.set_allowed(x, y, pairs);
            }
            catch (const ModelError& e)
            {
                throw ParseError(ln, e.what());
            }
        }
        return I;
    }

    std::string serialize_instance(const Instance& I)
    {
        std::ostringstream out;
        out << "bcsp 1\n";
        for (int x = 0; x < I.num_vars(); ++x)
        {
            out << "var " << x;
            for (Value v : I.domain(x))
                out << ' ' << v;
            out << '\n';
        }
        for (int x = 0; x < I.num_vars(); ++x)
        {
            for (int y = x + 1; y < I.num_vars(); ++y)
            {
                auto forbidden = I.forbidden_pairs(x, y);
                if (forbidden.empty())
                    continue;
                out << "con " << x << ' ' << y << " forbid";
                for (auto [a, b] : forbidden)
                    out << " (" << a << ',' << b << ')';
                out << '\n';
            }
        }
        return out.str();
    }
}
