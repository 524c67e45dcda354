#include "sacpat/transform.hpp"

#include <algorithm>

namespace sacpat
{
    bool is_ns(const Instance& I, int x, Value a, Value b)
    {
        if (!I.in_domain(x, a) || !I.in_domain(x, b))
            throw ModelError("substitutability query outside the domain");
        if (a == b)
            throw ModelError("substitutability query needs two distinct values");
        for (int y = 0; y < I.num_vars(); ++y)
        {
            if (y == x)
                continue;
            for (Value c : I.domain(y))
                if (I.allowed(x, a, y, c) && !I.allowed(x, b, y, c))
                    return false;
        }
        return true;
    }

    bool btp_mergeable(const Instance& I, int x, Value a, Value b)
    {
        if (!I.in_domain(x, a) || !I.in_domain(x, b))
            throw ModelError("merge query outside the domain");
        if (a == b)
            throw ModelError("merge query needs two distinct values");
        for (int y = 0; y < I.num_vars(); ++y)
        {
            if (y == x)
                continue;
            for (int z = y + 1; z < I.num_vars(); ++z)
            {
                if (z == x)
                    continue;
                for (Value c : I.domain(y))
                {
                    for (Value d : I.domain(z))
                    {
                        if (!I.allowed(y, c, z, d))
                            continue;
                        bool ac = I.allowed(x, a, y, c);
                        bool ad = I.allowed(x, a, z, d);
                        bool bc = I.allowed(x, b, y, c);
                        bool bd = I.allowed(x, b, z, d);
                        if ((ac && bd && !ad && !bc) || (bc && ad && !bd && !ac))
                            return false;
                    }
                }
            }
        }
        return true;
    }

    std::pair<Instance, TransformLog> ns_eliminate(const Instance& I)
    {
        Instance J = I;
        TransformLog log;
        bool changed = true;
        while (changed)
        {
            changed = false;
            for (int x = 0; x < J.num_vars() && !changed; ++x)
            {
                const auto dom = J.domain(x);
                for (size_t i = 0; i < dom.size() && !changed; ++i)
                {
                    for (size_t j = 0; j < dom.size(); ++j)
                    {
                        if (i == j)
                            continue;
                        Value a = dom[i];
                        Value b = dom[j];
                        if (!is_ns(J, x, a, b))
                            continue;
                        // For a mutually substitutable pair the smaller
                        // value survives.
                        if (a < b && is_ns(J, x, b, a))
                            continue;
                        J.remove_value(x, a);
                        TransformRecord rec;
                        rec.kind = TransformRecord::Kind::ns_removed;
                        rec.var = x;
                        rec.a = a;
                        rec.b = b;
                        log.records.push_back(rec);
                        changed = true;
                        break;
                    }
                }
            }
        }
        return {std::move(J), std::move(log)};
    }

    std::pair<Instance, TransformRecord> btp_merge(const Instance& I, int x, Value a, Value b)
    {
        if (!I.in_domain(x, a) || !I.in_domain(x, b) || a == b)
            throw ModelError("merge needs two distinct domain values");
        Value c = I.domain(x).back() + 1;
        std::vector<std::vector<Value>> domains;
        for (int y = 0; y < I.num_vars(); ++y)
            domains.push_back(I.domain(y));
        auto& dx = domains[x];
        dx.erase(std::remove_if(dx.begin(), dx.end(),
                                [&](Value v) { return v == a || v == b; }),
                 dx.end());
        dx.push_back(c);
        Instance J(std::move(domains));
        for (const auto& [key, rel] : I.relation_entries())
        {
            auto [p, q] = key;
            std::vector<std::pair<Value, Value>> pairs;
            if (p != x && q != x)
            {
                pairs.assign(rel.begin(), rel.end());
            }
            else
            {
                bool first = p == x;
                for (auto [u, v] : rel)
                {
                    Value mine = first ? u : v;
                    if (mine == a || mine == b)
                        continue;
                    pairs.emplace_back(u, v);
                }
                for (Value other : I.domain(first ? q : p))
                {
                    if (I.allowed(x, a, first ? q : p, other) ||
                        I.allowed(x, b, first ? q : p, other))
                        pairs.push_back(first ? std::make_pair(c, other)
                                              : std::make_pair(other, c));
                }
            }
            J.set_allowed(p, q, pairs);
        }
        TransformRecord rec;
        rec.kind = TransformRecord::Kind::merged;
        rec.var = x;
        rec.a = a;
        rec.b = b;
        rec.c = c;
        return {std::move(J), rec};
    }

    std::pair<Instance, TransformLog> btp_merge_fixpoint(const Instance& I)
    {
        Instance J = I;
        TransformLog log;
        bool changed = true;
        while (changed)
        {
            changed = false;
            for (int x = 0; x < J.num_vars() && !changed; ++x)
            {
                const auto dom = J.domain(x);
                for (size_t i = 0; i < dom.size() && !changed; ++i)
                {
                    for (size_t j = i + 1; j < dom.size(); ++j)
                    {
                        if (!btp_mergeable(J, x, dom[i], dom[j]))
                            continue;
                        auto [K, rec] = btp_merge(J, x, dom[i], dom[j]);
                        J = std::move(K);
                        log.records.push_back(rec);
                        changed = true;
                        break;
                    }
                }
            }
        }
        return {std::move(J), std::move(log)};
    }

    std::pair<Instance, TransformRecord> delete_constraint(const Instance& I, int x, int y)
    {
        Instance J = I;
        J.delete_relation(x, y);
        TransformRecord rec;
        rec.kind = TransformRecord::Kind::constraint_deleted;
        rec.var = std::min(x, y);
        rec.var2 = std::max(x, y);
        return {std::move(J), rec};
    }

    namespace
    {
        Instance apply_record(const Instance& I, const TransformRecord& rec)
        {
            switch (rec.kind)
            {
            case TransformRecord::Kind::ns_removed:
            {
                Instance J = I;
                J.remove_value(rec.var, rec.a);
                return J;
            }
            case TransformRecord::Kind::merged:
            {
                auto [J, r] = btp_merge(I, rec.var, rec.a, rec.b);
                if (r.c != rec.c)
                    throw ModelError("merge replay produced a different fresh value");
                return J;
            }
            case TransformRecord::Kind::constraint_deleted:
            {
                Instance J = I;
                J.delete_relation(rec.var, rec.var2);
                return J;
            }
            }
            throw ModelError("unknown transform record");
        }
    }

    Instance replay(const Instance& start, const TransformLog& log)
    {
        Instance J = start;
        for (const auto& rec : log.records)
            J = apply_record(J, rec);
        return J;
    }

    Assignment expand_merges(const Instance& start, const TransformLog& log, Assignment s)
    {
        std::vector<Instance> stages;
        stages.push_back(start);
        for (const auto& rec : log.records)
            stages.push_back(apply_record(stages.back(), rec));
        for (size_t i = log.records.size(); i-- > 0;)
        {
            const auto& rec = log.records[i];
            if (rec.kind != TransformRecord::Kind::merged)
                continue;
            auto it = s.find(rec.var);
            if (it == s.end() || it->second != rec.c)
                continue;
            const Instance& stage = stages[i];
            auto fits = [&](Value candidate)
            {
                if (!stage.in_domain(rec.var, candidate))
                    return false;
                for (const auto& [w, value] : s)
                    if (w != rec.var && !stage.allowed(rec.var, candidate, w, value))
                        return false;
                return true;
            };
            if (fits(rec.a))
                it->second = rec.a;
            else if (fits(rec.b))
                it->second = rec.b;
            else
                throw ModelError("merge expansion found no consistent original value");
        }
        return s;
    }
}
