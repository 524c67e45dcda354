#include "sacpat/catalog.hpp"

namespace sacpat
{
    namespace
    {
        Pattern build(std::vector<std::vector<std::string>> points,
                      const std::vector<std::pair<std::string, std::string>>& positives,
                      const std::vector<std::pair<std::string, std::string>>& negatives)
        {
            Pattern P(std::move(points));
            auto add = [&](const std::pair<std::string, std::string>& e, Sign s)
            {
                auto p = P.find_point(e.first);
                auto q = P.find_point(e.second);
                if (!p || !q)
                    throw ModelError("unknown point name in catalog edge");
                P.set_edge(*p, *q, s);
            };
            for (const auto& e : positives)
                add(e, Sign::positive);
            for (const auto& e : negatives)
                add(e, Sign::negative);
            return P;
        }

        std::vector<CatalogEntry> build_catalog()
        {
            std::vector<CatalogEntry> entries;
            auto add = [&](std::string name, Pattern P, bool monotone, SacStatus status)
            { entries.push_back({std::move(name), std::move(P), monotone, status}); };

            add("Q1",
                build({{"w1"}, {"m1", "m2", "m3"}, {"z1"}, {"u1"}},
                      {{"w1", "m3"}, {"m1", "z1"}, {"m2", "u1"}},
                      {{"w1", "m2"}, {"m3", "z1"}, {"m1", "u1"}}),
                true, SacStatus::yes);
            add("Q2",
                build({{"w1"}, {"m1", "m2"}, {"z1"}, {"u1"}},
                      {{"w1", "m1"}, {"m2", "u1"}},
                      {{"w1", "m2"}, {"m2", "z1"}, {"m1", "u1"}}),
                true, SacStatus::yes);
            add("R1",
                build({{"a1"}, {"b1", "b2"}, {"c1", "c2"}, {"d1"}},
                      {{"a1", "b1"}, {"b2", "c1"}, {"c2", "d1"}, {"b1", "c1"}},
                      {{"a1", "b2"}, {"b2", "c2"}, {"c1", "d1"}}),
                true, SacStatus::open);
            add("R2",
                build({{"a1", "a2"}, {"b1", "b2"}, {"c1", "c2"}, {"d1"}},
                      {{"a1", "b2"}, {"b2", "c1"}, {"c2", "d1"}, {"b1", "c2"}, {"a1", "b1"}},
                      {{"a2", "b2"}, {"b2", "c2"}, {"c1", "d1"}}),
                true, SacStatus::open);
            add("R3",
                build({{"a1"}, {"b1"}, {"c1", "c2"}, {"d1", "d2"}},
                      {{"b1", "c1"}, {"c1", "d2"}, {"c2", "d2"}},
                      {{"a1", "b1"}, {"b1", "c2"}, {"c1", "d1"}}),
                true, SacStatus::open);
            add("R4",
                build({{"a1"}, {"b1", "b2"}, {"c1", "c2"}, {"d1"}},
                      {{"b1", "c1"}, {"c2", "d1"}, {"b1", "c2"}},
                      {{"a1", "b2"}, {"b2", "c2"}, {"c1", "d1"}}),
                true, SacStatus::open);
            add("R5",
                build({{"a1"}, {"b1", "b2"}, {"c1", "c2"}, {"d1"}},
                      {{"a1", "b1"}, {"b2", "c1"}, {"b1", "c2"}, {"c1", "d1"}},
                      {{"a1", "b2"}, {"b1", "c1"}, {"c2", "d1"}}),
                true, SacStatus::yes);
            add("R6",
                build({{"a1", "a2"}, {"b1", "b2"}, {"c1", "c2"}, {"d1"}},
                      {{"a1", "b2"}, {"b2", "c1"}, {"c1", "d1"}, {"b1", "c2"}, {"a1", "b1"}},
                      {{"a2", "b2"}, {"b1", "c1"}, {"c2", "d1"}}),
                true, SacStatus::open);
            add("R7",
                build({{"a1"}, {"b1", "b2", "b3"}, {"c1", "c2"}, {"d1"}},
                      {{"a1", "b3"}, {"b3", "c1"}, {"b2", "c1"}, {"b1", "c2"}, {"c1", "d1"}},
                      {{"a1", "b2"}, {"b1", "c1"}, {"c2", "d1"}}),
                true, SacStatus::open);
            add("R8",
                build({{"a1"}, {"b1", "b2", "b3"}, {"c1", "c2"}, {"d1"}},
                      {{"a1", "b1"}, {"a1", "b3"}, {"b3", "c1"}, {"b1", "c2"}, {"c1", "d1"}},
                      {{"a1", "b2"}, {"b1", "c1"}, {"c2", "d1"}}),
                true, SacStatus::yes);
            add("R9",
                build({{"a1"}, {"b1", "b2", "b3"}, {"c1", "c2"}, {"d1"}},
                      {{"a1", "b3"}, {"a1", "b1"}, {"b3", "c1"}, {"b2", "c2"}, {"c1", "d1"}},
                      {{"a1", "b2"}, {"b1", "c1"}, {"c2", "d1"}}),
                true, SacStatus::open);
            add("R10",
                build({{"a1"}, {"b1", "b2"}, {"c1", "c2"}, {"d1"}},
                      {{"a1", "b1"}, {"b2", "c2"}, {"c1", "d1"}, {"b1", "c2"}},
                      {{"a1", "b2"}, {"b1", "c1"}, {"c2", "d1"}}),
                true, SacStatus::open);
            add("R7-",
                build({{"a1"}, {"b1", "b2"}, {"c1", "c2", "c3"}, {"d1"}},
                      {{"a1", "b2"}, {"b2", "c2"}, {"b2", "c3"}, {"c3", "d1"}},
                      {{"a1", "b1"}, {"b2", "c1"}, {"c2", "d1"}}),
                true, SacStatus::yes);
            add("T1",
                build({{"x1"}, {"y1"}, {"z1", "z2"}},
                      {{"x1", "z1"}, {"y1", "z1"}},
                      {{"x1", "z2"}, {"y1", "z2"}}),
                true, SacStatus::no);
            add("T2",
                build({{"x1"}, {"y1", "y2"}, {"z1", "z2"}},
                      {{"x1", "z1"}, {"y1", "z1"}, {"y1", "z2"}},
                      {{"y2", "z2"}, {"x1", "z2"}}),
                true, SacStatus::yes);
            add("T3",
                build({{"x1"}, {"y1", "y2"}, {"z1", "z2"}},
                      {{"x1", "z2"}, {"y1", "z1"}, {"y1", "z2"}},
                      {{"y2", "z2"}, {"x1", "z1"}}),
                true, SacStatus::yes);
            add("T4",
                build({{"x1"}, {"y1"}, {"z1", "z2", "z3"}},
                      {{"x1", "z2"}, {"y1", "z2"}, {"x1", "z3"}},
                      {{"y1", "z3"}, {"x1", "z1"}}),
                true, SacStatus::yes);
            add("T5",
                build({{"x1"}, {"y1"}, {"z1", "z2"}},
                      {{"x1", "z2"}, {"y1", "z1"}},
                      {{"y1", "z2"}, {"x1", "z1"}}),
                true, SacStatus::yes);
            add("V",
                build({{"c"}, {"b", "a"}},
                      {{"c", "a"}, {"c", "b"}},
                      {}),
                false, SacStatus::open);
            add("V-",
                build({{"v1"}, {"a1"}, {"b1"}},
                      {},
                      {{"v1", "a1"}, {"v1", "b1"}}),
                true, SacStatus::yes);
            add("V2",
                build({{"x1"}, {"m1", "m2", "m3"}, {"y1"}},
                      {{"x1", "m3"}, {"m3", "y1"}},
                      {{"x1", "m2"}, {"y1", "m1"}}),
                true, SacStatus::yes);
            add("Mhat",
                build({{"x1", "x2"}, {"m1", "m2", "m3"}, {"y1", "y2"}},
                      {{"x1", "m3"}, {"m3", "y1"}},
                      {{"x2", "m3"}, {"y2", "m3"}, {"x1", "m2"}, {"y1", "m1"}}),
                true, SacStatus::no);
            add("M3",
                build({{"w1"}, {"m1", "m2", "m3"}, {"u1"}, {"z1"}},
                      {{"w1", "m2"}, {"m1", "z1"}, {"m2", "u1"}},
                      {{"w1", "m3"}, {"m3", "z1"}, {"m1", "u1"}}),
                true, SacStatus::no);
            add("Trestle",
                build({{"x1", "x2"}, {"y1", "y2"}},
                      {{"x1", "y1"}, {"x1", "y2"}, {"x2", "y1"}},
                      {{"x2", "y2"}}),
                true, SacStatus::no);
            add("BTP",
                build({{"c"}, {"b", "a"}, {"d"}},
                      {{"c", "b"}, {"a", "d"}, {"c", "d"}},
                      {{"c", "a"}, {"b", "d"}}),
                false, SacStatus::open);
            return entries;
        }
    }

    const std::vector<CatalogEntry>& catalog()
    {
        static const std::vector<CatalogEntry> entries = build_catalog();
        return entries;
    }

    const CatalogEntry& get_pattern(const std::string& name)
    {
        for (const auto& entry : catalog())
            if (entry.name == name)
                return entry;
        throw ModelError("unknown pattern name '" + name + "'");
    }

    std::vector<std::string> pattern_names()
    {
        std::vector<std::string> names;
        for (const auto& entry : catalog())
            names.push_back(entry.name);
        return names;
    }
}
