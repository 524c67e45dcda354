#include "sacpat/verify.hpp"

#include <string>
#include <vector>

#include "sacpat/catalog.hpp"
#include "sacpat/instances.hpp"
#include "sacpat/match.hpp"
#include "sacpat/propagate.hpp"
#include "sacpat/solve.hpp"

namespace sacpat
{
    bool verify_reference_facts(std::ostream& out)
    {
        bool all_ok = true;
        auto row = [&](bool ok, const std::string& what)
        {
            all_ok = all_ok && ok;
            out << (ok ? "[ok]   " : "[FAIL] ") << what << "\n";
        };

        const std::vector<std::pair<std::string, Instance>> hard{
            {"kcol(4,3)", gen_kcoloring(4, 3)},
            {"i34", gen_i34()},
            {"i5", gen_i5()},
        };
        for (const auto& [name, I] : hard)
        {
            row(is_sac(I), name + ": closure removes nothing");
            row(!oracle_solve(I).sat, name + ": search finds no solution");
        }

        row(!occurs(get_pattern("T1").pattern, gen_i34()), "T1 absent from i34");
        row(!occurs(get_pattern("M3").pattern, gen_i34()), "M3 absent from i34");
        row(!occurs(get_pattern("Trestle").pattern, gen_i5()), "Trestle absent from i5");

        for (const char* name : {"Q1", "Q2", "R5", "R8", "R7-"})
            for (const auto& [inst_name, I] : hard)
                row(occurs(get_pattern(name).pattern, I).has_value(),
                    std::string(name) + " present in " + inst_name);

        for (const char* name :
             {"Q1", "Q2", "R1", "R2", "R3", "R4", "R5", "R6", "R7", "R8", "R9", "R10"})
        {
            const auto& entry = get_pattern(name);
            row(is_monotone(entry.pattern) && is_irreducible(entry.pattern),
                std::string(name) + " is monotone and irreducible");
        }

        const std::vector<std::pair<std::string, std::string>> containments{
            {"T4", "R8"}, {"T5", "R8"}, {"V2", "T4"}, {"R7-", "R7"}};
        for (const auto& [inner, outer] : containments)
            row(occurs_in_pattern(get_pattern(inner).pattern, get_pattern(outer).pattern)
                    .has_value(),
                inner + " occurs in " + outer);

        out << (all_ok ? "all facts verified\n" : "FACT CHECK FAILED\n");
        return all_ok;
    }
}
