#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sacpat/model.hpp"

namespace sacpat
{
    // The instance handed to a class solver contains its forbidden pattern.
    class PreconditionError : public ModelError
    {
    public:
        using ModelError::ModelError;
    };

    // A structural guarantee of a solver's class did not hold at runtime.
    class StructureError : public ModelError
    {
    public:
        using ModelError::ModelError;
    };

    struct SolveStats
    {
        long long nodes = 0;   // backtracking nodes (oracle)
        // Variable sets retired per extraction round, in original indices.
        std::vector<std::vector<int>> rounds;
    };

    struct SolveReport
    {
        bool sat = false;
        std::optional<Assignment> certificate;
        std::string method;
        SolveStats stats;
    };

    // Complete backtracking search maintaining arc consistency, smallest
    // domain first (ties by index), values ascending.
    SolveReport oracle_solve(const Instance& I);

    // Assigns, variable by variable in index order, the first value whose
    // singleton instance is still singleton arc consistent after closure.
    // The input must be singleton arc consistent.
    SolveReport sac_construct(const Instance& I);

    // Solution of an arc-consistent instance whose constraint graph is a
    // forest; throws PreconditionError otherwise.
    SolveReport solve_acyclic(const Instance& I);

    // Class solvers: decide by the singleton-arc-consistency closure and
    // build certificates by the structure of the avoided pattern. Each
    // throws PreconditionError when its pattern occurs in the input.
    SolveReport solve_q1(const Instance& I);
    SolveReport solve_q2(const Instance& I);
    SolveReport solve_r5(const Instance& I, bool repair = false);
    SolveReport solve_r8(const Instance& I);
    SolveReport solve_r7m(const Instance& I);
    SolveReport solve_t3(const Instance& I);

    // For T2-, T4- and T5-free instances the closure decides and direct
    // singleton construction yields a certificate.
    SolveReport solve_by_sac(const Instance& I, const std::string& pattern_name);

    // Certificate route for instances whose closure kept a pattern of two
    // incompatible values only at variables of degree at most two.
    SolveReport vminus_construct(const Instance& I);

    // Dispatches to the first applicable class solver (pattern absence
    // checked in a fixed order), falling back to the oracle.
    SolveReport auto_solve(const Instance& I);

    struct ClassifyReport
    {
        // Pattern name -> present in the instance.
        std::vector<std::pair<std::string, bool>> occurrence;
        // Solver names whose forbidden pattern is absent.
        std::vector<std::string> applicable;
    };

    ClassifyReport classify(const Instance& I);
}
