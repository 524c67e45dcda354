#pragma once

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sacpat
{
    using Value = int;

    // A (partial) assignment of values to variable indices.
    using Assignment = std::map<int, Value>;

    class ParseError : public std::runtime_error
    {
    public:
        ParseError(int line, const std::string& what)
            : std::runtime_error("line " + std::to_string(line) + ": " + what),
              line_(line)
        {
        }

        int line() const { return line_; }

    private:
        int line_;
    };

    class ModelError : public std::runtime_error
    {
    public:
        using std::runtime_error::runtime_error;
    };

    // A binary CSP instance: variables 0..n-1 with finite integer domains
    // and symmetric binary relations given as sets of allowed value pairs.
    // A variable pair without a stored relation entry is unconstrained
    // (trivial relation, the full product of the current domains).
    class Instance
    {
    public:
        Instance() = default;
        explicit Instance(std::vector<std::vector<Value>> domains);

        int num_vars() const { return static_cast<int>(domains_.size()); }
        const std::vector<Value>& domain(int x) const;
        bool in_domain(int x, Value v) const;
        bool has_empty_domain() const;
        int total_domain_size() const;

        // True iff values a at x and b at y are jointly allowed. Absent
        // relation entries allow everything.
        bool allowed(int x, Value a, int y, Value b) const;
        bool has_relation_entry(int x, int y) const;

        // True iff R(x,y) contains the full product of the current domains
        // (in particular when no entry is stored).
        bool is_trivial(int x, int y) const;

        // Replaces R(x,y) with the given allowed pairs (oriented x -> y).
        // Pairs outside the current domain product are an error.
        void set_allowed(int x, int y, const std::vector<std::pair<Value, Value>>& pairs);

        // Replaces R(x,y) with the domain product minus the given pairs.
        void set_forbidden(int x, int y, const std::vector<std::pair<Value, Value>>& pairs);

        // Removes one pair from R(x,y), materializing the entry if absent.
        void forbid_pair(int x, int y, Value a, Value b);

        // Drops the relation entry for (x,y), making the pair unconstrained.
        void delete_relation(int x, int y);

        // Removes v from D(x) and from every stored relation touching x.
        // Throws ModelError if v is not in D(x).
        void remove_value(int x, Value v);

        // Shrinks D(x) to the single value v (which must be present).
        void assign(int x, Value v);

        // Sub-instance induced by the given variables (sorted, distinct);
        // variables are re-indexed by position in `keep`.
        Instance project(const std::vector<int>& keep) const;

        // Adjacency sets of the constraint graph: an edge joins x and y iff
        // R(x,y) is non-trivial.
        std::vector<std::set<int>> constraint_graph() const;
        int degree(int x) const;

        // Materialized allowed / forbidden pair sets over the current
        // domains (oriented x -> y).
        std::set<std::pair<Value, Value>> allowed_pairs(int x, int y) const;
        std::set<std::pair<Value, Value>> forbidden_pairs(int x, int y) const;

        // Semantic equality: same variables, same domains, and the same
        // constraints modulo trivial entries.
        bool operator==(const Instance& other) const;

        const std::map<std::pair<int, int>, std::set<std::pair<Value, Value>>>&
        relation_entries() const
        {
            return rels_;
        }

    private:
        void check_var(int x) const;
        void check_pair_vars(int x, int y) const;

        std::vector<std::vector<Value>> domains_;
        // Keys are (x,y) with x < y; values are allowed pairs (a,b) with
        // a in D(x) and b in D(y).
        std::map<std::pair<int, int>, std::set<std::pair<Value, Value>>> rels_;
    };

    // True iff s assigns every variable a value in its domain and all
    // constraints are satisfied.
    bool verify_solution(const Instance& I, const Assignment& s);

    Instance parse_instance(const std::string& text);

    // Canonical text form: header, one `var` line per variable, then one
    // `con ... forbid ...` line (sorted pairs) per non-trivial constraint in
    // lexicographic variable-pair order. parse . serialize is the identity
    // on canonical documents; serialize . parse canonicalizes.
    std::string serialize_instance(const Instance& I);
}
