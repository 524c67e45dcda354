#pragma once

#include <ostream>

namespace sacpat
{
    // Checks the reference facts behind the toolkit: the three hard
    // counterexample instances are closed under singleton arc consistency
    // yet unsatisfiable, the expected patterns are present or absent in
    // them, the catalog transcriptions are monotone and irreducible, and
    // the pattern containments hold. Prints one row per fact; returns true
    // iff every row passes.
    bool verify_reference_facts(std::ostream& out);
}
