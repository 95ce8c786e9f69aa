#pragma once

// Named verification grids behind the CLI `suite` subcommand and the
// acceptance runner.  Each returns one pass/fail line per claim.

#include "superstructure/verify.hpp"

namespace superstructure::suites {

verify::Report prop1();       // ms0 maximality grid
verify::Report prop2();       // msc grid, the dimension identities, ~svect generation
verify::Report prop3();       // msV grids for the vect-type series
verify::Report prop4();       // msV grids for the h series at n = 5, 6
verify::Report prop5();       // the small-case tables, containments, fingerprints
verify::Report properties();  // bracket axioms, morphism, Lemma-1, modular agreement
verify::Report negative_controls();  // known non-maximal inputs must be caught

verify::Report run(const std::string& name);
std::vector<std::string> names();

}  // namespace superstructure::suites
