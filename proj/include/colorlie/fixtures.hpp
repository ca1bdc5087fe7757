#pragma once

#include "colorlie/algfile.hpp"

namespace colorlie {

/// Named, self-validating example files for the CLI and the test suites.
std::vector<std::string> fixture_names();
Json fixture_file(const std::string& name); // UnknownFixture

// Typed builders shared by fixtures, tests, and the acceptance suite.
SpacePtr fixture_super_dim2();
ColorAlgebra fixture_gl11();
ColorAlgebra fixture_gl11_broken();
ColorAlgebra fixture_sl2();
QuadraticForm fixture_sl2_killing();
QuadraticForm fixture_gl11_supertrace();
ColorAlgebra fixture_color_so3();
BracketTable fixture_heisenberg_super();
BracketTable fixture_broken_super();
/// The gl(1|1)-string two-term data with a skew non-cocycle added to l3:
/// passes (a)-(h), fails the coherence law.
TwoTermAlgebra fixture_broken_l3();

} // namespace colorlie
